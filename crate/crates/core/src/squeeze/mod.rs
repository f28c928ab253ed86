//! The squeezing order on exponent multisets, support posets `B(p)`, and the
//! lex-maxima analysis of `R_n^d`.
//!
//! `s > t` when `t` comes from `s` by repeated squeezes. For canonical vectors
//! of one arity and degree this is the dominance order on prefix sums, which
//! is what [`squeeze_leq`] evaluates.

mod conjecture;
mod order;
mod poset;

pub use conjecture::{
    conjecture_status, construct_counterexample, lex_maxima_set, CellAnalysis,
    ConjectureStatus, LexMaximaSet, Verdict,
};
pub use order::{
    comparable, is_completely_squeezable, lex_compare, one_step_squeezes, squeeze_leq,
};
pub use poset::{hasse_dot, is_haldane, maximal_elements, support_poset, SqueezePoset};
