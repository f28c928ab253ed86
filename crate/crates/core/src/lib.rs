//! Exact computation with translation-invariant symmetric polynomials.
//!
//! The space `R_n^d` of symmetric polynomials in `n` variables, homogeneous of
//! degree `d` and invariant under `z_i -> z_i + c`, has a basis of products
//! of centered power sums ([`basis`]). Each symmetric polynomial has a support
//! poset under the squeezing order ([`squeeze`]); a polynomial is *Haldane*
//! when that poset has a maximum. The crate computes the lex-leading
//! monomials `L_n^d` of every `R_n^d`, decides when they force the Haldane
//! property, and constructs non-Haldane elements when they do not.
//!
//! All arithmetic is over exact rationals.

pub mod antisym;
pub mod basis;
pub mod cli;
pub mod error;
pub mod fixture;
pub mod invariance;
pub mod io;
pub mod linalg;
pub mod multiset;
pub mod poly;
pub mod report;
pub mod squeeze;

pub use error::{Error, Result};
pub use multiset::ExponentMultiset;
pub use poly::{Rational, RawPolynomial, SymmetricPolynomial};
