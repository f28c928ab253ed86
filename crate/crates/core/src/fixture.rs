//! The explicit degree-14, four-variable counterexample, transcribed verbatim.

use crate::multiset::ExponentMultiset;
use crate::poly::{integer, SymmetricPolynomial};

/// `(coefficient, multiset)` pairs in the order they are usually displayed.
pub const COUNTEREXAMPLE_R4_14: [(i64, [u32; 4]); 29] = [
    (3, [8, 4, 2, 0]),
    (-3, [8, 4, 1, 1]),
    (-3, [8, 3, 3, 0]),
    (6, [8, 3, 2, 1]),
    (-3, [8, 2, 2, 2]),
    (3, [7, 7, 0, 0]),
    (-42, [7, 6, 1, 0]),
    (46, [7, 5, 2, 0]),
    (80, [7, 5, 1, 1]),
    (-22, [7, 4, 3, 0]),
    (-188, [7, 4, 2, 1]),
    (112, [7, 3, 3, 1]),
    (8, [7, 3, 2, 2]),
    (77, [6, 6, 2, 0]),
    (70, [6, 6, 1, 1]),
    (-182, [6, 5, 3, 0]),
    (-700, [6, 5, 2, 1]),
    (112, [6, 4, 4, 0]),
    (168, [6, 4, 3, 1]),
    (1078, [6, 4, 2, 2]),
    (-728, [6, 3, 3, 2]),
    (5, [5, 5, 4, 0]),
    (1072, [5, 5, 3, 1]),
    (246, [5, 5, 2, 2]),
    (-722, [5, 4, 4, 1]),
    (-2976, [5, 4, 3, 2]),
    (1808, [5, 3, 3, 3]),
    (1805, [4, 4, 4, 2]),
    (-1130, [4, 4, 3, 3]),
];

pub fn counterexample_r4_14() -> SymmetricPolynomial {
    SymmetricPolynomial::from_terms(
        4,
        COUNTEREXAMPLE_R4_14.iter().map(|(c, m)| {
            (
                ExponentMultiset::from_canonical(m.to_vec()).expect("canonical"),
                integer(*c),
            )
        }),
    )
    .expect("arity 4")
}
