//! Antisymmetric polynomials as symmetric ones times the Vandermonde product.

use num_traits::One;

use crate::poly::{Rational, RawPolynomial, SymmetricPolynomial};

/// A raw polynomial that changes sign under every transposition of variables.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct AntisymmetricPolynomial(RawPolynomial);

impl AntisymmetricPolynomial {
    /// Wraps `raw` if it is antisymmetric.
    pub fn new(raw: RawPolynomial) -> Option<Self> {
        is_antisymmetric(&raw).then_some(AntisymmetricPolynomial(raw))
    }

    pub fn arity(&self) -> usize {
        self.0.arity()
    }

    pub fn as_raw(&self) -> &RawPolynomial {
        &self.0
    }

    pub fn into_raw(self) -> RawPolynomial {
        self.0
    }
}

/// `prod_{i<j} (z_i - z_j)`.
pub fn vandermonde(n: usize) -> AntisymmetricPolynomial {
    let mut acc = RawPolynomial::constant(n, Rational::one());
    for i in 0..n {
        for j in i + 1..n {
            let factor = RawPolynomial::variable(n, i)
                .add(&RawPolynomial::variable(n, j).scale(&-Rational::one()))
                .expect("same arity");
            acc = acc.multiply(&factor).expect("same arity");
        }
    }
    AntisymmetricPolynomial(acc)
}

/// `p * Delta`.
pub fn to_antisymmetric(p: &SymmetricPolynomial) -> AntisymmetricPolynomial {
    let delta = vandermonde(p.arity());
    AntisymmetricPolynomial(
        p.symmetrize()
            .multiply(delta.as_raw())
            .expect("same arity"),
    )
}

/// True iff every adjacent transposition negates `r`.
pub fn is_antisymmetric(r: &RawPolynomial) -> bool {
    let negated = r.scale(&-Rational::one());
    (1..r.arity()).all(|i| r.swap_variables(i - 1, i) == negated)
}
