//! Translation `p(z + t)` and its graded pieces `tau_i(p)`.

use std::collections::BTreeSet;

use num_traits::Zero;

use crate::error::{Error, Result};
use crate::multiset::{compositions, multisets_of_degree, ExponentMultiset};
use crate::poly::{binomial, integer, Rational, SymmetricPolynomial};

/// `p(z_1 + t, ..., z_n + t) = sum_i pieces[i] * t^i`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TranslationExpansion {
    arity: usize,
    pieces: Vec<SymmetricPolynomial>,
}

impl TranslationExpansion {
    pub fn arity(&self) -> usize {
        self.arity
    }

    pub fn pieces(&self) -> &[SymmetricPolynomial] {
        &self.pieces
    }

    /// `tau_i(p)`; zero beyond the top degree.
    pub fn piece(&self, i: usize) -> SymmetricPolynomial {
        self.pieces
            .get(i)
            .cloned()
            .unwrap_or_else(|| SymmetricPolynomial::zero(self.arity))
    }

    pub fn into_pieces(self) -> Vec<SymmetricPolynomial> {
        self.pieces
    }
}

/// Expands `p(z + t)` exactly and regroups each power of `t`.
///
/// The coefficient of `z^beta t^i` in the raw expansion is
/// `sum_delta p_raw(beta + delta) * prod_j C(beta_j + delta_j, delta_j)` over
/// compositions `delta` of `i`; only canonical `beta` are evaluated since each
/// piece is symmetric.
pub fn translate_expand(p: &SymmetricPolynomial) -> TranslationExpansion {
    let arity = p.arity();
    let Some(top) = p.max_degree() else {
        return TranslationExpansion {
            arity,
            pieces: vec![SymmetricPolynomial::zero(arity)],
        };
    };
    let degrees: BTreeSet<u32> = p.support().iter().map(ExponentMultiset::degree).collect();
    let lookup = p.raw_lookup();

    let mut pieces = vec![p.clone()];
    for i in 1..=top {
        let shifts = compositions(i, arity);
        let mut piece = SymmetricPolynomial::zero(arity);
        for &d in degrees.iter().filter(|&&d| d >= i) {
            for beta in multisets_of_degree(arity, d - i) {
                let mut total = Rational::zero();
                for delta in &shifts {
                    let alpha: Vec<u32> = beta
                        .exponents()
                        .iter()
                        .zip(delta)
                        .map(|(b, s)| b + s)
                        .collect();
                    let mut key = alpha.clone();
                    key.sort_unstable_by(|a, b| b.cmp(a));
                    let Some(c) = lookup.get(&key) else { continue };
                    let mut weight = c.clone();
                    for (a, s) in alpha.iter().zip(delta) {
                        weight *= Rational::from_integer(binomial(*a, *s));
                    }
                    total += weight;
                }
                if !total.is_zero() {
                    let value = total / Rational::from_integer(beta.stabilizer_order());
                    piece.add_term(beta, value).expect("arity matches");
                }
            }
        }
        pieces.push(piece);
    }
    TranslationExpansion { arity, pieces }
}

/// True iff `tau_i(p) = 0` for every `i >= 1`. Works for non-homogeneous input.
pub fn is_translation_invariant(p: &SymmetricPolynomial) -> bool {
    translate_expand(p).pieces.iter().skip(1).all(SymmetricPolynomial::is_zero)
}

/// The closed-form first piece for three variables with positive exponents:
/// `tau_1([a,b,c]) = a[a-1,b,c] + b[a,b-1,c] + c[a,b,c-1]`.
///
/// With the full-symmetrization coefficient convention the identity holds with
/// normalization 1: `tau_1(1*[m])` equals this combination exactly.
pub fn tau1_trivariate(m: &ExponentMultiset) -> Result<SymmetricPolynomial> {
    if m.arity() != 3 {
        return Err(Error::FormulaDomain(format!(
            "trivariate formula needs arity 3, got {}",
            m.arity()
        )));
    }
    if m.exponents().contains(&0) {
        return Err(Error::FormulaDomain(format!(
            "trivariate formula needs positive entries, got {m}"
        )));
    }
    let e = m.exponents();
    let mut out = SymmetricPolynomial::zero(3);
    for i in 0..3 {
        let mut lowered = e.to_vec();
        lowered[i] -= 1;
        out.add_term(
            ExponentMultiset::from_unsorted(lowered),
            integer(i64::from(e[i])),
        )?;
    }
    Ok(out)
}
