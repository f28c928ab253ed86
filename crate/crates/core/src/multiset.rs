//! Exponent multisets `[l_1, ..., l_n]`, stored weakly decreasing.

use std::fmt;

use num_bigint::BigInt;
use num_traits::One;

use crate::error::{Error, Result};

/// A canonical (weakly decreasing) exponent vector of fixed arity.
///
/// The derived `Ord` is plain lexicographic order on the vector, which for
/// canonical vectors of equal arity is the lex order on symmetrized monomials.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct ExponentMultiset(Vec<u32>);

impl ExponentMultiset {
    /// Sorts `exponents` into canonical form, rejecting negative entries.
    pub fn canonicalize(exponents: &[i64]) -> Result<Self> {
        let mut out = Vec::with_capacity(exponents.len());
        for &e in exponents {
            if e < 0 {
                return Err(Error::InvalidExponent(e));
            }
            out.push(u32::try_from(e).map_err(|_| Error::InvalidExponent(e))?);
        }
        Ok(Self::from_unsorted(out))
    }

    pub fn from_unsorted(mut exponents: Vec<u32>) -> Self {
        exponents.sort_unstable_by(|a, b| b.cmp(a));
        ExponentMultiset(exponents)
    }

    /// Wraps an already weakly decreasing vector; `None` if it is not canonical.
    pub fn from_canonical(exponents: Vec<u32>) -> Option<Self> {
        exponents
            .windows(2)
            .all(|w| w[0] >= w[1])
            .then_some(ExponentMultiset(exponents))
    }

    pub fn zero(arity: usize) -> Self {
        ExponentMultiset(vec![0; arity])
    }

    pub fn arity(&self) -> usize {
        self.0.len()
    }

    pub fn degree(&self) -> u32 {
        self.0.iter().sum()
    }

    pub fn exponents(&self) -> &[u32] {
        &self.0
    }

    pub fn into_inner(self) -> Vec<u32> {
        self.0
    }

    /// Multiplicity of each distinct exponent value, zeros included.
    pub fn multiplicities(&self) -> Vec<usize> {
        let mut out = Vec::new();
        let mut i = 0;
        while i < self.0.len() {
            let mut j = i;
            while j < self.0.len() && self.0[j] == self.0[i] {
                j += 1;
            }
            out.push(j - i);
            i = j;
        }
        out
    }

    /// `prod_e mult_e!`, the raw coefficient of each rearrangement in the
    /// full symmetrization `[m]`.
    pub fn stabilizer_order(&self) -> BigInt {
        self.multiplicities()
            .into_iter()
            .map(factorial)
            .fold(BigInt::one(), |acc, f| acc * f)
    }

    /// All distinct rearrangements of the exponent vector.
    pub fn rearrangements(&self) -> Vec<Vec<u32>> {
        let mut current: Vec<u32> = self.0.iter().rev().copied().collect();
        let mut out = vec![current.clone()];
        while next_permutation(&mut current) {
            out.push(current.clone());
        }
        out
    }
}

impl fmt::Display for ExponentMultiset {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[")?;
        for (i, e) in self.0.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{e}")?;
        }
        write!(f, "]")
    }
}

pub(crate) fn factorial(k: usize) -> BigInt {
    (1..=k).fold(BigInt::one(), |acc, i| acc * i)
}

/// Lexicographic successor in place; false once the last permutation is reached.
fn next_permutation(v: &mut [u32]) -> bool {
    if v.len() < 2 {
        return false;
    }
    let mut i = v.len() - 1;
    while i > 0 && v[i - 1] >= v[i] {
        i -= 1;
    }
    if i == 0 {
        return false;
    }
    let mut j = v.len() - 1;
    while v[j] <= v[i - 1] {
        j -= 1;
    }
    v.swap(i - 1, j);
    v[i..].reverse();
    true
}

/// All weakly decreasing length-`arity` vectors summing to `degree`, in
/// descending lex order.
pub fn multisets_of_degree(arity: usize, degree: u32) -> Vec<ExponentMultiset> {
    fn go(
        remaining: u32,
        max_part: u32,
        slots: usize,
        prefix: &mut Vec<u32>,
        out: &mut Vec<ExponentMultiset>,
    ) {
        if slots == 0 {
            if remaining == 0 {
                out.push(ExponentMultiset(prefix.clone()));
            }
            return;
        }
        let top = remaining.min(max_part);
        for part in (0..=top).rev() {
            // the remaining slots can absorb at most part * (slots - 1)
            if (part as u64) * (slots as u64) < remaining as u64 {
                break;
            }
            prefix.push(part);
            go(remaining - part, part, slots - 1, prefix, out);
            prefix.pop();
        }
    }
    let mut out = Vec::new();
    go(degree, degree, arity, &mut Vec::with_capacity(arity), &mut out);
    out
}

/// All length-`parts` vectors of naturals summing to `total`.
pub(crate) fn compositions(total: u32, parts: usize) -> Vec<Vec<u32>> {
    fn go(remaining: u32, slots: usize, prefix: &mut Vec<u32>, out: &mut Vec<Vec<u32>>) {
        if slots == 1 {
            prefix.push(remaining);
            out.push(prefix.clone());
            prefix.pop();
            return;
        }
        for part in 0..=remaining {
            prefix.push(part);
            go(remaining - part, slots - 1, prefix, out);
            prefix.pop();
        }
    }
    let mut out = Vec::new();
    if parts == 0 {
        if total == 0 {
            out.push(Vec::new());
        }
        return out;
    }
    go(total, parts, &mut Vec::with_capacity(parts), &mut out);
    out
}
