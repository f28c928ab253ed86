//! Symmetric polynomials in the symmetrized-monomial basis, and raw sparse
//! polynomials over exponent vectors.
//!
//! A [`SymmetricPolynomial`] stores coefficients against full symmetrizations
//! `[l_1, ..., l_n] = sum over S_n of z_{s(1)}^{l_1} ... z_{s(n)}^{l_n}`, so
//! `[5,0,0]` is the polynomial `2z_1^5 + 2z_2^5 + 2z_3^5`. Each distinct
//! rearrangement of `m` carries raw coefficient `m.stabilizer_order()`.

use std::collections::{BTreeMap, BTreeSet, HashMap};
use std::fmt;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};

use crate::error::{Error, Result};
use crate::multiset::{factorial, ExponentMultiset};

/// Exact rational coefficient; always in lowest terms with positive denominator.
pub type Rational = BigRational;

pub fn rational(numer: i64, denom: i64) -> Rational {
    Rational::new(BigInt::from(numer), BigInt::from(denom))
}

pub fn integer(value: i64) -> Rational {
    Rational::from_integer(BigInt::from(value))
}

fn check_arity(left: usize, right: usize) -> Result<()> {
    if left == right {
        Ok(())
    } else {
        Err(Error::ArityMismatch { left, right })
    }
}

fn accumulate<K: Ord>(map: &mut BTreeMap<K, Rational>, key: K, value: Rational) {
    if value.is_zero() {
        return;
    }
    use std::collections::btree_map::Entry;
    match map.entry(key) {
        Entry::Vacant(slot) => {
            slot.insert(value);
        }
        Entry::Occupied(mut slot) => {
            *slot.get_mut() += value;
            if slot.get().is_zero() {
                slot.remove();
            }
        }
    }
}

/// Sparse polynomial over ordered exponent vectors of fixed length.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RawPolynomial {
    arity: usize,
    terms: BTreeMap<Vec<u32>, Rational>,
}

impl RawPolynomial {
    pub fn zero(arity: usize) -> Self {
        RawPolynomial {
            arity,
            terms: BTreeMap::new(),
        }
    }

    pub fn constant(arity: usize, c: Rational) -> Self {
        let mut p = Self::zero(arity);
        accumulate(&mut p.terms, vec![0; arity], c);
        p
    }

    /// The single variable `z_{index}` (0-based).
    pub fn variable(arity: usize, index: usize) -> Self {
        let mut e = vec![0; arity];
        e[index] = 1;
        Self::monomial(arity, e, Rational::one()).expect("length matches")
    }

    pub fn monomial(arity: usize, exponents: Vec<u32>, c: Rational) -> Result<Self> {
        let mut p = Self::zero(arity);
        p.add_term(exponents, c)?;
        Ok(p)
    }

    pub fn from_terms<I>(arity: usize, terms: I) -> Result<Self>
    where
        I: IntoIterator<Item = (Vec<u32>, Rational)>,
    {
        let mut p = Self::zero(arity);
        for (e, c) in terms {
            p.add_term(e, c)?;
        }
        Ok(p)
    }

    pub fn add_term(&mut self, exponents: Vec<u32>, c: Rational) -> Result<()> {
        if exponents.len() != self.arity {
            return Err(Error::WrongLength {
                found: exponents.len(),
                expected: self.arity,
                exponents,
            });
        }
        accumulate(&mut self.terms, exponents, c);
        Ok(())
    }

    pub fn arity(&self) -> usize {
        self.arity
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn coefficient(&self, exponents: &[u32]) -> Rational {
        self.terms.get(exponents).cloned().unwrap_or_else(Rational::zero)
    }

    /// Terms in ascending lex order of exponent vectors.
    pub fn terms(&self) -> impl DoubleEndedIterator<Item = (&Vec<u32>, &Rational)> {
        self.terms.iter()
    }

    /// `Some(d)` when every term has total degree `d`.
    pub fn homogeneous_degree(&self) -> Option<u32> {
        let mut degrees = self.terms.keys().map(|e| e.iter().sum::<u32>());
        let first = degrees.next()?;
        degrees.all(|d| d == first).then_some(first)
    }

    pub fn add(&self, other: &Self) -> Result<Self> {
        check_arity(self.arity, other.arity)?;
        let mut out = self.clone();
        for (e, c) in &other.terms {
            accumulate(&mut out.terms, e.clone(), c.clone());
        }
        Ok(out)
    }

    pub fn scale(&self, c: &Rational) -> Self {
        if c.is_zero() {
            return Self::zero(self.arity);
        }
        RawPolynomial {
            arity: self.arity,
            terms: self
                .terms
                .iter()
                .map(|(e, v)| (e.clone(), v * c))
                .collect(),
        }
    }

    pub fn multiply(&self, other: &Self) -> Result<Self> {
        check_arity(self.arity, other.arity)?;
        let mut out = BTreeMap::new();
        for (a, ca) in &self.terms {
            for (b, cb) in &other.terms {
                let e = a.iter().zip(b).map(|(x, y)| x + y).collect();
                accumulate(&mut out, e, ca * cb);
            }
        }
        Ok(RawPolynomial {
            arity: self.arity,
            terms: out,
        })
    }

    pub fn pow(&self, k: u32) -> Self {
        let mut acc = Self::constant(self.arity, Rational::one());
        for _ in 0..k {
            acc = acc.multiply(self).expect("same arity");
        }
        acc
    }

    /// Exchanges variables `i` and `j`.
    pub fn swap_variables(&self, i: usize, j: usize) -> Self {
        RawPolynomial {
            arity: self.arity,
            terms: self
                .terms
                .iter()
                .map(|(e, c)| {
                    let mut e = e.clone();
                    e.swap(i, j);
                    (e, c.clone())
                })
                .collect(),
        }
    }

    /// `p(z_1 + t, ..., z_n + t)` with `t` adjoined as the last variable, by
    /// the binomial theorem applied to every factor.
    pub fn translate(&self) -> Self {
        let mut out = BTreeMap::new();
        for (alpha, c) in &self.terms {
            let total: u32 = alpha.iter().sum();
            let mut beta = vec![0u32; alpha.len()];
            loop {
                let mut weight = c.clone();
                for (a, b) in alpha.iter().zip(&beta) {
                    weight *= Rational::from_integer(binomial(*a, *b));
                }
                let mut e = beta.clone();
                e.push(total - beta.iter().sum::<u32>());
                accumulate(&mut out, e, weight);
                if !odometer_step(&mut beta, alpha) {
                    break;
                }
            }
        }
        RawPolynomial {
            arity: self.arity + 1,
            terms: out,
        }
    }

    /// Splits by the exponent of the last variable: entry `i` is the
    /// coefficient of `t^i`, a polynomial in the remaining variables.
    pub fn split_last_variable(&self) -> Vec<RawPolynomial> {
        assert!(self.arity > 0, "no variable to split off");
        let inner = self.arity - 1;
        let mut pieces: Vec<RawPolynomial> = Vec::new();
        for (e, c) in &self.terms {
            let power = e[inner] as usize;
            while pieces.len() <= power {
                pieces.push(RawPolynomial::zero(inner));
            }
            accumulate(&mut pieces[power].terms, e[..inner].to_vec(), c.clone());
        }
        if pieces.is_empty() {
            pieces.push(RawPolynomial::zero(inner));
        }
        pieces
    }

    /// True iff every `t^i` piece of [`RawPolynomial::translate`] vanishes for `i > 0`.
    pub fn is_translation_invariant(&self) -> bool {
        self.translate()
            .split_last_variable()
            .iter()
            .skip(1)
            .all(RawPolynomial::is_zero)
    }

    /// Regroups a symmetric raw polynomial into symmetrized monomials.
    pub fn collect(&self) -> Result<SymmetricPolynomial> {
        let mut out = SymmetricPolynomial::zero(self.arity);
        let mut seen: BTreeSet<ExponentMultiset> = BTreeSet::new();
        for (e, c) in &self.terms {
            let m = ExponentMultiset::from_unsorted(e.clone());
            if !seen.insert(m.clone()) {
                continue;
            }
            for r in m.rearrangements() {
                if self.terms.get(&r) != Some(c) {
                    return Err(Error::NotSymmetric(r));
                }
            }
            let value = c / Rational::from_integer(m.stabilizer_order());
            accumulate(&mut out.terms, m, value);
        }
        Ok(out)
    }
}

/// Advances `v` through the box `0 <= v_i <= bound_i`; false after the last point.
fn odometer_step(v: &mut [u32], bound: &[u32]) -> bool {
    for i in (0..v.len()).rev() {
        if v[i] < bound[i] {
            v[i] += 1;
            return true;
        }
        v[i] = 0;
    }
    false
}

pub(crate) fn binomial(n: u32, k: u32) -> BigInt {
    if k > n {
        return BigInt::zero();
    }
    let k = k.min(n - k);
    let mut acc = BigInt::one();
    for i in 0..k {
        acc = acc * (n - i) / (i + 1);
    }
    acc
}

impl fmt::Display for RawPolynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        for (i, (e, c)) in self.terms.iter().rev().enumerate() {
            if i > 0 {
                write!(f, " + ")?;
            }
            write!(f, "({c})")?;
            for (v, k) in e.iter().enumerate() {
                match k {
                    0 => {}
                    1 => write!(f, "*z{}", v + 1)?,
                    _ => write!(f, "*z{}^{k}", v + 1)?,
                }
            }
        }
        Ok(())
    }
}

/// Degree data of a symmetric polynomial. The zero polynomial counts as
/// homogeneous with no degree.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct DegreeInfo {
    pub homogeneous: bool,
    pub degree: Option<u32>,
}

/// A symmetric polynomial as a combination of symmetrized monomials `[m]`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SymmetricPolynomial {
    arity: usize,
    terms: BTreeMap<ExponentMultiset, Rational>,
}

impl SymmetricPolynomial {
    pub fn zero(arity: usize) -> Self {
        SymmetricPolynomial {
            arity,
            terms: BTreeMap::new(),
        }
    }

    /// The constant 1, i.e. `(1/n!) [0,...,0]`.
    pub fn one(arity: usize) -> Self {
        let mut p = Self::zero(arity);
        let c = Rational::new(BigInt::one(), factorial(arity));
        accumulate(&mut p.terms, ExponentMultiset::zero(arity), c);
        p
    }

    /// `c * [m]`.
    pub fn monomial(m: ExponentMultiset, c: Rational) -> Self {
        let mut p = Self::zero(m.arity());
        accumulate(&mut p.terms, m, c);
        p
    }

    pub fn from_terms<I>(arity: usize, terms: I) -> Result<Self>
    where
        I: IntoIterator<Item = (ExponentMultiset, Rational)>,
    {
        let mut p = Self::zero(arity);
        for (m, c) in terms {
            p.add_term(m, c)?;
        }
        Ok(p)
    }

    pub fn add_term(&mut self, m: ExponentMultiset, c: Rational) -> Result<()> {
        check_arity(self.arity, m.arity())?;
        accumulate(&mut self.terms, m, c);
        Ok(())
    }

    pub fn arity(&self) -> usize {
        self.arity
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn coefficient(&self, m: &ExponentMultiset) -> Rational {
        self.terms.get(m).cloned().unwrap_or_else(Rational::zero)
    }

    /// Terms in descending lex order.
    pub fn terms(&self) -> impl Iterator<Item = (&ExponentMultiset, &Rational)> {
        self.terms.iter().rev()
    }

    /// The support `B(p)`, in descending lex order.
    pub fn support(&self) -> Vec<ExponentMultiset> {
        self.terms.keys().rev().cloned().collect()
    }

    pub fn leading(&self) -> Option<&ExponentMultiset> {
        self.terms.keys().next_back()
    }

    pub fn degree_info(&self) -> DegreeInfo {
        let mut degrees = self.terms.keys().map(ExponentMultiset::degree);
        match degrees.next() {
            None => DegreeInfo {
                homogeneous: true,
                degree: None,
            },
            Some(first) => {
                let homogeneous = degrees.all(|d| d == first);
                DegreeInfo {
                    homogeneous,
                    degree: homogeneous.then_some(first),
                }
            }
        }
    }

    pub fn max_degree(&self) -> Option<u32> {
        self.terms.keys().map(ExponentMultiset::degree).max()
    }

    pub fn add(&self, other: &Self) -> Result<Self> {
        check_arity(self.arity, other.arity)?;
        let mut out = self.clone();
        for (m, c) in &other.terms {
            accumulate(&mut out.terms, m.clone(), c.clone());
        }
        Ok(out)
    }

    pub fn sub(&self, other: &Self) -> Result<Self> {
        self.add(&other.scale(&-Rational::one()))
    }

    pub fn scale(&self, c: &Rational) -> Self {
        if c.is_zero() {
            return Self::zero(self.arity);
        }
        SymmetricPolynomial {
            arity: self.arity,
            terms: self
                .terms
                .iter()
                .map(|(m, v)| (m.clone(), v * c))
                .collect(),
        }
    }

    /// Expands into ordinary monomials; each distinct rearrangement of `m`
    /// gets `c * m.stabilizer_order()`.
    pub fn symmetrize(&self) -> RawPolynomial {
        let mut out = RawPolynomial::zero(self.arity);
        for (m, c) in &self.terms {
            let raw = c * Rational::from_integer(m.stabilizer_order());
            for r in m.rearrangements() {
                accumulate(&mut out.terms, r, raw.clone());
            }
        }
        out
    }

    /// Raw coefficients keyed by canonical exponent vectors.
    pub(crate) fn raw_lookup(&self) -> HashMap<Vec<u32>, Rational> {
        self.terms
            .iter()
            .map(|(m, c)| {
                (
                    m.exponents().to_vec(),
                    c * Rational::from_integer(m.stabilizer_order()),
                )
            })
            .collect()
    }

    /// Exact product. The raw product `symmetrize(p) * symmetrize(q)` is
    /// evaluated only at canonical exponent vectors, which determine the
    /// symmetric result.
    pub fn multiply(&self, other: &Self) -> Result<Self> {
        check_arity(self.arity, other.arity)?;
        if self.is_zero() || other.is_zero() {
            return Ok(Self::zero(self.arity));
        }
        let raw_count = |p: &Self| -> usize {
            p.terms.keys().map(|m| m.rearrangements().len()).sum()
        };
        let (big, small) = if raw_count(self) >= raw_count(other) {
            (self, other)
        } else {
            (other, self)
        };
        let small_raw: Vec<(Vec<u32>, Rational)> = small
            .symmetrize()
            .terms
            .into_iter()
            .collect();
        let big_raw = big.raw_lookup();

        let mut targets = BTreeSet::new();
        for m in big.terms.keys() {
            for (g, _) in &small_raw {
                let sum = m.exponents().iter().zip(g).map(|(a, b)| a + b).collect();
                targets.insert(ExponentMultiset::from_unsorted(sum));
            }
        }

        let mut out = Self::zero(self.arity);
        let mut scratch = vec![0u32; self.arity];
        for alpha in targets {
            let mut total = Rational::zero();
            for (g, cg) in &small_raw {
                if alpha.exponents().iter().zip(g).any(|(a, b)| a < b) {
                    continue;
                }
                for (s, (a, b)) in scratch.iter_mut().zip(alpha.exponents().iter().zip(g)) {
                    *s = a - b;
                }
                let mut key = scratch.clone();
                key.sort_unstable_by(|a, b| b.cmp(a));
                if let Some(cb) = big_raw.get(&key) {
                    total += cb * cg;
                }
            }
            let value = total / Rational::from_integer(alpha.stabilizer_order());
            accumulate(&mut out.terms, alpha, value);
        }
        Ok(out)
    }

    pub fn pow(&self, k: u32) -> Self {
        let mut acc = Self::one(self.arity);
        for _ in 0..k {
            acc = acc.multiply(self).expect("same arity");
        }
        acc
    }
}

impl fmt::Display for SymmetricPolynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        for (i, (m, c)) in self.terms().enumerate() {
            if i > 0 {
                write!(f, " + ")?;
            }
            write!(f, "({c}){m}")?;
        }
        Ok(())
    }
}
