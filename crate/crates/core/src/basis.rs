//! The centered power-sum basis `w_lambda` of `R_n^d` and its echelon forms.
//!
//! `R_n^d` is the space of translation-invariant symmetric polynomials in `n`
//! variables, homogeneous of degree `d`. It has a basis indexed by partitions
//! of `d` into parts in `[2, n]`, where part `k` contributes a factor
//! `sum_i (z_i - z_avg)^k`.

use std::collections::HashMap;
use std::fmt;

use num_bigint::BigUint;
use num_traits::{One, Zero};

use crate::error::{Error, Result};
use crate::linalg;
use crate::multiset::{multisets_of_degree, ExponentMultiset};
use crate::poly::{Rational, RawPolynomial, SymmetricPolynomial};

/// Integer partition with parts stored weakly decreasing.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Partition {
    parts: Vec<u32>,
}

impl Partition {
    pub fn new(mut parts: Vec<u32>) -> Self {
        parts.sort_unstable_by(|a, b| b.cmp(a));
        Partition { parts }
    }

    pub fn empty() -> Self {
        Partition { parts: Vec::new() }
    }

    pub fn parts(&self) -> &[u32] {
        &self.parts
    }

    pub fn weight(&self) -> u32 {
        self.parts.iter().sum()
    }

    /// `lambda_k`, the number of parts equal to `k`.
    pub fn multiplicity(&self, k: u32) -> usize {
        self.parts.iter().filter(|&&p| p == k).count()
    }
}

impl fmt::Display for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "(")?;
        for (i, p) in self.parts.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{p}")?;
        }
        write!(f, ")")
    }
}

/// Partitions of `d` with every part in `[min_part, max_part]`, descending lex.
/// A `min_part` of 0 is treated as 1; an empty range yields only the empty
/// partition of 0.
pub fn partitions_in_range(d: u32, min_part: u32, max_part: u32) -> Vec<Partition> {
    fn go(remaining: u32, min: u32, max: u32, prefix: &mut Vec<u32>, out: &mut Vec<Partition>) {
        if remaining == 0 {
            out.push(Partition {
                parts: prefix.clone(),
            });
            return;
        }
        let top = remaining.min(max);
        for part in (min..=top).rev() {
            prefix.push(part);
            go(remaining - part, min, part, prefix, out);
            prefix.pop();
        }
    }
    let min = min_part.max(1);
    let mut out = Vec::new();
    if d > 0 && min > max_part {
        return out;
    }
    go(d, min, max_part, &mut Vec::new(), &mut out);
    out
}

/// Coefficient of `t^d` in `prod_{s=2}^{n} 1 / (1 - t^s)`.
pub fn generating_function_coefficient(n: u32, d: u32) -> BigUint {
    let d = d as usize;
    let mut coeffs = vec![BigUint::zero(); d + 1];
    coeffs[0] = BigUint::one();
    for s in 2..=n as usize {
        for i in s..=d {
            let prev = coeffs[i - s].clone();
            coeffs[i] += prev;
        }
    }
    coeffs.swap_remove(d)
}

/// `dim R_n^d`, counted by enumerating partitions of `d` into parts in `[2, n]`.
pub fn dimension(n: u32, d: u32) -> usize {
    if n < 2 {
        return usize::from(d == 0);
    }
    let count = partitions_in_range(d, 2, n).len();
    debug_assert_eq!(
        BigUint::from(count),
        generating_function_coefficient(n, d),
        "partition count disagrees with generating function"
    );
    count
}

/// `f(w_k) = sum_i (z_i - z_avg)^k`, computed by raw expansion and collected.
pub fn centered_power_sum(n: usize, k: u32) -> SymmetricPolynomial {
    if n == 0 {
        return SymmetricPolynomial::zero(0);
    }
    let avg = {
        let mut s = RawPolynomial::zero(n);
        for j in 0..n {
            s = s.add(&RawPolynomial::variable(n, j)).expect("same arity");
        }
        s.scale(&Rational::new(One::one(), (n as u64).into()))
    };
    let mut total = RawPolynomial::zero(n);
    for i in 0..n {
        let centered = RawPolynomial::variable(n, i)
            .add(&avg.scale(&-Rational::one()))
            .expect("same arity");
        total = total.add(&centered.pow(k)).expect("same arity");
    }
    total.collect().expect("sum of centered powers is symmetric")
}

fn check_parts(n: usize, lambda: &Partition) -> Result<()> {
    let max = n as u32;
    if lambda.parts.iter().any(|&p| p < 2 || p > max) {
        return Err(Error::InvalidPartition {
            parts: lambda.parts.clone(),
            min: 2,
            max,
        });
    }
    Ok(())
}

/// `w_lambda = prod_k f(w_k)^{lambda_k}`; the empty partition gives 1.
pub fn w_lambda(n: usize, lambda: &Partition) -> Result<SymmetricPolynomial> {
    check_parts(n, lambda)?;
    let mut acc = SymmetricPolynomial::one(n);
    let mut factors: HashMap<u32, SymmetricPolynomial> = HashMap::new();
    for &k in &lambda.parts {
        let f = factors.entry(k).or_insert_with(|| centered_power_sum(n, k));
        acc = acc.multiply(f)?;
    }
    Ok(acc)
}

/// Memoizes products over prefixes of partitions so a whole graded basis
/// costs about one multiplication per element.
#[derive(Debug, Default)]
pub struct BasisBuilder {
    n: usize,
    factors: HashMap<u32, SymmetricPolynomial>,
    products: HashMap<Vec<u32>, SymmetricPolynomial>,
}

impl BasisBuilder {
    pub fn new(n: usize) -> Self {
        BasisBuilder {
            n,
            factors: HashMap::new(),
            products: HashMap::new(),
        }
    }

    pub fn w_lambda(&mut self, lambda: &Partition) -> Result<SymmetricPolynomial> {
        check_parts(self.n, lambda)?;
        Ok(self.product(lambda.parts()))
    }

    fn product(&mut self, parts: &[u32]) -> SymmetricPolynomial {
        if let Some(p) = self.products.get(parts) {
            return p.clone();
        }
        let value = match parts.split_last() {
            None => SymmetricPolynomial::one(self.n),
            Some((&last, rest)) => {
                let head = self.product(rest);
                let n = self.n;
                let f = self
                    .factors
                    .entry(last)
                    .or_insert_with(|| centered_power_sum(n, last));
                head.multiply(f).expect("same arity")
            }
        };
        self.products.insert(parts.to_vec(), value.clone());
        value
    }

    pub fn graded_basis(&mut self, d: u32) -> GradedBasis {
        let labels = partitions_in_range(d, 2, self.n as u32);
        let elements = labels
            .iter()
            .map(|l| self.w_lambda(l).expect("parts in range"))
            .collect();
        GradedBasis {
            n: self.n,
            d,
            labels,
            elements,
        }
    }
}

/// The basis `{w_lambda}` of `R_n^d` with its partition labels.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GradedBasis {
    pub n: usize,
    pub d: u32,
    pub labels: Vec<Partition>,
    pub elements: Vec<SymmetricPolynomial>,
}

impl GradedBasis {
    pub fn len(&self) -> usize {
        self.elements.len()
    }

    pub fn is_empty(&self) -> bool {
        self.elements.is_empty()
    }

    /// Coefficient rows against `columns`.
    pub fn coefficient_rows(&self, columns: &[ExponentMultiset]) -> Vec<Vec<Rational>> {
        self.elements
            .iter()
            .map(|p| columns.iter().map(|m| p.coefficient(m)).collect())
            .collect()
    }
}

pub fn graded_basis(n: usize, d: u32) -> GradedBasis {
    BasisBuilder::new(n).graded_basis(d)
}

/// Reduced row echelon form of a graded basis, with columns in descending
/// lex order so each pivot is the lex-leading monomial of its row.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Echelon {
    pub rows: Vec<SymmetricPolynomial>,
    pub leading: Vec<ExponentMultiset>,
}

pub fn echelonize(basis: &GradedBasis) -> Echelon {
    let columns = multisets_of_degree(basis.n, basis.d);
    let mut matrix = basis.coefficient_rows(&columns);
    let pivots = linalg::rref(&mut matrix);
    let rows = matrix
        .into_iter()
        .map(|row| {
            SymmetricPolynomial::from_terms(
                basis.n,
                columns.iter().cloned().zip(row).filter(|(_, c)| !c.is_zero()),
            )
            .expect("arity matches")
        })
        .collect();
    let leading = pivots.into_iter().map(|c| columns[c].clone()).collect();
    Echelon { rows, leading }
}

/// Fully reduced echelon rows of `R_n^d`: row `i` contains pivot `l_i` with
/// coefficient 1 and no other lex-leading monomial of the space.
pub fn special_basis(n: usize, d: u32) -> Vec<SymmetricPolynomial> {
    echelonize(&graded_basis(n, d)).rows
}
