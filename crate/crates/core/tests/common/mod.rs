#![allow(dead_code)]

use std::collections::{BTreeSet, VecDeque};

use haldane::multiset::multisets_of_degree;
use haldane::poly::integer;
use haldane::squeeze::one_step_squeezes;
use haldane::{ExponentMultiset, Rational, RawPolynomial, SymmetricPolynomial};

pub fn ms(v: &[u32]) -> ExponentMultiset {
    ExponentMultiset::from_canonical(v.to_vec()).unwrap()
}

pub fn sym(arity: usize, terms: &[(&[u32], i64)]) -> SymmetricPolynomial {
    SymmetricPolynomial::from_terms(arity, terms.iter().map(|(m, c)| (ms(m), integer(*c)))).unwrap()
}

/// Everything reachable from `s` by repeated squeezing, `s` included.
pub fn squeeze_closure(s: &ExponentMultiset) -> BTreeSet<ExponentMultiset> {
    let mut seen = BTreeSet::from([s.clone()]);
    let mut queue = VecDeque::from([s.clone()]);
    while let Some(cur) = queue.pop_front() {
        for next in one_step_squeezes(&cur) {
            if seen.insert(next.clone()) {
                queue.push_back(next);
            }
        }
    }
    seen
}

/// All permutations of `0..n` by Heap's algorithm.
pub fn all_permutations(n: usize) -> Vec<Vec<usize>> {
    fn heap(k: usize, a: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if k <= 1 {
            out.push(a.clone());
            return;
        }
        for i in 0..k {
            heap(k - 1, a, out);
            if k.is_multiple_of(2) {
                a.swap(i, k - 1);
            } else {
                a.swap(0, k - 1);
            }
        }
    }
    let mut a: Vec<usize> = (0..n).collect();
    let mut out = Vec::new();
    heap(n, &mut a, &mut out);
    out
}

/// `sum over S_n of z_{s(1)}^{l_1} ... z_{s(n)}^{l_n}` by brute force.
pub fn symmetrize_by_permutations(m: &ExponentMultiset) -> RawPolynomial {
    let n = m.arity();
    let mut out = RawPolynomial::zero(n);
    for sigma in all_permutations(n) {
        let mut e = vec![0u32; n];
        for (i, &target) in sigma.iter().enumerate() {
            e[target] = m.exponents()[i];
        }
        out.add_term(e, integer(1)).unwrap();
    }
    out
}

/// Raw `(sum_j d/dz_j) p`.
pub fn derivative_sum(r: &RawPolynomial) -> RawPolynomial {
    let mut out = RawPolynomial::zero(r.arity());
    for (e, c) in r.terms() {
        for j in 0..e.len() {
            if e[j] > 0 {
                let mut f = e.clone();
                f[j] -= 1;
                out.add_term(f, c * integer(i64::from(e[j]))).unwrap();
            }
        }
    }
    out
}

pub fn all_multisets_upto(n: usize, d_max: u32) -> Vec<ExponentMultiset> {
    (0..=d_max).flat_map(|d| multisets_of_degree(n, d)).collect()
}

/// Coefficient vector of `p` against `columns`.
pub fn coords(p: &SymmetricPolynomial, columns: &[ExponentMultiset]) -> Vec<Rational> {
    columns.iter().map(|m| p.coefficient(m)).collect()
}

/// Basis of the kernel of `p -> (tau_1(p), ..., tau_d(p))` on the full space of
/// symmetric degree-`d` polynomials, computed column by column from the
/// translation expansion of each `1*[m]`.
pub fn invariance_kernel(n: usize, d: u32) -> Vec<SymmetricPolynomial> {
    use haldane::invariance::translate_expand;
    use haldane::linalg::nullspace;

    let inputs = multisets_of_degree(n, d);
    let outputs: Vec<(usize, ExponentMultiset)> = (1..=d)
        .flat_map(|i| {
            multisets_of_degree(n, d - i)
                .into_iter()
                .map(move |m| (i as usize, m))
        })
        .collect();
    let columns: Vec<Vec<Rational>> = inputs
        .iter()
        .map(|m| {
            let ex = translate_expand(&SymmetricPolynomial::monomial(m.clone(), integer(1)));
            outputs.iter().map(|(i, t)| ex.piece(*i).coefficient(t)).collect()
        })
        .collect();
    let rows: Vec<Vec<Rational>> = (0..outputs.len())
        .map(|r| columns.iter().map(|c| c[r].clone()).collect())
        .collect();
    nullspace(&rows, inputs.len())
        .into_iter()
        .map(|v| {
            SymmetricPolynomial::from_terms(n, inputs.iter().cloned().zip(v)).unwrap()
        })
        .collect()
}
