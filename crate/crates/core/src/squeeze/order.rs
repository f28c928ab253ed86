use std::cmp::Ordering;
use std::collections::BTreeSet;

use crate::error::{Error, Result};
use crate::multiset::{multisets_of_degree, ExponentMultiset};

fn check_domain(s: &ExponentMultiset, t: &ExponentMultiset) -> Result<()> {
    if s.arity() != t.arity() || s.degree() != t.degree() {
        return Err(Error::IncomparableDomains(s.to_string(), t.to_string()));
    }
    Ok(())
}

/// Lex comparison of two multisets of the same arity and degree.
pub fn lex_compare(s: &ExponentMultiset, t: &ExponentMultiset) -> Result<Ordering> {
    check_domain(s, t)?;
    Ok(s.cmp(t))
}

/// Every distinct multiset reachable from `s` by one squeeze: lower some
/// `l_i` by one and raise `l_j` by one where `l_i > l_j + 1`.
pub fn one_step_squeezes(s: &ExponentMultiset) -> BTreeSet<ExponentMultiset> {
    let e = s.exponents();
    let mut out = BTreeSet::new();
    for i in 0..e.len() {
        for j in 0..e.len() {
            if e[i] > e[j] + 1 {
                let mut v = e.to_vec();
                v[i] -= 1;
                v[j] += 1;
                out.insert(ExponentMultiset::from_unsorted(v));
            }
        }
    }
    out
}

/// Prefix-sum dominance without domain checks.
pub(crate) fn dominates(s: &ExponentMultiset, t: &ExponentMultiset) -> bool {
    let mut acc_s = 0u64;
    let mut acc_t = 0u64;
    for (a, b) in s.exponents().iter().zip(t.exponents()) {
        acc_s += u64::from(*a);
        acc_t += u64::from(*b);
        if acc_s < acc_t {
            return false;
        }
    }
    true
}

/// `t <= s` in the squeezing order, i.e. `t` is obtained from `s` by zero or
/// more squeezes. Decided by the prefix-sum dominance test.
pub fn squeeze_leq(t: &ExponentMultiset, s: &ExponentMultiset) -> Result<bool> {
    check_domain(s, t)?;
    Ok(dominates(s, t))
}

/// True iff `s` and `t` are comparable in the squeezing order.
pub fn comparable(s: &ExponentMultiset, t: &ExponentMultiset) -> Result<bool> {
    check_domain(s, t)?;
    Ok(dominates(s, t) || dominates(t, s))
}

/// `s` is completely squeezable when every lex-smaller multiset of the same
/// arity and degree is also below it in the squeezing order.
pub fn is_completely_squeezable(s: &ExponentMultiset) -> bool {
    multisets_of_degree(s.arity(), s.degree())
        .iter()
        .filter(|t| *t < s)
        .all(|t| dominates(s, t))
}
