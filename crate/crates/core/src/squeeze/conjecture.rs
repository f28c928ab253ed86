use num_traits::{One, Zero};

use crate::basis::{echelonize, graded_basis, Echelon};
use crate::multiset::ExponentMultiset;
use crate::poly::{integer, Rational, SymmetricPolynomial};

use super::order::{dominates, is_completely_squeezable};

/// `L_n^d`: the lex-leading monomials attained by nonzero elements of `R_n^d`,
/// in descending lex order.
///
/// Degree 0 is reported as empty. Constants are excluded from the squeezing
/// data, matching the table of maxima this crate reproduces.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LexMaximaSet {
    pub n: usize,
    pub d: u32,
    pub maxima: Vec<ExponentMultiset>,
}

impl LexMaximaSet {
    pub fn len(&self) -> usize {
        self.maxima.len()
    }

    pub fn is_empty(&self) -> bool {
        self.maxima.is_empty()
    }

    /// The lex-first pair `(m1, m2)`, `m1 >_lex m2`, that is incomparable
    /// under squeezing.
    pub fn incomparable_pair(&self) -> Option<(ExponentMultiset, ExponentMultiset)> {
        for (i, a) in self.maxima.iter().enumerate() {
            for b in &self.maxima[i + 1..] {
                if !dominates(a, b) && !dominates(b, a) {
                    return Some((a.clone(), b.clone()));
                }
            }
        }
        None
    }
}

fn maxima_from_echelon(n: usize, d: u32, echelon: &Echelon) -> LexMaximaSet {
    LexMaximaSet {
        n,
        d,
        maxima: if d == 0 {
            Vec::new()
        } else {
            echelon.leading.clone()
        },
    }
}

pub fn lex_maxima_set(n: usize, d: u32) -> LexMaximaSet {
    let echelon = echelonize(&graded_basis(n, d));
    maxima_from_echelon(n, d, &echelon)
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Verdict {
    /// Every element of `L_n^d` is completely squeezable.
    Holds,
    /// `L_n^d` is not linearly ordered, so `R_n^d` has a non-Haldane element.
    Refuted,
    /// Neither condition applies.
    Undecided,
}

impl Verdict {
    pub fn as_str(self) -> &'static str {
        match self {
            Verdict::Holds => "holds",
            Verdict::Refuted => "refuted",
            Verdict::Undecided => "undecided",
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ConjectureStatus {
    pub n: usize,
    pub d: u32,
    pub holds_by_lemma: bool,
    pub incomparable_pair: Option<(ExponentMultiset, ExponentMultiset)>,
}

impl ConjectureStatus {
    pub fn verdict(&self) -> Verdict {
        if self.holds_by_lemma {
            Verdict::Holds
        } else if self.incomparable_pair.is_some() {
            Verdict::Refuted
        } else {
            Verdict::Undecided
        }
    }
}

fn status_from_maxima(maxima: &LexMaximaSet) -> ConjectureStatus {
    let holds_by_lemma = maxima.maxima.iter().all(is_completely_squeezable);
    let incomparable_pair = if holds_by_lemma {
        None
    } else {
        maxima.incomparable_pair()
    };
    ConjectureStatus {
        n: maxima.n,
        d: maxima.d,
        holds_by_lemma,
        incomparable_pair,
    }
}

/// Everything computed for one `(n, d)` cell.
#[derive(Debug, Clone)]
pub struct CellAnalysis {
    pub dimension: usize,
    pub echelon: Echelon,
    pub maxima: LexMaximaSet,
    pub status: ConjectureStatus,
}

impl CellAnalysis {
    pub fn compute(n: usize, d: u32) -> Self {
        let basis = graded_basis(n, d);
        let dimension = basis.len();
        let echelon = echelonize(&basis);
        let maxima = maxima_from_echelon(n, d, &echelon);
        let status = status_from_maxima(&maxima);
        CellAnalysis {
            dimension,
            echelon,
            maxima,
            status,
        }
    }

    /// `q = p1 + c p2` for the special-basis rows with pivots at the
    /// incomparable pair, `c = 1` unless that cancels `m2`, then `c = 2`.
    pub fn counterexample(&self) -> Option<SymmetricPolynomial> {
        let (m1, m2) = self.status.incomparable_pair.as_ref()?;
        let row = |m: &ExponentMultiset| {
            self.echelon
                .leading
                .iter()
                .position(|l| l == m)
                .map(|i| &self.echelon.rows[i])
        };
        let p1 = row(m1)?;
        let p2 = row(m2)?;
        let c1 = p1.coefficient(m2);
        let c2 = p2.coefficient(m2);
        let forbidden = -(c1 / c2);
        let c = if forbidden == Rational::one() {
            integer(2)
        } else {
            integer(1)
        };
        let q = p1.add(&p2.scale(&c)).expect("same arity");
        debug_assert!(!q.coefficient(m2).is_zero());
        Some(q)
    }
}

pub fn conjecture_status(n: usize, d: u32) -> ConjectureStatus {
    status_from_maxima(&lex_maxima_set(n, d))
}

/// A non-Haldane element of `R_n^d` built from an incomparable pair in
/// `L_n^d`, if one exists.
pub fn construct_counterexample(n: usize, d: u32) -> Option<SymmetricPolynomial> {
    CellAnalysis::compute(n, d).counterexample()
}
