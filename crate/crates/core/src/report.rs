//! Verification reports and the `(n, d)` grid scan.

use std::fmt;

use rayon::prelude::*;
use serde::Serialize;

use crate::fixture::counterexample_r4_14;
use crate::invariance::is_translation_invariant;
use crate::multiset::ExponentMultiset;
use crate::poly::SymmetricPolynomial;
use crate::squeeze::{conjecture_status, support_poset, CellAnalysis};

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Check {
    pub name: String,
    pub passed: bool,
    pub detail: String,
}

#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct VerificationReport {
    pub checks: Vec<Check>,
}

impl VerificationReport {
    fn push(&mut self, name: &str, passed: bool, detail: impl Into<String>) {
        self.checks.push(Check {
            name: name.to_string(),
            passed,
            detail: detail.into(),
        });
    }

    pub fn passed(&self) -> bool {
        self.checks.iter().all(|c| c.passed)
    }

    pub fn check(&self, name: &str) -> Option<&Check> {
        self.checks.iter().find(|c| c.name == name)
    }
}

impl fmt::Display for VerificationReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for c in &self.checks {
            let tag = if c.passed { "PASS" } else { "FAIL" };
            writeln!(f, "{tag} {}: {}", c.name, c.detail)?;
        }
        Ok(())
    }
}

fn format_set(ms: &[ExponentMultiset]) -> String {
    let items: Vec<String> = ms.iter().map(ToString::to_string).collect();
    format!("{{{}}}", items.join(","))
}

/// Checks that `p` is a homogeneous, translation-invariant, non-Haldane
/// polynomial of degree `degree` whose maximal support elements are
/// exactly `expected_maxima`.
pub fn verify_counterexample(
    p: &SymmetricPolynomial,
    degree: u32,
    expected_maxima: &[ExponentMultiset],
) -> VerificationReport {
    let mut report = VerificationReport::default();

    let invariant = is_translation_invariant(p);
    report.push(
        "translation-invariant",
        invariant,
        if invariant { "all tau_i vanish for i >= 1" } else { "some tau_i is nonzero" },
    );

    let info = p.degree_info();
    let homogeneous = info.homogeneous && info.degree == Some(degree);
    report.push(
        "homogeneous",
        homogeneous,
        match info.degree {
            Some(d) => format!("degree {d}, expected {degree}"),
            None if p.is_zero() => "zero polynomial".to_string(),
            None => "mixed degrees".to_string(),
        },
    );

    match support_poset(p) {
        Ok(poset) => {
            let maxima = poset.maximal_elements();
            report.push(
                "not-haldane",
                maxima.len() > 1,
                format!("{} support elements, {} maximal", poset.len(), maxima.len()),
            );
            let mut want = expected_maxima.to_vec();
            want.sort_unstable_by(|a, b| b.cmp(a));
            report.push(
                "maximal-elements",
                maxima == want,
                format!("found {}, expected {}", format_set(&maxima), format_set(&want)),
            );
        }
        Err(e) => {
            report.push("not-haldane", false, e.to_string());
            report.push("maximal-elements", false, e.to_string());
        }
    }
    report
}

pub const TRIVARIATE_RANGE: u32 = 20;

/// Full check of the shipped degree-14 counterexample, including minimality
/// in arity and degree.
pub fn verify_paper() -> VerificationReport {
    let p = counterexample_r4_14();
    let expected = [
        ExponentMultiset::from_canonical(vec![8, 4, 2, 0]).expect("canonical"),
        ExponentMultiset::from_canonical(vec![7, 7, 0, 0]).expect("canonical"),
    ];
    let mut report = verify_counterexample(&p, 14, &expected);

    let failures: Vec<u32> = (0..14u32)
        .into_par_iter()
        .filter(|&d| !conjecture_status(4, d).holds_by_lemma)
        .collect();
    report.push(
        "minimal-degree",
        failures.is_empty(),
        if failures.is_empty() {
            "every L_4^d with d < 14 is completely squeezable".to_string()
        } else {
            format!("undecided or refuted at d = {failures:?}")
        },
    );

    let cells: Vec<(usize, u32)> = (1..=3)
        .flat_map(|n| (0..=TRIVARIATE_RANGE).map(move |d| (n, d)))
        .collect();
    let refuted: Vec<(usize, u32)> = cells
        .into_par_iter()
        .filter(|&(n, d)| conjecture_status(n, d).incomparable_pair.is_some())
        .collect();
    report.push(
        "minimal-arity",
        refuted.is_empty(),
        if refuted.is_empty() {
            format!("no refutation for n <= 3, d <= {TRIVARIATE_RANGE}")
        } else {
            format!("refuted at {refuted:?}")
        },
    );
    report
}

/// One JSON line of the grid scan.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct ScanRow {
    pub n: usize,
    pub d: u32,
    pub dim: usize,
    pub lex_maxima: usize,
    pub status: &'static str,
    pub pair: Option<[Vec<u32>; 2]>,
}

impl ScanRow {
    pub fn from_analysis(n: usize, d: u32, cell: &CellAnalysis) -> Self {
        ScanRow {
            n,
            d,
            dim: cell.dimension,
            lex_maxima: cell.maxima.len(),
            status: cell.status.verdict().as_str(),
            pair: cell.status.incomparable_pair.as_ref().map(|(a, b)| {
                [a.exponents().to_vec(), b.exponents().to_vec()]
            }),
        }
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string(self).expect("serializable")
    }
}

/// Analyzes every cell `n_min <= n <= n_max`, `0 <= d <= d_max` in parallel;
/// rows come back ordered by `n`, then `d`.
pub fn scan(n_min: usize, n_max: usize, d_max: u32) -> Vec<ScanRow> {
    let cells: Vec<(usize, u32)> = (n_min..=n_max)
        .flat_map(|n| (0..=d_max).map(move |d| (n, d)))
        .collect();
    cells
        .into_par_iter()
        .map(|(n, d)| ScanRow::from_analysis(n, d, &CellAnalysis::compute(n, d)))
        .collect()
}
