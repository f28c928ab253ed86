//! JSON forms for polynomials.
//!
//! Symmetric polynomials use
//! `{"n": 4, "terms": [{"m": [8,4,2,0], "c": ["3", "1"]}], "meta": {...}}`
//! with canonical (weakly decreasing) exponents and coefficients as decimal
//! numerator/denominator strings. Raw polynomials use the same layout with
//! key `"e"` for arbitrary exponent vectors. Terms are written in descending
//! lex order.

use std::str::FromStr;

use num_bigint::BigInt;
use num_traits::{Signed, Zero};
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::multiset::ExponentMultiset;
use crate::poly::{Rational, RawPolynomial, SymmetricPolynomial};

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct TermEntry {
    pub m: Vec<u32>,
    pub c: (String, String),
}

#[derive(Debug, Clone, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct Meta {
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub degree: Option<u32>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub provenance: Option<String>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub haldane: Option<bool>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct PolynomialFile {
    pub n: usize,
    pub terms: Vec<TermEntry>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub meta: Option<Meta>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct RawTermEntry {
    pub e: Vec<u32>,
    pub c: (String, String),
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct RawPolynomialFile {
    pub n: usize,
    pub terms: Vec<RawTermEntry>,
}

fn encode_rational(c: &Rational) -> (String, String) {
    (c.numer().to_string(), c.denom().to_string())
}

fn decode_rational((num, den): &(String, String)) -> Result<Rational> {
    let parse = |s: &str| {
        BigInt::from_str(s).map_err(|_| Error::Malformed(format!("bad integer string {s:?}")))
    };
    let num = parse(num)?;
    let den = parse(den)?;
    if !den.is_positive() {
        return Err(Error::Malformed(format!("denominator {den} is not positive")));
    }
    Ok(Rational::new(num, den))
}

impl PolynomialFile {
    pub fn from_polynomial(p: &SymmetricPolynomial, meta: Option<Meta>) -> Self {
        PolynomialFile {
            n: p.arity(),
            terms: p
                .terms()
                .map(|(m, c)| TermEntry {
                    m: m.exponents().to_vec(),
                    c: encode_rational(c),
                })
                .collect(),
            meta,
        }
    }

    /// Validates and converts; zero coefficients are dropped.
    pub fn to_polynomial(&self) -> Result<SymmetricPolynomial> {
        let mut p = SymmetricPolynomial::zero(self.n);
        let mut seen = std::collections::BTreeSet::new();
        for t in &self.terms {
            if t.m.len() != self.n {
                return Err(Error::WrongLength {
                    exponents: t.m.clone(),
                    expected: self.n,
                    found: t.m.len(),
                });
            }
            let m = ExponentMultiset::from_canonical(t.m.clone()).ok_or_else(|| {
                Error::Malformed(format!("exponents {:?} are not weakly decreasing", t.m))
            })?;
            if !seen.insert(m.clone()) {
                return Err(Error::Malformed(format!("duplicate term {m}")));
            }
            let c = decode_rational(&t.c)?;
            if !c.is_zero() {
                p.add_term(m, c)?;
            }
        }
        Ok(p)
    }
}

impl RawPolynomialFile {
    pub fn from_raw(r: &RawPolynomial) -> Self {
        RawPolynomialFile {
            n: r.arity(),
            terms: r
                .terms()
                .rev()
                .map(|(e, c)| RawTermEntry {
                    e: e.clone(),
                    c: encode_rational(c),
                })
                .collect(),
        }
    }

    pub fn to_raw(&self) -> Result<RawPolynomial> {
        let mut r = RawPolynomial::zero(self.n);
        for t in &self.terms {
            if r.terms().any(|(e, _)| *e == t.e) {
                return Err(Error::Malformed(format!("duplicate term {:?}", t.e)));
            }
            r.add_term(t.e.clone(), decode_rational(&t.c)?)?;
        }
        Ok(r)
    }
}

pub fn parse_polynomial_file(text: &str) -> Result<PolynomialFile> {
    serde_json::from_str(text).map_err(|e| Error::Malformed(e.to_string()))
}

/// Parses and validates in one step.
pub fn read_polynomial(text: &str) -> Result<SymmetricPolynomial> {
    parse_polynomial_file(text)?.to_polynomial()
}

/// Compact single-line JSON.
pub fn write_polynomial(p: &SymmetricPolynomial, meta: Option<Meta>) -> String {
    serde_json::to_string(&PolynomialFile::from_polynomial(p, meta)).expect("serializable")
}

pub fn write_raw(r: &RawPolynomial) -> String {
    serde_json::to_string(&RawPolynomialFile::from_raw(r)).expect("serializable")
}

pub fn read_raw(text: &str) -> Result<RawPolynomial> {
    let file: RawPolynomialFile =
        serde_json::from_str(text).map_err(|e| Error::Malformed(e.to_string()))?;
    file.to_raw()
}
