use std::fmt::Write as _;

use crate::error::{Error, Result};
use crate::multiset::ExponentMultiset;
use crate::poly::SymmetricPolynomial;

use super::order::dominates;

/// The support `B(p)` of a homogeneous polynomial under the squeezing order,
/// stored as its Hasse diagram.
///
/// Covers are the transitive reduction of the order restricted to the node
/// set, so an edge may span multisets that are absent from `B(p)`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SqueezePoset {
    nodes: Vec<ExponentMultiset>,
    covers: Vec<(usize, usize)>,
}

impl SqueezePoset {
    /// Builds the poset on `nodes`, which must share one arity and degree.
    pub fn from_nodes(mut nodes: Vec<ExponentMultiset>) -> Result<Self> {
        nodes.sort_unstable_by(|a, b| b.cmp(a));
        nodes.dedup();
        if let Some(first) = nodes.first() {
            if let Some(bad) = nodes
                .iter()
                .find(|m| m.arity() != first.arity() || m.degree() != first.degree())
            {
                return Err(Error::IncomparableDomains(first.to_string(), bad.to_string()));
            }
        }
        let len = nodes.len();
        // below[i][j]: nodes[i] < nodes[j] strictly
        let below: Vec<Vec<bool>> = (0..len)
            .map(|i| {
                (0..len)
                    .map(|j| i != j && dominates(&nodes[j], &nodes[i]))
                    .collect()
            })
            .collect();
        let mut covers = Vec::new();
        for i in 0..len {
            for j in 0..len {
                if below[i][j] && !(0..len).any(|k| below[i][k] && below[k][j]) {
                    covers.push((i, j));
                }
            }
        }
        Ok(SqueezePoset { nodes, covers })
    }

    /// Nodes in descending lex order.
    pub fn nodes(&self) -> &[ExponentMultiset] {
        &self.nodes
    }

    /// Cover pairs `(smaller, bigger)`.
    pub fn covers(&self) -> impl Iterator<Item = (&ExponentMultiset, &ExponentMultiset)> {
        self.covers.iter().map(|&(a, b)| (&self.nodes[a], &self.nodes[b]))
    }

    pub fn cover_count(&self) -> usize {
        self.covers.len()
    }

    pub fn len(&self) -> usize {
        self.nodes.len()
    }

    pub fn is_empty(&self) -> bool {
        self.nodes.is_empty()
    }

    /// Nodes with nothing strictly above them, in descending lex order.
    pub fn maximal_elements(&self) -> Vec<ExponentMultiset> {
        (0..self.nodes.len())
            .filter(|&i| !self.covers.iter().any(|&(a, _)| a == i))
            .map(|i| self.nodes[i].clone())
            .collect()
    }

    /// DOT digraph with arrows from smaller to bigger elements.
    pub fn to_dot(&self) -> String {
        let mut out = String::from("digraph squeezing_poset {\n    rankdir=BT;\n");
        for (i, m) in self.nodes.iter().enumerate() {
            writeln!(out, "    n{i} [label=\"{m}\"];").unwrap();
        }
        let mut edges = self.covers.clone();
        edges.sort_unstable();
        for (a, b) in edges {
            writeln!(out, "    n{a} -> n{b};").unwrap();
        }
        out.push_str("}\n");
        out
    }
}

/// `B(p)` for a nonzero homogeneous polynomial.
pub fn support_poset(p: &SymmetricPolynomial) -> Result<SqueezePoset> {
    if p.is_zero() {
        return Err(Error::EmptySupport);
    }
    if !p.degree_info().homogeneous {
        return Err(Error::NotHomogeneous);
    }
    SqueezePoset::from_nodes(p.support())
}

pub fn maximal_elements(poset: &SqueezePoset) -> Vec<ExponentMultiset> {
    poset.maximal_elements()
}

/// A polynomial is Haldane when its squeezing poset has a maximum.
pub fn is_haldane(p: &SymmetricPolynomial) -> Result<bool> {
    Ok(support_poset(p)?.maximal_elements().len() == 1)
}

pub fn hasse_dot(poset: &SqueezePoset) -> String {
    poset.to_dot()
}
