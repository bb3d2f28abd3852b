//! Exponent vectors and monomial orders.

use std::cmp::Ordering;

use serde::{Deserialize, Serialize};

/// A power product of the ambient variables, stored as one exponent per
/// variable in declaration order.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Monomial {
    exps: Vec<u32>,
}

impl Monomial {
    pub fn new(exps: Vec<u32>) -> Self {
        Monomial { exps }
    }

    /// The empty product (exponent zero everywhere).
    pub fn one(nvars: usize) -> Self {
        Monomial { exps: vec![0; nvars] }
    }

    /// The single variable with index `idx`.
    pub fn var(nvars: usize, idx: usize) -> Self {
        let mut exps = vec![0; nvars];
        exps[idx] = 1;
        Monomial { exps }
    }

    pub fn exps(&self) -> &[u32] {
        &self.exps
    }

    pub fn nvars(&self) -> usize {
        self.exps.len()
    }

    pub fn total_degree(&self) -> u32 {
        self.exps.iter().sum()
    }

    pub fn is_one(&self) -> bool {
        self.exps.iter().all(|&e| e == 0)
    }

    pub fn mul(&self, other: &Monomial) -> Monomial {
        debug_assert_eq!(self.exps.len(), other.exps.len());
        Monomial {
            exps: self
                .exps
                .iter()
                .zip(&other.exps)
                .map(|(a, b)| a + b)
                .collect(),
        }
    }

    pub fn divides(&self, other: &Monomial) -> bool {
        self.exps.len() == other.exps.len()
            && self.exps.iter().zip(&other.exps).all(|(a, b)| a <= b)
    }

    /// `other / self`, or `None` when `self` does not divide `other`.
    pub fn div_into(&self, other: &Monomial) -> Option<Monomial> {
        if !self.divides(other) {
            return None;
        }
        Some(Monomial {
            exps: other
                .exps
                .iter()
                .zip(&self.exps)
                .map(|(a, b)| a - b)
                .collect(),
        })
    }

    /// The same power product over a variable list grown by `extra` trailing
    /// variables.
    pub fn extended(&self, extra: usize) -> Monomial {
        let mut exps = self.exps.clone();
        exps.extend(std::iter::repeat(0).take(extra));
        Monomial { exps }
    }
}

/// Storage order: graded, ties broken lexicographically with the first
/// declared variable most significant.
impl Ord for Monomial {
    fn cmp(&self, other: &Self) -> Ordering {
        MonomialOrder::DegLex.cmp(self, other)
    }
}

impl PartialOrd for Monomial {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

/// Admissible term orders for leading-term selection.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum MonomialOrder {
    /// Total degree first, then lexicographic in declaration order.
    DegLex,
    /// Pure lexicographic in declaration order.
    Lex,
}

impl MonomialOrder {
    pub fn cmp(&self, a: &Monomial, b: &Monomial) -> Ordering {
        debug_assert_eq!(a.exps.len(), b.exps.len());
        match self {
            MonomialOrder::DegLex => a
                .total_degree()
                .cmp(&b.total_degree())
                .then_with(|| a.exps.cmp(&b.exps)),
            MonomialOrder::Lex => a.exps.cmp(&b.exps),
        }
    }

    pub fn name(&self) -> &'static str {
        match self {
            MonomialOrder::DegLex => "deglex",
            MonomialOrder::Lex => "lex",
        }
    }

    pub fn from_name(name: &str) -> Option<MonomialOrder> {
        match name {
            "deglex" => Some(MonomialOrder::DegLex),
            "lex" => Some(MonomialOrder::Lex),
            _ => None,
        }
    }
}

impl Default for MonomialOrder {
    fn default() -> Self {
        MonomialOrder::DegLex
    }
}
