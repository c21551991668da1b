//! Sparse bivariate polynomials over the integers, with checked 128-bit
//! coefficient arithmetic. Overflow is reported, never wrapped.

use std::collections::BTreeMap;

use crate::error::{Error, Result};

/// A polynomial in two variables with exact `i128` coefficients, stored
/// as a map from degree pairs `(d1, d2)` to nonzero coefficients.
#[derive(Clone, PartialEq, Eq, Debug, Default)]
pub struct SparseBivariatePoly {
    terms: BTreeMap<(u32, u32), i128>,
}

impl SparseBivariatePoly {
    pub fn zero() -> Self {
        Self::default()
    }

    /// The single term `c * x1^d1 * x2^d2`.
    pub fn monomial(d1: u32, d2: u32, coefficient: i128) -> Self {
        let mut terms = BTreeMap::new();
        if coefficient != 0 {
            terms.insert((d1, d2), coefficient);
        }
        Self { terms }
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    /// Number of stored (nonzero) terms.
    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    /// Coefficient of `x1^d1 * x2^d2`; zero when absent.
    pub fn coefficient(&self, d1: u32, d2: u32) -> i128 {
        self.terms.get(&(d1, d2)).copied().unwrap_or(0)
    }

    /// Iterates stored terms as `((d1, d2), coefficient)` in degree order.
    pub fn terms(&self) -> impl Iterator<Item = ((u32, u32), i128)> + '_ {
        self.terms.iter().map(|(&d, &c)| (d, c))
    }

    fn add_term(&mut self, degree: (u32, u32), coefficient: i128) -> Result<()> {
        let entry = self.terms.entry(degree).or_insert(0);
        *entry = entry.checked_add(coefficient).ok_or(Error::Overflow("polynomial coefficient"))?;
        if *entry == 0 {
            self.terms.remove(&degree);
        }
        Ok(())
    }

    pub fn add(&self, other: &Self) -> Result<Self> {
        let mut out = self.clone();
        for (degree, coefficient) in other.terms() {
            out.add_term(degree, coefficient)?;
        }
        Ok(out)
    }

    pub fn mul(&self, other: &Self) -> Result<Self> {
        let mut out = Self::zero();
        for ((a1, a2), ac) in self.terms() {
            for ((b1, b2), bc) in other.terms() {
                let coefficient =
                    ac.checked_mul(bc).ok_or(Error::Overflow("polynomial coefficient"))?;
                out.add_term((a1 + b1, a2 + b2), coefficient)?;
            }
        }
        Ok(out)
    }

    /// Drops every term whose `x2`-degree exceeds `max_d2`. Sound as a
    /// pruning step only when later factors never lower the `x2`-degree.
    pub(crate) fn truncate_d2(&mut self, max_d2: u32) {
        self.terms.retain(|&(_, d2), _| d2 <= max_d2);
    }

    /// True when every stored term has total degree `total`.
    pub fn is_homogeneous(&self, total: u32) -> bool {
        self.terms.keys().all(|&(d1, d2)| d1 + d2 == total)
    }
}
