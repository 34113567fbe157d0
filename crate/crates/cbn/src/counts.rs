//! Genotype count data: the vector `u` mapping genotypes to masses.
//!
//! Masses are nonnegative reals, not just integers, so raw counts,
//! normalized distributions and bootstrap weights all flow through the
//! same code path.

use std::collections::BTreeMap;

use crate::error::{CbnError, Result};
use crate::genotype::Genotype;
use crate::poset::Poset;

/// A map from genotype to nonnegative mass; iteration is in canonical
/// genotype order, so every reduction over the data is deterministic.
#[derive(Debug, Clone, PartialEq)]
pub struct CountVector {
    n: usize,
    counts: BTreeMap<Genotype, f64>,
}

impl CountVector {
    pub fn new(n: usize) -> Self {
        CountVector { n, counts: BTreeMap::new() }
    }

    pub fn from_pairs(n: usize, pairs: &[(Genotype, f64)]) -> Self {
        let mut u = CountVector::new(n);
        for &(g, c) in pairs {
            u.add(g, c);
        }
        u
    }

    /// Accumulates mass for `g`. Zero mass is a no-op.
    pub fn add(&mut self, g: Genotype, mass: f64) {
        assert_eq!(g.width(), self.n, "genotype width mismatch");
        assert!(mass.is_finite() && mass >= 0.0, "mass must be finite and nonnegative");
        if mass > 0.0 {
            *self.counts.entry(g).or_insert(0.0) += mass;
        }
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn total(&self) -> f64 {
        self.counts.values().sum()
    }

    pub fn mass(&self, g: &Genotype) -> f64 {
        self.counts.get(g).copied().unwrap_or(0.0)
    }

    /// Support size (genotypes with positive mass).
    pub fn support_len(&self) -> usize {
        self.counts.len()
    }

    pub fn is_empty(&self) -> bool {
        self.counts.is_empty()
    }

    /// Iterates `(genotype, mass)` over the support in canonical order.
    pub fn support(&self) -> impl Iterator<Item = (&Genotype, f64)> + '_ {
        self.counts.iter().map(|(g, &c)| (g, c))
    }

    /// The same data rescaled to total mass 1.
    pub fn normalized(&self) -> Result<CountVector> {
        let total = self.total();
        if total <= 0.0 {
            return Err(CbnError::EmptyData);
        }
        let mut out = CountVector::new(self.n);
        for (g, c) in self.support() {
            out.add(*g, c / total);
        }
        Ok(out)
    }

    /// Splits the data by compatibility with `p` (order-ideal test).
    pub fn split_compatible(&self, p: &Poset) -> (CountVector, CountVector) {
        let mut compatible = CountVector::new(self.n);
        let mut incompatible = CountVector::new(self.n);
        for (g, c) in self.support() {
            if p.is_order_ideal(g) {
                compatible.add(*g, c);
            } else {
                incompatible.add(*g, c);
            }
        }
        (compatible, incompatible)
    }

    /// Genotypes in the support that are not order ideals of `p`.
    pub fn incompatible_support(&self, p: &Poset) -> Vec<Genotype> {
        self.support()
            .filter(|(g, _)| !p.is_order_ideal(g))
            .map(|(g, _)| *g)
            .collect()
    }

    /// Total mass of genotypes satisfying `pred`.
    pub fn mass_where(&self, mut pred: impl FnMut(&Genotype) -> bool) -> f64 {
        self.support().filter(|(g, _)| pred(g)).map(|(_, c)| c).sum()
    }
}
