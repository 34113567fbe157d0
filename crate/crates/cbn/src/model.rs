//! The conjunctive Bayesian network model: a poset plus per-event
//! occurrence probabilities θ, giving a distribution over order ideals.

use rand::Rng;
use rand::SeedableRng;
use rand_chacha::ChaCha12Rng;

use crate::counts::CountVector;
use crate::error::{CbnError, Result};
use crate::genotype::Genotype;
use crate::lattice::GenotypeLattice;
use crate::poset::Poset;

/// A CBN model `(E, θ)`: event `e` occurs with probability `θ_e` once all
/// of its predecessors have occurred.
#[derive(Debug, Clone, PartialEq)]
pub struct CbnModel {
    poset: Poset,
    theta: Vec<f64>,
}

impl CbnModel {
    pub fn new(poset: Poset, theta: Vec<f64>) -> Result<Self> {
        if theta.len() != poset.n() {
            return Err(CbnError::DimensionMismatch { expected: poset.n(), got: theta.len() });
        }
        for (e, &t) in theta.iter().enumerate() {
            if !(0.0..=1.0).contains(&t) {
                return Err(CbnError::Domain(format!(
                    "theta[{e}] = {t} is outside [0, 1]"
                )));
            }
        }
        Ok(CbnModel { poset, theta })
    }

    pub fn poset(&self) -> &Poset {
        &self.poset
    }

    pub fn theta(&self) -> &[f64] {
        &self.theta
    }

    pub fn n(&self) -> usize {
        self.poset.n()
    }

    /// `P_g(θ) = ∏_{e∈g} θ_e · ∏_{e∈min(g^c)} (1−θ_e)`; exactly 0 for
    /// genotypes that are not order ideals.
    pub fn genotype_probability(&self, g: &Genotype) -> Result<f64> {
        if g.width() != self.n() {
            return Err(CbnError::DimensionMismatch { expected: self.n(), got: g.width() });
        }
        if !self.poset.is_order_ideal(g) {
            return Ok(0.0);
        }
        let ready = self.poset.min_complement(g).expect("checked ideal");
        let mut p = 1.0;
        for e in g.events() {
            p *= self.theta[e];
        }
        for e in ready.events() {
            p *= 1.0 - self.theta[e];
        }
        Ok(p)
    }

    /// The full distribution over J(E) in canonical lattice order.
    pub fn distribution(&self) -> Result<(GenotypeLattice, Vec<f64>)> {
        let lattice = GenotypeLattice::enumerate(&self.poset)?;
        let probs = lattice
            .ideals()
            .iter()
            .map(|g| self.genotype_probability(g).expect("lattice members are ideals"))
            .collect();
        Ok((lattice, probs))
    }

    /// A deterministic topological order: repeatedly take the
    /// smallest-index event whose predecessors are all placed.
    fn topological_order(&self) -> Vec<usize> {
        let n = self.n();
        let mut placed = 0u64;
        let mut order = Vec::with_capacity(n);
        while order.len() < n {
            let e = (0..n)
                .find(|&e| placed & (1 << e) == 0 && self.poset.below_mask(e) & !placed == 0)
                .expect("a poset always has a minimal unplaced event");
            placed |= 1 << e;
            order.push(e);
        }
        order
    }

    /// Draws `count` independent genotypes by forward simulation: in
    /// topological order, each event with all predecessors present occurs
    /// with probability `θ_e`. Deterministic given the seed.
    pub fn sample(&self, count: u64, seed: u64) -> CountVector {
        let order = self.topological_order();
        let mut rng = ChaCha12Rng::seed_from_u64(seed);
        let mut u = CountVector::new(self.n());
        for _ in 0..count {
            let mut bits = 0u64;
            for &e in &order {
                if self.poset.below_mask(e) & !bits == 0 && rng.random::<f64>() < self.theta[e] {
                    bits |= 1 << e;
                }
            }
            u.add(Genotype::from_bits(bits, self.n()), 1.0);
        }
        u
    }

    /// `Σ_{g ⊇ h} P_g(θ)`, which equals `∏_{e∈h} θ_e` for ideals `h`.
    pub fn marginal_subsum(&self, h: &Genotype) -> Result<f64> {
        if h.width() != self.n() {
            return Err(CbnError::DimensionMismatch { expected: self.n(), got: h.width() });
        }
        if !self.poset.is_order_ideal(h) {
            return Err(CbnError::NotIdeal(h.to_bitstring()));
        }
        let (lattice, probs) = self.distribution()?;
        Ok(lattice
            .ideals()
            .iter()
            .zip(&probs)
            .filter(|(g, _)| h.is_subset_of(g))
            .map(|(_, &p)| p)
            .sum())
    }
}
