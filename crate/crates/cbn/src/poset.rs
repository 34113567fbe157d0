//! Posets on `n` labeled events and their order-ideal combinatorics.
//!
//! The relation is kept transitively closed at all times; construction
//! rejects cycles. Per-event predecessor/successor sets are bit masks, so
//! the ideal predicates are a handful of word operations.

use std::collections::HashMap;

use num_bigint::BigUint;
use num_traits::One;

use crate::config;
use crate::error::{CbnError, Result};
use crate::genotype::Genotype;

/// A strict partial order on the events `0..n`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Poset {
    n: usize,
    /// `below[f]` = mask of events strictly below `f`.
    below: Vec<u64>,
    /// `above[e]` = mask of events strictly above `e`.
    above: Vec<u64>,
}

impl Poset {
    /// The poset with no relations.
    pub fn antichain(n: usize) -> Self {
        assert!(n >= 1 && n <= config::max_events(), "event count out of range");
        Poset { n, below: vec![0; n], above: vec![0; n] }
    }

    /// The total order `0 < 1 < … < n-1`.
    pub fn chain(n: usize) -> Self {
        let pairs: Vec<(usize, usize)> = (1..n).map(|f| (f - 1, f)).collect();
        Poset::from_relations(n, &pairs).expect("a chain is acyclic")
    }

    /// Builds the poset generated by `pairs`, each meaning `e < f`.
    ///
    /// The input is transitively closed; a closure that relates any event
    /// to itself is rejected as a cycle.
    pub fn from_relations(n: usize, pairs: &[(usize, usize)]) -> Result<Self> {
        if n < 1 || n > config::max_events() {
            return Err(CbnError::EventOutOfRange { index: n, n: config::max_events() });
        }
        let mut above = vec![0u64; n];
        for &(e, f) in pairs {
            for idx in [e, f] {
                if idx >= n {
                    return Err(CbnError::EventOutOfRange { index: idx, n });
                }
            }
            if e == f {
                return Err(CbnError::Cycle(e));
            }
            above[e] |= 1 << f;
        }
        // Bit-parallel Warshall closure.
        for k in 0..n {
            for e in 0..n {
                if above[e] & (1 << k) != 0 {
                    above[e] |= above[k];
                }
            }
        }
        if let Some(e) = (0..n).find(|&e| above[e] & (1 << e) != 0) {
            return Err(CbnError::Cycle(e));
        }
        let mut below = vec![0u64; n];
        for e in 0..n {
            for f in 0..n {
                if above[e] & (1 << f) != 0 {
                    below[f] |= 1 << e;
                }
            }
        }
        Ok(Poset { n, below, above })
    }

    pub fn n(&self) -> usize {
        self.n
    }

    /// True iff `e < f` in the (closed) order.
    pub fn lt(&self, e: usize, f: usize) -> bool {
        e < self.n && f < self.n && self.above[e] & (1 << f) != 0
    }

    /// All pairs of the transitive closure, in ascending `(e, f)` order.
    pub fn relations(&self) -> Vec<(usize, usize)> {
        let mut out = Vec::new();
        for e in 0..self.n {
            for f in 0..self.n {
                if self.above[e] & (1 << f) != 0 {
                    out.push((e, f));
                }
            }
        }
        out
    }

    /// The poset extended by one more relation `e < f` (re-closed).
    pub fn with_relation(&self, e: usize, f: usize) -> Result<Self> {
        let mut pairs = self.relations();
        pairs.push((e, f));
        Poset::from_relations(self.n, &pairs)
    }

    /// The transitive reduction: `e ⋖ f` iff nothing lies strictly between.
    pub fn cover_relations(&self) -> Vec<(usize, usize)> {
        let mut out = Vec::new();
        for e in 0..self.n {
            for f in 0..self.n {
                if self.above[e] & (1 << f) != 0 && self.above[e] & self.below[f] == 0 {
                    out.push((e, f));
                }
            }
        }
        out
    }

    /// The set `{f : f < e}` as a genotype.
    pub fn below(&self, e: usize) -> Result<Genotype> {
        if e >= self.n {
            return Err(CbnError::EventOutOfRange { index: e, n: self.n });
        }
        Ok(Genotype::from_bits(self.below[e], self.n))
    }

    pub(crate) fn below_mask(&self, e: usize) -> u64 {
        self.below[e]
    }

    /// True iff `g` is downward closed (an order ideal, i.e. compatible).
    pub fn is_order_ideal(&self, g: &Genotype) -> bool {
        if g.width() != self.n {
            return false;
        }
        let bits = g.bits();
        (0..self.n).all(|e| bits & (1 << e) == 0 || self.below[e] & !bits == 0)
    }

    /// The minimal elements of the complement: events ready to occur next.
    pub fn min_complement(&self, g: &Genotype) -> Result<Genotype> {
        if !self.is_order_ideal(g) {
            return Err(CbnError::NotIdeal(g.to_bitstring()));
        }
        let bits = g.bits();
        let mut out = 0u64;
        for e in 0..self.n {
            if bits & (1 << e) == 0 && self.below[e] & !bits == 0 {
                out |= 1 << e;
            }
        }
        Ok(Genotype::from_bits(out, self.n))
    }

    /// `|J(E)|` without enumeration.
    ///
    /// Recursion on a minimal element `m` of the surviving sub-poset:
    /// ideals without `m` avoid everything above it, ideals with `m`
    /// correspond to ideals of the sub-poset minus `m`.
    pub fn count_order_ideals(&self) -> BigUint {
        fn count(p: &Poset, alive: u64, memo: &mut HashMap<u64, BigUint>) -> BigUint {
            if alive == 0 {
                return BigUint::one();
            }
            if let Some(c) = memo.get(&alive) {
                return c.clone();
            }
            let m = (0..p.n)
                .find(|&e| alive & (1 << e) != 0 && p.below[e] & alive == 0)
                .expect("a finite nonempty poset has a minimal element");
            let without = count(p, alive & !((1 << m) | p.above[m]), memo);
            let with = count(p, alive & !(1 << m), memo);
            let total = without + with;
            memo.insert(alive, total.clone());
            total
        }
        let alive = if self.n == 0 { 0 } else { u64::MAX >> (64 - self.n) };
        count(self, alive, &mut HashMap::new())
    }

    /// Every order ideal, in canonical order (cardinality, then bits).
    pub fn order_ideals(&self) -> Result<Vec<Genotype>> {
        let total = self.count_order_ideals();
        let cap = config::max_lattice_size();
        if total > BigUint::from(cap) {
            return Err(CbnError::CapExceeded { size: total.to_string(), cap });
        }
        let size: u64 = total.try_into().expect("checked against cap");
        let mut seen = std::collections::HashSet::with_capacity(size as usize);
        let mut stack = vec![0u64];
        seen.insert(0u64);
        while let Some(bits) = stack.pop() {
            for e in 0..self.n {
                if bits & (1 << e) == 0 && self.below[e] & !bits == 0 {
                    let next = bits | (1 << e);
                    if seen.insert(next) {
                        stack.push(next);
                    }
                }
            }
        }
        debug_assert_eq!(seen.len() as u64, size);
        let mut ideals: Vec<Genotype> =
            seen.into_iter().map(|b| Genotype::from_bits(b, self.n)).collect();
        ideals.sort();
        Ok(ideals)
    }

    /// True iff every relation of `self` also holds in `other`.
    pub fn is_refinement(&self, other: &Poset) -> Result<bool> {
        if self.n != other.n {
            return Err(CbnError::DimensionMismatch { expected: self.n, got: other.n });
        }
        Ok((0..self.n).all(|e| self.above[e] & !other.above[e] == 0))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    /// The running four-event example: events 0,1 each precede 2,3.
    pub(crate) fn diamond() -> Poset {
        Poset::from_relations(4, &[(0, 2), (0, 3), (1, 2), (1, 3)]).unwrap()
    }

    #[test]
    fn construction_closes_transitively() {
        let p = Poset::from_relations(3, &[(0, 1), (1, 2)]).unwrap();
        assert!(p.lt(0, 2));
        assert_eq!(p.relations(), vec![(0, 1), (0, 2), (1, 2)]);
    }

    #[test]
    fn rejects_cycles_and_bad_indices() {
        assert!(matches!(
            Poset::from_relations(3, &[(0, 1), (1, 2), (2, 0)]),
            Err(CbnError::Cycle(_))
        ));
        assert!(matches!(
            Poset::from_relations(3, &[(0, 3)]),
            Err(CbnError::EventOutOfRange { .. })
        ));
        assert!(matches!(Poset::from_relations(2, &[(1, 1)]), Err(CbnError::Cycle(1))));
    }

    #[test]
    fn cover_relations_are_the_transitive_reduction() {
        assert_eq!(diamond().cover_relations(), vec![(0, 2), (0, 3), (1, 2), (1, 3)]);
        let chain = Poset::chain(3);
        assert_eq!(chain.cover_relations(), vec![(0, 1), (1, 2)]);
        assert!(Poset::antichain(3).cover_relations().is_empty());
    }

    #[test]
    fn reduction_then_closure_is_identity() {
        for p in [diamond(), Poset::chain(5), Poset::antichain(4)] {
            let again = Poset::from_relations(p.n(), &p.cover_relations()).unwrap();
            assert_eq!(again, p);
        }
    }

    #[test]
    fn below_sets() {
        let p = diamond();
        assert_eq!(p.below(2).unwrap(), Genotype::from_events(4, &[0, 1]));
        assert_eq!(p.below(0).unwrap(), Genotype::empty(4));
        let chain = Poset::chain(3);
        assert_eq!(chain.below(2).unwrap(), Genotype::from_events(3, &[0, 1]));
        assert!(p.below(4).is_err());
    }

    #[test]
    fn ideal_predicate() {
        let p = diamond();
        assert!(p.is_order_ideal(&Genotype::from_events(4, &[0, 1, 2])));
        assert!(!p.is_order_ideal(&Genotype::from_events(4, &[2])));
        assert!(p.is_order_ideal(&Genotype::empty(4)));
    }

    #[test]
    fn min_complement_examples() {
        let p = diamond();
        let g = Genotype::from_events(4, &[0, 1]);
        assert_eq!(p.min_complement(&g).unwrap(), Genotype::from_events(4, &[2, 3]));
        assert_eq!(p.min_complement(&Genotype::full(4)).unwrap(), Genotype::empty(4));
        assert_eq!(p.min_complement(&Genotype::empty(4)).unwrap(), Genotype::from_events(4, &[0, 1]));
        assert!(matches!(
            p.min_complement(&Genotype::from_events(4, &[2])),
            Err(CbnError::NotIdeal(_))
        ));
    }

    #[test]
    fn ideal_enumeration_and_count() {
        let p = diamond();
        assert_eq!(p.count_order_ideals(), BigUint::from(7u32));
        let ideals = p.order_ideals().unwrap();
        let bitstrings: Vec<String> = ideals.iter().map(|g| g.to_bitstring()).collect();
        assert_eq!(
            bitstrings,
            vec!["0000", "1000", "0100", "1100", "1110", "1101", "1111"]
        );

        assert_eq!(Poset::antichain(10).count_order_ideals(), BigUint::from(1024u32));
        assert_eq!(Poset::chain(10).count_order_ideals(), BigUint::from(11u32));
        assert_eq!(Poset::antichain(4).order_ideals().unwrap().len(), 16);
        assert_eq!(Poset::chain(4).order_ideals().unwrap().len(), 5);
    }

    #[test]
    fn refinement() {
        let p = diamond();
        assert!(Poset::antichain(4).is_refinement(&p).unwrap());
        assert!(p.is_refinement(&p).unwrap());
        let a = Poset::from_relations(2, &[(0, 1)]).unwrap();
        let b = Poset::from_relations(2, &[(1, 0)]).unwrap();
        assert!(!a.is_refinement(&b).unwrap());
        assert!(a.is_refinement(&Poset::antichain(3)).is_err());
    }

    #[test]
    fn refinement_reverses_ideal_sets() {
        let coarse = Poset::from_relations(4, &[(0, 2)]).unwrap();
        let fine = diamond();
        assert!(coarse.is_refinement(&fine).unwrap());
        let fine_ideals = fine.order_ideals().unwrap();
        let coarse_ideals: std::collections::HashSet<_> =
            coarse.order_ideals().unwrap().into_iter().collect();
        for g in fine_ideals {
            assert!(coarse_ideals.contains(&g));
        }
    }
}
