//! The distributive lattice J(E) of order ideals, enumerated explicitly.

use std::collections::HashMap;

use crate::error::{CbnError, Result};
use crate::genotype::Genotype;
use crate::poset::Poset;

/// All order ideals of a poset in canonical order, with index lookup.
///
/// Canonical order sorts by cardinality and then by bit pattern; every
/// enumeration, vector coordinate and report in the crate uses it.
#[derive(Debug, Clone)]
pub struct GenotypeLattice {
    ideals: Vec<Genotype>,
    index: HashMap<Genotype, usize>,
}

impl GenotypeLattice {
    /// Enumerates J(E). Fails with `CapExceeded` on oversized lattices.
    pub fn enumerate(poset: &Poset) -> Result<Self> {
        let ideals = poset.order_ideals()?;
        let index = ideals.iter().enumerate().map(|(i, g)| (*g, i)).collect();
        Ok(GenotypeLattice { ideals, index })
    }

    pub fn len(&self) -> usize {
        self.ideals.len()
    }

    pub fn is_empty(&self) -> bool {
        self.ideals.is_empty()
    }

    pub fn ideals(&self) -> &[Genotype] {
        &self.ideals
    }

    pub fn get(&self, i: usize) -> Genotype {
        self.ideals[i]
    }

    pub fn position(&self, g: &Genotype) -> Option<usize> {
        self.index.get(g).copied()
    }

    pub fn contains(&self, g: &Genotype) -> bool {
        self.index.contains_key(g)
    }

    /// Lattice join: set union (closed for ideals of a fixed poset).
    pub fn join(&self, i: usize, j: usize) -> usize {
        let g = self.ideals[i].union(&self.ideals[j]);
        self.index[&g]
    }

    /// Lattice meet: set intersection.
    pub fn meet(&self, i: usize, j: usize) -> usize {
        let g = self.ideals[i].intersection(&self.ideals[j]);
        self.index[&g]
    }

    /// All unordered pairs `{g, h}` with neither containing the other,
    /// as index pairs `(i, j)` with `i < j`, in ascending order.
    pub fn incomparable_pairs(&self) -> Vec<(usize, usize)> {
        let mut out = Vec::new();
        for i in 0..self.ideals.len() {
            for j in (i + 1)..self.ideals.len() {
                let (g, h) = (&self.ideals[i], &self.ideals[j]);
                if !g.is_subset_of(h) && !h.is_subset_of(g) {
                    out.push((i, j));
                }
            }
        }
        out
    }

    pub(crate) fn require_len(&self, got: usize) -> Result<()> {
        if got != self.ideals.len() {
            return Err(CbnError::DimensionMismatch { expected: self.ideals.len(), got });
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn diamond() -> Poset {
        Poset::from_relations(4, &[(0, 2), (0, 3), (1, 2), (1, 3)]).unwrap()
    }

    #[test]
    fn closure_under_join_and_meet() {
        for p in [diamond(), Poset::antichain(5), Poset::chain(4)] {
            let lat = GenotypeLattice::enumerate(&p).unwrap();
            for i in 0..lat.len() {
                for j in 0..lat.len() {
                    let u = lat.get(i).union(&lat.get(j));
                    let m = lat.get(i).intersection(&lat.get(j));
                    assert!(lat.contains(&u));
                    assert!(lat.contains(&m));
                    assert_eq!(lat.get(lat.join(i, j)), u);
                    assert_eq!(lat.get(lat.meet(i, j)), m);
                }
            }
        }
    }

    #[test]
    fn incomparable_pairs_of_the_diamond_lattice() {
        let lat = GenotypeLattice::enumerate(&diamond()).unwrap();
        let pairs = lat.incomparable_pairs();
        let named: Vec<(String, String)> = pairs
            .iter()
            .map(|&(i, j)| (lat.get(i).to_bitstring(), lat.get(j).to_bitstring()))
            .collect();
        assert_eq!(
            named,
            vec![
                ("1000".to_string(), "0100".to_string()),
                ("1110".to_string(), "1101".to_string()),
            ]
        );
    }

    #[test]
    fn chain_has_no_incomparable_pairs() {
        let lat = GenotypeLattice::enumerate(&Poset::chain(4)).unwrap();
        assert!(lat.incomparable_pairs().is_empty());
    }

    #[test]
    fn two_event_antichain_has_one_incomparable_pair() {
        let lat = GenotypeLattice::enumerate(&Poset::antichain(2)).unwrap();
        let pairs = lat.incomparable_pairs();
        assert_eq!(pairs.len(), 1);
        let (i, j) = pairs[0];
        assert_eq!(lat.get(i).to_bitstring(), "10");
        assert_eq!(lat.get(j).to_bitstring(), "01");
    }
}
