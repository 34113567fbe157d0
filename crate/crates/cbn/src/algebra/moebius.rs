//! The zeta / Möbius transform pair on a genotype lattice: passing between
//! genotype probabilities p_g and superset sums q_h = Σ_{g ⊇ h} p_g.

use std::ops::{Add, Sub};

use num_traits::Zero;

use crate::error::{CbnError, Result};
use crate::lattice::GenotypeLattice;

/// q_h = Σ_{g ⊇ h} p_g over lattice members, in lattice index order.
///
/// Works for any additive value type; use `f64` for numeric work and
/// `BigRational` when the identities must hold exactly.
pub fn moebius_transform<T>(lattice: &GenotypeLattice, p: &[T]) -> Result<Vec<T>>
where
    T: Clone + Zero + Add<Output = T>,
{
    check_len(lattice, p.len())?;
    let ideals = lattice.ideals();
    let mut q = Vec::with_capacity(ideals.len());
    for h in ideals {
        let mut acc = T::zero();
        for (g, value) in ideals.iter().zip(p) {
            if h.is_subset_of(g) {
                acc = acc + value.clone();
            }
        }
        q.push(acc);
    }
    Ok(q)
}

/// Inverts [`moebius_transform`]: recovers p from q via
/// p_h = q_h − Σ_{g ⊋ h} p_g, solved in descending lattice order.
///
/// Strict supersets always sit later in the canonical order (they have
/// larger cardinality), so the subtraction only touches entries already
/// recovered.
pub fn inverse_moebius<T>(lattice: &GenotypeLattice, q: &[T]) -> Result<Vec<T>>
where
    T: Clone + Zero + Add<Output = T> + Sub<Output = T>,
{
    check_len(lattice, q.len())?;
    let ideals = lattice.ideals();
    let mut p: Vec<T> = vec![T::zero(); ideals.len()];
    for i in (0..ideals.len()).rev() {
        let mut acc = q[i].clone();
        for j in (i + 1)..ideals.len() {
            if ideals[i].is_subset_of(&ideals[j]) {
                acc = acc - p[j].clone();
            }
        }
        p[i] = acc;
    }
    Ok(p)
}

fn check_len(lattice: &GenotypeLattice, got: usize) -> Result<()> {
    if got != lattice.len() {
        return Err(CbnError::DimensionMismatch { expected: lattice.len(), got });
    }
    Ok(())
}
