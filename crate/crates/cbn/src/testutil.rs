//! Small helpers for tests, benchmarks and examples: deterministic random
//! posets and parameter vectors.

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha12Rng;

use crate::poset::Poset;

/// The four-event running example used throughout the test suite: two
/// incomparable bottom events below two incomparable top events; its
/// lattice has seven genotypes.
pub fn two_by_two_poset() -> Poset {
    Poset::from_relations(4, &[(0, 2), (1, 2), (0, 3), (1, 3)]).unwrap()
}

/// A random poset on `n` events: each pair (e, f) with e < f as integers
/// gets a relation with probability `density` under a random relabeling,
/// then the transitive closure. Acyclic by construction and uniform enough
/// for property tests.
pub fn random_poset(n: usize, density: f64, seed: u64) -> Poset {
    let mut rng = ChaCha12Rng::seed_from_u64(seed);
    // Random topological order.
    let mut order: Vec<usize> = (0..n).collect();
    for i in (1..n).rev() {
        let j = rng.random_range(0..=i);
        order.swap(i, j);
    }
    let mut relations = Vec::new();
    for i in 0..n {
        for j in (i + 1)..n {
            if rng.random::<f64>() < density {
                relations.push((order[i], order[j]));
            }
        }
    }
    Poset::from_relations(n, &relations).expect("construction is acyclic")
}

/// A deterministic θ vector with entries uniform in `[lo, hi]`.
pub fn random_theta(n: usize, lo: f64, hi: f64, seed: u64) -> Vec<f64> {
    assert!(0.0 <= lo && lo <= hi && hi <= 1.0, "need 0 ≤ lo ≤ hi ≤ 1");
    let mut rng = ChaCha12Rng::seed_from_u64(seed);
    (0..n).map(|_| lo + (hi - lo) * rng.random::<f64>()).collect()
}
