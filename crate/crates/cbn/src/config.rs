//! Enumeration caps.
//!
//! Antichains make the genotype lattice explode (`|J(E)| = 2^n`), so both
//! the event count and the lattice size are capped. The default cap of 25
//! events can be overridden with the `CBN_MAX_N` environment variable; the
//! lattice cap follows as `2^max_n`. The bit-vector representation imposes
//! a hard ceiling of 63 events.

use std::sync::OnceLock;

/// Hard ceiling imposed by the `u64` genotype representation.
pub const HARD_MAX_N: usize = 63;

const DEFAULT_MAX_N: usize = 25;

static MAX_N: OnceLock<usize> = OnceLock::new();

/// Maximum admissible event count (default 25, env `CBN_MAX_N`, ≤ 63).
pub fn max_events() -> usize {
    *MAX_N.get_or_init(|| {
        std::env::var("CBN_MAX_N")
            .ok()
            .and_then(|v| v.trim().parse::<usize>().ok())
            .map(|n| n.clamp(1, HARD_MAX_N))
            .unwrap_or(DEFAULT_MAX_N)
    })
}

/// Maximum number of order ideals that may be enumerated explicitly.
pub fn max_lattice_size() -> u64 {
    1u64 << max_events().min(HARD_MAX_N)
}

/// Separate, tighter cap for symbolic work (polynomial expansion and
/// quadric generation), whose cost grows quadratically in the lattice size.
pub const SYMBOLIC_LATTICE_CAP: u64 = 1024;
