//! Error type shared by every module of the crate.

use thiserror::Error;

/// Crate-wide result alias.
pub type Result<T> = std::result::Result<T, CbnError>;

/// Everything that can go wrong when building posets, fitting models or
/// reading data files.
#[derive(Debug, Error)]
pub enum CbnError {
    /// The transitive closure of the requested relations forces `e < e`.
    #[error("relation cycle: event {0} would precede itself")]
    Cycle(usize),

    /// An event index fell outside `0..n`.
    #[error("event index {index} out of range for {n} events")]
    EventOutOfRange { index: usize, n: usize },

    /// A genotype that must be an order ideal is not one.
    #[error("genotype {0} is not an order ideal of the poset")]
    NotIdeal(String),

    /// A lattice or event count exceeded the configured enumeration cap.
    #[error("size {size} exceeds the enumeration cap {cap}")]
    CapExceeded { size: String, cap: u64 },

    /// Two objects that must share a width or length do not.
    #[error("dimension mismatch: expected {expected}, got {got}")]
    DimensionMismatch { expected: usize, got: usize },

    /// Observed genotypes outside the model's lattice where compatibility
    /// is required. Carries the offending bit strings.
    #[error("data incompatible with poset; offending genotypes: {}", .0.join(", "))]
    IncompatibleData(Vec<String>),

    /// An estimation entry point received data with zero total mass.
    #[error("empty data: total count is zero")]
    EmptyData,

    /// The uniform branch of the mixture was requested although every
    /// genotype lies inside the lattice.
    #[error("degenerate mixture: no genotypes outside the lattice")]
    DegenerateMixture,

    /// A numeric argument violated its stated precondition.
    #[error("domain error: {0}")]
    Domain(String),

    /// The two posets do not differ by exactly one relation.
    #[error("posets are not nested by exactly one relation")]
    NotNested,

    /// The data does not separate the events; merge them first.
    #[error("data does not separate the events; merge non-distinguished events first")]
    CallerMustMerge,

    /// The zero polynomial has no leading monomial.
    #[error("the zero polynomial has no leading monomial")]
    ZeroPolynomial,

    /// Malformed input file. `line` is 1-based; 0 means "not tied to a line".
    #[error("parse error at line {line}: {msg}")]
    Parse { line: usize, msg: String },

    /// A row's genotype width disagrees with the header.
    #[error("inconsistent width at line {line}: expected {expected} bits")]
    InconsistentWidth { line: usize, expected: usize },

    #[error(transparent)]
    Io(#[from] std::io::Error),
}
