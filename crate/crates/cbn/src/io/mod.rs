//! Data ingestion, report serialization, plotting, and the command
//! implementations behind the CLI.

pub mod commands;
pub mod report;
pub mod svg;
pub mod table;

pub use commands::{
    parse_poset_spec, run_fit, run_scan, run_simulate, run_verify, FitOptions,
    PosetSource, ScanOptions, SimulateOptions, ThetaSpec, VerifyOptions,
    VerifyOutcome, VERIFY_TOLERANCE,
};
pub use report::FitReport;
pub use svg::{scan_scatter_svg, ScanPoint};
pub use table::{DataFormat, GenotypeTable, SourceKind};
