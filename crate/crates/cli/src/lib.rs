//! Command-line layer over `cliquepoly`: single-graph analysis, catalog
//! scans, conjecture hunts and catalog generation.

pub mod analyze;
pub mod error;
pub mod findings;
pub mod hunt;
pub mod input;
pub mod scan;

pub use analyze::{run_analyze, AnalysisDocument};
pub use error::CliError;
pub use findings::HuntFinding;
pub use hunt::{run_hunt, Conjecture};
pub use scan::{run_scan, ScanOptions};

/// Exit status: 0 clean, 1 findings present, 2 input error (see
/// [`CliError`]), 3 internal invariant violation.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub struct Outcome {
    pub findings: usize,
    pub internal_errors: usize,
}

impl Outcome {
    pub fn exit_code(&self) -> u8 {
        if self.internal_errors > 0 {
            3
        } else if self.findings > 0 {
            1
        } else {
            0
        }
    }

    pub fn merge(self, other: Outcome) -> Outcome {
        Outcome {
            findings: self.findings + other.findings,
            internal_errors: self.internal_errors + other.internal_errors,
        }
    }
}
