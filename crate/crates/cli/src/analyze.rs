//! The per-graph analysis document shared by `analyze`, `scan` and `hunt`.

use cliquepoly::catalog::write_graph6;
use cliquepoly::identities::{theorem_check, verify_identities, IdentityReport, TheoremReport};
use cliquepoly::realroots::approximate_roots;
use cliquepoly::Graph;
use serde::Serialize;
use serde_json::Value;

use crate::error::CliError;

pub const DEFAULT_TOL: f64 = 1e-12;

#[derive(Debug, Clone, Serialize)]
pub struct AnalysisDocument {
    pub graph6: String,
    #[serde(flatten)]
    pub report: TheoremReport,
    pub approximate_roots: Vec<f64>,
    pub identities: Vec<IdentityReport>,
}

impl AnalysisDocument {
    pub fn identities_hold(&self) -> bool {
        self.identities.iter().all(|r| r.holds)
    }

    /// The baseline root-existence result failed; this indicates a defect.
    pub fn baseline_violated(&self) -> bool {
        self.report.verdicts.baseline.violated()
    }

    pub fn to_value(&self) -> Value {
        serde_json::to_value(self).expect("analysis documents serialize")
    }

    /// Value at a JSON pointer such as `/classification/d_clique`, strings
    /// unquoted and everything else as compact JSON. Findings refer to values this way so they can be
    /// replayed.
    pub fn field(&self, pointer: &str) -> Option<String> {
        self.to_value().pointer(pointer).map(|v| match v {
            Value::String(s) => s.clone(),
            other => other.to_string(),
        })
    }
}

pub fn run_analyze(graph: &Graph, tol: f64) -> Result<AnalysisDocument, CliError> {
    let report = theorem_check(graph);
    let approximate_roots =
        approximate_roots(&report.roots, tol).map_err(|e| CliError::Usage(format!("--tol: {e}")))?;
    Ok(AnalysisDocument {
        graph6: write_graph6(graph).unwrap_or_default(),
        identities: verify_identities(graph),
        approximate_roots,
        report,
    })
}
