use cliquepoly::ClassificationReport;
use serde::Serialize;

use crate::analyze::AnalysisDocument;

/// A graph that contradicts a stated expectation.
///
/// `field` is a JSON pointer into the graph's [`AnalysisDocument`] and
/// `actual` is the value found there, so re-analysing `graph6` reproduces
/// `actual` exactly.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct HuntFinding {
    pub conjecture: String,
    pub graph6: String,
    pub field: String,
    pub expected: String,
    pub actual: String,
    pub classification: ClassificationReport,
}

impl HuntFinding {
    pub fn new(conjecture: &str, doc: &AnalysisDocument, field: &str, expected: &str) -> Self {
        HuntFinding {
            conjecture: conjecture.to_string(),
            graph6: doc.graph6.clone(),
            field: field.to_string(),
            expected: expected.to_string(),
            actual: doc.field(field).unwrap_or_else(|| "null".into()),
            classification: doc.report.classification.clone(),
        }
    }
}

pub const C_AT_MINUS_ONE: &str = "/c_at_minus_one";
pub const ALL_REAL: &str = "/roots/all_real";
pub const DERIVATIVE_AT_MINUS_HALF: &str = "/derivative_at_minus_half";
pub const D_CLIQUE: &str = "/classification/d_clique";
pub const MULTIPLICITY_AT_MINUS_ONE: &str = "/roots/multiplicity_at_minus_one";
