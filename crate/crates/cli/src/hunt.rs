//! Counterexample searches for the open conjectures on flat graphs.

use std::collections::BTreeMap;
use std::io::Write;
use std::str::FromStr;

use cliquepoly::catalog::CatalogRecord;
use rayon::prelude::*;
use serde::Serialize;

use crate::analyze::{run_analyze, AnalysisDocument};
use crate::error::CliError;
use crate::findings::{HuntFinding, ALL_REAL, D_CLIQUE, MULTIPLICITY_AT_MINUS_ONE};
use crate::Outcome;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Conjecture {
    /// Every flat graph has `D_clique <= 1`.
    FlatBalanced,
    /// 2-connected K5-free flat graphs without isolated triangles are
    /// real-rooted with `-1` a root of multiplicity at least two.
    K5FlatMultiplicity,
}

impl Conjecture {
    pub fn id(self) -> &'static str {
        match self {
            Conjecture::FlatBalanced => "flat-balanced",
            Conjecture::K5FlatMultiplicity => "k5-flat-multiplicity",
        }
    }

    fn in_class(self, doc: &AnalysisDocument) -> bool {
        let c = &doc.report.classification;
        match self {
            Conjecture::FlatBalanced => c.flat,
            Conjecture::K5FlatMultiplicity => c.two_connected && c.k5_free && c.flat && !c.has_isolated_triangle,
        }
    }

    fn findings(self, doc: &AnalysisDocument) -> Vec<HuntFinding> {
        let mut out = Vec::new();
        match self {
            Conjecture::FlatBalanced => {
                if !doc.report.classification.balanced {
                    out.push(HuntFinding::new(self.id(), doc, D_CLIQUE, "<= 1"));
                }
            }
            Conjecture::K5FlatMultiplicity => {
                if !doc.report.roots.all_real {
                    out.push(HuntFinding::new(self.id(), doc, ALL_REAL, "true"));
                }
                if doc.report.roots.multiplicity_at_minus_one < 2 {
                    out.push(HuntFinding::new(self.id(), doc, MULTIPLICITY_AT_MINUS_ONE, ">= 2"));
                }
            }
        }
        out
    }
}

impl FromStr for Conjecture {
    type Err = CliError;

    fn from_str(s: &str) -> Result<Self, CliError> {
        match s {
            "flat-balanced" => Ok(Conjecture::FlatBalanced),
            "k5-flat-multiplicity" => Ok(Conjecture::K5FlatMultiplicity),
            other => Err(CliError::Usage(format!(
                "unknown conjecture '{other}' (expected flat-balanced or k5-flat-multiplicity)"
            ))),
        }
    }
}

#[derive(Debug, Clone, Serialize)]
pub struct HuntSummary {
    pub conjecture: &'static str,
    pub graphs_examined: usize,
    pub in_class: usize,
    pub findings: usize,
    /// `D_clique` value -> number of graphs in the class.
    pub d_clique_distribution: BTreeMap<String, usize>,
    /// Multiplicity of `-1` -> number of graphs in the class.
    pub multiplicity_distribution: BTreeMap<usize, usize>,
}

pub struct HuntResult {
    pub findings: Vec<HuntFinding>,
    pub summary: HuntSummary,
    pub internal_errors: usize,
}

pub fn run_hunt(
    conjecture: Conjecture,
    records: &[CatalogRecord],
    tol: f64,
    jobs: usize,
) -> Result<HuntResult, CliError> {
    let pool = rayon::ThreadPoolBuilder::new()
        .num_threads(jobs.max(1))
        .build()
        .map_err(|e| CliError::Usage(format!("--jobs: {e}")))?;
    let docs: Vec<AnalysisDocument> = pool.install(|| {
        records
            .par_iter()
            .map(|r| run_analyze(&r.graph, tol))
            .collect::<Result<_, _>>()
    })?;

    let mut summary = HuntSummary {
        conjecture: conjecture.id(),
        graphs_examined: docs.len(),
        in_class: 0,
        findings: 0,
        d_clique_distribution: BTreeMap::new(),
        multiplicity_distribution: BTreeMap::new(),
    };
    let mut findings = Vec::new();
    let mut internal_errors = 0;
    for doc in &docs {
        internal_errors += usize::from(!doc.identities_hold() || doc.baseline_violated());
        if !conjecture.in_class(doc) {
            continue;
        }
        summary.in_class += 1;
        *summary
            .d_clique_distribution
            .entry(doc.report.classification.d_clique.to_string())
            .or_default() += 1;
        *summary
            .multiplicity_distribution
            .entry(doc.report.roots.multiplicity_at_minus_one)
            .or_default() += 1;
        findings.extend(conjecture.findings(doc));
    }
    summary.findings = findings.len();
    Ok(HuntResult { findings, summary, internal_errors })
}

impl HuntResult {
    pub fn outcome(&self) -> Outcome {
        Outcome { findings: self.findings.len(), internal_errors: self.internal_errors }
    }

    /// One JSON line per finding, then `{"summary": ...}`.
    pub fn write_jsonl<W: Write>(&self, mut out: W) -> Result<(), CliError> {
        for f in &self.findings {
            serde_json::to_writer(&mut out, f).map_err(std::io::Error::from)?;
            out.write_all(b"\n")?;
        }
        #[derive(Serialize)]
        struct Wrapper<'a> {
            summary: &'a HuntSummary,
        }
        serde_json::to_writer(&mut out, &Wrapper { summary: &self.summary }).map_err(std::io::Error::from)?;
        out.write_all(b"\n")?;
        Ok(())
    }
}
