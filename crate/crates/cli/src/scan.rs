//! Catalog sweeps: identities, root existence and the structured-class
//! real-rootedness results, graph by graph.

use std::collections::BTreeMap;
use std::io::Write;
use std::str::FromStr;

use cliquepoly::catalog::CatalogRecord;
use cliquepoly::identities::{Verdict, Verdicts};
use cliquepoly::{ClassificationReport, NeighborhoodShape};
use num_traits::{Signed, Zero};
use rayon::prelude::*;
use serde::Serialize;

use crate::analyze::{run_analyze, AnalysisDocument};
use crate::error::CliError;
use crate::findings::{HuntFinding, ALL_REAL, C_AT_MINUS_ONE, DERIVATIVE_AT_MINUS_HALF};
use crate::Outcome;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Filter {
    K4Free,
    K5Free,
    Flat,
    Chordal,
    Connected,
    Biconnected,
    NoIsolatedEdge,
    NoIsolatedTriangle,
    TriangleFree,
}

impl Filter {
    pub fn accepts(self, c: &ClassificationReport) -> bool {
        match self {
            Filter::K4Free => c.k4_free,
            Filter::K5Free => c.k5_free,
            Filter::Flat => c.flat,
            Filter::Chordal => c.chordal,
            Filter::Connected => c.connected,
            Filter::Biconnected => c.two_connected,
            Filter::NoIsolatedEdge => !c.has_isolated_edge,
            Filter::NoIsolatedTriangle => !c.has_isolated_triangle,
            Filter::TriangleFree => c.triangle_free,
        }
    }
}

impl FromStr for Filter {
    type Err = CliError;

    fn from_str(s: &str) -> Result<Self, CliError> {
        Ok(match s {
            "k4free" => Filter::K4Free,
            "k5free" => Filter::K5Free,
            "flat" => Filter::Flat,
            "chordal" => Filter::Chordal,
            "connected" => Filter::Connected,
            "biconnected" => Filter::Biconnected,
            "no-isolated-edge" => Filter::NoIsolatedEdge,
            "no-isolated-triangle" => Filter::NoIsolatedTriangle,
            "triangle-free" => Filter::TriangleFree,
            other => return Err(CliError::Usage(format!("unknown filter '{other}'"))),
        })
    }
}

/// Which expectations a scan turns into findings.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub struct Checks {
    pub identities: bool,
    /// Real-rootedness for K4-free flat graphs, plus the triangle-free and
    /// connected chordal K4-free results.
    pub mainthm: bool,
    /// `C(-1) = 0` and real-rootedness for the two isolated-edge classes.
    pub minus_one: bool,
    pub keyineq: bool,
}

impl Checks {
    pub fn all() -> Self {
        Checks { identities: true, mainthm: true, minus_one: true, keyineq: true }
    }

    pub fn parse_list(list: &str) -> Result<Self, CliError> {
        let mut checks = Checks::default();
        for item in list.split(',').map(str::trim).filter(|s| !s.is_empty()) {
            match item {
                "identities" => checks.identities = true,
                "mainthm" => checks.mainthm = true,
                "minus-one" => checks.minus_one = true,
                "keyineq" => checks.keyineq = true,
                "all" => checks = Checks::all(),
                other => return Err(CliError::Usage(format!("unknown check '{other}'"))),
            }
        }
        Ok(checks)
    }
}

pub fn parse_filters(list: &str) -> Result<Vec<Filter>, CliError> {
    list.split(',').map(str::trim).filter(|s| !s.is_empty()).map(Filter::from_str).collect()
}

#[derive(Debug, Clone)]
pub struct ScanOptions {
    pub filters: Vec<Filter>,
    pub checks: Checks,
    pub tol: f64,
    pub jobs: usize,
}

impl Default for ScanOptions {
    fn default() -> Self {
        ScanOptions { filters: Vec::new(), checks: Checks::all(), tol: crate::analyze::DEFAULT_TOL, jobs: 1 }
    }
}

#[derive(Debug, Clone, Serialize)]
pub struct ScanRecord {
    pub source: String,
    pub analysis: AnalysisDocument,
    pub findings: Vec<HuntFinding>,
}

#[derive(Debug, Clone, Copy, Default, Serialize)]
pub struct Tally {
    pub applies: usize,
    pub holds: usize,
    pub violated: usize,
}

impl Tally {
    fn add(&mut self, v: &Verdict) {
        if v.applies {
            self.applies += 1;
        }
        match v.holds {
            Some(true) => self.holds += 1,
            Some(false) => self.violated += 1,
            None => {}
        }
    }
}

#[derive(Debug, Clone, Default, Serialize)]
pub struct ScanSummary {
    pub graphs_examined: usize,
    pub graphs_selected: usize,
    pub identity_violations: usize,
    pub baseline_violations: usize,
    pub findings: usize,
    pub baseline: Tally,
    pub triangle_free: Tally,
    pub chordal_k4_free: Tally,
    pub mainthm1: Tally,
    pub mainthm2: Tally,
    pub mainthm: Tally,
    pub keyineq: Tally,
    /// Path lengths of `SinglePath` neighborhoods over vertices of K4-free
    /// flat graphs without isolated edges.
    pub mainthm1_path_lengths: BTreeMap<usize, usize>,
    /// Vertices of K4-free flat graphs whose neighborhood is `Other`.
    pub k4_free_flat_other_neighborhoods: usize,
}

impl ScanSummary {
    fn absorb(&mut self, record: &ScanRecord) {
        let doc = &record.analysis;
        let v: &Verdicts = &doc.report.verdicts;
        self.graphs_selected += 1;
        self.identity_violations += usize::from(!doc.identities_hold());
        self.baseline_violations += usize::from(doc.baseline_violated());
        self.findings += record.findings.len();
        self.baseline.add(&v.baseline);
        self.triangle_free.add(&v.triangle_free);
        self.chordal_k4_free.add(&v.chordal_k4_free);
        self.mainthm1.add(&v.mainthm1);
        self.mainthm2.add(&v.mainthm2);
        self.mainthm.add(&v.mainthm);
        self.keyineq.add(&v.keyineq);
        for shape in &doc.report.neighborhoods {
            match shape {
                NeighborhoodShape::SinglePath { length } if v.mainthm1.applies => {
                    *self.mainthm1_path_lengths.entry(*length).or_default() += 1;
                }
                NeighborhoodShape::Other if v.mainthm.applies => self.k4_free_flat_other_neighborhoods += 1,
                _ => {}
            }
        }
    }
}

/// Findings a graph produces under the selected checks.
pub fn scan_findings(doc: &AnalysisDocument, checks: &Checks) -> Vec<HuntFinding> {
    let v = &doc.report.verdicts;
    let mut out = Vec::new();
    let minus_one = !doc.report.c_at_minus_one.is_zero();
    let not_real = !doc.report.roots.all_real;
    if checks.minus_one {
        for (name, verdict) in [("mainthm1", &v.mainthm1), ("mainthm2", &v.mainthm2)] {
            if verdict.violated() {
                if minus_one {
                    out.push(HuntFinding::new(name, doc, C_AT_MINUS_ONE, "\"0\""));
                }
                if not_real {
                    out.push(HuntFinding::new(name, doc, ALL_REAL, "true"));
                }
            }
        }
    }
    if checks.mainthm {
        for (name, verdict) in [
            ("mainthm", &v.mainthm),
            ("triangle_free", &v.triangle_free),
            ("chordal_k4_free", &v.chordal_k4_free),
        ] {
            if verdict.violated() {
                out.push(HuntFinding::new(name, doc, ALL_REAL, "true"));
            }
        }
    }
    if checks.keyineq && v.keyineq.violated() {
        out.push(HuntFinding::new("keyineq", doc, DERIVATIVE_AT_MINUS_HALF, "<= 0"));
    }
    out
}

fn pool(jobs: usize) -> Result<rayon::ThreadPool, CliError> {
    rayon::ThreadPoolBuilder::new()
        .num_threads(jobs.max(1))
        .build()
        .map_err(|e| CliError::Usage(format!("--jobs: {e}")))
}

pub struct ScanResult {
    pub records: Vec<ScanRecord>,
    pub summary: ScanSummary,
}

/// Runs the sweep. Records must already be in canonical order; results keep
/// that order whatever the worker count.
pub fn run_scan(records: &[CatalogRecord], opts: &ScanOptions) -> Result<ScanResult, CliError> {
    let analysed: Vec<Option<ScanRecord>> = pool(opts.jobs)?.install(|| {
        records
            .par_iter()
            .map(|rec| -> Result<Option<ScanRecord>, CliError> {
                let analysis = run_analyze(&rec.graph, opts.tol)?;
                let c = &analysis.report.classification;
                if !opts.filters.iter().all(|f| f.accepts(c)) {
                    return Ok(None);
                }
                let findings = scan_findings(&analysis, &opts.checks);
                Ok(Some(ScanRecord { source: rec.source.to_string(), analysis, findings }))
            })
            .collect::<Result<_, _>>()
    })?;
    let mut summary = ScanSummary { graphs_examined: records.len(), ..ScanSummary::default() };
    let records: Vec<ScanRecord> = analysed.into_iter().flatten().collect();
    for r in &records {
        summary.absorb(r);
    }
    if !opts.checks.identities {
        summary.identity_violations = 0;
    }
    Ok(ScanResult { records, summary })
}

impl ScanResult {
    pub fn outcome(&self) -> Outcome {
        Outcome {
            findings: self.summary.findings,
            internal_errors: self.summary.identity_violations + self.summary.baseline_violations,
        }
    }

    /// One JSON line per selected graph, then `{"summary": ...}`.
    pub fn write_jsonl<W: Write>(&self, mut out: W) -> Result<(), CliError> {
        for r in &self.records {
            serde_json::to_writer(&mut out, r).map_err(std::io::Error::from)?;
            out.write_all(b"\n")?;
        }
        #[derive(Serialize)]
        struct Wrapper<'a> {
            summary: &'a ScanSummary,
        }
        serde_json::to_writer(&mut out, &Wrapper { summary: &self.summary }).map_err(std::io::Error::from)?;
        out.write_all(b"\n")?;
        Ok(())
    }

    pub fn write_csv<W: Write>(&self, mut out: W) -> Result<(), CliError> {
        writeln!(
            out,
            "graph6,n,m,t,omega,flat,chordal,k4free,isolated_edge,c_minus1,dprime_minus_half_sign,all_real,mult_at_minus1,d_clique"
        )?;
        for r in &self.records {
            let d = &r.analysis.report;
            let c = &d.classification;
            let sign = if d.derivative_at_minus_half.is_positive() {
                1
            } else if d.derivative_at_minus_half.is_negative() {
                -1
            } else {
                0
            };
            writeln!(
                out,
                "{},{},{},{},{},{},{},{},{},{},{},{},{},{}",
                r.analysis.graph6,
                d.n,
                d.m,
                d.counts.get(3),
                c.omega,
                c.flat,
                c.chordal,
                c.k4_free,
                c.has_isolated_edge,
                d.c_at_minus_one,
                sign,
                d.roots.all_real,
                d.roots.multiplicity_at_minus_one,
                c.d_clique
            )?;
        }
        Ok(())
    }
}
