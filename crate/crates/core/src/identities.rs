//! Per-graph verification of the clique-polynomial identities and of the
//! real-rootedness results for structured graph classes.
//!
//! Identities are checked coefficient by coefficient. Theorem checks record
//! whether the hypothesis applies and, separately, whether the conclusion
//! holds, so a false statement shows up as data.

use num_bigint::{BigInt, BigUint};
use num_traits::{Signed, Zero};
use serde::Serialize;

use crate::classify::{classify, classify_neighborhood, ClassificationReport, NeighborhoodShape};
use crate::cliques::{count_cliques, CliqueCounts};
use crate::graph::{Graph, GraphError};
use crate::polynomial::{clique_polynomial, format_rational, integer, rational, Polynomial, Rational};
use crate::realroots::{analyze_roots, RootReport};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum Identity {
    /// `C(G) = C(G - v) + x C(G[N(v)])`
    VertexRecurrence,
    /// `(n - i) c_i(G) = Σ_v c_i(G - v)`
    VertexDeck,
    /// `C'(G) = Σ_v C(G[N(v)])`
    Derivative,
}

/// Where the two sides of an identity first disagree.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Witness {
    pub vertex: Option<usize>,
    /// Coefficient index (power of `x`, or clique size for the deck identity).
    pub index: usize,
    pub lhs: String,
    pub rhs: String,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct IdentityReport {
    pub identity: Identity,
    pub holds: bool,
    pub witness: Option<Witness>,
}

impl IdentityReport {
    fn compare(identity: Identity, vertex: Option<usize>, lhs: &[BigInt], rhs: &[BigInt]) -> Self {
        let len = lhs.len().max(rhs.len());
        let zero = BigInt::zero();
        let mismatch = (0..len).find(|&i| lhs.get(i).unwrap_or(&zero) != rhs.get(i).unwrap_or(&zero));
        IdentityReport {
            identity,
            holds: mismatch.is_none(),
            witness: mismatch.map(|index| Witness {
                vertex,
                index,
                lhs: lhs.get(index).unwrap_or(&zero).to_string(),
                rhs: rhs.get(index).unwrap_or(&zero).to_string(),
            }),
        }
    }
}

fn poly(g: &Graph) -> Polynomial {
    clique_polynomial(&count_cliques(g))
}

pub fn verify_vertex_recurrence(g: &Graph, v: usize) -> Result<IdentityReport, GraphError> {
    let minus = g.delete_vertex(v)?.graph;
    let nbhd = g.induced_neighborhood(v)?.graph;
    let lhs = poly(g);
    let rhs = &poly(&minus) + &poly(&nbhd).shift(1);
    Ok(IdentityReport::compare(Identity::VertexRecurrence, Some(v), lhs.coeffs(), rhs.coeffs()))
}

/// The recurrence at every vertex; reports the first failing vertex.
pub fn verify_vertex_recurrence_all(g: &Graph) -> IdentityReport {
    for v in 0..g.n() {
        let r = verify_vertex_recurrence(g, v).expect("vertex in range");
        if !r.holds {
            return r;
        }
    }
    IdentityReport { identity: Identity::VertexRecurrence, holds: true, witness: None }
}

pub fn verify_deck_identity(g: &Graph) -> IdentityReport {
    let n = g.n();
    let counts = count_cliques(g);
    let lhs: Vec<BigInt> = (0..=n)
        .map(|i| BigInt::from(n - i) * BigInt::from(counts.get(i)))
        .collect();
    let mut rhs = vec![BigUint::zero(); n + 1];
    for v in 0..n {
        let deleted = count_cliques(&g.delete_vertex(v).expect("vertex in range").graph);
        for (i, c) in deleted.as_slice().iter().enumerate() {
            rhs[i] += c;
        }
    }
    let rhs: Vec<BigInt> = rhs.into_iter().map(BigInt::from).collect();
    IdentityReport::compare(Identity::VertexDeck, None, &lhs, &rhs)
}

pub fn verify_derivative_identity(g: &Graph) -> IdentityReport {
    let lhs = poly(g).derivative();
    let rhs = (0..g.n()).fold(Polynomial::zero(), |acc, v| {
        &acc + &poly(&g.induced_neighborhood(v).expect("vertex in range").graph)
    });
    IdentityReport::compare(Identity::Derivative, None, lhs.coeffs(), rhs.coeffs())
}

/// All three identities; the recurrence is checked at every vertex.
pub fn verify_identities(g: &Graph) -> Vec<IdentityReport> {
    vec![
        verify_vertex_recurrence_all(g),
        verify_deck_identity(g),
        verify_derivative_identity(g),
    ]
}

/// Whether a result's hypothesis covers the graph and, if so, whether its
/// conclusion holds.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct Verdict {
    pub applies: bool,
    pub holds: Option<bool>,
}

impl Verdict {
    fn new(applies: bool, conclusion: impl FnOnce() -> bool) -> Self {
        Verdict { applies, holds: applies.then(conclusion) }
    }

    pub fn violated(&self) -> bool {
        self.holds == Some(false)
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct Verdicts {
    /// Every graph with at least one vertex has a real root in `[-1, 0)`.
    pub baseline: Verdict,
    /// Triangle-free graphs are real-rooted.
    pub triangle_free: Verdict,
    /// Connected chordal `K4`-free graphs are real-rooted.
    pub chordal_k4_free: Verdict,
    /// `K4`-free flat graphs without isolated edges: `C(-1) = 0` and real-rooted.
    pub mainthm1: Verdict,
    /// `K4`-free flat graphs with no isolated edge on an induced cycle:
    /// `C(-1) = 0` and real-rooted.
    pub mainthm2: Verdict,
    /// `K4`-free flat graphs are real-rooted.
    pub mainthm: Verdict,
    /// `K4`-free flat graphs satisfy `C'(-1/2) <= 0`.
    pub keyineq: Verdict,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct TheoremReport {
    pub n: usize,
    pub m: usize,
    pub counts: CliqueCounts,
    pub polynomial: Polynomial,
    pub polynomial_text: String,
    pub classification: ClassificationReport,
    #[serde(serialize_with = "crate::ser::display")]
    pub c_at_minus_one: BigInt,
    #[serde(serialize_with = "serialize_rational")]
    pub derivative_at_minus_half: Rational,
    /// `1 - n + m - t`, zero exactly when `C(-1) = 0` for a `K4`-free graph.
    #[serde(serialize_with = "crate::ser::display")]
    pub euler_residual: BigInt,
    pub neighborhoods: Vec<NeighborhoodShape>,
    pub roots: RootReport,
    pub verdicts: Verdicts,
}

fn serialize_rational<S: serde::Serializer>(q: &Rational, s: S) -> Result<S::Ok, S::Error> {
    s.serialize_str(&format_rational(q))
}

pub fn theorem_check(g: &Graph) -> TheoremReport {
    let counts = count_cliques(g);
    let polynomial = clique_polynomial(&counts);
    let classification = classify(g);
    let roots = analyze_roots(&polynomial).expect("clique polynomials are nonzero");
    let c_at_minus_one = polynomial.evaluate_at(&integer(-1)).to_integer();
    let derivative_at_minus_half = polynomial.derivative().evaluate_at(&rational(-1, 2));
    let n = g.n();
    let m = g.m();
    let t = BigInt::from(counts.get(3));
    let euler_residual = BigInt::from(1) - BigInt::from(n) + BigInt::from(m) - t;
    let neighborhoods = (0..n)
        .map(|v| classify_neighborhood(g, v).expect("vertex in range"))
        .collect();

    let c = &classification;
    let all_real = roots.all_real;
    let minus_one_root = c_at_minus_one.is_zero();
    let k4_flat = c.k4_free && c.flat;
    let verdicts = Verdicts {
        baseline: Verdict::new(n > 0, || roots.roots_in_minus_one_zero > 0),
        triangle_free: Verdict::new(c.triangle_free, || all_real),
        chordal_k4_free: Verdict::new(c.k4_free && c.chordal && c.connected, || all_real),
        mainthm1: Verdict::new(k4_flat && !c.has_isolated_edge, || minus_one_root && all_real),
        mainthm2: Verdict::new(k4_flat && !c.isolated_edge_in_induced_cycle, || minus_one_root && all_real),
        mainthm: Verdict::new(k4_flat, || all_real),
        keyineq: Verdict::new(k4_flat, || !derivative_at_minus_half.is_positive()),
    };

    TheoremReport {
        n,
        m,
        polynomial_text: polynomial.to_string(),
        counts,
        polynomial,
        classification,
        c_at_minus_one,
        derivative_at_minus_half,
        euler_residual,
        neighborhoods,
        roots,
        verdicts,
    }
}
