//! Acceptance checks. Prints one PASS/FAIL line per criterion and exits
//! nonzero if any criterion fails.

use std::collections::BTreeMap;
use std::path::PathBuf;
use std::process::ExitCode;
use std::time::{Duration, Instant};

use cliquepoly::catalog::{canonical_form, enumerate_nonisomorphic, parse_graph6, read_graph6_catalog, write_graph6};
use cliquepoly::cliques::{count_cliques, count_cliques_exhaustive};
use cliquepoly::identities::{theorem_check, verify_identities};
use cliquepoly::polynomial::{clique_polynomial, d_clique, rational, Polynomial, Rational};
use cliquepoly::realroots::{analyze_roots, square_free_part, RootLocation, SturmSequence};
use cliquepoly::{CatalogRecord, Graph};
use cliquepoly_cli::{run_analyze, run_hunt, Conjecture};
use num_traits::{One, Signed, Zero};
use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

const TOL: f64 = 1e-12;
const FIGURE_ONE_BUDGET: Duration = Duration::from_millis(1);
const IDENTITY_SWEEP_BUDGET: Duration = Duration::from_secs(300);

type Criterion = (&'static str, fn() -> Verdict);

struct Verdict {
    pass: bool,
    detail: String,
}

fn verdict(pass: bool, detail: impl Into<String>) -> Verdict {
    Verdict { pass, detail: detail.into() }
}

fn records_upto(max_n: usize) -> Vec<CatalogRecord> {
    (1..=max_n).flat_map(|n| enumerate_nonisomorphic(n).unwrap()).collect()
}

fn graphs_upto(max_n: usize) -> Vec<Graph> {
    records_upto(max_n).into_iter().map(|r| r.graph).collect()
}

fn graphs_upto8() -> Vec<Graph> {
    let path = PathBuf::from(env!("CARGO_MANIFEST_DIR")).join("../../data/graphs8.g6");
    let text = std::fs::read_to_string(&path).expect("data/graphs8.g6");
    let mut all = graphs_upto(7);
    all.extend(read_graph6_catalog(&text, "graphs8.g6").unwrap().into_iter().map(|r| r.graph));
    all
}

fn random_graphs(seed: u64, count: usize, lo: usize, hi: usize) -> Vec<Graph> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    (0..count)
        .map(|_| {
            let n = rng.gen_range(lo..=hi);
            let p = rng.gen_range(0.1..0.9);
            Graph::random(n, p, &mut rng)
        })
        .collect()
}

fn g6(g: &Graph) -> String {
    write_graph6(g).unwrap()
}

fn summarize(bad: &[String]) -> String {
    if bad.is_empty() {
        return "0 violations".into();
    }
    let shown: Vec<&str> = bad.iter().take(4).map(String::as_str).collect();
    format!("{} violations, e.g. {}", bad.len(), shown.join(", "))
}

fn figure_one() -> Verdict {
    let g = Graph::new(4, [(3, 0), (0, 1), (1, 2), (0, 2)]).unwrap();
    let start = Instant::now();
    let p = clique_polynomial(&count_cliques(&g));
    let elapsed = start.elapsed();
    let ok = p == Polynomial::from_i64s(&[1, 4, 4, 1]) && p.to_string() == "1 + 4x + 4x^2 + x^3";
    verdict(ok && elapsed < FIGURE_ONE_BUDGET, format!("C = {p} in {elapsed:?}"))
}

fn universal_identities() -> Verdict {
    let start = Instant::now();
    let mut graphs = graphs_upto(7);
    let catalog = graphs.len();
    graphs.extend(random_graphs(12, 1000, 1, 12));
    let mut bad = Vec::new();
    for g in &graphs {
        for r in verify_identities(g) {
            if !r.holds {
                bad.push(format!("{:?} on {}", r.identity, g6(g)));
            }
        }
    }
    let elapsed = start.elapsed();
    verdict(
        catalog == 1252 && bad.is_empty() && elapsed < IDENTITY_SWEEP_BUDGET,
        format!("{catalog} catalog + 1000 random graphs, {} in {elapsed:?}", summarize(&bad)),
    )
}

fn baseline_root() -> Verdict {
    let bad: Vec<String> = graphs_upto(7)
        .iter()
        .filter(|g| theorem_check(g).roots.roots_in_minus_one_zero == 0)
        .map(g6)
        .collect();
    verdict(bad.is_empty(), summarize(&bad))
}

fn mainthm1() -> Verdict {
    let mut applies = 0;
    let mut bad = Vec::new();
    for g in graphs_upto8() {
        let r = theorem_check(&g);
        let c = &r.classification;
        if !(c.k4_free && c.flat && !c.has_isolated_edge) {
            continue;
        }
        applies += 1;
        let ok = r.c_at_minus_one.is_zero()
            && r.roots.all_real
            && c.d_clique.is_one()
            && !r.derivative_at_minus_half.is_positive();
        if !ok {
            bad.push(format!("{} ({})", g6(&g), r.polynomial_text));
        }
    }
    verdict(bad.is_empty(), format!("{applies} graphs in class, {}", summarize(&bad)))
}

fn mainthm() -> Verdict {
    let mut applies = 0;
    let mut bad = Vec::new();
    for g in graphs_upto8() {
        let r = theorem_check(&g);
        if !(r.classification.k4_free && r.classification.flat) {
            continue;
        }
        applies += 1;
        if !r.roots.all_real {
            bad.push(format!("{} ({})", g6(&g), r.polynomial_text));
        }
    }
    verdict(bad.is_empty(), format!("{applies} graphs in class, {}", summarize(&bad)))
}

fn prior_results() -> Verdict {
    let (mut tf, mut ch) = (0, 0);
    let mut bad = Vec::new();
    for g in graphs_upto(7) {
        let r = theorem_check(&g);
        let c = &r.classification;
        let chordal = c.k4_free && c.chordal && c.connected;
        tf += usize::from(c.triangle_free);
        ch += usize::from(chordal);
        if (c.triangle_free || chordal) && !r.roots.all_real {
            bad.push(g6(&g));
        }
    }
    verdict(bad.is_empty(), format!("{tf} triangle-free, {ch} connected chordal K4-free, {}", summarize(&bad)))
}

fn k4_plus() -> Verdict {
    let pendant = Graph::complete(4).add_vertex(&[0]).unwrap();
    let pendant_poly = clique_polynomial(&count_cliques_exhaustive(&pendant));
    let one_plus_x = Polynomial::from_i64s(&[1, 1]);
    let formula = &(&one_plus_x.pow(4) + &one_plus_x.pow(2)) - &Polynomial::from_i64s(&[1]);
    let mut ok = pendant_poly == Polynomial::from_i64s(&[1, 5, 7, 4, 1]);
    let mut parts = Vec::new();
    for p in [&pendant_poly, &formula] {
        let report = analyze_roots(p).unwrap();
        let sturm = SturmSequence::new(&square_free_part(p).unwrap()).count_all();
        ok &= !report.all_real && report.distinct_real_roots == 2 && sturm == 2;
        parts.push(format!("{p}: all_real={} distinct={} sturm={sturm}", report.all_real, report.distinct_real_roots));
    }
    verdict(ok, parts.join("; "))
}

fn oracle_equivalence() -> Verdict {
    let mut graphs = graphs_upto(7);
    graphs.extend(random_graphs(8, 200, 1, 10));
    let bad: Vec<String> = graphs
        .iter()
        .filter(|g| count_cliques(g) != count_cliques_exhaustive(g))
        .map(g6)
        .collect();
    verdict(bad.is_empty(), format!("{} graphs, {}", graphs.len(), summarize(&bad)))
}

/// A polynomial built from known factors, with the real roots it must have.
struct Planted {
    poly: Polynomial,
    rational: BTreeMap<Rational, usize>,
    /// Irrational real-rooted quadratics, keyed by display, with multiplicity.
    irrational: BTreeMap<String, (Polynomial, usize)>,
}

fn plant(rng: &mut ChaCha8Rng) -> Planted {
    let target = rng.gen_range(1..=6);
    let sign = if rng.gen() { 1 } else { -1 };
    let mut poly = Polynomial::from_i64s(&[sign * rng.gen_range(1..=3)]);
    let mut planted_rational = BTreeMap::new();
    let mut irrational = BTreeMap::new();
    let mut degree = 0;
    while degree < target {
        let room = target - degree;
        match rng.gen_range(0..3) {
            0 => {
                let (a, b): (i64, i64) = (rng.gen_range(1..=4), rng.gen_range(-6..=6));
                let mult = rng.gen_range(1..=room.min(3));
                poly = &poly * &Polynomial::from_i64s(&[-b, a]).pow(mult as u32);
                *planted_rational.entry(rational(b, a)).or_default() += mult;
                degree += mult;
            }
            1 if room >= 2 => {
                let b: i64 = rng.gen_range(-4..=4);
                let c = b * b / 4 + rng.gen_range(1..=5);
                let mult = rng.gen_range(1..=room / 2);
                poly = &poly * &Polynomial::from_i64s(&[c, b, 1]).pow(mult as u32);
                degree += 2 * mult;
            }
            2 if room >= 2 => {
                let (a, k) = loop {
                    let (a, k): (i64, i64) = (rng.gen_range(1..=3), rng.gen_range(1..=12));
                    let r = ((a * k) as f64).sqrt().round() as i64;
                    if r * r != a * k {
                        break (a, k);
                    }
                };
                let q = Polynomial::from_i64s(&[-k, 0, a]).primitive_part();
                let mult = rng.gen_range(1..=room / 2);
                poly = &poly * &q.pow(mult as u32);
                irrational.entry(q.to_string()).or_insert((q, 0)).1 += mult;
                degree += 2 * mult;
            }
            _ => {}
        }
    }
    Planted { poly, rational: planted_rational, irrational }
}

fn recovered(planted: &Planted) -> bool {
    let p = &planted.poly;
    let report = analyze_roots(p).unwrap();
    let real_mult: usize =
        planted.rational.values().sum::<usize>() + planted.irrational.values().map(|(_, m)| 2 * m).sum::<usize>();
    if report.distinct_real_roots != planted.rational.len() + 2 * planted.irrational.len()
        || report.all_real != (real_mult == report.degree)
    {
        return false;
    }
    let mut exact = BTreeMap::new();
    let mut hits: BTreeMap<&str, usize> = BTreeMap::new();
    for root in &report.roots {
        match &root.location {
            RootLocation::Exact(r) => {
                exact.insert(r.clone(), root.multiplicity);
            }
            RootLocation::Interval { lo, hi } => {
                let Some((key, (_, mult))) = planted
                    .irrational
                    .iter()
                    .find(|(_, (q, _))| q.evaluate_at(lo) * q.evaluate_at(hi) <= Rational::zero())
                else {
                    return false;
                };
                if root.multiplicity != *mult {
                    return false;
                }
                *hits.entry(key).or_default() += 1;
            }
        }
    }
    exact == planted.rational && hits.len() == planted.irrational.len() && hits.values().all(|&c| c == 2)
}

fn root_engine() -> Verdict {
    let mut rng = ChaCha8Rng::seed_from_u64(2024);
    let bad: Vec<String> = (0..500)
        .map(|_| plant(&mut rng))
        .filter(|p| !recovered(p))
        .map(|p| p.poly.to_string())
        .collect();
    verdict(bad.is_empty(), format!("500 planted polynomials, {}", summarize(&bad)))
}

fn format_fidelity() -> Verdict {
    let counts: Vec<usize> = (1..=7).map(|n| enumerate_nonisomorphic(n).unwrap().count()).collect();
    let mut bad = Vec::new();
    for g in graphs_upto(7) {
        let text = g6(&g);
        let back = parse_graph6(&text).unwrap();
        if back != g || g6(&back) != text {
            bad.push(format!("round trip {text}"));
        }
    }
    let mut rng = ChaCha8Rng::seed_from_u64(6);
    for g in graphs_upto(6) {
        let canon = canonical_form(&g).unwrap();
        let mut perm: Vec<usize> = (0..g.n()).collect();
        for _ in 0..100 {
            perm.shuffle(&mut rng);
            if canonical_form(&g.relabel(&perm)).unwrap() != canon {
                bad.push(format!("canonical {}", g6(&g)));
                break;
            }
        }
    }
    let ok = counts == [1, 2, 4, 11, 34, 156, 1044] && bad.is_empty();
    verdict(ok, format!("counts {counts:?}, {}", summarize(&bad)))
}

fn hunt_bytes(conjecture: Conjecture, records: &[CatalogRecord], jobs: usize) -> (Vec<u8>, cliquepoly_cli::hunt::HuntResult) {
    let result = run_hunt(conjecture, records, TOL, jobs).unwrap();
    let mut out = Vec::new();
    result.write_jsonl(&mut out).unwrap();
    (out, result)
}

fn hunt_integrity() -> Verdict {
    let records = records_upto(7);
    let mut problems = Vec::new();
    let mut total = 0;
    for conjecture in [Conjecture::FlatBalanced, Conjecture::K5FlatMultiplicity] {
        let (first, result) = hunt_bytes(conjecture, &records, 1);
        let (second, _) = hunt_bytes(conjecture, &records, 4);
        if first != second {
            problems.push(format!("{} output differs between runs", conjecture.id()));
        }
        total += result.findings.len();
        for f in &result.findings {
            let doc = run_analyze(&parse_graph6(&f.graph6).unwrap(), TOL).unwrap();
            if doc.field(&f.field).as_deref() != Some(f.actual.as_str()) || doc.report.classification != f.classification {
                problems.push(format!("{} does not replay", f.graph6));
            }
        }
    }

    let octahedron = Graph::octahedron();
    let oracle_d = d_clique(&clique_polynomial(&count_cliques_exhaustive(&octahedron)));
    let oct6 = canonical_form(&octahedron).unwrap();
    let (_, flat) = hunt_bytes(Conjecture::FlatBalanced, &records, 2);
    let emitted = flat.findings.iter().any(|f| f.graph6 == oct6);
    if emitted != (oracle_d == 2u8.into()) {
        problems.push(format!("octahedron emitted={emitted} but oracle d_clique={oracle_d}"));
    }
    verdict(
        problems.is_empty(),
        format!("{total} findings, octahedron d_clique={oracle_d} emitted={emitted}, {}", summarize(&problems)),
    )
}

fn main() -> ExitCode {
    let criteria: [Criterion; 11] = [
        ("figure 1 polynomial", figure_one),
        ("universal identities", universal_identities),
        ("baseline root in [-1,0)", baseline_root),
        ("K4-free flat, no isolated edge", mainthm1),
        ("K4-free flat real-rootedness", mainthm),
        ("triangle-free and chordal K4-free", prior_results),
        ("K4 plus edge counterexample", k4_plus),
        ("clique count oracle", oracle_equivalence),
        ("planted root recovery", root_engine),
        ("format fidelity", format_fidelity),
        ("conjecture hunt integrity", hunt_integrity),
    ];
    let mut failed = Vec::new();
    for (i, (name, check)) in criteria.iter().enumerate() {
        let v = check();
        let tag = if v.pass { "PASS" } else { "FAIL" };
        println!("{tag} criterion {:>2} {name}: {}", i + 1, v.detail);
        if !v.pass {
            failed.push(i + 1);
        }
    }
    if failed.is_empty() {
        println!("all criteria pass");
        ExitCode::SUCCESS
    } else {
        println!("failed criteria: {failed:?}");
        ExitCode::FAILURE
    }
}
