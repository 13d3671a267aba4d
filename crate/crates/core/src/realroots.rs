//! Exact real-root analysis for integer polynomials.
//!
//! Root decisions never touch floating point: square-free decomposition by
//! polynomial gcds, Sturm sequences evaluated at rationals, and bisection
//! from the Cauchy bound. Floats only appear in [`approximate_roots`].

use num_bigint::{BigInt, Sign};
use num_traits::{One, Signed, ToPrimitive, Zero};
use serde::ser::SerializeStruct;
use serde::{Serialize, Serializer};
use thiserror::Error;

use crate::polynomial::{format_rational, integer, Polynomial, Rational};

#[derive(Debug, Clone, PartialEq, Error)]
pub enum RootError {
    #[error("operation is undefined for the zero polynomial")]
    ZeroPolynomial,
    #[error("empty interval ({lo}, {hi}]")]
    EmptyInterval { lo: String, hi: String },
    #[error("tolerance must be a positive finite number, got {0}")]
    InvalidTolerance(f64),
    #[error("clique polynomial {0} has no real root in [-1, 0)")]
    BaselineViolation(String),
}

/// Square-free part `P / gcd(P, P')`, primitive with positive leading
/// coefficient.
pub fn square_free_part(p: &Polynomial) -> Result<Polynomial, RootError> {
    if p.is_zero() {
        return Err(RootError::ZeroPolynomial);
    }
    let prim = p.primitive_part();
    let g = prim.gcd(&prim.derivative());
    if g.is_zero() {
        // constant input
        return Ok(Polynomial::constant(BigInt::one()));
    }
    Ok(prim.div_exact(&g).expect("gcd divides").primitive_part())
}

/// Yun's square-free factorisation of the primitive part of `p`:
/// `factors[i]` collects the roots of multiplicity exactly `i + 1`.
pub fn square_free_factors(p: &Polynomial) -> Result<Vec<Polynomial>, RootError> {
    if p.is_zero() {
        return Err(RootError::ZeroPolynomial);
    }
    let f = p.primitive_part();
    let mut factors = Vec::new();
    if f.degree() == Some(0) {
        return Ok(factors);
    }
    let mut c = f.gcd(&f.derivative());
    let mut w = f.div_exact(&c).expect("gcd divides").primitive_part();
    while w.degree() != Some(0) {
        let y = w.gcd(&c);
        let z = w.div_exact(&y).expect("gcd divides").primitive_part();
        factors.push(z);
        c = c.div_exact(&y).expect("gcd divides").primitive_part();
        w = y;
    }
    Ok(factors)
}

/// Sturm sequence of a square-free polynomial.
#[derive(Debug, Clone)]
pub struct SturmSequence {
    chain: Vec<Polynomial>,
}

impl SturmSequence {
    /// Builds the chain `p, p', -rem(p, p'), ...` for a square-free `p`,
    /// keeping each term primitive (positive rescaling preserves signs).
    pub fn new(p: &Polynomial) -> Self {
        let mut chain = vec![p.clone()];
        let d = p.derivative();
        if !d.is_zero() {
            let g = d.content();
            chain.push(Polynomial::new(d.coeffs().iter().map(|c| c / &g).collect()));
            loop {
                let k = chain.len();
                let r = chain[k - 2].pseudo_remainder(&chain[k - 1]);
                if r.is_zero() {
                    break;
                }
                let mut r = -&r;
                let g = r.content();
                r = Polynomial::new(r.coeffs().iter().map(|c| c / &g).collect());
                chain.push(r);
            }
        }
        SturmSequence { chain }
    }

    pub fn polynomial(&self) -> &Polynomial {
        &self.chain[0]
    }

    /// Sign changes along the chain at `x`, zeros skipped.
    pub fn variations(&self, x: &Rational) -> usize {
        let mut last = Sign::NoSign;
        let mut count = 0;
        for p in &self.chain {
            let s = p.sign_at(x);
            if s == Sign::NoSign {
                continue;
            }
            if last != Sign::NoSign && s != last {
                count += 1;
            }
            last = s;
        }
        count
    }

    /// Variations at `+∞` or `-∞`.
    fn variations_at_infinity(&self, positive: bool) -> usize {
        let mut last = Sign::NoSign;
        let mut count = 0;
        for p in &self.chain {
            let deg = p.degree().unwrap_or(0);
            let mut s = p.leading().map_or(Sign::NoSign, BigInt::sign);
            if !positive && deg % 2 == 1 {
                s = -s;
            }
            if s == Sign::NoSign {
                continue;
            }
            if last != Sign::NoSign && s != last {
                count += 1;
            }
            last = s;
        }
        count
    }

    /// Distinct roots in the half-open interval `(lo, hi]`.
    pub fn count(&self, lo: &Rational, hi: &Rational) -> usize {
        self.variations(lo) - self.variations(hi)
    }

    /// Distinct real roots overall.
    pub fn count_all(&self) -> usize {
        self.variations_at_infinity(false) - self.variations_at_infinity(true)
    }
}

/// Number of distinct real roots of `p` in `(lo, hi]`.
pub fn count_real_roots(p: &Polynomial, lo: &Rational, hi: &Rational) -> Result<usize, RootError> {
    if lo >= hi {
        return Err(RootError::EmptyInterval {
            lo: format_rational(lo),
            hi: format_rational(hi),
        });
    }
    let sf = square_free_part(p)?;
    Ok(SturmSequence::new(&sf).count(lo, hi))
}

/// Largest `k` with `(x - r)^k` dividing `p`. The zero polynomial yields 0.
pub fn multiplicity_at(p: &Polynomial, r: &Rational) -> usize {
    if p.is_zero() {
        return 0;
    }
    // r = a/b in lowest terms, so b*x - a is primitive and divides p in Z[x]
    // whenever r is a root.
    let factor = Polynomial::linear(r.denom().clone(), -r.numer().clone());
    let mut q = p.clone();
    let mut k = 0;
    while let Some(next) = q.div_exact(&factor) {
        q = next;
        k += 1;
    }
    k
}

/// Where a distinct real root sits.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum RootLocation {
    Exact(Rational),
    /// The half-open interval `(lo, hi]` holds exactly this one root.
    Interval { lo: Rational, hi: Rational },
}

impl RootLocation {
    /// Interval form; exact roots give `(r, r)`.
    pub fn bounds(&self) -> (&Rational, &Rational) {
        match self {
            RootLocation::Exact(r) => (r, r),
            RootLocation::Interval { lo, hi } => (lo, hi),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RealRoot {
    pub location: RootLocation,
    pub multiplicity: usize,
}

impl Serialize for RealRoot {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        let mut st = s.serialize_struct("RealRoot", 2)?;
        match &self.location {
            RootLocation::Exact(r) => st.serialize_field("exact", &format_rational(r))?,
            RootLocation::Interval { lo, hi } => {
                st.serialize_field("interval", &[format_rational(lo), format_rational(hi)])?
            }
        }
        st.serialize_field("multiplicity", &self.multiplicity)?;
        st.end()
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct RootReport {
    pub degree: usize,
    pub distinct_real_roots: usize,
    pub all_real: bool,
    /// Real roots in increasing order.
    pub roots: Vec<RealRoot>,
    pub multiplicity_at_minus_one: usize,
    /// Distinct real roots in `[-1, 0)`.
    pub roots_in_minus_one_zero: usize,
    pub square_free_part: Polynomial,
}

/// `1 + max |c_i| / |c_d|`; every root lies strictly inside `(-B, B)`.
fn cauchy_bound(p: &Polynomial) -> Rational {
    let lead = p.leading().expect("nonzero").abs();
    let max = p.coeffs().iter().map(Signed::abs).max().unwrap_or_default();
    Rational::one() + Rational::new(max, lead)
}

fn isolate(sturm: &SturmSequence, lo: Rational, hi: Rational, k: usize, out: &mut Vec<RootLocation>) {
    if k == 0 {
        return;
    }
    let p = sturm.polynomial();
    if k == 1 {
        if p.sign_at(&hi) == Sign::NoSign {
            out.push(RootLocation::Exact(hi));
        } else {
            out.push(RootLocation::Interval { lo, hi });
        }
        return;
    }
    let mid = (&lo + &hi) / integer(2);
    let left = sturm.count(&lo, &mid);
    isolate(sturm, lo, mid.clone(), left, out);
    isolate(sturm, mid, hi, k - left, out);
}

/// Largest coefficient magnitude for which rational roots are searched.
const RATIONAL_ROOT_LIMIT: u64 = 1 << 40;

fn divisors(x: u64) -> Vec<u64> {
    let mut small = Vec::new();
    let mut large = Vec::new();
    let mut d = 1;
    while d * d <= x {
        if x.is_multiple_of(d) {
            small.push(d);
            if d * d != x {
                large.push(x / d);
            }
        }
        d += 1;
    }
    small.extend(large.into_iter().rev());
    small
}

/// Rational roots of a square-free integer polynomial, by the rational root
/// test. Returns `None` when the extreme coefficients are too large to
/// enumerate their divisors.
fn rational_roots(p: &Polynomial) -> Option<Vec<Rational>> {
    let shift = p.coeffs().iter().position(|c| !c.is_zero())?;
    let low = p.coeffs()[shift].abs().to_u64().filter(|&x| x <= RATIONAL_ROOT_LIMIT)?;
    let lead = p.leading()?.abs().to_u64().filter(|&x| x <= RATIONAL_ROOT_LIMIT)?;
    let mut roots = Vec::new();
    if shift > 0 {
        roots.push(Rational::zero());
    }
    let dens = divisors(lead);
    for num in divisors(low) {
        for &den in &dens {
            if num_integer::Integer::gcd(&num, &den) != 1 {
                continue;
            }
            for sign in [-1i64, 1] {
                let r = Rational::new(BigInt::from(num) * sign, BigInt::from(den));
                if p.sign_at(&r) == Sign::NoSign {
                    roots.push(r);
                }
            }
        }
    }
    roots.sort();
    Some(roots)
}

/// Distinct roots of `p` in `[lo, hi)`.
pub fn count_roots_closed_open(p: &Polynomial, lo: &Rational, hi: &Rational) -> Result<usize, RootError> {
    let sf = square_free_part(p)?;
    let n = SturmSequence::new(&sf).count(lo, hi);
    let at_lo = usize::from(sf.sign_at(lo) == Sign::NoSign);
    let at_hi = usize::from(sf.sign_at(hi) == Sign::NoSign);
    Ok(n + at_lo - at_hi)
}

/// Full exact root report for a nonzero polynomial.
pub fn analyze_roots(p: &Polynomial) -> Result<RootReport, RootError> {
    let degree = p.degree().ok_or(RootError::ZeroPolynomial)?;
    let sf = square_free_part(p)?;
    let sturm = SturmSequence::new(&sf);
    let mut locations = Vec::new();
    let total = sturm.count_all();
    if total > 0 {
        let b = cauchy_bound(&sf);
        isolate(&sturm, -b.clone(), b, total, &mut locations);
    }

    if let Some(exact) = rational_roots(&sf) {
        for loc in locations.iter_mut() {
            if let RootLocation::Interval { lo, hi } = loc {
                if let Some(r) = exact.iter().find(|r| *r > lo && *r <= hi) {
                    *loc = RootLocation::Exact(r.clone());
                }
            }
        }
    }

    let factors: Vec<SturmSequence> = square_free_factors(p)?.iter().map(SturmSequence::new).collect();
    let roots: Vec<RealRoot> = locations
        .into_iter()
        .map(|location| {
            let multiplicity = match &location {
                RootLocation::Exact(r) => multiplicity_at(p, r),
                RootLocation::Interval { lo, hi } => factors
                    .iter()
                    .position(|f| f.count(lo, hi) == 1)
                    .map(|i| i + 1)
                    .expect("each root belongs to one square-free factor"),
            };
            RealRoot { location, multiplicity }
        })
        .collect();

    let real_with_mult: usize = roots.iter().map(|r| r.multiplicity).sum();
    Ok(RootReport {
        degree,
        distinct_real_roots: roots.len(),
        all_real: real_with_mult == degree,
        multiplicity_at_minus_one: multiplicity_at(p, &integer(-1)),
        roots_in_minus_one_zero: count_roots_closed_open(p, &integer(-1), &integer(0))?,
        roots,
        square_free_part: sf,
    })
}

/// [`analyze_roots`] for clique polynomials, which always have a real root
/// in `[-1, 0)`. A missing root there is reported as an error since it
/// signals a bug upstream.
pub fn analyze_clique_polynomial(p: &Polynomial) -> Result<RootReport, RootError> {
    let report = analyze_roots(p)?;
    if report.degree > 0 && report.roots_in_minus_one_zero == 0 {
        return Err(RootError::BaselineViolation(p.to_string()));
    }
    Ok(report)
}

/// Float approximations of the real roots in increasing order, repeated
/// roots listed once. Intervals are bisected until narrower than `tol`.
pub fn approximate_roots(report: &RootReport, tol: f64) -> Result<Vec<f64>, RootError> {
    if !(tol.is_finite() && tol > 0.0) {
        return Err(RootError::InvalidTolerance(tol));
    }
    let sturm = SturmSequence::new(&report.square_free_part);
    let sf = &report.square_free_part;
    let mut out = Vec::with_capacity(report.roots.len());
    for root in &report.roots {
        let value = match &root.location {
            RootLocation::Exact(r) => r.to_f64().unwrap_or(f64::NAN),
            RootLocation::Interval { lo, hi } => {
                let (mut lo, mut hi) = (lo.clone(), hi.clone());
                let mut exact = None;
                while (&hi - &lo).to_f64().unwrap_or(f64::INFINITY) >= tol {
                    let mid = (&lo + &hi) / integer(2);
                    if sf.sign_at(&mid) == Sign::NoSign {
                        exact = Some(mid);
                        break;
                    }
                    if sturm.count(&lo, &mid) == 1 {
                        hi = mid;
                    } else {
                        lo = mid;
                    }
                }
                let r = exact.unwrap_or_else(|| (&lo + &hi) / integer(2));
                r.to_f64().unwrap_or(f64::NAN)
            }
        };
        out.push(value);
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::polynomial::rational;

    fn p(xs: &[i64]) -> Polynomial {
        Polynomial::from_i64s(xs)
    }

    #[test]
    fn square_free_parts() {
        assert_eq!(square_free_part(&p(&[1, 1]).pow(4)).unwrap(), p(&[1, 1]));
        assert_eq!(square_free_part(&p(&[1, 3, 1])).unwrap(), p(&[1, 3, 1]));
        assert_eq!(square_free_part(&p(&[1, 6, 12, 8])).unwrap(), p(&[1, 2]));
        assert_eq!(square_free_part(&p(&[5])).unwrap(), p(&[1]));
        assert_eq!(square_free_part(&Polynomial::zero()), Err(RootError::ZeroPolynomial));
    }

    #[test]
    fn yun_factors() {
        let a = p(&[1, 1]);
        let b = p(&[1, 3, 1]);
        let c = p(&[1, 0, 1]);
        let f = &(&a.pow(3) * &b) * &c.pow(2);
        let factors = square_free_factors(&f).unwrap();
        assert_eq!(factors, vec![b, c, a]);
    }

    #[test]
    fn sturm_counts() {
        assert_eq!(count_real_roots(&p(&[1, 3, 1]), &integer(-4), &integer(0)).unwrap(), 2);
        assert_eq!(count_real_roots(&p(&[1, 1, 1]), &integer(-10), &integer(10)).unwrap(), 0);
        let g1 = &p(&[1, 1]) * &p(&[1, 3, 1]);
        assert_eq!(g1, p(&[1, 4, 4, 1]));
        assert_eq!(count_real_roots(&g1, &integer(-10), &integer(10)).unwrap(), 3);
        // a root at the right endpoint is counted, at the left it is not
        assert_eq!(count_real_roots(&g1, &integer(-2), &integer(-1)).unwrap(), 1);
        assert_eq!(count_real_roots(&g1, &integer(-1), &integer(0)).unwrap(), 1);
        assert!(count_real_roots(&g1, &integer(1), &integer(1)).is_err());
    }

    #[test]
    fn figure_graph_report() {
        let r = analyze_roots(&p(&[1, 4, 4, 1])).unwrap();
        assert!(r.all_real);
        assert_eq!(r.distinct_real_roots, 3);
        assert_eq!(r.multiplicity_at_minus_one, 1);
        let approx = approximate_roots(&r, 1e-9).unwrap();
        let s5 = 5f64.sqrt();
        let expected = [(-3.0 - s5) / 2.0, -1.0, (-3.0 + s5) / 2.0];
        for (a, e) in approx.iter().zip(expected) {
            assert!((a - e).abs() < 1e-9, "{a} vs {e}");
        }
    }

    #[test]
    fn pendant_k4_report() {
        let r = analyze_roots(&p(&[1, 5, 7, 4, 1])).unwrap();
        assert!(!r.all_real);
        assert_eq!(r.distinct_real_roots, 2);
        assert_eq!(r.multiplicity_at_minus_one, 1);
    }

    #[test]
    fn repeated_root_report() {
        let r = analyze_roots(&p(&[1, 1]).pow(4)).unwrap();
        assert!(r.all_real);
        assert_eq!(
            r.roots,
            vec![RealRoot { location: RootLocation::Exact(integer(-1)), multiplicity: 4 }]
        );
    }

    #[test]
    fn multiplicities() {
        assert_eq!(multiplicity_at(&p(&[1, 1]).pow(4), &integer(-1)), 4);
        assert_eq!(multiplicity_at(&p(&[1, 6, 10, 5]), &integer(-1)), 1);
        assert_eq!(multiplicity_at(&p(&[1, 5, 5]), &integer(-1)), 0);
        assert_eq!(multiplicity_at(&p(&[1, 2]).pow(3), &rational(-1, 2)), 3);
    }

    #[test]
    fn approximations() {
        let r = analyze_roots(&p(&[1, 2])).unwrap();
        assert_eq!(approximate_roots(&r, 1e-12).unwrap(), vec![-0.5]);
        let none = analyze_roots(&p(&[1, 0, 1])).unwrap();
        assert!(approximate_roots(&none, 1e-12).unwrap().is_empty());
        assert!(approximate_roots(&none, 0.0).is_err());
    }

    #[test]
    fn baseline_check() {
        assert!(analyze_clique_polynomial(&p(&[1, 5, 5])).is_ok());
        assert!(matches!(
            analyze_clique_polynomial(&p(&[1, 0, 1])),
            Err(RootError::BaselineViolation(_))
        ));
        assert_eq!(count_roots_closed_open(&p(&[1, 1]), &integer(-1), &integer(0)).unwrap(), 1);
    }
}
