//! Exact univariate polynomials over the integers.
//!
//! Everything here is exact: coefficients are big integers and evaluation
//! happens at big rationals. The clique-polynomial specific helpers
//! ([`clique_polynomial`], [`disjoint_union_combine`], [`d_clique`]) sit on
//! top of the generic ring operations.

use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::{BigInt, BigUint, Sign};
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};
use serde::{Serialize, Serializer};
use thiserror::Error;

use crate::cliques::CliqueCounts;

/// Exact rational number; always stored reduced with a positive denominator.
pub type Rational = BigRational;

pub fn rational(num: i64, den: i64) -> Rational {
    Rational::new(BigInt::from(num), BigInt::from(den))
}

pub fn integer(value: i64) -> Rational {
    Rational::from_integer(BigInt::from(value))
}

/// Renders a rational as `"p/q"`, including `q = 1`.
pub fn format_rational(q: &Rational) -> String {
    format!("{}/{}", q.numer(), q.denom())
}

/// Parses the `"p/q"` (or bare integer) form produced by [`format_rational`].
pub fn parse_rational(text: &str) -> Option<Rational> {
    let (p, q) = match text.split_once('/') {
        Some((p, q)) => (p.trim().parse::<BigInt>().ok()?, q.trim().parse::<BigInt>().ok()?),
        None => (text.trim().parse::<BigInt>().ok()?, BigInt::one()),
    };
    if q.is_zero() {
        return None;
    }
    Some(Rational::new(p, q))
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum PolynomialError {
    #[error("constant term is {0}, expected 1 for a clique polynomial")]
    ConstantTermNotOne(BigInt),
    #[error("operation is undefined for the zero polynomial")]
    ZeroPolynomial,
}

/// Integer-coefficient polynomial; `coeffs[i]` multiplies `x^i`.
///
/// The coefficient vector never has a trailing zero, so the zero polynomial
/// is the empty vector.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Default)]
pub struct Polynomial {
    coeffs: Vec<BigInt>,
}

impl Polynomial {
    pub fn new(mut coeffs: Vec<BigInt>) -> Self {
        while coeffs.last().is_some_and(Zero::is_zero) {
            coeffs.pop();
        }
        Polynomial { coeffs }
    }

    pub fn from_i64s(coeffs: &[i64]) -> Self {
        Polynomial::new(coeffs.iter().map(|&c| BigInt::from(c)).collect())
    }

    pub fn zero() -> Self {
        Polynomial { coeffs: Vec::new() }
    }

    pub fn constant(c: BigInt) -> Self {
        Polynomial::new(vec![c])
    }

    /// `a*x + b`.
    pub fn linear(a: BigInt, b: BigInt) -> Self {
        Polynomial::new(vec![b, a])
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn coeffs(&self) -> &[BigInt] {
        &self.coeffs
    }

    pub fn coeff(&self, i: usize) -> BigInt {
        self.coeffs.get(i).cloned().unwrap_or_default()
    }

    pub fn leading(&self) -> Option<&BigInt> {
        self.coeffs.last()
    }

    /// Horner evaluation at an exact rational.
    pub fn evaluate_at(&self, q: &Rational) -> Rational {
        let mut acc = Rational::zero();
        for c in self.coeffs.iter().rev() {
            acc = acc * q + Rational::from_integer(c.clone());
        }
        acc
    }

    /// Sign of `self(q)` without building the reduced rational value.
    ///
    /// Uses the homogenised form `Σ c_i p^i q^(d-i)` with `q > 0`.
    pub fn sign_at(&self, q: &Rational) -> Sign {
        let (p, d) = (q.numer(), q.denom());
        let mut acc = BigInt::zero();
        let mut dpow = BigInt::one();
        for c in self.coeffs.iter().rev() {
            acc = acc * p + c * &dpow;
            dpow *= d;
        }
        acc.sign()
    }

    pub fn derivative(&self) -> Polynomial {
        Polynomial::new(
            self.coeffs
                .iter()
                .enumerate()
                .skip(1)
                .map(|(i, c)| c * BigInt::from(i))
                .collect(),
        )
    }

    pub fn scale(&self, k: &BigInt) -> Polynomial {
        Polynomial::new(self.coeffs.iter().map(|c| c * k).collect())
    }

    /// Multiplies by `x^k`.
    pub fn shift(&self, k: usize) -> Polynomial {
        if self.is_zero() {
            return Polynomial::zero();
        }
        let mut coeffs = vec![BigInt::zero(); k];
        coeffs.extend(self.coeffs.iter().cloned());
        Polynomial { coeffs }
    }

    pub fn pow(&self, mut e: u32) -> Polynomial {
        let mut base = self.clone();
        let mut acc = Polynomial::constant(BigInt::one());
        while e > 0 {
            if e & 1 == 1 {
                acc = &acc * &base;
            }
            base = &base * &base;
            e >>= 1;
        }
        acc
    }

    /// gcd of the coefficients (non-negative).
    pub fn content(&self) -> BigInt {
        self.coeffs.iter().fold(BigInt::zero(), |g, c| g.gcd(c))
    }

    /// Divides out the content and makes the leading coefficient positive.
    pub fn primitive_part(&self) -> Polynomial {
        let Some(lead) = self.leading() else {
            return Polynomial::zero();
        };
        let mut g = self.content();
        if lead.is_negative() {
            g = -g;
        }
        Polynomial::new(self.coeffs.iter().map(|c| c / &g).collect())
    }

    /// Remainder of `lc(d)^(deg self - deg d + 1) * self` modulo `d`,
    /// scaled so that the multiplier is positive. Hence the result is a
    /// positive multiple of the true remainder over the rationals.
    pub fn pseudo_remainder(&self, d: &Polynomial) -> Polynomial {
        let dd = d.degree().expect("pseudo-remainder by the zero polynomial");
        let lead = d.leading().unwrap().abs();
        let dsign = d.leading().unwrap().signum();
        let mut r = self.coeffs.clone();
        while r.len() > dd && !r.is_empty() {
            let top = r.len() - 1;
            let c = r[top].clone() * &dsign;
            for x in r.iter_mut() {
                *x *= &lead;
            }
            for (i, dc) in d.coeffs.iter().enumerate() {
                r[top - dd + i] -= &c * dc;
            }
            debug_assert!(r[top].is_zero());
            r.pop();
            while r.last().is_some_and(Zero::is_zero) {
                r.pop();
            }
        }
        Polynomial::new(r)
    }

    /// Exact quotient `self / d` in `Z[x]`, or `None` if `d` does not divide.
    pub fn div_exact(&self, d: &Polynomial) -> Option<Polynomial> {
        let dd = d.degree()?;
        if self.is_zero() {
            return Some(Polynomial::zero());
        }
        let lead = d.leading().unwrap();
        let mut r = self.coeffs.clone();
        if r.len() <= dd {
            return None;
        }
        let mut q = vec![BigInt::zero(); r.len() - dd];
        for top in (dd..r.len()).rev() {
            let (quot, rem) = r[top].div_rem(lead);
            if !rem.is_zero() {
                return None;
            }
            for (i, dc) in d.coeffs.iter().enumerate() {
                r[top - dd + i] -= &quot * dc;
            }
            q[top - dd] = quot;
        }
        if r.iter().all(Zero::is_zero) {
            Some(Polynomial::new(q))
        } else {
            None
        }
    }

    /// Primitive gcd with positive leading coefficient; `gcd(0, 0) = 0`.
    pub fn gcd(&self, other: &Polynomial) -> Polynomial {
        let (mut a, mut b) = (self.primitive_part(), other.primitive_part());
        if a.degree() < b.degree() {
            std::mem::swap(&mut a, &mut b);
        }
        while !b.is_zero() {
            let r = a.pseudo_remainder(&b).primitive_part();
            a = b;
            b = r;
        }
        a
    }
}

impl Add for &Polynomial {
    type Output = Polynomial;
    fn add(self, rhs: &Polynomial) -> Polynomial {
        let len = self.coeffs.len().max(rhs.coeffs.len());
        Polynomial::new((0..len).map(|i| self.coeff(i) + rhs.coeff(i)).collect())
    }
}

impl Sub for &Polynomial {
    type Output = Polynomial;
    fn sub(self, rhs: &Polynomial) -> Polynomial {
        let len = self.coeffs.len().max(rhs.coeffs.len());
        Polynomial::new((0..len).map(|i| self.coeff(i) - rhs.coeff(i)).collect())
    }
}

impl Mul for &Polynomial {
    type Output = Polynomial;
    fn mul(self, rhs: &Polynomial) -> Polynomial {
        if self.is_zero() || rhs.is_zero() {
            return Polynomial::zero();
        }
        let mut out = vec![BigInt::zero(); self.coeffs.len() + rhs.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            for (j, b) in rhs.coeffs.iter().enumerate() {
                out[i + j] += a * b;
            }
        }
        Polynomial::new(out)
    }
}

impl Neg for &Polynomial {
    type Output = Polynomial;
    fn neg(self) -> Polynomial {
        Polynomial::new(self.coeffs.iter().map(|c| -c).collect())
    }
}

/// Human-readable form such as `1 + 4x + 4x^2 + x^3`.
impl fmt::Display for Polynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return f.write_str("0");
        }
        let mut first = true;
        for (i, c) in self.coeffs.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            let mag = c.abs();
            if first {
                if c.is_negative() {
                    f.write_str("-")?;
                }
            } else if c.is_negative() {
                f.write_str(" - ")?;
            } else {
                f.write_str(" + ")?;
            }
            first = false;
            match i {
                0 => write!(f, "{mag}")?,
                _ => {
                    if !mag.is_one() {
                        write!(f, "{mag}")?;
                    }
                    if i == 1 {
                        f.write_str("x")?;
                    } else {
                        write!(f, "x^{i}")?;
                    }
                }
            }
        }
        Ok(())
    }
}

impl Serialize for Polynomial {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        self.coeffs.iter().map(ToString::to_string).collect::<Vec<_>>().serialize(s)
    }
}

/// `C(G, x)`: the clique counts read as coefficients.
pub fn clique_polynomial(counts: &CliqueCounts) -> Polynomial {
    Polynomial::new(counts.as_slice().iter().map(|c| BigInt::from(c.clone())).collect())
}

/// Clique polynomial of a disjoint union: `P1 + P2 - 1`.
pub fn disjoint_union_combine(p1: &Polynomial, p2: &Polynomial) -> Result<Polynomial, PolynomialError> {
    for p in [p1, p2] {
        if !p.coeff(0).is_one() {
            return Err(PolynomialError::ConstantTermNotOne(p.coeff(0)));
        }
    }
    Ok(&(p1 + p2) - &Polynomial::constant(BigInt::one()))
}

/// `|#odd cliques - #even cliques|` over sizes `k >= 1`, which is
/// `|1 - P(-1)|`.
pub fn d_clique(p: &Polynomial) -> BigUint {
    let at_minus_one: BigInt = p
        .coeffs
        .iter()
        .enumerate()
        .map(|(i, c)| if i % 2 == 0 { c.clone() } else { -c })
        .sum();
    (BigInt::one() - at_minus_one).magnitude().clone()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::cliques::count_cliques;
    use crate::graph::fixtures::g1;
    use crate::graph::Graph;

    fn p(xs: &[i64]) -> Polynomial {
        Polynomial::from_i64s(xs)
    }

    fn cp(g: &Graph) -> Polynomial {
        clique_polynomial(&count_cliques(g))
    }

    #[test]
    fn clique_polynomials() {
        assert_eq!(cp(&g1()), p(&[1, 4, 4, 1]));
        assert_eq!(cp(&g1()).to_string(), "1 + 4x + 4x^2 + x^3");
        let one_plus_x = p(&[1, 1]);
        for n in 0..7 {
            assert_eq!(cp(&Graph::complete(n)), one_plus_x.pow(n as u32));
        }
        assert_eq!(cp(&Graph::empty(0)), p(&[1]));
    }

    #[test]
    fn evaluation() {
        assert_eq!(p(&[1, 4, 4, 1]).evaluate_at(&integer(-1)), integer(0));
        assert_eq!(p(&[1, 5, 5]).evaluate_at(&integer(-1)), integer(1));
        assert_eq!(cp(&Graph::wheel(5)), p(&[1, 6, 10, 5]));
        assert_eq!(p(&[1, 6, 10, 5]).evaluate_at(&integer(-1)), integer(0));
        assert_eq!(p(&[1, 6, 10, 5]).derivative().evaluate_at(&rational(-1, 2)), rational(-1, 4));
    }

    #[test]
    fn sign_matches_value() {
        let q = p(&[3, -7, 0, 2, -1]);
        for (a, b) in [(-5, 3), (1, 2), (7, 4), (0, 1), (-13, 9)] {
            let r = rational(a, b);
            assert_eq!(q.sign_at(&r), q.evaluate_at(&r).numer().sign());
        }
    }

    #[test]
    fn derivatives() {
        assert_eq!(p(&[1, 4, 4, 1]).derivative(), p(&[4, 8, 3]));
        assert_eq!(p(&[1]).derivative(), Polynomial::zero());
        assert_eq!(p(&[1, 1]).pow(4).derivative(), p(&[4, 12, 12, 4]));
    }

    #[test]
    fn disjoint_union() {
        let k1 = p(&[1, 1]);
        assert_eq!(disjoint_union_combine(&k1, &k1).unwrap(), p(&[1, 2]));
        let k2 = cp(&Graph::complete(2));
        let two_k2 = cp(&Graph::complete(2).disjoint_union(&Graph::complete(2)));
        assert_eq!(two_k2, p(&[1, 4, 2]));
        assert_eq!(disjoint_union_combine(&k2, &k2).unwrap(), two_k2);
        let k3 = cp(&Graph::complete(3));
        assert_eq!(disjoint_union_combine(&k3, &p(&[1])).unwrap(), k3);
        assert_eq!(
            disjoint_union_combine(&k3, &p(&[2, 1])),
            Err(PolynomialError::ConstantTermNotOne(BigInt::from(2)))
        );
    }

    #[test]
    fn d_clique_values() {
        assert_eq!(d_clique(&cp(&g1())), BigUint::from(1u32));
        assert_eq!(d_clique(&cp(&Graph::complete(4))), BigUint::from(1u32));
        assert_eq!(cp(&Graph::octahedron()), p(&[1, 6, 12, 8]));
        assert_eq!(d_clique(&cp(&Graph::octahedron())), BigUint::from(2u32));
    }

    #[test]
    fn gcd_and_division() {
        let a = p(&[1, 1]);
        let b = p(&[1, 3, 1]);
        let prod = &(&a * &a) * &b;
        assert_eq!(prod.gcd(&prod.derivative()), a);
        assert_eq!(prod.div_exact(&a), Some(&a * &b));
        assert_eq!(b.div_exact(&a), None);
        assert_eq!(p(&[-2, -4]).primitive_part(), p(&[1, 2]));
        assert_eq!(p(&[4, -6, 2]).gcd(&p(&[-3, 3])), p(&[-1, 1]));
    }

    #[test]
    fn display_forms() {
        assert_eq!(p(&[0, -1, 0, 3]).to_string(), "-x + 3x^3");
        assert_eq!(p(&[-2, 1]).to_string(), "-2 + x");
        assert_eq!(Polynomial::zero().to_string(), "0");
    }

    #[test]
    fn rational_strings() {
        assert_eq!(format_rational(&rational(-2, 4)), "-1/2");
        assert_eq!(format_rational(&integer(0)), "0/1");
        assert_eq!(parse_rational("-1/2"), Some(rational(-1, 2)));
        assert_eq!(parse_rational("3"), Some(integer(3)));
        assert_eq!(parse_rational("1/0"), None);
    }
}
