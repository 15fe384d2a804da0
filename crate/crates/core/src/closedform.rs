//! Polynomial closed forms of constant-digit expansions, and a brute-force
//! search for small integer cubics satisfied by a numeric value.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use crate::arith::{floor, refine_root, PolySpec, Rational};
use crate::{Error, Result};

/// Constant digits `a` (first sequence) and `b` (second) of a period-one
/// order-2 expansion.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct Period1Params {
    a: u64,
    b: u64,
}

impl Period1Params {
    pub fn new(a: u64, b: u64) -> Result<Self> {
        if a == 0 {
            return Err(Error::InvalidParameter(
                "period-one digit a must be at least 1".into(),
            ));
        }
        Ok(Period1Params { a, b })
    }

    pub fn a(&self) -> u64 {
        self.a
    }

    pub fn b(&self) -> u64 {
        self.b
    }
}

/// `x^3 - a x^2 - b x - 1`, satisfied by the first value.
pub fn alpha_cubic(p: Period1Params) -> PolySpec {
    let (a, b) = (BigInt::from(p.a), BigInt::from(p.b));
    PolySpec::new(vec![-BigInt::one(), -b, -a, BigInt::one()])
}

/// `x^3 - 2b x^2 + (a + b^2) x - (ab + 1)`, satisfied by the second value.
pub fn beta_cubic(p: Period1Params) -> PolySpec {
    let (a, b) = (BigInt::from(p.a), BigInt::from(p.b));
    PolySpec::new(vec![
        -(&a * &b + BigInt::one()),
        &a + &b * &b,
        -(BigInt::from(2) * &b),
        BigInt::one(),
    ])
}

/// `x^(m+1) - x^m - ... - x - 1`, the closed form of all-ones digits in
/// every one of the m sequences.
pub fn allones_poly(m: usize) -> Result<PolySpec> {
    if m == 0 {
        return Err(Error::InvalidParameter("order must be at least 1".into()));
    }
    let mut coeffs = vec![-BigInt::one(); m + 1];
    coeffs.push(BigInt::one());
    Ok(PolySpec::new(coeffs))
}

/// `|poly(value)|`, exactly.
pub fn verify_root(poly: &PolySpec, value: &Rational) -> Rational {
    poly.eval(value).abs()
}

/// Isolating interval of width at most `width` around the period-one first
/// value, searched in `(a, a + 2)` and widened upward if that bracket shows
/// no sign change.
pub fn period1_alpha_root(p: Period1Params, width: &Rational) -> Result<(Rational, Rational)> {
    let a = Rational::from_integer(p.a.into());
    bracketed_root(
        &alpha_cubic(p),
        a.clone(),
        a + Rational::from_integer(2.into()),
        width,
    )
}

/// As [`period1_alpha_root`] for the second value, bracketed in `(b, b + 1)`.
pub fn period1_beta_root(p: Period1Params, width: &Rational) -> Result<(Rational, Rational)> {
    let b = Rational::from_integer(p.b.into());
    bracketed_root(&beta_cubic(p), b.clone(), b + Rational::one(), width)
}

/// Root of `allones_poly(m)` in `(1, 2)`.
pub fn allones_root(m: usize, width: &Rational) -> Result<(Rational, Rational)> {
    bracketed_root(
        &allones_poly(m)?,
        Rational::one(),
        Rational::from_integer(2.into()),
        width,
    )
}

fn bracketed_root(
    poly: &PolySpec,
    lo: Rational,
    mut hi: Rational,
    width: &Rational,
) -> Result<(Rational, Rational)> {
    for _ in 0..64 {
        if poly.sign_at(&lo) * poly.sign_at(&hi) <= 0 {
            return refine_root(poly, (lo, hi), width);
        }
        hi = &hi + (&hi - &lo);
    }
    refine_root(poly, (lo, hi), width)
}

/// A value together with a bound on its distance from the true real.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Approximation {
    pub value: Rational,
    pub radius: Rational,
}

impl Approximation {
    pub fn exact(value: Rational) -> Self {
        Approximation {
            value,
            radius: Rational::zero(),
        }
    }
}

/// Integer cubic `c3 x^3 + c2 x^2 + c1 x + c0` with its exact residual at
/// the probed value.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CubicCandidate {
    pub coeffs: [i64; 4],
    pub residual: Rational,
}

impl CubicCandidate {
    pub fn poly(&self) -> PolySpec {
        let [c3, c2, c1, c0] = self.coeffs;
        PolySpec::from_i64s(&[c0, c1, c2, c3])
    }
}

pub const MAX_HUNT_HEIGHT: i64 = 50;

/// Every primitive cubic with `1 <= c3`, `|c_i| <= height` and residual
/// below `tol` at the approximation's value, smallest residual first.
///
/// The approximation's radius, pushed through the derivative bound of the
/// tallest cubic, must stay within a third of `tol`.
pub fn cubic_hunt(
    approx: &Approximation,
    height: i64,
    tol: &Rational,
) -> Result<Vec<CubicCandidate>> {
    if !(1..=MAX_HUNT_HEIGHT).contains(&height) {
        return Err(Error::InvalidParameter(format!(
            "height must be in 1..={MAX_HUNT_HEIGHT}, got {height}"
        )));
    }
    if !tol.is_positive() {
        return Err(Error::InvalidParameter("tolerance must be positive".into()));
    }
    let h = Rational::from_integer(height.into());
    let reach = approx.value.abs() + &approx.radius;
    let slope = (1..=3u32).fold(Rational::zero(), |acc, i| {
        acc + Rational::from_integer(i.into()) * &h * num_traits::pow(reach.clone(), i as usize - 1)
    });
    let bound = &slope * &approx.radius;
    if bound * Rational::from_integer(3.into()) > *tol {
        return Err(Error::PrecisionTooLow {
            bound: crate::arith::rational_to_string(&(&slope * &approx.radius)),
            tol: crate::arith::rational_to_string(tol),
        });
    }

    // c3 p^3 + c2 p^2 q + c1 p q^2 + c0 q^3 over q^3
    let p = approx.value.numer();
    let q = approx.value.denom();
    let p3 = p * p * p;
    let p2q = p * p * q;
    let pq2 = p * q * q;
    let q3 = q * q * q;
    let q3_rat = Rational::from_integer(q3.clone());

    let mut found = Vec::new();
    for c3 in 1..=height {
        for c2 in -height..=height {
            for c1 in -height..=height {
                let partial = &p3 * c3 + &p2q * c2 + &pq2 * c1;
                let centre = floor(&(-Rational::new(partial.clone(), q3.clone())));
                for offset in 0..=1i64 {
                    let c0_big = &centre + offset;
                    let Ok(c0) = i64::try_from(&c0_big) else {
                        continue;
                    };
                    if c0.abs() > height {
                        continue;
                    }
                    let residual = Rational::from_integer((&partial + &q3 * c0).abs()) / &q3_rat;
                    if residual >= *tol {
                        continue;
                    }
                    let g = [c3, c2, c1, c0].iter().fold(0i64, |g, c| g.gcd(c));
                    if g != 1 {
                        continue;
                    }
                    found.push(CubicCandidate {
                        coeffs: [c3, c2, c1, c0],
                        residual,
                    });
                }
            }
        }
    }
    found.sort_by(|x, y| x.residual.cmp(&y.residual).then(x.coeffs.cmp(&y.coeffs)));
    Ok(found)
}
