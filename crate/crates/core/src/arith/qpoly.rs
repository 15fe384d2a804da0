//! Dense polynomials over the rationals, ascending coefficients.

use num_traits::{Signed, Zero};

use super::Rational;

pub(crate) type QPoly = Vec<Rational>;

pub(crate) fn trim(mut p: QPoly) -> QPoly {
    while p.last().is_some_and(Zero::is_zero) {
        p.pop();
    }
    p
}

pub(crate) fn mul(a: &[Rational], b: &[Rational]) -> QPoly {
    if a.is_empty() || b.is_empty() {
        return Vec::new();
    }
    let mut out = vec![Rational::zero(); a.len() + b.len() - 1];
    for (i, x) in a.iter().enumerate() {
        if x.is_zero() {
            continue;
        }
        for (j, y) in b.iter().enumerate() {
            out[i + j] += x * y;
        }
    }
    trim(out)
}

pub(crate) fn sub(a: &[Rational], b: &[Rational]) -> QPoly {
    let n = a.len().max(b.len());
    let out = (0..n)
        .map(|i| {
            let x = a.get(i).cloned().unwrap_or_default();
            let y = b.get(i).cloned().unwrap_or_default();
            x - y
        })
        .collect();
    trim(out)
}

/// Quotient and remainder of `a / b`; `b` must be nonzero.
pub(crate) fn divrem(a: &[Rational], b: &[Rational]) -> (QPoly, QPoly) {
    let b = trim(b.to_vec());
    assert!(!b.is_empty(), "polynomial division by zero");
    let mut rem = trim(a.to_vec());
    if rem.len() < b.len() {
        return (Vec::new(), rem);
    }
    let lead = b.last().unwrap().clone();
    let mut quot = vec![Rational::zero(); rem.len() - b.len() + 1];
    while rem.len() >= b.len() {
        let shift = rem.len() - b.len();
        let factor = rem.last().unwrap() / &lead;
        for (i, c) in b.iter().enumerate() {
            rem[shift + i] -= &factor * c;
        }
        quot[shift] = factor;
        // the leading term cancels exactly
        rem.pop();
        rem = trim(rem);
    }
    (trim(quot), rem)
}

/// Extended Euclid: returns `(g, s)` with `s * a == g (mod b)` and `g`
/// the monic gcd of `a` and `b`.
pub(crate) fn gcd_with_cofactor(a: &[Rational], b: &[Rational]) -> (QPoly, QPoly) {
    let mut r0 = trim(b.to_vec());
    let mut r1 = trim(a.to_vec());
    let mut s0: QPoly = Vec::new();
    let mut s1: QPoly = vec![Rational::from_integer(1.into())];
    while !r1.is_empty() {
        let (q, r) = divrem(&r0, &r1);
        let s = sub(&s0, &mul(&q, &s1));
        r0 = std::mem::replace(&mut r1, r);
        s0 = std::mem::replace(&mut s1, s);
    }
    let lead = r0.last().cloned().expect("gcd of nonzero polynomials");
    let g = r0.into_iter().map(|c| c / &lead).collect();
    let s = s0.into_iter().map(|c| c / &lead).collect();
    (g, s)
}

pub(crate) fn derivative(p: &[Rational]) -> QPoly {
    trim(
        p.iter()
            .enumerate()
            .skip(1)
            .map(|(i, c)| c * Rational::from_integer(i.into()))
            .collect(),
    )
}

pub(crate) fn eval(p: &[Rational], x: &Rational) -> Rational {
    p.iter().rev().fold(Rational::zero(), |acc, c| acc * x + c)
}

/// Number of distinct real roots of `p` in the half-open interval
/// `(lo, hi]`, by Sturm sequence sign variations.
pub(crate) fn sturm_count(p: &[Rational], lo: &Rational, hi: &Rational) -> usize {
    let mut chain = vec![trim(p.to_vec()), derivative(p)];
    loop {
        let n = chain.len();
        if chain[n - 1].is_empty() {
            chain.pop();
            break;
        }
        let (_, r) = divrem(&chain[n - 2], &chain[n - 1]);
        let neg: QPoly = r.into_iter().map(|c| -c).collect();
        chain.push(neg);
    }
    let variations = |x: &Rational| {
        let signs: Vec<bool> = chain
            .iter()
            .map(|q| eval(q, x))
            .filter(|v| !v.is_zero())
            .map(|v| v.is_positive())
            .collect();
        signs.windows(2).filter(|w| w[0] != w[1]).count()
    };
    variations(lo).saturating_sub(variations(hi))
}
