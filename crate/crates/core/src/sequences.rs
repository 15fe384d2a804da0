//! k-bonacci sequences and their limiting ratios.

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};

use crate::arith::Rational;
use crate::{Error, Result};

/// First `n` terms of the k-bonacci sequence: `k - 1` zeros, a one, then
/// each term the sum of the previous k.
pub fn kbonacci(k: usize, n: usize) -> Result<Vec<BigInt>> {
    if k < 2 {
        return Err(Error::InvalidParameter(format!(
            "k must be at least 2, got {k}"
        )));
    }
    if n < k {
        return Err(Error::InvalidParameter(format!(
            "need at least k = {k} terms, got {n}"
        )));
    }
    let mut terms = vec![BigInt::zero(); k - 1];
    terms.push(BigInt::one());
    let mut window: BigInt = BigInt::one();
    while terms.len() < n {
        let len = terms.len();
        let next = window.clone();
        window = &window + &next - &terms[len - k];
        terms.push(next);
    }
    Ok(terms)
}

/// `t(n+1)/t(n)` once k successive pairs of consecutive ratios each differ
/// by less than `tol`. A single small difference is not enough: the
/// subdominant roots are complex for k >= 3, so the ratios oscillate and
/// occasionally nearly repeat far from the limit.
pub fn ratio_limit(k: usize, tol: &Rational) -> Result<Rational> {
    if !tol.is_positive() {
        return Err(Error::InvalidParameter("tolerance must be positive".into()));
    }
    let mut terms = kbonacci(k, k + 2)?;
    let ratio = |t: &[BigInt], i: usize| Rational::new(t[i + 1].clone(), t[i].clone());
    let mut calm = 0;
    loop {
        let n = terms.len() - 2;
        let current = ratio(&terms, n);
        let previous = ratio(&terms, n - 1);
        if (&current - &previous).abs() < *tol {
            calm += 1;
            if calm >= k {
                return Ok(current);
            }
        } else {
            calm = 0;
        }
        let next: BigInt = terms[terms.len() - k..].iter().sum();
        terms.push(next);
    }
}
