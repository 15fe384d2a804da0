use num_bigint::BigInt;
use num_traits::{One, Zero};

use super::registry::{terminal_depth, ConvergentEvaluator};
use crate::arith::Rational;
use crate::{Error, Result};

/// Evaluates convergents in homogeneous integer coordinates.
///
/// A tuple `(x_1, ..., x_m)` is carried as `(w, y_1, ..., y_m)` with
/// `x_k = y_k / w`. One backward step with digits `a` maps it to
/// `(y_1, a_1 y_1 + y_2, ..., a_(m-1) y_1 + y_m, a_m y_1 + w)`, so a
/// convergent is a product of integer step matrices applied to
/// `(1, a(n))`. Tables reuse the running prefix product.
#[derive(Debug, Clone, Copy, Default)]
pub struct MatrixProduct;

type Matrix = Vec<Vec<BigInt>>;

fn step_matrix(digits: &[Vec<BigInt>], i: usize) -> Matrix {
    let m = digits.len();
    let mut mat = vec![vec![BigInt::zero(); m + 1]; m + 1];
    mat[0][1] = BigInt::one();
    for k in 1..=m {
        mat[k][1] = digits[k - 1][i].clone();
        let tail = if k < m { k + 1 } else { 0 };
        mat[k][tail] += BigInt::one();
    }
    mat
}

fn mat_mul(a: &Matrix, b: &Matrix) -> Matrix {
    let n = a.len();
    (0..n)
        .map(|r| {
            (0..n)
                .map(|c| {
                    (0..n)
                        .filter(|&j| !a[r][j].is_zero() && !b[j][c].is_zero())
                        .map(|j| &a[r][j] * &b[j][c])
                        .sum()
                })
                .collect()
        })
        .collect()
}

fn identity(n: usize) -> Matrix {
    (0..n)
        .map(|r| (0..n).map(|c| BigInt::from((r == c) as u8)).collect())
        .collect()
}

fn project(prefix: &Matrix, digits: &[Vec<BigInt>], depth: usize) -> Result<Vec<Rational>> {
    let mut terminal = vec![BigInt::one()];
    terminal.extend(digits.iter().map(|s| s[depth].clone()));
    let coords: Vec<BigInt> = prefix
        .iter()
        .map(|row| row.iter().zip(&terminal).map(|(a, b)| a * b).sum())
        .collect();
    if coords[0].is_zero() {
        return Err(Error::ZeroTail(depth));
    }
    Ok(coords[1..]
        .iter()
        .map(|y| Rational::new(y.clone(), coords[0].clone()))
        .collect())
}

impl ConvergentEvaluator for MatrixProduct {
    fn name(&self) -> &'static str {
        "matrix"
    }

    fn description(&self) -> &'static str {
        "product of integer step matrices in homogeneous coordinates"
    }

    fn evaluate(&self, digits: &[Vec<BigInt>], depth: usize) -> Result<Vec<Rational>> {
        let depth = terminal_depth(digits, depth);
        let prefix = (0..depth).fold(identity(digits.len() + 1), |acc, i| {
            mat_mul(&acc, &step_matrix(digits, i))
        });
        project(&prefix, digits, depth)
    }

    fn table(&self, digits: &[Vec<BigInt>], upto: usize) -> Result<Vec<Vec<Rational>>> {
        let mut prefix = identity(digits.len() + 1);
        let mut rows = Vec::with_capacity(upto + 1);
        for depth in 0..=upto {
            let effective = terminal_depth(digits, depth);
            if effective == depth {
                rows.push(project(&prefix, digits, depth)?);
            } else {
                rows.push(self.evaluate(digits, depth)?);
            }
            prefix = mat_mul(&prefix, &step_matrix(digits, depth));
        }
        Ok(rows)
    }
}
