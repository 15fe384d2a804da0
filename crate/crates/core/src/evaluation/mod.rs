//! From digits back to numbers: exact convergents, reconstruction to a
//! tolerance, and the bifurcating tree rendering.
//!
//! Convergent evaluation is pluggable through [`ConvergentEvaluator`];
//! [`EvaluatorRegistry`] maps names to the available strategies. The
//! backward recurrence is the reference, the homogeneous matrix product a
//! faster equivalent.

mod backward;
mod matrix;
mod registry;
mod tree;

use num_bigint::BigInt;
use num_traits::{Signed, Zero};

pub use backward::BackwardRecurrence;
pub use matrix::MatrixProduct;
pub use registry::{ConvergentEvaluator, EvaluatorRegistry};
pub use tree::{render_tree, TreeRoot};

use crate::arith::Rational;
use crate::{Error, Result};

/// m digit sequences as a finite head optionally followed by a cycle that
/// repeats forever.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DigitSpec {
    head: Vec<Vec<BigInt>>,
    cycle: Option<Vec<Vec<BigInt>>>,
}

impl DigitSpec {
    pub fn new(head: Vec<Vec<BigInt>>, cycle: Option<Vec<Vec<BigInt>>>) -> Result<Self> {
        let invalid = |msg: String| Err(Error::InvalidDigits(msg));
        let m = head.len();
        if m == 0 {
            return invalid("order must be at least 1".into());
        }
        if head.iter().any(|s| s.len() != head[0].len()) {
            return invalid("head sequences differ in length".into());
        }
        if let Some(cycle) = &cycle {
            if cycle.len() != m {
                return invalid(format!("cycle has {} sequences, head has {m}", cycle.len()));
            }
            if cycle[0].is_empty() || cycle.iter().any(|s| s.len() != cycle[0].len()) {
                return invalid("cycle sequences must share one positive length".into());
            }
        } else if head[0].is_empty() {
            return invalid("no digits".into());
        }
        let all = head.iter().chain(cycle.iter().flatten()).flatten();
        if all.clone().any(Signed::is_negative) {
            return invalid("digits must be non-negative".into());
        }
        let spec = DigitSpec { head, cycle };
        spec.check_leading_sequence()?;
        Ok(spec)
    }

    /// Constant digits `digits[k]` in sequence k, repeated forever.
    pub fn constant(digits: &[u64]) -> Result<Self> {
        let cycle = digits.iter().map(|&d| vec![BigInt::from(d)]).collect();
        Self::new(vec![Vec::new(); digits.len()], Some(cycle))
    }

    /// Small-integer convenience constructor.
    pub fn from_u64s(head: &[&[u64]], cycle: Option<&[&[u64]]>) -> Result<Self> {
        let lift = |seqs: &[&[u64]]| -> Vec<Vec<BigInt>> {
            seqs.iter()
                .map(|s| s.iter().map(|&d| BigInt::from(d)).collect())
                .collect()
        };
        Self::new(lift(head), cycle.map(lift))
    }

    pub fn order(&self) -> usize {
        self.head.len()
    }

    pub fn head(&self) -> &[Vec<BigInt>] {
        &self.head
    }

    pub fn cycle(&self) -> Option<&[Vec<BigInt>]> {
        self.cycle.as_deref()
    }

    pub fn head_len(&self) -> usize {
        self.head[0].len()
    }

    /// Deepest truncation available, `None` for periodic digits.
    pub fn max_depth(&self) -> Option<usize> {
        match self.cycle {
            Some(_) => None,
            None => Some(self.head_len() - 1),
        }
    }

    fn digit(&self, k: usize, i: usize) -> &BigInt {
        let head = &self.head[k];
        if i < head.len() {
            &head[i]
        } else {
            let cycle = &self.cycle.as_ref().expect("checked by caller")[k];
            &cycle[(i - head.len()) % cycle.len()]
        }
    }

    /// Digits at index >= 1 of the first sequence must be at least 1.
    fn check_leading_sequence(&self) -> Result<()> {
        let span = self.head_len() + self.cycle.as_ref().map_or(0, |c| c[0].len());
        for i in 1..span {
            if self.digit(0, i).is_zero() {
                return Err(Error::InvalidDigits(format!(
                    "first sequence has digit 0 at index {i}; only index 0 may be 0"
                )));
            }
        }
        Ok(())
    }

    /// The first `depth + 1` digits of every sequence.
    pub fn unroll(&self, depth: usize) -> Result<Vec<Vec<BigInt>>> {
        let needed = depth + 1;
        if self.cycle.is_none() && needed > self.head_len() {
            return Err(Error::InsufficientDigits {
                available: self.head_len(),
                depth,
                needed,
            });
        }
        Ok((0..self.order())
            .map(|k| (0..needed).map(|i| self.digit(k, i).clone()).collect())
            .collect())
    }
}

/// Convergent tuples for depths `0..=N`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ConvergentTable {
    rows: Vec<Vec<Rational>>,
}

impl ConvergentTable {
    pub fn rows(&self) -> &[Vec<Rational>] {
        &self.rows
    }

    pub fn at(&self, depth: usize) -> Option<&[Rational]> {
        self.rows.get(depth).map(Vec::as_slice)
    }

    /// Component k at every depth.
    pub fn column(&self, k: usize) -> Vec<Rational> {
        self.rows.iter().map(|r| r[k].clone()).collect()
    }
}

/// Depth-`depth` convergent by the backward recurrence.
pub fn convergent(spec: &DigitSpec, depth: usize) -> Result<Vec<Rational>> {
    convergent_with(&BackwardRecurrence, spec, depth)
}

pub fn convergent_with(
    evaluator: &dyn ConvergentEvaluator,
    spec: &DigitSpec,
    depth: usize,
) -> Result<Vec<Rational>> {
    evaluator.evaluate(&spec.unroll(depth)?, depth)
}

pub fn convergent_table(spec: &DigitSpec, upto: usize) -> Result<ConvergentTable> {
    convergent_table_with(&BackwardRecurrence, spec, upto)
}

pub fn convergent_table_with(
    evaluator: &dyn ConvergentEvaluator,
    spec: &DigitSpec,
    upto: usize,
) -> Result<ConvergentTable> {
    let rows = evaluator.table(&spec.unroll(upto)?, upto)?;
    Ok(ConvergentTable { rows })
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Reconstruction {
    pub values: Vec<Rational>,
    pub depth: usize,
    /// Largest componentwise change over the last stable depths; zero when
    /// a finite spec was evaluated to its end.
    pub achieved_bound: Rational,
}

/// Consecutive depths whose convergents must agree to within tolerance.
const STABLE_DEPTHS: usize = 3;

/// Deepens the convergents until successive tuples differ by less than
/// `tol` in every component for three consecutive depths. Finite specs
/// evaluate exactly at their last digit. The bound is empirical.
pub fn reconstruct(spec: &DigitSpec, tol: &Rational, max_depth: usize) -> Result<Reconstruction> {
    reconstruct_with(&BackwardRecurrence, spec, tol, max_depth)
}

pub fn reconstruct_with(
    evaluator: &dyn ConvergentEvaluator,
    spec: &DigitSpec,
    tol: &Rational,
    max_depth: usize,
) -> Result<Reconstruction> {
    if !tol.is_positive() {
        return Err(Error::InvalidParameter("tolerance must be positive".into()));
    }
    let limit = spec.max_depth().map_or(max_depth, |d| d.min(max_depth));
    let digits = spec.unroll(limit)?;
    let mut prev = evaluator.evaluate(&digits, 0)?;
    let mut stable = 0;
    let mut bound = Rational::zero();
    for depth in 1..=limit {
        let cur = evaluator.evaluate(&digits, depth)?;
        let diff = prev
            .iter()
            .zip(&cur)
            .map(|(a, b)| (a - b).abs())
            .max()
            .expect("order >= 1");
        if diff < *tol {
            stable += 1;
            bound = bound.max(diff);
        } else {
            stable = 0;
            bound = Rational::zero();
        }
        if stable >= STABLE_DEPTHS {
            return Ok(Reconstruction {
                values: cur,
                depth,
                achieved_bound: bound,
            });
        }
        prev = cur;
    }
    if spec.max_depth() == Some(limit) {
        return Ok(Reconstruction {
            values: prev,
            depth: limit,
            achieved_bound: Rational::zero(),
        });
    }
    Err(Error::NoConvergence(limit))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::arith::{int, pow10_neg, rat};

    fn small(v: &[BigInt]) -> Vec<u64> {
        v.iter().map(|d| u64::try_from(d).unwrap()).collect()
    }

    #[test]
    fn unroll_examples() {
        let spec = DigitSpec::from_u64s(
            &[&[1], &[1], &[1]],
            Some(&[&[1, 1, 2], &[0, 0, 1], &[0, 0, 1]]),
        )
        .unwrap();
        assert_eq!(
            small(&spec.unroll(6).unwrap()[0]),
            vec![1, 1, 1, 2, 1, 1, 2]
        );

        let unit = DigitSpec::constant(&[1, 1]).unwrap();
        let u = unit.unroll(4).unwrap();
        assert_eq!(small(&u[0]), vec![1; 5]);
        assert_eq!(small(&u[1]), vec![1; 5]);

        let twos = DigitSpec::from_u64s(&[&[]], Some(&[&[2]])).unwrap();
        assert_eq!(small(&twos.unroll(3).unwrap()[0]), vec![2; 4]);
    }

    #[test]
    fn unroll_errors() {
        let finite = DigitSpec::from_u64s(&[&[1, 2, 3]], None).unwrap();
        assert!(matches!(
            finite.unroll(3),
            Err(Error::InsufficientDigits { available: 3, .. })
        ));
        assert!(DigitSpec::from_u64s(&[&[1, 0, 3]], None).is_err());
        assert!(DigitSpec::from_u64s(&[&[0, 1]], None).is_ok());
        assert!(DigitSpec::from_u64s(&[&[1], &[1, 2]], None).is_err());
        assert!(DigitSpec::from_u64s(&[&[1]], Some(&[&[]])).is_err());
        assert!(DigitSpec::new(vec![vec![BigInt::from(-1)]], None).is_err());
    }

    #[test]
    fn fifth_convergent_of_unit_spec() {
        let unit = DigitSpec::constant(&[1, 1]).unwrap();
        assert_eq!(
            convergent(&unit, 5).unwrap(),
            vec![rat(24, 13), rat(20, 13)]
        );
        assert_eq!(convergent(&unit, 3).unwrap()[0], rat(7, 4));
        let table = convergent_table(&unit, 5).unwrap();
        assert_eq!(
            table.column(0),
            vec![int(1), int(2), int(2), rat(7, 4), rat(13, 7), rat(24, 13)]
        );
    }

    #[test]
    fn golden_convergent() {
        let ones = DigitSpec::from_u64s(&[&[1, 1, 1, 1, 1]], None).unwrap();
        assert_eq!(convergent(&ones, 4).unwrap(), vec![rat(8, 5)]);
    }

    #[test]
    fn reconstruct_finite_is_exact() {
        let spec = DigitSpec::from_u64s(&[&[1, 1, 3]], None).unwrap();
        let r = reconstruct(&spec, &pow10_neg(6), 100).unwrap();
        assert_eq!(r.values, vec![rat(7, 4)]);
        assert_eq!(r.depth, 2);
        assert_eq!(r.achieved_bound, int(0));
    }

    #[test]
    fn reconstruct_unit_spec() {
        let unit = DigitSpec::constant(&[1, 1]).unwrap();
        let r = reconstruct(&unit, &pow10_neg(6), 200).unwrap();
        let reference = rat(183_928_675_521_416, 100_000_000_000_000);
        assert!((&r.values[0] - reference).abs() < pow10_neg(5));
        assert!(r.achieved_bound < pow10_neg(6));
    }

    #[test]
    fn reconstruct_gives_up() {
        let unit = DigitSpec::constant(&[1, 1]).unwrap();
        assert_eq!(
            reconstruct(&unit, &pow10_neg(30), 10),
            Err(Error::NoConvergence(10))
        );
        assert!(reconstruct(&unit, &int(0), 10).is_err());
    }
}
