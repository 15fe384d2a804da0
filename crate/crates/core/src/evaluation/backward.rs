use num_bigint::BigInt;
use num_traits::Zero;

use super::registry::{terminal_depth, ConvergentEvaluator};
use crate::arith::Rational;
use crate::{Error, Result};

/// Evaluates a truncation from the deepest digits back to the root.
///
/// The terminal values are the bare digits at depth n. Walking back,
/// `x_m(i) = a_m(i) + 1/x_1(i+1)` and
/// `x_k(i) = a_k(i) + x_(k+1)(i+1) / x_1(i+1)` for k < m.
#[derive(Debug, Clone, Copy, Default)]
pub struct BackwardRecurrence;

impl ConvergentEvaluator for BackwardRecurrence {
    fn name(&self) -> &'static str {
        "backward"
    }

    fn description(&self) -> &'static str {
        "backward recurrence over exact rationals (reference)"
    }

    fn evaluate(&self, digits: &[Vec<BigInt>], depth: usize) -> Result<Vec<Rational>> {
        let depth = terminal_depth(digits, depth);
        let m = digits.len();
        let lift = |d: &BigInt| Rational::from_integer(d.clone());
        let mut values: Vec<Rational> = digits.iter().map(|s| lift(&s[depth])).collect();
        for i in (0..depth).rev() {
            let lead = &values[0];
            if lead.is_zero() {
                return Err(Error::ZeroTail(i + 1));
            }
            let mut next = Vec::with_capacity(m);
            for k in 0..m - 1 {
                next.push(lift(&digits[k][i]) + &values[k + 1] / lead);
            }
            next.push(lift(&digits[m - 1][i]) + lead.recip());
            values = next;
        }
        Ok(values)
    }
}
