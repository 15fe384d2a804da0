//! Eventual periodicity of expansions.
//!
//! On exact backends a period is proven by two exactly equal states; the
//! digits from then on must repeat. Decimal expansions only get an apparent
//! period read off the digits.

use std::collections::HashMap;

use num_bigint::BigInt;

use crate::arith::{Rational, RealValue};
use crate::expansion::{Expansion, ExpansionState};
use crate::{Error, Result};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum PeriodStatus {
    Proven,
    Apparent,
    NoneWithinDepth,
}

impl PeriodStatus {
    pub fn as_str(self) -> &'static str {
        match self {
            PeriodStatus::Proven => "proven",
            PeriodStatus::Apparent => "apparent",
            PeriodStatus::NoneWithinDepth => "none-within-depth",
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PeriodReport {
    pub preperiod: usize,
    pub period: usize,
    /// Step indices of the first pair of equal states (or, for apparent
    /// periods, the start of the repeating run and one period later).
    pub witness: Option<(usize, usize)>,
    pub status: PeriodStatus,
}

impl PeriodReport {
    fn none() -> Self {
        PeriodReport {
            preperiod: 0,
            period: 0,
            witness: None,
            status: PeriodStatus::NoneWithinDepth,
        }
    }

    pub fn is_proven(&self) -> bool {
        self.status == PeriodStatus::Proven
    }
}

/// Canonical key of a state: the exact coordinates of every value. All
/// states of one expansion share a modulus, so coordinates suffice.
fn state_key(state: &ExpansionState) -> Option<Vec<Vec<Rational>>> {
    state
        .values()
        .iter()
        .map(|v| match v {
            RealValue::Rational(r) => Some(vec![r.clone()]),
            RealValue::Field(x) => Some(x.residue().to_vec()),
            RealValue::Decimal(_) => None,
        })
        .collect()
}

/// Finds the earliest exact state recurrence in `exp`.
pub fn detect_period(exp: &Expansion) -> Result<PeriodReport> {
    let states = exp.states().ok_or(Error::InexactBackend)?;
    let mut seen: HashMap<Vec<Vec<Rational>>, usize> = HashMap::new();
    for (i, state) in states.iter().enumerate() {
        let key = state_key(state).ok_or(Error::InexactBackend)?;
        if let Some(&j) = seen.get(&key) {
            debug_assert_eq!(states[j].values(), state.values());
            let report = PeriodReport {
                preperiod: j,
                period: i - j,
                witness: Some((j, i)),
                status: PeriodStatus::Proven,
            };
            assert!(
                digits_repeat(exp.digits(), j, i - j),
                "equal states emitted different digits"
            );
            return Ok(report);
        }
        seen.insert(key, i);
    }
    Ok(PeriodReport::none())
}

fn digits_repeat(digits: &[Vec<BigInt>], pre: usize, period: usize) -> bool {
    digits
        .iter()
        .all(|seq| (pre..seq.len().saturating_sub(period)).all(|i| seq[i] == seq[i + period]))
}

/// Heuristic period from digits alone: the smallest period, then the
/// smallest preperiod, such that the digits from the preperiod on repeat
/// and at least `min_repeats` full cycles were observed.
pub fn detect_apparent_period(exp: &Expansion, min_repeats: usize) -> PeriodReport {
    let n = exp.len();
    let digits = exp.digits();
    let min_repeats = min_repeats.max(2);
    for period in 1..=n / min_repeats {
        for pre in 0..=n - period * min_repeats {
            if digits_repeat(digits, pre, period) {
                return PeriodReport {
                    preperiod: pre,
                    period,
                    witness: Some((pre, pre + period)),
                    status: PeriodStatus::Apparent,
                };
            }
        }
    }
    PeriodReport::none()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::arith::{int, rat, GuardedDecimal, NumberField, NumberFieldElement, PolySpec};
    use crate::expansion::expand;

    #[test]
    fn sqrt2_has_preperiod_one() {
        let f = NumberField::new(PolySpec::from_i64s(&[-2, 0, 1]), int(1), int(2)).unwrap();
        let exp = expand(vec![RealValue::Field(NumberFieldElement::theta(&f))], 10).unwrap();
        let report = detect_period(&exp).unwrap();
        assert_eq!((report.preperiod, report.period), (1, 1));
        assert_eq!(report.witness, Some((1, 2)));
        assert!(report.is_proven());
    }

    #[test]
    fn rational_expansion_has_no_period() {
        let exp = expand(vec![RealValue::Rational(rat(355, 113))], 10).unwrap();
        assert_eq!(
            detect_period(&exp).unwrap().status,
            PeriodStatus::NoneWithinDepth
        );
    }

    #[test]
    fn decimal_needs_apparent_scan() {
        let d = GuardedDecimal::parse("1.4142135623730950488", 1).unwrap();
        let exp = expand(vec![RealValue::Decimal(d)], 12).unwrap();
        assert_eq!(detect_period(&exp), Err(Error::InexactBackend));
        let report = detect_apparent_period(&exp, 3);
        assert_eq!(report.status, PeriodStatus::Apparent);
        assert_eq!((report.preperiod, report.period), (1, 1));
    }
}
