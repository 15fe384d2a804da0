//! The order-m expansion: m real values in, m coupled digit sequences out.
//!
//! At every step the digits are the floors of the current values; with
//! `f_k` the fractional parts, the next values are `1/f_m` followed by
//! `f_1/f_m, ..., f_(m-1)/f_m`. For m = 1 this is the classic continued
//! fraction.

use std::sync::Arc;

use num_bigint::BigInt;
use num_traits::{One, Signed};

use crate::arith::{Backend, NumberField, RealValue};
use crate::evaluation::DigitSpec;
use crate::periodicity::PeriodReport;
use crate::{Error, Result};

/// The m current values at a given step.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ExpansionState {
    values: Vec<RealValue>,
    step: usize,
}

impl ExpansionState {
    /// Validates a starting tuple: non-empty, one backend, one field.
    pub fn new(values: Vec<RealValue>) -> Result<Self> {
        let first = values.first().ok_or(Error::EmptyInput)?;
        let backend = first.backend();
        if let Some(other) = values.iter().find(|v| v.backend() != backend) {
            return Err(Error::MixedBackends(backend.name(), other.backend().name()));
        }
        if let RealValue::Field(x) = first {
            for v in &values[1..] {
                if let RealValue::Field(y) = v {
                    if !x.field().same_root(y.field()) {
                        return Err(Error::MixedFields);
                    }
                }
            }
        }
        Ok(ExpansionState { values, step: 0 })
    }

    pub fn order(&self) -> usize {
        self.values.len()
    }

    pub fn values(&self) -> &[RealValue] {
        &self.values
    }

    pub fn step(&self) -> usize {
        self.step
    }

    pub fn backend(&self) -> Backend {
        self.values[0].backend()
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum StepOutcome {
    Next(ExpansionState),
    /// The last fractional part vanished exactly.
    Terminated,
}

/// Emits the digit tuple for `state` and computes the following state.
pub fn expand_step(state: &ExpansionState) -> Result<(Vec<BigInt>, StepOutcome)> {
    let mut digits = Vec::with_capacity(state.order());
    let mut narrowest: Option<Arc<NumberField>> = None;
    for value in &state.values {
        let (digit, field) = value.floor_refined()?;
        if digit.is_negative() {
            return Err(Error::NegativeInput(digit));
        }
        if let Some(field) = field {
            if narrowest.as_ref().is_none_or(|n| field.width() < n.width()) {
                narrowest = Some(field);
            }
        }
        digits.push(digit);
    }
    debug_assert!(state.step == 0 || digits[0] >= BigInt::one());

    let mut fractions = state
        .values
        .iter()
        .zip(&digits)
        .map(|(v, d)| v.sub_integer(d))
        .collect::<Vec<_>>();
    if let Some(field) = &narrowest {
        fractions = fractions
            .iter()
            .map(|f| f.rebind(field))
            .collect::<Result<_>>()?;
    }

    let last = fractions.last().expect("order >= 1");
    if last.is_zero() {
        return Ok((digits, StepOutcome::Terminated));
    }
    let head = last.recip()?;
    let mut values = Vec::with_capacity(state.order());
    for f in &fractions[..fractions.len() - 1] {
        values.push(f.mul(&head)?);
    }
    values.insert(0, head);
    Ok((
        digits,
        StepOutcome::Next(ExpansionState {
            values,
            step: state.step + 1,
        }),
    ))
}

/// Output of [`expand`]: m digit sequences of equal length.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Expansion {
    order: usize,
    digits: Vec<Vec<BigInt>>,
    terminated_at: Option<usize>,
    states: Option<Vec<ExpansionState>>,
}

impl Expansion {
    pub fn order(&self) -> usize {
        self.order
    }

    /// One sequence per component, `digits()[k][i]` is digit i of value k.
    pub fn digits(&self) -> &[Vec<BigInt>] {
        &self.digits
    }

    pub fn len(&self) -> usize {
        self.digits[0].len()
    }

    pub fn is_empty(&self) -> bool {
        self.len() == 0
    }

    pub fn digit_tuple(&self, step: usize) -> Vec<BigInt> {
        self.digits.iter().map(|seq| seq[step].clone()).collect()
    }

    /// Step index whose last fractional part was exactly zero.
    pub fn terminated_at(&self) -> Option<usize> {
        self.terminated_at
    }

    pub fn is_terminated(&self) -> bool {
        self.terminated_at.is_some()
    }

    /// State snapshots, one per emitted digit tuple; exact backends only.
    pub fn states(&self) -> Option<&[ExpansionState]> {
        self.states.as_deref()
    }

    /// Digits as a finite specification (no cycle).
    pub fn to_digit_spec(&self) -> DigitSpec {
        DigitSpec::new(self.digits.clone(), None).expect("expansion digits are valid")
    }

    /// Folds a proven period into head and cycle; anything else keeps all
    /// digits in the head.
    pub fn to_periodic_spec(&self, report: &PeriodReport) -> DigitSpec {
        if !report.is_proven() {
            return self.to_digit_spec();
        }
        let pre = report.preperiod;
        let end = pre + report.period;
        let head = self.digits.iter().map(|s| s[..pre].to_vec()).collect();
        let cycle = self.digits.iter().map(|s| s[pre..end].to_vec()).collect();
        DigitSpec::new(head, Some(cycle)).expect("expansion digits are valid")
    }
}

/// Runs up to `max_depth` steps of the expansion, stopping early on exact
/// termination. Exact backends also record the state behind every digit.
pub fn expand(values: Vec<RealValue>, max_depth: usize) -> Result<Expansion> {
    if max_depth == 0 {
        return Err(Error::InvalidParameter(
            "max depth must be at least 1".into(),
        ));
    }
    let mut state = ExpansionState::new(values)?;
    let order = state.order();
    let exact = state.backend().is_exact();
    let mut digits = vec![Vec::with_capacity(max_depth); order];
    let mut states = exact.then(|| Vec::with_capacity(max_depth));
    let mut terminated_at = None;
    for step in 0..max_depth {
        let (tuple, outcome) = expand_step(&state)?;
        for (seq, d) in digits.iter_mut().zip(tuple) {
            seq.push(d);
        }
        match outcome {
            StepOutcome::Terminated => {
                if let Some(states) = states.as_mut() {
                    states.push(state);
                }
                terminated_at = Some(step);
                break;
            }
            StepOutcome::Next(next) => {
                if let Some(states) = states.as_mut() {
                    states.push(std::mem::replace(&mut state, next));
                } else {
                    state = next;
                }
            }
        }
    }
    Ok(Expansion {
        order,
        digits,
        terminated_at,
        states,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::arith::{int, rat, GuardedDecimal, NumberFieldElement, PolySpec, Rational};

    fn field(coeffs: &[i64]) -> Arc<NumberField> {
        NumberField::new(PolySpec::from_i64s(coeffs), int(1), int(2)).unwrap()
    }

    fn digits(exp: &Expansion, k: usize) -> Vec<i64> {
        exp.digits()[k]
            .iter()
            .map(|d| i64::try_from(d).unwrap())
            .collect()
    }

    #[test]
    fn rational_steps() {
        let s0 = ExpansionState::new(vec![RealValue::Rational(rat(7, 4))]).unwrap();
        let (d, next) = expand_step(&s0).unwrap();
        assert_eq!(d, vec![BigInt::from(1)]);
        let StepOutcome::Next(s1) = next else {
            panic!()
        };
        assert_eq!(s1.values(), &[RealValue::Rational(rat(4, 3))]);
        let (_, next) = expand_step(&s1).unwrap();
        let StepOutcome::Next(s2) = next else {
            panic!()
        };
        assert_eq!(s2.values(), &[RealValue::Rational(int(3))]);
        let (d, next) = expand_step(&s2).unwrap();
        assert_eq!(d, vec![BigInt::from(3)]);
        assert_eq!(next, StepOutcome::Terminated);

        let exp = expand(vec![RealValue::Rational(rat(7, 4))], 10).unwrap();
        assert_eq!(digits(&exp, 0), vec![1, 1, 3]);
        assert_eq!(exp.terminated_at(), Some(2));
        assert_eq!(exp.states().unwrap().len(), 3);
    }

    #[test]
    fn golden_ratio_all_ones() {
        let f = field(&[-1, -1, 1]);
        let exp = expand(vec![RealValue::Field(NumberFieldElement::theta(&f))], 5).unwrap();
        assert_eq!(digits(&exp, 0), vec![1; 5]);
        assert!(!exp.is_terminated());
    }

    #[test]
    fn tribonacci_pair_is_a_fixed_point() {
        let f = field(&[-1, -1, -1, 1]);
        let alpha = NumberFieldElement::theta(&f);
        let beta = alpha.invert().unwrap().add_integer(&1.into());
        let s0 =
            ExpansionState::new(vec![RealValue::Field(alpha), RealValue::Field(beta)]).unwrap();
        let (d, next) = expand_step(&s0).unwrap();
        assert_eq!(d, vec![BigInt::from(1), BigInt::from(1)]);
        let StepOutcome::Next(s1) = next else {
            panic!()
        };
        assert_eq!(s1.values(), s0.values());
    }

    #[test]
    fn fourth_root_of_two_triple() {
        let f = NumberField::new(PolySpec::from_i64s(&[-2, 0, 0, 0, 1]), int(1), int(2)).unwrap();
        let powers = (1..=3)
            .map(|p| {
                let mut c = vec![Rational::from_integer(0.into()); p + 1];
                c[p] = int(1);
                RealValue::Field(NumberFieldElement::new(&f, c))
            })
            .collect();
        let exp = expand(powers, 7).unwrap();
        assert_eq!(digits(&exp, 0), vec![1, 1, 1, 2, 1, 1, 2]);
        assert_eq!(digits(&exp, 1), vec![1, 0, 0, 1, 0, 0, 1]);
        assert_eq!(digits(&exp, 2), vec![1, 0, 0, 1, 0, 0, 1]);
    }

    #[test]
    fn moore_pair() {
        let f = field(&[-1, 0, -1, 1]);
        let alpha = NumberFieldElement::theta(&f);
        let beta = alpha.invert().unwrap();
        let exp = expand(vec![RealValue::Field(alpha), RealValue::Field(beta)], 12).unwrap();
        assert_eq!(digits(&exp, 0), vec![1; 12]);
        assert_eq!(digits(&exp, 1), vec![0; 12]);
    }

    #[test]
    fn rejects_bad_tuples() {
        assert_eq!(expand(vec![], 3), Err(Error::EmptyInput));
        let mixed = vec![
            RealValue::Rational(rat(3, 2)),
            RealValue::Decimal(GuardedDecimal::parse("1.5", 1).unwrap()),
        ];
        assert!(matches!(expand(mixed, 3), Err(Error::MixedBackends(..))));
        assert_eq!(
            expand(vec![RealValue::Rational(rat(-1, 2))], 3),
            Err(Error::NegativeInput((-1).into()))
        );
        let a = field(&[-2, 0, 1]);
        let b = field(&[-3, 0, 1]);
        let fields = vec![
            RealValue::Field(NumberFieldElement::theta(&a)),
            RealValue::Field(NumberFieldElement::theta(&b)),
        ];
        assert_eq!(expand(fields, 3), Err(Error::MixedFields));
    }

    #[test]
    fn integral_component_continues() {
        // (5/2, 2): second component is integral, last fraction 0 terminates;
        // (2, 5/2): first is integral, f_1 = 0 and the run continues.
        let exp = expand(
            vec![RealValue::Rational(int(2)), RealValue::Rational(rat(5, 2))],
            4,
        )
        .unwrap();
        assert_eq!(digits(&exp, 0), vec![2, 2]);
        assert_eq!(digits(&exp, 1), vec![2, 0]);
        assert_eq!(exp.terminated_at(), Some(1));
    }

    #[test]
    fn decimal_expansion_stops_on_ambiguity() {
        let d = GuardedDecimal::parse("1.41421356", 1).unwrap();
        let err = expand(vec![RealValue::Decimal(d)], 40).unwrap_err();
        assert!(matches!(err, Error::AmbiguousFloor { .. }));
        let d = GuardedDecimal::parse("1.41421356", 1).unwrap();
        let exp = expand(vec![RealValue::Decimal(d)], 5).unwrap();
        assert_eq!(digits(&exp, 0), vec![1, 2, 2, 2, 2]);
        assert!(exp.states().is_none());
    }
}
