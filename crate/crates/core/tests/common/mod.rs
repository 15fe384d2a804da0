#![allow(dead_code)]

use std::sync::Arc;

use bcf_core::arith::{int, NumberField, NumberFieldElement, PolySpec, Rational, RealValue};

pub fn field(coeffs: &[i64], lo: i64, hi: i64) -> Arc<NumberField> {
    NumberField::new(PolySpec::from_i64s(coeffs), int(lo), int(hi)).unwrap()
}

pub fn power(f: &Arc<NumberField>, p: usize) -> NumberFieldElement {
    let mut c = vec![int(0); p + 1];
    c[p] = int(1);
    NumberFieldElement::new(f, c)
}

/// (alpha, b + 1/alpha) for alpha the root of x^3 - a x^2 - b x - 1.
pub fn period1_pair(a: i64, b: i64) -> Vec<RealValue> {
    let f = field(&[-1, -b, -a, 1], a, a + 2);
    let alpha = NumberFieldElement::theta(&f);
    let beta = alpha.invert().unwrap().add_integer(&b.into());
    vec![RealValue::Field(alpha), RealValue::Field(beta)]
}

pub fn tribonacci_pair() -> Vec<RealValue> {
    period1_pair(1, 1)
}

pub fn moore_pair() -> Vec<RealValue> {
    period1_pair(1, 0)
}

/// (2^(1/4), 2^(1/2), 2^(3/4)).
pub fn quartic_triple() -> Vec<RealValue> {
    let f = field(&[-2, 0, 0, 0, 1], 1, 2);
    (1..=3).map(|p| RealValue::Field(power(&f, p))).collect()
}

pub fn sqrt2() -> Vec<RealValue> {
    let f = field(&[-2, 0, 1], 1, 2);
    vec![RealValue::Field(NumberFieldElement::theta(&f))]
}

pub fn digits_u64(seq: &[num_bigint::BigInt]) -> Vec<u64> {
    seq.iter().map(|d| u64::try_from(d).unwrap()).collect()
}

pub fn approx(v: &RealValue) -> Rational {
    v.approximate(&bcf_core::arith::pow10_neg(80)).unwrap()
}
