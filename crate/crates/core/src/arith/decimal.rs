use std::fmt;

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};

use super::{floor, parse_rational, pow10_neg, to_decimal_string, Rational};
use crate::{Error, Result};

/// A decimal literal whose last `guard_digits` digits are not trusted.
///
/// The represented real lies within `10^guard_digits` units in the last
/// place of `mantissa * 10^-scale`. Arithmetic widens that band as error
/// propagates; floors inside the band are refused.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GuardedDecimal {
    mantissa: BigInt,
    scale: u32,
    guard_digits: u32,
}

impl GuardedDecimal {
    pub fn new(mantissa: BigInt, scale: u32, guard_digits: u32) -> Result<Self> {
        if guard_digits == 0 {
            return Err(Error::InvalidParameter(
                "guard digits must be at least 1".into(),
            ));
        }
        Ok(GuardedDecimal {
            mantissa,
            scale,
            guard_digits,
        })
    }

    /// Parses a plain decimal literal such as `1.83928675521416`.
    pub fn parse(literal: &str, guard_digits: u32) -> Result<Self> {
        let bad = || Error::InvalidParameter(format!("not a decimal literal: '{literal}'"));
        let trimmed = literal.trim();
        if trimmed.contains(['e', 'E', '/']) {
            return Err(bad());
        }
        let value = parse_rational(trimmed).ok_or_else(bad)?;
        let scale = trimmed
            .split_once('.')
            .map(|(_, frac)| frac.len() as u32)
            .unwrap_or(0);
        let mantissa = (value * Rational::from_integer(pow10(scale))).to_integer();
        Self::new(mantissa, scale, guard_digits)
    }

    pub fn mantissa(&self) -> &BigInt {
        &self.mantissa
    }

    pub fn scale(&self) -> u32 {
        self.scale
    }

    pub fn guard_digits(&self) -> u32 {
        self.guard_digits
    }

    pub fn value(&self) -> Rational {
        Rational::new(self.mantissa.clone(), pow10(self.scale))
    }

    /// Half-width of the trusted band.
    pub fn radius(&self) -> Rational {
        Rational::new(pow10(self.guard_digits), pow10(self.scale))
    }

    pub fn bounds(&self) -> (Rational, Rational) {
        let v = self.value();
        let r = self.radius();
        (&v - &r, v + r)
    }

    /// Smallest decimal at `scale` whose band covers `[lo, hi]`.
    fn covering(lo: &Rational, hi: &Rational, scale: u32) -> Self {
        let ulp = pow10_neg(scale);
        let center = (lo + hi) / Rational::from_integer(2.into());
        let mantissa = (&center / &ulp).round().to_integer();
        let rounded = Rational::from_integer(mantissa.clone()) * &ulp;
        let radius = (hi - &rounded).abs().max((lo - &rounded).abs());
        let mut guard_digits = 1;
        while Rational::from_integer(pow10(guard_digits)) * &ulp < radius {
            guard_digits += 1;
        }
        GuardedDecimal {
            mantissa,
            scale,
            guard_digits,
        }
    }

    pub fn floor(&self) -> Result<BigInt> {
        let (lo, hi) = self.bounds();
        let fl = floor(&lo);
        let next = &fl + BigInt::one();
        let near = if Rational::from_integer(fl.clone()) == lo {
            Some(fl.clone())
        } else if Rational::from_integer(next.clone()) <= hi {
            Some(next)
        } else {
            None
        };
        match near {
            None => Ok(fl),
            Some(near) => {
                let distance = (self.value() - Rational::from_integer(near.clone())).abs();
                Err(Error::AmbiguousFloor {
                    value: self.to_string(),
                    near,
                    extra_digits: self.extra_digits_needed(&distance),
                })
            }
        }
    }

    /// Additional literal digits needed before a band around the current
    /// value would clear `distance`.
    fn extra_digits_needed(&self, distance: &Rational) -> u32 {
        if distance.is_zero() {
            return self.guard_digits + 1;
        }
        let radius = self.radius();
        let mut k = 1;
        while &radius * pow10_neg(k) >= *distance {
            k += 1;
        }
        k
    }

    pub fn sub_integer(&self, n: &BigInt) -> Self {
        GuardedDecimal {
            mantissa: &self.mantissa - n * pow10(self.scale),
            scale: self.scale,
            guard_digits: self.guard_digits,
        }
    }

    pub fn is_zero(&self) -> bool {
        self.mantissa.is_zero()
    }

    pub fn recip(&self) -> Result<Self> {
        let one = GuardedDecimal {
            mantissa: pow10(self.scale),
            scale: self.scale,
            guard_digits: 1,
        };
        one.div_bounds(self, &(Rational::one(), Rational::one()))
    }

    pub fn div(&self, other: &Self) -> Result<Self> {
        self.div_bounds(other, &self.bounds())
    }

    fn div_bounds(&self, other: &Self, num: &(Rational, Rational)) -> Result<Self> {
        let (dlo, dhi) = other.bounds();
        if !dlo.is_positive() && !dhi.is_negative() {
            return Err(Error::AmbiguousFloor {
                value: other.to_string(),
                near: BigInt::zero(),
                extra_digits: other.extra_digits_needed(&other.value().abs()),
            });
        }
        let candidates = [&num.0 / &dlo, &num.0 / &dhi, &num.1 / &dlo, &num.1 / &dhi];
        let lo = candidates.iter().min().unwrap();
        let hi = candidates.iter().max().unwrap();
        Ok(Self::covering(lo, hi, self.scale.max(other.scale)))
    }
}

impl fmt::Display for GuardedDecimal {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&to_decimal_string(&self.value(), self.scale as usize))
    }
}

fn pow10(exp: u32) -> BigInt {
    num_traits::pow(BigInt::from(10), exp as usize)
}
