//! Exact rational arithmetic, integer polynomials and real algebraic
//! number fields.

mod decimal;
mod field;
mod poly;
mod qpoly;
mod real;

pub use decimal::GuardedDecimal;
pub use field::{refine_root, NumberField, NumberFieldElement};
pub use poly::PolySpec;
pub use real::{Backend, RealValue};

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

/// Exact fraction of arbitrary-precision integers, always kept in lowest
/// terms with a positive denominator.
pub type Rational = num_rational::BigRational;

pub fn rat(num: i64, den: i64) -> Rational {
    Rational::new(num.into(), den.into())
}

pub fn int(n: i64) -> Rational {
    Rational::from_integer(n.into())
}

/// `10^-exp` as an exact rational.
pub fn pow10_neg(exp: u32) -> Rational {
    Rational::new(
        BigInt::one(),
        num_traits::pow(BigInt::from(10), exp as usize),
    )
}

/// Greatest integer `<= x`.
pub fn floor(x: &Rational) -> BigInt {
    x.numer().div_floor(x.denom())
}

/// Renders `x` as a decimal string with exactly `digits` fractional digits,
/// rounded half away from zero.
pub fn to_decimal_string(x: &Rational, digits: usize) -> String {
    let scale = num_traits::pow(BigInt::from(10), digits);
    let scaled = x.abs() * Rational::from_integer(scale.clone());
    let rounded = (scaled + Rational::new(BigInt::one(), BigInt::from(2)))
        .floor()
        .to_integer();
    let (whole, frac) = rounded.div_rem(&scale);
    let sign = if x.is_negative() && !rounded.is_zero() {
        "-"
    } else {
        ""
    };
    if digits == 0 {
        format!("{sign}{whole}")
    } else {
        format!(
            "{sign}{whole}.{:0>width$}",
            frac.to_string(),
            width = digits
        )
    }
}

/// Parses `p/q`, an integer, a decimal literal or scientific notation such
/// as `1e-9` into an exact rational.
pub fn parse_rational(text: &str) -> Option<Rational> {
    let text = text.trim();
    if let Some((n, d)) = text.split_once('/') {
        let n: BigInt = n.trim().parse().ok()?;
        let d: BigInt = d.trim().parse().ok()?;
        if d.is_zero() {
            return None;
        }
        return Some(Rational::new(n, d));
    }
    let (mantissa, exp) = match text.split_once(['e', 'E']) {
        Some((m, e)) => (m, e.parse::<i64>().ok()?),
        None => (text, 0),
    };
    let (negative, mantissa) = match mantissa.strip_prefix('-') {
        Some(rest) => (true, rest),
        None => (false, mantissa.strip_prefix('+').unwrap_or(mantissa)),
    };
    let (whole, frac) = mantissa.split_once('.').unwrap_or((mantissa, ""));
    if whole.is_empty() && frac.is_empty() {
        return None;
    }
    if !whole
        .chars()
        .chain(frac.chars())
        .all(|c| c.is_ascii_digit())
    {
        return None;
    }
    let digits: BigInt = format!("{whole}{frac}").parse().ok()?;
    let exp = exp - frac.len() as i64;
    let ten = BigInt::from(10);
    let mut value = if exp >= 0 {
        Rational::from_integer(digits * num_traits::pow(ten, exp as usize))
    } else {
        Rational::new(digits, num_traits::pow(ten, (-exp) as usize))
    };
    if negative {
        value = -value;
    }
    Some(value)
}

/// Canonical text of a rational: `n` for integers, `n/d` otherwise.
pub fn rational_to_string(x: &Rational) -> String {
    if x.is_integer() {
        x.numer().to_string()
    } else {
        format!("{}/{}", x.numer(), x.denom())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parses_literal_forms() {
        assert_eq!(parse_rational("7/4"), Some(rat(7, 4)));
        assert_eq!(parse_rational("-14/8"), Some(rat(-7, 4)));
        assert_eq!(parse_rational("1e-9"), Some(pow10_neg(9)));
        assert_eq!(parse_rational("1.25"), Some(rat(5, 4)));
        assert_eq!(parse_rational("2.5E2"), Some(int(250)));
        assert_eq!(parse_rational("3"), Some(int(3)));
        assert_eq!(parse_rational("1/0"), None);
        assert_eq!(parse_rational("abc"), None);
        assert_eq!(parse_rational("."), None);
    }

    #[test]
    fn decimal_rendering_rounds() {
        assert_eq!(to_decimal_string(&rat(24, 13), 3), "1.846");
        assert_eq!(to_decimal_string(&rat(2, 3), 2), "0.67");
        assert_eq!(to_decimal_string(&rat(-1, 8), 2), "-0.13");
        assert_eq!(to_decimal_string(&int(5), 0), "5");
        assert_eq!(to_decimal_string(&rat(1, 1000), 2), "0.00");
    }

    #[test]
    fn floor_of_negative_fraction() {
        assert_eq!(floor(&rat(7, 4)), BigInt::from(1));
        assert_eq!(floor(&rat(-7, 4)), BigInt::from(-2));
        assert_eq!(floor(&int(3)), BigInt::from(3));
    }
}
