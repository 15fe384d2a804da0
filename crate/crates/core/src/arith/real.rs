use std::sync::Arc;

use num_bigint::BigInt;
use num_traits::{Signed, Zero};

use super::{floor, GuardedDecimal, NumberField, NumberFieldElement, Rational};
use crate::{Error, Result};

/// Representation backing a [`RealValue`].
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Backend {
    Rational,
    Field,
    Decimal,
}

impl Backend {
    pub fn name(self) -> &'static str {
        match self {
            Backend::Rational => "rational",
            Backend::Field => "number-field",
            Backend::Decimal => "decimal",
        }
    }

    /// Exact backends can prove state equality.
    pub fn is_exact(self) -> bool {
        !matches!(self, Backend::Decimal)
    }
}

/// Anything the expansion can consume.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum RealValue {
    Rational(Rational),
    Field(NumberFieldElement),
    Decimal(GuardedDecimal),
}

impl RealValue {
    pub fn backend(&self) -> Backend {
        match self {
            RealValue::Rational(_) => Backend::Rational,
            RealValue::Field(_) => Backend::Field,
            RealValue::Decimal(_) => Backend::Decimal,
        }
    }

    pub fn floor(&self) -> Result<BigInt> {
        match self {
            RealValue::Rational(r) => Ok(floor(r)),
            RealValue::Field(x) => x.floor(),
            RealValue::Decimal(d) => d.floor(),
        }
    }

    /// Floor plus, for field elements, the narrowed field that proved it.
    pub(crate) fn floor_refined(&self) -> Result<(BigInt, Option<Arc<NumberField>>)> {
        match self {
            RealValue::Field(x) => x.floor_refined().map(|(fl, f)| (fl, Some(f))),
            other => other.floor().map(|fl| (fl, None)),
        }
    }

    pub fn sub_integer(&self, n: &BigInt) -> RealValue {
        match self {
            RealValue::Rational(r) => RealValue::Rational(r - Rational::from_integer(n.clone())),
            RealValue::Field(x) => RealValue::Field(x.sub_integer(n)),
            RealValue::Decimal(d) => RealValue::Decimal(d.sub_integer(n)),
        }
    }

    /// Exact zero test; a decimal is only zero when its literal is.
    pub fn is_zero(&self) -> bool {
        match self {
            RealValue::Rational(r) => r.is_zero(),
            RealValue::Field(x) => x.is_zero(),
            RealValue::Decimal(d) => d.is_zero(),
        }
    }

    pub fn recip(&self) -> Result<RealValue> {
        match self {
            RealValue::Rational(r) if r.is_zero() => Err(Error::ZeroInverse),
            RealValue::Rational(r) => Ok(RealValue::Rational(r.recip())),
            RealValue::Field(x) => x.invert().map(RealValue::Field),
            RealValue::Decimal(d) => d.recip().map(RealValue::Decimal),
        }
    }

    pub fn div(&self, other: &RealValue) -> Result<RealValue> {
        match (self, other) {
            (RealValue::Rational(_), RealValue::Rational(b)) if b.is_zero() => {
                Err(Error::ZeroInverse)
            }
            (RealValue::Rational(a), RealValue::Rational(b)) => Ok(RealValue::Rational(a / b)),
            (RealValue::Field(a), RealValue::Field(b)) => a.div(b).map(RealValue::Field),
            (RealValue::Decimal(a), RealValue::Decimal(b)) => a.div(b).map(RealValue::Decimal),
            (a, b) => Err(mixed(a.backend(), b.backend())),
        }
    }

    pub fn mul(&self, other: &RealValue) -> Result<RealValue> {
        match (self, other) {
            (RealValue::Rational(a), RealValue::Rational(b)) => Ok(RealValue::Rational(a * b)),
            (RealValue::Field(a), RealValue::Field(b)) => a.mul(b).map(RealValue::Field),
            (RealValue::Decimal(a), RealValue::Decimal(b)) => {
                a.div(&b.recip()?).map(RealValue::Decimal)
            }
            (a, b) => Err(mixed(a.backend(), b.backend())),
        }
    }

    /// Three-way comparison against a rational. Field elements are refined
    /// until the enclosure excludes `q` (or the element equals it exactly);
    /// decimals return `None` when `q` lies in the guard band.
    pub fn cmp_rational(&self, q: &Rational) -> Result<Option<std::cmp::Ordering>> {
        use std::cmp::Ordering;
        match self {
            RealValue::Rational(r) => Ok(Some(r.cmp(q))),
            RealValue::Decimal(d) => {
                let (lo, hi) = d.bounds();
                Ok(if hi < *q {
                    Some(Ordering::Less)
                } else if lo > *q {
                    Some(Ordering::Greater)
                } else {
                    None
                })
            }
            RealValue::Field(x) => {
                let mut residue = x.residue().to_vec();
                residue[0] -= q;
                let diff = NumberFieldElement::new(x.field(), residue);
                if let Some(r) = diff.as_rational() {
                    return Ok(Some(r.cmp(&Rational::zero())));
                }
                let mut current = diff;
                loop {
                    let (lo, hi) = current.enclosure();
                    if lo.is_positive() {
                        return Ok(Some(Ordering::Greater));
                    }
                    if hi.is_negative() {
                        return Ok(Some(Ordering::Less));
                    }
                    let half = current.field().width() / Rational::from_integer(2.into());
                    let narrower = current.field().refined(&half)?;
                    current = current.with_field(&narrower)?;
                }
            }
        }
    }

    /// Rational approximation; exact for rationals, within `width` for
    /// field elements, the literal centre for decimals.
    pub fn approximate(&self, width: &Rational) -> Result<Rational> {
        match self {
            RealValue::Rational(r) => Ok(r.clone()),
            RealValue::Field(x) => x.approximate(width),
            RealValue::Decimal(d) => Ok(d.value()),
        }
    }

    pub(crate) fn rebind(&self, field: &Arc<NumberField>) -> Result<RealValue> {
        match self {
            RealValue::Field(x) => x.with_field(field).map(RealValue::Field),
            other => Ok(other.clone()),
        }
    }
}

fn mixed(a: Backend, b: Backend) -> Error {
    Error::MixedBackends(a.name(), b.name())
}
