use std::sync::Arc;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use super::qpoly::{self, QPoly};
use super::{floor, rational_to_string, PolySpec, Rational};
use crate::{Error, Result};

/// Bisections allowed while resolving a single floor before giving up.
const MAX_BISECTIONS: usize = 20_000;

/// A real algebraic number field `Q[x]/(f)`, embedded in the reals by a
/// rational interval isolating one real root `theta` of the monic integer
/// modulus `f`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct NumberField {
    modulus: PolySpec,
    modulus_q: QPoly,
    lo: Rational,
    hi: Rational,
}

impl NumberField {
    /// Builds the field, checking that the modulus is monic of degree at
    /// least 2, that it changes sign strictly across `[lo, hi]`, and that the
    /// interval holds exactly one real root.
    pub fn new(modulus: PolySpec, lo: Rational, hi: Rational) -> Result<Arc<Self>> {
        if !modulus.is_monic() {
            return Err(Error::NonMonicModulus(modulus));
        }
        if modulus.degree() < 2 {
            return Err(Error::ModulusDegree {
                min: 2,
                got: modulus.degree(),
            });
        }
        if lo >= hi {
            return Err(Error::InvalidParameter(format!(
                "isolating interval needs lo < hi, got [{}, {}]",
                rational_to_string(&lo),
                rational_to_string(&hi)
            )));
        }
        if modulus.sign_at(&lo) * modulus.sign_at(&hi) >= 0 {
            return Err(Error::NoSignChange {
                lo: rational_to_string(&lo),
                hi: rational_to_string(&hi),
            });
        }
        let modulus_q = modulus.to_rational();
        let roots = qpoly::sturm_count(&modulus_q, &lo, &hi);
        if roots != 1 {
            return Err(Error::NonIsolatingInterval {
                lo: rational_to_string(&lo),
                hi: rational_to_string(&hi),
                roots,
            });
        }
        Ok(Arc::new(NumberField {
            modulus,
            modulus_q,
            lo,
            hi,
        }))
    }

    pub fn modulus(&self) -> &PolySpec {
        &self.modulus
    }

    pub fn degree(&self) -> usize {
        self.modulus.degree()
    }

    pub fn interval(&self) -> (&Rational, &Rational) {
        (&self.lo, &self.hi)
    }

    pub fn width(&self) -> Rational {
        &self.hi - &self.lo
    }

    /// True when both fields share a modulus and one isolating interval is
    /// nested in the other, which pins down the same root.
    pub fn same_root(&self, other: &NumberField) -> bool {
        self.modulus == other.modulus
            && ((self.lo <= other.lo && other.hi <= self.hi)
                || (other.lo <= self.lo && self.hi <= other.hi))
    }

    fn bisect(&self) -> Result<NumberField> {
        let mid = (&self.lo + &self.hi) / Rational::from_integer(2.into());
        let sign_mid = self.modulus.sign_at(&mid);
        if sign_mid == 0 {
            return Err(Error::ReducibleModulus {
                factor: format!("x - {}", rational_to_string(&mid)),
            });
        }
        let (lo, hi) = if sign_mid == self.modulus.sign_at(&self.lo) {
            (mid, self.hi.clone())
        } else {
            (self.lo.clone(), mid)
        };
        Ok(NumberField {
            modulus: self.modulus.clone(),
            modulus_q: self.modulus_q.clone(),
            lo,
            hi,
        })
    }

    /// Bisects until the isolating interval is no wider than `width`.
    pub fn refined(self: &Arc<Self>, width: &Rational) -> Result<Arc<Self>> {
        if self.width() <= *width {
            return Ok(Arc::clone(self));
        }
        let mut field = self.bisect()?;
        while field.width() > *width {
            field = field.bisect()?;
        }
        Ok(Arc::new(field))
    }

    fn narrower(a: &Arc<Self>, b: &Arc<Self>) -> Result<Arc<Self>> {
        if Arc::ptr_eq(a, b) {
            return Ok(Arc::clone(a));
        }
        if !a.same_root(b) {
            return Err(Error::MixedFields);
        }
        Ok(if a.width() <= b.width() {
            Arc::clone(a)
        } else {
            Arc::clone(b)
        })
    }
}

/// Narrows an interval bracketing a root of `modulus` (sign change at the
/// endpoints) by bisection until its width is at most `width`. A midpoint
/// that is itself a root collapses the interval to that point.
pub fn refine_root(
    modulus: &PolySpec,
    interval: (Rational, Rational),
    width: &Rational,
) -> Result<(Rational, Rational)> {
    let (mut lo, mut hi) = interval;
    if lo > hi {
        std::mem::swap(&mut lo, &mut hi);
    }
    let sign_lo = modulus.sign_at(&lo);
    let sign_hi = modulus.sign_at(&hi);
    if sign_lo == 0 {
        return Ok((lo.clone(), lo));
    }
    if sign_hi == 0 {
        return Ok((hi.clone(), hi));
    }
    if sign_lo == sign_hi {
        return Err(Error::NoSignChange {
            lo: rational_to_string(&lo),
            hi: rational_to_string(&hi),
        });
    }
    let two = Rational::from_integer(2.into());
    while &hi - &lo > *width {
        let mid = (&lo + &hi) / &two;
        match modulus.sign_at(&mid) {
            0 => return Ok((mid.clone(), mid)),
            s if s == sign_lo => lo = mid,
            _ => hi = mid,
        }
    }
    Ok((lo, hi))
}

/// An element of a [`NumberField`] in the power basis `1, theta, ...,
/// theta^(d-1)`.
#[derive(Debug, Clone)]
pub struct NumberFieldElement {
    field: Arc<NumberField>,
    residue: Vec<Rational>,
}

impl PartialEq for NumberFieldElement {
    fn eq(&self, other: &Self) -> bool {
        self.residue == other.residue && self.field.same_root(&other.field)
    }
}

impl Eq for NumberFieldElement {}

impl NumberFieldElement {
    /// Reduces `coeffs` (ascending powers of theta, any length) modulo the
    /// field's modulus.
    pub fn new(field: &Arc<NumberField>, coeffs: Vec<Rational>) -> Self {
        let reduced = qpoly::divrem(&coeffs, &field.modulus_q).1;
        Self::from_reduced(Arc::clone(field), reduced)
    }

    fn from_reduced(field: Arc<NumberField>, mut residue: QPoly) -> Self {
        residue.resize(field.degree(), Rational::zero());
        NumberFieldElement { field, residue }
    }

    pub fn from_rational(field: &Arc<NumberField>, value: Rational) -> Self {
        Self::new(field, vec![value])
    }

    /// The generator `theta` itself.
    pub fn theta(field: &Arc<NumberField>) -> Self {
        Self::new(field, vec![Rational::zero(), Rational::one()])
    }

    pub fn field(&self) -> &Arc<NumberField> {
        &self.field
    }

    pub fn residue(&self) -> &[Rational] {
        &self.residue
    }

    pub fn is_zero(&self) -> bool {
        self.residue.iter().all(Zero::is_zero)
    }

    /// The rational value when the residue has degree 0.
    pub fn as_rational(&self) -> Option<&Rational> {
        if self.residue[1..].iter().all(Zero::is_zero) {
            Some(&self.residue[0])
        } else {
            None
        }
    }

    /// Rebinds the element to an equivalent field, typically one with a
    /// narrower isolating interval.
    pub fn with_field(&self, field: &Arc<NumberField>) -> Result<Self> {
        if !self.field.same_root(field) {
            return Err(Error::MixedFields);
        }
        Ok(NumberFieldElement {
            field: Arc::clone(field),
            residue: self.residue.clone(),
        })
    }

    fn trimmed(&self) -> QPoly {
        qpoly::trim(self.residue.clone())
    }

    pub fn add(&self, other: &Self) -> Result<Self> {
        let field = NumberField::narrower(&self.field, &other.field)?;
        let residue = self
            .residue
            .iter()
            .zip(&other.residue)
            .map(|(a, b)| a + b)
            .collect();
        Ok(NumberFieldElement { field, residue })
    }

    pub fn sub(&self, other: &Self) -> Result<Self> {
        let field = NumberField::narrower(&self.field, &other.field)?;
        let residue = self
            .residue
            .iter()
            .zip(&other.residue)
            .map(|(a, b)| a - b)
            .collect();
        Ok(NumberFieldElement { field, residue })
    }

    pub fn add_integer(&self, n: &BigInt) -> Self {
        let mut residue = self.residue.clone();
        residue[0] += Rational::from_integer(n.clone());
        NumberFieldElement {
            field: Arc::clone(&self.field),
            residue,
        }
    }

    pub fn sub_integer(&self, n: &BigInt) -> Self {
        self.add_integer(&-n)
    }

    /// Product reduced modulo the field's modulus.
    pub fn mul(&self, other: &Self) -> Result<Self> {
        let field = NumberField::narrower(&self.field, &other.field)?;
        let product = qpoly::mul(&self.trimmed(), &other.trimmed());
        let reduced = qpoly::divrem(&product, &field.modulus_q).1;
        Ok(Self::from_reduced(field, reduced))
    }

    /// Multiplicative inverse via the extended Euclidean algorithm on the
    /// residue and the modulus. A non-constant gcd means the modulus
    /// factors; the factor is reported.
    pub fn invert(&self) -> Result<Self> {
        let residue = self.trimmed();
        if residue.is_empty() {
            return Err(Error::ZeroInverse);
        }
        let (gcd, cofactor) = qpoly::gcd_with_cofactor(&residue, &self.field.modulus_q);
        if gcd.len() > 1 {
            return Err(Error::ReducibleModulus {
                factor: primitive_integer_poly(&gcd).to_string(),
            });
        }
        let reduced = qpoly::divrem(&cofactor, &self.field.modulus_q).1;
        Ok(Self::from_reduced(Arc::clone(&self.field), reduced))
    }

    pub fn div(&self, other: &Self) -> Result<Self> {
        self.mul(&other.invert()?)
    }

    /// Rational interval containing the element, from interval Horner
    /// evaluation of the residue over the current isolating interval.
    pub fn enclosure(&self) -> (Rational, Rational) {
        let (lo, hi) = self.field.interval();
        let mut acc_lo = Rational::zero();
        let mut acc_hi = Rational::zero();
        for c in self.residue.iter().rev() {
            let products = [&acc_lo * lo, &acc_lo * hi, &acc_hi * lo, &acc_hi * hi];
            let min = products.iter().min().unwrap().clone();
            let max = products.iter().max().unwrap().clone();
            acc_lo = min + c;
            acc_hi = max + c;
        }
        (acc_lo, acc_hi)
    }

    /// Floor of the element together with the (possibly narrower) field
    /// whose interval proved it.
    pub fn floor_refined(&self) -> Result<(BigInt, Arc<NumberField>)> {
        if let Some(r) = self.as_rational() {
            return Ok((floor(r), Arc::clone(&self.field)));
        }
        let mut current = NumberFieldElement {
            field: Arc::clone(&self.field),
            residue: self.residue.clone(),
        };
        for _ in 0..MAX_BISECTIONS {
            let (lo, hi) = current.enclosure();
            let fl = floor(&lo);
            if fl == floor(&hi) {
                return Ok((fl, current.field));
            }
            current.field = Arc::new(current.field.bisect()?);
        }
        Err(Error::RefinementLimit(MAX_BISECTIONS))
    }

    pub fn floor(&self) -> Result<BigInt> {
        self.floor_refined().map(|(fl, _)| fl)
    }

    /// Rational approximation within `width` of the true value.
    pub fn approximate(&self, width: &Rational) -> Result<Rational> {
        if let Some(r) = self.as_rational() {
            return Ok(r.clone());
        }
        // Lipschitz bound of the residue polynomial on the interval picks the
        // first refinement width; the loop covers interval overestimation.
        let (lo, hi) = self.field.interval();
        let reach = lo.abs().max(hi.abs());
        let slope =
            self.residue
                .iter()
                .enumerate()
                .skip(1)
                .fold(Rational::zero(), |acc, (i, c)| {
                    acc + c.abs()
                        * Rational::from_integer(i.into())
                        * num_traits::pow(reach.clone(), i - 1)
                });
        let mut target = if slope.is_zero() {
            width.clone()
        } else {
            width / (slope * Rational::from_integer(2.into()))
        };
        loop {
            let field = self.field.refined(&target)?;
            let current = self.with_field(&field)?;
            let (lo, hi) = current.enclosure();
            if &hi - &lo <= *width {
                return Ok((lo + hi) / Rational::from_integer(2.into()));
            }
            target /= Rational::from_integer(2.into());
        }
    }
}

/// Scales a rational polynomial to a primitive integer polynomial with
/// positive leading coefficient.
fn primitive_integer_poly(p: &[Rational]) -> PolySpec {
    let lcm = p.iter().fold(BigInt::one(), |acc, c| acc.lcm(c.denom()));
    let ints: Vec<BigInt> = p
        .iter()
        .map(|c| (c * Rational::from_integer(lcm.clone())).to_integer())
        .collect();
    let g = ints.iter().fold(BigInt::zero(), |acc, c| acc.gcd(c));
    let sign = if ints.last().is_some_and(Signed::is_negative) {
        -BigInt::one()
    } else {
        BigInt::one()
    };
    PolySpec::new(ints.into_iter().map(|c| c / &g * &sign).collect())
}
