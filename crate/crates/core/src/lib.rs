//! Exact arithmetic for bifurcating (order-m) continued fractions.
//!
//! An m-tuple of positive reals is expanded into m coupled sequences of
//! non-negative integer digits. The digits can be turned back into exact
//! rational convergents, checked for eventual periodicity by exact state
//! recurrence, and compared against the polynomial closed forms of the
//! constant-digit cases (Tribonacci, Moore, Tetranacci, ...).
//!
//! ```
//! use bcf_core::arith::{NumberField, NumberFieldElement, PolySpec, RealValue, Rational};
//! use bcf_core::expansion::expand;
//!
//! // Tribonacci root theta of x^3 - x^2 - x - 1 isolated in (1, 2).
//! let field = NumberField::new(
//!     PolySpec::from_i64s(&[-1, -1, -1, 1]),
//!     Rational::from_integer(1.into()),
//!     Rational::from_integer(2.into()),
//! ).unwrap();
//! let alpha = NumberFieldElement::theta(&field);
//! let beta = alpha.invert().unwrap().add_integer(&1.into());
//! let exp = expand(vec![RealValue::Field(alpha), RealValue::Field(beta)], 8).unwrap();
//! assert!(exp.digits().iter().flatten().all(|d| *d == 1.into()));
//! ```

pub mod arith;
pub mod closedform;
mod error;
pub mod evaluation;
pub mod expansion;
pub mod periodicity;
pub mod sequences;

pub use error::{Error, Result};
