//! Text forms of expandable values.
//!
//! ```text
//! rat:<num>/<den>
//! dec:<decimal-literal>[,guard=<g>]
//! alg:poly=<c0,...,cd>;elem=<e0,...>;lo=<rational>;hi=<rational>
//! ```

use std::fmt;
use std::str::FromStr;

use bcf_core::arith::{
    parse_rational, rational_to_string, GuardedDecimal, NumberField, NumberFieldElement, PolySpec,
    Rational, RealValue,
};
use num_bigint::BigInt;

use crate::{CliError, CliResult};

const DEFAULT_GUARD: u32 = 1;

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum ValueSpec {
    Rat(Rational),
    Dec(GuardedDecimal),
    Alg {
        poly: PolySpec,
        elem: Vec<Rational>,
        lo: Rational,
        hi: Rational,
    },
}

fn parse_err(text: &str, why: &str) -> CliError {
    CliError::Parse(format!("invalid value '{text}': {why}"))
}

impl FromStr for ValueSpec {
    type Err = CliError;

    fn from_str(text: &str) -> CliResult<Self> {
        let (kind, body) = text
            .split_once(':')
            .ok_or_else(|| parse_err(text, "expected rat:, dec: or alg: prefix"))?;
        match kind {
            "rat" => {
                if body.contains(['e', 'E', '.']) {
                    return Err(parse_err(text, "rat: takes <num>/<den> or an integer"));
                }
                parse_rational(body)
                    .map(ValueSpec::Rat)
                    .ok_or_else(|| parse_err(text, "bad rational"))
            }
            "dec" => {
                let (literal, guard) = match body.split_once(',') {
                    Some((lit, opt)) => {
                        let g = opt
                            .strip_prefix("guard=")
                            .and_then(|g| g.parse::<u32>().ok())
                            .ok_or_else(|| parse_err(text, "expected guard=<digits>"))?;
                        (lit, g)
                    }
                    None => (body, DEFAULT_GUARD),
                };
                GuardedDecimal::parse(literal, guard)
                    .map(ValueSpec::Dec)
                    .map_err(|e| parse_err(text, &e.to_string()))
            }
            "alg" => parse_alg(text, body),
            _ => Err(parse_err(text, "unknown value kind")),
        }
    }
}

fn parse_alg(text: &str, body: &str) -> CliResult<ValueSpec> {
    let mut poly = None;
    let mut elem = None;
    let mut lo = None;
    let mut hi = None;
    for part in body.split(';') {
        let (key, value) = part
            .split_once('=')
            .ok_or_else(|| parse_err(text, "expected key=value fields"))?;
        let list = || -> CliResult<Vec<Rational>> {
            value
                .split(',')
                .map(|c| parse_rational(c).ok_or_else(|| parse_err(text, "bad coefficient")))
                .collect()
        };
        let single = || parse_rational(value).ok_or_else(|| parse_err(text, "bad endpoint"));
        let slot_taken = match key.trim() {
            "poly" => poly.replace(list()?).is_some(),
            "elem" => elem.replace(list()?).is_some(),
            "lo" => lo.replace(single()?).is_some(),
            "hi" => hi.replace(single()?).is_some(),
            other => return Err(parse_err(text, &format!("unknown field '{other}'"))),
        };
        if slot_taken {
            return Err(parse_err(text, &format!("duplicate field '{key}'")));
        }
    }
    let missing = |name| parse_err(text, &format!("missing {name}="));
    let poly = poly.ok_or_else(|| missing("poly"))?;
    if poly.iter().any(|c| !c.is_integer()) {
        return Err(parse_err(text, "poly coefficients must be integers"));
    }
    let poly = PolySpec::new(poly.into_iter().map(|c| c.to_integer()).collect());
    Ok(ValueSpec::Alg {
        poly,
        elem: elem.ok_or_else(|| missing("elem"))?,
        lo: lo.ok_or_else(|| missing("lo"))?,
        hi: hi.ok_or_else(|| missing("hi"))?,
    })
}

impl ValueSpec {
    pub fn to_real(&self) -> CliResult<RealValue> {
        Ok(match self {
            ValueSpec::Rat(r) => RealValue::Rational(r.clone()),
            ValueSpec::Dec(d) => RealValue::Decimal(d.clone()),
            ValueSpec::Alg { poly, elem, lo, hi } => {
                let field = NumberField::new(poly.clone(), lo.clone(), hi.clone())?;
                RealValue::Field(NumberFieldElement::new(&field, elem.clone()))
            }
        })
    }

    /// Canonical form: reduced rationals, explicit guard, and for algebraic
    /// values the element reduced modulo the polynomial and padded to its
    /// degree.
    pub fn canonical(&self) -> CliResult<String> {
        Ok(match self {
            ValueSpec::Alg { poly, lo, hi, .. } => {
                let RealValue::Field(x) = self.to_real()? else {
                    unreachable!()
                };
                format!(
                    "alg:poly={};elem={};lo={};hi={}",
                    join(poly.coeffs().iter().map(BigInt::to_string)),
                    join(x.residue().iter().map(rational_to_string)),
                    rational_to_string(lo),
                    rational_to_string(hi),
                )
            }
            other => other.to_string(),
        })
    }
}

fn join<I: Iterator<Item = String>>(items: I) -> String {
    items.collect::<Vec<_>>().join(",")
}

impl fmt::Display for ValueSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            ValueSpec::Rat(r) => write!(f, "rat:{}/{}", r.numer(), r.denom()),
            ValueSpec::Dec(d) => write!(f, "dec:{d},guard={}", d.guard_digits()),
            ValueSpec::Alg { poly, elem, lo, hi } => write!(
                f,
                "alg:poly={};elem={};lo={};hi={}",
                join(poly.coeffs().iter().map(BigInt::to_string)),
                join(elem.iter().map(rational_to_string)),
                rational_to_string(lo),
                rational_to_string(hi),
            ),
        }
    }
}
