use num_bigint::BigInt;
use thiserror::Error;

use crate::arith::PolySpec;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("values belong to different number fields")]
    MixedFields,

    #[error("values use different representations ({0} and {1})")]
    MixedBackends(&'static str, &'static str),

    #[error("attempted to invert zero")]
    ZeroInverse,

    #[error("modulus is reducible: found factor {factor}")]
    ReducibleModulus { factor: String },

    #[error("modulus must be a monic integer polynomial, got {0}")]
    NonMonicModulus(PolySpec),

    #[error("modulus must have degree at least {min}, got {got}")]
    ModulusDegree { min: usize, got: usize },

    #[error("polynomial has no sign change on [{lo}, {hi}]")]
    NoSignChange { lo: String, hi: String },

    #[error("interval [{lo}, {hi}] does not isolate exactly one root (found {roots})")]
    NonIsolatingInterval {
        lo: String,
        hi: String,
        roots: usize,
    },

    #[error(
        "floor is ambiguous: value {value} is within the guard band of {near}; \
         supply at least {extra_digits} more digit(s)"
    )]
    AmbiguousFloor {
        value: String,
        near: BigInt,
        extra_digits: u32,
    },

    #[error("floor not resolved after {0} interval bisections")]
    RefinementLimit(usize),

    #[error("value has negative floor {0}; only positive inputs are expanded")]
    NegativeInput(BigInt),

    #[error("expansion needs at least one value")]
    EmptyInput,

    #[error("expansion carries no exact state snapshots")]
    InexactBackend,

    #[error("invalid digit specification: {0}")]
    InvalidDigits(String),

    #[error("digit specification has {available} digits per sequence and no cycle; depth {depth} needs {needed}")]
    InsufficientDigits {
        available: usize,
        depth: usize,
        needed: usize,
    },

    #[error("tail value at depth {0} evaluates to zero")]
    ZeroTail(usize),

    #[error("no convergence to tolerance within depth {0}")]
    NoConvergence(usize),

    #[error("operation supports order {supported} only, got order {got}")]
    UnsupportedOrder { supported: usize, got: usize },

    #[error("tree depth {0} exceeds the rendering cap of 6")]
    TreeTooDeep(usize),

    #[error(
        "value precision too low: propagated error {bound} exceeds a third of tolerance {tol}"
    )]
    PrecisionTooLow { bound: String, tol: String },

    #[error("invalid parameter: {0}")]
    InvalidParameter(String),

    #[error("unknown evaluator '{0}'")]
    UnknownEvaluator(String),
}
