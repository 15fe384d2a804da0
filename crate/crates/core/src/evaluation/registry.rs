use num_bigint::BigInt;
use num_traits::Zero;

use super::{BackwardRecurrence, MatrixProduct};
use crate::arith::Rational;
use crate::{Error, Result};

/// A strategy for turning unrolled digits into exact convergents.
///
/// `digits` holds m sequences of at least `depth + 1` digits each. Every
/// implementation must agree exactly with [`BackwardRecurrence`].
pub trait ConvergentEvaluator: Send + Sync {
    fn name(&self) -> &'static str;

    fn description(&self) -> &'static str;

    fn evaluate(&self, digits: &[Vec<BigInt>], depth: usize) -> Result<Vec<Rational>>;

    /// Convergents at every depth `0..=upto`.
    fn table(&self, digits: &[Vec<BigInt>], upto: usize) -> Result<Vec<Vec<Rational>>> {
        (0..=upto).map(|d| self.evaluate(digits, d)).collect()
    }
}

/// Truncation depth actually used: a terminal zero in the first sequence
/// would be divided by, so the truncation backs off one level at a time.
pub(crate) fn terminal_depth(digits: &[Vec<BigInt>], mut depth: usize) -> usize {
    while depth > 0 && digits[0][depth].is_zero() {
        depth -= 1;
    }
    depth
}

/// Named convergent evaluators, looked up at runtime.
pub struct EvaluatorRegistry {
    entries: Vec<Box<dyn ConvergentEvaluator>>,
}

impl EvaluatorRegistry {
    pub fn empty() -> Self {
        EvaluatorRegistry {
            entries: Vec::new(),
        }
    }

    /// Registers an evaluator, replacing any previous one of the same name.
    pub fn register(&mut self, evaluator: Box<dyn ConvergentEvaluator>) {
        self.entries.retain(|e| e.name() != evaluator.name());
        self.entries.push(evaluator);
    }

    pub fn get(&self, name: &str) -> Result<&dyn ConvergentEvaluator> {
        self.entries
            .iter()
            .find(|e| e.name() == name)
            .map(|e| e.as_ref())
            .ok_or_else(|| Error::UnknownEvaluator(name.to_string()))
    }

    pub fn names(&self) -> Vec<&'static str> {
        self.entries.iter().map(|e| e.name()).collect()
    }

    pub fn iter(&self) -> impl Iterator<Item = &dyn ConvergentEvaluator> {
        self.entries.iter().map(|e| e.as_ref())
    }
}

impl Default for EvaluatorRegistry {
    fn default() -> Self {
        let mut registry = Self::empty();
        registry.register(Box::new(BackwardRecurrence));
        registry.register(Box::new(MatrixProduct));
        registry
    }
}
