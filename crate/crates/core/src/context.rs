//! Per-run configuration threaded through every operation.

use std::collections::BTreeMap;

use crate::arith::poly::MultiPoly;
use crate::error::{Error, Result};

/// Default maximal degree accepted by the univariate factorizer.
pub const DEFAULT_DEGREE_BOUND: usize = 8;

/// User-supplied factorizations, keyed by the primitive part of the polynomial.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct FactorHints {
    hints: BTreeMap<MultiPoly, Vec<MultiPoly>>,
}

impl FactorHints {
    /// Register `poly = c * prod factors` (factors repeated according to multiplicity).
    pub fn insert(&mut self, poly: &MultiPoly, factors: Vec<MultiPoly>) -> Result<()> {
        if poly.is_zero() || factors.iter().any(MultiPoly::is_zero) {
            return Err(Error::InvalidArgument("factor hint involves zero".into()));
        }
        let product = factors
            .iter()
            .fold(MultiPoly::one(poly.ring()), |acc, f| &acc * &f.primitive_part());
        if product.primitive_part() != poly.primitive_part() {
            return Err(Error::InvalidArgument(format!(
                "factor hint does not multiply out to {poly}"
            )));
        }
        self.hints.insert(
            poly.primitive_part(),
            factors.iter().map(MultiPoly::primitive_part).filter(|f| !f.is_constant()).collect(),
        );
        Ok(())
    }

    pub fn get(&self, poly: &MultiPoly) -> Option<&[MultiPoly]> {
        self.hints.get(&poly.primitive_part()).map(Vec::as_slice)
    }

    pub fn is_empty(&self) -> bool {
        self.hints.is_empty()
    }

    pub fn iter(&self) -> impl Iterator<Item = (&MultiPoly, &Vec<MultiPoly>)> {
        self.hints.iter()
    }
}

/// Seed, factorization bound and hints. Immutable once built; share freely.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Context {
    pub seed: u64,
    pub degree_bound: usize,
    pub hints: FactorHints,
}

impl Default for Context {
    fn default() -> Self {
        Context { seed: 0, degree_bound: DEFAULT_DEGREE_BOUND, hints: FactorHints::default() }
    }
}

impl Context {
    pub fn with_seed(seed: u64) -> Self {
        Context { seed, ..Default::default() }
    }
}
