//! Exact Milnor-symbol computations on the Gersten complex of the projective line and
//! the affine plane over the rationals, with first-order deformations over the dual numbers.

pub mod arith;
pub mod context;
pub mod error;
pub mod geometry;
pub mod gersten;
pub mod ksymbols;
pub mod parse;
pub mod tangent;

pub use arith::dual::DualRatFunc;
pub use arith::poly::{MultiPoly, Ring, Var};
pub use arith::ratfunc::RatFunc;
pub use arith::Rational;
pub use context::Context;
pub use error::{Error, Result};
pub use geometry::{ClosedPoint, ClosedPointCycle, DivisorCycle, PrimeDivisor, ResidueFunc, Variety};
pub use gersten::{Certificate, Claim, HigherCycleRep, Verdict};
pub use ksymbols::{DualMilnorSymbol, GGArc, K1Cycle, K1Value, MilnorSymbol};
pub use parse::{parse_expr, parse_ratfunc};
pub use tangent::{DiffForm, LocalCohClass};
