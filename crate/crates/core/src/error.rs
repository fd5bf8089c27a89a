use thiserror::Error;

/// Errors raised by the algebra, geometry and symbol layers.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("degree {degree} exceeds the factorization bound {bound}; supply a pre-factored input")]
    DegreeBound { degree: usize, bound: usize },

    #[error("could not split {poly}; supply its factorization")]
    FactorIncomplete { poly: String },

    #[error("the two projections disagree on the intersection of {curve} with {other}")]
    ProjectionDisagreement { curve: String, other: String },

    #[error("{value} is not a unit")]
    NotAUnit { value: String },

    #[error("{value} is not a unit along {curve}")]
    NotAUnitAlongY { value: String, curve: String },

    #[error("restriction undefined: {0}")]
    RestrictionUndefined(String),

    #[error("objects live on different varieties or rings")]
    RingMismatch,

    #[error("not irreducible: {0}")]
    NotIrreducible(String),

    #[error("invalid argument: {0}")]
    InvalidArgument(String),

    #[error("unsupported configuration: {0}")]
    Unsupported(String),

    #[error("syntax error at position {pos}: {message}")]
    Syntax { pos: usize, message: String },

    #[error("eps appears to degree 2 or more at position {pos}")]
    EpsDegree { pos: usize },

    #[error("division by zero at position {pos}")]
    DivisionByZero { pos: usize },
}

impl Error {
    /// Capability errors mean the input was fine but the method could not certify an answer.
    pub fn is_capability(&self) -> bool {
        matches!(
            self,
            Error::DegreeBound { .. } | Error::FactorIncomplete { .. } | Error::ProjectionDisagreement { .. }
        )
    }

    /// Stable kebab-case name of the variant.
    pub fn kind(&self) -> &'static str {
        match self {
            Error::DegreeBound { .. } => "degree-bound",
            Error::FactorIncomplete { .. } => "factor-incomplete",
            Error::ProjectionDisagreement { .. } => "projection-disagreement",
            Error::NotAUnit { .. } => "not-a-unit",
            Error::NotAUnitAlongY { .. } => "not-a-unit-along-curve",
            Error::RestrictionUndefined(_) => "restriction-undefined",
            Error::RingMismatch => "ring-mismatch",
            Error::NotIrreducible(_) => "not-irreducible",
            Error::InvalidArgument(_) => "invalid-argument",
            Error::Unsupported(_) => "unsupported",
            Error::Syntax { .. } => "syntax",
            Error::EpsDegree { .. } => "eps-degree",
            Error::DivisionByZero { .. } => "division-by-zero",
        }
    }

    /// Character offset into the parsed source, for parser errors.
    pub fn position(&self) -> Option<usize> {
        match self {
            Error::Syntax { pos, .. } | Error::EpsDegree { pos } | Error::DivisionByZero { pos } => Some(*pos),
            _ => None,
        }
    }
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
