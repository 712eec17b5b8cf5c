use thiserror::Error;

use crate::biarc::Case;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Clone, PartialEq, Error)]
pub enum Error {
    #[error("non-finite coordinate in {0}")]
    NonFinite(&'static str),

    #[error("{0} is too short to normalize")]
    ZeroTangent(&'static str),

    #[error("end points coincide (zero chord)")]
    ZeroChord,

    #[error("mirror vector has zero length")]
    ZeroMirror,

    #[error("point is off the joint circle (relative residual {residual:.3e})")]
    OffCircle { residual: f64 },

    #[error("biarc construction failed ({case}): {reason}")]
    Construction { case: Case, reason: String },

    #[error("radius {radius} cannot be realized: denominator vanishes")]
    InfeasibleRadius { radius: f64 },

    #[error("joint tangent is indeterminate: both radii equal {radius}")]
    IndeterminateJointTangent { radius: f64 },

    #[error("curvature constrained solution is inconsistent: {0}")]
    Inconsistent(String),

    #[error("polyline needs at least 2 vertices, got {0}")]
    TooFewVertices(usize),

    #[error("vertices {0} and {1} coincide")]
    DuplicateVertex(usize, usize),

    #[error("closed polyline repeats its first vertex at the end")]
    RepeatedClosingVertex,

    #[error("vertex {0}: predecessor and successor coincide, tangent undefined")]
    UndefinedTangent(usize),

    #[error("expected {expected} tangents, got {got}")]
    TangentCount { expected: usize, got: usize },

    #[error("edge {index}: {source}")]
    Edge {
        index: usize,
        #[source]
        source: Box<Error>,
    },

    #[error("invalid strategy: {0}")]
    InvalidStrategy(String),

    #[error("{location}: {message}")]
    Parse { location: String, message: String },
}

impl Error {
    pub(crate) fn construction(case: Case, reason: impl Into<String>) -> Self {
        Error::Construction {
            case,
            reason: reason.into(),
        }
    }

    pub(crate) fn parse(location: impl Into<String>, message: impl Into<String>) -> Self {
        Error::Parse {
            location: location.into(),
            message: message.into(),
        }
    }

    /// True for failures caused by the input data rather than by geometry.
    pub fn is_input_error(&self) -> bool {
        match self {
            Error::NonFinite(_)
            | Error::ZeroTangent(_)
            | Error::TooFewVertices(_)
            | Error::DuplicateVertex(..)
            | Error::RepeatedClosingVertex
            | Error::UndefinedTangent(_)
            | Error::TangentCount { .. }
            | Error::InvalidStrategy(_)
            | Error::Parse { .. } => true,
            Error::Edge { source, .. } => source.is_input_error(),
            _ => false,
        }
    }
}
