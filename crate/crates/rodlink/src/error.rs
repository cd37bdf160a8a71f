use thiserror::Error;

use crate::vector::RatVec3;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("ZERO_DIRECTION: direction vector is (0,0,0)")]
    ZeroDirection,
    #[error("NONSIMPLE: direction {0} has gcd {1} and does not close up into a simple circle")]
    NonSimple(String, i64),
    #[error("DEGENERATE_POSITION: rod {rod} hits a face boundary at {point}; try translating by {suggestion}")]
    DegeneratePosition {
        rod: usize,
        point: Box<RatVec3>,
        suggestion: Box<RatVec3>,
    },
    #[error("INTERSECTS_STANDARD_RODS: rod {0} meets a standard rod without coinciding with it")]
    IntersectsStandardRods(usize),
    #[error("ENDPOINT_MISMATCH: rod {rod}, arc {arc}: glued endpoints map to different points")]
    EndpointMismatch { rod: usize, arc: usize },
    #[error("NON_GENERIC_PROJECTION: no projection direction from index {0} on is generic")]
    NonGenericProjection(usize),
    #[error("SAME_COMPONENT: linking number needs two distinct components, got {0} twice")]
    SameComponent(usize),
    #[error("UNKNOWN_COMPONENT: no component {0}")]
    UnknownComponent(usize),
    #[error("INVALID_PACKING: {0}")]
    InvalidPacking(String),
    #[error("ROUTING_FAILED: could not route rod images without collisions")]
    RoutingFailed,
}

impl Error {
    /// Machine-readable code, the text before the first colon.
    pub fn code(&self) -> &'static str {
        match self {
            Error::ZeroDirection => "ZERO_DIRECTION",
            Error::NonSimple(..) => "NONSIMPLE",
            Error::DegeneratePosition { .. } => "DEGENERATE_POSITION",
            Error::IntersectsStandardRods(_) => "INTERSECTS_STANDARD_RODS",
            Error::EndpointMismatch { .. } => "ENDPOINT_MISMATCH",
            Error::NonGenericProjection(_) => "NON_GENERIC_PROJECTION",
            Error::SameComponent(_) => "SAME_COMPONENT",
            Error::UnknownComponent(_) => "UNKNOWN_COMPONENT",
            Error::InvalidPacking(_) => "INVALID_PACKING",
            Error::RoutingFailed => "ROUTING_FAILED",
        }
    }
}

pub type Result<T> = std::result::Result<T, Error>;
