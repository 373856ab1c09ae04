use thiserror::Error;

use crate::predicates::Point;
use crate::triangle::{OrientedTriangle, PointId};
use crate::triangulation::Edge;

/// Errors raised by the geometric primitives, the triangulation and the
/// hull machinery.
///
/// Variants fall in three groups: input validation (the caller handed us
/// something outside general position), precondition failures of a single
/// operation, and internal invariant failures. The last group can only fire
/// when the implementation itself is wrong; see [`Error::is_internal`].
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("coordinate ({x}, {y}) exceeds the bound of 2^30 in absolute value")]
    CoordinateOutOfRange { x: i64, y: i64 },

    #[error("degenerate input: {0}, {1} and {2} are collinear")]
    DegenerateInput(Point, Point, Point),

    #[error("expected exactly 3 distinct points, got {0}")]
    WrongCardinality(usize),

    #[error("precondition violated: {0}")]
    PreconditionViolated(String),

    #[error("edge {0} is not a boundary edge")]
    NotBoundary(Edge),

    #[error("need at least 3 points, got {0}")]
    TooFewPoints(usize),

    #[error("points {first} and {second} are equal")]
    DuplicatePoint { first: PointId, second: PointId },

    #[error("points {} {} {} are collinear", .0[0], .0[1], .0[2])]
    CollinearTriple([PointId; 3]),

    #[error("query point lies inside triangle {0}")]
    InsidePoint(OrientedTriangle),

    #[error("point id {0} is not in the point table")]
    UnknownPoint(PointId),

    #[error("could not generate points in general position: {0}")]
    GenerationExhausted(String),

    // Internal invariant failures.
    #[error("internal: point {0} is strictly inside more than one triangle")]
    MultipleContainers(Point),

    #[error("internal: no red boundary edge for outside point {0}")]
    NoRedEdge(PointId),

    #[error("internal: boundary edges do not form a single loop: {0}")]
    MalformedBoundary(String),

    #[error("internal: red hull edges are not contiguous ({changes} color changes)")]
    ContiguityViolation { changes: usize },
}

impl Error {
    /// True for failures that contradict a theorem about valid inputs.
    pub fn is_internal(&self) -> bool {
        matches!(
            self,
            Error::MultipleContainers(_)
                | Error::NoRedEdge(_)
                | Error::MalformedBoundary(_)
                | Error::ContiguityViolation { .. }
        )
    }
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
