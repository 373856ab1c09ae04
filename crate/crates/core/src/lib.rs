//! Naive incremental triangulation of planar point sets in general position,
//! with exact predicates and an executable correctness harness.
//!
//! ```
//! use naivetri::{PointTable, Triangulation};
//!
//! let table = PointTable::from_coords(&[(0, 0), (4, 0), (0, 4), (1, 1)]).unwrap();
//! let t = Triangulation::triangulate(&table).unwrap();
//! assert_eq!(t.len(), 3);
//! ```

pub mod error;
pub mod format;
pub mod fuzz;
pub mod generate;
pub mod hull;
pub mod predicates;
pub mod svg;
pub mod table;
pub mod triangle;
pub mod triangulation;
pub mod verifier;

pub use error::{Error, Result};
pub use format::{parse_point_file, render_point_file, Document, ParseError};
pub use fuzz::{exhaust_grid, fuzz_axioms, FuzzReport, PropertyCounts};
pub use generate::generate_points;
pub use hull::{color_changes, hull_oracle, purple_from_colors, EdgeColor, HullLoop, PurpleReport};
pub use predicates::{
    inside_triangle, orient, orient_rational, orientation_determinant, separated, Orientation, Point,
    RationalPoint, COORD_BOUND,
};
pub use svg::render_svg;
pub use table::PointTable;
pub use triangle::{Idx3, OrientedTriangle, PointId};
pub use triangulation::{Edge, Insertion, Step, Steps, Triangulation};
pub use verifier::{verify_all, verify_mesh, verify_steps, CheckResult, Status, VerificationReport, VerifyOptions};

#[cfg(doctest)]
mod book {
    #[doc = include_str!("../../../book/src/introduction.md")]
    struct Introduction;

    #[doc = include_str!("../../../book/src/predicates.md")]
    struct Predicates;

    #[doc = include_str!("../../../book/src/triangles.md")]
    struct Triangles;

    #[doc = include_str!("../../../book/src/insertion.md")]
    struct Insertion;

    #[doc = include_str!("../../../book/src/hull.md")]
    struct Hull;

    #[doc = include_str!("../../../book/src/verification.md")]
    struct Verification;

    #[doc = include_str!("../../../book/src/cli.md")]
    struct Cli;
}
