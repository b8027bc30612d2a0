//! 2D polygon primitives used by the power-diagram layer: areas, centroids,
//! half-plane clipping, and triangulation of (possibly non-convex) cells.
//!
//! All coordinates are in millimetres. Polygons are stored counter-clockwise;
//! constructors normalize orientation and reject degenerate input.

mod clip;
mod point;
mod polygon;
mod triangulate;

pub use clip::{clip_convex, clip_halfplanes, EdgeLabel, HalfPlane, LabeledPolygon};
pub use point::{Point2, Segment};
pub use polygon::{signed_area, Polygon};
pub use triangulate::{triangulate_cell, CellVertex};

use thiserror::Error;

/// Errors raised by geometric primitives.
#[derive(Debug, Error)]
pub enum GeomError {
    #[error("polygon needs at least 3 vertices, got {0}")]
    TooFewVertices(usize),
    #[error("polygon has a non-finite coordinate")]
    NonFinite,
    #[error("polygon area is zero or numerically degenerate")]
    DegenerateArea,
    #[error("polygon edges {0} and {1} intersect (polygon must be simple)")]
    SelfIntersecting(usize, usize),
    #[error("triangulation failed: {0}")]
    Triangulation(String),
}
