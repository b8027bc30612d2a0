//! Design of 2D multi-state shape-morphing structures.
//!
//! A structure printed from a temperature-switchable polymer can encode
//! several distinct deformation responses to a single mechanical actuation:
//! heating a subset of its cells softens them and re-routes the load path.
//! This crate provides the full design pipeline:
//!
//! - [`geom`]: polygon primitives, half-plane clipping, cell triangulation
//! - [`power`]: volume-constrained centroidal power diagrams and the
//!   finite-element mesh extracted from them
//! - [`fem`]: linear-elastic plane analysis with density- and
//!   temperature-dependent stiffness
//! - [`opt`]: the multi-state objective, adjoint gradients, and the
//!   two-phase optimization driver
//! - [`problems`]: problem documents, built-in materials, and bundled
//!   example setups
//!
//! Everything is deterministic for a fixed seed: a run can be reproduced
//! bit-for-bit.

pub mod fem;
pub mod geom;
pub mod opt;
pub mod power;
pub mod problems;

pub use fem::{BoundarySpec, MaterialParams, StateSolution};
pub use geom::{Point2, Polygon};
pub use opt::{DesignVariables, ObjectiveBreakdown, OptimizationResult};
pub use power::{FeMesh, PowerDiagram, RelativeVolumes};
pub use problems::ProblemSpec;
