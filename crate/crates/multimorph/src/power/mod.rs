//! Volume-constrained centroidal power diagrams and FE-mesh extraction.

mod diagram;
mod mesh;
mod vcpd;
mod volumes;

pub use diagram::{build_power_diagram, PowerDiagram};
pub use mesh::{extract_fe_mesh, BoundaryTags, FeMesh};
pub use vcpd::{solve_centroidal_vcpd, SiteUpdate, VcpdConfig, VcpdReport};
pub use volumes::{relative_to_physical_volumes, solve_volume_constraints, RelativeVolumes};

use thiserror::Error;

/// Errors raised by power-diagram construction and the volume solvers.
#[derive(Debug, Error)]
pub enum PowerError {
    #[error("sites {0} and {1} coincide within the weld tolerance")]
    DuplicateSites(usize, usize),
    #[error("site {0} lies outside the domain")]
    SiteOutsideDomain(usize),
    #[error("no sites given")]
    NoSites,
    #[error("target volumes invalid: {0}")]
    InvalidTargets(String),
    #[error("volume Newton failed to converge after {iterations} iterations (worst residual {residual:.3e})")]
    VolumeNewton { iterations: usize, residual: f64 },
    #[error("cell {0} is empty")]
    EmptyCell(usize),
    #[error("{0}")]
    Geometry(#[from] crate::geom::GeomError),
    #[error("mesh misses required boundary tag: {0}; refine the diagram or enlarge the tagged segment")]
    MissingBoundaryTag(String),
}
