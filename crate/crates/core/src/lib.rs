//! Exact comparison of two cooling geometries for 3D computing hardware:
//! evenly spaced slices and the Menger sponge.
//!
//! - [`metrics`]: closed-form volumes, surfaces, efficiencies and ratios over
//!   exact rationals.
//! - [`voxel`]: brute-force voxel oracle cross-checking the closed forms.
//! - [`analysis`]: comparison table, efficiency series, crossover search and
//!   CSV/JSON reports.
//! - [`mesh`]: exposed-face meshes with binary STL and OBJ writers.

pub mod analysis;
pub mod mesh;
pub mod metrics;
pub mod scalar;
pub mod voxel;

pub use metrics::{IterationIndex, ModelKind};
pub use scalar::ExactScalar;
