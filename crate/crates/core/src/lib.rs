//! Particle kinematics with swappable execution backends.
//!
//! The crate is organised in five layers:
//!
//! - [`coords`]: 2D/3D/4D coordinate systems and the generic vector types
//!   built on top of them ([`LorentzVector`] is the workhorse).
//! - [`transforms`]: 3D rotations (matrix and axis-angle) and Lorentz boosts.
//! - [`kernels`]: batch versions of the invariant-mass and boost problems,
//!   running through a [`kernels::Backend`] that is either sequential or a
//!   statically chunked thread pool.
//! - [`bench`]: the weak-scaling harness behind the `kinbench` binary.
//! - [`divergence`]: Jaccard line-set similarity and code divergence, behind
//!   the `codediv` binary.
//!
//! Every coordinate type is generic over its scalar precision (`f32` or
//! `f64`) and all arithmetic stays in that precision.

pub mod bench;
pub mod coords;
pub mod divergence;
pub mod kernels;
mod scalar;
pub mod transforms;

pub use coords::{
    Cartesian2D, Cartesian3D, Coords2D, Coords3D, Coords4D, Cylindrical3D, LorentzVector,
    Polar2D, Polar3D, PtEtaPhiE4D, PtEtaPhiM4D, PxPyPzE4D, PxPyPzM4D, Vector2, Vector3,
};
pub use scalar::{normalize_phi, Scalar, ETA_MAX, RAPIDITY_MAX};
pub use transforms::{AxisAngle, Boost, LorentzTransform, Rotation3D};
