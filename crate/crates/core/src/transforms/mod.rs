//! Rotations in 3D and Lorentz transformations in 4D.
//!
//! All transforms are immutable values. Application to a vector goes through
//! the vector's Cartesian (or PxPyPzE) image and converts the result back to
//! the vector's own coordinate system.
//!
//! Four-dimensional matrices use component order `(x, y, z, t)` and the
//! metric `g = diag(-1, -1, -1, +1)`; a Lorentz transform satisfies
//! `Λᵀ·g·Λ = g`.

mod boost;
mod rotation;

use thiserror::Error;

use crate::scalar::Scalar;

pub use boost::{Boost, LorentzTransform};
pub use rotation::{AxisAngle, Rotation3D};

pub type Matrix3<S> = [[S; 3]; 3];
pub type Matrix4<S> = [[S; 4]; 4];

/// The Minkowski metric, `diag(-1, -1, -1, +1)`.
pub const METRIC: [f64; 4] = [-1.0, -1.0, -1.0, 1.0];

#[derive(Debug, Clone, PartialEq, Error)]
pub enum TransformError {
    #[error("boost velocity must satisfy |beta| < 1, got |beta|^2 = {beta2}")]
    Superluminal { beta2: f64 },
    #[error("boost velocity has a non-finite component")]
    NonFiniteVelocity,
    #[error("rotation matrix has determinant {det}; a proper rotation needs det > 0")]
    Improper { det: f64 },
    #[error("rotation axis has zero length")]
    ZeroAxis,
}

pub(crate) fn mul3<S: Scalar>(a: &Matrix3<S>, b: &Matrix3<S>) -> Matrix3<S> {
    let mut out = [[S::zero(); 3]; 3];
    for (i, row) in out.iter_mut().enumerate() {
        for (j, cell) in row.iter_mut().enumerate() {
            *cell = a[i][0] * b[0][j] + a[i][1] * b[1][j] + a[i][2] * b[2][j];
        }
    }
    out
}

pub(crate) fn mul4<S: Scalar>(a: &Matrix4<S>, b: &Matrix4<S>) -> Matrix4<S> {
    let mut out = [[S::zero(); 4]; 4];
    for (i, row) in out.iter_mut().enumerate() {
        for (j, cell) in row.iter_mut().enumerate() {
            *cell = a[i][0] * b[0][j] + a[i][1] * b[1][j] + a[i][2] * b[2][j] + a[i][3] * b[3][j];
        }
    }
    out
}

pub(crate) fn identity4<S: Scalar>() -> Matrix4<S> {
    let mut m = [[S::zero(); 4]; 4];
    for (i, row) in m.iter_mut().enumerate() {
        row[i] = S::one();
    }
    m
}

/// Largest component of `Λᵀ·g·Λ − g`.
pub fn metric_defect<S: Scalar>(m: &Matrix4<S>) -> S {
    let g: [S; 4] = METRIC.map(S::lit);
    let mut worst = S::zero();
    for i in 0..4 {
        for j in 0..4 {
            let mut acc = S::zero();
            for k in 0..4 {
                acc = acc + m[k][i] * g[k] * m[k][j];
            }
            let target = if i == j { g[i] } else { S::zero() };
            worst = worst.max((acc - target).abs());
        }
    }
    worst
}

/// Largest component of `Rᵀ·R − I`.
pub fn orthogonality_defect<S: Scalar>(m: &Matrix3<S>) -> S {
    let mut worst = S::zero();
    for i in 0..3 {
        for j in 0..3 {
            let dot = m[0][i] * m[0][j] + m[1][i] * m[1][j] + m[2][i] * m[2][j];
            let target = if i == j { S::one() } else { S::zero() };
            worst = worst.max((dot - target).abs());
        }
    }
    worst
}

pub(crate) fn det3<S: Scalar>(m: &Matrix3<S>) -> S {
    m[0][0] * (m[1][1] * m[2][2] - m[1][2] * m[2][1])
        - m[0][1] * (m[1][0] * m[2][2] - m[1][2] * m[2][0])
        + m[0][2] * (m[1][0] * m[2][1] - m[1][1] * m[2][0])
}
