//! Coordinate systems and the vector types parameterised by them.
//!
//! A vector type ([`Vector2`], [`Vector3`], [`LorentzVector`]) owns exactly
//! one coordinate value. The coordinate system decides what is stored; the
//! traits below expose every quantity in every system, computing whatever is
//! not stored. Arithmetic always goes through the Cartesian (or PxPyPzE)
//! image and converts back, so one canonical evaluation order serves every
//! system.
//!
//! Singular loci (for instance a vector on the beam axis, or a massless
//! vector asked for its boost factor) never panic: eta and rapidity clamp to
//! [`ETA_MAX`](crate::ETA_MAX), gamma follows IEEE semantics.

mod systems2d;
mod systems3d;
mod systems4d;
mod vectors;

use std::fmt::Debug;

use num_traits::Float;

use crate::scalar::{eta_from_rho_z, normalize_phi, signed_sqrt, Scalar};

pub use systems2d::{Cartesian2D, Polar2D};
pub use systems3d::{Cartesian3D, Cylindrical3D, Polar3D};
pub use systems4d::{PtEtaPhiE4D, PtEtaPhiM4D, PxPyPzE4D, PxPyPzM4D};
pub use vectors::{
    delta_phi, delta_r, LorentzVector, Polar2DVector, Polar3DVector, Position3D,
    PtEtaPhiEVector, PtEtaPhiMVector, PxPyPzEVector, PxPyPzMVector, RhoPhiZVector, Vector2,
    Vector3, XYVector, XYZTVector, XYZVector,
};

/// A two-dimensional coordinate system.
pub trait Coords2D: Copy + PartialEq + Default + Debug + Send + Sync {
    type Scalar: Scalar;

    fn from_xy(x: Self::Scalar, y: Self::Scalar) -> Self;

    fn x(&self) -> Self::Scalar;
    fn y(&self) -> Self::Scalar;

    fn r(&self) -> Self::Scalar {
        let (x, y) = (self.x(), self.y());
        (x * x + y * y).sqrt()
    }

    fn phi(&self) -> Self::Scalar {
        phi_of(self.x(), self.y())
    }
}

/// A three-dimensional coordinate system.
pub trait Coords3D: Copy + PartialEq + Default + Debug + Send + Sync {
    type Scalar: Scalar;

    fn from_xyz(x: Self::Scalar, y: Self::Scalar, z: Self::Scalar) -> Self;

    fn x(&self) -> Self::Scalar;
    fn y(&self) -> Self::Scalar;
    fn z(&self) -> Self::Scalar;

    fn mag2(&self) -> Self::Scalar {
        let (x, y, z) = (self.x(), self.y(), self.z());
        x * x + y * y + z * z
    }

    /// Euclidean length.
    fn r(&self) -> Self::Scalar {
        self.mag2().sqrt()
    }

    /// Transverse radius.
    fn rho(&self) -> Self::Scalar {
        let (x, y) = (self.x(), self.y());
        (x * x + y * y).sqrt()
    }

    fn theta(&self) -> Self::Scalar {
        theta_of(self.rho(), self.z())
    }

    fn phi(&self) -> Self::Scalar {
        phi_of(self.x(), self.y())
    }

    fn eta(&self) -> Self::Scalar {
        eta_from_rho_z(self.rho(), self.z())
    }
}

/// A four-dimensional (Lorentz) coordinate system.
///
/// The canonical representation is `(px, py, pz, E)` with the time-like
/// component last and metric `m² = E² − |p|²`.
pub trait Coords4D: Copy + PartialEq + Default + Debug + Send + Sync {
    type Scalar: Scalar;

    fn from_px_py_pz_e(
        px: Self::Scalar,
        py: Self::Scalar,
        pz: Self::Scalar,
        e: Self::Scalar,
    ) -> Self;

    /// The four stored coordinates in declaration order.
    fn components(&self) -> [Self::Scalar; 4];

    fn px(&self) -> Self::Scalar;
    fn py(&self) -> Self::Scalar;
    fn pz(&self) -> Self::Scalar;
    fn e(&self) -> Self::Scalar;

    fn pt(&self) -> Self::Scalar {
        let (x, y) = (self.px(), self.py());
        (x * x + y * y).sqrt()
    }

    fn phi(&self) -> Self::Scalar {
        phi_of(self.px(), self.py())
    }

    fn eta(&self) -> Self::Scalar {
        eta_from_rho_z(self.pt(), self.pz())
    }

    fn p2(&self) -> Self::Scalar {
        let (x, y, z) = (self.px(), self.py(), self.pz());
        x * x + y * y + z * z
    }

    fn p(&self) -> Self::Scalar {
        self.p2().sqrt()
    }

    /// `E² − (px² + py² + pz²)`, evaluated in exactly that order.
    fn mass2(&self) -> Self::Scalar {
        let e = self.e();
        e * e - self.p2()
    }

    /// Signed invariant mass: negative for space-like vectors.
    fn mass(&self) -> Self::Scalar {
        signed_sqrt(self.mass2())
    }
}

/// Azimuth in `(-pi, pi]`; zero for the null vector.
pub(crate) fn phi_of<S: Scalar>(x: S, y: S) -> S {
    if x == S::zero() && y == S::zero() {
        return S::zero();
    }
    normalize_phi(y.atan2(x))
}

/// Polar angle in `[0, pi]`; zero for the null vector.
pub(crate) fn theta_of<S: Scalar>(rho: S, z: S) -> S {
    if rho == S::zero() && z == S::zero() {
        return S::zero();
    }
    rho.atan2(z)
}
