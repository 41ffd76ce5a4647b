use super::{phi_of, theta_of, Coords3D};
use crate::scalar::{normalize_phi, Scalar};

#[derive(Debug, Clone, Copy, PartialEq, Default)]
pub struct Cartesian3D<S> {
    x: S,
    y: S,
    z: S,
}

impl<S: Scalar> Cartesian3D<S> {
    pub fn new(x: S, y: S, z: S) -> Self {
        Self { x, y, z }
    }
}

impl<S: Scalar> Coords3D for Cartesian3D<S> {
    type Scalar = S;

    fn from_xyz(x: S, y: S, z: S) -> Self {
        Self { x, y, z }
    }

    fn x(&self) -> S {
        self.x
    }

    fn y(&self) -> S {
        self.y
    }

    fn z(&self) -> S {
        self.z
    }
}

/// Spherical coordinates `(r, theta, phi)`.
#[derive(Debug, Clone, Copy, PartialEq, Default)]
pub struct Polar3D<S> {
    r: S,
    theta: S,
    phi: S,
}

impl<S: Scalar> Polar3D<S> {
    /// Builds the point, folding a negative `r` or an out-of-range `theta`
    /// back into `r >= 0`, `theta ∈ [0, pi]`, `phi ∈ (-pi, pi]` without
    /// moving it.
    pub fn new(r: S, theta: S, phi: S) -> Self {
        let pi = S::PI();
        let (mut r, mut theta, mut phi) = (r, normalize_phi(theta), phi);
        if theta < S::zero() {
            theta = -theta;
            phi = phi + pi;
        }
        if r < S::zero() {
            r = -r;
            theta = pi - theta;
            phi = phi + pi;
        }
        Self {
            r,
            theta,
            phi: normalize_phi(phi),
        }
    }
}

impl<S: Scalar> Coords3D for Polar3D<S> {
    type Scalar = S;

    fn from_xyz(x: S, y: S, z: S) -> Self {
        let rho = (x * x + y * y).sqrt();
        Self {
            r: (x * x + y * y + z * z).sqrt(),
            theta: theta_of(rho, z),
            phi: phi_of(x, y),
        }
    }

    fn x(&self) -> S {
        self.rho() * self.phi.cos()
    }

    fn y(&self) -> S {
        self.rho() * self.phi.sin()
    }

    fn z(&self) -> S {
        self.r * self.theta.cos()
    }

    fn mag2(&self) -> S {
        self.r * self.r
    }

    fn r(&self) -> S {
        self.r
    }

    fn rho(&self) -> S {
        self.r * self.theta.sin()
    }

    fn theta(&self) -> S {
        self.theta
    }

    fn phi(&self) -> S {
        self.phi
    }
}

/// Cylindrical coordinates `(rho, phi, z)`.
#[derive(Debug, Clone, Copy, PartialEq, Default)]
pub struct Cylindrical3D<S> {
    rho: S,
    phi: S,
    z: S,
}

impl<S: Scalar> Cylindrical3D<S> {
    /// A negative `rho` is flipped and the azimuth turned by pi.
    pub fn new(rho: S, phi: S, z: S) -> Self {
        if rho < S::zero() {
            Self {
                rho: -rho,
                phi: normalize_phi(phi + S::PI()),
                z,
            }
        } else {
            Self {
                rho,
                phi: normalize_phi(phi),
                z,
            }
        }
    }
}

impl<S: Scalar> Coords3D for Cylindrical3D<S> {
    type Scalar = S;

    fn from_xyz(x: S, y: S, z: S) -> Self {
        Self {
            rho: (x * x + y * y).sqrt(),
            phi: phi_of(x, y),
            z,
        }
    }

    fn x(&self) -> S {
        self.rho * self.phi.cos()
    }

    fn y(&self) -> S {
        self.rho * self.phi.sin()
    }

    fn z(&self) -> S {
        self.z
    }

    fn rho(&self) -> S {
        self.rho
    }

    fn phi(&self) -> S {
        self.phi
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use std::f64::consts::{FRAC_PI_2, FRAC_PI_4, SQRT_2};

    #[test]
    fn cartesian_diagonal_to_polar() {
        let p = Polar3D::from_xyz(1.0_f64, 1.0, 0.0);
        assert!((p.r() - SQRT_2).abs() < 1e-15);
        assert!((p.theta() - FRAC_PI_2).abs() < 1e-15);
        assert!((p.phi() - FRAC_PI_4).abs() < 1e-15);
    }

    #[test]
    fn polar_folding_preserves_the_point() {
        let raw_r = -2.0_f64;
        let (t, f) = (0.4_f64, 1.1_f64);
        let expect = [
            raw_r * t.sin() * f.cos(),
            raw_r * t.sin() * f.sin(),
            raw_r * t.cos(),
        ];
        let p = Polar3D::new(raw_r, t, f);
        assert!(p.r() > 0.0);
        assert!((0.0..=std::f64::consts::PI).contains(&p.theta()));
        for (got, want) in [p.x(), p.y(), p.z()].into_iter().zip(expect) {
            assert!((got - want).abs() < 1e-14, "{got} vs {want}");
        }

        let q = Polar3D::new(1.0_f64, -0.3, 0.2);
        assert!((q.theta() - 0.3).abs() < 1e-15);
        assert!((q.z() - 0.3_f64.cos()).abs() < 1e-15);
        assert!((q.x() - (-0.3_f64).sin() * 0.2_f64.cos()).abs() < 1e-15);
    }

    #[test]
    fn cylindrical_negative_rho() {
        let c = Cylindrical3D::new(-1.0_f64, 0.0, 5.0);
        assert_eq!(c.rho(), 1.0);
        assert!((c.x() + 1.0).abs() < 1e-15);
        assert_eq!(c.z(), 5.0);
    }

    #[test]
    fn null_vector_angles() {
        let p = Polar3D::from_xyz(0.0_f64, 0.0, 0.0);
        assert_eq!((p.r(), p.theta(), p.phi()), (0.0, 0.0, 0.0));
        assert_eq!(Cartesian3D::<f64>::default().eta(), 0.0);
    }
}
