use super::{phi_of, Coords2D};
use crate::scalar::{normalize_phi, Scalar};

#[derive(Debug, Clone, Copy, PartialEq, Default)]
pub struct Cartesian2D<S> {
    x: S,
    y: S,
}

impl<S: Scalar> Cartesian2D<S> {
    pub fn new(x: S, y: S) -> Self {
        Self { x, y }
    }
}

impl<S: Scalar> Coords2D for Cartesian2D<S> {
    type Scalar = S;

    fn from_xy(x: S, y: S) -> Self {
        Self { x, y }
    }

    fn x(&self) -> S {
        self.x
    }

    fn y(&self) -> S {
        self.y
    }
}

/// `(r, phi)` with `r >= 0` and `phi` in `(-pi, pi]`.
#[derive(Debug, Clone, Copy, PartialEq, Default)]
pub struct Polar2D<S> {
    r: S,
    phi: S,
}

impl<S: Scalar> Polar2D<S> {
    /// A negative radius is flipped and the azimuth turned by pi.
    pub fn new(r: S, phi: S) -> Self {
        if r < S::zero() {
            Self {
                r: -r,
                phi: normalize_phi(phi + S::PI()),
            }
        } else {
            Self {
                r,
                phi: normalize_phi(phi),
            }
        }
    }
}

impl<S: Scalar> Coords2D for Polar2D<S> {
    type Scalar = S;

    fn from_xy(x: S, y: S) -> Self {
        Self {
            r: (x * x + y * y).sqrt(),
            phi: phi_of(x, y),
        }
    }

    fn x(&self) -> S {
        self.r * self.phi.cos()
    }

    fn y(&self) -> S {
        self.r * self.phi.sin()
    }

    fn r(&self) -> S {
        self.r
    }

    fn phi(&self) -> S {
        self.phi
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use std::f64::consts::PI;

    #[test]
    fn negative_radius_is_normalized() {
        let p = Polar2D::new(-2.0_f64, 0.25);
        assert_eq!(p.r(), 2.0);
        assert!((p.phi() - (0.25 - PI)).abs() < 1e-15);
        // same point as before normalisation
        assert!((p.x() + 2.0 * 0.25_f64.cos()).abs() < 1e-15);
    }

    #[test]
    fn cartesian_to_polar() {
        let p = Polar2D::from_xy(0.0_f64, -3.0);
        assert_eq!(p.r(), 3.0);
        assert!((p.phi() + PI / 2.0).abs() < 1e-15);
    }
}
