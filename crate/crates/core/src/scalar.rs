use std::fmt::{Debug, Display};

use num_traits::{Float, FloatConst};

/// Pseudorapidity returned for a vector lying on the beam axis.
///
/// Only the sign carries information; the magnitude is a finite sentinel.
pub const ETA_MAX: f64 = 22756.0;

/// Rapidity returned when `E <= |pz|`, mirroring the eta clamp.
pub const RAPIDITY_MAX: f64 = ETA_MAX;

/// Floating-point precision a coordinate system is built on.
///
/// Implemented for `f32` and `f64`. Nothing in the crate promotes one to
/// the other implicitly; [`Scalar::lit`] is for literal constants only.
pub trait Scalar:
    Float + FloatConst + Default + Debug + Display + Send + Sync + 'static
{
    /// Short label used in reports: `"single"` or `"double"`.
    const PRECISION: &'static str;

    /// Converts a literal constant into this precision.
    fn lit(x: f64) -> Self;

    /// Raw IEEE-754 bit pattern, widened to 64 bits.
    fn bit_pattern(self) -> u64;

    fn eta_max() -> Self {
        Self::lit(ETA_MAX)
    }

    fn rapidity_max() -> Self {
        Self::lit(RAPIDITY_MAX)
    }
}

impl Scalar for f32 {
    const PRECISION: &'static str = "single";

    #[inline]
    fn lit(x: f64) -> Self {
        x as f32
    }

    #[inline]
    fn bit_pattern(self) -> u64 {
        u64::from(self.to_bits())
    }
}

impl Scalar for f64 {
    const PRECISION: &'static str = "double";

    #[inline]
    fn lit(x: f64) -> Self {
        x
    }

    #[inline]
    fn bit_pattern(self) -> u64 {
        self.to_bits()
    }
}

/// Wraps an angle into `(-pi, pi]`.
pub fn normalize_phi<S: Scalar>(phi: S) -> S {
    let pi = S::PI();
    if phi > -pi && phi <= pi {
        return phi;
    }
    let two_pi = pi + pi;
    let mut r = phi % two_pi;
    if r > pi {
        r = r - two_pi;
    } else if r <= -pi {
        r = r + two_pi;
    }
    r
}

/// `sqrt(x)` for `x >= 0`, `-sqrt(-x)` otherwise.
#[inline]
pub(crate) fn signed_sqrt<S: Scalar>(x: S) -> S {
    if x >= S::zero() {
        x.sqrt()
    } else {
        -(-x).sqrt()
    }
}

/// Pseudorapidity of a direction with transverse radius `rho` and
/// longitudinal component `z`, clamped to `±ETA_MAX` on the beam axis.
pub(crate) fn eta_from_rho_z<S: Scalar>(rho: S, z: S) -> S {
    if rho > S::zero() {
        let eta = (z / rho).asinh();
        if eta.is_finite() {
            return eta;
        }
    }
    if z == S::zero() {
        S::zero()
    } else if z > S::zero() {
        S::eta_max()
    } else {
        -S::eta_max()
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use std::f64::consts::PI;

    #[test]
    fn phi_wraps_into_half_open_interval() {
        assert_eq!(normalize_phi(1.0_f64), 1.0);
        assert_eq!(normalize_phi(PI), PI);
        assert_eq!(normalize_phi(-PI), PI);
        assert!((normalize_phi(6.0_f64) - (6.0 - 2.0 * PI)).abs() < 1e-15);
        assert!((normalize_phi(-7.0_f64) - (-7.0 + 2.0 * PI)).abs() < 1e-15);
        assert!((normalize_phi(3.0 * PI) - PI).abs() < 1e-14);
    }

    #[test]
    fn eta_clamps_on_axis() {
        assert_eq!(eta_from_rho_z(0.0_f64, 0.0), 0.0);
        assert_eq!(eta_from_rho_z(0.0_f64, 2.0), ETA_MAX);
        assert_eq!(eta_from_rho_z(0.0_f64, -2.0), -ETA_MAX);
        assert_eq!(eta_from_rho_z(0.0_f32, -2.0), -22756.0_f32);
    }

    #[test]
    fn signed_sqrt_keeps_sign() {
        assert_eq!(signed_sqrt(4.0_f64), 2.0);
        assert_eq!(signed_sqrt(-9.0_f64), -3.0);
        assert_eq!(signed_sqrt(0.0_f32), 0.0);
    }
}
