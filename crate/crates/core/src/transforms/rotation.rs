use super::{det3, mul3, orthogonality_defect, Matrix3, TransformError};
use crate::coords::{Cartesian3D, Coords3D, Coords4D, LorentzVector, Vector3, XYZVector};
use crate::scalar::Scalar;

/// Orthogonality defect above which [`Rotation3D::from_matrix`] re-orthonormalises.
const REORTHONORMALIZE_ABOVE: f64 = 1e-10;

/// A proper rotation stored as a row-major 3×3 orthogonal matrix.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Rotation3D<S> {
    m: Matrix3<S>,
}

impl<S: Scalar> Default for Rotation3D<S> {
    fn default() -> Self {
        Self::identity()
    }
}

impl<S: Scalar> Rotation3D<S> {
    pub fn identity() -> Self {
        let (o, l) = (S::zero(), S::one());
        Self {
            m: [[l, o, o], [o, l, o], [o, o, l]],
        }
    }

    pub fn about_x(angle: S) -> Self {
        let (s, c) = angle.sin_cos();
        let (o, l) = (S::zero(), S::one());
        Self {
            m: [[l, o, o], [o, c, -s], [o, s, c]],
        }
    }

    pub fn about_y(angle: S) -> Self {
        let (s, c) = angle.sin_cos();
        let (o, l) = (S::zero(), S::one());
        Self {
            m: [[c, o, s], [o, l, o], [-s, o, c]],
        }
    }

    pub fn about_z(angle: S) -> Self {
        let (s, c) = angle.sin_cos();
        let (o, l) = (S::zero(), S::one());
        Self {
            m: [[c, -s, o], [s, c, o], [o, o, l]],
        }
    }

    /// Builds a rotation from a raw row-major matrix.
    ///
    /// Matrices whose orthogonality defect exceeds `1e-10` are
    /// re-orthonormalised (Gram–Schmidt on the rows). A non-positive
    /// determinant is rejected.
    pub fn from_matrix(m: Matrix3<S>) -> Result<Self, TransformError> {
        let det = det3(&m);
        if !(det > S::zero()) {
            return Err(TransformError::Improper {
                det: det.to_f64().unwrap_or(f64::NAN),
            });
        }
        if orthogonality_defect(&m) <= S::lit(REORTHONORMALIZE_ABOVE) {
            return Ok(Self { m });
        }
        let norm = |v: [S; 3]| {
            let n = (v[0] * v[0] + v[1] * v[1] + v[2] * v[2]).sqrt();
            [v[0] / n, v[1] / n, v[2] / n]
        };
        let e0 = norm(m[0]);
        let d = m[1][0] * e0[0] + m[1][1] * e0[1] + m[1][2] * e0[2];
        let e1 = norm([m[1][0] - d * e0[0], m[1][1] - d * e0[1], m[1][2] - d * e0[2]]);
        // det > 0 fixes the orientation of the third row
        let e2 = [
            e0[1] * e1[2] - e0[2] * e1[1],
            e0[2] * e1[0] - e0[0] * e1[2],
            e0[0] * e1[1] - e0[1] * e1[0],
        ];
        Ok(Self { m: [e0, e1, e2] })
    }

    pub fn matrix(&self) -> Matrix3<S> {
        self.m
    }

    pub fn apply_xyz(&self, v: [S; 3]) -> [S; 3] {
        let m = &self.m;
        [
            m[0][0] * v[0] + m[0][1] * v[1] + m[0][2] * v[2],
            m[1][0] * v[0] + m[1][1] * v[1] + m[1][2] * v[2],
            m[2][0] * v[0] + m[2][1] * v[1] + m[2][2] * v[2],
        ]
    }

    pub fn rotate<C: Coords3D<Scalar = S>>(&self, v: &Vector3<C>) -> Vector3<C> {
        let [x, y, z] = self.apply_xyz([v.x(), v.y(), v.z()]);
        Vector3::from_coords(C::from_xyz(x, y, z))
    }

    /// Rotates the spatial part; the energy is untouched.
    pub fn apply<C: Coords4D<Scalar = S>>(&self, v: &LorentzVector<C>) -> LorentzVector<C> {
        let [x, y, z] = self.apply_xyz([v.px(), v.py(), v.pz()]);
        LorentzVector::from_px_py_pz_e(x, y, z, v.e())
    }

    /// `self ∘ other`: applies `other` first.
    pub fn compose(&self, other: &Self) -> Self {
        Self {
            m: mul3(&self.m, &other.m),
        }
    }

    pub fn inverse(&self) -> Self {
        let m = &self.m;
        Self {
            m: [
                [m[0][0], m[1][0], m[2][0]],
                [m[0][1], m[1][1], m[2][1]],
                [m[0][2], m[1][2], m[2][2]],
            ],
        }
    }

    /// Extracts axis and angle, with `angle ∈ [0, pi]`.
    ///
    /// The identity yields the z axis with angle 0. Near a half turn the
    /// axis is read from the symmetric part, starting from the column with
    /// the largest diagonal entry.
    pub fn to_axis_angle(&self) -> AxisAngle<S> {
        let m = &self.m;
        let w = [
            m[2][1] - m[1][2],
            m[0][2] - m[2][0],
            m[1][0] - m[0][1],
        ];
        let two = S::lit(2.0);
        let w_norm = (w[0] * w[0] + w[1] * w[1] + w[2] * w[2]).sqrt();
        let sin = w_norm / two;
        let cos = (m[0][0] + m[1][1] + m[2][2] - S::one()) / two;
        let angle = sin.atan2(cos);

        if w_norm == S::zero() && cos > S::zero() {
            return AxisAngle::z_axis(S::zero());
        }
        if cos >= S::zero() {
            let axis = [w[0] / w_norm, w[1] / w_norm, w[2] / w_norm];
            return AxisAngle::from_unit(axis, angle);
        }

        // (R + Rᵀ)/2 = cos·I + (1 − cos)·a·aᵀ
        let k = S::one() - cos;
        let outer = |i: usize, j: usize| {
            let sym = (m[i][j] + m[j][i]) / two;
            let diag = if i == j { cos } else { S::zero() };
            (sym - diag) / k
        };
        let j = (0..3)
            .max_by(|&a, &b| outer(a, a).partial_cmp(&outer(b, b)).unwrap())
            .unwrap_or(2);
        let pivot = outer(j, j).max(S::zero()).sqrt();
        let mut axis = [outer(0, j) / pivot, outer(1, j) / pivot, outer(2, j) / pivot];
        let n = (axis[0] * axis[0] + axis[1] * axis[1] + axis[2] * axis[2]).sqrt();
        axis = axis.map(|c| c / n);
        if axis[0] * w[0] + axis[1] * w[1] + axis[2] * w[2] < S::zero() {
            axis = axis.map(|c| -c);
        }
        AxisAngle::from_unit(axis, angle)
    }
}

impl<S: Scalar> From<AxisAngle<S>> for Rotation3D<S> {
    fn from(a: AxisAngle<S>) -> Self {
        a.to_rotation()
    }
}

/// A rotation by `angle` radians about a unit `axis`, right-handed.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct AxisAngle<S> {
    axis: XYZVector<S>,
    angle: S,
}

impl<S: Scalar> AxisAngle<S> {
    /// Normalises `axis`; fails if it has zero length.
    pub fn new<C: Coords3D<Scalar = S>>(axis: Vector3<C>, angle: S) -> Result<Self, TransformError> {
        let r = axis.r();
        if !(r > S::zero()) || !r.is_finite() {
            return Err(TransformError::ZeroAxis);
        }
        Ok(Self::from_unit([axis.x() / r, axis.y() / r, axis.z() / r], angle))
    }

    pub fn z_axis(angle: S) -> Self {
        Self::from_unit([S::zero(), S::zero(), S::one()], angle)
    }

    fn from_unit(a: [S; 3], angle: S) -> Self {
        Self {
            axis: Vector3::from_coords(Cartesian3D::new(a[0], a[1], a[2])),
            angle,
        }
    }

    pub fn axis(&self) -> XYZVector<S> {
        self.axis
    }

    pub fn angle(&self) -> S {
        self.angle
    }

    pub fn inverse(&self) -> Self {
        Self {
            axis: self.axis,
            angle: -self.angle,
        }
    }

    /// Rodrigues' formula.
    pub fn to_rotation(&self) -> Rotation3D<S> {
        let (x, y, z) = (self.axis.x(), self.axis.y(), self.axis.z());
        let (s, c) = self.angle.sin_cos();
        let t = S::one() - c;
        Rotation3D {
            m: [
                [c + t * x * x, t * x * y - s * z, t * x * z + s * y],
                [t * x * y + s * z, c + t * y * y, t * y * z - s * x],
                [t * x * z - s * y, t * y * z + s * x, c + t * z * z],
            ],
        }
    }

    pub fn apply_xyz(&self, v: [S; 3]) -> [S; 3] {
        let a = [self.axis.x(), self.axis.y(), self.axis.z()];
        let (s, c) = self.angle.sin_cos();
        let cross = [
            a[1] * v[2] - a[2] * v[1],
            a[2] * v[0] - a[0] * v[2],
            a[0] * v[1] - a[1] * v[0],
        ];
        let along = (a[0] * v[0] + a[1] * v[1] + a[2] * v[2]) * (S::one() - c);
        [
            v[0] * c + cross[0] * s + a[0] * along,
            v[1] * c + cross[1] * s + a[1] * along,
            v[2] * c + cross[2] * s + a[2] * along,
        ]
    }

    pub fn rotate<C: Coords3D<Scalar = S>>(&self, v: &Vector3<C>) -> Vector3<C> {
        let [x, y, z] = self.apply_xyz([v.x(), v.y(), v.z()]);
        Vector3::from_coords(C::from_xyz(x, y, z))
    }

    pub fn apply<C: Coords4D<Scalar = S>>(&self, v: &LorentzVector<C>) -> LorentzVector<C> {
        let [x, y, z] = self.apply_xyz([v.px(), v.py(), v.pz()]);
        LorentzVector::from_px_py_pz_e(x, y, z, v.e())
    }
}

impl<S: Scalar> From<Rotation3D<S>> for AxisAngle<S> {
    fn from(r: Rotation3D<S>) -> Self {
        r.to_axis_angle()
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use std::f64::consts::{FRAC_PI_2, FRAC_PI_4, PI};

    fn close(a: &Matrix3<f64>, b: &Matrix3<f64>, tol: f64) -> bool {
        (0..3).all(|i| (0..3).all(|j| (a[i][j] - b[i][j]).abs() <= tol))
    }

    #[test]
    fn quarter_turn_about_z() {
        let r = Rotation3D::about_z(FRAC_PI_2);
        let v = r.rotate(&XYZVector::new(1.0, 0.0, 0.0));
        assert!(v.x().abs() < 1e-15 && (v.y() - 1.0).abs() < 1e-15 && v.z() == 0.0);
    }

    #[test]
    fn axis_angle_z_matrix() {
        let a = AxisAngle::new(XYZVector::new(0.0, 0.0, 2.0), FRAC_PI_2).unwrap();
        let want = [[0.0, -1.0, 0.0], [1.0, 0.0, 0.0], [0.0, 0.0, 1.0]];
        assert!(close(&a.to_rotation().matrix(), &want, 1e-15));
    }

    #[test]
    fn cyclic_permutation_from_body_diagonal() {
        let a = AxisAngle::new(XYZVector::new(1.0, 1.0, 1.0), 2.0 * PI / 3.0).unwrap();
        let want = [[0.0, 0.0, 1.0], [1.0, 0.0, 0.0], [0.0, 1.0, 0.0]];
        assert!(close(&a.to_rotation().matrix(), &want, 1e-15));
    }

    #[test]
    fn identity_extracts_z_axis() {
        let a = Rotation3D::<f64>::identity().to_axis_angle();
        assert_eq!(a.angle(), 0.0);
        assert_eq!(a.axis(), XYZVector::new(0.0, 0.0, 1.0));
    }

    #[test]
    fn half_turn_extraction() {
        for axis in [
            XYZVector::new(1.0, 0.0, 0.0),
            XYZVector::new(0.0, -1.0, 0.0),
            XYZVector::new(1.0, 2.0, -2.0),
        ] {
            let a = AxisAngle::new(axis, PI).unwrap();
            let r = a.to_rotation();
            let back = r.to_axis_angle();
            assert!((back.angle() - PI).abs() < 1e-12);
            assert!(close(&back.to_rotation().matrix(), &r.matrix(), 1e-12));
        }
    }

    #[test]
    fn compose_two_eighth_turns() {
        let q = Rotation3D::about_z(FRAC_PI_4);
        assert!(close(&q.compose(&q).matrix(), &Rotation3D::about_z(FRAC_PI_2).matrix(), 1e-15));
        let id = q.compose(&q.inverse()).matrix();
        assert!(close(&id, &Rotation3D::identity().matrix(), 1e-15));
    }

    #[test]
    fn rejects_reflection() {
        let m = [[1.0, 0.0, 0.0], [0.0, 1.0, 0.0], [0.0, 0.0, -1.0]];
        assert!(matches!(Rotation3D::from_matrix(m), Err(TransformError::Improper { .. })));
        let zero = [[0.0; 3]; 3];
        assert!(Rotation3D::from_matrix(zero).is_err());
    }

    #[test]
    fn reorthonormalizes_noisy_matrix() {
        let mut m = Rotation3D::about_y(0.3).matrix();
        m[0][1] += 1e-6;
        m[2][2] *= 1.0 + 1e-6;
        let r = Rotation3D::from_matrix(m).unwrap();
        assert!(orthogonality_defect(&r.matrix()) < 1e-14);
        assert!((det3(&r.matrix()) - 1.0_f64).abs() < 1e-14);
        assert!(close(&r.matrix(), &Rotation3D::about_y(0.3).matrix(), 1e-5));
    }

    #[test]
    fn zero_axis_is_an_error() {
        assert_eq!(
            AxisAngle::new(XYZVector::new(0.0, 0.0, 0.0), 1.0).unwrap_err(),
            TransformError::ZeroAxis
        );
    }
}
