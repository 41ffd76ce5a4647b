use super::{identity4, metric_defect, mul4, Matrix4, Rotation3D, TransformError, METRIC};
use crate::coords::{Coords4D, LorentzVector};
use crate::scalar::Scalar;

#[inline]
fn apply4<S: Scalar, C: Coords4D<Scalar = S>>(
    m: &Matrix4<S>,
    v: &LorentzVector<C>,
) -> LorentzVector<C> {
    let x = [v.px(), v.py(), v.pz(), v.e()];
    let row = |i: usize| m[i][0] * x[0] + m[i][1] * x[1] + m[i][2] * x[2] + m[i][3] * x[3];
    LorentzVector::from_px_py_pz_e(row(0), row(1), row(2), row(3))
}

/// A pure Lorentz boost with velocity `beta` (in units of c).
///
/// Stored as the full symmetric 4×4 matrix
///
/// ```text
/// Λᵢⱼ = δᵢⱼ + (γ−1)·bᵢbⱼ/b²    Λᵢ₄ = Λ₄ᵢ = γ·bᵢ    Λ₄₄ = γ
/// ```
///
/// Applying it to a particle at rest gives the particle moving with
/// velocity `beta`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Boost<S> {
    beta: [S; 3],
    gamma: S,
    m: Matrix4<S>,
}

impl<S: Scalar> Default for Boost<S> {
    fn default() -> Self {
        Self::identity()
    }
}

impl<S: Scalar> Boost<S> {
    pub fn identity() -> Self {
        Self {
            beta: [S::zero(); 3],
            gamma: S::one(),
            m: identity4(),
        }
    }

    /// Fails unless `bx² + by² + bz² < 1`.
    pub fn new(bx: S, by: S, bz: S) -> Result<Self, TransformError> {
        if !(bx.is_finite() && by.is_finite() && bz.is_finite()) {
            return Err(TransformError::NonFiniteVelocity);
        }
        let b2 = bx * bx + by * by + bz * bz;
        if b2 >= S::one() {
            return Err(TransformError::Superluminal {
                beta2: b2.to_f64().unwrap_or(f64::NAN),
            });
        }
        if b2 == S::zero() {
            return Ok(Self::identity());
        }
        let gamma = S::one() / (S::one() - b2).sqrt();
        // (γ − 1)/b² rewritten as γ²/(γ + 1), which has no cancellation
        let k = gamma * gamma / (gamma + S::one());
        let b = [bx, by, bz];
        let mut m = [[S::zero(); 4]; 4];
        for i in 0..3 {
            for j in 0..3 {
                let delta = if i == j { S::one() } else { S::zero() };
                m[i][j] = delta + k * b[i] * b[j];
            }
            m[i][3] = gamma * b[i];
            m[3][i] = gamma * b[i];
        }
        m[3][3] = gamma;
        Ok(Self { beta: b, gamma, m })
    }

    pub fn from_beta(beta: [S; 3]) -> Result<Self, TransformError> {
        Self::new(beta[0], beta[1], beta[2])
    }

    pub fn beta(&self) -> [S; 3] {
        self.beta
    }

    pub fn gamma(&self) -> S {
        self.gamma
    }

    pub fn matrix(&self) -> Matrix4<S> {
        self.m
    }

    /// The boost with velocity `-beta`; exact (only signs change).
    pub fn inverse(&self) -> Self {
        let mut m = self.m;
        for i in 0..3 {
            m[i][3] = -m[i][3];
            m[3][i] = -m[3][i];
        }
        Self {
            beta: self.beta.map(|b| -b),
            gamma: self.gamma,
            m,
        }
    }

    /// Zero velocity returns `v` untouched (bit for bit, signed zeros included).
    #[inline]
    pub fn apply<C: Coords4D<Scalar = S>>(&self, v: &LorentzVector<C>) -> LorentzVector<C> {
        if self.is_identity() {
            return *v;
        }
        apply4(&self.m, v)
    }

    pub fn is_identity(&self) -> bool {
        self.beta.iter().all(|b| *b == S::zero())
    }

    /// `self ∘ other`. Non-collinear boosts do not compose to a pure boost,
    /// so the result is a general Lorentz transform.
    pub fn compose(&self, other: &Self) -> LorentzTransform<S> {
        LorentzTransform {
            m: mul4(&self.m, &other.m),
        }
    }

    pub fn metric_defect(&self) -> S {
        metric_defect(&self.m)
    }
}

/// A general (proper, orthochronous) Lorentz transformation.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct LorentzTransform<S> {
    m: Matrix4<S>,
}

impl<S: Scalar> Default for LorentzTransform<S> {
    fn default() -> Self {
        Self::identity()
    }
}

impl<S: Scalar> LorentzTransform<S> {
    pub fn identity() -> Self {
        Self { m: identity4() }
    }

    pub fn matrix(&self) -> Matrix4<S> {
        self.m
    }

    pub fn apply<C: Coords4D<Scalar = S>>(&self, v: &LorentzVector<C>) -> LorentzVector<C> {
        apply4(&self.m, v)
    }

    pub fn compose(&self, other: &Self) -> Self {
        Self {
            m: mul4(&self.m, &other.m),
        }
    }

    /// `g·Λᵀ·g`.
    pub fn inverse(&self) -> Self {
        let g: [S; 4] = METRIC.map(S::lit);
        let mut m = [[S::zero(); 4]; 4];
        for (i, row) in m.iter_mut().enumerate() {
            for (j, cell) in row.iter_mut().enumerate() {
                *cell = g[i] * self.m[j][i] * g[j];
            }
        }
        Self { m }
    }

    pub fn metric_defect(&self) -> S {
        metric_defect(&self.m)
    }
}

impl<S: Scalar> From<Boost<S>> for LorentzTransform<S> {
    fn from(b: Boost<S>) -> Self {
        Self { m: b.m }
    }
}

impl<S: Scalar> From<Rotation3D<S>> for LorentzTransform<S> {
    fn from(r: Rotation3D<S>) -> Self {
        let r3 = r.matrix();
        let mut m = identity4();
        for i in 0..3 {
            m[i][..3].copy_from_slice(&r3[i]);
        }
        Self { m }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::coords::XYZTVector;

    #[test]
    fn zero_velocity_is_identity() {
        let b = Boost::new(0.0_f64, 0.0, 0.0).unwrap();
        assert_eq!(b.matrix(), identity4());
        let v = XYZTVector::new(1.0, -2.0, 3.0, 9.0);
        assert_eq!(b.apply(&v), v);
    }

    #[test]
    fn boost_along_z() {
        let b = Boost::new(0.0_f64, 0.0, 0.6).unwrap();
        let m = b.matrix();
        assert!((b.gamma() - 1.25).abs() < 1e-15);
        assert!((m[2][2] - 1.25).abs() < 1e-15);
        assert!((m[2][3] - 0.75).abs() < 1e-15 && (m[3][2] - 0.75).abs() < 1e-15);
        assert!((m[3][3] - 1.25).abs() < 1e-15);
        assert_eq!((m[0][0], m[1][1]), (1.0, 1.0));

        let mass = 2.0;
        let out = b.apply(&XYZTVector::new(0.0, 0.0, 0.0, mass));
        assert!((out.pz() - 0.75 * mass).abs() < 1e-15);
        assert!((out.e() - 1.25 * mass).abs() < 1e-15);
        assert_eq!((out.px(), out.py()), (0.0, 0.0));
    }

    #[test]
    fn rejects_superluminal() {
        match Boost::new(0.9_f64, 0.9, 0.0) {
            Err(TransformError::Superluminal { beta2 }) => assert!((beta2 - 1.62).abs() < 1e-12),
            other => panic!("expected superluminal error, got {other:?}"),
        }
        assert!(Boost::new(1.0_f64, 0.0, 0.0).is_err());
        assert_eq!(
            Boost::new(f64::NAN, 0.0, 0.0).unwrap_err(),
            TransformError::NonFiniteVelocity
        );
    }

    #[test]
    fn inverse_matches_opposite_velocity() {
        let b = Boost::new(0.3_f64, -0.2, 0.5).unwrap();
        let opposite = Boost::new(-0.3, 0.2, -0.5).unwrap();
        for i in 0..4 {
            for j in 0..4 {
                assert!((b.inverse().matrix()[i][j] - opposite.matrix()[i][j]).abs() < 1e-12);
            }
        }
        let id = b.compose(&b.inverse()).matrix();
        for i in 0..4 {
            for j in 0..4 {
                let want = if i == j { 1.0 } else { 0.0 };
                assert!((id[i][j] - want).abs() < 1e-12);
            }
        }
    }

    #[test]
    fn general_inverse_undoes_transform() {
        let t: LorentzTransform<f64> = Boost::new(0.1, 0.4, -0.3).unwrap().into();
        let r: LorentzTransform<f64> = Rotation3D::about_x(0.7).into();
        let both = t.compose(&r);
        let id = both.compose(&both.inverse()).matrix();
        for i in 0..4 {
            for j in 0..4 {
                let want = if i == j { 1.0 } else { 0.0 };
                assert!((id[i][j] - want).abs() < 1e-12);
            }
        }
        assert!(both.metric_defect() < 1e-12);
    }

    #[test]
    fn single_precision_boost() {
        let b = Boost::new(0.2_f32, 0.1, -0.4).unwrap();
        assert!(b.metric_defect() < 1e-4);
    }
}
