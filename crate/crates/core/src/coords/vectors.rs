use std::ops::{Add, Mul, Neg, Sub};

use num_traits::{Float, One, Zero};

use super::{
    Cartesian2D, Cartesian3D, Coords2D, Coords3D, Coords4D, Cylindrical3D, Polar2D, Polar3D,
    PtEtaPhiE4D, PtEtaPhiM4D, PxPyPzE4D, PxPyPzM4D,
};
use crate::scalar::{normalize_phi, Scalar};

/// A 2D displacement vector stored in coordinate system `C`.
#[derive(Debug, Clone, Copy, PartialEq, Default)]
pub struct Vector2<C>(C);

/// A 3D displacement vector stored in coordinate system `C`.
#[derive(Debug, Clone, Copy, PartialEq, Default)]
pub struct Vector3<C>(C);

/// A Lorentz four-vector stored in coordinate system `C`.
///
/// Equality compares the stored coordinates, so two vectors in the same
/// system are equal only if every stored field is.
#[derive(Debug, Clone, Copy, PartialEq, Default)]
pub struct LorentzVector<C>(C);

pub type XYVector<S = f64> = Vector2<Cartesian2D<S>>;
pub type Polar2DVector<S = f64> = Vector2<Polar2D<S>>;
pub type XYZVector<S = f64> = Vector3<Cartesian3D<S>>;
pub type Polar3DVector<S = f64> = Vector3<Polar3D<S>>;
pub type RhoPhiZVector<S = f64> = Vector3<Cylindrical3D<S>>;
/// Points share the representation of displacements.
pub type Position3D<C> = Vector3<C>;

pub type XYZTVector<S = f64> = LorentzVector<PxPyPzE4D<S>>;
pub type PxPyPzEVector<S = f64> = LorentzVector<PxPyPzE4D<S>>;
pub type PxPyPzMVector<S = f64> = LorentzVector<PxPyPzM4D<S>>;
pub type PtEtaPhiEVector<S = f64> = LorentzVector<PtEtaPhiE4D<S>>;
pub type PtEtaPhiMVector<S = f64> = LorentzVector<PtEtaPhiM4D<S>>;

// ---------------------------------------------------------------------------
// Vector2

impl<C: Coords2D> Vector2<C> {
    pub fn from_coords(coords: C) -> Self {
        Self(coords)
    }

    pub fn coords(&self) -> &C {
        &self.0
    }

    pub fn convert<D: Coords2D<Scalar = C::Scalar>>(&self) -> Vector2<D> {
        Vector2(D::from_xy(self.0.x(), self.0.y()))
    }

    pub fn x(&self) -> C::Scalar {
        self.0.x()
    }

    pub fn y(&self) -> C::Scalar {
        self.0.y()
    }

    pub fn r(&self) -> C::Scalar {
        self.0.r()
    }

    pub fn phi(&self) -> C::Scalar {
        self.0.phi()
    }

    pub fn dot<D: Coords2D<Scalar = C::Scalar>>(&self, other: &Vector2<D>) -> C::Scalar {
        self.x() * other.x() + self.y() * other.y()
    }

    pub fn delta_phi<D: Coords2D<Scalar = C::Scalar>>(&self, other: &Vector2<D>) -> C::Scalar {
        normalize_phi(self.phi() - other.phi())
    }
}

impl<S: Scalar> Vector2<Cartesian2D<S>> {
    pub fn new(x: S, y: S) -> Self {
        Self(Cartesian2D::new(x, y))
    }
}

impl<S: Scalar> Vector2<Polar2D<S>> {
    pub fn new(r: S, phi: S) -> Self {
        Self(Polar2D::new(r, phi))
    }
}

impl<C: Coords2D> Add for Vector2<C> {
    type Output = Self;

    fn add(self, rhs: Self) -> Self {
        Self(C::from_xy(self.x() + rhs.x(), self.y() + rhs.y()))
    }
}

impl<C: Coords2D> Sub for Vector2<C> {
    type Output = Self;

    fn sub(self, rhs: Self) -> Self {
        Self(C::from_xy(self.x() - rhs.x(), self.y() - rhs.y()))
    }
}

impl<C: Coords2D> Neg for Vector2<C> {
    type Output = Self;

    fn neg(self) -> Self {
        Self(C::from_xy(-self.x(), -self.y()))
    }
}

impl<C: Coords2D> Mul<C::Scalar> for Vector2<C> {
    type Output = Self;

    fn mul(self, k: C::Scalar) -> Self {
        Self(C::from_xy(self.x() * k, self.y() * k))
    }
}

// ---------------------------------------------------------------------------
// Vector3

impl<C: Coords3D> Vector3<C> {
    pub fn from_coords(coords: C) -> Self {
        Self(coords)
    }

    pub fn coords(&self) -> &C {
        &self.0
    }

    pub fn convert<D: Coords3D<Scalar = C::Scalar>>(&self) -> Vector3<D> {
        Vector3(D::from_xyz(self.0.x(), self.0.y(), self.0.z()))
    }

    pub fn x(&self) -> C::Scalar {
        self.0.x()
    }

    pub fn y(&self) -> C::Scalar {
        self.0.y()
    }

    pub fn z(&self) -> C::Scalar {
        self.0.z()
    }

    /// Euclidean length.
    pub fn r(&self) -> C::Scalar {
        self.0.r()
    }

    pub fn mag2(&self) -> C::Scalar {
        self.0.mag2()
    }

    pub fn rho(&self) -> C::Scalar {
        self.0.rho()
    }

    pub fn theta(&self) -> C::Scalar {
        self.0.theta()
    }

    pub fn phi(&self) -> C::Scalar {
        self.0.phi()
    }

    pub fn eta(&self) -> C::Scalar {
        self.0.eta()
    }

    pub fn dot<D: Coords3D<Scalar = C::Scalar>>(&self, other: &Vector3<D>) -> C::Scalar {
        self.x() * other.x() + self.y() * other.y() + self.z() * other.z()
    }

    pub fn cross<D: Coords3D<Scalar = C::Scalar>>(&self, other: &Vector3<D>) -> Self {
        let (ax, ay, az) = (self.x(), self.y(), self.z());
        let (bx, by, bz) = (other.x(), other.y(), other.z());
        Self(C::from_xyz(
            ay * bz - az * by,
            az * bx - ax * bz,
            ax * by - ay * bx,
        ))
    }

    /// Same direction, unit length. The null vector is returned unchanged.
    pub fn unit(&self) -> Self {
        let r = self.r();
        if r == C::Scalar::zero() {
            *self
        } else {
            *self * (C::Scalar::one() / r)
        }
    }

    pub fn delta_phi<D: Coords3D<Scalar = C::Scalar>>(&self, other: &Vector3<D>) -> C::Scalar {
        normalize_phi(self.phi() - other.phi())
    }

    pub fn delta_r<D: Coords3D<Scalar = C::Scalar>>(&self, other: &Vector3<D>) -> C::Scalar {
        let deta = self.eta() - other.eta();
        let dphi = self.delta_phi(other);
        (deta * deta + dphi * dphi).sqrt()
    }
}

impl<S: Scalar> Vector3<Cartesian3D<S>> {
    pub fn new(x: S, y: S, z: S) -> Self {
        Self(Cartesian3D::new(x, y, z))
    }
}

impl<S: Scalar> Vector3<Polar3D<S>> {
    pub fn new(r: S, theta: S, phi: S) -> Self {
        Self(Polar3D::new(r, theta, phi))
    }
}

impl<S: Scalar> Vector3<Cylindrical3D<S>> {
    pub fn new(rho: S, phi: S, z: S) -> Self {
        Self(Cylindrical3D::new(rho, phi, z))
    }
}

impl<C: Coords3D> Add for Vector3<C> {
    type Output = Self;

    fn add(self, rhs: Self) -> Self {
        Self(C::from_xyz(
            self.x() + rhs.x(),
            self.y() + rhs.y(),
            self.z() + rhs.z(),
        ))
    }
}

impl<C: Coords3D> Sub for Vector3<C> {
    type Output = Self;

    fn sub(self, rhs: Self) -> Self {
        Self(C::from_xyz(
            self.x() - rhs.x(),
            self.y() - rhs.y(),
            self.z() - rhs.z(),
        ))
    }
}

impl<C: Coords3D> Neg for Vector3<C> {
    type Output = Self;

    fn neg(self) -> Self {
        Self(C::from_xyz(-self.x(), -self.y(), -self.z()))
    }
}

impl<C: Coords3D> Mul<C::Scalar> for Vector3<C> {
    type Output = Self;

    fn mul(self, k: C::Scalar) -> Self {
        Self(C::from_xyz(self.x() * k, self.y() * k, self.z() * k))
    }
}

// ---------------------------------------------------------------------------
// LorentzVector

impl<C: Coords4D> LorentzVector<C> {
    pub fn from_coords(coords: C) -> Self {
        Self(coords)
    }

    /// Builds the vector from its canonical `(px, py, pz, E)` image.
    #[inline]
    pub fn from_px_py_pz_e(
        px: C::Scalar,
        py: C::Scalar,
        pz: C::Scalar,
        e: C::Scalar,
    ) -> Self {
        Self(C::from_px_py_pz_e(px, py, pz, e))
    }

    pub fn coords(&self) -> &C {
        &self.0
    }

    /// Re-expresses the vector in another system of the same precision.
    pub fn convert<D: Coords4D<Scalar = C::Scalar>>(&self) -> LorentzVector<D> {
        LorentzVector(D::from_px_py_pz_e(
            self.0.px(),
            self.0.py(),
            self.0.pz(),
            self.0.e(),
        ))
    }

    #[inline]
    pub fn px(&self) -> C::Scalar {
        self.0.px()
    }

    #[inline]
    pub fn py(&self) -> C::Scalar {
        self.0.py()
    }

    #[inline]
    pub fn pz(&self) -> C::Scalar {
        self.0.pz()
    }

    #[inline]
    pub fn e(&self) -> C::Scalar {
        self.0.e()
    }

    pub fn energy(&self) -> C::Scalar {
        self.0.e()
    }

    pub fn pt(&self) -> C::Scalar {
        self.0.pt()
    }

    pub fn eta(&self) -> C::Scalar {
        self.0.eta()
    }

    pub fn phi(&self) -> C::Scalar {
        self.0.phi()
    }

    pub fn theta(&self) -> C::Scalar {
        super::theta_of(self.pt(), self.pz())
    }

    /// Magnitude of the three-momentum.
    pub fn p(&self) -> C::Scalar {
        self.0.p()
    }

    pub fn p2(&self) -> C::Scalar {
        self.0.p2()
    }

    /// `E² − |p|²`.
    #[inline]
    pub fn mass2(&self) -> C::Scalar {
        self.0.mass2()
    }

    /// Invariant mass; `-sqrt(-m²)` for space-like vectors.
    #[inline]
    pub fn mass(&self) -> C::Scalar {
        self.0.mass()
    }

    /// Alias of [`mass`](Self::mass).
    #[inline]
    pub fn m(&self) -> C::Scalar {
        self.0.mass()
    }

    /// `½·ln((E+pz)/(E−pz))`, clamped to `±RAPIDITY_MAX` when `E <= |pz|`.
    pub fn rapidity(&self) -> C::Scalar {
        let (e, pz) = (self.e(), self.pz());
        let zero = C::Scalar::zero();
        if e <= pz.abs() {
            return if pz > zero {
                C::Scalar::rapidity_max()
            } else if pz < zero {
                -C::Scalar::rapidity_max()
            } else {
                zero
            };
        }
        C::Scalar::lit(0.5) * ((e + pz) / (e - pz)).ln()
    }

    /// `|p| / E`; zero for the null vector.
    pub fn beta(&self) -> C::Scalar {
        let (p, e) = (self.p(), self.e());
        if p == C::Scalar::zero() {
            C::Scalar::zero()
        } else {
            p / e
        }
    }

    /// `E / m`. Light-like vectors give `+inf`.
    pub fn gamma(&self) -> C::Scalar {
        self.e() / self.mass()
    }

    /// Spatial part as a Cartesian 3-vector.
    pub fn vect(&self) -> Vector3<Cartesian3D<C::Scalar>> {
        Vector3(Cartesian3D::new(self.px(), self.py(), self.pz()))
    }

    /// Velocity `p / E` of the frame in which the vector is at rest.
    pub fn boost_to_cm(&self) -> [C::Scalar; 3] {
        let e = self.e();
        [-self.px() / e, -self.py() / e, -self.pz() / e]
    }

    pub fn dot<D: Coords4D<Scalar = C::Scalar>>(&self, other: &LorentzVector<D>) -> C::Scalar {
        self.e() * other.e()
            - (self.px() * other.px() + self.py() * other.py() + self.pz() * other.pz())
    }

    pub fn delta_phi<D: Coords4D<Scalar = C::Scalar>>(
        &self,
        other: &LorentzVector<D>,
    ) -> C::Scalar {
        normalize_phi(self.phi() - other.phi())
    }

    pub fn delta_r<D: Coords4D<Scalar = C::Scalar>>(&self, other: &LorentzVector<D>) -> C::Scalar {
        let deta = self.eta() - other.eta();
        let dphi = self.delta_phi(other);
        (deta * deta + dphi * dphi).sqrt()
    }
}

impl<S: Scalar> LorentzVector<PxPyPzE4D<S>> {
    pub fn new(px: S, py: S, pz: S, e: S) -> Self {
        Self(PxPyPzE4D::new(px, py, pz, e))
    }
}

impl<S: Scalar> LorentzVector<PxPyPzM4D<S>> {
    pub fn new(px: S, py: S, pz: S, m: S) -> Self {
        Self(PxPyPzM4D::new(px, py, pz, m))
    }
}

impl<S: Scalar> LorentzVector<PtEtaPhiE4D<S>> {
    pub fn new(pt: S, eta: S, phi: S, e: S) -> Self {
        Self(PtEtaPhiE4D::new(pt, eta, phi, e))
    }
}

impl<S: Scalar> LorentzVector<PtEtaPhiM4D<S>> {
    pub fn new(pt: S, eta: S, phi: S, m: S) -> Self {
        Self(PtEtaPhiM4D::new(pt, eta, phi, m))
    }
}

impl<C: Coords4D> Add for LorentzVector<C> {
    type Output = Self;

    #[inline]
    fn add(self, rhs: Self) -> Self {
        Self(C::from_px_py_pz_e(
            self.px() + rhs.px(),
            self.py() + rhs.py(),
            self.pz() + rhs.pz(),
            self.e() + rhs.e(),
        ))
    }
}

impl<C: Coords4D> Sub for LorentzVector<C> {
    type Output = Self;

    fn sub(self, rhs: Self) -> Self {
        Self(C::from_px_py_pz_e(
            self.px() - rhs.px(),
            self.py() - rhs.py(),
            self.pz() - rhs.pz(),
            self.e() - rhs.e(),
        ))
    }
}

impl<C: Coords4D> Neg for LorentzVector<C> {
    type Output = Self;

    fn neg(self) -> Self {
        Self(C::from_px_py_pz_e(
            -self.px(),
            -self.py(),
            -self.pz(),
            -self.e(),
        ))
    }
}

impl<C: Coords4D> Mul<C::Scalar> for LorentzVector<C> {
    type Output = Self;

    fn mul(self, k: C::Scalar) -> Self {
        Self(C::from_px_py_pz_e(
            self.px() * k,
            self.py() * k,
            self.pz() * k,
            self.e() * k,
        ))
    }
}

/// Azimuthal separation of two four-vectors, in `(-pi, pi]`.
pub fn delta_phi<A, B>(a: &LorentzVector<A>, b: &LorentzVector<B>) -> A::Scalar
where
    A: Coords4D,
    B: Coords4D<Scalar = A::Scalar>,
{
    a.delta_phi(b)
}

/// `sqrt(Δη² + Δφ²)`.
pub fn delta_r<A, B>(a: &LorentzVector<A>, b: &LorentzVector<B>) -> A::Scalar
where
    A: Coords4D,
    B: Coords4D<Scalar = A::Scalar>,
{
    a.delta_r(b)
}
