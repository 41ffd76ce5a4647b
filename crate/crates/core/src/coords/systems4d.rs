use super::{phi_of, Coords4D};
use crate::scalar::{eta_from_rho_z, normalize_phi, signed_sqrt, Scalar};

/// Energy for a stored (possibly negative, i.e. space-like) mass.
#[inline]
fn energy_from<S: Scalar>(p2: S, m: S) -> S {
    let e2 = p2 + m * m.abs();
    if e2 > S::zero() {
        e2.sqrt()
    } else {
        S::zero()
    }
}

#[inline]
fn canonical_mass<S: Scalar>(px: S, py: S, pz: S, e: S) -> S {
    signed_sqrt(e * e - (px * px + py * py + pz * pz))
}

#[inline]
fn longitudinal<S: Scalar>(pt: S, eta: S) -> S {
    if pt == S::zero() {
        S::zero()
    } else {
        pt * eta.sinh()
    }
}

#[inline]
fn momentum<S: Scalar>(pt: S, eta: S) -> S {
    if pt == S::zero() {
        S::zero()
    } else {
        pt * eta.cosh()
    }
}

/// Flips a negative transverse momentum without moving the vector.
#[inline]
fn fold_pt<S: Scalar>(pt: S, eta: S, phi: S) -> (S, S, S) {
    if pt < S::zero() {
        (-pt, -eta, normalize_phi(phi + S::PI()))
    } else {
        (pt, eta, normalize_phi(phi))
    }
}

/// Cartesian momentum plus energy: the canonical representation.
#[derive(Debug, Clone, Copy, PartialEq, Default)]
pub struct PxPyPzE4D<S> {
    px: S,
    py: S,
    pz: S,
    e: S,
}

impl<S: Scalar> PxPyPzE4D<S> {
    pub fn new(px: S, py: S, pz: S, e: S) -> Self {
        Self { px, py, pz, e }
    }
}

impl<S: Scalar> Coords4D for PxPyPzE4D<S> {
    type Scalar = S;

    #[inline]
    fn from_px_py_pz_e(px: S, py: S, pz: S, e: S) -> Self {
        Self { px, py, pz, e }
    }

    fn components(&self) -> [S; 4] {
        [self.px, self.py, self.pz, self.e]
    }

    #[inline]
    fn px(&self) -> S {
        self.px
    }

    #[inline]
    fn py(&self) -> S {
        self.py
    }

    #[inline]
    fn pz(&self) -> S {
        self.pz
    }

    #[inline]
    fn e(&self) -> S {
        self.e
    }
}

/// Cartesian momentum plus mass. A negative mass encodes a space-like
/// vector.
#[derive(Debug, Clone, Copy, PartialEq, Default)]
pub struct PxPyPzM4D<S> {
    px: S,
    py: S,
    pz: S,
    m: S,
}

impl<S: Scalar> PxPyPzM4D<S> {
    pub fn new(px: S, py: S, pz: S, m: S) -> Self {
        Self { px, py, pz, m }
    }
}

impl<S: Scalar> Coords4D for PxPyPzM4D<S> {
    type Scalar = S;

    fn from_px_py_pz_e(px: S, py: S, pz: S, e: S) -> Self {
        Self {
            px,
            py,
            pz,
            m: canonical_mass(px, py, pz, e),
        }
    }

    fn components(&self) -> [S; 4] {
        [self.px, self.py, self.pz, self.m]
    }

    fn px(&self) -> S {
        self.px
    }

    fn py(&self) -> S {
        self.py
    }

    fn pz(&self) -> S {
        self.pz
    }

    fn e(&self) -> S {
        energy_from(self.p2(), self.m)
    }

    fn mass2(&self) -> S {
        self.m * self.m.abs()
    }

    fn mass(&self) -> S {
        self.m
    }
}

/// Collider coordinates with energy as the fourth component.
#[derive(Debug, Clone, Copy, PartialEq, Default)]
pub struct PtEtaPhiE4D<S> {
    pt: S,
    eta: S,
    phi: S,
    e: S,
}

impl<S: Scalar> PtEtaPhiE4D<S> {
    pub fn new(pt: S, eta: S, phi: S, e: S) -> Self {
        let (pt, eta, phi) = fold_pt(pt, eta, phi);
        Self { pt, eta, phi, e }
    }
}

impl<S: Scalar> Coords4D for PtEtaPhiE4D<S> {
    type Scalar = S;

    fn from_px_py_pz_e(px: S, py: S, pz: S, e: S) -> Self {
        let pt = (px * px + py * py).sqrt();
        Self {
            pt,
            eta: eta_from_rho_z(pt, pz),
            phi: phi_of(px, py),
            e,
        }
    }

    fn components(&self) -> [S; 4] {
        [self.pt, self.eta, self.phi, self.e]
    }

    fn px(&self) -> S {
        self.pt * self.phi.cos()
    }

    fn py(&self) -> S {
        self.pt * self.phi.sin()
    }

    fn pz(&self) -> S {
        longitudinal(self.pt, self.eta)
    }

    fn e(&self) -> S {
        self.e
    }

    fn pt(&self) -> S {
        self.pt
    }

    fn eta(&self) -> S {
        self.eta
    }

    fn phi(&self) -> S {
        self.phi
    }

    fn p(&self) -> S {
        momentum(self.pt, self.eta)
    }

    fn p2(&self) -> S {
        let p = self.p();
        p * p
    }
}

/// Collider coordinates with mass as the fourth component.
#[derive(Debug, Clone, Copy, PartialEq, Default)]
pub struct PtEtaPhiM4D<S> {
    pt: S,
    eta: S,
    phi: S,
    m: S,
}

impl<S: Scalar> PtEtaPhiM4D<S> {
    pub fn new(pt: S, eta: S, phi: S, m: S) -> Self {
        let (pt, eta, phi) = fold_pt(pt, eta, phi);
        Self { pt, eta, phi, m }
    }
}

impl<S: Scalar> Coords4D for PtEtaPhiM4D<S> {
    type Scalar = S;

    fn from_px_py_pz_e(px: S, py: S, pz: S, e: S) -> Self {
        let pt = (px * px + py * py).sqrt();
        Self {
            pt,
            eta: eta_from_rho_z(pt, pz),
            phi: phi_of(px, py),
            m: canonical_mass(px, py, pz, e),
        }
    }

    fn components(&self) -> [S; 4] {
        [self.pt, self.eta, self.phi, self.m]
    }

    fn px(&self) -> S {
        self.pt * self.phi.cos()
    }

    fn py(&self) -> S {
        self.pt * self.phi.sin()
    }

    fn pz(&self) -> S {
        longitudinal(self.pt, self.eta)
    }

    fn e(&self) -> S {
        energy_from(self.p2(), self.m)
    }

    fn pt(&self) -> S {
        self.pt
    }

    fn eta(&self) -> S {
        self.eta
    }

    fn phi(&self) -> S {
        self.phi
    }

    fn p(&self) -> S {
        momentum(self.pt, self.eta)
    }

    fn p2(&self) -> S {
        let p = self.p();
        p * p
    }

    fn mass2(&self) -> S {
        self.m * self.m.abs()
    }

    fn mass(&self) -> S {
        self.m
    }
}
