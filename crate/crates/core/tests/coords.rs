mod common;

use std::f64::consts::PI;

use common::{angle_gap, close};
use kinematics::coords::{
    delta_r, Polar2DVector, Polar3DVector, PtEtaPhiEVector, PtEtaPhiMVector, PxPyPzEVector,
    PxPyPzMVector, RhoPhiZVector, XYVector, XYZVector,
};
use kinematics::{normalize_phi, ETA_MAX};
use proptest::prelude::*;

fn momentum() -> impl Strategy<Value = (f64, f64, f64, f64)> {
    // mass, |p| / m, eta, phi
    (1.0..10.0f64, 0.05..2.0f64, -2.0..2.0f64, -PI..PI)
}

fn from_pt_eta_phi_m((m, k, eta, phi): (f64, f64, f64, f64)) -> PtEtaPhiMVector<f64> {
    PtEtaPhiMVector::<f64>::new(m * k / eta.cosh(), eta, phi, m)
}

macro_rules! assert_same_kinematics {
    ($a:expr, $b:expr, $tol:expr) => {{
        let (a, b) = (&$a, &$b);
        let e = a.e().abs().max(1.0);
        for (name, x, y, scale) in [
            ("px", a.px(), b.px(), e),
            ("py", a.py(), b.py(), e),
            ("pz", a.pz(), b.pz(), e),
            ("e", a.e(), b.e(), e),
            ("pt", a.pt(), b.pt(), e),
            ("eta", a.eta(), b.eta(), 1.0),
            ("mass", a.mass(), b.mass(), e),
            ("mass2", a.mass2(), b.mass2(), e * e),
        ] {
            prop_assert!(close(x, y, $tol, scale), "{name}: {x} vs {y}");
        }
        prop_assert!(angle_gap(a.phi(), b.phi()) <= $tol, "phi: {} vs {}", a.phi(), b.phi());
    }};
}

proptest! {
    #[test]
    fn four_vector_systems_agree(k in momentum()) {
        let m = from_pt_eta_phi_m(k);
        let xyzt: PxPyPzEVector<f64> = m.convert();
        let xyzm: PxPyPzMVector<f64> = m.convert();
        let ptee: PtEtaPhiEVector<f64> = m.convert();
        assert_same_kinematics!(m, xyzt, 1e-12);
        assert_same_kinematics!(m, xyzm, 1e-12);
        assert_same_kinematics!(m, ptee, 1e-12);
        assert_same_kinematics!(xyzt, xyzm.convert::<kinematics::PxPyPzE4D<f64>>(), 1e-12);
        assert_same_kinematics!(ptee, ptee.convert::<kinematics::PxPyPzM4D<f64>>().convert::<kinematics::PtEtaPhiE4D<f64>>(), 1e-12);
    }

    #[test]
    fn mass_squared_is_canonical(px in -100.0..100.0f64, py in -100.0..100.0f64, pz in -100.0..100.0f64, e in 0.0..300.0f64) {
        let v = PxPyPzEVector::<f64>::new(px, py, pz, e);
        let m2 = e * e - (px * px + py * py + pz * pz);
        prop_assert_eq!(v.mass2().to_bits(), m2.to_bits());
        let m = v.mass();
        prop_assert!(m.signum() == m2.signum() || m2 == 0.0);
        prop_assert!(close(m * m.abs(), m2, 1e-15, 0.0));
    }

    #[test]
    fn phi_is_normalized(x in -1e3..1e3f64, y in -1e3..1e3f64, twist in -20.0..20.0f64) {
        let phi = XYVector::<f64>::new(x, y).phi();
        prop_assert!(phi > -PI && phi <= PI);
        let n = normalize_phi(twist);
        prop_assert!(n > -PI && n <= PI);
        prop_assert!(angle_gap(n, twist) < 1e-12);
    }

    #[test]
    fn three_vector_systems_agree(x in -50.0..50.0f64, y in -50.0..50.0f64, z in -50.0..50.0f64) {
        prop_assume!(x.hypot(y) > 1e-3);
        let c = XYZVector::<f64>::new(x, y, z);
        let p: Polar3DVector<f64> = c.convert();
        let cyl: RhoPhiZVector<f64> = c.convert();
        let back: XYZVector<f64> = p.convert::<kinematics::Cylindrical3D<f64>>().convert();
        let scale = c.r();
        for (a, b) in [(c.x(), back.x()), (c.y(), back.y()), (c.z(), back.z()), (c.z(), cyl.z()), (c.r(), p.r()), (c.rho(), cyl.rho())] {
            prop_assert!(close(a, b, 1e-12, scale));
        }
        prop_assert!(close(c.eta(), p.eta(), 1e-12, 1.0));
        prop_assert!(angle_gap(c.theta(), p.theta()) < 1e-12);
    }

    #[test]
    fn two_vector_systems_agree(x in -50.0..50.0f64, y in -50.0..50.0f64) {
        let c = XYVector::<f64>::new(x, y);
        let back: XYVector<f64> = c.convert::<kinematics::Polar2D<f64>>().convert();
        prop_assert!(close(c.x(), back.x(), 1e-12, c.r()));
        prop_assert!(close(c.y(), back.y(), 1e-12, c.r()));
    }

    #[test]
    fn addition_is_commutative_and_subtraction_inverts(a in momentum(), b in momentum()) {
        let (a, b) = (from_pt_eta_phi_m(a), from_pt_eta_phi_m(b));
        let ab = a + b;
        let ba = b + a;
        prop_assert_eq!(ab, ba);
        let back = ab - b;
        assert_same_kinematics!(back, a, 1e-12);
        prop_assert!(ab.mass() >= a.mass() + b.mass() - 1e-9);
    }
}

#[test]
fn negative_radii_fold_back() {
    let p = Polar2DVector::<f64>::new(-2.0, 0.5);
    assert_eq!(p.r(), 2.0);
    assert!((p.phi() - (0.5 - PI)).abs() < 1e-15);
    let q = PtEtaPhiMVector::<f64>::new(-3.0, 1.0, 0.25, 1.0);
    let reference = PtEtaPhiMVector::<f64>::new(3.0, -1.0, 0.25 - PI, 1.0);
    assert_eq!(q.pt(), 3.0);
    assert!((q.px() - reference.px()).abs() < 1e-12);
    assert!((q.pz() - reference.pz()).abs() < 1e-12);
}

#[test]
fn beam_axis_and_light_cone_are_clamped() {
    let along = PxPyPzEVector::<f64>::new(0.0, 0.0, 5.0, 6.0);
    assert_eq!(along.eta(), ETA_MAX);
    let against = PxPyPzEVector::<f64>::new(0.0, 0.0, -5.0, 6.0);
    assert_eq!(against.eta(), -ETA_MAX);
    let at_rest = PxPyPzEVector::<f64>::new(0.0, 0.0, 0.0, 1.0);
    assert_eq!(at_rest.eta(), 0.0);
    let light = PxPyPzEVector::<f64>::new(0.0, 0.0, 2.0, 2.0);
    assert_eq!(light.rapidity(), ETA_MAX);
    assert!(light.gamma().is_infinite());
}

#[test]
fn delta_r_uses_wrapped_phi() {
    let a = PtEtaPhiMVector::<f64>::new(1.0, 0.0, 0.0, 1.0);
    let b = PtEtaPhiMVector::<f64>::new(1.0, 4.0, 3.0, 1.0);
    assert!((delta_r(&a, &b) - 5.0).abs() < 1e-12);
    let c = PtEtaPhiMVector::<f64>::new(1.0, 3.0, 4.0, 1.0);
    let wrapped = 4.0 - 2.0 * PI;
    assert!((a.delta_r(&c) - (9.0 + wrapped * wrapped).sqrt()).abs() < 1e-12);
}

#[test]
fn single_precision_round_trip() {
    let mut rng = common::rng(11);
    for _ in 0..2000 {
        let v: PtEtaPhiMVector<f32> = common::conditioned(&mut rng);
        let e: PxPyPzEVector<f32> = v.convert();
        let back: PtEtaPhiMVector<f32> = e.convert();
        let scale = f64::from(v.e());
        assert!(close(v.pt().into(), back.pt().into(), 1e-5, scale));
        assert!(close(v.mass().into(), back.mass().into(), 1e-5, scale));
        assert!(close(v.eta().into(), back.eta().into(), 1e-5, 1.0));
    }
}
