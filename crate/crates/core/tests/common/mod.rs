#![allow(dead_code)]

use kinematics::coords::{Coords4D, LorentzVector, PtEtaPhiM4D, PxPyPzE4D};
use kinematics::Scalar;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

pub fn rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

/// Timelike vector away from the light cone and the beam axis:
/// m in [1, 10], |p| in [0.05 m, 2 m], eta in [-2, 2].
pub fn conditioned<C: Coords4D>(rng: &mut ChaCha8Rng) -> LorentzVector<C>
where
    C::Scalar: Scalar,
{
    let m: f64 = rng.gen_range(1.0..=10.0);
    let p = m * rng.gen_range(0.05..=2.0);
    let eta: f64 = rng.gen_range(-2.0..=2.0);
    let phi = std::f64::consts::PI * (1.0 - 2.0 * rng.gen::<f64>());
    let pt = p / eta.cosh();
    let lit = <C::Scalar as Scalar>::lit;
    LorentzVector::<PtEtaPhiM4D<C::Scalar>>::new(lit(pt), lit(eta), lit(phi), lit(m)).convert()
}

/// Uniform point in the ball of radius `max`.
pub fn beta_in_ball(rng: &mut ChaCha8Rng, max: f64) -> [f64; 3] {
    loop {
        let b = [
            rng.gen_range(-1.0..=1.0),
            rng.gen_range(-1.0..=1.0),
            rng.gen_range(-1.0..=1.0),
        ];
        let r2: f64 = b.iter().map(|x| x * x).sum();
        if r2 <= 1.0 {
            return b.map(|x| x * max);
        }
    }
}

/// Arbitrary-sign momentum components with positive energy.
pub fn raw_px_py_pz_e(rng: &mut ChaCha8Rng) -> LorentzVector<PxPyPzE4D<f64>> {
    let px = rng.gen_range(-50.0..=50.0);
    let py = rng.gen_range(-50.0..=50.0);
    let pz = rng.gen_range(-200.0..=200.0);
    let e = rng.gen_range(0.0..=300.0);
    LorentzVector::<PxPyPzE4D<f64>>::new(px, py, pz, e)
}

/// `|a - b| <= tol * max(|a|, |b|, scale)`.
pub fn close(a: f64, b: f64, tol: f64, scale: f64) -> bool {
    (a - b).abs() <= tol * a.abs().max(b.abs()).max(scale)
}

/// Angular difference folded into [0, π].
pub fn angle_gap(a: f64, b: f64) -> f64 {
    let d = (a - b).rem_euclid(std::f64::consts::TAU);
    d.min(std::f64::consts::TAU - d)
}
