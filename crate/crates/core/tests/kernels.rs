mod common;

use std::time::Duration;

use common::close;
use kinematics::bench::{generate_batch, generate_boost};
use kinematics::kernels::{
    apply_boost, dispatch, invariant_masses, Backend, KernelError, Output, ParticleBatch, Problem,
    Transfer,
};
use kinematics::{PtEtaPhiM4D, PxPyPzE4D, PxPyPzM4D};
use proptest::prelude::*;

proptest! {
    #![proptest_config(ProptestConfig::with_cases(32))]

    #[test]
    fn parallel_matches_sequential(n in 0usize..3000, workers in 1usize..9, chunk in 1usize..600, seed in any::<u64>()) {
        let v1 = generate_batch::<PxPyPzE4D<f64>>(n, seed);
        let v2 = generate_batch::<PxPyPzE4D<f64>>(n, seed ^ 1);
        let par = Backend::parallel(workers, chunk).unwrap();
        let seq = invariant_masses(&v1, &v2, Backend::Sequential).unwrap();
        let got = invariant_masses(&v1, &v2, par).unwrap();
        prop_assert!(seq.iter().zip(&got).all(|(a, b)| a.to_bits() == b.to_bits()));
        let boost = generate_boost::<f64>(seed);
        prop_assert!(apply_boost(&v1, &boost, par).bitwise_eq(&apply_boost(&v1, &boost, Backend::Sequential)));
    }
}

#[test]
fn kernels_are_coordinate_generic() {
    let a = generate_batch::<PtEtaPhiM4D<f64>>(2000, 5);
    let b = generate_batch::<PtEtaPhiM4D<f64>>(2000, 6);
    let polar = invariant_masses(&a, &b, Backend::with_workers(3).unwrap()).unwrap();
    let cart = invariant_masses(
        &a.convert::<PxPyPzE4D<f64>>(),
        &b.convert::<PxPyPzE4D<f64>>(),
        Backend::Sequential,
    )
    .unwrap();
    for (x, y) in polar.iter().zip(&cart) {
        assert!(close(*x, *y, 1e-10, 1.0), "{x} vs {y}");
    }

    let boost = generate_boost::<f32>(9);
    let mut rng = common::rng(3);
    let single: ParticleBatch<PxPyPzM4D<f32>> = (0..1000).map(|_| common::conditioned(&mut rng)).collect();
    let boosted = apply_boost(&single, &boost, Backend::parallel(2, 64).unwrap());
    for (v, w) in single.iter().zip(boosted.iter()) {
        assert!(close(v.mass().into(), w.mass().into(), 1e-4, 1.0));
    }
}

#[test]
fn dispatch_modes_agree_and_report_errors() {
    let v1 = generate_batch::<PxPyPzE4D<f64>>(500, 1);
    let v2 = generate_batch::<PxPyPzE4D<f64>>(500, 2);
    let problem = Problem::InvariantMasses { v1: &v1, v2: &v2 };
    let direct = dispatch(problem, Backend::Sequential, Transfer::Direct).unwrap();
    let copied = dispatch(problem, Backend::with_workers(4).unwrap(), Transfer::Copying).unwrap();
    assert!(direct.output.bitwise_eq(&copied.output));
    assert_eq!(direct.output.len(), 500);

    let short = ParticleBatch::new(v2.as_slice()[..10].to_vec());
    let err = dispatch(Problem::InvariantMasses { v1: &v1, v2: &short }, Backend::Sequential, Transfer::Direct)
        .unwrap_err();
    assert_eq!(err, KernelError::LengthMismatch { left: 500, right: 10 });
    assert!(Backend::parallel(0, 1).is_err());
    assert!(Backend::parallel(1, 0).is_err());

    let empty = ParticleBatch::<PxPyPzE4D<f64>>::new(Vec::new());
    let out = invariant_masses(&empty, &empty, Backend::with_workers(8).unwrap()).unwrap();
    assert!(out.is_empty());
    assert!(matches!(
        dispatch(Problem::Boost { input: &empty, boost: &generate_boost(0) }, Backend::Sequential, Transfer::Direct)
            .unwrap()
            .output,
        Output::Boosted(b) if b.is_empty()
    ));
}

fn best_of_three(n: usize) -> Duration {
    let v1 = generate_batch::<PxPyPzE4D<f64>>(n, 21);
    let v2 = generate_batch::<PxPyPzE4D<f64>>(n, 22);
    let problem = Problem::InvariantMasses { v1: &v1, v2: &v2 };
    dispatch(problem, Backend::Sequential, Transfer::Direct).unwrap();
    (0..3)
        .map(|_| dispatch(problem, Backend::Sequential, Transfer::Direct).unwrap().elapsed)
        .min()
        .unwrap()
}

#[test]
fn sequential_runtime_scales_linearly() {
    let small = best_of_three(1 << 20);
    let large = best_of_three(1 << 22);
    let ratio = large.as_secs_f64() / small.as_secs_f64();
    println!("2^22 / 2^20 sequential runtime ratio: {ratio:.3}");
    assert!((3.0..=6.0).contains(&ratio), "ratio {ratio}");
}
