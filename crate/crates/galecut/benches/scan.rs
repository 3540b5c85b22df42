//! Parallel-vs-sequential comparison of the data-parallel scans: minimal
//! Radon pair enumeration and the constrained tuple search. The sequential
//! figures come from a one-thread rayon pool running the same code path;
//! building with `--no-default-features` removes rayon entirely and the
//! suite then reports only the sequential path.

use criterion::{criterion_group, criterion_main, Criterion};
use galecut::equipartition::moment_curve_instance;
use galecut::gale::{center_and_lift, inverse_gale, PointConfig};
use galecut::generate::{random_point_config, rng_from_seed};
use galecut::kneser::{majority_family, SetFamily};
use galecut::radon::{enumerate_minimal_radon_pairs, find_constrained_radon_tuple};

fn fixture_config() -> PointConfig {
    random_point_config(8, 14, 9, &mut rng_from_seed(2024)).unwrap()
}

/// The lifted dual pipeline input for one 8-point set with k = 2 majority
/// members, the shape the equipartition search scans.
fn fixture_pipeline() -> (PointConfig, SetFamily) {
    let inst = moment_curve_instance(3, &[8], 5).unwrap();
    let ground = PointConfig::new(3, inst.sets()[0].clone()).unwrap();
    let lift = center_and_lift(&ground);
    let primal = inverse_gale(&lift.config).unwrap();
    let majority = majority_family(8, 2).unwrap();
    let family = majority.extend_ground(lift.config.len()).unwrap();
    (primal, family)
}

fn run_benches(c: &mut Criterion) {
    let cfg = fixture_config();
    let (primal, family) = fixture_pipeline();

    let mut group = c.benchmark_group("enumerate_minimal_radon_pairs");
    group.sample_size(10);
    group.bench_function("parallel", |b| {
        b.iter(|| enumerate_minimal_radon_pairs(&cfg, usize::MAX).unwrap())
    });
    #[cfg(feature = "parallel")]
    group.bench_function("sequential", |b| {
        let pool = rayon::ThreadPoolBuilder::new()
            .num_threads(1)
            .build()
            .unwrap();
        b.iter(|| pool.install(|| enumerate_minimal_radon_pairs(&cfg, usize::MAX).unwrap()))
    });
    group.finish();

    let mut group = c.benchmark_group("constrained_radon_tuple");
    group.sample_size(10);
    group.bench_function("parallel", |b| {
        b.iter(|| find_constrained_radon_tuple(&primal, &family, 2).unwrap())
    });
    #[cfg(feature = "parallel")]
    group.bench_function("sequential", |b| {
        let pool = rayon::ThreadPoolBuilder::new()
            .num_threads(1)
            .build()
            .unwrap();
        b.iter(|| pool.install(|| find_constrained_radon_tuple(&primal, &family, 2).unwrap()))
    });
    group.finish();
}

criterion_group!(benches, run_benches);
criterion_main!(benches);
