//! Rayon pool versus a single worker on the heavier checks. Without the
//! `parallel` feature both arms run the sequential path.

use criterion::{criterion_group, criterion_main, BenchmarkId, Criterion};

use conformal_core::algebra::checks;
use conformal_core::algebra::Parity;
use conformal_core::cohomology::{self, AlphaSchedule};
use conformal_core::derivation::{self, DegreeBounds};
use conformal_core::fixtures;
use conformal_core::representation::adjoint_rep;

type Work = Box<dyn Fn() + Send + Sync>;

fn workloads() -> Vec<(&'static str, Work)> {
    let sl2 = fixtures::twisted_cur_sl2();
    let jordan = fixtures::cur_jordan();
    let sum = conformal_core::constructions::direct_sum(&sl2, &sl2).expect("direct sum");
    vec![
        (
            "hom-jacobi",
            Box::new(move || assert!(checks::check_hom_jacobi(&sum).passed())),
        ),
        (
            "d2d1",
            Box::new(move || {
                let r = adjoint_rep(&sl2);
                for g in cohomology::spanning_one_cochains(&sl2, &r, Parity::Even, 1, 1).unwrap() {
                    assert!(cohomology::verify_d2d1_zero(&sl2, &r, &g, AlphaSchedule::Uniform)
                        .unwrap()
                        .passed());
                }
            }),
        ),
        (
            "derivation-solve",
            Box::new(move || {
                let b = derivation::solve_derivation_space(&jordan, 1, Parity::Even, DegreeBounds::new(2, 2));
                assert!(b.is_ok());
            }),
        ),
    ]
}

#[cfg(feature = "parallel")]
fn run_with(threads: Option<usize>, f: &(dyn Fn() + Send + Sync)) {
    match threads {
        None => f(),
        Some(n) => rayon::ThreadPoolBuilder::new()
            .num_threads(n)
            .build()
            .expect("pool")
            .install(f),
    }
}

#[cfg(not(feature = "parallel"))]
fn run_with(_threads: Option<usize>, f: &(dyn Fn() + Send + Sync)) {
    f()
}

fn bench(c: &mut Criterion) {
    let mut group = c.benchmark_group("parallel");
    group.sample_size(10);
    for (name, work) in workloads() {
        group.bench_function(BenchmarkId::new("pool", name), |b| b.iter(|| run_with(None, &work)));
        group.bench_function(BenchmarkId::new("one-thread", name), |b| {
            b.iter(|| run_with(Some(1), &work))
        });
    }
    group.finish();
}

criterion_group!(benches, bench);
criterion_main!(benches);
