//! Parallel-versus-sequential timings for the exhaustive identity scans.
//!
//! Each scan is a passing instance, so the whole tuple space is enumerated
//! and the comparison is not skewed by early witness exits.  With the
//! default `parallel` feature `Exec::Par` uses the rayon pool; run
//! `cargo bench --no-default-features` to see both modes collapse onto the
//! sequential path.

use criterion::{criterion_group, criterion_main, BenchmarkId, Criterion};
use std::time::Duration;

use jloop::brackets::GradedElt;
use jloop::builtins;
use jloop::exec::Exec;
use jloop::identities::{check_st_identity, sabinin_axioms_check};

const MODES: [(Exec, &str); 2] = [(Exec::Par, "par"), (Exec::Seq, "seq")];

fn bench_st_scans(c: &mut Criterion) {
    let ut3 = builtins::by_spec("upper_triangular:3").expect("builtin");
    let ev = builtins::by_spec("ev").expect("builtin");

    let mut group = c.benchmark_group("st_scans");
    group.sample_size(10);
    group.warm_up_time(Duration::from_secs(1));
    group.measurement_time(Duration::from_secs(4));
    for (exec, tag) in MODES {
        group.bench_with_input(BenchmarkId::new("st5_ut3_tmax3", tag), &exec, |b, &e| {
            b.iter(|| {
                let report = check_st_identity(&ut3, 5, 3, e).expect("scan runs");
                assert!(report.passed);
                report
            })
        });
        group.bench_with_input(BenchmarkId::new("st6_ev_tmax3", tag), &exec, |b, &e| {
            b.iter(|| {
                let report = check_st_identity(&ev, 6, 3, e).expect("scan runs");
                assert!(report.passed);
                report
            })
        });
    }
    group.finish();
}

fn bench_axiom_scans(c: &mut Criterion) {
    let alg = builtins::by_spec("split_null:2").expect("builtin");
    let pool: Vec<GradedElt> = (0..alg.dim() as u32)
        .map(|i| {
            GradedElt::new(0, jloop::algebra::AlgElt::basis(&alg, i).expect("basis"))
                .expect("degree tag")
        })
        .collect();

    let mut group = c.benchmark_group("axiom_scans");
    group.sample_size(10);
    group.warm_up_time(Duration::from_secs(1));
    group.measurement_time(Duration::from_secs(4));
    for (exec, tag) in MODES {
        group.bench_with_input(
            BenchmarkId::new("split_null2_arity2", tag),
            &exec,
            |b, &e| {
                b.iter(|| {
                    let report = sabinin_axioms_check(&pool, 2, e).expect("scan runs");
                    assert!(report.passed);
                    report
                })
            },
        );
    }
    group.finish();
}

criterion_group!(scans, bench_st_scans, bench_axiom_scans);
criterion_main!(scans);
