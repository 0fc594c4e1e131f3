use criterion::{criterion_group, criterion_main, BenchmarkId, Criterion};
use std::hint::black_box;
use trisect::geometry::{certify_with, cusp_analysis, sector_coverage, CertifyOptions, PolyhedronQM, Scene};
use trisect::par::Exec;
use trisect::pipeline::stein_b4;
use trisect::schema::PipelineConfig;
use trisect::Sector;

const MODES: [(&str, Exec); 2] = [("sequential", Exec::Sequential), ("parallel", Exec::Parallel)];

fn coverage(c: &mut Criterion) {
    let q = PolyhedronQM::new(100.0).unwrap();
    let mut g = c.benchmark_group("sector_coverage");
    for samples in [100_000u64, 1_000_000] {
        for (name, exec) in MODES {
            g.bench_with_input(BenchmarkId::new(name, samples), &samples, |b, &n| {
                b.iter(|| sector_coverage(&q, black_box(n), 1, 1e-7, exec))
            });
        }
    }
    g.finish();
}

fn cusp(c: &mut Criterion) {
    let mut g = c.benchmark_group("cusp_analysis");
    for (name, exec) in MODES {
        g.bench_function(name, |b| b.iter(|| cusp_analysis(black_box(100_000), 1000, 1, 1e-7, exec)));
    }
    g.finish();
}

fn certify(c: &mut Criterion) {
    let q = PolyhedronQM::new(100.0).unwrap();
    let opts = CertifyOptions::default();
    let mut g = c.benchmark_group("certify");
    g.sample_size(20);
    for targets in [vec![None; 3], vec![Some(Sector::ONE), None, Some(Sector::THREE)]] {
        let scene = Scene::family(100.0, 10.0, &targets);
        let label = if targets.iter().any(Option::is_some) { "pleated" } else { "linear" };
        for (name, exec) in MODES {
            g.bench_function(BenchmarkId::new(name, label), |b| {
                b.iter(|| certify_with(black_box(&scene.graphs), &q, 10.0, &opts, exec).unwrap())
            });
        }
    }
    g.finish();
}

fn pipeline(c: &mut Criterion) {
    let cfg = PipelineConfig {
        stabilizations: [1, 1, 1],
        ..PipelineConfig::default()
    };
    let mut g = c.benchmark_group("stein_b4");
    g.sample_size(10);
    for (name, exec) in MODES {
        g.bench_function(name, |b| b.iter(|| stein_b4(black_box(&cfg), exec)));
    }
    g.finish();
}

criterion_group!(benches, coverage, cusp, certify, pipeline);
criterion_main!(benches);
