use criterion::{criterion_group, criterion_main, BenchmarkId, Criterion};
use std::hint::black_box;
use trihit::arrangement::local_radius_stats_with;
use trihit::geometry::{build_graph_with, perturb_squares};
use trihit::oracle::brute_min_hitting_with;
use trihit::pipeline::{solve_pipeline, PipelineConfig};
use trihit::random::{random_2dir_scene, random_graph, random_squares, rng};
use trihit::{Exec, ProblemProfile};

const MODES: [(&str, Exec); 2] = [("sequential", Exec::Sequential), ("parallel", Exec::Parallel)];

fn oracle(c: &mut Criterion) {
    let g = random_graph(&mut rng(1), 18, 0.5);
    let th = ProblemProfile::th();
    let mut group = c.benchmark_group("oracle_th_n18");
    for (name, exec) in MODES {
        group.bench_function(BenchmarkId::from_parameter(name), |b| b.iter(|| brute_min_hitting_with(black_box(&g), &th, 20, exec).unwrap()));
    }
    group.finish();
}

fn pipeline(c: &mut Criterion) {
    let scenes: Vec<_> = (0..8).map(|s| random_2dir_scene(&mut rng(s), 40, 14)).collect();
    let graphs: Vec<_> = scenes.iter().map(|s| build_graph_with(s, Exec::Sequential)).collect();
    let mut group = c.benchmark_group("pipeline_2dir_n40_k8");
    group.sample_size(20);
    for (name, exec) in MODES {
        let cfg = PipelineConfig { exec, ..PipelineConfig::default() };
        group.bench_function(BenchmarkId::from_parameter(name), |b| {
            b.iter(|| {
                for (s, g) in scenes.iter().zip(&graphs) {
                    black_box(solve_pipeline(g, Some(s), 8, &ProblemProfile::th(), &cfg).unwrap());
                }
            })
        });
    }
    group.finish();
}

fn geometry(c: &mut Criterion) {
    let segs = random_2dir_scene(&mut rng(2), 1500, 400);
    let squares = perturb_squares(&random_squares(&mut rng(3), 60, 30, 6)).unwrap();
    let mut group = c.benchmark_group("geometry");
    group.sample_size(20);
    for (name, exec) in MODES {
        group.bench_function(BenchmarkId::new("build_graph_n1500", name), |b| b.iter(|| build_graph_with(black_box(&segs), exec)));
        group.bench_function(BenchmarkId::new("local_radius_n60", name), |b| b.iter(|| local_radius_stats_with(black_box(&squares), exec).unwrap()));
    }
    group.finish();
}

criterion_group!(benches, oracle, pipeline, geometry);
criterion_main!(benches);
