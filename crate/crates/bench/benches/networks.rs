use std::hint::black_box;

use criterion::{criterion_group, criterion_main, Criterion};

use cognet_bench::seeded_graph;
use cognet_core::metrics::{closeness_centrality, girvan_newman_clusters};
use cognet_core::nullmodels::{degree_rewire_sample, fit_soft_weighted_cm, SoftCmOptions};
use cognet_core::rng::stream_rng;
use cognet_core::signed::{triangle_census, SignedNetwork};
use cognet_core::Valence;

fn bench_triangle_census(c: &mut Criterion) {
    let net = seeded_graph(300, 0.05, 1);
    let valences = (0..net.node_count())
        .map(|i| match i % 3 {
            0 => Valence::Negative,
            1 => Valence::Neutral,
            _ => Valence::Positive,
        })
        .collect();
    let snet = SignedNetwork::from_valences(net, valences).unwrap();
    c.bench_function("triangle_census/n300_p05", |b| {
        b.iter(|| black_box(triangle_census(black_box(&snet))))
    });
}

fn bench_closeness(c: &mut Criterion) {
    let net = seeded_graph(500, 0.02, 2);
    c.bench_function("closeness_centrality/n500_p02", |b| {
        b.iter(|| black_box(closeness_centrality(black_box(&net))))
    });
}

fn bench_degree_rewire(c: &mut Criterion) {
    let net = seeded_graph(200, 0.05, 3);
    c.bench_function("degree_rewire_sample/n200_x10", |b| {
        b.iter(|| {
            let mut rng = stream_rng(4, 0);
            black_box(degree_rewire_sample(black_box(&net), 10, &mut rng).unwrap())
        })
    });
}

fn bench_soft_cm_fit(c: &mut Criterion) {
    let net = seeded_graph(100, 0.08, 5);
    c.bench_function("fit_soft_weighted_cm/n100_p08", |b| {
        b.iter(|| black_box(fit_soft_weighted_cm(black_box(&net), &SoftCmOptions::default()).unwrap()))
    });
}

fn bench_communities(c: &mut Criterion) {
    let net = seeded_graph(60, 0.08, 6);
    let mut group = c.benchmark_group("girvan_newman");
    // Each split removes many edges and recomputes betweenness; keep the
    // sample count low so the suite stays quick.
    group.sample_size(10);
    group.bench_function("n60_p08_k4", |b| {
        b.iter(|| black_box(girvan_newman_clusters(black_box(&net), 4).unwrap()))
    });
    group.finish();
}

criterion_group!(
    benches,
    bench_triangle_census,
    bench_closeness,
    bench_degree_rewire,
    bench_soft_cm_fit,
    bench_communities
);
criterion_main!(benches);
