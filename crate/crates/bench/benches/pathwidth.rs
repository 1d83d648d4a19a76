use criterion::{black_box, criterion_group, criterion_main, BenchmarkId, Criterion};
use treepart::generators::{gen_random_tree, SeededConfig};
use treepart::oracles::brute_pathwidth;
use treepart::pathwidth::exact_pathwidth;
use treepart::Graph;

/// Random tree plus a few chords, so the instances are not all forests.
fn instance(n: usize) -> Graph {
    let t = gen_random_tree(&SeededConfig { n, seed: n as u64 });
    let mut edges: Vec<(usize, usize)> = t.edges().collect();
    for v in (3..n).step_by(3) {
        if !t.has_edge(v - 3, v) {
            edges.push((v - 3, v));
        }
    }
    Graph::from_edges(n, edges).unwrap()
}

fn exact(c: &mut Criterion) {
    let mut group = c.benchmark_group("exact");
    group.sample_size(10);
    for n in [12usize, 16, 20] {
        let g = instance(n);
        group.bench_with_input(BenchmarkId::from_parameter(n), &g, |b, g| b.iter(|| exact_pathwidth(black_box(g)).unwrap()));
    }
    group.finish();
}

fn brute(c: &mut Criterion) {
    let mut group = c.benchmark_group("brute");
    for n in [7usize, 9] {
        let g = instance(n);
        group.bench_with_input(BenchmarkId::from_parameter(n), &g, |b, g| b.iter(|| brute_pathwidth(black_box(g)).unwrap()));
    }
    group.finish();
}

criterion_group!(benches, exact, brute);
criterion_main!(benches);
