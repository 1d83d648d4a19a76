use criterion::{black_box, criterion_group, criterion_main, BenchmarkId, Criterion};
use treepart::generators::{gen_comb, gen_lower_bound_tree};
use treepart::tpart::build_tree_partition;
use treepart::VertexSet;

fn combs(c: &mut Criterion) {
    let mut group = c.benchmark_group("comb");
    for n in [10usize, 25, 50] {
        let comb = gen_comb(n);
        group.bench_with_input(BenchmarkId::from_parameter(n), &comb, |b, comb| {
            b.iter(|| build_tree_partition(black_box(&comb.graph), &comb.decomposition, &VertexSet::new(), 3).unwrap())
        });
    }
    group.finish();
}

fn lower_bound_trees(c: &mut Criterion) {
    let mut group = c.benchmark_group("lower-bound");
    group.sample_size(20);
    for (i, n) in [(3usize, 10usize), (4, 5), (4, 7)] {
        let t = gen_lower_bound_tree(i, n).unwrap();
        group.bench_with_input(BenchmarkId::new(format!("G{i}"), n), &t, |b, t| {
            b.iter(|| build_tree_partition(black_box(&t.graph), &t.decomposition, &VertexSet::new(), 3).unwrap())
        });
    }
    group.finish();
}

criterion_group!(benches, combs, lower_bound_trees);
criterion_main!(benches);
