use treepart::decomp::validate_path_decomposition;
use treepart::generators::{gen_comb, gen_fan, gen_lower_bound_tree, gen_random_tree, SeededConfig};
use treepart::pathwidth::{exact_pathwidth, tree_pathwidth_exact};
use treepart::tpart::{build_tree_partition, f_bound, validate_tree_partition, width_bound, ConstructionTrace};
use treepart::{Graph, PathDecomposition, TreePartition, VertexSet};

/// Runs the construction and checks every postcondition; returns the output.
fn run(g: &Graph, pd: &PathDecomposition, s: &VertexSet, d: usize) -> (TreePartition, ConstructionTrace) {
    let (tp, trace) = build_tree_partition(g, pd, s, d).unwrap();
    let k = pd.width().max(0) as u64;
    let report = validate_tree_partition(g, &tp);
    assert!(report.is_valid(), "{}", report.summary());
    assert!(tp.width() as u64 <= f_bound(k, d as u64, s.len() as u64));
    assert!(s.is_subset(&tp.bags[trace.root]));
    let witness = tp.witness.as_ref().unwrap();
    assert!(validate_path_decomposition(&tp.tree, witness).is_valid());
    assert!(witness.width() <= 2 * k as i64 + 1, "witness {} for k = {k}", witness.width());
    let findings = trace.audit(g);
    assert!(findings.is_empty(), "{findings:?}");
    (tp, trace)
}

#[test]
fn comb_ten() {
    let c = gen_comb(10);
    let (tp, _) = run(&c.graph, &c.decomposition, &VertexSet::new(), 3);
    assert!(tp.width() <= 78);
    assert!(tp.witness_width().unwrap() <= 5);
}

#[test]
fn combs_with_seeds() {
    for n in 2..9 {
        let c = gen_comb(n);
        for s in [vec![], vec![0], vec![n, 2 * n - 1], (0..n).collect()] {
            run(&c.graph, &c.decomposition, &s.into(), 3);
        }
    }
}

#[test]
fn lower_bound_tree_four() {
    let t = gen_lower_bound_tree(4, 5).unwrap();
    assert!(t.decomposition.width() <= 4);
    let (tp, _) = run(&t.graph, &t.decomposition, &VertexSet::new(), 3);
    assert!(tp.width() as u64 <= f_bound(4, 3, 0));
    assert!(tp.width() as u64 <= width_bound(4, 3));
}

#[test]
fn fans_and_random_trees() {
    for n in 2..40 {
        let f = gen_fan(n).unwrap();
        run(&f.graph, &f.decomposition, &VertexSet::new(), f.graph.max_degree());
        run(&f.graph, &f.decomposition, &VertexSet::from([0]), f.graph.max_degree());
    }
    for seed in 0..60 {
        let t = gen_random_tree(&SeededConfig { n: 4 + (seed as usize % 14), seed });
        let pw = exact_pathwidth(&t).unwrap();
        let d = t.max_degree();
        let (tp, _) = run(&t, &pw.witness, &VertexSet::new(), d);
        if tp.tree.vertex_count() <= 20 {
            let k = pw.value;
            assert!(tree_pathwidth_exact(&tp.tree).unwrap().value <= 2 * k + 1);
        }
    }
}
