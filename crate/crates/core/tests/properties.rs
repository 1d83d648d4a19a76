use proptest::prelude::*;
use treepart::decomp::{
    flatten, normalize_ends, restrict, validate_path_decomposition, validate_tree_decomposition,
};
use treepart::format::{self, Artifact};
use treepart::generators::{gen_random_tree, SeededConfig};
use treepart::pathwidth::{assemble_tree_pd, decomposition_from_order, exact_pathwidth, extract_path, tree_pathwidth_exact};
use treepart::tpart::{build_tree_partition, f_bound};
use treepart::{Graph, PathDecomposition, TreeDecomposition, TreePartition, VertexSet};

fn graph_from(n: usize, pairs: &[(usize, usize)]) -> Graph {
    let mut edges: Vec<(usize, usize)> =
        pairs.iter().filter(|(u, v)| u != v).map(|&(u, v)| (u.min(v), u.max(v))).collect();
    edges.sort_unstable();
    edges.dedup();
    Graph::from_edges(n, edges).unwrap()
}

/// A graph on `lo..=hi` vertices with a vertex order and a vertex subset.
fn graph_order_subset(lo: usize, hi: usize) -> impl Strategy<Value = (Graph, Vec<usize>, VertexSet)> {
    (lo..=hi).prop_flat_map(|n| {
        (
            proptest::collection::vec((0..n, 0..n), 0..=2 * n),
            Just((0..n).collect::<Vec<_>>()).prop_shuffle(),
            proptest::collection::vec(any::<bool>(), n),
        )
            .prop_map(move |(pairs, order, keep)| {
                let subset = (0..n).filter(|&v| keep[v]).collect();
                (graph_from(n, &pairs), order, subset)
            })
    })
}

/// Tree-decomposition from a tree-partition: every bag also gets its
/// parent's bag, with node 0 as the root.
fn td_from_partition(tp: &TreePartition) -> TreeDecomposition {
    let n = tp.tree.vertex_count();
    let mut parent = vec![None; n];
    let mut seen = vec![false; n];
    let mut stack = vec![0];
    seen[0] = true;
    while let Some(x) = stack.pop() {
        for &y in tp.tree.neighbors(x) {
            if !seen[y] {
                seen[y] = true;
                parent[y] = Some(x);
                stack.push(y);
            }
        }
    }
    let bags = (0..n).map(|x| parent[x].map_or(tp.bags[x].clone(), |p| tp.bags[x].union(&tp.bags[p]))).collect();
    TreeDecomposition { tree: tp.tree.clone(), bags }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(500))]

    #[test]
    fn restrict_stays_valid((g, order, z) in graph_order_subset(1, 30)) {
        let pd = decomposition_from_order(&g, &order);
        let cut = restrict(&pd, &z);
        let (rest, map) = g.remove_vertices(&z).unwrap();
        let report = validate_path_decomposition(&rest, &cut.relabel(&map));
        prop_assert!(report.is_valid(), "{}", report.summary());
        prop_assert!(cut.width() <= pd.width());
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(200))]

    #[test]
    fn normalize_ends_is_idempotent((g, order, _) in graph_order_subset(0, 20)) {
        let pd = decomposition_from_order(&g, &order);
        let once = normalize_ends(&g, &pd).unwrap();
        prop_assert_eq!(normalize_ends(&g, &once).unwrap(), once.clone());
        prop_assert!(once.bags.first().unwrap().is_empty() && once.bags.last().unwrap().is_empty());
        prop_assert_eq!(once.width(), pd.width());
    }

    #[test]
    fn path_and_tree_validators_agree(
        (g, _, _) in graph_order_subset(1, 12),
        raw in proptest::collection::vec(proptest::collection::vec(0usize..12, 0..5), 1..10),
    ) {
        let n = g.vertex_count();
        let bags: Vec<VertexSet> = raw.iter().map(|b| b.iter().map(|&v| v % n).collect()).collect();
        let pd = PathDecomposition::new(bags.clone());
        let path = Graph::from_edges(bags.len(), (1..bags.len()).map(|i| (i - 1, i))).unwrap();
        let td = TreeDecomposition { tree: path, bags };
        prop_assert_eq!(validate_path_decomposition(&g, &pd).is_valid(), validate_tree_decomposition(&g, &td).is_valid());
    }

    #[test]
    fn induced_subgraph_preserves_adjacency((g, _, keep) in graph_order_subset(0, 50)) {
        let (h, map) = g.induced_subgraph(&keep).unwrap();
        prop_assert_eq!(h.vertex_count(), keep.len());
        for a in h.vertices() {
            for b in h.vertices() {
                prop_assert_eq!(h.has_edge(a, b), g.has_edge(map.to_parent(a), map.to_parent(b)));
            }
        }
    }

    #[test]
    fn neighbourhood_of_a_set_avoids_it((g, _, s) in graph_order_subset(0, 30)) {
        let nbrs = g.neighbors_of_set(&s).unwrap();
        prop_assert!(nbrs.is_disjoint(&s));
        for v in g.vertices().filter(|&v| !s.contains(v)) {
            let touches = g.neighbors(v).iter().any(|&w| s.contains(w));
            prop_assert_eq!(nbrs.contains(v), touches);
        }
    }

    #[test]
    fn components_partition_the_vertices((g, _, _) in graph_order_subset(0, 30)) {
        let comps = g.connected_components();
        let mut owner = vec![usize::MAX; g.vertex_count()];
        for (c, comp) in comps.iter().enumerate() {
            for v in comp {
                prop_assert_eq!(owner[v], usize::MAX);
                owner[v] = c;
            }
            let (h, _) = g.induced_subgraph(comp).unwrap();
            prop_assert!(h.is_connected());
        }
        prop_assert!(owner.iter().all(|&c| c != usize::MAX));
        for (u, v) in g.edges() {
            prop_assert_eq!(owner[u], owner[v]);
        }
    }

    #[test]
    fn exact_witness_matches_value((g, order, _) in graph_order_subset(0, 12)) {
        let exact = exact_pathwidth(&g).unwrap();
        prop_assert!(validate_path_decomposition(&g, &exact.witness).is_valid());
        prop_assert_eq!(exact.witness.width(), exact.value);
        prop_assert!(exact.value <= decomposition_from_order(&g, &order).width());
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(100))]

    #[test]
    fn pathwidth_is_monotone_under_induced_subgraphs((g, _, u) in graph_order_subset(1, 14)) {
        let (h, _) = g.induced_subgraph(&u).unwrap();
        prop_assert!(exact_pathwidth(&h).unwrap().value <= exact_pathwidth(&g).unwrap().value);
    }

    #[test]
    fn tree_spine_round_trip(n in 1usize..=15, seed in any::<u64>()) {
        let t = gen_random_tree(&SeededConfig { n, seed });
        let exact = exact_pathwidth(&t).unwrap();
        let spine = extract_path(&t, &exact.witness).unwrap();
        let on_spine: VertexSet = spine.iter().copied().collect();
        let (rest, map) = t.remove_vertices(&on_spine).unwrap();
        prop_assert!(exact_pathwidth(&rest).unwrap().value < exact.value);
        let mut hanging = vec![VertexSet::new(); spine.len()];
        for comp in rest.connected_components() {
            let comp = map.set_to_parent(&comp);
            let attach = comp.iter().flat_map(|v| t.neighbors(v).iter().copied()).find(|&w| on_spine.contains(w)).unwrap();
            let i = spine.iter().position(|&s| s == attach).unwrap();
            hanging[i] = hanging[i].union(&comp);
        }
        let subs: Vec<PathDecomposition> = hanging
            .iter()
            .map(|x| {
                let (h, hmap) = t.induced_subgraph(x).unwrap();
                exact_pathwidth(&h).unwrap().witness.relabel_to_parent(&hmap)
            })
            .collect();
        let rebuilt = assemble_tree_pd(&t, &spine, &subs).unwrap();
        prop_assert!(validate_path_decomposition(&t, &rebuilt).is_valid());
        prop_assert_eq!(rebuilt.width(), exact.value);
    }

    #[test]
    fn construction_meets_its_bounds((g, order, s) in graph_order_subset(1, 24)) {
        let pd = decomposition_from_order(&g, &order);
        let d = g.max_degree();
        let (tp, trace) = build_tree_partition(&g, &pd, &s, d).unwrap();
        let k = trace.k as u64;
        prop_assert!(treepart::tpart::validate_tree_partition(&g, &tp).is_valid());
        prop_assert!(tp.width() as u64 <= f_bound(k, d as u64, s.len() as u64));
        prop_assert!(s.is_subset(&tp.bags[trace.root]));
        prop_assert!(tp.witness_width().unwrap() <= 2 * k as i64 + 1);
        prop_assert_eq!(trace.audit(&g), vec![]);
        if tp.tree.vertex_count() <= 20 {
            prop_assert!(tree_pathwidth_exact(&tp.tree).unwrap().value <= 2 * k as i64 + 1);
        }
        // same input, same output
        let again = build_tree_partition(&g, &pd, &s, d).unwrap();
        prop_assert_eq!(&again.0, &tp);
        prop_assert_eq!(&again.1, &trace);

        // flattening the derived tree-decomposition along the witness
        let td = td_from_partition(&tp);
        prop_assert!(validate_tree_decomposition(&g, &td).is_valid());
        let witness = tp.witness.clone().unwrap();
        let flat = flatten(&g, &td, &witness).unwrap();
        prop_assert!(validate_path_decomposition(&g, &flat).is_valid());
        prop_assert!(flat.width() < (td.width() + 1) * (witness.width() + 1));
    }

    #[test]
    fn formats_round_trip((g, order, s) in graph_order_subset(0, 20)) {
        prop_assert_eq!(format::parse_graph(&format::write_graph(&g)).unwrap(), g.clone());
        let pd = decomposition_from_order(&g, &order);
        let doc = Artifact::Path(pd.clone());
        prop_assert_eq!(format::parse_artifact(&format::write_artifact(&doc)).unwrap(), doc);
        let (tp, trace) = build_tree_partition(&g, &pd, &s, g.max_degree()).unwrap();
        let doc = Artifact::Partition(tp);
        prop_assert_eq!(format::parse_artifact(&format::write_artifact(&doc)).unwrap(), doc);
        prop_assert_eq!(format::parse_trace(&format::write_trace(&trace)).unwrap(), trace);
    }
}
