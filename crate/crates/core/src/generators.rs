//! Deterministic builders for the extremal families, each shipped with the
//! decomposition (or partition) that certifies its known width.
//!
//! Labeling schemes:
//! - fan: hub `0`, path `1..n`.
//! - comb `S_n`: spine `0..n`, then tooth `i` as `n + i*n .. n + (i+1)*n`,
//!   whose first vertex hangs off spine vertex `i`.
//! - `G_i`: central path first, then the copies of `G_{i-1}` in spine order,
//!   each laid out recursively the same way. The root is vertex `0`.

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::decomp::PathDecomposition;
use crate::error::{Error, Result};
use crate::graph::{Graph, VertexSet};
use crate::pathwidth::concat_spine;
use crate::tpart::TreePartition;

#[derive(Clone, Debug)]
pub struct Fan {
    pub graph: Graph,
    /// Bags `{0, i, i+1}`; width 2 (1 when `n = 2`).
    pub decomposition: PathDecomposition,
    /// Star-indexed partition of width at most `2⌈√n⌉`.
    pub partition: TreePartition,
}

#[derive(Clone, Debug)]
pub struct Comb {
    pub graph: Graph,
    pub decomposition: PathDecomposition,
}

#[derive(Clone, Debug)]
pub struct LowerBoundTree {
    pub graph: Graph,
    pub root: usize,
    /// Width at most `i`.
    pub decomposition: PathDecomposition,
}

/// Parameters of the randomised generators.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct SeededConfig {
    pub n: usize,
    pub seed: u64,
}

pub fn gen_path(n: usize) -> Graph {
    Graph::from_edges(n, (1..n).map(|i| (i - 1, i))).expect("path edges are simple")
}

fn path_bags(ids: &[usize]) -> Vec<VertexSet> {
    match ids {
        [] => Vec::new(),
        [v] => vec![VertexSet::singleton(*v)],
        _ => ids.windows(2).map(|w| VertexSet::from([w[0], w[1]])).collect(),
    }
}

/// Hub `0` adjacent to every vertex of the path `1..n`.
///
/// The tree-partition is a star: the centre bag holds the hub and every
/// `⌈√n⌉`-th path vertex, the leaves hold the path segments in between.
pub fn gen_fan(n: usize) -> Result<Fan> {
    if n < 2 {
        return Err(Error::InvalidParameter(format!("a fan needs at least 2 vertices, got {n}")));
    }
    let edges = (1..n).map(|i| (0, i)).chain((1..n - 1).map(|i| (i, i + 1)));
    let graph = Graph::from_edges(n, edges)?;
    let decomposition = if n == 2 {
        PathDecomposition::new(vec![VertexSet::from([0, 1])])
    } else {
        PathDecomposition::new((1..n - 1).map(|i| VertexSet::from([0, i, i + 1])).collect())
    };

    let block = (n as f64).sqrt().ceil() as usize;
    let mut center = VertexSet::singleton(0);
    let mut leaves: Vec<VertexSet> = Vec::new();
    let mut segment = Vec::new();
    for v in 1..n {
        if v % block == 0 {
            center.insert(v);
            if !segment.is_empty() {
                leaves.push(VertexSet::from_sorted(std::mem::take(&mut segment)));
            }
        } else {
            segment.push(v);
        }
    }
    if !segment.is_empty() {
        leaves.push(VertexSet::from_sorted(segment));
    }
    let tree = Graph::from_edges(leaves.len() + 1, (1..=leaves.len()).map(|l| (0, l)))?;
    let mut bags = vec![center];
    bags.extend(leaves);
    let star_pd = PathDecomposition::new(if bags.len() == 1 {
        vec![VertexSet::singleton(0)]
    } else {
        (1..bags.len()).map(|l| VertexSet::from([0, l])).collect()
    });
    let partition = TreePartition { tree, bags, witness: Some(star_pd) };
    Ok(Fan { graph, decomposition, partition })
}

/// The comb `S_n`: `n(n+1)` vertices, diameter `3n - 1`, decomposition of
/// width 2 (1 when `n = 1`).
pub fn gen_comb(n: usize) -> Comb {
    let spine: Vec<usize> = (0..n).collect();
    let tooth = |i: usize| n + i * n..n + (i + 1) * n;
    let mut edges: Vec<(usize, usize)> = (1..n).map(|i| (i - 1, i)).collect();
    for i in 0..n {
        let t = tooth(i);
        edges.push((i, t.start));
        edges.extend(t.clone().skip(1).map(|v| (v - 1, v)));
    }
    let graph = Graph::from_edges(n * (n + 1), edges).expect("comb edges are simple");
    let subs: Vec<PathDecomposition> =
        (0..n).map(|i| PathDecomposition::new(path_bags(&tooth(i).collect::<Vec<_>>()))).collect();
    let decomposition = concat_spine(&spine, &subs);
    Comb { graph, decomposition }
}

/// `G_1` is the `n`-vertex path rooted at an end; `G_i` is an `n`-vertex
/// central path with a copy of `G_{i-1}` hanging off each path vertex by its
/// root. Maximum degree 3, root degree at most 2, pathwidth at most `i`.
pub fn gen_lower_bound_tree(i: usize, n: usize) -> Result<LowerBoundTree> {
    if i == 0 || n == 0 {
        return Err(Error::InvalidParameter(format!("need i >= 1 and n >= 1, got i = {i}, n = {n}")));
    }
    let mut size = 0usize;
    for _ in 0..i {
        size = size
            .checked_mul(n)
            .and_then(|s| s.checked_add(n))
            .ok_or_else(|| Error::InvalidParameter("instance too large".into()))?;
    }
    let mut edges = Vec::with_capacity(size.saturating_sub(1));
    let (count, bags) = lay_out(i, n, 0, &mut edges);
    debug_assert_eq!(count, size);
    let graph = Graph::from_edges(size, edges)?;
    Ok(LowerBoundTree { graph, root: 0, decomposition: PathDecomposition::new(bags) })
}

/// Lays out `G_level` starting at id `offset`; returns its size and bags.
fn lay_out(level: usize, n: usize, offset: usize, edges: &mut Vec<(usize, usize)>) -> (usize, Vec<VertexSet>) {
    let spine: Vec<usize> = (offset..offset + n).collect();
    edges.extend(spine.windows(2).map(|w| (w[0], w[1])));
    if level == 1 {
        return (n, path_bags(&spine));
    }
    let mut next = offset + n;
    let mut subs = Vec::with_capacity(n);
    for &v in &spine {
        edges.push((v, next));
        let (size, bags) = lay_out(level - 1, n, next, edges);
        subs.push(PathDecomposition::new(bags));
        next += size;
    }
    (next - offset, concat_spine(&spine, &subs).bags)
}

/// Random recursive tree: vertex `v >= 1` attaches to a uniformly random
/// earlier vertex. Deterministic per seed.
pub fn gen_random_tree(cfg: &SeededConfig) -> Graph {
    let mut rng = ChaCha8Rng::seed_from_u64(cfg.seed);
    let edges: Vec<(usize, usize)> = (1..cfg.n).map(|v| (rng.gen_range(0..v), v)).collect();
    Graph::from_edges(cfg.n, edges).expect("tree edges are simple")
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::decomp::validate_path_decomposition;
    use crate::tpart::validate_tree_partition;

    #[test]
    fn fan_sizes() {
        let f = gen_fan(5).unwrap();
        assert_eq!(f.graph.vertex_count(), 5);
        assert_eq!(f.graph.edge_count(), 7);
        assert_eq!(f.decomposition.width(), 2);
        assert_eq!(f.graph.max_degree(), 4);
        let two = gen_fan(2).unwrap();
        assert_eq!(two.graph.edge_count(), 1);
        assert_eq!(two.decomposition.width(), 1);
        assert!(validate_path_decomposition(&two.graph, &two.decomposition).is_valid());
        assert!(gen_fan(1).is_err());
    }

    #[test]
    fn fan_partition_at_100() {
        let f = gen_fan(100).unwrap();
        assert!(validate_tree_partition(&f.graph, &f.partition).is_valid());
        assert!(f.partition.width() <= 20);
    }

    #[test]
    fn comb_shapes() {
        let c = gen_comb(4);
        assert_eq!(c.graph.vertex_count(), 20);
        assert_eq!(c.graph.max_degree(), 3);
        assert_eq!(c.decomposition.width(), 2);
        assert!(c.graph.is_tree());
        let one = gen_comb(1);
        assert_eq!(one.graph.vertex_count(), 2);
        assert_eq!(one.graph.edge_count(), 1);
    }

    #[test]
    fn lower_bound_tree_sizes() {
        let g4 = gen_lower_bound_tree(4, 4).unwrap();
        assert_eq!(g4.graph.vertex_count(), 340);
        let g1 = gen_lower_bound_tree(1, 5).unwrap();
        assert_eq!(g1.graph, gen_path(5));
        let g2 = gen_lower_bound_tree(2, 3).unwrap();
        assert_eq!(g2.graph.vertex_count(), 12);
        assert_eq!(g2.graph.max_degree(), 3);
        assert!(g2.graph.degree(g2.root) <= 2);
        assert!(gen_lower_bound_tree(0, 3).is_err());
    }

    #[test]
    fn random_tree_is_deterministic() {
        let cfg = SeededConfig { n: 10, seed: 7 };
        let a = gen_random_tree(&cfg);
        assert!(a.is_tree());
        assert_eq!(a, gen_random_tree(&cfg));
        assert_eq!(gen_path(1).vertex_count(), 1);
    }
}
