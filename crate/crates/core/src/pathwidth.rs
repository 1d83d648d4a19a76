//! Exact pathwidth for small graphs, and the two constructive directions of
//! the spine characterisation of tree pathwidth: a tree has pathwidth at most
//! `k` iff it has a path whose removal leaves pathwidth at most `k - 1`.

use crate::decomp::{validate_path_decomposition, PathDecomposition};
use crate::error::{Error, Result};
use crate::graph::{Graph, VertexSet};

/// Default vertex limit for [`exact_pathwidth`].
pub const EXACT_LIMIT: usize = 20;

/// Hard ceiling for the subset DP tables (2^n bytes each).
const MAX_LIMIT: usize = 28;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PathwidthResult {
    /// Pathwidth; `-1` for the empty graph.
    pub value: i64,
    pub witness: PathDecomposition,
}

pub fn exact_pathwidth(g: &Graph) -> Result<PathwidthResult> {
    exact_pathwidth_with_limit(g, EXACT_LIMIT)
}

/// Vertex separation number by dynamic programming over vertex subsets.
///
/// For a prefix set `S` of an ordering, the cost is the number of vertices
/// of `S` with a neighbour outside `S`; the best ordering minimises the
/// maximum cost over its prefixes, and that minimum equals the pathwidth.
pub fn exact_pathwidth_with_limit(g: &Graph, limit: usize) -> Result<PathwidthResult> {
    let n = g.vertex_count();
    let limit = limit.min(MAX_LIMIT);
    if n > limit {
        return Err(Error::SizeLimit { vertex_count: n, limit });
    }
    if n == 0 {
        return Ok(PathwidthResult { value: -1, witness: PathDecomposition::default() });
    }
    let nbr: Vec<u32> =
        g.vertices().map(|v| g.neighbors(v).iter().fold(0u32, |m, &w| m | (1 << w))).collect();
    let full: u32 = if n == 32 { u32::MAX } else { (1u32 << n) - 1 };
    let boundary = |s: u32| -> u8 {
        let outside = !s & full;
        let mut rest = s;
        let mut count = 0u8;
        while rest != 0 {
            let u = rest.trailing_zeros() as usize;
            rest &= rest - 1;
            if nbr[u] & outside != 0 {
                count += 1;
            }
        }
        count
    };

    let size = 1usize << n;
    let mut best = vec![u8::MAX; size];
    let mut last = vec![0u8; size];
    best[0] = 0;
    for s in 1..size as u32 {
        let cost = boundary(s);
        let mut rest = s;
        let mut b = u8::MAX;
        let mut arg = 0u8;
        while rest != 0 {
            let v = rest.trailing_zeros();
            rest &= rest - 1;
            let c = best[(s & !(1 << v)) as usize].max(cost);
            if c < b {
                b = c;
                arg = v as u8;
            }
        }
        best[s as usize] = b;
        last[s as usize] = arg;
    }

    let mut order = Vec::with_capacity(n);
    let mut s = full;
    while s != 0 {
        let v = last[s as usize];
        order.push(v as usize);
        s &= !(1 << v);
    }
    order.reverse();
    let witness = decomposition_from_order(g, &order);
    let value = best[full as usize] as i64;
    debug_assert_eq!(witness.width(), value);
    Ok(PathwidthResult { value, witness })
}

/// Bag `i` holds the `i`-th vertex plus every earlier vertex that still has a
/// neighbour at position `>= i`.
pub fn decomposition_from_order(g: &Graph, order: &[usize]) -> PathDecomposition {
    let mut pos = vec![usize::MAX; g.vertex_count()];
    for (i, &v) in order.iter().enumerate() {
        pos[v] = i;
    }
    // last position at which each vertex is still needed
    let reach: Vec<usize> = g
        .vertices()
        .map(|v| g.neighbors(v).iter().map(|&w| pos[w]).fold(pos[v], usize::max))
        .collect();
    let mut bags = Vec::with_capacity(order.len());
    let mut open: Vec<usize> = Vec::new();
    for (i, &v) in order.iter().enumerate() {
        open.retain(|&u| reach[u] >= i);
        let mut bag: VertexSet = open.iter().copied().collect();
        bag.insert(v);
        bags.push(bag);
        open.push(v);
    }
    PathDecomposition::new(bags)
}

/// Exact pathwidth of a tree (size-limited).
pub fn tree_pathwidth_exact(t: &Graph) -> Result<PathwidthResult> {
    if !t.is_tree() {
        return Err(Error::NotATree);
    }
    exact_pathwidth(t)
}

/// A path of `g` meeting every non-empty bag of `pd`.
///
/// The start is the vertex of the first non-empty bag that leaves the
/// decomposition earliest, the end is the vertex of the last non-empty bag
/// that enters latest (ties to the smaller id); they are joined by a BFS
/// shortest path. Consecutive path vertices share a bag, so the bag intervals
/// of the path vertices chain from one end of the decomposition to the other
/// and removing the path lowers the width.
pub fn extract_path(g: &Graph, pd: &PathDecomposition) -> Result<Vec<usize>> {
    if !g.is_connected() {
        return Err(if g.vertex_count() == 0 { Error::EmptyGraph } else { Error::Disconnected });
    }
    let report = validate_path_decomposition(g, pd);
    if !report.is_valid() {
        return Err(Error::InvalidDecomposition(report.summary()));
    }
    let mut span = vec![(usize::MAX, 0usize); g.vertex_count()];
    for (i, bag) in pd.bags.iter().enumerate() {
        for v in bag {
            span[v].0 = span[v].0.min(i);
            span[v].1 = i;
        }
    }
    let first_bag = pd.bags.iter().find(|b| !b.is_empty()).ok_or(Error::EmptyGraph)?;
    let last_bag = pd.bags.iter().rev().find(|b| !b.is_empty()).ok_or(Error::EmptyGraph)?;
    let first = first_bag.iter().min_by_key(|&v| (span[v].1, v)).ok_or(Error::EmptyGraph)?;
    let last = last_bag.iter().min_by_key(|&v| (std::cmp::Reverse(span[v].0), v)).ok_or(Error::EmptyGraph)?;
    let path = g.shortest_path(first, last)?.ok_or(Error::Disconnected)?;
    debug_assert!({
        let on_path: VertexSet = path.iter().copied().collect();
        pd.bags.iter().all(|b| b.is_empty() || !b.is_disjoint(&on_path))
    });
    Ok(path)
}

/// Builds a path-decomposition of the tree `t` from a spine `(v_1..v_m)` and,
/// for each `v_i`, a path-decomposition `subs[i]` (in `t`'s ids) of the union
/// `X_i` of the components of `t - spine` attached to `v_i`.
///
/// The output is `C^1.., {v_1,v_2}, C^2.., ..., {v_{m-1},v_m}, C^m..` where
/// `C^i_j` is the `j`-th bag of `subs[i]` plus `v_i`. Its width is the larger
/// of 1 (when `m >= 2`) and one more than the widest sub-decomposition.
pub fn assemble_tree_pd(t: &Graph, spine: &[usize], subs: &[PathDecomposition]) -> Result<PathDecomposition> {
    if !t.is_tree() {
        return Err(Error::NotATree);
    }
    if spine.is_empty() {
        return Err(Error::InvalidSpine("spine is empty".into()));
    }
    for &v in spine {
        t.check_vertex(v)?;
    }
    let on_spine: VertexSet = spine.iter().copied().collect();
    if on_spine.len() != spine.len() {
        return Err(Error::InvalidSpine("spine repeats a vertex".into()));
    }
    if let Some(w) = spine.windows(2).find(|w| !t.has_edge(w[0], w[1])) {
        return Err(Error::InvalidSpine(format!("{} and {} are not adjacent", w[0], w[1])));
    }
    if subs.len() != spine.len() {
        return Err(Error::InvalidSpine(format!(
            "{} sub-decompositions for a spine of {} vertices",
            subs.len(),
            spine.len()
        )));
    }

    let (rest, map) = t.remove_vertices(&on_spine)?;
    let mut hanging = vec![VertexSet::new(); spine.len()];
    for comp in rest.connected_components() {
        let comp = map.set_to_parent(&comp);
        let attached: VertexSet = comp
            .iter()
            .flat_map(|v| t.neighbors(v).iter().copied())
            .filter(|&w| on_spine.contains(w))
            .collect();
        if attached.len() != 1 {
            return Err(Error::InvalidSpine(format!(
                "component containing {} is adjacent to {} spine vertices",
                comp.first().unwrap_or_default(),
                attached.len()
            )));
        }
        let i = spine.iter().position(|&v| Some(v) == attached.first()).unwrap_or_default();
        hanging[i] = hanging[i].union(&comp);
    }

    for (i, (sub, x)) in subs.iter().zip(&hanging).enumerate() {
        if let Some(v) = sub.bags.iter().flat_map(|b| b.iter()).find(|&v| !x.contains(v)) {
            return Err(Error::InvalidDecomposition(format!(
                "sub-decomposition {i} mentions {v}, which does not hang off spine vertex {}",
                spine[i]
            )));
        }
        let (h, hmap) = t.induced_subgraph(x)?;
        let report = validate_path_decomposition(&h, &sub.relabel(&hmap));
        if !report.is_valid() {
            return Err(Error::InvalidDecomposition(format!("sub-decomposition {i}: {}", report.summary())));
        }
    }
    Ok(concat_spine(spine, subs))
}

/// The concatenation behind [`assemble_tree_pd`], without input checks.
pub(crate) fn concat_spine(spine: &[usize], subs: &[PathDecomposition]) -> PathDecomposition {
    let mut bags = Vec::new();
    for (i, &v) in spine.iter().enumerate() {
        for b in &subs[i].bags {
            let mut c = b.clone();
            c.insert(v);
            bags.push(c);
        }
        if let Some(&next) = spine.get(i + 1) {
            bags.push(VertexSet::from([v, next]));
        }
    }
    if bags.is_empty() {
        if let Some(&v) = spine.first() {
            bags.push(VertexSet::singleton(v));
        }
    }
    PathDecomposition::new(bags)
}
