//! The recursive tree-partition construction.
//!
//! For `k >= 1` a call works on a normalised path-decomposition
//! `(D_0, ..., D_{p-1})` of width at most `k`:
//!
//! 1. `X`: an inclusion-minimal node set containing both ends whose bags
//!    cover the seed set `S`. The union of its bags becomes the root bag.
//! 2. `Y`: an inclusion-maximal node set outside `X` whose bags are pairwise
//!    disjoint and disjoint from every `X` bag.
//! 3. `Z` is the union of the `X ∪ Y` bags. Every other bag meets `Z`, so
//!    `G - Z` inherits a decomposition of width at most `k - 1`.
//! 4. Contracting the gaps between consecutive `X ∪ Y` nodes gives `P'`.
//!    Each edge `e` of `P'` owns the piece `G_e` of `G - Z` living strictly
//!    inside it, with boundary `S_e` (vertices adjacent to the end bags).
//! 5. `P'` splits at `X` nodes into key subpaths. Within a key subpath, nodes
//!    are layered by distance to the ends and each edge is mapped to one
//!    level past its nearer endpoint, so at most two edges share a level.
//! 6. Each level becomes a tree node `l_i` on a path hanging off the root.
//!    The pieces mapped to a level are partitioned recursively with `k - 1`
//!    and their boundary as seed, and the recursive root is merged into
//!    `l_i` together with the `Y` bags of that level.
//!
//! The path-decomposition of the tree is built alongside: each key subpath
//! is a spine carrying the recursive certificates, and the root is added to
//! every bag.

use super::trace::{ConstructionTrace, EdgePiece, KeySubpath, SplitStep, Step, StepDetail, StepLink};
use super::validate::TreePartition;
use crate::decomp::{normalize_ends_unchecked, validate_path_decomposition, PathDecomposition};
use crate::error::{Error, Result};
use crate::graph::{Graph, VertexSet};
use crate::pathwidth::concat_spine;

/// Builds a tree-partition of `g` from a path-decomposition `pd` of width
/// `k`, seed set `s` and degree bound `d >= Δ(g)`.
///
/// The result has width at most `f(k, d, |s|)`, puts `s` inside the bag of
/// `trace.root`, and carries a path-decomposition of its tree of width at
/// most `2k + 1`.
pub fn build_tree_partition(
    g: &Graph,
    pd: &PathDecomposition,
    s: &VertexSet,
    d: usize,
) -> Result<(TreePartition, ConstructionTrace)> {
    let report = validate_path_decomposition(g, pd);
    if !report.is_valid() {
        return Err(Error::InvalidDecomposition(report.summary()));
    }
    let max_degree = g.max_degree();
    if max_degree > d {
        return Err(Error::DegreeExceeded { max_degree, bound: d });
    }
    g.check_set(s)?;
    let k = pd.width().max(0) as usize;

    let mut steps = Vec::new();
    let built = build_step(g, pd, s, k, (0..g.vertex_count()).collect(), None, 0, &mut steps)?;
    let tree = Graph::from_edges(built.bags.len(), built.edges)?;
    let partition = TreePartition { tree, bags: built.bags, witness: Some(PathDecomposition::new(built.witness)) };
    let trace = ConstructionTrace { k, d, seed: s.as_slice().to_vec(), root: built.root, steps };
    Ok((partition, trace))
}

/// Output of one call, in that call's local vertex ids.
struct Built {
    edges: Vec<(usize, usize)>,
    bags: Vec<VertexSet>,
    root: usize,
    witness: Vec<VertexSet>,
}

#[allow(clippy::too_many_arguments)]
fn build_step(
    g: &Graph,
    pd: &PathDecomposition,
    s: &VertexSet,
    k: usize,
    vertices: Vec<usize>,
    parent: Option<StepLink>,
    depth: usize,
    steps: &mut Vec<Step>,
) -> Result<Built> {
    let id = steps.len();
    // reserve the slot so children get larger ids
    steps.push(Step {
        id,
        depth,
        parent,
        k,
        vertices,
        seed: s.as_slice().to_vec(),
        width: 0,
        detail: StepDetail::Base { order: Vec::new() },
    });

    if k == 0 {
        debug_assert_eq!(g.edge_count(), 0);
        let built = base_case(g, s);
        steps[id].width = built.bags.iter().map(VertexSet::len).max().unwrap_or(0);
        steps[id].detail = StepDetail::Base { order: s.complement(g.vertex_count()).into_vec() };
        return Ok(built);
    }

    let n = g.vertex_count();
    let bags = normalize_ends_unchecked(&pd.compact()).bags;
    let p = bags.len();
    let norm = PathDecomposition::new(bags);
    let x = select_minimal_x(&norm, s)?;
    let y = select_maximal_y(&norm, &x);
    let bags = norm.bags;

    let mut in_z = vec![false; n];
    for &i in x.iter().chain(&y) {
        for v in &bags[i] {
            in_z[v] = true;
        }
    }
    let z: Vec<usize> = (0..n).filter(|&v| in_z[v]).collect();
    let root_bag: VertexSet = x.iter().flat_map(|&i| bags[i].iter()).collect();

    let mut contracted: Vec<usize> = x.iter().chain(&y).copied().collect();
    contracted.sort_unstable();
    let mut selected = vec![false; p];
    for &i in &contracted {
        selected[i] = true;
    }
    let restricted_width = (0..p)
        .filter(|&a| !selected[a])
        .map(|a| bags[a].iter().filter(|&v| !in_z[v]).count() as i64)
        .max()
        .unwrap_or(0)
        - 1;

    // pieces G_e and their boundaries
    let mut piece_of = vec![usize::MAX; n];
    let mut pieces: Vec<EdgePiece> = Vec::with_capacity(contracted.len().saturating_sub(1));
    for (e, w) in contracted.windows(2).enumerate() {
        let subgraph: VertexSet =
            (w[0] + 1..w[1]).flat_map(|a| bags[a].iter()).filter(|&v| !in_z[v]).collect();
        for v in &subgraph {
            piece_of[v] = e;
        }
        pieces.push(EdgePiece { from: w[0], to: w[1], subgraph: subgraph.into_vec(), boundary: Vec::new() });
    }
    for (e, piece) in pieces.iter_mut().enumerate() {
        let ends = bags[piece.from].union(&bags[piece.to]);
        let boundary: VertexSet = ends
            .iter()
            .flat_map(|v| g.neighbors(v).iter().copied())
            .filter(|&w| piece_of[w] == e)
            .collect();
        piece.boundary = boundary.into_vec();
    }

    let mut tree_edges: Vec<(usize, usize)> = Vec::new();
    let mut tree_bags: Vec<VertexSet> = vec![root_bag.clone()];
    let mut component_witnesses: Vec<VertexSet> = Vec::new();
    let mut key_records = Vec::new();
    let mut first_edge = 0;

    for (qi, q) in key_subpaths(&contracted, &x).into_iter().enumerate() {
        let q_first = first_edge;
        let levels = map_edges_to_levels(&q);
        let level_count = levels.levels.len();
        let level_nodes: Vec<usize> = std::iter::once(0)
            .chain((1..level_count).map(|i| tree_bags.len() + i - 1))
            .collect();
        tree_bags.resize(tree_bags.len() + level_count - 1, VertexSet::new());
        for w in level_nodes.windows(2) {
            tree_edges.push((w[0], w[1]));
        }

        let mut level_edges = vec![Vec::new(); level_count];
        let mut level_seeds = vec![Vec::new(); level_count];
        let mut children = vec![None; level_count];
        let mut spine_subs = vec![PathDecomposition::default(); level_count - 1];
        for i in 1..level_count {
            let edge_ids: Vec<usize> = levels.level_edges[i].iter().map(|&j| q_first + j).collect();
            let mut bag: VertexSet = levels.levels[i].iter().flat_map(|&yn| bags[yn].iter()).collect();
            let keep: VertexSet = edge_ids.iter().flat_map(|&e| pieces[e].subgraph.iter().copied()).collect();
            let seed: VertexSet = edge_ids.iter().flat_map(|&e| pieces[e].boundary.iter().copied()).collect();
            level_seeds[i] = seed.as_slice().to_vec();
            level_edges[i] = edge_ids.clone();

            if !keep.is_empty() {
                let (h, map) = g.induced_subgraph(&keep)?;
                let mut sub_bags = Vec::new();
                for &e in &edge_ids {
                    for a in pieces[e].from + 1..pieces[e].to {
                        let b = map.set_to_child(&bags[a]);
                        if !b.is_empty() {
                            sub_bags.push(b);
                        }
                    }
                }
                let sub_vertices: Vec<usize> = map.parent_ids().iter().map(|&v| steps[id].vertices[v]).collect();
                let link = StepLink { step: id, key_subpath: qi, level: i };
                children[i] = Some(steps.len());
                let sub = build_step(
                    &h,
                    &PathDecomposition::new(sub_bags),
                    &map.set_to_child(&seed),
                    k - 1,
                    sub_vertices,
                    Some(link),
                    depth + 1,
                    steps,
                )?;

                // identify the child's root with l_i, renumber the rest
                let anchor = level_nodes[i];
                let mut node_map = vec![usize::MAX; sub.bags.len()];
                for (c, slot) in node_map.iter_mut().enumerate() {
                    if c == sub.root {
                        *slot = anchor;
                    } else {
                        *slot = tree_bags.len();
                        tree_bags.push(VertexSet::new());
                    }
                }
                for (c, b) in sub.bags.iter().enumerate() {
                    let b = map.set_to_parent(b);
                    if c == sub.root {
                        bag = bag.union(&b);
                    } else {
                        tree_bags[node_map[c]] = b;
                    }
                }
                tree_edges.extend(sub.edges.iter().map(|&(a, b)| (node_map[a], node_map[b])));
                spine_subs[i - 1] = PathDecomposition::new(
                    sub.witness
                        .iter()
                        .map(|wb| wb.iter().filter(|&c| c != sub.root).map(|c| node_map[c]).collect::<VertexSet>())
                        .filter(|wb| !wb.is_empty())
                        .collect(),
                );
            }
            tree_bags[level_nodes[i]] = bag;
        }

        let spine = &level_nodes[1..];
        component_witnesses.extend(concat_spine(spine, &spine_subs).bags);
        let level_bag_sizes = level_nodes.iter().map(|&t| tree_bags[t].len()).collect();
        first_edge += q.len() - 1;
        key_records.push(KeySubpath {
            nodes: q,
            first_edge: q_first,
            levels: levels.levels,
            level_edges,
            level_seeds,
            level_nodes,
            level_bag_sizes,
            children,
        });
    }

    let witness = if component_witnesses.is_empty() {
        vec![VertexSet::singleton(0)]
    } else {
        PathDecomposition::new(component_witnesses).with_vertex_everywhere(0).bags
    };
    steps[id].width = tree_bags.iter().map(VertexSet::len).max().unwrap_or(0);
    steps[id].detail = StepDetail::Split(SplitStep {
        bag_count: p,
        x,
        y,
        z,
        root_bag: root_bag.into_vec(),
        restricted_width,
        contracted,
        edges: pieces,
        key_subpaths: key_records,
    });
    Ok(Built { edges: tree_edges, bags: tree_bags, root: 0, witness })
}

/// `(S, {v_1}, ..., {v_m})` along a path, for edgeless graphs.
fn base_case(g: &Graph, s: &VertexSet) -> Built {
    let rest = s.complement(g.vertex_count());
    let mut bags = vec![s.clone()];
    bags.extend(rest.iter().map(VertexSet::singleton));
    let edges: Vec<(usize, usize)> = (1..bags.len()).map(|i| (i - 1, i)).collect();
    let witness = if edges.is_empty() {
        vec![VertexSet::singleton(0)]
    } else {
        edges.iter().map(|&(a, b)| VertexSet::from([a, b])).collect()
    };
    Built { edges, bags, root: 0, witness }
}

fn check_normalized(pd: &PathDecomposition) -> Result<()> {
    let ok = pd.len() >= 2
        && pd.bags.first().is_some_and(VertexSet::is_empty)
        && pd.bags.last().is_some_and(VertexSet::is_empty);
    if ok {
        Ok(())
    } else {
        Err(Error::InvalidDecomposition("first and last bags must be empty".into()))
    }
}

/// Inclusion-minimal set of node indices containing the first and last node
/// whose bags cover `s`.
///
/// Takes the leftmost bag of each seed vertex, then drops, left to right,
/// every interior index whose removal keeps `s` covered. An index kept by the
/// sweep stays necessary because the selection only shrinks afterwards.
pub fn select_minimal_x(pd: &PathDecomposition, s: &VertexSet) -> Result<Vec<usize>> {
    check_normalized(pd)?;
    let p = pd.len();
    let mut chosen = vec![false; p];
    chosen[0] = true;
    chosen[p - 1] = true;
    for v in s {
        let i = pd.bags.iter().position(|b| b.contains(v)).ok_or(Error::UncoveredSeed(v))?;
        chosen[i] = true;
    }
    let seed_pos = |v: usize| s.as_slice().binary_search(&v).ok();
    let mut cover = vec![0usize; s.len()];
    for (_, b) in pd.bags.iter().enumerate().filter(|(i, _)| chosen[*i]) {
        for j in b.iter().filter_map(seed_pos) {
            cover[j] += 1;
        }
    }
    for i in 1..p - 1 {
        if !chosen[i] {
            continue;
        }
        let needed = pd.bags[i].iter().filter_map(seed_pos).any(|j| cover[j] == 1);
        if !needed {
            chosen[i] = false;
            for j in pd.bags[i].iter().filter_map(seed_pos) {
                cover[j] -= 1;
            }
        }
    }
    Ok((0..p).filter(|&i| chosen[i]).collect())
}

/// Inclusion-maximal set of node indices outside `x` whose bags are pairwise
/// disjoint and disjoint from every bag indexed by `x`, by one left-to-right
/// greedy sweep.
pub fn select_maximal_y(pd: &PathDecomposition, x: &[usize]) -> Vec<usize> {
    let mut blocked: std::collections::HashSet<usize> = x.iter().flat_map(|&i| pd.bags[i].iter()).collect();
    let mut y = Vec::new();
    for (i, bag) in pd.bags.iter().enumerate() {
        if x.binary_search(&i).is_ok() || bag.iter().any(|v| blocked.contains(&v)) {
            continue;
        }
        blocked.extend(bag.iter());
        y.push(i);
    }
    y
}

/// Splits the contracted path at its `x` nodes. Consecutive subpaths share
/// their `x` endpoint, so the subpaths partition the edges of the path.
pub fn key_subpaths(contracted: &[usize], x: &[usize]) -> Vec<Vec<usize>> {
    let mut out = Vec::new();
    let mut current: Vec<usize> = Vec::new();
    for &node in contracted {
        current.push(node);
        if x.binary_search(&node).is_ok() && current.len() > 1 {
            out.push(std::mem::replace(&mut current, vec![node]));
        }
    }
    out
}

/// Layering of one key subpath `q = (q_0, ..., q_L)`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LevelAssignment {
    /// `levels[i]`: nodes of `q` at distance `i` from `{q_0, q_L}` along `q`,
    /// for `i = 0..=m+1`; the last level is always empty.
    pub levels: Vec<Vec<usize>>,
    /// `edge_level[j]`: level of edge `q_j q_{j+1}`.
    pub edge_level: Vec<usize>,
    /// `level_edges[i]`: positions `j` of the edges mapped to level `i`.
    pub level_edges: Vec<Vec<usize>>,
}

/// Places node `q_j` at level `min(j, L - j)` and maps each edge to one
/// level past the smaller level of its endpoints.
pub fn map_edges_to_levels(q: &[usize]) -> LevelAssignment {
    let len = q.len().saturating_sub(1);
    let depth = |j: usize| j.min(len - j);
    let top = len / 2;
    let mut levels = vec![Vec::new(); top + 2];
    for (j, &node) in q.iter().enumerate() {
        levels[depth(j)].push(node);
    }
    let edge_level: Vec<usize> = (0..len).map(|j| depth(j).min(depth(j + 1)) + 1).collect();
    let mut level_edges = vec![Vec::new(); top + 2];
    for (j, &l) in edge_level.iter().enumerate() {
        level_edges[l].push(j);
    }
    LevelAssignment { levels, edge_level, level_edges }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::tpart::f_bound;

    fn pd(list: &[&[usize]]) -> PathDecomposition {
        PathDecomposition::new(list.iter().map(|b| b.iter().copied().collect()).collect())
    }

    #[test]
    fn minimal_x_with_empty_seed_is_the_ends() {
        let d = pd(&[&[], &[0, 1], &[1, 2], &[]]);
        assert_eq!(select_minimal_x(&d, &VertexSet::new()).unwrap(), vec![0, 3]);
        assert_eq!(select_minimal_x(&d, &VertexSet::from([2])).unwrap(), vec![0, 2, 3]);
        assert_eq!(select_minimal_x(&d, &VertexSet::from([5])).unwrap_err(), Error::UncoveredSeed(5));
        assert!(select_minimal_x(&pd(&[&[0]]), &VertexSet::new()).is_err());
    }

    #[test]
    fn minimal_x_prunes_redundant_bags() {
        // leftmost bags of 0, 1 and 2 are 1, 1 and 2; bag 3 alone covers {1,2}
        let d = pd(&[&[], &[0, 1], &[1, 2], &[0, 1, 2], &[]]);
        let x = select_minimal_x(&d, &VertexSet::from([0, 1, 2])).unwrap();
        assert_eq!(x, vec![0, 1, 2, 4]);
        let d = pd(&[&[], &[1], &[0, 1], &[]]);
        assert_eq!(select_minimal_x(&d, &VertexSet::from([0, 1])).unwrap(), vec![0, 2, 3]);
    }

    #[test]
    fn maximal_y_cases() {
        let disjoint = pd(&[&[], &[0], &[1], &[2], &[]]);
        assert_eq!(select_maximal_y(&disjoint, &[0, 4]), vec![1, 2, 3]);
        let clash = pd(&[&[], &[0, 1], &[1, 2], &[2, 3], &[]]);
        assert_eq!(select_maximal_y(&clash, &[0, 1, 3, 4]), Vec::<usize>::new());
        assert_eq!(select_maximal_y(&clash, &[0, 4]), vec![1, 3]);
    }

    #[test]
    fn key_subpath_extremes() {
        assert_eq!(key_subpaths(&[0, 2, 5, 7], &[0, 7]), vec![vec![0, 2, 5, 7]]);
        assert_eq!(key_subpaths(&[0, 2, 5], &[0, 2, 5]), vec![vec![0, 2], vec![2, 5]]);
        assert_eq!(key_subpaths(&[0, 1, 2, 3, 4], &[0, 2, 4]), vec![vec![0, 1, 2], vec![2, 3, 4]]);
    }

    #[test]
    fn levels_of_short_subpaths() {
        let one = map_edges_to_levels(&[10, 20]);
        assert_eq!(one.levels, vec![vec![10, 20], vec![]]);
        assert_eq!(one.edge_level, vec![1]);

        let four = map_edges_to_levels(&[0, 1, 2, 3]);
        assert_eq!(four.levels, vec![vec![0, 3], vec![1, 2], vec![]]);
        assert_eq!(four.edge_level, vec![1, 2, 1]);
        assert_eq!(four.level_edges, vec![vec![], vec![0, 2], vec![1]]);

        let three = map_edges_to_levels(&[0, 1, 2]);
        assert_eq!(three.levels, vec![vec![0, 2], vec![1], vec![]]);
        assert_eq!(three.level_edges, vec![vec![], vec![0, 1], vec![]]);
    }

    #[test]
    fn edgeless_base_case() {
        let g = Graph::new(4);
        let d = pd(&[&[0], &[1], &[2], &[3]]);
        let (tp, trace) = build_tree_partition(&g, &d, &VertexSet::new(), 1).unwrap();
        assert_eq!(tp.bags.len(), 5);
        assert!(tp.bags[0].is_empty());
        assert_eq!(tp.width(), 1);
        assert_eq!(tp.width() as u64, f_bound(0, 1, 0));
        assert_eq!(trace.root, 0);
        assert_eq!(tp.witness_width(), Some(1));
    }

    #[test]
    fn rejects_degree_and_bad_pd() {
        let g = Graph::from_edges(3, [(0, 1), (0, 2)]).unwrap();
        let d = pd(&[&[0, 1], &[0, 2]]);
        assert_eq!(
            build_tree_partition(&g, &d, &VertexSet::new(), 1).unwrap_err(),
            Error::DegreeExceeded { max_degree: 2, bound: 1 }
        );
        assert!(matches!(
            build_tree_partition(&g, &pd(&[&[0, 1]]), &VertexSet::new(), 2),
            Err(Error::InvalidDecomposition(_))
        ));
    }
}
