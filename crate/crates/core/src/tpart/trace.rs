//! Audit record of a [`build_tree_partition`](super::build_tree_partition) run.
//!
//! One [`Step`] per recursive call, in depth-first order. Vertex ids inside
//! a step are local to that call's graph; `Step::vertices` maps them to the
//! ids of the input graph. Tree node ids inside a step refer to the tree
//! built by that call (its root `alpha` is node 0).

use serde::{Deserialize, Serialize};

use super::fbound::{f_bound, level_bag_bound};
use crate::graph::Graph;

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ConstructionTrace {
    pub k: usize,
    pub d: usize,
    /// Seed set `S` of the top-level call.
    pub seed: Vec<usize>,
    /// Node of the output tree whose bag contains the seed set.
    pub root: usize,
    pub steps: Vec<Step>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct StepLink {
    pub step: usize,
    pub key_subpath: usize,
    pub level: usize,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Step {
    pub id: usize,
    pub depth: usize,
    pub parent: Option<StepLink>,
    /// Pathwidth parameter of this call.
    pub k: usize,
    /// Local vertex `i` is vertex `vertices[i]` of the input graph.
    pub vertices: Vec<usize>,
    /// Seed set, local ids.
    pub seed: Vec<usize>,
    /// Width of the tree built by this call.
    pub width: usize,
    pub detail: StepDetail,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "kebab-case")]
pub enum StepDetail {
    /// Edgeless base case: the path-partition `(S, {v_1}, ..., {v_m})`.
    Base { order: Vec<usize> },
    Split(SplitStep),
}

/// A `k >= 1` call. Node indices refer to positions in the normalised
/// path-decomposition `(D_0, ..., D_{bag_count-1})` of this call.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct SplitStep {
    pub bag_count: usize,
    /// Inclusion-minimal node set containing both ends and covering `S`.
    pub x: Vec<usize>,
    /// Inclusion-maximal node set with pairwise disjoint bags, disjoint from
    /// the `X` bags.
    pub y: Vec<usize>,
    /// Union of the bags of `X ∪ Y`.
    pub z: Vec<usize>,
    /// Union of the `X` bags; the bag of the root node `alpha`.
    pub root_bag: Vec<usize>,
    /// Width of `(D_a - Z)` over all nodes.
    pub restricted_width: i64,
    /// `X ∪ Y` in path order: the contracted path `P'`.
    pub contracted: Vec<usize>,
    /// One entry per edge of `P'`, in path order.
    pub edges: Vec<EdgePiece>,
    pub key_subpaths: Vec<KeySubpath>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct EdgePiece {
    pub from: usize,
    pub to: usize,
    /// Vertices of `G_e`: the union of `D_a - Z` over nodes strictly between
    /// `from` and `to`.
    pub subgraph: Vec<usize>,
    /// `S_e`: vertices of `G_e` adjacent to `D_from ∪ D_to`.
    pub boundary: Vec<usize>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct KeySubpath {
    /// Nodes of `P'` from one `X` node to the next.
    pub nodes: Vec<usize>,
    /// Index in `SplitStep::edges` of the first edge of this subpath.
    pub first_edge: usize,
    /// `levels[i]`: nodes at distance `i` from the ends (last entry empty).
    pub levels: Vec<Vec<usize>>,
    /// `level_edges[i]`: indices into `SplitStep::edges` mapped to level `i`.
    pub level_edges: Vec<Vec<usize>>,
    /// `S_{Q,i}`: union of the boundary sets of `level_edges[i]`.
    pub level_seeds: Vec<Vec<usize>>,
    /// Tree node of each level; `level_nodes[0]` is `alpha`.
    pub level_nodes: Vec<usize>,
    pub level_bag_sizes: Vec<usize>,
    /// Step id of the recursive call attached at each level.
    pub children: Vec<Option<usize>>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct AuditFinding {
    pub step: usize,
    pub message: String,
}

impl ConstructionTrace {
    /// Re-checks every bound of the construction from the recorded sets.
    /// `g` must be the graph the construction ran on. Returns the violations
    /// found; an empty list means the trace is consistent.
    pub fn audit(&self, g: &Graph) -> Vec<AuditFinding> {
        let mut findings = Vec::new();
        let mut owner_edge = vec![usize::MAX; g.vertex_count()];
        for step in &self.steps {
            let mut fail = |message: String| findings.push(AuditFinding { step: step.id, message });
            let k = step.k as u64;
            let d = self.d as u64;
            let s = step.seed.len() as u64;
            if step.width as u64 > f_bound(k, d, s) {
                fail(format!("width {} exceeds f({k},{d},{s}) = {}", step.width, f_bound(k, d, s)));
            }
            let split = match &step.detail {
                StepDetail::Base { .. } => continue,
                StepDetail::Split(split) => split,
            };
            if split.root_bag.len() as u64 > s * (k + 1) {
                fail(format!("root bag has {} vertices, more than |S|(k+1) = {}", split.root_bag.len(), s * (k + 1)));
            }
            if split.restricted_width > k as i64 - 1 {
                fail(format!("restricted width {} exceeds k-1", split.restricted_width));
            }
            let boundary_cap = 2 * (k + 1) * d;
            for (e, piece) in split.edges.iter().enumerate() {
                if piece.boundary.len() as u64 > boundary_cap {
                    fail(format!("|S_e| = {} exceeds 2(k+1)d for edge {e}", piece.boundary.len()));
                }
                for &v in &piece.subgraph {
                    owner_edge[step.vertices[v]] = e;
                }
            }
            // G_e are disjoint, have no edges between them, and S_e is exactly
            // the set of G_e vertices with a neighbour outside G_e.
            for (e, piece) in split.edges.iter().enumerate() {
                let mut outward = Vec::new();
                for &v in &piece.subgraph {
                    let top = step.vertices[v];
                    if owner_edge[top] != e {
                        fail(format!("vertex {top} lies in two pieces G_e"));
                    }
                    let mut leaves = false;
                    for &w in g.neighbors(top) {
                        let in_step = step.vertices.binary_search(&w).is_ok();
                        let other = owner_edge[w];
                        if in_step && other != usize::MAX && other != e {
                            fail(format!("edge {top}-{w} joins pieces {e} and {other}"));
                        }
                        if !in_step || other != e {
                            leaves = true;
                        }
                    }
                    if leaves {
                        outward.push(v);
                    }
                }
                if outward != piece.boundary {
                    fail(format!("boundary of piece {e} disagrees with its outward neighbourhood"));
                }
            }
            for piece in &split.edges {
                for &v in &piece.subgraph {
                    owner_edge[step.vertices[v]] = usize::MAX;
                }
            }
            let level_cap = level_bag_bound(k, d);
            for (qi, q) in split.key_subpaths.iter().enumerate() {
                for (i, level) in q.levels.iter().enumerate() {
                    if level.len() > 2 {
                        fail(format!("key subpath {qi}: level {i} has {} nodes", level.len()));
                    }
                }
                for (i, edges) in q.level_edges.iter().enumerate() {
                    if edges.len() > 2 {
                        fail(format!("key subpath {qi}: {} edges mapped to level {i}", edges.len()));
                    }
                }
                for (i, seeds) in q.level_seeds.iter().enumerate() {
                    if seeds.len() as u64 > 4 * (k + 1) * d {
                        fail(format!("key subpath {qi}: |S_Q,{i}| = {} exceeds 4(k+1)d", seeds.len()));
                    }
                }
                for (i, &size) in q.level_bag_sizes.iter().enumerate().skip(1) {
                    if size as u64 > level_cap {
                        fail(format!("key subpath {qi}: bag at level {i} has {size} > {level_cap} vertices"));
                    }
                }
            }
        }
        findings
    }
}
