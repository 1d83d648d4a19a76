//! Path- and tree-decompositions and their validators.
//!
//! Validators never fail: every violation is returned as data in a report
//! so that callers (and mutation tests) can inspect which property broke.

use serde::Serialize;

use crate::error::{Error, Result};
use crate::graph::{Graph, IdMap, VertexSet};

/// Sequence of bags indexed by the nodes of a path.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct PathDecomposition {
    pub bags: Vec<VertexSet>,
}

impl PathDecomposition {
    pub fn new(bags: Vec<VertexSet>) -> Self {
        PathDecomposition { bags }
    }

    pub fn len(&self) -> usize {
        self.bags.len()
    }

    pub fn is_empty(&self) -> bool {
        self.bags.is_empty()
    }

    /// Largest bag size minus one; `-1` when every bag is empty.
    pub fn width(&self) -> i64 {
        self.bags.iter().map(|b| b.len() as i64).max().unwrap_or(0) - 1
    }

    /// Drops empty bags. The result is valid whenever the input is.
    pub fn compact(&self) -> PathDecomposition {
        PathDecomposition { bags: self.bags.iter().filter(|b| !b.is_empty()).cloned().collect() }
    }

    /// Renames vertices into the child labeling of `map`; vertices absent
    /// from the child are dropped.
    pub fn relabel(&self, map: &IdMap) -> PathDecomposition {
        PathDecomposition { bags: self.bags.iter().map(|b| map.set_to_child(b)).collect() }
    }

    /// Renames child vertices back to parent ids.
    pub fn relabel_to_parent(&self, map: &IdMap) -> PathDecomposition {
        PathDecomposition { bags: self.bags.iter().map(|b| map.set_to_parent(b)).collect() }
    }

    /// Adds `v` to every bag.
    pub fn with_vertex_everywhere(&self, v: usize) -> PathDecomposition {
        PathDecomposition {
            bags: self
                .bags
                .iter()
                .map(|b| {
                    let mut b = b.clone();
                    b.insert(v);
                    b
                })
                .collect(),
        }
    }
}

/// Bags indexed by the nodes of a tree.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TreeDecomposition {
    pub tree: Graph,
    pub bags: Vec<VertexSet>,
}

impl TreeDecomposition {
    pub fn width(&self) -> i64 {
        self.bags.iter().map(|b| b.len() as i64).max().unwrap_or(0) - 1
    }
}

/// Violations found by [`validate_path_decomposition`].
#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize)]
pub struct PathDecompositionReport {
    /// Ids that are not vertices of the host graph.
    pub invalid_ids: Vec<usize>,
    /// Edges not contained in any bag.
    pub uncovered_edges: Vec<(usize, usize)>,
    /// Vertices that appear in no bag.
    pub missing_vertices: Vec<usize>,
    /// Vertices whose bag indices do not form an interval.
    pub non_contiguous: Vec<usize>,
}

impl PathDecompositionReport {
    pub fn is_valid(&self) -> bool {
        self.invalid_ids.is_empty()
            && self.uncovered_edges.is_empty()
            && self.missing_vertices.is_empty()
            && self.non_contiguous.is_empty()
    }

    pub fn summary(&self) -> String {
        summarize(&[
            ("invalid ids", self.invalid_ids.len()),
            ("uncovered edges", self.uncovered_edges.len()),
            ("missing vertices", self.missing_vertices.len()),
            ("non-contiguous vertices", self.non_contiguous.len()),
        ])
    }
}

/// Violations found by [`validate_tree_decomposition`].
#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize)]
pub struct TreeDecompositionReport {
    /// The indexing graph is not a tree.
    pub not_a_tree: bool,
    /// `(tree nodes, bags)` when the counts differ.
    pub bag_count_mismatch: Option<(usize, usize)>,
    pub invalid_ids: Vec<usize>,
    pub uncovered_edges: Vec<(usize, usize)>,
    pub missing_vertices: Vec<usize>,
    /// Vertices whose nodes do not induce a connected subtree.
    pub disconnected_vertices: Vec<usize>,
}

impl TreeDecompositionReport {
    pub fn is_valid(&self) -> bool {
        !self.not_a_tree
            && self.bag_count_mismatch.is_none()
            && self.invalid_ids.is_empty()
            && self.uncovered_edges.is_empty()
            && self.missing_vertices.is_empty()
            && self.disconnected_vertices.is_empty()
    }

    pub fn summary(&self) -> String {
        summarize(&[
            ("non-tree index", self.not_a_tree as usize),
            ("bag count mismatch", self.bag_count_mismatch.is_some() as usize),
            ("invalid ids", self.invalid_ids.len()),
            ("uncovered edges", self.uncovered_edges.len()),
            ("missing vertices", self.missing_vertices.len()),
            ("disconnected vertices", self.disconnected_vertices.len()),
        ])
    }
}

pub(crate) fn summarize(parts: &[(&str, usize)]) -> String {
    let bad: Vec<String> =
        parts.iter().filter(|(_, n)| *n > 0).map(|(what, n)| format!("{n} {what}")).collect();
    if bad.is_empty() {
        "valid".to_string()
    } else {
        bad.join(", ")
    }
}

/// Per-vertex list of bag indices, plus out-of-range ids.
fn occurrences(n: usize, bags: &[VertexSet]) -> (Vec<Vec<usize>>, Vec<usize>) {
    let mut occ = vec![Vec::new(); n];
    let mut invalid = Vec::new();
    for (i, bag) in bags.iter().enumerate() {
        for v in bag {
            if v < n {
                occ[v].push(i);
            } else {
                invalid.push(v);
            }
        }
    }
    invalid.sort_unstable();
    invalid.dedup();
    (occ, invalid)
}

fn uncovered_edges(g: &Graph, occ: &[Vec<usize>], bags: &[VertexSet]) -> Vec<(usize, usize)> {
    g.edges()
        .filter(|&(u, v)| {
            let (a, b) = if occ[u].len() <= occ[v].len() { (u, v) } else { (v, u) };
            !occ[a].iter().any(|&i| bags[i].contains(b))
        })
        .collect()
}

pub fn validate_path_decomposition(g: &Graph, pd: &PathDecomposition) -> PathDecompositionReport {
    let (occ, invalid_ids) = occurrences(g.vertex_count(), &pd.bags);
    let mut report = PathDecompositionReport { invalid_ids, ..Default::default() };
    for (v, list) in occ.iter().enumerate() {
        match (list.first(), list.last()) {
            (Some(&lo), Some(&hi)) => {
                if hi - lo + 1 != list.len() {
                    report.non_contiguous.push(v);
                }
            }
            _ => report.missing_vertices.push(v),
        }
    }
    report.uncovered_edges = uncovered_edges(g, &occ, &pd.bags);
    report
}

pub fn validate_tree_decomposition(g: &Graph, td: &TreeDecomposition) -> TreeDecompositionReport {
    let mut report = TreeDecompositionReport {
        not_a_tree: !td.tree.is_tree(),
        ..Default::default()
    };
    if td.tree.vertex_count() != td.bags.len() {
        report.bag_count_mismatch = Some((td.tree.vertex_count(), td.bags.len()));
    }
    let (occ, invalid_ids) = occurrences(g.vertex_count(), &td.bags);
    report.invalid_ids = invalid_ids;
    report.uncovered_edges = uncovered_edges(g, &occ, &td.bags);

    // A node set of a forest is connected iff it spans |set| - 1 edges.
    let n = g.vertex_count();
    let mut inner_edges = vec![0usize; n];
    for (a, b) in td.tree.edges() {
        if a < td.bags.len() && b < td.bags.len() {
            for v in td.bags[a].intersection(&td.bags[b]).iter().filter(|&v| v < n) {
                inner_edges[v] += 1;
            }
        }
    }
    for (v, list) in occ.iter().enumerate() {
        if list.is_empty() {
            report.missing_vertices.push(v);
        } else if inner_edges[v] + 1 != list.len() {
            report.disconnected_vertices.push(v);
        }
    }
    report
}

/// Ensures the first and last bags are empty (and that there are at least
/// two bags). Idempotent.
pub fn normalize_ends(g: &Graph, pd: &PathDecomposition) -> Result<PathDecomposition> {
    let report = validate_path_decomposition(g, pd);
    if !report.is_valid() {
        return Err(Error::InvalidDecomposition(report.summary()));
    }
    Ok(normalize_ends_unchecked(pd))
}

pub(crate) fn normalize_ends_unchecked(pd: &PathDecomposition) -> PathDecomposition {
    let mut bags = Vec::with_capacity(pd.bags.len() + 2);
    if pd.bags.first().is_none_or(|b| !b.is_empty()) {
        bags.push(VertexSet::new());
    }
    bags.extend(pd.bags.iter().cloned());
    if bags.len() < 2 || !bags.last().is_some_and(VertexSet::is_empty) {
        bags.push(VertexSet::new());
    }
    PathDecomposition { bags }
}

/// `(D_a \ z)` for every bag, keeping the host labeling.
///
/// Use [`PathDecomposition::relabel`] with the map from
/// [`Graph::remove_vertices`] to obtain a decomposition of `host - z` in its
/// own ids.
pub fn restrict(pd: &PathDecomposition, z: &VertexSet) -> PathDecomposition {
    PathDecomposition { bags: pd.bags.iter().map(|b| b.difference(z)).collect() }
}

/// Turns a tree-decomposition of `g` indexed by `T` into a path-decomposition
/// of `g`, using a path-decomposition `pd_t` of `T`: each bag of `pd_t` is
/// replaced by the union of the `td` bags of its nodes.
pub fn flatten(g: &Graph, td: &TreeDecomposition, pd_t: &PathDecomposition) -> Result<PathDecomposition> {
    let report = validate_tree_decomposition(g, td);
    if !report.is_valid() {
        return Err(Error::InvalidDecomposition(format!("tree-decomposition: {}", report.summary())));
    }
    let report = validate_path_decomposition(&td.tree, pd_t);
    if !report.is_valid() {
        return Err(Error::InvalidDecomposition(format!(
            "path-decomposition of the index tree: {}",
            report.summary()
        )));
    }
    Ok(PathDecomposition {
        bags: pd_t
            .bags
            .iter()
            .map(|nodes| nodes.iter().flat_map(|y| td.bags[y].iter()).collect())
            .collect(),
    })
}
