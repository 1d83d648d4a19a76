use serde::Serialize;

use crate::decomp::{summarize, validate_path_decomposition, PathDecomposition, PathDecompositionReport};
use crate::error::{Error, Result};
use crate::graph::{Graph, VertexSet};

/// A partition of `V(G)` into bags indexed by the nodes of a tree, with an
/// optional path-decomposition of that tree as a pathwidth certificate.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TreePartition {
    pub tree: Graph,
    pub bags: Vec<VertexSet>,
    pub witness: Option<PathDecomposition>,
}

impl TreePartition {
    /// Largest bag size.
    pub fn width(&self) -> usize {
        self.bags.iter().map(VertexSet::len).max().unwrap_or(0)
    }

    /// Width of the tree certificate, if present.
    pub fn witness_width(&self) -> Option<i64> {
        self.witness.as_ref().map(PathDecomposition::width)
    }

    /// Node holding each vertex (first occurrence), `None` if absent.
    pub fn owners(&self, vertex_count: usize) -> Vec<Option<usize>> {
        let mut owner = vec![None; vertex_count];
        for (x, bag) in self.bags.iter().enumerate() {
            for v in bag.iter().filter(|&v| v < vertex_count) {
                owner[v].get_or_insert(x);
            }
        }
        owner
    }
}

#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize)]
pub struct TreePartitionReport {
    pub not_a_tree: bool,
    pub bag_count_mismatch: Option<(usize, usize)>,
    pub invalid_ids: Vec<usize>,
    pub missing_vertices: Vec<usize>,
    pub duplicated_vertices: Vec<usize>,
    /// Edges `vw` whose bags sit at distinct, non-adjacent tree nodes.
    pub bad_edges: Vec<(usize, usize)>,
    /// Validation of the tree certificate against the indexing tree.
    pub witness: Option<PathDecompositionReport>,
}

impl TreePartitionReport {
    pub fn is_valid(&self) -> bool {
        !self.not_a_tree
            && self.bag_count_mismatch.is_none()
            && self.invalid_ids.is_empty()
            && self.missing_vertices.is_empty()
            && self.duplicated_vertices.is_empty()
            && self.bad_edges.is_empty()
            && self.witness.as_ref().is_none_or(PathDecompositionReport::is_valid)
    }

    pub fn summary(&self) -> String {
        let witness_bad = self.witness.as_ref().is_some_and(|w| !w.is_valid());
        summarize(&[
            ("non-tree index", self.not_a_tree as usize),
            ("bag count mismatch", self.bag_count_mismatch.is_some() as usize),
            ("invalid ids", self.invalid_ids.len()),
            ("missing vertices", self.missing_vertices.len()),
            ("duplicated vertices", self.duplicated_vertices.len()),
            ("bad edges", self.bad_edges.len()),
            ("invalid witness", witness_bad as usize),
        ])
    }
}

pub fn validate_tree_partition(g: &Graph, tp: &TreePartition) -> TreePartitionReport {
    let n = g.vertex_count();
    let mut report = TreePartitionReport {
        not_a_tree: !tp.tree.is_tree(),
        ..Default::default()
    };
    if tp.tree.vertex_count() != tp.bags.len() {
        report.bag_count_mismatch = Some((tp.tree.vertex_count(), tp.bags.len()));
    }
    let mut count = vec![0usize; n];
    for bag in &tp.bags {
        for v in bag {
            if v < n {
                count[v] += 1;
            } else {
                report.invalid_ids.push(v);
            }
        }
    }
    report.invalid_ids.sort_unstable();
    report.invalid_ids.dedup();
    for (v, &c) in count.iter().enumerate() {
        match c {
            0 => report.missing_vertices.push(v),
            1 => {}
            _ => report.duplicated_vertices.push(v),
        }
    }
    let owner = tp.owners(n);
    for (v, w) in g.edges() {
        if let (Some(a), Some(b)) = (owner[v], owner[w]) {
            if a != b && !tp.tree.has_edge(a, b) {
                report.bad_edges.push((v, w));
            }
        }
    }
    report.witness = tp.witness.as_ref().map(|pd| validate_path_decomposition(&tp.tree, pd));
    report
}

/// Checks `|V(G)| <= width * (diameter + 1)` for a path-partition of a
/// connected graph. A valid path-partition always satisfies it, so `false`
/// means an inconsistency somewhere upstream.
pub fn check_path_partition_diameter(g: &Graph, pp: &TreePartition) -> Result<bool> {
    if !g.is_connected() {
        return Err(Error::Disconnected);
    }
    let report = validate_tree_partition(g, pp);
    if !report.is_valid() {
        return Err(Error::InvalidPartition(report.summary()));
    }
    if pp.tree.max_degree() > 2 {
        return Err(Error::InvalidPartition("indexing tree is not a path".into()));
    }
    let diameter = g.diameter()?;
    Ok(g.vertex_count() <= pp.width() * (diameter + 1))
}
