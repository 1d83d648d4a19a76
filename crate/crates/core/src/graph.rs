//! Simple undirected graphs on dense vertex ids `0..n`.

use std::collections::VecDeque;
use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// A sorted, duplicate-free set of vertex ids.
#[derive(Clone, Default, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(transparent)]
pub struct VertexSet(Vec<usize>);

impl VertexSet {
    pub fn new() -> Self {
        VertexSet(Vec::new())
    }

    /// Builds a set from an already sorted, duplicate-free vector.
    pub(crate) fn from_sorted(v: Vec<usize>) -> Self {
        debug_assert!(v.windows(2).all(|w| w[0] < w[1]));
        VertexSet(v)
    }

    pub fn singleton(v: usize) -> Self {
        VertexSet(vec![v])
    }

    /// All ids in `0..n`.
    pub fn full(n: usize) -> Self {
        VertexSet((0..n).collect())
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn contains(&self, v: usize) -> bool {
        self.0.binary_search(&v).is_ok()
    }

    pub fn iter(&self) -> impl Iterator<Item = usize> + '_ {
        self.0.iter().copied()
    }

    pub fn as_slice(&self) -> &[usize] {
        &self.0
    }

    pub fn into_vec(self) -> Vec<usize> {
        self.0
    }

    pub fn first(&self) -> Option<usize> {
        self.0.first().copied()
    }

    pub fn max(&self) -> Option<usize> {
        self.0.last().copied()
    }

    pub fn insert(&mut self, v: usize) -> bool {
        match self.0.binary_search(&v) {
            Ok(_) => false,
            Err(pos) => {
                self.0.insert(pos, v);
                true
            }
        }
    }

    pub fn remove(&mut self, v: usize) -> bool {
        match self.0.binary_search(&v) {
            Ok(pos) => {
                self.0.remove(pos);
                true
            }
            Err(_) => false,
        }
    }

    pub fn union(&self, other: &VertexSet) -> VertexSet {
        let (a, b) = (&self.0, &other.0);
        let mut out = Vec::with_capacity(a.len() + b.len());
        let (mut i, mut j) = (0, 0);
        while i < a.len() && j < b.len() {
            match a[i].cmp(&b[j]) {
                std::cmp::Ordering::Less => {
                    out.push(a[i]);
                    i += 1;
                }
                std::cmp::Ordering::Greater => {
                    out.push(b[j]);
                    j += 1;
                }
                std::cmp::Ordering::Equal => {
                    out.push(a[i]);
                    i += 1;
                    j += 1;
                }
            }
        }
        out.extend_from_slice(&a[i..]);
        out.extend_from_slice(&b[j..]);
        VertexSet(out)
    }

    pub fn intersection(&self, other: &VertexSet) -> VertexSet {
        VertexSet(self.iter().filter(|&v| other.contains(v)).collect())
    }

    pub fn difference(&self, other: &VertexSet) -> VertexSet {
        VertexSet(self.iter().filter(|&v| !other.contains(v)).collect())
    }

    pub fn is_disjoint(&self, other: &VertexSet) -> bool {
        let (small, large) = if self.len() <= other.len() { (self, other) } else { (other, self) };
        small.iter().all(|v| !large.contains(v))
    }

    pub fn is_subset(&self, other: &VertexSet) -> bool {
        self.iter().all(|v| other.contains(v))
    }

    /// `0..n` minus this set.
    pub fn complement(&self, n: usize) -> VertexSet {
        VertexSet((0..n).filter(|&v| !self.contains(v)).collect())
    }
}

impl FromIterator<usize> for VertexSet {
    fn from_iter<I: IntoIterator<Item = usize>>(iter: I) -> Self {
        let mut v: Vec<usize> = iter.into_iter().collect();
        v.sort_unstable();
        v.dedup();
        VertexSet(v)
    }
}

impl From<Vec<usize>> for VertexSet {
    fn from(v: Vec<usize>) -> Self {
        v.into_iter().collect()
    }
}

impl<const N: usize> From<[usize; N]> for VertexSet {
    fn from(v: [usize; N]) -> Self {
        v.into_iter().collect()
    }
}

impl fmt::Debug for VertexSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_set().entries(self.0.iter()).finish()
    }
}

impl<'a> IntoIterator for &'a VertexSet {
    type Item = usize;
    type IntoIter = std::iter::Copied<std::slice::Iter<'a, usize>>;

    fn into_iter(self) -> Self::IntoIter {
        self.0.iter().copied()
    }
}

/// Relabeling between a subgraph with contiguous ids and its parent graph.
///
/// Child id `i` corresponds to parent id `to_parent[i]`; `to_parent` is
/// strictly increasing so the reverse lookup is a binary search.
#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct IdMap {
    to_parent: Vec<usize>,
}

impl IdMap {
    pub fn identity(n: usize) -> Self {
        IdMap { to_parent: (0..n).collect() }
    }

    pub fn len(&self) -> usize {
        self.to_parent.len()
    }

    pub fn is_empty(&self) -> bool {
        self.to_parent.is_empty()
    }

    pub fn to_parent(&self, child: usize) -> usize {
        self.to_parent[child]
    }

    pub fn to_child(&self, parent: usize) -> Option<usize> {
        self.to_parent.binary_search(&parent).ok()
    }

    pub fn parent_ids(&self) -> &[usize] {
        &self.to_parent
    }

    pub fn set_to_parent(&self, s: &VertexSet) -> VertexSet {
        VertexSet::from_sorted(s.iter().map(|v| self.to_parent[v]).collect())
    }

    /// Maps the members of `s` that exist in the child; others are dropped.
    pub fn set_to_child(&self, s: &VertexSet) -> VertexSet {
        VertexSet::from_sorted(s.iter().filter_map(|v| self.to_child(v)).collect())
    }
}

/// Undirected simple graph. Adjacency lists are sorted.
#[derive(Clone, PartialEq, Eq)]
pub struct Graph {
    adj: Vec<Vec<usize>>,
    edge_count: usize,
}

impl fmt::Debug for Graph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("Graph")
            .field("vertex_count", &self.vertex_count())
            .field("edges", &self.edges().collect::<Vec<_>>())
            .finish()
    }
}

impl Graph {
    /// Edgeless graph on `n` vertices.
    pub fn new(n: usize) -> Self {
        Graph { adj: vec![Vec::new(); n], edge_count: 0 }
    }

    /// Builds a graph, rejecting self-loops, repeated edges and ids `>= n`.
    pub fn from_edges<I>(n: usize, edges: I) -> Result<Self>
    where
        I: IntoIterator<Item = (usize, usize)>,
    {
        let mut adj = vec![Vec::new(); n];
        let mut edge_count = 0;
        for (u, v) in edges {
            for x in [u, v] {
                if x >= n {
                    return Err(Error::InvalidVertex { vertex: x, vertex_count: n });
                }
            }
            if u == v {
                return Err(Error::SelfLoop(u));
            }
            adj[u].push(v);
            adj[v].push(u);
            edge_count += 1;
        }
        for (u, list) in adj.iter_mut().enumerate() {
            list.sort_unstable();
            if let Some(w) = list.windows(2).find(|w| w[0] == w[1]) {
                return Err(Error::DuplicateEdge(u.min(w[0]), u.max(w[0])));
            }
        }
        Ok(Graph { adj, edge_count })
    }

    pub fn vertex_count(&self) -> usize {
        self.adj.len()
    }

    pub fn edge_count(&self) -> usize {
        self.edge_count
    }

    pub fn neighbors(&self, v: usize) -> &[usize] {
        &self.adj[v]
    }

    pub fn degree(&self, v: usize) -> usize {
        self.adj[v].len()
    }

    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        u < self.adj.len() && self.adj[u].binary_search(&v).is_ok()
    }

    /// Edges as `(u, v)` with `u < v`, in lexicographic order.
    pub fn edges(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        self.adj
            .iter()
            .enumerate()
            .flat_map(|(u, list)| list.iter().filter(move |&&v| u < v).map(move |&v| (u, v)))
    }

    pub fn vertices(&self) -> std::ops::Range<usize> {
        0..self.adj.len()
    }

    pub(crate) fn check_vertex(&self, v: usize) -> Result<()> {
        if v < self.vertex_count() {
            Ok(())
        } else {
            Err(Error::InvalidVertex { vertex: v, vertex_count: self.vertex_count() })
        }
    }

    pub(crate) fn check_set(&self, s: &VertexSet) -> Result<()> {
        match s.max() {
            Some(v) => self.check_vertex(v),
            None => Ok(()),
        }
    }

    /// 0 for edgeless or empty graphs.
    pub fn max_degree(&self) -> usize {
        self.adj.iter().map(Vec::len).max().unwrap_or(0)
    }

    /// Vertices outside `s` with a neighbour in `s`.
    pub fn neighbors_of_set(&self, s: &VertexSet) -> Result<VertexSet> {
        self.check_set(s)?;
        Ok(s.iter()
            .flat_map(|v| self.adj[v].iter().copied())
            .filter(|&w| !s.contains(w))
            .collect())
    }

    /// Components ordered by smallest member.
    pub fn connected_components(&self) -> Vec<VertexSet> {
        let n = self.vertex_count();
        let mut seen = vec![false; n];
        let mut out = Vec::new();
        let mut queue = VecDeque::new();
        for start in 0..n {
            if seen[start] {
                continue;
            }
            seen[start] = true;
            queue.push_back(start);
            let mut comp = Vec::new();
            while let Some(u) = queue.pop_front() {
                comp.push(u);
                for &w in &self.adj[u] {
                    if !seen[w] {
                        seen[w] = true;
                        queue.push_back(w);
                    }
                }
            }
            comp.sort_unstable();
            out.push(VertexSet::from_sorted(comp));
        }
        out
    }

    pub fn is_connected(&self) -> bool {
        self.vertex_count() > 0 && self.connected_components().len() == 1
    }

    /// BFS distances from `source`; `None` for unreachable vertices.
    pub fn bfs_distances(&self, source: usize) -> Result<Vec<Option<usize>>> {
        self.check_vertex(source)?;
        let mut dist = vec![None; self.vertex_count()];
        dist[source] = Some(0);
        let mut queue = VecDeque::from([source]);
        while let Some(u) = queue.pop_front() {
            let du = dist[u].unwrap_or(0);
            for &w in &self.adj[u] {
                if dist[w].is_none() {
                    dist[w] = Some(du + 1);
                    queue.push_back(w);
                }
            }
        }
        Ok(dist)
    }

    pub fn bfs_distance(&self, u: usize, v: usize) -> Result<Option<usize>> {
        self.check_vertex(v)?;
        Ok(self.bfs_distances(u)?[v])
    }

    /// Shortest `u`-`v` path; ties broken towards smaller ids.
    pub fn shortest_path(&self, u: usize, v: usize) -> Result<Option<Vec<usize>>> {
        self.check_vertex(u)?;
        self.check_vertex(v)?;
        let mut parent = vec![usize::MAX; self.vertex_count()];
        parent[u] = u;
        let mut queue = VecDeque::from([u]);
        while let Some(x) = queue.pop_front() {
            if x == v {
                break;
            }
            for &w in &self.adj[x] {
                if parent[w] == usize::MAX {
                    parent[w] = x;
                    queue.push_back(w);
                }
            }
        }
        if parent[v] == usize::MAX {
            return Ok(None);
        }
        let mut path = vec![v];
        let mut x = v;
        while x != u {
            x = parent[x];
            path.push(x);
        }
        path.reverse();
        Ok(Some(path))
    }

    /// Largest eccentricity. Errors on empty or disconnected graphs.
    pub fn diameter(&self) -> Result<usize> {
        if self.vertex_count() == 0 {
            return Err(Error::EmptyGraph);
        }
        let mut best = 0;
        for s in self.vertices() {
            for d in self.bfs_distances(s)? {
                best = best.max(d.ok_or(Error::Disconnected)?);
            }
        }
        Ok(best)
    }

    /// `G[keep]` relabeled to `0..|keep|` in increasing parent-id order.
    pub fn induced_subgraph(&self, keep: &VertexSet) -> Result<(Graph, IdMap)> {
        self.check_set(keep)?;
        let map = IdMap { to_parent: keep.as_slice().to_vec() };
        let adj = keep
            .iter()
            .map(|v| self.adj[v].iter().filter_map(|&w| map.to_child(w)).collect::<Vec<_>>())
            .collect::<Vec<_>>();
        let edge_count = adj.iter().map(Vec::len).sum::<usize>() / 2;
        Ok((Graph { adj, edge_count }, map))
    }

    /// `G - remove`.
    pub fn remove_vertices(&self, remove: &VertexSet) -> Result<(Graph, IdMap)> {
        self.check_set(remove)?;
        self.induced_subgraph(&remove.complement(self.vertex_count()))
    }

    /// Connected, at least one vertex, and `|E| = |V| - 1`.
    pub fn is_tree(&self) -> bool {
        self.vertex_count() >= 1 && self.edge_count + 1 == self.vertex_count() && self.is_connected()
    }

    /// True if the graph is a path and `order` lists its vertices end to end.
    pub fn is_path_order(&self, order: &[usize]) -> bool {
        order.len() == self.vertex_count()
            && self.edge_count + 1 == order.len()
            && order.windows(2).all(|w| self.has_edge(w[0], w[1]))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn path(n: usize) -> Graph {
        Graph::from_edges(n, (1..n).map(|i| (i - 1, i))).unwrap()
    }

    #[test]
    fn rejects_self_loops_and_duplicates() {
        assert_eq!(Graph::from_edges(2, [(1, 1)]), Err(Error::SelfLoop(1)));
        assert_eq!(Graph::from_edges(3, [(0, 1), (1, 0)]), Err(Error::DuplicateEdge(0, 1)));
        assert!(matches!(Graph::from_edges(2, [(0, 2)]), Err(Error::InvalidVertex { vertex: 2, .. })));
    }

    #[test]
    fn neighbors_of_set_basics() {
        let g = path(3);
        assert_eq!(g.neighbors_of_set(&VertexSet::singleton(1)).unwrap(), VertexSet::from([0, 2]));
        assert!(g.neighbors_of_set(&VertexSet::full(3)).unwrap().is_empty());
        assert!(g.neighbors_of_set(&VertexSet::singleton(7)).is_err());
    }

    #[test]
    fn components_are_ordered_by_smallest_member() {
        let g = Graph::from_edges(5, [(3, 4), (0, 2)]).unwrap();
        let comps = g.connected_components();
        assert_eq!(comps, vec![VertexSet::from([0, 2]), VertexSet::from([1]), VertexSet::from([3, 4])]);
        assert_eq!(Graph::new(3).connected_components().len(), 3);
    }

    #[test]
    fn diameter_edge_cases() {
        assert_eq!(Graph::new(1).diameter(), Ok(0));
        assert_eq!(Graph::new(0).diameter(), Err(Error::EmptyGraph));
        assert_eq!(Graph::new(2).diameter(), Err(Error::Disconnected));
        assert_eq!(path(6).diameter(), Ok(5));
        assert_eq!(path(4).bfs_distance(0, 3), Ok(Some(3)));
        assert_eq!(Graph::new(2).bfs_distance(0, 1), Ok(None));
    }

    #[test]
    fn induced_subgraph_relabels() {
        let g = path(5);
        let (h, map) = g.induced_subgraph(&VertexSet::from([1, 2, 4])).unwrap();
        assert_eq!(h.vertex_count(), 3);
        assert_eq!(h.edges().collect::<Vec<_>>(), vec![(0, 1)]);
        assert_eq!(map.to_parent(2), 4);
        assert_eq!(map.to_child(3), None);
        let (e, _) = g.induced_subgraph(&VertexSet::new()).unwrap();
        assert_eq!(e.vertex_count(), 0);
    }

    #[test]
    fn tree_recognition() {
        assert!(path(1).is_tree());
        assert!(path(7).is_tree());
        assert!(!Graph::new(0).is_tree());
        assert!(!Graph::from_edges(3, [(0, 1), (1, 2), (0, 2)]).unwrap().is_tree());
        assert!(!Graph::from_edges(4, [(0, 1), (2, 3)]).unwrap().is_tree());
    }

    #[test]
    fn shortest_path_prefers_small_ids() {
        let g = Graph::from_edges(4, [(0, 1), (0, 2), (1, 3), (2, 3)]).unwrap();
        assert_eq!(g.shortest_path(0, 3).unwrap(), Some(vec![0, 1, 3]));
    }

    #[test]
    fn vertex_set_ops() {
        let a = VertexSet::from([5, 1, 3, 3]);
        let b = VertexSet::from([3, 4]);
        assert_eq!(a.as_slice(), &[1, 3, 5]);
        assert_eq!(a.union(&b), VertexSet::from([1, 3, 4, 5]));
        assert_eq!(a.difference(&b), VertexSet::from([1, 5]));
        assert_eq!(a.intersection(&b), VertexSet::from([3]));
        assert!(!a.is_disjoint(&b));
        assert_eq!(b.complement(6), VertexSet::from([0, 1, 2, 5]));
    }
}
