//! Text and JSON formats for graphs and certificates, plus DOT export.
//!
//! Graphs use a DIMACS-style text format with 1-based ids:
//!
//! ```text
//! c optional comments
//! p 3 2
//! e 1 2
//! e 2 3
//! ```
//!
//! Decompositions and partitions are JSON documents tagged by `kind`, with
//! 0-based vertex ids:
//!
//! ```json
//! {"kind":"path-decomposition","bags":[[0,1],[1,2]]}
//! {"kind":"tree-decomposition","tree":{"nodes":2,"edges":[[0,1]]},"bags":{"0":[0,1],"1":[1,2]}}
//! {"kind":"tree-partition","tree":{"nodes":2,"edges":[[0,1]]},"bags":{"0":[0],"1":[1,2]},"witness":null}
//! ```

use std::collections::{BTreeMap, HashSet};
use std::fmt::Write as _;

use serde::de::Error as _;
use serde::ser::SerializeMap;
use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::decomp::{PathDecomposition, TreeDecomposition};
use crate::error::{Error, Result};
use crate::graph::{Graph, VertexSet};
use crate::tpart::{ConstructionTrace, TreePartition};

fn parse_err(line: usize, message: impl Into<String>) -> Error {
    Error::Parse { line, message: message.into() }
}

/// Parses the text graph format. Both `p <n> <m>` and the DIMACS
/// `p edge <n> <m>` header are accepted.
pub fn parse_graph(text: &str) -> Result<Graph> {
    let mut header: Option<(usize, usize, usize)> = None;
    let mut edges = Vec::new();
    for (idx, raw) in text.lines().enumerate() {
        let line_no = idx + 1;
        let line = raw.trim();
        if line.is_empty() || line.starts_with('c') {
            continue;
        }
        let fields: Vec<&str> = line.split_whitespace().collect();
        match fields[0] {
            "p" => {
                if header.is_some() {
                    return Err(parse_err(line_no, "second problem line"));
                }
                let nums = match fields.len() {
                    3 => &fields[1..],
                    4 if fields[1] == "edge" => &fields[2..],
                    _ => return Err(parse_err(line_no, "expected `p <n> <m>`")),
                };
                let n = parse_num(nums[0], line_no)?;
                let m = parse_num(nums[1], line_no)?;
                header = Some((n, m, line_no));
            }
            "e" => {
                let (n, _, _) = header.ok_or_else(|| parse_err(line_no, "edge before problem line"))?;
                if fields.len() != 3 {
                    return Err(parse_err(line_no, "expected `e <u> <v>`"));
                }
                let u = parse_num(fields[1], line_no)?;
                let v = parse_num(fields[2], line_no)?;
                for x in [u, v] {
                    if x == 0 || x > n {
                        return Err(parse_err(line_no, format!("vertex {x} outside 1..={n}")));
                    }
                }
                edges.push((u - 1, v - 1, line_no));
            }
            other => return Err(parse_err(line_no, format!("unknown line type `{other}`"))),
        }
    }
    let (n, m, p_line) = header.ok_or_else(|| parse_err(1, "missing problem line"))?;
    if edges.len() != m {
        return Err(parse_err(p_line, format!("header announces {m} edges, found {}", edges.len())));
    }
    let mut seen = HashSet::new();
    for &(u, v, line_no) in &edges {
        if u == v {
            return Err(parse_err(line_no, format!("self-loop at {}", u + 1)));
        }
        if !seen.insert((u.min(v), u.max(v))) {
            return Err(parse_err(line_no, format!("duplicate edge {} {}", u + 1, v + 1)));
        }
    }
    Graph::from_edges(n, edges.into_iter().map(|(u, v, _)| (u, v)))
}

fn parse_num(s: &str, line: usize) -> Result<usize> {
    s.parse().map_err(|_| parse_err(line, format!("`{s}` is not a non-negative integer")))
}

pub fn write_graph(g: &Graph) -> String {
    let mut out = format!("p {} {}\n", g.vertex_count(), g.edge_count());
    for (u, v) in g.edges() {
        let _ = writeln!(out, "e {} {}", u + 1, v + 1);
    }
    out
}

#[derive(Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
struct TreeJson {
    nodes: usize,
    edges: Vec<[usize; 2]>,
}

impl TreeJson {
    fn from_graph(t: &Graph) -> Self {
        TreeJson { nodes: t.vertex_count(), edges: t.edges().map(|(a, b)| [a, b]).collect() }
    }

    fn into_graph(self, kind: &'static str) -> Result<Graph> {
        Graph::from_edges(self.nodes, self.edges.into_iter().map(|[a, b]| (a, b)))
            .map_err(|e| Error::Schema { kind, message: format!("tree: {e}") })
    }
}

/// Bags keyed by node id. Serialised in node order; on input the keys must
/// be exactly `"0"` to `"N-1"`.
struct NodeBags(Vec<Vec<usize>>);

impl Serialize for NodeBags {
    fn serialize<S: Serializer>(&self, ser: S) -> std::result::Result<S::Ok, S::Error> {
        let mut map = ser.serialize_map(Some(self.0.len()))?;
        for (i, bag) in self.0.iter().enumerate() {
            map.serialize_entry(&i.to_string(), bag)?;
        }
        map.end()
    }
}

impl<'de> Deserialize<'de> for NodeBags {
    fn deserialize<D: Deserializer<'de>>(de: D) -> std::result::Result<Self, D::Error> {
        let raw = BTreeMap::<String, Vec<usize>>::deserialize(de)?;
        let mut bags = vec![None; raw.len()];
        for (key, bag) in raw {
            let i: usize = key.parse().map_err(|_| D::Error::custom(format!("bag key `{key}` is not a node id")))?;
            let slot = bags.get_mut(i).ok_or_else(|| D::Error::custom(format!("bag key {i} out of range")))?;
            *slot = Some(bag);
        }
        Ok(NodeBags(bags.into_iter().map(|b| b.expect("keys are distinct and in range")).collect()))
    }
}

#[derive(Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "kebab-case", deny_unknown_fields)]
enum Doc {
    PathDecomposition {
        bags: Vec<Vec<usize>>,
    },
    TreeDecomposition {
        tree: TreeJson,
        bags: NodeBags,
    },
    TreePartition {
        tree: TreeJson,
        bags: NodeBags,
        witness: Option<Box<Doc>>,
    },
}

/// Any certificate the tools read or write.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Artifact {
    Path(PathDecomposition),
    Tree(TreeDecomposition),
    Partition(TreePartition),
}

impl Artifact {
    pub fn kind(&self) -> &'static str {
        match self {
            Artifact::Path(_) => "path-decomposition",
            Artifact::Tree(_) => "tree-decomposition",
            Artifact::Partition(_) => "tree-partition",
        }
    }
}

fn sets(kind: &'static str, bags: Vec<Vec<usize>>) -> Result<Vec<VertexSet>> {
    bags.into_iter()
        .enumerate()
        .map(|(i, bag)| {
            let set: VertexSet = bag.iter().copied().collect();
            if set.len() != bag.len() {
                return Err(Error::Schema { kind, message: format!("bag {i} repeats a vertex") });
            }
            Ok(set)
        })
        .collect()
}

fn lists(bags: &[VertexSet]) -> Vec<Vec<usize>> {
    bags.iter().map(|b| b.as_slice().to_vec()).collect()
}

fn doc_of(artifact: &Artifact) -> Doc {
    match artifact {
        Artifact::Path(pd) => Doc::PathDecomposition { bags: lists(&pd.bags) },
        Artifact::Tree(td) => Doc::TreeDecomposition { tree: TreeJson::from_graph(&td.tree), bags: NodeBags(lists(&td.bags)) },
        Artifact::Partition(tp) => Doc::TreePartition {
            tree: TreeJson::from_graph(&tp.tree),
            bags: NodeBags(lists(&tp.bags)),
            witness: tp.witness.as_ref().map(|pd| Box::new(Doc::PathDecomposition { bags: lists(&pd.bags) })),
        },
    }
}

fn artifact_of(doc: Doc) -> Result<Artifact> {
    Ok(match doc {
        Doc::PathDecomposition { bags } => Artifact::Path(PathDecomposition::new(sets("path-decomposition", bags)?)),
        Doc::TreeDecomposition { tree, bags } => {
            const KIND: &str = "tree-decomposition";
            Artifact::Tree(TreeDecomposition { tree: tree.into_graph(KIND)?, bags: sets(KIND, bags.0)? })
        }
        Doc::TreePartition { tree, bags, witness } => {
            const KIND: &str = "tree-partition";
            let witness = match witness.map(|w| artifact_of(*w)).transpose()? {
                None => None,
                Some(Artifact::Path(pd)) => Some(pd),
                Some(other) => {
                    return Err(Error::Schema { kind: KIND, message: format!("witness is a {}", other.kind()) })
                }
            };
            Artifact::Partition(TreePartition { tree: tree.into_graph(KIND)?, bags: sets(KIND, bags.0)?, witness })
        }
    })
}

pub fn parse_artifact(text: &str) -> Result<Artifact> {
    let doc: Doc = serde_json::from_str(text).map_err(|e| Error::Schema { kind: "certificate", message: e.to_string() })?;
    artifact_of(doc)
}

/// One-line JSON followed by a newline.
pub fn write_artifact(artifact: &Artifact) -> String {
    let mut out = serde_json::to_string(&doc_of(artifact)).expect("documents serialise");
    out.push('\n');
    out
}

pub fn parse_path_decomposition(text: &str) -> Result<PathDecomposition> {
    match parse_artifact(text)? {
        Artifact::Path(pd) => Ok(pd),
        other => Err(Error::Schema { kind: "path-decomposition", message: format!("found a {}", other.kind()) }),
    }
}

pub fn write_trace(trace: &ConstructionTrace) -> String {
    let mut out = serde_json::to_string_pretty(trace).expect("traces serialise");
    out.push('\n');
    out
}

pub fn parse_trace(text: &str) -> Result<ConstructionTrace> {
    serde_json::from_str(text).map_err(|e| Error::Schema { kind: "trace", message: e.to_string() })
}

/// Undirected DOT graph, vertices labelled by their 0-based ids.
pub fn graph_dot(g: &Graph, name: &str) -> String {
    let mut out = format!("graph {name} {{\n");
    for v in g.vertices() {
        let _ = writeln!(out, "    v{v} [label=\"{v}\"];");
    }
    for (u, v) in g.edges() {
        let _ = writeln!(out, "    v{u} -- v{v};");
    }
    out.push_str("}\n");
    out
}

/// Each bag becomes a cluster holding its vertices and a point-shaped anchor;
/// tree edges are drawn dashed between anchors, graph edges solid.
pub fn tree_partition_dot(g: &Graph, tp: &TreePartition) -> String {
    let mut out = String::from("graph tree_partition {\n    compound=true;\n");
    for (x, bag) in tp.bags.iter().enumerate() {
        let _ = writeln!(out, "    subgraph cluster_{x} {{");
        let _ = writeln!(out, "        label=\"B{x}\";");
        let _ = writeln!(out, "        b{x} [shape=point, style=invis];");
        for v in bag {
            let _ = writeln!(out, "        v{v} [label=\"{v}\"];");
        }
        out.push_str("    }\n");
    }
    for (a, b) in tp.tree.edges() {
        let _ = writeln!(out, "    b{a} -- b{b} [style=dashed, ltail=cluster_{a}, lhead=cluster_{b}];");
    }
    for (u, v) in g.edges() {
        let _ = writeln!(out, "    v{u} -- v{v};");
    }
    out.push_str("}\n");
    out
}
