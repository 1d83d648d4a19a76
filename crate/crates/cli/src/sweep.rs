//! Measured-versus-bound rows for the construction over a family.

use std::io::Write;
use std::path::Path;

use treepart::generators::{gen_comb, gen_fan, gen_lower_bound_tree, gen_path, gen_random_tree, SeededConfig};
use treepart::pathwidth::exact_pathwidth;
use treepart::tpart::{build_tree_partition, f_bound};
use treepart::{Graph, PathDecomposition, VertexSet};

use crate::{CliError, Family};

pub const HEADER: &str = "instance,k,d,s,width,f_bound,witness_pw,pw_bound";

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SweepRow {
    pub instance: String,
    pub k: usize,
    pub d: usize,
    pub s: usize,
    pub width: usize,
    pub f_bound: u64,
    pub witness_pw: i64,
    pub pw_bound: usize,
}

impl SweepRow {
    pub fn to_csv(&self) -> String {
        format!(
            "{},{},{},{},{},{},{},{}",
            self.instance, self.k, self.d, self.s, self.width, self.f_bound, self.witness_pw, self.pw_bound
        )
    }
}

/// A family member with its starting path-decomposition.
pub struct Instance {
    pub name: String,
    pub graph: Graph,
    pub decomposition: PathDecomposition,
}

pub fn instance(family: Family, n: usize, i: usize, seed: u64) -> Result<Instance, CliError> {
    let (name, graph, decomposition) = match family {
        Family::Path => {
            let graph = gen_path(n);
            let pd = path_decomposition(&graph);
            (format!("path-{n}"), graph, pd)
        }
        Family::Fan => {
            let fan = gen_fan(n)?;
            (format!("fan-{n}"), fan.graph, fan.decomposition)
        }
        Family::Comb => {
            let comb = gen_comb(n);
            (format!("comb-{n}"), comb.graph, comb.decomposition)
        }
        Family::LowerBound => {
            let t = gen_lower_bound_tree(i, n)?;
            (format!("lower-bound-{i}-{n}"), t.graph, t.decomposition)
        }
        Family::RandomTree => {
            let graph = gen_random_tree(&SeededConfig { n, seed });
            let pd = exact_pathwidth(&graph)?.witness;
            (format!("random-tree-{n}-s{seed}"), graph, pd)
        }
    };
    Ok(Instance { name, graph, decomposition })
}

fn path_decomposition(g: &Graph) -> PathDecomposition {
    let n = g.vertex_count();
    let bags = match n {
        0 => Vec::new(),
        1 => vec![VertexSet::singleton(0)],
        _ => (1..n).map(|i| VertexSet::from([i - 1, i])).collect(),
    };
    PathDecomposition::new(bags)
}

pub fn run_instance(inst: &Instance, d: Option<usize>) -> Result<SweepRow, CliError> {
    let d = d.unwrap_or_else(|| inst.graph.max_degree());
    let (tp, trace) = build_tree_partition(&inst.graph, &inst.decomposition, &VertexSet::new(), d)?;
    let k = trace.k;
    Ok(SweepRow {
        instance: inst.name.clone(),
        k,
        d,
        s: 0,
        width: tp.width(),
        f_bound: f_bound(k as u64, d as u64, 0),
        witness_pw: tp.witness_width().expect("the construction ships a witness"),
        pw_bound: 2 * k + 1,
    })
}

pub fn sweep_rows(family: Family, from: usize, to: usize, i: usize, d: Option<usize>, seed: u64) -> Result<Vec<SweepRow>, CliError> {
    if from > to {
        return Err(CliError::Usage(format!("empty range {from}..={to}")));
    }
    (from..=to).map(|n| run_instance(&instance(family, n, i, seed)?, d)).collect()
}

/// Appends rows, writing the header first if the file is new or empty. An
/// existing file must start with the same header.
pub fn append_rows(path: &Path, rows: &[SweepRow]) -> Result<(), CliError> {
    let io = |e| CliError::Io(path.display().to_string(), e);
    let existing = match std::fs::read_to_string(path) {
        Ok(text) => text,
        Err(e) if e.kind() == std::io::ErrorKind::NotFound => String::new(),
        Err(e) => return Err(io(e)),
    };
    if !existing.is_empty() && existing.lines().next() != Some(HEADER) {
        return Err(CliError::Usage(format!("{}: not a sweep CSV (header differs)", path.display())));
    }
    let mut file = std::fs::OpenOptions::new().create(true).append(true).open(path).map_err(io)?;
    let mut text = String::new();
    if existing.is_empty() {
        text.push_str(HEADER);
        text.push('\n');
    } else if !existing.ends_with('\n') {
        text.push('\n');
    }
    for row in rows {
        text.push_str(&row.to_csv());
        text.push('\n');
    }
    file.write_all(text.as_bytes()).map_err(io)
}
