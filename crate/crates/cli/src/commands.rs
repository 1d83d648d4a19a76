use std::io::Write;
use std::path::{Path, PathBuf};

use serde::Serialize;
use serde_json::Value;
use treepart::decomp::{validate_path_decomposition, validate_tree_decomposition};
use treepart::format::{self, Artifact};
use treepart::generators::gen_fan;
use treepart::oracles::{brute_path_partition_width, brute_pathwidth, brute_tree_partition_width};
use treepart::pathwidth::exact_pathwidth_with_limit;
use treepart::tpart::{build_tree_partition, f_bound, validate_tree_partition};
use treepart::{Graph, VertexSet};

use crate::manifest::{Parameters, RunManifest};
use crate::sweep::{append_rows, instance, sweep_rows};
use crate::{read_text, write_text, CliError, Command, Family, OracleKind};

macro_rules! say {
    ($out:expr, $($arg:tt)*) => {
        writeln!($out, $($arg)*).map_err(|e| CliError::Io("stdout".into(), e))?
    };
}

pub(crate) fn dispatch(command: Command, args: &[String], out: &mut dyn Write) -> Result<i32, CliError> {
    match command {
        Command::Gen { family, n, i, seed, out: prefix, dot } => gen(family, n, i, seed, &prefix, dot, args, out),
        Command::Pw { graph, out: pd_out, limit } => pw(&graph, pd_out.as_deref(), limit, out),
        Command::Partition { graph, pd, d, seed_set, out: prefix, dot } => {
            partition(&graph, pd.as_deref(), d, &seed_set, &prefix, dot, args, out)
        }
        Command::Verify { graph, artifact } => verify(&graph, &artifact, out),
        Command::Oracle { kind, graph } => oracle(kind, &graph, out),
        Command::Sweep { family, from, to, i, d, seed, out: csv } => sweep(family, from, to, i, d, seed, &csv, args, out),
        Command::Replay { manifest } => replay(&manifest, out),
    }
}

fn with_suffix(prefix: &Path, suffix: &str) -> PathBuf {
    let mut name = prefix.as_os_str().to_owned();
    name.push(suffix);
    PathBuf::from(name)
}

fn shown(p: &Path) -> String {
    p.display().to_string()
}

fn load_graph(path: &Path) -> Result<Graph, CliError> {
    format::parse_graph(&read_text(path)?).map_err(|e| CliError::Input(shown(path), e))
}

#[allow(clippy::too_many_arguments)]
fn gen(family: Family, n: usize, i: usize, seed: u64, prefix: &Path, dot: bool, args: &[String], out: &mut dyn Write) -> Result<i32, CliError> {
    let inst = instance(family, n, i, seed)?;
    let mut manifest = RunManifest::new("gen", args);
    manifest.parameters = Parameters {
        family: Some(family.name().into()),
        n: Some(n),
        i: (family == Family::LowerBound).then_some(i),
        seed: (family == Family::RandomTree).then_some(seed),
        ..Default::default()
    };
    let mut files = vec![(with_suffix(prefix, ".graph"), format::write_graph(&inst.graph))];
    files.push((with_suffix(prefix, ".pd.json"), format::write_artifact(&Artifact::Path(inst.decomposition.clone()))));
    if family == Family::Fan {
        let fan = gen_fan(n)?;
        files.push((with_suffix(prefix, ".tp.json"), format::write_artifact(&Artifact::Partition(fan.partition))));
    }
    if dot {
        files.push((with_suffix(prefix, ".dot"), format::graph_dot(&inst.graph, "g")));
    }
    for (path, text) in &files {
        write_text(path, text)?;
        manifest.outputs.push(shown(path));
    }
    manifest.write(&with_suffix(prefix, ".manifest.json"))?;
    say!(
        out,
        "{}: {} vertices, {} edges, pd width {}",
        inst.name,
        inst.graph.vertex_count(),
        inst.graph.edge_count(),
        inst.decomposition.width()
    );
    Ok(0)
}

fn pw(graph: &Path, pd_out: Option<&Path>, limit: usize, out: &mut dyn Write) -> Result<i32, CliError> {
    let g = load_graph(graph)?;
    let result = exact_pathwidth_with_limit(&g, limit)?;
    say!(out, "pathwidth {}", result.value);
    if let Some(path) = pd_out {
        write_text(path, &format::write_artifact(&Artifact::Path(result.witness)))?;
    }
    Ok(0)
}

#[allow(clippy::too_many_arguments)]
fn partition(
    graph: &Path,
    pd: Option<&Path>,
    d: Option<usize>,
    seed_set: &[usize],
    prefix: &Path,
    dot: bool,
    args: &[String],
    out: &mut dyn Write,
) -> Result<i32, CliError> {
    let g = load_graph(graph)?;
    let mut manifest = RunManifest::new("partition", args);
    manifest.inputs.push(shown(graph));
    let pd = match pd {
        Some(path) => {
            manifest.inputs.push(shown(path));
            format::parse_path_decomposition(&read_text(path)?).map_err(|e| CliError::Input(shown(path), e))?
        }
        None => exact_pathwidth_with_limit(&g, treepart::pathwidth::EXACT_LIMIT)?.witness,
    };
    let d = d.unwrap_or_else(|| g.max_degree());
    let s: VertexSet = seed_set.iter().copied().collect();
    let (tp, trace) = build_tree_partition(&g, &pd, &s, d)?;
    manifest.parameters =
        Parameters { k: Some(trace.k), d: Some(d), seed_set: Some(s.as_slice().to_vec()), ..Default::default() };

    let witness = tp.witness.clone().expect("the construction ships a witness");
    let mut files = vec![
        (with_suffix(prefix, ".tp.json"), format::write_artifact(&Artifact::Partition(tp.clone()))),
        (with_suffix(prefix, ".tree.graph"), format::write_graph(&tp.tree)),
        (with_suffix(prefix, ".witness.json"), format::write_artifact(&Artifact::Path(witness))),
        (with_suffix(prefix, ".trace.json"), format::write_trace(&trace)),
    ];
    if dot {
        files.push((with_suffix(prefix, ".dot"), format::tree_partition_dot(&g, &tp)));
    }
    for (path, text) in &files {
        write_text(path, text)?;
        manifest.outputs.push(shown(path));
    }
    manifest.write(&with_suffix(prefix, ".manifest.json"))?;
    say!(
        out,
        "k {} d {} |S| {}: width {} (f bound {}), witness width {} (bound {})",
        trace.k,
        d,
        s.len(),
        tp.width(),
        f_bound(trace.k as u64, d as u64, s.len() as u64),
        tp.witness_width().unwrap_or(-1),
        2 * trace.k + 1
    );
    Ok(0)
}

/// Prints every non-empty field of a validation report.
fn list_violations<R: Serialize>(report: &R, indent: &str, out: &mut dyn Write) -> Result<(), CliError> {
    let value = serde_json::to_value(report).expect("reports serialise");
    let Value::Object(fields) = value else { return Ok(()) };
    for (name, field) in fields {
        let name = name.replace('_', " ");
        match field {
            Value::Null | Value::Bool(false) => {}
            Value::Array(items) if items.is_empty() => {}
            Value::Array(items) => {
                let shown: Vec<String> = items.iter().map(render).collect();
                say!(out, "{indent}{name}: {}", shown.join(" "));
            }
            Value::Object(_) => {
                if let Some(nested) = nonempty_object(&field) {
                    say!(out, "{indent}{name}:");
                    list_violations(&nested, &format!("{indent}  "), out)?;
                }
            }
            other => say!(out, "{indent}{name}: {}", render(&other)),
        }
    }
    Ok(())
}

fn nonempty_object(v: &Value) -> Option<Value> {
    let Value::Object(map) = v else { return None };
    let bad = map.values().any(|f| match f {
        Value::Null | Value::Bool(false) => false,
        Value::Array(a) => !a.is_empty(),
        _ => true,
    });
    bad.then(|| v.clone())
}

fn render(v: &Value) -> String {
    match v {
        Value::Array(pair) => pair.iter().map(render).collect::<Vec<_>>().join("-"),
        Value::Bool(true) => "yes".into(),
        other => other.to_string(),
    }
}

fn verify(graph: &Path, artifact: &Path, out: &mut dyn Write) -> Result<i32, CliError> {
    let g = load_graph(graph)?;
    let text = read_text(artifact)?;
    let is_trace = serde_json::from_str::<Value>(&text).is_ok_and(|v| v.get("steps").is_some());
    if is_trace {
        let trace = format::parse_trace(&text).map_err(|e| CliError::Input(shown(artifact), e))?;
        let findings = trace.audit(&g);
        if findings.is_empty() {
            say!(out, "trace: valid ({} steps)", trace.steps.len());
            return Ok(0);
        }
        say!(out, "trace: invalid ({} findings)", findings.len());
        for f in findings {
            say!(out, "  step {}: {}", f.step, f.message);
        }
        return Ok(1);
    }
    let parsed = format::parse_artifact(&text).map_err(|e| CliError::Input(shown(artifact), e))?;
    let kind = parsed.kind();
    let (valid, summary, width) = match &parsed {
        Artifact::Path(pd) => {
            let r = validate_path_decomposition(&g, pd);
            let ok = r.is_valid();
            if !ok {
                say!(out, "{kind}: invalid ({})", r.summary());
                list_violations(&r, "  ", out)?;
            }
            (ok, r.summary(), format!("width {}", pd.width()))
        }
        Artifact::Tree(td) => {
            let r = validate_tree_decomposition(&g, td);
            let ok = r.is_valid();
            if !ok {
                say!(out, "{kind}: invalid ({})", r.summary());
                list_violations(&r, "  ", out)?;
            }
            (ok, r.summary(), format!("width {}", td.width()))
        }
        Artifact::Partition(tp) => {
            let r = validate_tree_partition(&g, tp);
            let ok = r.is_valid();
            if !ok {
                say!(out, "{kind}: invalid ({})", r.summary());
                list_violations(&r, "  ", out)?;
            }
            let witness = tp.witness_width().map_or(String::new(), |w| format!(", witness width {w}"));
            (ok, r.summary(), format!("width {}{witness}", tp.width()))
        }
    };
    if valid {
        say!(out, "{kind}: {summary} ({width})");
        Ok(0)
    } else {
        Ok(1)
    }
}

fn oracle(kind: OracleKind, graph: &Path, out: &mut dyn Write) -> Result<i32, CliError> {
    let g = load_graph(graph)?;
    let value = match kind {
        OracleKind::Pathwidth => brute_pathwidth(&g)?,
        OracleKind::PathPartitionWidth => brute_path_partition_width(&g)? as i64,
        OracleKind::TreePartitionWidth => brute_tree_partition_width(&g)? as i64,
    };
    say!(out, "{value}");
    Ok(0)
}

#[allow(clippy::too_many_arguments)]
fn sweep(
    family: Family,
    from: usize,
    to: usize,
    i: usize,
    d: Option<usize>,
    seed: u64,
    csv: &Path,
    args: &[String],
    out: &mut dyn Write,
) -> Result<i32, CliError> {
    let rows = sweep_rows(family, from, to, i, d, seed)?;
    append_rows(csv, &rows)?;
    let mut manifest = RunManifest::new("sweep", args);
    manifest.parameters = Parameters {
        family: Some(family.name().into()),
        i: (family == Family::LowerBound).then_some(i),
        d,
        seed: (family == Family::RandomTree).then_some(seed),
        ..Default::default()
    };
    manifest.outputs.push(shown(csv));
    manifest.write(&with_suffix(csv, ".manifest.json"))?;
    for row in &rows {
        say!(out, "{}", row.to_csv());
    }
    Ok(0)
}

fn replay(path: &Path, out: &mut dyn Write) -> Result<i32, CliError> {
    let manifest = RunManifest::read(path)?;
    if manifest.args.first().map(String::as_str) == Some("replay") {
        return Err(CliError::Usage("a manifest cannot replay another replay".into()));
    }
    let args = std::iter::once("treepart".to_string()).chain(manifest.args);
    Ok(crate::run(args, out))
}
