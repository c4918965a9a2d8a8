//! The subcommands. Each builds a table or a document and writes it out.

use std::fs::File;
use std::io::{BufWriter, Write};

use num_bigint::BigUint;
use serde_json::Value;
use tcnet_core::{enumerate_component_graphs, ComponentGraph};
use tcnet_exact::asymptotics::{
    laplace_ratio, log_asymptotic_node_labeled, log_asymptotic_tc, log_big, log_laplace_estimate,
    log_o_scale, log_prefactor_estimate, o_bound_diagnostic, prefactor_ratio,
};
use tcnet_exact::{one_component_count, phylo_tree_count, star_count, tc_exact_k_one, CountError};
use tcnet_oracle::{enumerate_tree_child, OracleConfig};

use crate::args::{
    AsymptoticArgs, AsymptoticKind, Cli, Command, CompgraphAction, CompgraphArgs, CountArgs, Formula, GraphFormat,
    OracleArgs,
};
use crate::output::{Cell, Table};
use crate::{verify, CliError, Result};

pub fn dispatch(cli: &Cli, out: &mut dyn Write) -> Result<()> {
    match &cli.command {
        Command::Count(a) => count(a)?.write(cli.format, out)?,
        Command::Oracle(a) => oracle(a, cli.oracle_max_size)?.write(cli.format, out)?,
        Command::Compgraph(a) => compgraph(a, out)?,
        Command::Asymptotic(a) => asymptotic(a)?.write(cli.format, out)?,
        Command::Verify(a) => verify::run(a, cli.oracle_max_size, out)?,
    }
    Ok(())
}

fn count_cell(v: BigUint) -> Cell {
    Cell::Count(v.to_string())
}

/// One row per parameter pair. Domain violations become a row with an empty
/// value and the reason; only resource guards abort the command.
pub fn count(a: &CountArgs) -> Result<Table> {
    let mut t = Table::new(&["leaves", "retics", "formula", "value", "reason"]);
    let retics: Vec<usize> = match a.formula {
        Formula::Trees => vec![0],
        Formula::TcK1 => vec![1],
        _ => a
            .retics
            .as_ref()
            .ok_or_else(|| CliError::Usage(format!("--retics is required for {}", a.formula.name())))?
            .0
            .clone(),
    };
    for &l in &a.leaves.0 {
        for &k in &retics {
            let value = match a.formula {
                Formula::Trees => phylo_tree_count(l),
                Formula::OneComponent => one_component_count(l, k),
                Formula::Star => star_count(l, k),
                Formula::TcK1 => tc_exact_k_one(l),
            };
            let (value, reason) = match value {
                Ok(v) => (count_cell(v), String::new()),
                Err(CountError::Domain(msg)) => (Cell::Empty, msg),
                Err(e) => return Err(e.into()),
            };
            t.push(vec![Cell::Int(l), Cell::Int(k), Cell::Word(a.formula.name()), value, Cell::Text(reason)]);
        }
    }
    Ok(t)
}

pub fn oracle(a: &OracleArgs, max_size: usize) -> Result<Table> {
    let config = OracleConfig {
        max_size,
        threads: a.threads,
        keep_networks: a.emit.is_some(),
        ..OracleConfig::default()
    };
    let mut emit = a
        .emit
        .as_ref()
        .map(|p| File::create(p).map(BufWriter::new))
        .transpose()?;
    let mut t = Table::new(&["leaves", "retics", "count", "normal_count", "star_share", "residual"]);
    for &l in &a.leaves.0 {
        for &k in &a.retics.0 {
            let r = enumerate_tree_child(l, k, &config)?;
            if let Some(w) = emit.as_mut() {
                r.write_jsonl(&mut *w)?;
            }
            let opt = |v: Option<BigUint>| v.map_or(Cell::Dash, count_cell);
            t.push(vec![
                Cell::Int(l),
                Cell::Int(k),
                count_cell(r.count.clone()),
                count_cell(r.normal_count.clone()),
                opt(r.star_share()),
                opt(r.residual()),
            ]);
        }
    }
    if let Some(mut w) = emit {
        w.flush()?;
    }
    Ok(t)
}

fn graph_value(g: &ComponentGraph) -> Value {
    serde_json::from_str(&g.to_json()).expect("graph JSON")
}

fn read_graph(arg: &str) -> Result<ComponentGraph> {
    let text = match arg.strip_prefix('@') {
        Some(path) => std::fs::read_to_string(path)?,
        None => arg.to_string(),
    };
    Ok(ComponentGraph::from_json(&text)?)
}

pub fn compgraph(a: &CompgraphArgs, out: &mut dyn Write) -> Result<()> {
    let graphs: Vec<ComponentGraph>;
    let mut extra: Vec<Value> = Vec::new();
    match &a.action {
        CompgraphAction::Enumerate { m, max_vertices } => {
            graphs = enumerate_component_graphs(*m, *max_vertices)?;
        }
        CompgraphAction::Star { k } => {
            graphs = vec![ComponentGraph::star(*k)?];
        }
        CompgraphAction::Reduce { graph } => {
            let g = read_graph(graph)?;
            let reds = g.reductions();
            graphs = reds.iter().map(|r| r.to_component_graph()).collect();
            extra = reds
                .iter()
                .map(|r| {
                    let sig = r.signature();
                    serde_json::json!({
                        "t": sig.t,
                        "betas": sig.betas,
                        "removed": sig.removed,
                        "attachment_ends": r.attachment_ends(),
                    })
                })
                .collect();
        }
    }
    match a.output {
        GraphFormat::Dot => {
            for g in &graphs {
                write!(out, "{}", g.to_dot())?;
            }
        }
        GraphFormat::Json => {
            let items: Vec<Value> = graphs
                .iter()
                .enumerate()
                .map(|(i, g)| match extra.get(i) {
                    Some(Value::Object(meta)) => {
                        let mut obj = meta.clone();
                        obj.insert("graph".into(), graph_value(g));
                        Value::Object(obj)
                    }
                    _ => graph_value(g),
                })
                .collect();
            writeln!(out, "{}", serde_json::to_string_pretty(&items).expect("json"))?;
        }
    }
    Ok(())
}

pub fn asymptotic(a: &AsymptoticArgs) -> Result<Table> {
    let k = a.k;
    let list = |v: &Option<crate::args::IntList>, flag: &str| {
        v.as_ref()
            .map(|l| l.0.clone())
            .ok_or_else(|| CliError::Usage(format!("--{flag} is required for --kind {}", a.kind.name())))
    };
    let size_header = if a.kind == AsymptoticKind::NodeLabeled { "n" } else { "leaves" };
    // node-labeled rows have no exact count to compare with; they report the
    // value itself instead, which is exactly 0 for even n
    let fifth = if a.kind == AsymptoticKind::NodeLabeled { "value" } else { "ratio" };
    let mut t = Table::new(&[size_header, "k", "kind", "log_value", fifth, "note"]);
    let kind = Cell::Word(a.kind.name());
    let mut row = |size: usize, log: Option<f64>, ratio: Option<f64>, note: &str| {
        t.push(vec![
            Cell::Int(size),
            Cell::Int(k),
            kind.clone(),
            log.map_or(Cell::Empty, Cell::Real),
            ratio.map_or(Cell::Empty, Cell::Real),
            Cell::Text(note.into()),
        ]);
    };
    match a.kind {
        AsymptoticKind::Tc => {
            for l in list(&a.l, "l")? {
                let log = log_asymptotic_tc(l, k)?.ln().expect("nonzero");
                let (exact, note) = if k == 0 {
                    (Some(phylo_tree_count(l)?), "exact count")
                } else if l <= k {
                    (None, "no networks with k >= leaves")
                } else {
                    (Some(star_count(l, k)?), if k == 1 { "exact count" } else { "star share" })
                };
                let ratio = exact.map(|e| log_big(&e).map(|v| (v - log).exp())).transpose()?;
                row(l, Some(log), ratio, note);
            }
        }
        AsymptoticKind::NodeLabeled => {
            for n in list(&a.n, "n")? {
                match log_asymptotic_node_labeled(n, k)?.ln() {
                    Some(v) => row(n, Some(v), Some(v.exp()), ""),
                    None => row(n, None, Some(0.0), "even n"),
                }
            }
        }
        AsymptoticKind::Laplace => {
            for l in list(&a.l, "l")? {
                row(l, Some(log_laplace_estimate(l, k)?), Some(laplace_ratio(l, k)?), "");
            }
        }
        AsymptoticKind::Prefactor => {
            for l in list(&a.l, "l")? {
                row(l, Some(log_prefactor_estimate(l)), Some(prefactor_ratio(l, k)?), "");
            }
        }
        AsymptoticKind::OBound => {
            let ls = list(&a.l, "l")?;
            let series = o_bound_diagnostic(k, &ls)?;
            for p in series.points() {
                row(p.leaves, Some(log_o_scale(p.leaves, k)), Some(p.ratio), "");
            }
        }
    }
    Ok(t)
}
