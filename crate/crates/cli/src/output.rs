use std::fmt::Write as _;
use std::io::Write as _;

use pathturan_core::containment::EmbeddingCertificate;
use pathturan_core::formulas::{ConnectedForestValue, TuranValue};
use pathturan_core::graphs::{encode_graph6, ConstructionSet};
use pathturan_core::search::OracleResult;

use crate::{Cli, Failure};

/// Writes `text` to `--output` or stdout.
pub fn emit(cli: &Cli, text: &str) -> Result<(), Failure> {
    match &cli.output {
        Some(path) => std::fs::write(path, text)
            .map_err(|e| Failure::Usage(format!("cannot write {}: {e}", path.display()))),
        None => {
            let mut out = std::io::stdout().lock();
            out.write_all(text.as_bytes())
                .and_then(|_| out.flush())
                .map_err(|e| Failure::Usage(format!("cannot write to stdout: {e}")))
        }
    }
}

pub fn json<T: serde::Serialize>(value: &T) -> String {
    let mut s = serde_json::to_string_pretty(value).expect("report types serialize");
    s.push('\n');
    s
}

fn orders(forest: &[u64]) -> String {
    forest
        .iter()
        .map(|k| k.to_string())
        .collect::<Vec<_>>()
        .join(",")
}

pub fn value_table(v: &TuranValue) -> String {
    let mut out = String::new();
    let _ = writeln!(out, "forest   {}", orders(&v.forest));
    let _ = writeln!(out, "n        {}", v.n);
    let _ = writeln!(out, "value    {}", v.value);
    let _ = writeln!(out, "regime   {}", v.regime);
    let _ = writeln!(out, "c        {}", v.c);
    if let Some(x) = v.crossover {
        let _ = writeln!(out, "crossover {x} ({:.2})", x.as_f64());
    }
    let achieving: Vec<String> = v.achieving().map(|t| t.term.to_string()).collect();
    let _ = writeln!(out, "achieving {}", achieving.join(" "));
    let _ = writeln!(out, "terms");
    for t in &v.terms {
        let mark = if t.achieving { "*" } else { " " };
        let _ = writeln!(out, "  {mark} {:<24} {}", t.term.to_string(), t.value);
    }
    out
}

pub fn connected_table(v: &ConnectedForestValue) -> String {
    match v {
        ConnectedForestValue::Exact(v) => format!("status   exact\n{}", value_table(v)),
        ConnectedForestValue::UpperBound(v) => format!("status   upper-bound\n{}", value_table(v)),
        ConnectedForestValue::Unknown { n, forest } => format!(
            "status   unknown\nforest   {}\nn        {n}\n",
            orders(forest)
        ),
    }
}

pub fn constructions_table(set: &ConstructionSet) -> String {
    let mut out = value_table(&set.value);
    let _ = writeln!(out, "certified {}", set.certified);
    for c in &set.constructions {
        let _ = writeln!(
            out,
            "{}\t{}\t{} edges\t{}",
            c.term,
            c.recipe,
            c.graph.edge_count(),
            encode_graph6(&c.graph)
        );
    }
    out
}

pub fn certificate_line(index: usize, cert: Option<&EmbeddingCertificate>) -> String {
    match cert {
        None => format!("graph {index}: not contained\n"),
        Some(c) => {
            let paths: Vec<String> = c
                .paths
                .iter()
                .map(|p| {
                    p.iter()
                        .map(|v| v.to_string())
                        .collect::<Vec<_>>()
                        .join("-")
                })
                .collect();
            format!("graph {index}: contained: {}\n", paths.join(" | "))
        }
    }
}

pub fn oracle_table(r: &OracleResult) -> String {
    let mut out = String::new();
    let mode = match r.mode {
        pathturan_core::search::OracleMode::Enumerate => "enumerate",
        pathturan_core::search::OracleMode::BranchBound => "branch-bound",
    };
    let _ = writeln!(out, "forest     {}", orders(&r.forest));
    let _ = writeln!(out, "n          {}", r.n);
    let _ = writeln!(out, "mode       {mode}");
    let _ = writeln!(out, "connected  {}", r.connected_only);
    let _ = writeln!(out, "max edges  {}", r.max_edges);
    let _ = writeln!(out, "witnesses  {}", r.witnesses.len());
    for g in &r.witnesses {
        let _ = writeln!(out, "  {}", encode_graph6(g));
    }
    let _ = writeln!(out, "nodes      {}", r.stats.nodes);
    let _ = writeln!(out, "seconds    {:.3}", r.stats.seconds);
    out
}
