use std::io::Read as _;
use std::time::Duration;

use pathturan_core::containment::{contains_forest_naive, contains_linear_forest};
use pathturan_core::formulas::{ex_con_forest, ex_con_path, ex_forest, PathForest};
use pathturan_core::graphs::{
    construct_con_path_extremal, construct_forest_extremal, decode_graph6, encode_graph6, to_dot,
    SimpleGraph,
};
use pathturan_core::search::{
    turan_branch_bound_with, turan_enumerate_with, OracleOptions, SearchError,
};
use pathturan_core::verify::{
    check_bk_remark, check_corollary_equal_families, cross_check_consistency, probe_conjecture,
    sweep_observations, ObservationRanges, ProbeOptions, SweepReport,
};
use rand::{Rng, SeedableRng};

use crate::output::{self, emit, json};
use crate::{Cli, Command, Failure, Format, OracleModeArg, Suite, Target, Verdict};

pub fn run(cli: &Cli) -> Result<Verdict, Failure> {
    match &cli.command {
        Command::Value { target, connected } => value(cli, target, *connected),
        Command::Construct { target, connected } => construct(cli, target, *connected),
        Command::Contains {
            graph,
            paths,
            naive,
        } => contains(cli, graph, paths, *naive),
        Command::Oracle {
            target,
            mode,
            connected,
            budget,
            max_order,
            unseeded,
        } => {
            let opts = OracleOptions {
                budget: *budget,
                max_order: *max_order,
                seeded: !unseeded,
            };
            oracle(cli, target, *mode, *connected, &opts)
        }
        Command::Verify { suite, n_max } => verify(cli, *suite, *n_max),
        Command::Probe {
            paths,
            n_from,
            n_to,
            oracle_budget,
            budget,
        } => probe(cli, paths, *n_from, *n_to, *oracle_budget, *budget),
        Command::Crosscheck {
            samples,
            max_n,
            seed,
        } => crosscheck(cli, *samples, *max_n, *seed),
    }
}

fn usage(e: impl ToString) -> Failure {
    Failure::Usage(e.to_string())
}

fn unsupported(format: Format, what: &str) -> Failure {
    Failure::Usage(format!("format {format:?} is not available for {what}").to_lowercase())
}

fn value(cli: &Cli, t: &Target, connected: bool) -> Result<Verdict, Failure> {
    let text = match (connected, t.paths.len()) {
        (false, _) => {
            let v = ex_forest(t.n, &t.paths).map_err(usage)?;
            match cli.format {
                Format::Table => output::value_table(&v),
                Format::Json => json(&v),
                f => return Err(unsupported(f, "value")),
            }
        }
        (true, 1) => {
            let v = ex_con_path(t.n, t.paths.largest()).map_err(usage)?;
            match cli.format {
                Format::Table => output::value_table(&v),
                Format::Json => json(&v),
                f => return Err(unsupported(f, "value")),
            }
        }
        (true, _) => {
            let v = ex_con_forest(t.n, &t.paths).map_err(usage)?;
            match cli.format {
                Format::Table => output::connected_table(&v),
                Format::Json => json(&v),
                f => return Err(unsupported(f, "value")),
            }
        }
    };
    emit(cli, &text)?;
    Ok(Verdict::Pass)
}

fn graphs_text(format: Format, graphs: &[SimpleGraph], name: &str) -> Option<String> {
    match format {
        Format::Graph6 => Some(graphs.iter().map(|g| encode_graph6(g) + "\n").collect()),
        Format::Dot => Some(
            graphs
                .iter()
                .enumerate()
                .map(|(i, g)| to_dot(g, &format!("{name}_{i}")))
                .collect(),
        ),
        _ => None,
    }
}

fn construct(cli: &Cli, t: &Target, connected: bool) -> Result<Verdict, Failure> {
    let text = if connected {
        if t.paths.len() != 1 {
            return Err(usage("--connected constructions need a single path"));
        }
        let graphs = construct_con_path_extremal(t.n, t.paths.largest()).map_err(usage)?;
        match cli.format {
            Format::Json => json(&graphs),
            Format::Table => graphs.iter().map(|g| encode_graph6(g) + "\n").collect(),
            f => graphs_text(f, &graphs, "extremal").expect("graph format"),
        }
    } else {
        let set = construct_forest_extremal(t.n, &t.paths).map_err(usage)?;
        let graphs: Vec<SimpleGraph> = set.graphs().cloned().collect();
        match cli.format {
            Format::Table => output::constructions_table(&set),
            Format::Json => json(&set),
            f => graphs_text(f, &graphs, "extremal").expect("graph format"),
        }
    };
    emit(cli, &text)?;
    Ok(Verdict::Pass)
}

fn read_graphs(path: &std::path::Path) -> Result<Vec<SimpleGraph>, Failure> {
    let mut text = String::new();
    if path.as_os_str() == "-" {
        std::io::stdin()
            .read_to_string(&mut text)
            .map_err(|e| usage(format!("cannot read stdin: {e}")))?;
    } else {
        text = std::fs::read_to_string(path)
            .map_err(|e| usage(format!("cannot read graph file {}: {e}", path.display())))?;
    }
    let graphs = text
        .lines()
        .filter(|l| !l.trim().is_empty())
        .enumerate()
        .map(|(i, l)| {
            decode_graph6(l).map_err(|e| usage(format!("line {}: invalid graph6: {e}", i + 1)))
        })
        .collect::<Result<Vec<_>, _>>()?;
    if graphs.is_empty() {
        return Err(usage(format!("no graphs in {}", path.display())));
    }
    Ok(graphs)
}

#[derive(serde::Serialize)]
struct ContainsRecord {
    graph: String,
    contained: bool,
    #[serde(skip_serializing_if = "Option::is_none")]
    certificate: Option<Vec<Vec<usize>>>,
}

fn contains(
    cli: &Cli,
    path: &std::path::Path,
    forest: &PathForest,
    naive: bool,
) -> Result<Verdict, Failure> {
    let graphs = read_graphs(path)?;
    let mut records = Vec::new();
    for g in &graphs {
        let (contained, certificate) = if naive {
            (contains_forest_naive(g, forest).map_err(usage)?, None)
        } else {
            let cert = contains_linear_forest(g, forest);
            (cert.is_some(), cert.map(|c| c.paths))
        };
        records.push(ContainsRecord {
            graph: encode_graph6(g),
            contained,
            certificate,
        });
    }
    let text = match cli.format {
        Format::Json => json(&records),
        Format::Table => records
            .iter()
            .enumerate()
            .map(|(i, r)| match (&r.certificate, r.contained) {
                (Some(paths), _) => output::certificate_line(
                    i,
                    Some(&pathturan_core::containment::EmbeddingCertificate {
                        paths: paths.clone(),
                    }),
                ),
                (None, true) => format!("graph {i}: contained\n"),
                (None, false) => output::certificate_line(i, None),
            })
            .collect(),
        f => return Err(unsupported(f, "contains")),
    };
    emit(cli, &text)?;
    Ok(Verdict::Pass)
}

fn oracle(
    cli: &Cli,
    t: &Target,
    mode: OracleModeArg,
    connected: bool,
    opts: &OracleOptions,
) -> Result<Verdict, Failure> {
    let n = usize::try_from(t.n).map_err(usage)?;
    let result = match mode {
        OracleModeArg::Enumerate => turan_enumerate_with(n, &t.paths, connected, opts),
        OracleModeArg::Bnb if connected => {
            return Err(usage("--connected is only available with --mode enumerate"))
        }
        OracleModeArg::Bnb => turan_branch_bound_with(n, &t.paths, opts),
    };
    let r = match result {
        Ok(r) => r,
        Err(SearchError::Budget(partial)) => {
            if cli.format == Format::Json {
                emit(cli, &json(&partial))?;
            }
            return Err(Failure::Budget(format!(
                "best F-free edge count found: {}",
                partial.best.map_or("none".to_string(), |b| b.to_string())
            )));
        }
        Err(e @ SearchError::Capacity { .. }) => return Err(Failure::Budget(e.to_string())),
        Err(SearchError::Formula(e)) => return Err(usage(e)),
    };
    let text = match cli.format {
        Format::Table => output::oracle_table(&r),
        Format::Json => json(&r),
        f => graphs_text(f, &r.witnesses, "witness").expect("graph format"),
    };
    emit(cli, &text)?;
    Ok(Verdict::Pass)
}

fn reports_out(cli: &Cli, reports: &[SweepReport]) -> Result<Verdict, Failure> {
    let text = match cli.format {
        Format::Table => reports.iter().map(|r| r.to_table(20)).collect(),
        Format::Json => json(&reports),
        f => return Err(unsupported(f, "reports")),
    };
    emit(cli, &text)?;
    Ok(if reports.iter().all(|r| r.pass) {
        Verdict::Pass
    } else {
        Verdict::Counterexample
    })
}

fn verify(cli: &Cli, suite: Suite, n_max: Option<u64>) -> Result<Verdict, Failure> {
    let mut reports = Vec::new();
    let all = suite == Suite::All;
    if all || suite == Suite::Observations {
        let ranges = ObservationRanges {
            n_max: n_max.unwrap_or(300),
            ..ObservationRanges::default()
        };
        reports.extend(sweep_observations(&ranges));
    }
    if all || suite == Suite::Corollaries {
        for k in 1..=3 {
            reports.push(check_corollary_equal_families(k, n_max.unwrap_or(500)).map_err(usage)?);
        }
    }
    if all || suite == Suite::BkRemark {
        for l in [4u64, 6, 8] {
            for k in [2u64, 3, 4] {
                let from = (5 * k * l).div_ceil(4);
                let to = n_max.unwrap_or(5 * k * l);
                reports.push(check_bk_remark(k, l, from..=to).map_err(usage)?);
            }
        }
    }
    if all || suite == Suite::Consistency {
        reports.push(cross_check_consistency(n_max.unwrap_or(500)));
    }
    reports_out(cli, &reports)
}

fn probe(
    cli: &Cli,
    forest: &PathForest,
    from: u64,
    to: u64,
    oracle_max_n: usize,
    budget: Duration,
) -> Result<Verdict, Failure> {
    if from > to {
        return Err(usage("--n-from must not exceed --n-to"));
    }
    let opts = ProbeOptions {
        oracle_max_n,
        oracle: OracleOptions {
            budget,
            ..OracleOptions::default()
        },
    };
    let report = probe_conjecture(forest, from..=to, &opts).map_err(usage)?;
    reports_out(cli, &[report])
}

#[derive(serde::Serialize)]
struct CrosscheckReport {
    seed: u64,
    samples: usize,
    checks: usize,
    disagreements: Vec<(String, String)>,
}

fn crosscheck(cli: &Cli, samples: usize, max_n: usize, seed: u64) -> Result<Verdict, Failure> {
    if max_n == 0 || max_n > 10 {
        return Err(usage("--max-n must be between 1 and 10"));
    }
    let shapes: Vec<PathForest> = ["3", "4", "5", "3,3", "4,4", "5,3"]
        .iter()
        .map(|s| s.parse().expect("valid forest"))
        .collect();
    let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(seed);
    let mut report = CrosscheckReport {
        seed,
        samples,
        checks: 0,
        disagreements: Vec::new(),
    };
    for _ in 0..samples {
        let n = rng.gen_range(1..=max_n);
        let p: f64 = rng.gen_range(0.1..0.9);
        let mut g = SimpleGraph::empty(n);
        for u in 0..n {
            for v in (u + 1)..n {
                if rng.gen_bool(p) {
                    g.add_edge(u, v);
                }
            }
        }
        for f in &shapes {
            report.checks += 1;
            let fast = contains_linear_forest(&g, f);
            let slow = contains_forest_naive(&g, f).map_err(usage)?;
            let valid = fast.as_ref().is_none_or(|c| c.verify_forest(&g, f));
            if fast.is_some() != slow || !valid {
                report
                    .disagreements
                    .push((encode_graph6(&g), f.to_string()));
            }
        }
    }
    let text = match cli.format {
        Format::Json => json(&report),
        Format::Table => {
            let mut s = format!(
                "seed {seed}: {} checks, {} disagreements\n",
                report.checks,
                report.disagreements.len()
            );
            for (g, f) in &report.disagreements {
                s += &format!("  {g} {f}\n");
            }
            s
        }
        f => return Err(unsupported(f, "crosscheck")),
    };
    emit(cli, &text)?;
    Ok(if report.disagreements.is_empty() {
        Verdict::Pass
    } else {
        Verdict::Counterexample
    })
}
