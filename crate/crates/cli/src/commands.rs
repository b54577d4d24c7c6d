use std::fs::File;
use std::io::{BufReader, BufWriter, Write};
use std::path::Path;
use std::sync::Mutex;

use anyhow::Context;
use kclique::counting::{count_per_vertex, count_total, list_cliques, CountConfig};
use kclique::graph::{parse_edge_list, LabeledGraph};
use kclique::orientation::{self, OrientConfig};
use kclique::peeling::{peel_approx, peel_exact};
use kclique::sampling::{analytic_variance, approx_count, approx_count_trials};
use kclique::{oracle, par, DirectedGraph};
use serde_json::json;

use crate::report::{timed, RunReport};
use crate::{
    ApproxArgs, CountArgs, Failure, OracleArgs, OrderArgs, OrientArgs, PeelArgs, PeelMode,
};

type Outcome = Result<(), Failure>;

fn load(path: &Path, report: &mut RunReport) -> Result<LabeledGraph, Failure> {
    let (lg, secs) = timed(|| -> Result<LabeledGraph, Failure> {
        let file = File::open(path).with_context(|| format!("cannot open {}", path.display()))?;
        Ok(parse_edge_list(BufReader::new(file))?)
    });
    let lg = lg?;
    report.seconds.load = secs;
    report.n = lg.graph.n();
    report.m = lg.graph.m();
    Ok(lg)
}

fn orient_config(order: &OrderArgs) -> Result<OrientConfig, Failure> {
    let cfg = OrientConfig {
        strategy: order.order,
        epsilon: order.eps,
        alpha_hat: order.alpha,
    };
    cfg.validate()?;
    Ok(cfg)
}

fn oriented(
    lg: &LabeledGraph,
    cfg: &OrientConfig,
    report: &mut RunReport,
) -> Result<DirectedGraph, Failure> {
    let (dg, secs) = timed(|| orientation::orient(&lg.graph, cfg));
    report.seconds.orient = secs;
    report.strategy = cfg.strategy.to_string();
    Ok(dg?)
}

fn create(path: &Path) -> Result<BufWriter<File>, Failure> {
    let file = File::create(path).with_context(|| format!("cannot create {}", path.display()))?;
    Ok(BufWriter::new(file))
}

/// Writes `label<TAB>value` lines sorted by label.
fn write_per_vertex(path: &Path, labels: &[u64], values: &[u64]) -> Result<(), Failure> {
    let mut rows: Vec<(u64, u64)> = labels.iter().copied().zip(values.iter().copied()).collect();
    rows.sort_unstable();
    let mut out = create(path)?;
    for (label, value) in rows {
        writeln!(out, "{label}\t{value}")?;
    }
    out.flush()?;
    Ok(())
}

fn finish(report: &RunReport, json: Option<&Path>) -> Outcome {
    if let Some(path) = json {
        report.write(path)?;
    }
    Ok(())
}

pub fn count(a: CountArgs) -> Outcome {
    par::install(a.common.threads, move || run_count(a))
}

fn run_count(a: CountArgs) -> Outcome {
    let mut report = RunReport::new("count", &a.common.input);
    let cfg = orient_config(&a.order)?;
    let count_cfg = CountConfig {
        parallelism: a.parallelism.resolve(a.k),
        ..CountConfig::default()
    };
    report.k = Some(a.k);
    report.parallelism = Some(count_cfg.parallelism.to_string());
    let lg = load(&a.common.input, &mut report)?;
    let dg = oriented(&lg, &cfg, &mut report)?;

    let (total, secs) = timed(|| -> Result<u64, Failure> {
        let mut total = None;
        if let Some(path) = &a.per_vertex {
            let c = count_per_vertex(&dg, a.k, &count_cfg)?;
            write_per_vertex(path, &lg.labels, c.per_vertex.as_deref().unwrap_or(&[]))?;
            total = Some(c.total);
        }
        if let Some(path) = &a.list {
            let cliques = Mutex::new(Vec::new());
            let c = list_cliques(&dg, a.k, &count_cfg, |q| {
                let mut labels: Vec<u64> = q.iter().map(|&v| lg.labels[v as usize]).collect();
                labels.sort_unstable();
                cliques.lock().unwrap().push(labels);
            })?;
            let mut cliques = cliques.into_inner().unwrap();
            cliques.sort_unstable();
            let mut out = create(path)?;
            for q in cliques {
                let line: Vec<String> = q.iter().map(u64::to_string).collect();
                writeln!(out, "{}", line.join(" "))?;
            }
            out.flush()?;
            total = Some(c.total);
        }
        match total {
            Some(t) => Ok(t),
            None => Ok(count_total(&dg, a.k, &count_cfg)?.total),
        }
    });
    let total = total?;
    report.seconds.compute = secs;
    report.result = json!({ "total": total });
    println!("{total}");
    finish(&report, a.common.json.as_deref())
}

pub fn approx(a: ApproxArgs) -> Outcome {
    par::install(a.common.threads, move || run_approx(a))
}

fn shared_from_flag(k: usize, flag: &[u64]) -> Result<Vec<u64>, Failure> {
    if flag.len() != k.saturating_sub(2) {
        return Err(Failure::Usage(format!(
            "--shared-pairs needs {} values (overlaps 2..{}), got {}",
            k.saturating_sub(2),
            k.saturating_sub(1),
            flag.len()
        )));
    }
    let mut shared = vec![0, 0];
    shared.extend_from_slice(flag);
    Ok(shared)
}

fn run_approx(a: ApproxArgs) -> Outcome {
    let mut report = RunReport::new("approx", &a.common.input);
    let cfg = orient_config(&a.order)?;
    if a.trials == 0 {
        return Err(Failure::Usage("--trials must be at least 1".into()));
    }
    let shared = a
        .shared_pairs
        .as_deref()
        .map(|s| shared_from_flag(a.k, s))
        .transpose()?;
    report.k = Some(a.k);
    report.strategy = cfg.strategy.to_string();
    let lg = load(&a.common.input, &mut report)?;
    let g = &lg.graph;

    let (result, secs) = timed(|| -> Result<(String, serde_json::Value), Failure> {
        let p = 1.0 / a.colors.max(1) as f64;
        let variance = |x: f64| -> Result<Option<f64>, Failure> {
            match &shared {
                Some(s) => Ok(Some(analytic_variance(x, p, a.k, s)?)),
                None => Ok(None),
            }
        };
        if a.trials == 1 {
            let e = approx_count(g, a.k, a.colors, a.seed, &cfg)?;
            let summary = json!({
                "estimate": e.estimate,
                "sub_count": e.sub_count,
                "colors": e.colors,
                "seed": e.seed,
                "trials": 1,
                "variance": variance(e.estimate)?,
            });
            Ok((e.estimate.to_string(), summary))
        } else {
            let (mean, std) = approx_count_trials(g, a.k, a.colors, a.seed, a.trials, &cfg)?;
            let summary = json!({
                "estimate": mean,
                "std": std,
                "colors": a.colors,
                "seed": a.seed,
                "trials": a.trials,
                "variance": variance(mean)?,
            });
            Ok((format!("{mean}±{std}"), summary))
        }
    });
    let (line, summary) = result?;
    report.seconds.compute = secs;
    report.result = summary;
    println!("{line}");
    finish(&report, a.common.json.as_deref())
}

pub fn peel(a: PeelArgs) -> Outcome {
    if a.mode == PeelMode::Approx && a.cores.is_some() {
        return Err(Failure::Usage(
            "--cores is only available with --mode exact".into(),
        ));
    }
    par::install(a.common.threads, move || run_peel(a))
}

fn run_peel(a: PeelArgs) -> Outcome {
    let mut report = RunReport::new("peel", &a.common.input);
    report.k = Some(a.k);
    let cfg = OrientConfig::new(a.order);
    let lg = load(&a.common.input, &mut report)?;
    let dg = oriented(&lg, &cfg, &mut report)?;
    let (out, secs) = timed(|| match a.mode {
        PeelMode::Exact => peel_exact(&lg.graph, &dg, a.k),
        PeelMode::Approx => peel_approx(&lg.graph, &dg, a.k, a.eps),
    });
    let out = out?;
    report.seconds.compute = secs;
    if let (Some(path), Some(core)) = (&a.cores, &out.core) {
        write_per_vertex(path, &lg.labels, core)?;
    }
    report.result = json!({
        "mode": if a.mode == PeelMode::Exact { "exact" } else { "approx" },
        "rho": out.rho,
        "density": out.best_density,
        "best_round": out.best_round,
        "total_cliques": out.total_cliques,
        "dense_vertices": out.dense_vertices.len(),
    });
    println!("rho={} density={}", out.rho, out.best_density);
    finish(&report, a.common.json.as_deref())
}

pub fn orient(a: OrientArgs) -> Outcome {
    par::install(a.common.threads, move || run_orient(a))
}

fn run_orient(a: OrientArgs) -> Outcome {
    let mut report = RunReport::new("orient", &a.common.input);
    let cfg = orient_config(&a.order)?;
    let lg = load(&a.common.input, &mut report)?;
    let dg = oriented(&lg, &cfg, &mut report)?;
    let max_out = dg.max_out_degree();
    if let Some(path) = &a.output {
        let mut out = create(path)?;
        for v in dg.ranking().order() {
            writeln!(out, "{}", lg.labels[v as usize])?;
        }
        out.flush()?;
    }
    report.result = json!({ "max_out_degree": max_out });
    println!("max_out_degree={max_out}");
    finish(&report, a.common.json.as_deref())
}

pub fn oracle(a: OracleArgs) -> Outcome {
    let file =
        File::open(&a.input).with_context(|| format!("cannot open {}", a.input.display()))?;
    let g = parse_edge_list(BufReader::new(file))?.graph;
    println!("cliques={}", oracle::brute_force_count(&g, a.k)?.total);
    if g.n() <= oracle::LIMITS.max_n_subsets {
        println!("arboricity={}", oracle::exact_arboricity(&g)?);
        println!("densest={}", oracle::exact_densest(&g, a.k)?.density());
        let shared = oracle::shared_pairs(&g, a.k)?;
        let tail: Vec<String> = shared.iter().skip(2).map(u64::to_string).collect();
        println!("shared_pairs={}", tail.join(","));
    }
    Ok(())
}
