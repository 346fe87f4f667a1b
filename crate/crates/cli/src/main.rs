//! `rvx`: command-line front end for the k-vertex-rainbow index tools.

mod input;
mod report;

use std::path::PathBuf;
use std::process::ExitCode;

use anyhow::{bail, Context, Result};
use clap::{Args, Parser, Subcommand, ValueEnum};
use rvx_core::harness::{
    cache_key, cache_load, ng_sweep, ng_sweep_graphs, run_suite, spot_check, t_search, t_search_graphs,
    with_jobs, Evaluator, RvxCache, Status, Suite,
};
use rvx_core::{
    is_k_rainbow_coloring, parse_graph6, rvx_lower_bound, sdiam, steiner_eccentricity, write_edge_list,
    write_graph6, Family, Graph, RainbowCheck, RvxOutcome, RvxSolver, VertexColoring,
};
use serde_json::{json, Value};

use input::{read_graph6_lines, read_text, GraphSource, InputInfo};
use report::{claim_rows, claim_summaries, Format, Report, Table};

#[derive(Parser)]
#[command(name = "rvx", version, about = "Exact k-vertex-rainbow index and Steiner tools for small graphs")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Compute rvx_k of one graph
    Compute(ComputeArgs),
    /// Steiner k-diameter and k-eccentricities of one graph
    Sdiam(SdiamArgs),
    /// Check whether a coloring is k-vertex-rainbow
    Verify(VerifyArgs),
    /// Print a member of a named family
    Family(FamilyArgs),
    /// Exhaustive sweeps over small graphs
    Sweep {
        #[command(subcommand)]
        kind: SweepKind,
    },
    /// Check the known bounds instance by instance
    Claims(ClaimsArgs),
    /// Recompute a random sample of a cache file
    CacheCheck(CacheCheckArgs),
}

#[derive(Args)]
struct Output {
    #[arg(long, value_enum, default_value_t = Format::Text)]
    format: Format,
}

#[derive(Args)]
struct ComputeArgs {
    #[command(flatten)]
    source: GraphSource,
    #[arg(long)]
    k: usize,
    /// Give up above this many colors
    #[arg(long)]
    max_colors: Option<usize>,
    /// Persistent value cache
    #[arg(long, env = "RVX_CACHE")]
    cache: Option<PathBuf>,
    /// Attach one rainbow tree per k-subset
    #[arg(long)]
    certificates: bool,
    #[command(flatten)]
    out: Output,
}

#[derive(Args)]
struct SdiamArgs {
    #[command(flatten)]
    source: GraphSource,
    #[arg(long)]
    k: usize,
    #[command(flatten)]
    out: Output,
}

#[derive(Args)]
struct VerifyArgs {
    #[command(flatten)]
    source: GraphSource,
    /// Comma-separated color per vertex
    #[arg(long)]
    colors: String,
    #[arg(long)]
    k: usize,
    #[command(flatten)]
    out: Output,
}

#[derive(Clone, Copy, ValueEnum)]
enum Emit {
    G6,
    Edges,
}

#[derive(Args)]
struct FamilyArgs {
    /// NAME[:PARAMS], e.g. `clique_chain:3`
    spec: String,
    #[arg(long, value_enum, default_value_t = Emit::G6)]
    emit: Emit,
    /// Wrap the graph in a report instead of printing it raw
    #[arg(long, value_enum)]
    format: Option<Format>,
}

#[derive(Args)]
struct SweepCommon {
    #[arg(long)]
    n: usize,
    /// graph6 lines to sweep instead of the built-in enumeration; `-` reads stdin
    #[arg(long, value_name = "FILE")]
    input: Option<String>,
    #[arg(long)]
    jobs: Option<usize>,
    #[arg(long, env = "RVX_CACHE")]
    cache: Option<PathBuf>,
    /// Exit with status 2 when an instance is refuted
    #[arg(long)]
    strict: bool,
    #[command(flatten)]
    out: Output,
}

#[derive(Subcommand)]
enum SweepKind {
    /// rvx_3(G) + rvx_3(complement) over connected, co-connected graphs
    Ng(SweepCommon),
    /// Fewest edges of an order-n graph with rvx_k <= l
    Tsearch {
        #[command(flatten)]
        common: SweepCommon,
        #[arg(long, default_value_t = 3)]
        k: usize,
        /// Every l in 2..=n-2 when omitted
        #[arg(long)]
        ell: Option<usize>,
    },
}

#[derive(Args)]
struct ClaimsArgs {
    #[arg(long, default_value = "all")]
    suite: String,
    /// Check a single order
    #[arg(long, conflicts_with = "n_max")]
    n: Option<usize>,
    /// Largest order to check
    #[arg(long)]
    n_max: Option<usize>,
    #[arg(long)]
    jobs: Option<usize>,
    #[arg(long, env = "RVX_CACHE")]
    cache: Option<PathBuf>,
    #[arg(long)]
    strict: bool,
    #[command(flatten)]
    out: Output,
}

#[derive(Args)]
struct CacheCheckArgs {
    #[arg(long, env = "RVX_CACHE")]
    cache: PathBuf,
    #[arg(long, default_value_t = 0.01)]
    fraction: f64,
    #[arg(long, default_value_t = 0)]
    seed: u64,
    #[arg(long)]
    strict: bool,
    #[command(flatten)]
    out: Output,
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            use clap::error::ErrorKind;
            if matches!(e.kind(), ErrorKind::DisplayHelp | ErrorKind::DisplayVersion) {
                print!("{e}");
                return ExitCode::SUCCESS;
            }
            if e.kind() == ErrorKind::DisplayHelpOnMissingArgumentOrSubcommand {
                eprint!("{e}");
                return ExitCode::from(1);
            }
            let text = e.to_string();
            let line: Vec<&str> = text
                .lines()
                .map(str::trim)
                .take_while(|l| !l.starts_with("Usage:") && !l.starts_with("For more information"))
                .filter(|l| !l.is_empty() && !l.starts_with("tip:"))
                .collect();
            eprintln!("{}", line.join(" "));
            return ExitCode::from(1);
        }
    };
    match run(cli) {
        Ok(code) => code,
        Err(e) => {
            eprintln!("error: {e:#}");
            ExitCode::from(1)
        }
    }
}

fn run(cli: Cli) -> Result<ExitCode> {
    let (report, format, strict) = match cli.command {
        Command::Compute(a) => (compute(&a)?, a.out.format, false),
        Command::Sdiam(a) => (steiner(&a)?, a.out.format, false),
        Command::Verify(a) => (verify(&a)?, a.out.format, false),
        Command::Family(a) => match family(&a)? {
            Some(r) => (r, a.format.unwrap_or(Format::Text), false),
            None => return Ok(ExitCode::SUCCESS),
        },
        Command::Sweep { kind: SweepKind::Ng(c) } => (sweep_ng(&c)?, c.out.format, c.strict),
        Command::Sweep { kind: SweepKind::Tsearch { common, k, ell } } => {
            (sweep_t(&common, k, ell)?, common.out.format, common.strict)
        }
        Command::Claims(a) => (claims(&a)?, a.out.format, a.strict),
        Command::CacheCheck(a) => {
            let (report, mismatch) = cache_check(&a)?;
            report.emit(a.out.format)?;
            return Ok(if a.strict && mismatch { ExitCode::from(2) } else { ExitCode::SUCCESS });
        }
    };
    report.emit(format)?;
    Ok(if strict && report.refuted() { ExitCode::from(2) } else { ExitCode::SUCCESS })
}

fn open_cache(path: &Option<PathBuf>) -> Result<RvxCache> {
    match path {
        Some(p) => RvxCache::open(p).with_context(|| format!("cache {:?}", p.display().to_string())),
        None => Ok(RvxCache::in_memory()),
    }
}

fn compute(a: &ComputeArgs) -> Result<Report> {
    let (g, info) = a.source.load()?;
    let solver = RvxSolver::new(&g, a.k)?.max_colors(a.max_colors).certificates(a.certificates);
    let mut cache = open_cache(&a.cache)?;
    let key = cache_key(&g)?;
    let lower_bound = rvx_lower_bound(&g, a.k)?;

    let mut report = Report::new("compute");
    report.input = serde_json::to_value(&info)?;
    report.params = json!({
        "k": a.k,
        "max_colors": a.max_colors,
        "certificates": a.certificates,
        "cache": a.cache.is_some(),
    });

    let cached = if a.certificates { None } else { cache.get(&key, a.k) };
    if let Some(value) = cached {
        let above = a.max_colors.is_some_and(|m| value > m);
        report.result = json!({
            "k": a.k,
            "value": (!above).then_some(value),
            "above_limit": above,
            "lower_bound": lower_bound,
            "witness": null,
            "cached": true,
        });
        report.stats = json!({"colorings_examined": 0, "subsets_checked": 0});
        return Ok(report);
    }

    let outcome = solver.solve()?;
    let stats = outcome.stats();
    report.stats = serde_json::to_value(stats)?;
    report.result = match outcome {
        RvxOutcome::Exact(r) => {
            cache.insert(key, a.k, r.value);
            cache.flush()?;
            let mut result = json!({
                "k": a.k,
                "value": r.value,
                "above_limit": false,
                "lower_bound": lower_bound,
                "witness": r.witness.to_string(),
                "cached": false,
            });
            if let Some(certs) = r.certificates {
                let trees: Vec<Value> = certs
                    .iter()
                    .map(|(s, t)| json!({"terminals": s, "edges": t.edges, "internal": t.internal}))
                    .collect();
                result["certificates"] = Value::Array(trees);
            }
            result
        }
        RvxOutcome::AboveLimit { k, max_colors, .. } => json!({
            "k": k,
            "value": null,
            "above_limit": true,
            "max_colors": max_colors,
            "lower_bound": lower_bound,
            "witness": null,
            "cached": false,
        }),
    };
    Ok(report)
}

fn steiner(a: &SdiamArgs) -> Result<Report> {
    let (g, info) = a.source.load()?;
    let mut report = Report::new("sdiam");
    report.input = serde_json::to_value(&info)?;
    report.params = json!({"k": a.k});
    let ecc = (0..g.order()).map(|v| steiner_eccentricity(&g, a.k, v)).collect::<rvx_core::Result<Vec<_>>>()?;
    report.result = json!({"k": a.k, "sdiam": sdiam(&g, a.k)?, "eccentricities": ecc});
    Ok(report)
}

fn verify(a: &VerifyArgs) -> Result<Report> {
    let (g, info) = a.source.load()?;
    let coloring: VertexColoring = a.colors.parse().with_context(|| format!("--colors {:?}", a.colors))?;
    let check = is_k_rainbow_coloring(&g, &coloring, a.k)?;
    let mut report = Report::new("verify");
    report.input = serde_json::to_value(&info)?;
    report.params = json!({"k": a.k, "colors": coloring.to_string()});
    report.result = json!({
        "k": a.k,
        "colors_used": coloring.colors_used(),
        "accepted": check.is_accepted(),
        "failing_subset": match check {
            RainbowCheck::Accepted => Value::Null,
            RainbowCheck::Failed(s) => serde_json::to_value(s)?,
        },
    });
    Ok(report)
}

fn family(a: &FamilyArgs) -> Result<Option<Report>> {
    let fam = Family::parse(&a.spec).with_context(|| format!("family {:?}", a.spec))?;
    let g = fam.build().with_context(|| format!("family {:?}", a.spec))?;
    let emitted = match a.emit {
        Emit::G6 => write_graph6(&g)? + "\n",
        Emit::Edges => write_edge_list(&g),
    };
    let Some(_) = a.format else {
        print!("{emitted}");
        return Ok(None);
    };
    let mut report = Report::new("family");
    report.input = serde_json::to_value(InputInfo::new("family", fam.to_string(), &g)?)?;
    report.params = json!({"spec": a.spec, "emit": match a.emit { Emit::G6 => "g6", Emit::Edges => "edges" }});
    let edges: Vec<(usize, usize)> = g.edges().collect();
    report.result = json!({"graph6": write_graph6(&g)?, "order": g.order(), "edges": edges});
    Ok(Some(report))
}

fn sweep_input(c: &SweepCommon) -> Result<Option<Vec<Graph>>> {
    let Some(path) = &c.input else { return Ok(None) };
    let text = read_text(path)?;
    Ok(Some(read_graph6_lines(path, &text)?))
}

fn evaluator_stats(eval: &Evaluator) -> Result<Value> {
    Ok(serde_json::to_value(eval.stats())?)
}

fn sweep_ng(c: &SweepCommon) -> Result<Report> {
    let graphs = sweep_input(c)?;
    let eval = Evaluator::new(open_cache(&c.cache)?);
    let result = with_jobs(c.jobs, || match graphs {
        Some(gs) => ng_sweep_graphs(c.n, gs, &eval),
        None => ng_sweep(c.n, &eval),
    })?;
    eval.flush()?;
    let mut report = Report::new("sweep ng");
    report.input = json!({"source": if c.input.is_some() { "file" } else { "enumeration" }, "spec": c.input});
    report.params = json!({"n": c.n, "k": 3});
    report.claims = claim_rows(&result.reports()?);
    report.table = Some(Table {
        header: vec!["graph6", "complement_graph6", "rvx", "rvx_complement", "sum"],
        rows: result
            .pairs
            .iter()
            .map(|p| {
                vec![p.graph6.clone(), p.complement_graph6.clone(), p.rvx.to_string(), p.rvx_complement.to_string(), p.sum.to_string()]
            })
            .collect(),
    });
    report.result = serde_json::to_value(&result)?;
    report.stats = evaluator_stats(&eval)?;
    Ok(report)
}

fn sweep_t(c: &SweepCommon, k: usize, ell: Option<usize>) -> Result<Report> {
    let graphs = sweep_input(c)?;
    if c.n < 4 {
        bail!("--n {}: tsearch needs n >= 4", c.n);
    }
    let ells: Vec<usize> = match ell {
        Some(l) => vec![l],
        None => (2..=c.n - 2).collect(),
    };
    let eval = Evaluator::new(open_cache(&c.cache)?);
    let results = with_jobs(c.jobs, || {
        ells.iter()
            .map(|&l| match &graphs {
                Some(gs) => t_search_graphs(c.n, k, l, gs.iter().cloned(), &eval),
                None => t_search(c.n, k, l, &eval),
            })
            .collect::<rvx_core::Result<Vec<_>>>()
    })?;
    eval.flush()?;

    let mut report = Report::new("sweep tsearch");
    report.input = json!({"source": if c.input.is_some() { "file" } else { "enumeration" }, "spec": c.input});
    report.params = json!({"n": c.n, "k": k, "ell": ell});
    let show = |v: Option<String>| v.unwrap_or_else(|| "none".into());
    for r in &results {
        let params = format!("n={},k={},l={}", r.n, r.k, r.ell);
        let t = show(r.t_value.map(|t| t.to_string()));
        let mut push = |id: &str, kind, expected: String, status| {
            report.claims.push(report::ClaimRow {
                id: id.into(),
                kind,
                params: params.clone(),
                expected,
                computed: t.clone(),
                status,
                counterexample: None,
            })
        };
        use rvx_core::harness::ClaimKind::{Hard, Reported};
        push("thm3-lower", Hard, format!(">= {}", r.lower_bound), r.lower_status);
        push("thm3-upper", Hard, format!("<= {}", show(r.upper_bound_proof.map(|u| u.to_string()))), r.upper_proof_status);
        push(
            "thm3-upper-statement",
            Reported,
            format!("<= {}", show(r.upper_bound_statement.map(|u| u.to_string()))),
            r.upper_statement_status,
        );
    }
    report.table = Some(Table {
        header: vec!["n", "k", "ell", "t", "lower_bound", "upper_bound_proof", "upper_bound_statement", "graphs_examined", "extremal"],
        rows: results
            .iter()
            .map(|r| {
                vec![
                    r.n.to_string(),
                    r.k.to_string(),
                    r.ell.to_string(),
                    show(r.t_value.map(|t| t.to_string())),
                    r.lower_bound.to_string(),
                    show(r.upper_bound_proof.map(|u| u.to_string())),
                    show(r.upper_bound_statement.map(|u| u.to_string())),
                    r.graphs_examined.to_string(),
                    r.extremal.join(" "),
                ]
            })
            .collect(),
    });
    report.result = json!({"searches": results});
    report.stats = evaluator_stats(&eval)?;
    Ok(report)
}

fn claims(a: &ClaimsArgs) -> Result<Report> {
    let suite: Suite = a.suite.parse().with_context(|| format!("--suite {:?}", a.suite))?;
    let (min, max) = match (a.n, a.n_max) {
        (Some(n), _) => (Some(n), Some(n)),
        (None, m) => (None, m),
    };
    let eval = Evaluator::new(open_cache(&a.cache)?);
    let reports = run_suite(suite, min, max, &eval, a.jobs)?;
    eval.flush()?;
    let mut report = Report::new("claims");
    report.input = json!({"source": "suite", "spec": suite.to_string()});
    report.params = json!({"suite": suite.to_string(), "n": a.n, "n_max": a.n_max, "strict": a.strict});
    report.claims = claim_rows(&reports);
    let summaries = claim_summaries(&reports);
    let refuted_hard = reports
        .iter()
        .filter(|r| r.kind == rvx_core::harness::ClaimKind::Hard)
        .map(|r| r.count(Status::Refuted))
        .sum::<usize>();
    report.result = json!({
        "instances": report.claims.len(),
        "refuted": report.claims.iter().filter(|c| c.status == Status::Refuted).count(),
        "refuted_hard": refuted_hard,
        "claims": summaries,
    });
    report.table = Some(Table {
        header: vec!["id", "kind", "params", "expected", "computed", "status", "counterexample_graph6", "counterexample_k"],
        rows: report
            .claims
            .iter()
            .map(|c| {
                let cx = c.counterexample.as_ref();
                vec![
                    c.id.clone(),
                    json_word(&c.kind),
                    c.params.clone(),
                    c.expected.clone(),
                    c.computed.clone(),
                    json_word(&c.status),
                    cx.map(|x| x.graph6.clone()).unwrap_or_default(),
                    cx.map(|x| x.k.to_string()).unwrap_or_default(),
                ]
            })
            .collect(),
    });
    report.stats = evaluator_stats(&eval)?;
    Ok(report)
}

fn json_word<T: serde::Serialize>(v: &T) -> String {
    match serde_json::to_value(v) {
        Ok(Value::String(s)) => s,
        Ok(other) => other.to_string(),
        Err(_) => String::new(),
    }
}

fn cache_check(a: &CacheCheckArgs) -> Result<(Report, bool)> {
    if !(a.fraction > 0.0 && a.fraction <= 1.0) {
        bail!("--fraction {}: expected a value in (0, 1]", a.fraction);
    }
    let path = a.cache.display().to_string();
    let entries = cache_load(&a.cache).with_context(|| format!("cache {path:?}"))?;
    let checks = spot_check(&entries, a.fraction, a.seed)?;
    let mismatches: Vec<_> = checks.iter().filter(|c| !c.matches()).collect();
    let mut report = Report::new("cache-check");
    report.input = json!({"source": "cache", "entries": entries.len()});
    report.params = json!({"fraction": a.fraction, "seed": a.seed});
    report.result = json!({
        "checked": checks.len(),
        "mismatches": mismatches.len(),
        "samples": checks.iter().map(|c| json!({
            "graph6": c.entry.graph6, "k": c.entry.k, "stored": c.entry.rvx, "recomputed": c.recomputed,
        })).collect::<Vec<_>>(),
    });
    report.table = Some(Table {
        header: vec!["graph6", "k", "stored", "recomputed", "match"],
        rows: checks
            .iter()
            .map(|c| {
                vec![c.entry.graph6.clone(), c.entry.k.to_string(), c.entry.rvx.to_string(), c.recomputed.to_string(), c.matches().to_string()]
            })
            .collect(),
    });
    for c in &checks {
        // a mismatch is a refuted cache entry
        if !c.matches() {
            let g = parse_graph6(c.entry.graph6.as_bytes())?;
            report.claims.push(report::ClaimRow {
                id: "cache".into(),
                kind: rvx_core::harness::ClaimKind::Hard,
                params: format!("G={},k={}", c.entry.graph6, c.entry.k),
                expected: c.entry.rvx.to_string(),
                computed: c.recomputed.to_string(),
                status: Status::Refuted,
                counterexample: Some(rvx_core::harness::Counterexample::for_value(&g, c.entry.k, c.recomputed)?),
            });
        }
    }
    Ok((report, !mismatches.is_empty()))
}
