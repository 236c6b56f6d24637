use std::fs;
use std::io::Write;
use std::path::PathBuf;
use std::process::ExitCode;

use anyhow::{bail, Context, Result};
use clap::{Args, Parser, Subcommand, ValueEnum};
use serde_json::{json, Value};

use lollipop_cli::report::{RunSettings, VerifyReport};
use lollipop_cli::suites::{Cell, Runner, SaturationCell, Suite, SuiteConfig, DEFAULT_CONFIG};
use lollipop_cli::{decode_graph6, encode_graph6};
use lollipop_core::blowup::{
    blowup, decomposition_family_bruteforce, split_family, SplitMode, DEFAULT_DECOMPOSITION_ORDER,
};
use lollipop_core::constructions::{edge_count_formula, lollipop, predicted_extremal, realize, ConstructionSpec};
use lollipop_core::containment::{blowup_contains_with, min_vertex_cover, subgraph_contains_with, DEFAULT_NODE_BUDGET};
use lollipop_core::search::{ex_bruteforce_with, EX_BRUTEFORCE_CAP};
use lollipop_core::{Graph, GraphFamily, Outcome, SearchLimits};

const DEFAULT_SEED: u64 = 0x5eed;

#[derive(Parser)]
#[command(name = "lollipop", version, about = "Extremal graphs for edge blow-ups of lollipops")]
struct Cli {
    #[command(subcommand)]
    command: Command,
    /// Worker threads; 1 runs every search sequentially.
    #[arg(long, global = true, env = "LOLLIPOP_THREADS")]
    threads: Option<usize>,
    /// Node budget per containment search; 0 means unbounded.
    #[arg(long, global = true)]
    budget: Option<u64>,
    #[arg(long, global = true, value_enum, default_value_t = Format::Json)]
    format: Format,
    /// Write output here instead of stdout.
    #[arg(long, global = true)]
    out: Option<PathBuf>,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Graph6,
    Json,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Variant {
    #[value(name = "H")]
    H,
    #[value(name = "HPrime")]
    HPrime,
    #[value(name = "HStar")]
    HStar,
    #[value(name = "Turan")]
    Turan,
    /// Every construction predicted extremal for `--k --l --p` at `--n`.
    #[value(name = "predicted")]
    Predicted,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Mode {
    All,
    Independent,
    /// `χ(H[U]) <= p`, with `p` from `--p`.
    Chi,
}

#[derive(Args, Clone, Default)]
struct Lollipop {
    #[arg(long)]
    k: Option<usize>,
    #[arg(long)]
    l: Option<usize>,
}

impl Lollipop {
    fn get(&self) -> Result<(usize, usize)> {
        match (self.k, self.l) {
            (Some(k), Some(l)) => Ok((k, l)),
            _ => bail!("both --k and --l are required"),
        }
    }
}

#[derive(Subcommand)]
enum Command {
    /// Realize a construction.
    Construct {
        #[arg(long, value_enum, ignore_case = true)]
        variant: Variant,
        #[arg(long)]
        n: usize,
        #[arg(long)]
        p: Option<usize>,
        #[arg(long)]
        q: Option<usize>,
        #[command(flatten)]
        lollipop: Lollipop,
    },
    /// Edge blow-up of a lollipop or of a graph6 base.
    Blowup {
        #[command(flatten)]
        lollipop: Lollipop,
        #[arg(long)]
        p: usize,
        #[arg(long, conflicts_with_all = ["k", "l"])]
        graph6: Option<String>,
    },
    /// Split family of a lollipop or graph6 base.
    SplitFamily {
        #[command(flatten)]
        lollipop: Lollipop,
        #[arg(long, conflicts_with_all = ["k", "l"])]
        graph6: Option<String>,
        #[arg(long, value_enum)]
        mode: Mode,
        #[arg(long)]
        p: Option<usize>,
    },
    /// Minimal decomposition family of the blow-up C_{k,l}^{p+1}, by brute force.
    DecompFamily {
        #[command(flatten)]
        lollipop: Lollipop,
        #[arg(long)]
        p: usize,
        /// Largest candidate order.
        #[arg(long, default_value_t = DEFAULT_DECOMPOSITION_ORDER)]
        max_order: usize,
        /// Defaults to the order of the blow-up.
        #[arg(long)]
        t_max: Option<usize>,
    },
    /// Does a host contain C_{k,l}^{p+1}, or a graph6 pattern?
    Contains {
        /// Host graph in graph6.
        #[arg(long)]
        host: String,
        #[command(flatten)]
        lollipop: Lollipop,
        #[arg(long)]
        p: Option<usize>,
        #[arg(long, conflicts_with_all = ["k", "l", "p"])]
        pattern_graph6: Option<String>,
    },
    /// Exact minimum vertex cover.
    Vc {
        #[command(flatten)]
        lollipop: Lollipop,
        #[arg(long, conflicts_with_all = ["k", "l"])]
        graph6: Option<String>,
    },
    /// Exact Turán number by exhaustive enumeration.
    ExBrute {
        #[arg(long)]
        n: usize,
        #[arg(long)]
        pattern_graph6: Option<String>,
        /// Use the blow-up C_{k,l}^{p+1} as the pattern.
        #[command(flatten)]
        lollipop: Lollipop,
        #[arg(long, conflicts_with = "pattern_graph6")]
        p: Option<usize>,
        #[arg(long, default_value_t = EX_BRUTEFORCE_CAP)]
        cap: usize,
    },
    /// Run verification suites and write a JSON report.
    Verify {
        #[arg(long, value_enum, default_value = "all")]
        suite: Vec<Suite>,
        /// Suite parameter grids; defaults to the built-in grid.
        #[arg(long)]
        config: Option<PathBuf>,
        /// Restrict freeness or saturation to a single cell.
        #[command(flatten)]
        lollipop: Lollipop,
        #[arg(long)]
        p: Option<usize>,
        #[arg(long)]
        n: Option<usize>,
        #[arg(long, default_value_t = DEFAULT_SEED)]
        seed: u64,
        /// Omit wall times so reports are byte-reproducible.
        #[arg(long)]
        no_timing: bool,
    },
}

struct Ctx {
    limits: SearchLimits,
    threads: usize,
    format: Format,
    out: Option<PathBuf>,
}

impl Ctx {
    fn emit(&self, text: &str) -> Result<()> {
        let mut text = text.to_string();
        if !text.ends_with('\n') {
            text.push('\n');
        }
        match &self.out {
            Some(path) => fs::write(path, text).with_context(|| format!("writing {}", path.display())),
            None => {
                std::io::stdout().write_all(text.as_bytes())?;
                Ok(())
            }
        }
    }

    fn emit_json(&self, v: &Value) -> Result<()> {
        self.emit(&serde_json::to_string_pretty(v)?)
    }

    fn emit_graphs(&self, graphs: &[Graph], json: Value) -> Result<()> {
        match self.format {
            Format::Graph6 => self.emit(&graphs.iter().map(encode_graph6).collect::<Vec<_>>().join("\n")),
            Format::Json => self.emit_json(&json),
        }
    }
}

fn parse_graph(text: &str, what: &str) -> Result<Graph> {
    decode_graph6(text.trim_end()).with_context(|| format!("bad {what}"))
}

fn outcome_json<T: serde::Serialize>(o: &Outcome<T>) -> Value {
    match o {
        Outcome::Found(w) => json!({"outcome": "found", "witness": w}),
        Outcome::Absent => json!({"outcome": "absent"}),
        Outcome::Undecided => json!({"outcome": "undecided"}),
    }
}

fn family_graphs(f: &GraphFamily) -> Vec<Graph> {
    f.iter().cloned().collect()
}

fn run(cli: Cli) -> Result<ExitCode> {
    let threads = cli.threads.unwrap_or_else(|| std::thread::available_parallelism().map_or(1, |n| n.get()));
    if threads == 0 {
        bail!("--threads must be at least 1");
    }
    rayon::ThreadPoolBuilder::new()
        .num_threads(threads)
        .build_global()
        .context("configuring the thread pool")?;
    let node_budget = match cli.budget {
        Some(0) => None,
        Some(b) => Some(b),
        None => Some(DEFAULT_NODE_BUDGET),
    };
    let ctx = Ctx {
        limits: SearchLimits {
            node_budget,
            parallel: threads > 1,
        },
        threads,
        format: cli.format,
        out: cli.out,
    };

    match cli.command {
        Command::Construct {
            variant,
            n,
            p,
            q,
            lollipop,
        } => {
            let need = |v: Option<usize>, flag: &str| v.with_context(|| format!("--{flag} is required for this variant"));
            let specs = match variant {
                Variant::H => vec![ConstructionSpec::H {
                    n,
                    p: need(p, "p")?,
                    q: need(q, "q")?,
                }],
                Variant::HPrime => vec![ConstructionSpec::HPrime {
                    n,
                    p: need(p, "p")?,
                    q: need(q, "q")?,
                }],
                Variant::HStar => vec![ConstructionSpec::HStar { n }],
                Variant::Turan => vec![ConstructionSpec::Turan { n, p: need(p, "p")? }],
                Variant::Predicted => {
                    let (k, l) = lollipop.get()?;
                    let pred = predicted_extremal(k, l, need(p, "p")?, n);
                    if pred.specs.is_empty() {
                        bail!("no construction is stated for k={k}, l={l} at these parameters");
                    }
                    pred.specs
                }
            };
            let mut graphs = Vec::new();
            let mut rows = Vec::new();
            for spec in &specs {
                let g = realize(spec)?;
                eprintln!("{spec:?}: {} vertices, {} edges", g.order(), g.edge_count());
                rows.push(json!({
                    "spec": spec,
                    "order": g.order(),
                    "edges": g.edge_count(),
                    "formula_edges": edge_count_formula(spec)?,
                    "graph6": encode_graph6(&g),
                }));
                graphs.push(g);
            }
            ctx.emit_graphs(&graphs, Value::Array(rows))?;
        }
        Command::Blowup { lollipop, p, graph6 } => {
            let base = match graph6 {
                Some(s) => parse_graph(&s, "base graph")?,
                None => {
                    let (k, l) = lollipop.get()?;
                    self::lollipop(k, l)?
                }
            };
            let b = blowup(&base, p)?;
            let json = json!({
                "order": b.graph.order(),
                "edges": b.graph.edge_count(),
                "graph6": encode_graph6(&b.graph),
                "edge_cliques": b.edge_cliques,
            });
            ctx.emit_graphs(&[b.graph], json)?;
        }
        Command::SplitFamily {
            lollipop,
            graph6,
            mode,
            p,
        } => {
            let base = match graph6 {
                Some(s) => parse_graph(&s, "base graph")?,
                None => {
                    let (k, l) = lollipop.get()?;
                    self::lollipop(k, l)?
                }
            };
            let mode = match (mode, p) {
                (Mode::All, _) => SplitMode::All,
                (Mode::Independent, _) => SplitMode::Independent,
                (Mode::Chi, Some(p)) => SplitMode::ChromaticAtMost(p),
                (Mode::Chi, None) => bail!("--mode chi needs --p"),
            };
            let fam = split_family(&base, mode)?;
            let graphs = family_graphs(&fam);
            let json = json!({
                "count": graphs.len(),
                "members": graphs.iter().map(encode_graph6).collect::<Vec<_>>(),
            });
            ctx.emit_graphs(&graphs, json)?;
        }
        Command::DecompFamily {
            lollipop,
            p,
            max_order,
            t_max,
        } => {
            let (k, l) = lollipop.get()?;
            let pattern = blowup(&self::lollipop(k, l)?, p)?.graph;
            let t_max = t_max.unwrap_or(pattern.order());
            let d = decomposition_family_bruteforce(&pattern, p, max_order, t_max, ctx.limits)?;
            if d.is_partial() {
                eprintln!("warning: {} undecided candidates; the family may be incomplete", d.undecided);
            }
            let graphs = family_graphs(&d.family);
            let json = json!({
                "k": k, "l": l, "p": p,
                "max_order": max_order,
                "t_max": t_max,
                "partial": d.is_partial(),
                "undecided": d.undecided,
                "searches": d.searches,
                "members": graphs.iter().map(encode_graph6).collect::<Vec<_>>(),
            });
            ctx.emit_graphs(&graphs, json)?;
        }
        Command::Contains {
            host,
            lollipop,
            p,
            pattern_graph6,
        } => {
            let host = parse_graph(&host, "host")?;
            let result = match pattern_graph6 {
                Some(s) => outcome_json(&subgraph_contains_with(&host, &parse_graph(&s, "pattern")?, ctx.limits)),
                None => {
                    let (k, l) = lollipop.get()?;
                    let p = p.context("--p is required with --k/--l")?;
                    outcome_json(&blowup_contains_with(&host, k, l, p, ctx.limits)?)
                }
            };
            match ctx.format {
                Format::Json => ctx.emit_json(&result)?,
                Format::Graph6 => ctx.emit(result["outcome"].as_str().unwrap_or_default())?,
            }
        }
        Command::Vc { lollipop, graph6 } => {
            let g = match graph6 {
                Some(s) => parse_graph(&s, "graph")?,
                None => {
                    let (k, l) = lollipop.get()?;
                    self::lollipop(k, l)?
                }
            };
            let vc = min_vertex_cover(&g)?;
            match ctx.format {
                Format::Json => ctx.emit_json(&json!(vc))?,
                Format::Graph6 => ctx.emit(&vc.size.to_string())?,
            }
        }
        Command::ExBrute {
            n,
            pattern_graph6,
            lollipop,
            p,
            cap,
        } => {
            let pattern = match pattern_graph6 {
                Some(s) => parse_graph(&s, "pattern")?,
                None => {
                    let (k, l) = lollipop.get()?;
                    let p = p.context("give --pattern-graph6 or --k --l --p")?;
                    blowup(&self::lollipop(k, l)?, p)?.graph
                }
            };
            let r = ex_bruteforce_with(n, &pattern, cap, ctx.limits)?;
            let witnesses = family_graphs(&r.witnesses);
            match ctx.format {
                Format::Json => ctx.emit_json(&json!({
                    "n": n,
                    "pattern_graph6": encode_graph6(&pattern),
                    "max_edges": r.max_edges,
                    "exact": r.is_exact(),
                    "undecided": r.undecided,
                    "witnesses": witnesses.iter().map(encode_graph6).collect::<Vec<_>>(),
                }))?,
                Format::Graph6 => {
                    let mut lines = vec![format!("max_edges {}", r.max_edges)];
                    lines.extend(witnesses.iter().map(encode_graph6));
                    ctx.emit(&lines.join("\n"))?;
                }
            }
        }
        Command::Verify {
            suite,
            config,
            lollipop,
            p,
            n,
            seed,
            no_timing,
        } => return verify(&ctx, suite, config, lollipop, p, n, seed, no_timing),
    }
    Ok(ExitCode::SUCCESS)
}

#[allow(clippy::too_many_arguments)]
fn verify(
    ctx: &Ctx,
    suites: Vec<Suite>,
    config: Option<PathBuf>,
    lollipop: Lollipop,
    p: Option<usize>,
    n: Option<usize>,
    seed: u64,
    no_timing: bool,
) -> Result<ExitCode> {
    if ctx.format != Format::Json {
        bail!("verify writes JSON reports; --format graph6 is not supported");
    }
    let (text, source) = match &config {
        Some(path) => (
            fs::read_to_string(path).with_context(|| format!("reading {}", path.display()))?,
            path.display().to_string(),
        ),
        None => (DEFAULT_CONFIG.to_string(), "built-in".to_string()),
    };
    let cfg: SuiteConfig = serde_json::from_str(&text).with_context(|| format!("parsing suite config {source}"))?;

    let single = match (lollipop.k, lollipop.l, p, n) {
        (None, None, None, None) => None,
        (Some(k), Some(l), Some(p), Some(n)) => Some(Cell { k, l, p, n }),
        _ => bail!("a single cell needs all of --k --l --p --n"),
    };
    let mut selected: Vec<Suite> = Vec::new();
    for s in suites {
        let expand = if s == Suite::All { Suite::EACH.to_vec() } else { vec![s] };
        for e in expand {
            if !selected.contains(&e) {
                selected.push(e);
            }
        }
    }
    if single.is_some() && selected.iter().any(|s| !matches!(s, Suite::Freeness | Suite::Saturation)) {
        bail!("--k --l --p --n select a cell for the freeness and saturation suites only");
    }

    let runner = Runner {
        limits: ctx.limits,
        seed,
        timing: !no_timing,
    };
    let mut reports = Vec::new();
    for s in selected {
        let report = match s {
            Suite::Freeness => match single {
                Some(cell) => runner.freeness(&[cell]),
                None => runner.freeness(&cfg.freeness.cells),
            },
            Suite::Formulas => runner.formulas(&cfg.formulas),
            Suite::Families => runner.families(&cfg.families),
            Suite::OracleEquivalence => runner.oracle_equivalence(&cfg.oracle_equivalence),
            Suite::Saturation => match single {
                Some(cell) => {
                    let pred = predicted_extremal(cell.k, cell.l, cell.p, cell.n);
                    let cells: Vec<SaturationCell> = pred
                        .specs
                        .into_iter()
                        .map(|host| SaturationCell {
                            host,
                            k: cell.k,
                            l: cell.l,
                            p: cell.p,
                        })
                        .collect();
                    if cells.is_empty() {
                        bail!("no construction is stated for this cell");
                    }
                    runner.saturation(&cells)
                }
                None => runner.saturation(&cfg.saturation.cells),
            },
            Suite::All => unreachable!("expanded above"),
        };
        eprintln!(
            "{}: {} pass, {} fail, {} undecided",
            report.suite, report.summary.pass, report.summary.fail, report.summary.undecided
        );
        reports.push(report);
    }
    let settings = RunSettings {
        seed,
        threads: ctx.threads,
        node_budget: ctx.limits.node_budget,
        config: source,
        timing: !no_timing,
    };
    let report = VerifyReport::new(settings, reports);
    ctx.emit(&serde_json::to_string_pretty(&report)?)?;
    Ok(if report.passed() {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    })
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli) {
        Ok(code) => code,
        Err(e) => {
            eprintln!("error: {e:#}");
            ExitCode::from(2)
        }
    }
}
