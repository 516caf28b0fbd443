use std::collections::BTreeSet;
use std::fs;
use std::io::Read;
use std::process::ExitCode;
use std::time::Duration;

use clap::{Parser, Subcommand, ValueEnum};

use dyncolor::budget::{color_apex, color_degenerate, color_no_kt, BudgetError, BudgetMode, Excluded};
use dyncolor::dynamic::{chi_d_within, color_components, verify_dynamic, Coloring};
use dyncolor::enumerate::connected_graphs_between;
use dyncolor::generate::{complete, complete_bipartite, generate, GenKind, GenSpec};
use dyncolor::graph::Graph;
use dyncolor::io::{emit_coloring, emit_edgelist, emit_graph6, parse_coloring, parse_edgelist, parse_graph6};
use dyncolor::k5free::{Colorer, K5FreeError};
use dyncolor::minor::has_minor;
use dyncolor::sweep::sweep;

#[derive(Parser)]
#[command(name = "dyncolor", version, about = "Dynamic colorings of graphs")]
struct Cli {
    /// Time limit in seconds for each exact-solver call.
    #[arg(long, env = "DYNCOLOR_TIME_LIMIT_SECS", default_value_t = 60, global = true)]
    time_limit: u64,
    #[command(subcommand)]
    cmd: Cmd,
}

#[derive(Clone, Copy, ValueEnum)]
enum Format {
    Edgelist,
    Graph6,
}

#[derive(Clone, Copy, ValueEnum)]
enum Algorithm {
    Auto,
    Exact,
    K5free,
    Degenerate,
    Apex,
}

#[derive(Clone, Copy, ValueEnum)]
enum Mode {
    Minor,
    Topological,
}

#[derive(Clone, Copy, ValueEnum)]
enum Target {
    K5,
    K33,
    Kt,
}

#[derive(Subcommand)]
enum Cmd {
    /// Compute a dynamic coloring.
    Color {
        #[arg(long, value_enum, default_value_t = Algorithm::Auto)]
        algorithm: Algorithm,
        /// Degeneracy bound for the degenerate algorithm.
        #[arg(long)]
        k: Option<usize>,
        /// Comma-separated apex vertices.
        #[arg(long, value_delimiter = ',')]
        apex_set: Vec<usize>,
        /// Excluded-minor budget for the degenerate algorithm (with --t).
        #[arg(long, value_enum, requires = "t")]
        mode: Option<Mode>,
        #[arg(long)]
        t: Option<u64>,
        #[arg(long)]
        input: String,
        #[arg(long, value_enum, default_value_t = Format::Edgelist)]
        format: Format,
    },
    /// Print the dynamic chromatic number.
    ChiD {
        #[arg(long)]
        input: String,
        #[arg(long, value_enum, default_value_t = Format::Edgelist)]
        format: Format,
    },
    /// Check a coloring document against a graph.
    Verify {
        #[arg(long)]
        input: String,
        #[arg(long)]
        coloring: String,
        #[arg(long, value_enum, default_value_t = Format::Edgelist)]
        format: Format,
    },
    /// Generate a graph from a seeded family.
    Gen {
        #[arg(long)]
        kind: String,
        #[arg(long, default_value_t = 8)]
        n: usize,
        /// Second size parameter (complete_bipartite).
        #[arg(long)]
        m: Option<usize>,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        #[arg(long, value_enum, default_value_t = Format::Edgelist)]
        format: Format,
    },
    /// Compare the 4-colorer with the exact solver on small graphs.
    Sweep {
        #[arg(long, default_value_t = 6)]
        max_n: usize,
        /// graph6 corpus, one graph per line, instead of enumeration.
        #[arg(long)]
        corpus: Option<String>,
    },
    /// Test for a K5, K3,3 or K_t minor.
    CheckMinor {
        #[arg(long)]
        input: String,
        #[arg(long, value_enum)]
        target: Target,
        #[arg(long)]
        t: Option<usize>,
        #[arg(long, value_enum, default_value_t = Format::Edgelist)]
        format: Format,
    },
}

enum Fail {
    NotColorable(String),
    Input(String),
    Verification(String),
}

impl Fail {
    fn exit(self) -> ExitCode {
        let (code, msg) = match self {
            Fail::NotColorable(m) => (1, m),
            Fail::Input(m) => (2, m),
            Fail::Verification(m) => (3, m),
        };
        eprintln!("error: {msg}");
        ExitCode::from(code)
    }
}

fn input(e: impl ToString) -> Fail {
    Fail::Input(e.to_string())
}

fn read(path: &str) -> Result<String, Fail> {
    if path == "-" {
        let mut s = String::new();
        std::io::stdin().read_to_string(&mut s).map_err(input)?;
        return Ok(s);
    }
    fs::read_to_string(path).map_err(|e| Fail::Input(format!("{path}: {e}")))
}

fn load(path: &str, format: Format) -> Result<Graph, Fail> {
    let text = read(path)?;
    match format {
        Format::Edgelist => parse_edgelist(&text),
        Format::Graph6 => parse_graph6(&text),
    }
    .map_err(|e| Fail::Input(format!("{path}: {e}")))
}

fn budget_fail(e: BudgetError) -> Fail {
    match e {
        BudgetError::Internal(m) => Fail::Verification(m),
        e => input(e),
    }
}

fn k5free_fail(e: K5FreeError) -> Fail {
    match e {
        K5FreeError::NotColorable => Fail::NotColorable("C5 has no dynamic 4-coloring".into()),
        K5FreeError::Internal { reason, .. } => Fail::Verification(reason),
        e => input(e),
    }
}

fn exact_coloring(g: &Graph, limit: Duration) -> Result<Coloring, Fail> {
    chi_d_within(g, limit).map(|(_, c)| c).map_err(input)
}

fn color(g: &Graph, algorithm: Algorithm, opts: &ColorOpts, limit: Duration) -> Result<(Coloring, Vec<String>), Fail> {
    let mut trace = Vec::new();
    let c = match algorithm {
        Algorithm::Exact => color_components(g, |h| exact_coloring(h, limit))?,
        Algorithm::K5free | Algorithm::Auto => {
            let strict = matches!(algorithm, Algorithm::K5free);
            let colorer = Colorer::new().time_limit(limit);
            color_components(g, |h| match colorer.color(h) {
                Ok((c, t)) => {
                    trace.extend(t.steps.iter().map(|s| s.to_string()));
                    Ok(c)
                }
                Err(K5FreeError::NotColorable | K5FreeError::HasK5Minor) if !strict => {
                    trace.push(format!("Exact n={} m={}", h.vertex_count(), h.edge_count()));
                    exact_coloring(h, limit)
                }
                Err(e) => Err(k5free_fail(e)),
            })?
        }
        Algorithm::Degenerate => match (opts.k, opts.mode) {
            (_, Some(mode)) => {
                let t = opts.t.ok_or_else(|| input("--mode needs --t"))?;
                let mode = match mode {
                    Mode::Minor => Excluded::Minor,
                    Mode::Topological => Excluded::TopologicalMinor,
                };
                let mode = BudgetMode::new(mode, t).map_err(input)?;
                color_no_kt(g, mode).map_err(budget_fail)?
            }
            (Some(k), None) => color_degenerate(g, k).map_err(budget_fail)?,
            (None, None) => return Err(input("degenerate needs --k or --mode/--t")),
        },
        Algorithm::Apex => {
            let x: BTreeSet<usize> = opts.apex_set.iter().copied().collect();
            color_apex(g, &x).map_err(budget_fail)?
        }
    };
    let report = verify_dynamic(g, &c);
    if !report.ok {
        return Err(Fail::Verification(format!("output coloring is not dynamic: {report:?}")));
    }
    Ok((c, trace))
}

struct ColorOpts {
    k: Option<usize>,
    apex_set: Vec<usize>,
    mode: Option<Mode>,
    t: Option<u64>,
}

fn run(cli: Cli) -> Result<(), Fail> {
    let limit = Duration::from_secs(cli.time_limit);
    match cli.cmd {
        Cmd::Color { algorithm, k, apex_set, mode, t, input, format } => {
            let g = load(&input, format)?;
            let (c, trace) = color(&g, algorithm, &ColorOpts { k, apex_set, mode, t }, limit)?;
            print!("{}", emit_coloring(&c, &trace));
        }
        Cmd::ChiD { input, format } => {
            let g = load(&input, format)?;
            let (k, _) = chi_d_within(&g, limit).map_err(self::input)?;
            println!("{k}");
        }
        Cmd::Verify { input, coloring, format } => {
            let g = load(&input, format)?;
            let c = parse_coloring(&read(&coloring)?).map_err(|e| Fail::Input(format!("{coloring}: {e}")))?;
            let r = verify_dynamic(&g, &c);
            if !r.ok {
                println!("not dynamic");
                println!("improper edges: {:?}", r.proper_violations);
                println!("unhappy: {:?}", r.unhappy);
                println!("uncolored: {:?}", r.uncolored);
                println!("stray: {:?}", r.stray);
                return Err(Fail::Verification("coloring is not a dynamic coloring".into()));
            }
            println!("ok colors={}", c.colors_used());
        }
        Cmd::Gen { kind, n, m, seed, format } => {
            let kind: GenKind = kind.parse().map_err(self::input)?;
            let mut spec = GenSpec::new(kind, n, seed);
            if let Some(m) = m {
                spec.m = m;
            }
            let g = generate(&spec).map_err(self::input)?;
            match format {
                Format::Edgelist => print!("{}", emit_edgelist(&g)),
                Format::Graph6 => println!("{}", emit_graph6(&g.relabel_dense().0).map_err(self::input)?),
            }
        }
        Cmd::Sweep { max_n, corpus } => {
            let graphs = match corpus {
                Some(path) => read(&path)?
                    .lines()
                    .filter(|l| !l.trim().is_empty())
                    .enumerate()
                    .map(|(i, l)| parse_graph6(l.trim()).map_err(|e| Fail::Input(format!("{path}:{}: {e}", i + 1))))
                    .collect::<Result<Vec<_>, _>>()?,
                None if max_n > 8 => return Err(self::input("exhaustive sweep supports --max-n up to 8")),
                None => connected_graphs_between(3, max_n, None),
            };
            let report = sweep(&graphs, Some(limit));
            print!("{report}");
            if !report.failures().is_empty() {
                return Err(Fail::Verification(format!("{} graphs failed", report.failures().len())));
            }
        }
        Cmd::CheckMinor { input, target, t, format } => {
            let g = load(&input, format)?;
            let h = match target {
                Target::K5 => complete(5),
                Target::K33 => complete_bipartite(3, 3),
                Target::Kt => complete(t.ok_or_else(|| self::input("--target kt needs --t"))?),
            };
            println!("{}", if has_minor(&g, &h) { "yes" } else { "no" });
        }
    }
    Ok(())
}

fn main() -> ExitCode {
    match run(Cli::parse()) {
        Ok(()) => ExitCode::SUCCESS,
        Err(f) => f.exit(),
    }
}
