use std::io::Write;
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::error::ErrorKind;
use clap::{Args, CommandFactory, Parser, Subcommand, ValueEnum};

use vcspace::counting::count_solutions;
use vcspace::experiments::{self, RunConfig};
use vcspace::graph::{check_bipartition, generate_random_bipartite, EnsembleParams};
use vcspace::io::{format_graph, format_rsg, read_graph, GraphFile};
use vcspace::ke::{grow_all, EdgeOrder};
use vcspace::meanfield::SizeRatio;
use vcspace::oracle::brute_force_min_covers;
use vcspace::rsg::{build_rsg_bipartite, build_rsg_bipartite_core};
use vcspace::{ReducedSolutionGraph, Result};

#[derive(Parser)]
#[command(name = "vcspace", version, about = "Minimum vertex cover solution spaces of random bipartite graphs")]
struct Cli {
    #[command(subcommand)]
    cmd: Cmd,
}

#[derive(Subcommand)]
enum Cmd {
    /// Sample a random bipartite graph.
    Gen {
        #[command(flatten)]
        size: SizeArgs,
        /// Whole-graph mean degree.
        #[arg(long)]
        c: f64,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Build the reduced solution graph of a graph file.
    Rsg {
        graph: PathBuf,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Count minimum covers and report entropies.
    Entropy { graph: PathBuf },
    /// Run an ensemble sweep and write CSVs.
    Sweep {
        #[command(flatten)]
        size: SizeArgs,
        #[command(flatten)]
        grid: GridArgs,
        #[arg(long, default_value_t = 100)]
        instances: usize,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        /// Big-ratio cut on the positive-backbone fraction.
        #[arg(long, default_value_t = experiments::DEFAULT_THRESHOLD)]
        threshold: f64,
        /// Directory for instances.csv and aggregate.csv; aggregate goes to
        /// stdout when omitted.
        #[arg(long)]
        out: Option<PathBuf>,
        #[arg(long, value_enum, default_value_t = Format::Csv)]
        format: Format,
    },
    /// Mean-field curve over a grid of mean degrees.
    Theory {
        #[arg(long)]
        ratio: SizeRatio,
        #[command(flatten)]
        grid: GridArgs,
        #[arg(long)]
        out: Option<PathBuf>,
        #[arg(long, value_enum, default_value_t = Format::Csv)]
        format: Format,
    },
    /// Grow a König–Egerváry subgraph of a general graph.
    Ke {
        graph: PathBuf,
        #[arg(long, value_enum, default_value_t = Order::Lex)]
        order: Order,
        #[arg(long, default_value_t = 0)]
        order_seed: u64,
        /// Where to write the final RSG.
        #[arg(long)]
        rsg_out: Option<PathBuf>,
    },
    /// Exhaustive minimum covers of a small graph.
    Oracle {
        graph: PathBuf,
        #[arg(long, default_value_t = 1 << 16)]
        limit: usize,
    },
}

#[derive(Args)]
struct SizeArgs {
    #[arg(long, conflicts_with_all = ["ratio", "n"])]
    n1: Option<usize>,
    #[arg(long, conflicts_with_all = ["ratio", "n"])]
    n2: Option<usize>,
    /// Side sizes as `n1:n2`, used with --n.
    #[arg(long)]
    ratio: Option<SizeRatio>,
    /// Total node count when --ratio is given.
    #[arg(long)]
    n: Option<usize>,
}

#[derive(Args)]
struct GridArgs {
    /// Mean degrees, comma separated.
    #[arg(long, value_delimiter = ',', conflicts_with_all = ["c_from", "c_to", "c_step"])]
    c: Vec<f64>,
    #[arg(long, requires_all = ["c_to", "c_step"])]
    c_from: Option<f64>,
    #[arg(long, requires = "c_from")]
    c_to: Option<f64>,
    #[arg(long, requires = "c_from")]
    c_step: Option<f64>,
}

#[derive(Clone, Copy, ValueEnum)]
enum Format {
    Csv,
}

#[derive(Clone, Copy, ValueEnum)]
enum Order {
    Lex,
    Shuffle,
}

enum Sizes {
    Explicit(usize, usize),
    Ratio(SizeRatio, usize),
}

fn usage_error(kind: ErrorKind, msg: &str) -> ! {
    Cli::command().error(kind, msg).exit()
}

impl SizeArgs {
    fn resolve(&self) -> Sizes {
        match (self.n1, self.n2, self.ratio, self.n) {
            (Some(a), Some(b), None, None) => Sizes::Explicit(a, b),
            (None, None, Some(r), Some(n)) => Sizes::Ratio(r, n),
            _ => usage_error(
                ErrorKind::MissingRequiredArgument,
                "give sizes as --n1 and --n2, or as --ratio and --n",
            ),
        }
    }
}

impl GridArgs {
    fn resolve(&self) -> Result<Vec<f64>> {
        match (self.c_from, self.c_to, self.c_step) {
            (Some(a), Some(b), Some(s)) => experiments::c_grid(a, b, s),
            _ if !self.c.is_empty() => Ok(self.c.clone()),
            _ => usage_error(
                ErrorKind::MissingRequiredArgument,
                "give mean degrees with --c, or with --c-from, --c-to and --c-step",
            ),
        }
    }
}

fn emit(out: Option<&Path>, text: &str) -> Result<()> {
    match out {
        Some(p) => std::fs::write(p, text)?,
        None => std::io::stdout().lock().write_all(text.as_bytes())?,
    }
    Ok(())
}

/// Exact RSG: bipartite inputs directly, otherwise via the bipartite core.
fn rsg_of(file: &GraphFile) -> Result<ReducedSolutionGraph> {
    if let Some(p) = &file.partition {
        return build_rsg_bipartite(&file.graph, p);
    }
    match check_bipartition(&file.graph) {
        Ok(p) => build_rsg_bipartite(&file.graph, &p),
        Err(_) => build_rsg_bipartite_core(&file.graph),
    }
}

fn run(cmd: Cmd) -> Result<()> {
    match cmd {
        Cmd::Gen { size, c, seed, out } => {
            let params = match size.resolve() {
                Sizes::Explicit(n1, n2) => EnsembleParams::new(n1, n2, c, seed),
                Sizes::Ratio(r, n) => EnsembleParams::from_ratio(r.n1, r.n2, n, c, seed),
            };
            let (g, part) = generate_random_bipartite(&params)?;
            let text = format!(
                "# random bipartite c={} seed={seed}\n{}",
                experiments::fmt_sig(c),
                format_graph(&g, Some(&part))
            );
            emit(out.as_deref(), &text)
        }
        Cmd::Rsg { graph, out } => {
            let rsg = rsg_of(&read_graph(&graph)?)?;
            emit(out.as_deref(), &format_rsg(&rsg))
        }
        Cmd::Entropy { graph } => {
            let file = read_graph(&graph)?;
            let r = count_solutions(&rsg_of(&file)?)?;
            let text = format!(
                "S_n={} h_s={}\nS_c={} h_c={}\n",
                r.solution_count,
                experiments::fmt_sig(r.entropy::<f64>()),
                r.core_count,
                experiments::fmt_sig(r.core_entropy::<f64>())
            );
            emit(None, &text)
        }
        Cmd::Sweep { size, grid, instances, seed, threshold, out, format: Format::Csv } => {
            let c_grid = grid.resolve()?;
            let mut cfg = match size.resolve() {
                Sizes::Explicit(n1, n2) => RunConfig::with_sizes(n1, n2, c_grid, instances, seed)?,
                Sizes::Ratio(r, n) => RunConfig::with_ratio(r, n, c_grid, instances, seed)?,
            };
            cfg.threshold = threshold;
            cfg.validate()?;
            let stats = experiments::run_sweep(&cfg)?;
            match out {
                Some(dir) => experiments::write_sweep(&dir, &cfg, &stats),
                None => experiments::write_aggregate_csv(std::io::stdout().lock(), &cfg, &stats),
            }
        }
        Cmd::Theory { ratio, grid, out, format: Format::Csv } => {
            let c_grid = grid.resolve()?;
            match out {
                Some(p) => experiments::write_theory_csv(std::fs::File::create(p)?, ratio, &c_grid),
                None => experiments::write_theory_csv(std::io::stdout().lock(), ratio, &c_grid),
            }
        }
        Cmd::Ke { graph, order, order_seed, rsg_out } => {
            let file = read_graph(&graph)?;
            let order = match order {
                Order::Lex => EdgeOrder::Lexicographic,
                Order::Shuffle => EdgeOrder::Shuffled(order_seed),
            };
            let state = grow_all(&file.graph, order)?;
            let cert = state.certificate()?;
            let mut text = String::new();
            let mut list = |name: &str, edges: &[(usize, usize)]| {
                text.push_str(&format!("{name} {}\n", edges.len()));
                for (u, v) in edges {
                    text.push_str(&format!("{u} {v}\n"));
                }
            };
            list("accepted", state.accepted());
            list("discarded", state.discarded());
            text.push_str(&format!("contractions {}\n{cert}\n", state.contractions()));
            if let Some(p) = rsg_out {
                std::fs::write(p, format_rsg(state.rsg()))?;
            }
            emit(None, &text)
        }
        Cmd::Oracle { graph, limit } => {
            let g = read_graph(&graph)?.graph;
            let (k, covers) = brute_force_min_covers(&g, limit)?;
            let mut text = format!("min_cover={k} covers={}\n", covers.len());
            for a in covers {
                let ids: Vec<String> = a.covered_nodes().iter().map(usize::to_string).collect();
                text.push_str(&ids.join(" "));
                text.push('\n');
            }
            emit(None, &text)
        }
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli.cmd) {
        Ok(()) => ExitCode::SUCCESS,
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::FAILURE
        }
    }
}
