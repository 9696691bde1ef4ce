//! `dagx`: analyze, generate and verify reduced DAGs from the command line.
//!
//! Exit codes: 0 success, 1 internal error, 2 input error, 3 validation failure.

mod analysis;

use std::fs;
use std::io::{self, Write};
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use anyhow::Context;
use clap::{Args, Parser, Subcommand, ValueEnum};

use dagx::boxes::{directed_intersection_graph, extremal_box_family, transverse_violations};
use dagx::generators::{extremal_dag, extremal_for, random_dag, turan_dag, ExtremalSpec};
use dagx::harness::{self, Claim, VerifyConfig, HEAVY_MAX_N, LIGHT_MAX_N};
use dagx::io::{parse_box_csv, parse_edge_list, write_box_csv, write_edge_list};
use dagx::predicates::{transitive_closure, DEFAULT_PATH_CAP};
use dagx::Dag;

use crate::analysis::analyze;

const DEFAULT_SEED: u64 = 0x5eed;

#[derive(Parser)]
#[command(name = "dagx", version, about = "Reduced DAGs, Turán-type edge bounds and box intersection graphs")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Levels, class membership and edge bound of an edge-list graph.
    Analyze {
        path: PathBuf,
        #[arg(long, value_enum, default_value_t = Format::Text)]
        format: Format,
        #[arg(long, default_value_t = DEFAULT_PATH_CAP)]
        path_cap: usize,
    },
    /// Print the transitive closure of an edge-list graph.
    Closure { path: PathBuf },
    /// Generate a graph (edge list) or box family (CSV).
    Gen {
        #[command(subcommand)]
        kind: GenKind,
    },
    /// Directed intersection graph of a box CSV file.
    BoxesGraph {
        path: PathBuf,
        /// Exit with status 3 if some pair of boxes meets without crossing.
        #[arg(long)]
        require_transverse: bool,
    },
    /// Run an exhaustive or randomized verification and print a JSON report.
    Verify(VerifyArgs),
}

#[derive(Clone, Copy, ValueEnum)]
enum Format {
    Text,
    Json,
}

#[derive(Subcommand)]
enum GenKind {
    /// Complete k-partite graph with edges pointing to higher parts.
    TuranDag {
        #[arg(long)]
        n: usize,
        #[arg(long)]
        k: usize,
    },
    /// Extremal graph, either for (n, ell) or as G[r, l, s].
    Extremal(ExtremalArgs),
    /// Transverse box family realizing G[r, l, s].
    BoxesExtremal {
        #[arg(long)]
        r: usize,
        #[arg(long)]
        l: usize,
        #[arg(long)]
        s: usize,
    },
    /// Each forward pair kept with probability p.
    Random {
        #[arg(long)]
        n: usize,
        #[arg(long)]
        p: f64,
        #[arg(long, default_value_t = DEFAULT_SEED)]
        seed: u64,
    },
}

#[derive(Args)]
struct ExtremalArgs {
    #[arg(long, requires = "ell", conflicts_with_all = ["r", "l", "s"])]
    n: Option<usize>,
    #[arg(long, requires = "n")]
    ell: Option<usize>,
    #[arg(long, requires_all = ["l", "s"])]
    r: Option<usize>,
    #[arg(long, requires_all = ["r", "s"])]
    l: Option<usize>,
    #[arg(long, requires_all = ["r", "l"])]
    s: Option<usize>,
}

#[derive(Clone, Copy, ValueEnum)]
enum ClaimArg {
    Turan,
    Theorem,
    Implications,
    EquivTransitive,
    Closure,
    Separations,
    Boxes,
    All,
}

impl From<ClaimArg> for Claim {
    fn from(c: ClaimArg) -> Claim {
        match c {
            ClaimArg::Turan => Claim::Turan,
            ClaimArg::Theorem => Claim::Theorem,
            ClaimArg::Implications => Claim::Implications,
            ClaimArg::EquivTransitive => Claim::EquivTransitive,
            ClaimArg::Closure => Claim::Closure,
            ClaimArg::Separations => Claim::Separations,
            ClaimArg::Boxes => Claim::Boxes,
            ClaimArg::All => Claim::All,
        }
    }
}

#[derive(Args)]
struct VerifyArgs {
    #[arg(value_enum)]
    claim: ClaimArg,
    /// Largest vertex count to enumerate (default: 7, or 6 for path-based claims).
    #[arg(long)]
    max_n: Option<usize>,
    #[arg(long, default_value_t = 1)]
    workers: usize,
    #[arg(long, default_value_t = DEFAULT_SEED)]
    seed: u64,
    /// Random box families of each kind.
    #[arg(long, default_value_t = 1000)]
    trials: usize,
    /// Random DAGs cross-checked against the brute-force oracles.
    #[arg(long, default_value_t = 1000)]
    random_dags: usize,
    /// Global enumeration ceiling.
    #[arg(long, env = "DAGX_MAX_N", hide_env_values = true)]
    max_n_cap: Option<usize>,
}

/// How a command ended, mapped onto the exit-code contract.
enum Failure {
    Input(anyhow::Error),
    Validation(String),
    Internal(anyhow::Error),
}

impl From<dagx::Error> for Failure {
    fn from(e: dagx::Error) -> Failure {
        Failure::Input(e.into())
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli.command) {
        Ok(()) => ExitCode::SUCCESS,
        Err(Failure::Input(e)) => {
            eprintln!("error: {e:#}");
            ExitCode::from(2)
        }
        Err(Failure::Validation(msg)) => {
            eprintln!("validation failed: {msg}");
            ExitCode::from(3)
        }
        Err(Failure::Internal(e)) => {
            eprintln!("internal error: {e:#}");
            ExitCode::from(1)
        }
    }
}

/// Writes to stdout, ignoring a closed pipe.
fn emit(text: &str) {
    let _ = io::stdout().lock().write_all(text.as_bytes());
}

fn read(path: &Path) -> Result<String, Failure> {
    fs::read_to_string(path)
        .with_context(|| format!("reading {}", path.display()))
        .map_err(Failure::Input)
}

fn load_graph(path: &Path) -> Result<Dag, Failure> {
    let text = read(path)?;
    parse_edge_list(&text)
        .with_context(|| format!("parsing {}", path.display()))
        .map_err(Failure::Input)
}

fn run(command: Command) -> Result<(), Failure> {
    match command {
        Command::Analyze { path, format, path_cap } => {
            let g = load_graph(&path)?;
            let out = analyze(&g, path_cap)?;
            match format {
                Format::Text => emit(&out.to_text()),
                Format::Json => emit(&(serde_json::to_string_pretty(&out).map_err(|e| Failure::Internal(e.into()))? + "\n")),
            }
        }
        Command::Closure { path } => {
            let g = load_graph(&path)?;
            emit(&write_edge_list(&transitive_closure(&g)));
        }
        Command::Gen { kind } => emit(&generate(kind)?),
        Command::BoxesGraph { path, require_transverse } => {
            let text = read(&path)?;
            let family = parse_box_csv(&text)
                .with_context(|| format!("parsing {}", path.display()))
                .map_err(Failure::Input)?;
            if family.is_empty() {
                return Err(Failure::Input(anyhow::anyhow!("{} contains no boxes", path.display())));
            }
            let g = directed_intersection_graph(&family);
            let bad = transverse_violations(&family);
            emit(&write_edge_list(&g));
            for (i, (id, _)) in family.entries().iter().enumerate() {
                eprintln!("# vertex {i} = {id}");
            }
            if bad.is_empty() {
                eprintln!("# transverse family: yes");
            } else {
                eprintln!("# transverse family: no ({} offending pairs)", bad.len());
                for &(i, j) in &bad {
                    eprintln!("#   {} and {} meet without crossing", family.id(i), family.id(j));
                }
                if require_transverse {
                    return Err(Failure::Validation(format!("{} pairs of boxes are not transverse", bad.len())));
                }
            }
        }
        Command::Verify(args) => verify(args)?,
    }
    Ok(())
}

fn generate(kind: GenKind) -> Result<String, Failure> {
    Ok(match kind {
        GenKind::TuranDag { n, k } => write_edge_list(&turan_dag(n, k)?),
        GenKind::Extremal(args) => {
            let g = match (args.n, args.ell, args.r, args.l, args.s) {
                (Some(n), Some(1), ..) => {
                    eprintln!("# ell = 1: oriented complete bipartite graph turan_dag({n}, 2)");
                    turan_dag(n, 2)?
                }
                (Some(n), Some(ell), ..) => extremal_for(n, ell)?,
                (_, _, Some(r), Some(l), Some(s)) => extremal_dag(ExtremalSpec::new(r, l, s)?),
                _ => {
                    return Err(Failure::Input(anyhow::anyhow!(
                        "gen extremal needs either --n and --ell, or --r, --l and --s"
                    )))
                }
            };
            write_edge_list(&g)
        }
        GenKind::BoxesExtremal { r, l, s } => write_box_csv(&extremal_box_family(ExtremalSpec::new(r, l, s)?)),
        GenKind::Random { n, p, seed } => write_edge_list(&random_dag(n, p, seed)?),
    })
}

fn verify(args: VerifyArgs) -> Result<(), Failure> {
    let claim: Claim = args.claim.into();
    let default_ceiling = match claim {
        Claim::Turan | Claim::Theorem => LIGHT_MAX_N,
        Claim::Boxes => usize::MAX,
        _ => HEAVY_MAX_N,
    };
    let mut cfg = VerifyConfig {
        max_n: args.max_n,
        max_n_cap: args.max_n_cap,
        workers: args.workers.max(1),
        seed: args.seed,
        trials: args.trials,
        random_dags: args.random_dags,
        ..VerifyConfig::default()
    };
    if let Some(n) = args.max_n {
        if n > default_ceiling {
            eprintln!("warning: --max-n {n} is above the default ceiling; expect long run times");
            cfg.allow_beyond_default = true;
        }
    }
    let reports = harness::run_claim(claim, &cfg)?;
    let json = if reports.len() == 1 {
        serde_json::to_string_pretty(&reports[0])
    } else {
        serde_json::to_string_pretty(&reports)
    }
    .map_err(|e| Failure::Internal(e.into()))?;
    emit(&(json + "\n"));
    let failed: Vec<&str> = reports
        .iter()
        .filter(|r| !r.verified())
        .map(|r| r.claim.as_str())
        .collect();
    if !failed.is_empty() {
        return Err(Failure::Validation(format!("violations in {}", failed.join(", "))));
    }
    Ok(())
}
