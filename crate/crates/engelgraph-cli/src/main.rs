use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};

use engelgraph_cli::{analysis, pathcmd, resolve_budget, suites, tracer, Context};
use engelgraph_core::catalog::{self, Tier};
use engelgraph_core::digraph::{self, GraphKind};
use engelgraph_core::engel::{self, BuildOptions};
use engelgraph_core::Group;

/// Engel, commuting and prime graphs of finite permutation groups.
#[derive(Parser)]
#[command(name = "engelgraph", version, about)]
struct Cli {
    /// Worker threads (default: all cores). Results are identical for any
    /// value.
    #[arg(long, global = true)]
    jobs: Option<usize>,
    /// Arc-test budget override (also: ENGELGRAPH_BUDGET).
    #[arg(long, global = true)]
    budget: Option<u64>,
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, ValueEnum)]
enum Format {
    Json,
    Text,
    Dot,
}

#[derive(Clone, Copy, ValueEnum)]
enum TierArg {
    Fast,
    Slow,
    Targeted,
}

impl From<TierArg> for Tier {
    fn from(t: TierArg) -> Tier {
        match t {
            TierArg::Fast => Tier::Fast,
            TierArg::Slow => Tier::Slow,
            TierArg::Targeted => Tier::Targeted,
        }
    }
}

#[derive(Subcommand)]
enum Command {
    /// Full structural and graph analysis of one group.
    Analyze {
        /// Catalog name (e.g. S4, PSL2(7), M11) or a generator-file path.
        #[arg(long)]
        group: String,
        #[arg(long, value_enum, default_value = "json")]
        format: Format,
    },
    /// Run a verification suite against the catalog.
    Verify {
        /// Suite name or `all`.
        #[arg(long)]
        suite: String,
        #[arg(long, value_enum, default_value = "fast")]
        tier: TierArg,
        #[arg(long, value_enum, default_value = "text")]
        format: Format,
    },
    /// Report which diameter-argument branch applies to a group.
    TraceProof {
        #[arg(long)]
        group: String,
    },
    /// Shortest directed Engel path between two elements.
    EngelPath {
        #[arg(long)]
        group: String,
        #[arg(long)]
        from: String,
        #[arg(long)]
        to: String,
    },
    /// Write a graph in DOT form.
    ExportDot {
        #[arg(long)]
        group: String,
        /// gamma | gamma_n:<n> | delta | lambda | commuting
        #[arg(long)]
        kind: String,
        #[arg(long)]
        out: PathBuf,
    },
}

fn load_group(name: &str) -> Result<Group, String> {
    if let Some(entry) = catalog::catalog_entry(name) {
        return catalog::build(&entry.spec).map_err(|e| e.to_string());
    }
    let path = PathBuf::from(name);
    if path.exists() {
        return catalog::load_group_file(&path).map_err(|e| e.to_string());
    }
    Err(format!(
        "unknown group {name:?}: not a catalog name and not a file"
    ))
}

fn parse_kind(text: &str) -> Result<GraphKind, String> {
    match text {
        "gamma" => Ok(GraphKind::Gamma),
        "delta" => Ok(GraphKind::Delta),
        "lambda" => Ok(GraphKind::Lambda),
        "commuting" => Ok(GraphKind::Commuting),
        other => {
            if let Some(n) = other.strip_prefix("gamma_n:") {
                let n: u32 = n
                    .parse()
                    .map_err(|_| format!("bad depth in kind {other:?}"))?;
                return Ok(GraphKind::GammaN(n));
            }
            Err(format!(
                "unknown kind {other:?}: expected gamma, gamma_n:<n>, delta, lambda or commuting"
            ))
        }
    }
}

const EXIT_CLAIM_FAILURE: u8 = 1;
const EXIT_USAGE: u8 = 2;

fn main() -> ExitCode {
    let cli = Cli::parse();
    if let Some(jobs) = cli.jobs {
        if rayon::ThreadPoolBuilder::new()
            .num_threads(jobs)
            .build_global()
            .is_err()
        {
            eprintln!("could not configure {jobs} worker threads");
            return ExitCode::from(EXIT_USAGE);
        }
    }
    let budget = resolve_budget(cli.budget);

    match cli.command {
        Command::Analyze { group, format } => {
            let g = match load_group(&group) {
                Ok(g) => g,
                Err(e) => {
                    eprintln!("{e}");
                    return ExitCode::from(EXIT_USAGE);
                }
            };
            match format {
                Format::Dot => {
                    let options = BuildOptions { budget };
                    match engel::build_graph(&g, GraphKind::Gamma, &options) {
                        Ok(graph) => {
                            print!(
                                "{}",
                                digraph::export_dot(&graph, |id| g
                                    .permutation(id)
                                    .cycle_string())
                            );
                            ExitCode::SUCCESS
                        }
                        Err(e) => {
                            eprintln!("{e}");
                            ExitCode::from(EXIT_USAGE)
                        }
                    }
                }
                _ => match analysis::analyze(&g, budget) {
                    Ok(report) => {
                        match format {
                            Format::Json => println!("{}", report.to_json()),
                            Format::Text => print!("{}", report.to_text()),
                            Format::Dot => unreachable!(),
                        }
                        ExitCode::SUCCESS
                    }
                    Err(e) => {
                        eprintln!("{e}");
                        ExitCode::from(EXIT_USAGE)
                    }
                },
            }
        }
        Command::Verify {
            suite,
            tier,
            format,
        } => {
            let ctx = Context::new();
            let tier = tier.into();
            let results = if suite == "all" {
                suites::run_all_suites(&ctx, tier)
            } else {
                suites::run_suite(&ctx, &suite, tier).map(|r| vec![r])
            };
            match results {
                Ok(results) => {
                    match format {
                        Format::Json => println!("{}", suites::render_json(&results)),
                        _ => print!("{}", suites::render_text(&results)),
                    }
                    if suites::any_failure(&results) {
                        ExitCode::from(EXIT_CLAIM_FAILURE)
                    } else {
                        ExitCode::SUCCESS
                    }
                }
                Err(e) => {
                    eprintln!("{e}");
                    ExitCode::from(EXIT_USAGE)
                }
            }
        }
        Command::TraceProof { group } => {
            let g = match load_group(&group) {
                Ok(g) => g,
                Err(e) => {
                    eprintln!("{e}");
                    return ExitCode::from(EXIT_USAGE);
                }
            };
            match tracer::trace_proof(&g, budget) {
                Ok(report) => {
                    print!("{}", report.to_text());
                    if report.ok {
                        ExitCode::SUCCESS
                    } else {
                        ExitCode::from(EXIT_CLAIM_FAILURE)
                    }
                }
                Err(e) => {
                    eprintln!("{e}");
                    ExitCode::from(EXIT_USAGE)
                }
            }
        }
        Command::EngelPath { group, from, to } => {
            let g = match load_group(&group) {
                Ok(g) => g,
                Err(e) => {
                    eprintln!("{e}");
                    return ExitCode::from(EXIT_USAGE);
                }
            };
            match pathcmd::engel_path(&g, &from, &to, budget) {
                Ok(text) => {
                    print!("{text}");
                    ExitCode::SUCCESS
                }
                Err(e) => {
                    eprintln!("{e}");
                    ExitCode::from(EXIT_USAGE)
                }
            }
        }
        Command::ExportDot { group, kind, out } => {
            let g = match load_group(&group) {
                Ok(g) => g,
                Err(e) => {
                    eprintln!("{e}");
                    return ExitCode::from(EXIT_USAGE);
                }
            };
            let kind = match parse_kind(&kind) {
                Ok(k) => k,
                Err(e) => {
                    eprintln!("{e}");
                    return ExitCode::from(EXIT_USAGE);
                }
            };
            let options = BuildOptions { budget };
            match engel::build_graph(&g, kind, &options) {
                Ok(graph) => {
                    let text =
                        digraph::export_dot(&graph, |id| g.permutation(id).cycle_string());
                    if graph.vertex_count() == 0 {
                        eprintln!("warning: degenerate graph with no vertices");
                    }
                    match std::fs::write(&out, text) {
                        Ok(()) => ExitCode::SUCCESS,
                        Err(e) => {
                            eprintln!("cannot write {}: {e}", out.display());
                            ExitCode::from(EXIT_USAGE)
                        }
                    }
                }
                Err(e) => {
                    eprintln!("{e}");
                    ExitCode::from(EXIT_USAGE)
                }
            }
        }
    }
}
