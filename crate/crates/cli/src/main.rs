use std::fs;
use std::io::{self, Write as _};
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use anyhow::{bail, Context, Result};
use clap::{Args, Parser, Subcommand};
use geodesia::audit::{audit_suite, render, ClaimId, OutputFormat, SuiteConfig, Verdict};
use geodesia::corona::{product, Variant};
use geodesia::format::{document_to_dot, format_set, parse_document, write_edge_list, write_labeled, Document};
use geodesia::geodetic::{LengthBound, SolveConfig, SolveError, Solver};
use geodesia::graph::{Graph, GraphRef};

/// Exact strong geodetic numbers and claim audits for corona-type products.
#[derive(Debug, Parser)]
#[command(name = "geodesia", version)]
struct Cli {
    #[command(flatten)]
    run: RunArgs,
    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Args)]
struct RunArgs {
    /// Largest graph the exact solver accepts.
    #[arg(long, global = true, env = "GEODESIA_SOLVE_CAP", default_value_t = 20,
          value_parser = clap::value_parser!(u64).range(1..=128))]
    solve_cap: u64,
    /// Maximum geodesics enumerated per vertex pair.
    #[arg(long, global = true, env = "GEODESIA_GEODESIC_CAP", default_value_t = 10_000,
          value_parser = clap::value_parser!(u64).range(1..))]
    geodesic_cap: u64,
    /// Search nodes allowed per solver call.
    #[arg(long, global = true, env = "GEODESIA_NODE_BUDGET", default_value_t = 10_000_000,
          value_parser = clap::value_parser!(u64).range(1..))]
    node_budget: u64,
    /// Seed for sampled audit instances; overrides the config's seed.
    #[arg(long, global = true)]
    seed: Option<u64>,
}

impl RunArgs {
    fn solve_config(&self) -> SolveConfig {
        SolveConfig {
            max_vertices: self.solve_cap as usize,
            geodesic_cap: self.geodesic_cap as usize,
            node_budget: self.node_budget,
            ..SolveConfig::default()
        }
    }
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Minimum strong geodetic set of a graph, with its certificate.
    Sg {
        /// Edge-list file, or a shorthand such as C5 or DS2-2.
        input: String,
        /// Only pairs at distance at most 2 receive a geodesic.
        #[arg(long, conflicts_with = "geodetic")]
        two_geodetic: bool,
        /// Plain geodetic number instead.
        #[arg(long)]
        geodetic: bool,
    },
    /// Build a corona, edge corona or neighborhood corona product.
    Product {
        variant: Variant,
        /// Base graph file or shorthand.
        base: String,
        /// One graph per base vertex (per edge for `edge`).
        #[arg(required_unless_present = "uniform")]
        copies: Vec<String>,
        /// Use this graph for every copy.
        #[arg(long, conflicts_with = "copies")]
        uniform: Option<String>,
        /// Write here instead of stdout.
        #[arg(short, long)]
        output: Option<PathBuf>,
    },
    /// Run an audit suite and report a verdict per claim and instance.
    Audit {
        /// TOML suite file.
        #[arg(required_unless_present = "default", conflicts_with = "default")]
        config: Option<PathBuf>,
        /// The built-in suite.
        #[arg(long)]
        default: bool,
        #[arg(long, default_value = "text")]
        format: OutputFormat,
        /// Comma-separated claims to keep, e.g. Theorem1,Prop1.
        #[arg(long, value_delimiter = ',')]
        claims: Vec<ClaimId>,
        #[arg(short, long)]
        output: Option<PathBuf>,
    },
    /// Export a graph or labeled product as DOT.
    Dot {
        input: String,
        #[arg(short, long)]
        output: Option<PathBuf>,
    },
    /// Print the edge list of a shorthand graph (Pn, Cn, Kn, Sk, DSa-b).
    Generate { shorthand: String },
}

fn load(input: &str) -> Result<Document> {
    let path = Path::new(input);
    if !path.exists() {
        if let Ok(g) = input.parse::<GraphRef>() {
            return Ok(Document::Plain(g.graph));
        }
    }
    let text = fs::read_to_string(path).with_context(|| format!("reading {input}"))?;
    parse_document(&text).with_context(|| format!("parsing {input}"))
}

fn load_graph(input: &str) -> Result<Graph> {
    Ok(load(input)?.graph().clone())
}

fn emit(text: &str, output: Option<&Path>) -> Result<()> {
    match output {
        Some(path) => fs::write(path, text).with_context(|| format!("writing {}", path.display())),
        None => {
            let mut out = io::stdout().lock();
            match out.write_all(text.as_bytes()).and_then(|()| out.flush()) {
                Err(e) if e.kind() != io::ErrorKind::BrokenPipe => Err(e.into()),
                _ => Ok(()),
            }
        }
    }
}

fn cmd_sg(input: &str, two: bool, geodetic: bool, cfg: SolveConfig) -> Result<ExitCode> {
    let g = load_graph(input)?;
    let solver = Solver::new(&g, cfg)?;
    if geodetic {
        let basis = solver.geodetic_basis()?;
        emit(&format!("g = {}, basis {}\n", basis.len(), format_set(&basis)), None)?;
        return Ok(ExitCode::SUCCESS);
    }
    let (bound, symbol) = if two { (LengthBound::TWO, "Sg'") } else { (LengthBound::Unbounded, "Sg") };
    let result = solver.minimum(bound)?;
    let basis = format_set(result.certificate.basis());
    emit(&format!("{symbol} = {}, basis {basis}\n{}", result.number, result.certificate.to_text()), None)?;
    Ok(ExitCode::SUCCESS)
}

fn cmd_product(
    variant: Variant,
    base: &str,
    copies: &[String],
    uniform: Option<&str>,
    output: Option<&Path>,
) -> Result<ExitCode> {
    let g = load_graph(base)?;
    let hs = match uniform {
        Some(h) => vec![load_graph(h)?; variant.copy_count(&g)],
        None => copies.iter().map(|c| load_graph(c)).collect::<Result<_>>()?,
    };
    let p = product(variant, &g, &hs)?;
    emit(&write_labeled(&p), output)?;
    Ok(ExitCode::SUCCESS)
}

fn cmd_audit(
    config: Option<&Path>,
    format: OutputFormat,
    claims: &[ClaimId],
    output: Option<&Path>,
    run: &RunArgs,
) -> Result<ExitCode> {
    let mut suite = match config {
        Some(path) => SuiteConfig::load(path)?,
        None => SuiteConfig::default_suite(),
    };
    if let Some(seed) = run.seed {
        suite.seed = seed;
    }
    if !claims.is_empty() {
        suite.claims = Some(claims.to_vec());
    }
    let reports = audit_suite(&suite, &run.solve_config());
    emit(&render(&reports, format), output)?;
    let failed = reports.iter().any(|r| r.verdict == Verdict::Fail);
    Ok(if failed { ExitCode::from(1) } else { ExitCode::SUCCESS })
}

fn run(cli: Cli) -> Result<ExitCode> {
    let cfg = cli.run.solve_config();
    match &cli.command {
        Command::Sg { input, two_geodetic, geodetic } => cmd_sg(input, *two_geodetic, *geodetic, cfg),
        Command::Product { variant, base, copies, uniform, output } => {
            cmd_product(*variant, base, copies, uniform.as_deref(), output.as_deref())
        }
        Command::Audit { config, default: _, format, claims, output } => {
            cmd_audit(config.as_deref(), *format, claims, output.as_deref(), &cli.run)
        }
        Command::Dot { input, output } => {
            emit(&document_to_dot(&load(input)?), output.as_deref())?;
            Ok(ExitCode::SUCCESS)
        }
        Command::Generate { shorthand } => {
            let Ok(g) = shorthand.parse::<GraphRef>() else {
                bail!("unknown shorthand `{shorthand}`");
            };
            emit(&write_edge_list(&g.graph), None)?;
            Ok(ExitCode::SUCCESS)
        }
    }
}

/// 2 input error, 3 resource cap, 4 disconnected graph.
fn status(err: &anyhow::Error) -> u8 {
    match err.downcast_ref::<SolveError>() {
        Some(SolveError::NotConnected) => 4,
        Some(e) if e.is_resource_limit() => 3,
        _ => 2,
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli) {
        Ok(code) => code,
        Err(err) => {
            eprintln!("error: {err:#}");
            ExitCode::from(status(&err))
        }
    }
}
