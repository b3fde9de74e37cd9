//! Command-line front end: `analyze`, `generate`, `paths`, `attack`.
//!
//! Exit codes: 0 on success, 2 for usage or input errors, 1 for internal
//! failures such as an unwritable output file.

use std::ffi::OsString;
use std::fs::{self, File};
use std::io::{BufReader, BufWriter, Write};
use std::path::{Path, PathBuf};

use clap::{Args, Parser, Subcommand, ValueEnum};

use crate::error::Error;
use crate::graph::Graph;
use crate::io::{read_graph, write_graph_edges, write_series, write_series_with, Cell, InputFormat, Series};
use crate::metrics::{
    assortativity, average_degree, clustering, degree_distribution, density, fit_power_law, knn_curve,
    shortest_path_stats, FitMethod, PathPolicy,
};
use crate::resilience::{
    attack_series, club_link_removal_experiment, node_removal_experiment, RemovalPlan, RemovalStrategy,
};
use crate::richclub::{club_members, club_subgraph_stats, rich_club_curve, transit_decomposition, ClubSelector};
use crate::synth::GenSpec;

/// Graphs up to this many nodes get exact all-pairs path statistics.
pub const EXACT_PATH_LIMIT: usize = 20_000;
/// Sources sampled above [`EXACT_PATH_LIMIT`].
pub const DEFAULT_PATH_SOURCES: usize = 1000;
pub const DEFAULT_SEED: u64 = 42;
pub const DEFAULT_CLUB_TOP: usize = 20;
/// Significant digits in summary files.
pub const SUMMARY_DIGITS: usize = 6;

const SEED_HELP: &str = "\
Seeds: every random choice derives from --seed (default 42).
  analyze  path-source sampling uses seed
  paths    transit source sampling uses seed; whole-graph path sampling uses seed+1
  attack   random removal order uses seed; mean path at the i-th fraction uses seed+i;
           club-link removal uses seed+1000
Path statistics are exact for graphs of at most 20000 nodes, otherwise 1000 sources
are sampled unless --sample-sources is given.
The optional TOPOLENS_THREADS environment variable caps worker threads.";

#[derive(Debug, Parser)]
#[command(name = "topolens", version, about = "AS-level topology analytics", after_help = SEED_HELP)]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Degree, mixing, rich-club and path statistics as CSV series.
    Analyze(AnalyzeArgs),
    /// Write a synthetic graph as a plain edge list.
    Generate(GenerateArgs),
    /// Classify peripheral shortest paths by rich-club transit.
    Paths(PathsArgs),
    /// Node-removal (and optional club-link removal) experiments.
    Attack(AttackArgs),
}

#[derive(Debug, Args)]
pub struct InputArgs {
    /// Edge list (pairs) or `.as-rel` relationship file.
    #[arg(long)]
    pub input: PathBuf,
    /// Override format detection by file name.
    #[arg(long, value_parser = parse_format)]
    pub format: Option<InputFormat>,
}

fn parse_format(s: &str) -> Result<InputFormat, String> {
    s.parse()
}

#[derive(Debug, Args)]
pub struct ClubArgs {
    /// Club = the N highest-degree nodes.
    #[arg(long, conflicts_with = "club_min_degree")]
    pub club_top: Option<usize>,
    /// Club = every node with at least this degree.
    #[arg(long)]
    pub club_min_degree: Option<usize>,
}

impl ClubArgs {
    fn selector(&self) -> ClubSelector {
        match (self.club_top, self.club_min_degree) {
            (_, Some(k)) => ClubSelector::MinDegree(k),
            (Some(r), None) => ClubSelector::TopRank(r),
            (None, None) => ClubSelector::TopRank(DEFAULT_CLUB_TOP),
        }
    }
}

#[derive(Debug, Args)]
pub struct AnalyzeArgs {
    #[command(flatten)]
    pub input: InputArgs,
    #[arg(long)]
    pub out_dir: PathBuf,
    #[arg(long, default_value_t = DEFAULT_SEED)]
    pub seed: u64,
    /// Smallest degree included in the power-law fit.
    #[arg(long, default_value_t = 1)]
    pub kmin: usize,
    /// mle or ols-ccdf.
    #[arg(long, default_value = "mle", value_parser = parse_fit)]
    pub fit_method: FitMethod,
    /// Force sampled path statistics with this many sources.
    #[arg(long)]
    pub sample_sources: Option<usize>,
}

fn parse_fit(s: &str) -> Result<FitMethod, String> {
    s.parse()
}

#[derive(Debug, Clone, Copy, ValueEnum)]
pub enum Model {
    Er,
    Ba,
    Plconfig,
}

#[derive(Debug, Args)]
pub struct GenerateArgs {
    #[arg(long, value_enum)]
    pub model: Model,
    #[arg(long)]
    pub nodes: usize,
    /// Edge count (er).
    #[arg(long)]
    pub links: Option<usize>,
    /// Links per new node (ba).
    #[arg(long)]
    pub m: Option<usize>,
    /// Degree exponent magnitude (plconfig).
    #[arg(long)]
    pub gamma: Option<f64>,
    /// Minimum target degree (plconfig).
    #[arg(long, default_value_t = 1)]
    pub kmin: usize,
    #[arg(long, default_value_t = DEFAULT_SEED)]
    pub seed: u64,
    /// Edge-list file to write.
    #[arg(long)]
    pub output: PathBuf,
}

#[derive(Debug, Args)]
pub struct PathsArgs {
    #[command(flatten)]
    pub input: InputArgs,
    #[arg(long)]
    pub out_dir: PathBuf,
    #[arg(long, default_value_t = DEFAULT_SEED)]
    pub seed: u64,
    #[command(flatten)]
    pub club: ClubArgs,
    /// Force sampled statistics with this many peripheral sources.
    #[arg(long)]
    pub sample_sources: Option<usize>,
}

#[derive(Debug, Clone, Copy, ValueEnum)]
pub enum StrategyArg {
    Targeted,
    Random,
    Both,
}

#[derive(Debug, Args)]
pub struct AttackArgs {
    #[command(flatten)]
    pub input: InputArgs,
    #[arg(long)]
    pub out_dir: PathBuf,
    #[arg(long, default_value_t = DEFAULT_SEED)]
    pub seed: u64,
    #[arg(long, value_enum, default_value = "both")]
    pub strategy: StrategyArg,
    /// Comma-separated, strictly ascending, each in [0, 1).
    #[arg(long, default_value = "0,0.01,0.02,0.05,0.1,0.2")]
    pub fractions: String,
    /// BFS sources for mean-path estimates.
    #[arg(long, default_value_t = crate::resilience::DEFAULT_SAMPLE_SOURCES)]
    pub sample_sources: usize,
    /// Also remove this fraction of links inside the club (writes clublinks.csv).
    #[arg(long)]
    pub club_link_fraction: Option<f64>,
    #[command(flatten)]
    pub club: ClubArgs,
}

/// Failure with its process exit code.
#[derive(Debug)]
pub struct CliError {
    pub code: i32,
    pub message: String,
}

impl CliError {
    fn usage(message: impl Into<String>) -> Self {
        Self {
            code: 2,
            message: message.into(),
        }
    }
}

impl From<Error> for CliError {
    fn from(e: Error) -> Self {
        let code = match e {
            Error::Io(_) => 1,
            _ => 2,
        };
        Self {
            code,
            message: e.to_string(),
        }
    }
}

type CliResult<T> = Result<T, CliError>;

/// Parse arguments and run; returns the process exit code.
pub fn run<I, T>(args: I) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let _ = e.print();
            return if e.use_stderr() { 2 } else { 0 };
        }
    };
    match execute(&cli) {
        Ok(()) => 0,
        Err(e) => {
            eprintln!("error: {}", e.message);
            e.code
        }
    }
}

pub fn execute(cli: &Cli) -> CliResult<()> {
    match &cli.command {
        Command::Analyze(a) => cmd_analyze(a),
        Command::Generate(a) => cmd_generate(a),
        Command::Paths(a) => cmd_paths(a),
        Command::Attack(a) => cmd_attack(a),
    }
}

fn load_graph(input: &InputArgs) -> CliResult<Graph> {
    let format = input.format.unwrap_or_else(|| InputFormat::from_path(&input.input));
    let file =
        File::open(&input.input).map_err(|e| CliError::usage(format!("cannot open {}: {e}", input.input.display())))?;
    read_graph(BufReader::new(file), format).map_err(|e| match e {
        Error::Io(io) => CliError::usage(format!("cannot read {}: {io}", input.input.display())),
        Error::Parse { line, message } => CliError::usage(format!("{}:{line}: {message}", input.input.display())),
        other => other.into(),
    })
}

fn prepare_out_dir(dir: &Path) -> CliResult<()> {
    fs::create_dir_all(dir).map_err(|e| CliError {
        code: 1,
        message: format!("cannot create {}: {e}", dir.display()),
    })
}

fn write_csv(dir: &Path, file: &str, series: &Series, digits: usize) -> CliResult<()> {
    let path = dir.join(file);
    let out = File::create(&path).map_err(|e| CliError {
        code: 1,
        message: format!("cannot write {}: {e}", path.display()),
    })?;
    write_series_with(series, BufWriter::new(out), digits)?;
    Ok(())
}

/// Giant component for path statistics, with a note when it is a strict subset.
fn giant_for_paths(g: &Graph) -> Graph {
    if g.is_connected() {
        return g.clone();
    }
    let (giant, _) = g.giant_component();
    log::warn!(
        "graph is disconnected; path statistics use the giant component ({} of {} nodes)",
        giant.node_count(),
        g.node_count()
    );
    giant
}

fn path_policy(node_count: usize, override_sources: Option<usize>, seed: u64) -> PathPolicy {
    match override_sources {
        Some(count) => PathPolicy::Sample { count, seed },
        None => PathPolicy::auto(node_count, EXACT_PATH_LIMIT, DEFAULT_PATH_SOURCES, seed),
    }
}

fn summary_table(name: &str, fields: Vec<(&str, Cell)>) -> Series {
    let headers: Vec<&str> = fields.iter().map(|(h, _)| *h).collect();
    let mut s = Series::new(name, &headers);
    s.push(fields.into_iter().map(|(_, c)| c).collect());
    s
}

fn print_summary(s: &Series) {
    let stdout = std::io::stdout();
    let mut out = stdout.lock();
    for (h, c) in s.headers.iter().zip(&s.rows[0]) {
        let _ = writeln!(out, "{h}: {}", c.render(SUMMARY_DIGITS));
    }
}

pub fn cmd_analyze(args: &AnalyzeArgs) -> CliResult<()> {
    if args.sample_sources == Some(0) {
        return Err(CliError::usage("--sample-sources must be at least 1"));
    }
    let g = load_graph(&args.input)?;
    prepare_out_dir(&args.out_dir)?;
    let dir = &args.out_dir;

    let dist = degree_distribution(&g);
    write_csv(dir, "pk.csv", &dist.pk_series(), crate::io::SERIES_DIGITS)?;
    write_csv(dir, "ccdf.csv", &dist.ccdf_series(), crate::io::SERIES_DIGITS)?;
    write_csv(dir, "knn.csv", &knn_curve(&g).series(), crate::io::SERIES_DIGITS)?;
    write_csv(
        dir,
        "richclub.csv",
        &rich_club_curve(&g).series(),
        crate::io::SERIES_DIGITS,
    )?;

    let alpha = match assortativity(&g) {
        Ok(a) => Some(a),
        Err(e) => {
            log::info!("{e}");
            None
        }
    };
    let fit = match fit_power_law(&dist, args.kmin, args.fit_method) {
        Ok(f) => Some(f),
        Err(e) => {
            log::warn!("power-law fit skipped: {e}");
            None
        }
    };
    let giant = giant_for_paths(&g);
    let paths = if giant.node_count() >= 2 {
        let policy = path_policy(giant.node_count(), args.sample_sources, args.seed);
        Some(shortest_path_stats(&giant, policy)?)
    } else {
        None
    };
    let hist = paths
        .as_ref()
        .map(|p| p.series())
        .unwrap_or_else(|| Series::new("pathhist", &["d", "pairs"]));
    write_csv(dir, "pathhist.csv", &hist, crate::io::SERIES_DIGITS)?;

    let summary = summary_table(
        "summary",
        vec![
            ("nodes", g.node_count().into()),
            ("links", g.edge_count().into()),
            ("mean_degree", average_degree(&g).into()),
            ("density", density(&g).ok().into()),
            ("alpha", alpha.into()),
            ("gamma", fit.as_ref().map(|f| f.gamma).into()),
            ("gamma_ks", fit.as_ref().map(|f| f.goodness).into()),
            ("clustering", clustering(&g).mean.into()),
            ("giant_nodes", giant.node_count().into()),
            ("mean_path", paths.as_ref().map(|p| p.mean).into()),
            ("diameter", paths.as_ref().map(|p| p.diameter).into()),
            ("path_sources", paths.as_ref().map(|p| p.sources).into()),
        ],
    );
    write_csv(dir, "summary.csv", &summary, SUMMARY_DIGITS)?;
    print_summary(&summary);
    Ok(())
}

pub fn cmd_generate(args: &GenerateArgs) -> CliResult<()> {
    let spec = match args.model {
        Model::Er => GenSpec::Er {
            n: args.nodes,
            links: args
                .links
                .ok_or_else(|| CliError::usage("--links is required for er"))?,
        },
        Model::Ba => GenSpec::Ba {
            n: args.nodes,
            m: args.m.ok_or_else(|| CliError::usage("--m is required for ba"))?,
        },
        Model::Plconfig => GenSpec::PowerLawConfig {
            n: args.nodes,
            gamma: args
                .gamma
                .ok_or_else(|| CliError::usage("--gamma is required for plconfig"))?,
            kmin: args.kmin,
        },
    };
    let g = spec.generate(args.seed)?;
    let out = File::create(&args.output).map_err(|e| CliError {
        code: 1,
        message: format!("cannot write {}: {e}", args.output.display()),
    })?;
    write_graph_edges(&g, BufWriter::new(out))?;
    println!("nodes: {}", g.node_count());
    println!("links: {}", g.edge_count());
    println!("seed: {}", args.seed);
    Ok(())
}

pub fn cmd_paths(args: &PathsArgs) -> CliResult<()> {
    if args.sample_sources == Some(0) {
        return Err(CliError::usage("--sample-sources must be at least 1"));
    }
    let g = giant_for_paths(&load_graph(&args.input)?);
    let members = club_members(&g, args.club.selector())?;
    if members.is_empty() {
        return Err(CliError::usage("club selector matched no nodes"));
    }
    let club = club_subgraph_stats(&g, &members).ok();
    let transit = transit_decomposition(
        &g,
        &members,
        path_policy(g.node_count(), args.sample_sources, args.seed),
    )?;
    let whole = shortest_path_stats(
        &g,
        path_policy(g.node_count(), args.sample_sources, args.seed.wrapping_add(1)),
    )?;

    prepare_out_dir(&args.out_dir)?;
    write_csv(
        &args.out_dir,
        "transit.csv",
        &transit.series(),
        crate::io::SERIES_DIGITS,
    )?;
    let summary = summary_table(
        "transit_summary",
        vec![
            ("club_size", transit.club_size.into()),
            ("club_links", club.as_ref().map(|c| c.internal_links).into()),
            ("club_density", club.as_ref().map(|c| c.density).into()),
            (
                "club_fully_connected",
                club.as_ref().map(|c| c.fully_connected as usize).into(),
            ),
            ("peripheral_nodes", transit.peripheral_nodes.into()),
            ("pairs", transit.pairs.into()),
            ("mean_hops", transit.mean_hops.into()),
            ("interior_in_club", transit.interior_in_club.into()),
            ("strict_pattern", transit.strict_pattern.into()),
            (
                "optimistic_interior_in_club",
                transit.optimistic_interior_in_club.into(),
            ),
            ("all_pairs_mean_path", whole.mean.into()),
            ("sources", transit.sources.into()),
            ("sampled", (transit.sampled as usize).into()),
        ],
    );
    write_csv(&args.out_dir, "transit_summary.csv", &summary, SUMMARY_DIGITS)?;
    print_summary(&summary);
    Ok(())
}

pub fn parse_fractions(s: &str) -> CliResult<Vec<f64>> {
    let fractions = s
        .split(',')
        .map(|t| {
            t.trim()
                .parse::<f64>()
                .map_err(|_| CliError::usage(format!("bad fraction `{t}`")))
        })
        .collect::<CliResult<Vec<f64>>>()?;
    crate::resilience::validate_fractions(&fractions)?;
    Ok(fractions)
}

pub fn cmd_attack(args: &AttackArgs) -> CliResult<()> {
    let fractions = parse_fractions(&args.fractions)?;
    if args.sample_sources == 0 {
        return Err(CliError::usage("--sample-sources must be at least 1"));
    }
    let strategies: &[RemovalStrategy] = match args.strategy {
        StrategyArg::Targeted => &[RemovalStrategy::TargetedDegree],
        StrategyArg::Random => &[RemovalStrategy::Random],
        StrategyArg::Both => &[RemovalStrategy::TargetedDegree, RemovalStrategy::Random],
    };
    let g = load_graph(&args.input)?;
    let mut runs = Vec::new();
    for &strategy in strategies {
        let plan = RemovalPlan::new(strategy, fractions.clone(), args.seed)?.with_sample_sources(args.sample_sources);
        runs.push((strategy, node_removal_experiment(&g, &plan)?));
    }
    let club_result = match args.club_link_fraction {
        Some(f) => {
            let giant = giant_for_paths(&g);
            let members = club_members(&giant, args.club.selector())?;
            Some(club_link_removal_experiment(
                &giant,
                &members,
                f,
                args.seed.wrapping_add(1000),
                args.sample_sources,
            )?)
        }
        None => None,
    };

    prepare_out_dir(&args.out_dir)?;
    let series = attack_series(runs.iter().map(|(s, p)| (*s, p.as_slice())));
    write_csv(&args.out_dir, "attack.csv", &series, crate::io::SERIES_DIGITS)?;
    if let Some(r) = club_result {
        let summary = summary_table(
            "clublinks",
            vec![
                ("internal_links", r.internal_links.into()),
                ("links_removed", r.links_removed.into()),
                ("connected", (r.connected as usize).into()),
                ("mean_path_before", r.mean_path_before.into()),
                ("mean_path_after", r.mean_path_after.into()),
                ("inflation", r.inflation().into()),
            ],
        );
        write_csv(&args.out_dir, "clublinks.csv", &summary, SUMMARY_DIGITS)?;
        print_summary(&summary);
    }
    let mut stdout = std::io::stdout().lock();
    write_series(&series, &mut stdout).map_err(CliError::from)?;
    Ok(())
}
