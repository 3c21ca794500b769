//! Command-line driver: ingest a tetrahedral mesh, convert it to a
//! polyhedral mesh, export results and statistics.

mod table;

use std::path::PathBuf;
use std::process::ExitCode;
use std::time::Instant;

use clap::{Args, Parser, Subcommand};

use polytet::criteria::{self, JoiningCriterion};
use polytet::io::{self, FormatError};
use polytet::metrics::{collect_stats, summarize};
use polytet::{convert, MeshError, RepairMode, TetMeshF64};

#[derive(Parser)]
#[command(name = "polytet", version, about = "Convert tetrahedral meshes into polyhedral meshes")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Convert a tetrahedral mesh into a polyhedral mesh.
    Convert(ConvertArgs),
    /// Summarize previously written stats files.
    Stats(StatsArgs),
}

#[derive(Args)]
struct ConvertArgs {
    /// Input .node file (requires --ele).
    #[arg(long)]
    node: Option<PathBuf>,
    /// Input .ele file (requires --node).
    #[arg(long)]
    ele: Option<PathBuf>,
    /// Generate an n-by-n-by-n structured grid instead of reading files.
    #[arg(long, value_name = "N")]
    grid: Option<usize>,
    /// Lattice spacing for --grid.
    #[arg(long, default_value_t = 1.0)]
    spacing: f64,
    /// Joining criterion: area | incircle.
    #[arg(long)]
    criterion: String,
    /// Repair mode: split | dissolve | none.
    #[arg(long, default_value = "split")]
    repair: String,
    /// Write the polyhedral mesh here (legacy unstructured-grid text).
    #[arg(long)]
    out: Option<PathBuf>,
    /// Write the stats JSON here.
    #[arg(long)]
    stats: Option<PathBuf>,
    /// Relative tie epsilon for metric comparisons.
    #[arg(long, default_value_t = 1e-9)]
    epsilon: f64,
    /// Worker threads (default: all cores).
    #[arg(long)]
    threads: Option<usize>,
}

#[derive(Args)]
struct StatsArgs {
    /// Stats JSON files, one summary row each.
    files: Vec<PathBuf>,
}

enum CliError {
    /// Bad flags or unparseable input (exit 1).
    Usage(String),
    /// Structurally invalid mesh (exit 2).
    Mesh(String),
    /// Filesystem failure (exit 3).
    Io(String),
}

impl CliError {
    fn exit_code(&self) -> u8 {
        match self {
            Self::Usage(_) => 1,
            Self::Mesh(_) => 2,
            Self::Io(_) => 3,
        }
    }

    fn message(&self) -> &str {
        match self {
            Self::Usage(m) | Self::Mesh(m) | Self::Io(m) => m,
        }
    }
}

impl From<FormatError> for CliError {
    fn from(err: FormatError) -> Self {
        match err {
            FormatError::Io(e) => Self::Io(e.to_string()),
            FormatError::NotSimple { .. } => Self::Mesh(err.to_string()),
            FormatError::Parse { .. } | FormatError::Json(_) => Self::Usage(err.to_string()),
        }
    }
}

impl From<MeshError> for CliError {
    fn from(err: MeshError) -> Self {
        Self::Mesh(err.to_string())
    }
}

fn main() -> ExitCode {
    env_logger::Builder::from_env(env_logger::Env::default().default_filter_or("warn")).init();
    let cli = Cli::parse();
    let result = match cli.command {
        Command::Convert(args) => cmd_convert(args),
        Command::Stats(args) => cmd_stats(args),
    };
    match result {
        Ok(()) => ExitCode::SUCCESS,
        Err(err) => {
            eprintln!("error: {}", err.message());
            if let CliError::Usage(_) = err {
                eprintln!("run `polytet --help` for usage");
            }
            ExitCode::from(err.exit_code())
        }
    }
}

fn cmd_convert(args: ConvertArgs) -> Result<(), CliError> {
    let criterion: Box<dyn JoiningCriterion<f64>> =
        criteria::builtin(&args.criterion).ok_or_else(|| {
            CliError::Usage(format!(
                "unknown criterion '{}' (expected one of: {})",
                args.criterion,
                criteria::BUILTIN_CRITERIA.join(", ")
            ))
        })?;
    let mode: RepairMode = args.repair.parse().map_err(CliError::Usage)?;
    if !args.epsilon.is_finite() || args.epsilon < 0.0 {
        return Err(CliError::Usage(format!(
            "tie epsilon must be finite and non-negative, got {}",
            args.epsilon
        )));
    }

    let (positions, quads) = match (&args.node, &args.ele, args.grid) {
        (Some(node), Some(ele), None) => io::load_node_ele(node, ele)?,
        (None, None, Some(n)) => {
            if n == 0 {
                return Err(CliError::Usage("--grid must be at least 1".into()));
            }
            io::generate_kuhn_grid(n, args.spacing)
        }
        _ => {
            return Err(CliError::Usage(
                "exactly one input source required: --node with --ele, or --grid".into(),
            ))
        }
    };
    let mesh = TetMeshF64::build_from_tets(positions, &quads)?;

    if let Some(threads) = args.threads {
        // Ignore the error from configuring the pool twice; only the first
        // configuration in the process can win.
        let _ = rayon::ThreadPoolBuilder::new().num_threads(threads).build_global();
    }

    let start = Instant::now();
    let outcome = convert(&mesh, criterion.as_ref(), args.epsilon, mode);
    let elapsed_ms = start.elapsed().as_secs_f64() * 1e3;

    let mut record = collect_stats(&mesh, &outcome.raw, &outcome.labels, elapsed_ms);
    record.polyhedra_after_repair = Some(outcome.repaired.len() as u64);

    print!("{}", table::render_stats_table(std::slice::from_ref(&record)));
    println!(
        "P={} reduction={:.1}% time={:.1}ms",
        record.polyhedra,
        100.0 * record.reduction_fraction(),
        record.time_ms
    );

    if let Some(path) = &args.out {
        io::write_polymesh_vtk(path, &mesh, &outcome.repaired)?;
    }
    if let Some(path) = &args.stats {
        // Wall-clock time is not reproducible; zero it in the persisted file
        // so identical inputs produce identical bytes.
        let mut persisted = record.clone();
        persisted.time_ms = 0.0;
        io::write_stats_json(path, std::slice::from_ref(&persisted))?;
    }
    Ok(())
}

fn cmd_stats(args: StatsArgs) -> Result<(), CliError> {
    if args.files.is_empty() {
        return Err(CliError::Usage("at least one stats JSON file required".into()));
    }
    let mut summaries = Vec::new();
    for path in &args.files {
        let records = io::read_stats_json(path)?;
        print!("{}", table::render_stats_table(&records));
        let summary = summarize(&records)
            .map_err(|e| CliError::Usage(format!("{}: {e}", path.display())))?;
        let name = path
            .file_stem()
            .map(|s| s.to_string_lossy().into_owned())
            .unwrap_or_else(|| path.display().to_string());
        summaries.push((name, summary));
    }
    print!("{}", table::render_summary_table(&summaries));
    Ok(())
}
