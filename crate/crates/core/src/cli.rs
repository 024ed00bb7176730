//! `arrowhead` command line: `generate`, `stats`, `verify`, `route`.
//!
//! Exit codes: 0 success, 1 verification failure, 2 usage or I/O error,
//! 3 resource limit (level above the vertex ceiling).

use std::ffi::OsString;
use std::fs::File;
use std::io::{self, BufWriter, Write};
use std::path::{Path, PathBuf};
use std::str::FromStr;

use clap::{Args, Parser, Subcommand};

use crate::cayley::{Directedness, Family, GraphSpec, TorusVertex, Variant, DEFAULT_MAX_LEVEL};
use crate::error::Error;
use crate::export::{self, ExportFormat};
use crate::metrics;
use crate::verify::{self, ClaimId, SweepConfig, DEFAULT_SEED};

pub const EXIT_OK: i32 = 0;
pub const EXIT_VERIFY_FAILED: i32 = 1;
pub const EXIT_USAGE: i32 = 2;
pub const EXIT_RESOURCE: i32 = 3;

/// Environment variable holding the default vertex ceiling (max level).
pub const MAX_LEVEL_ENV: &str = "ARROWHEAD_MAX_LEVEL";

#[derive(Debug, Parser)]
#[command(
    name = "arrowhead",
    version,
    about = "Arrowhead and diamond Cayley graphs on the triangular torus"
)]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Write a graph as an edge list, DOT, adjacency CSV or JSON stats.
    Generate {
        #[command(flatten)]
        graph: GraphArgs,
        #[arg(long, default_value = "edge_list")]
        format: ExportFormat,
        /// Drop loops and repeated edges (edge_list and dot only).
        #[arg(long)]
        simple: bool,
        /// Output file (standard output when omitted).
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Print order, edge count, diameters, antipodals and histogram as JSON.
    Stats {
        #[command(flatten)]
        graph: GraphArgs,
    },
    /// Cross-check every closed form against the BFS oracle over a level range.
    Verify {
        /// Level range `MIN..MAX` (or a single level).
        #[arg(long = "n", default_value = "1..8")]
        range: LevelRange,
        /// Comma-separated families (T, ATdir, DTdir); all by default.
        #[arg(long, value_delimiter = ',')]
        families: Vec<Family>,
        /// Comma-separated claim ids; all by default.
        #[arg(long, value_delimiter = ',')]
        claims: Vec<ClaimId>,
        #[arg(long, default_value_t = DEFAULT_SEED)]
        seed: u64,
        /// Structured report file (standard output gets the table either way).
        #[arg(long)]
        out: Option<PathBuf>,
        /// Include per-check wall times (makes output run-dependent).
        #[arg(long)]
        timings: bool,
        #[arg(long, env = MAX_LEVEL_ENV, default_value_t = DEFAULT_MAX_LEVEL)]
        max_level: u32,
    },
    /// Print a shortest path between two vertices `x,y`.
    Route {
        #[command(flatten)]
        graph: GraphArgs,
        from: TorusVertex,
        to: TorusVertex,
    },
}

#[derive(Debug, Args)]
pub struct GraphArgs {
    /// Level; the graph has 4^n vertices.
    #[arg(long = "n")]
    pub n: u32,
    #[arg(long, default_value = "arrowhead")]
    pub variant: Variant,
    #[arg(long, conflicts_with = "undirected")]
    pub directed: bool,
    /// The default.
    #[arg(long)]
    pub undirected: bool,
    /// Vertex ceiling override.
    #[arg(long, env = MAX_LEVEL_ENV, default_value_t = DEFAULT_MAX_LEVEL)]
    pub max_level: u32,
}

impl GraphArgs {
    fn directedness(&self) -> Directedness {
        if self.directed {
            Directedness::Directed
        } else {
            Directedness::Undirected
        }
    }

    fn spec(&self) -> Result<GraphSpec, Error> {
        GraphSpec::with_ceiling(self.n, self.variant, self.directedness(), self.max_level)
    }
}

/// `MIN..MAX`, `MIN..=MAX` or a single level.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct LevelRange {
    pub min: u32,
    pub max: u32,
}

impl FromStr for LevelRange {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self, Error> {
        let parse = |t: &str| {
            t.trim()
                .parse::<u32>()
                .map_err(|_| Error::arg(format!("`{s}` is not a level or MIN..MAX range")))
        };
        let (min, max) = match s.split_once("..") {
            Some((a, b)) => (parse(a)?, parse(b.trim_start_matches('='))?),
            None => {
                let n = parse(s)?;
                (n, n)
            }
        };
        if min > max {
            return Err(Error::arg(format!("empty level range `{s}`")));
        }
        Ok(LevelRange { min, max })
    }
}

enum Failure {
    Usage(String),
    Resource(String),
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        match e {
            Error::LevelCeiling { .. } => Failure::Resource(e.to_string()),
            other => Failure::Usage(other.to_string()),
        }
    }
}

impl From<io::Error> for Failure {
    fn from(e: io::Error) -> Self {
        Failure::Usage(format!("i/o error: {e}"))
    }
}

/// Parses `args` (including the program name) and runs the command.
/// Returns the process exit code; diagnostics go to standard error.
pub fn run_from<I, T>(args: I, stdout: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { EXIT_USAGE } else { EXIT_OK };
            let _ = e.print();
            return code;
        }
    };
    match run(cli, stdout) {
        Ok(code) => code,
        Err(Failure::Usage(msg)) => {
            eprintln!("error: {msg}");
            EXIT_USAGE
        }
        Err(Failure::Resource(msg)) => {
            eprintln!("error: {msg}");
            EXIT_RESOURCE
        }
    }
}

fn open_out(path: &Option<PathBuf>, stdout: &mut dyn Write, body: &[u8]) -> Result<(), Failure> {
    match path {
        Some(p) => write_file(p, body),
        None => Ok(stdout.write_all(body)?),
    }
}

fn write_file(path: &Path, body: &[u8]) -> Result<(), Failure> {
    let mut w = BufWriter::new(File::create(path)?);
    w.write_all(body)?;
    w.flush()?;
    Ok(())
}

fn run(cli: Cli, stdout: &mut dyn Write) -> Result<i32, Failure> {
    match cli.command {
        Command::Generate {
            graph,
            format,
            simple,
            out,
        } => {
            let g = graph.spec()?;
            let mut buf = Vec::new();
            match format {
                ExportFormat::EdgeList => export::write_edge_list(&g, simple, &mut buf)?,
                ExportFormat::Dot => export::write_dot(&g, simple, &mut buf)?,
                ExportFormat::AdjacencyCsv => export::write_adjacency_csv(&g, &mut buf)??,
                ExportFormat::JsonStats => {
                    export::write_json_stats(&g, graph.max_level, &mut buf)??
                }
            }
            open_out(&out, stdout, &buf)?;
            Ok(EXIT_OK)
        }
        Command::Stats { graph } => {
            let g = graph.spec()?;
            let mut buf = Vec::new();
            export::write_json_stats(&g, graph.max_level, &mut buf)??;
            stdout.write_all(&buf)?;
            Ok(EXIT_OK)
        }
        Command::Verify {
            range,
            families,
            claims,
            seed,
            out,
            timings,
            max_level,
        } => {
            let mut cfg = SweepConfig::new(range.min, range.max)
                .seed(seed)
                .ceiling(max_level);
            if !families.is_empty() {
                cfg.families = families;
            }
            if !claims.is_empty() {
                cfg.claims = claims;
            }
            let report = verify::run_sweep(&cfg)?;
            if let Some(path) = &out {
                write_file(path, report.to_text(timings).as_bytes())?;
                stdout.write_all(report.to_table(timings).as_bytes())?;
            } else {
                stdout.write_all(report.to_text(timings).as_bytes())?;
            }
            for c in report.checks.iter().filter(|c| c.failed()) {
                eprintln!(
                    "FAILED {} n={} family={}: expected {} observed {}{}",
                    c.claim,
                    c.n,
                    c.family,
                    c.expected.as_ref().map_or("-".into(), |v| v.to_string()),
                    c.observed.as_ref().map_or("-".into(), |v| v.to_string()),
                    c.note.as_ref().map_or(String::new(), |n| format!(" ({n})")),
                );
            }
            Ok(if report.is_success() {
                EXIT_OK
            } else {
                EXIT_VERIFY_FAILED
            })
        }
        Command::Route { graph, from, to } => {
            let g = graph.spec()?;
            let path = metrics::shortest_path(&g, from, to)?;
            let hops: Vec<String> = path.iter().map(TorusVertex::to_string).collect();
            writeln!(stdout, "length {}", path.len() - 1)?;
            writeln!(stdout, "{}", hops.join(" "))?;
            Ok(EXIT_OK)
        }
    }
}
