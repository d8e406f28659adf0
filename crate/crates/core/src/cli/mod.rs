//! The `tropmod` command line.
//!
//! Exit codes: 0 when every certificate passes, 2 when one fails, 1 for
//! usage, input and I/O errors.

pub mod json;

use std::ffi::OsString;
use std::fs;
use std::io::Write;
use std::path::{Path, PathBuf};

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde_json::{json, Value};

use crate::divisors::{check_all_smooth, check_balanced, check_psi_balanced, moduli_fan, BalancingReport};
use crate::error::Error;
use crate::maps::{decompose_boundary, forget, relabel_dense, section};
use crate::moduli::{embed, link_graph, reconstruct, CoordinateSystem, ModuliPoint};
use crate::trees::{enumerate_types, Label, LeafSet};

pub const EXIT_OK: i32 = 0;
pub const EXIT_USAGE: i32 = 1;
pub const EXIT_CERTIFICATE: i32 = 2;

/// Environment variable capping the number of worker threads.
pub const THREADS_ENV: &str = "TROPMOD_THREADS";

#[derive(Debug, Parser)]
#[command(name = "tropmod", version, about = "Tropical moduli spaces of rational curves")]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Text,
    Json,
    Dot,
}

#[derive(Debug, Args)]
pub struct PointArgs {
    /// JSON point file.
    #[arg(long, value_name = "FILE")]
    pub point: PathBuf,
    #[arg(long, value_enum, default_value_t = Format::Text)]
    pub format: Format,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// List the combinatorial types with a given number of bounded edges.
    Enumerate {
        #[arg(long)]
        n: usize,
        #[arg(long)]
        dim: usize,
        #[arg(long, value_enum, default_value_t = Format::Text)]
        format: Format,
    },
    /// Double-ratio coordinates of a point.
    Embed(PointArgs),
    /// Recover a point from its coordinate vector.
    Reconstruct {
        #[arg(long)]
        n: usize,
        /// JSON array of coordinates.
        #[arg(long, value_name = "FILE")]
        vector: PathBuf,
        #[arg(long, value_enum, default_value_t = Format::Text)]
        format: Format,
    },
    /// Run a certificate.
    #[command(subcommand)]
    Check(CheckCommand),
    /// Forget a leaf.
    Forget {
        #[command(flatten)]
        point: PointArgs,
        #[arg(long)]
        j: Label,
        /// Renumber the remaining leaves 1..n-1.
        #[arg(long)]
        relabel: bool,
    },
    /// Apply the section through leaf k of the map forgetting a new leaf.
    Section {
        #[command(flatten)]
        point: PointArgs,
        #[arg(long)]
        k: Label,
    },
    /// Cut a compactified curve along its infinite edges.
    Decompose(PointArgs),
    /// Write a graph, fan or vector.
    #[command(subcommand)]
    Export(ExportCommand),
}

#[derive(Debug, Subcommand)]
pub enum CheckCommand {
    /// Balancing of the moduli fan (or of a fan file) at codimension-one faces.
    Balancing {
        #[arg(long, conflicts_with = "fan", required_unless_present = "fan")]
        n: Option<usize>,
        #[arg(long, value_name = "FILE")]
        fan: Option<PathBuf>,
        #[arg(long, value_enum, default_value_t = Format::Text)]
        format: Format,
    },
    /// Integral local smoothness at every codimension-one type.
    Smooth {
        #[arg(long)]
        n: usize,
        #[arg(long, value_enum, default_value_t = Format::Text)]
        format: Format,
    },
    /// Balancing of the psi divisor of leaf k (every leaf when omitted).
    Psi {
        #[arg(long)]
        n: usize,
        #[arg(long)]
        k: Option<Label>,
        #[arg(long, value_enum, default_value_t = Format::Text)]
        format: Format,
    },
}

#[derive(Debug, Subcommand)]
pub enum ExportCommand {
    /// Link of the origin (rays and 2-dimensional cones).
    Link {
        #[arg(long)]
        n: usize,
        #[arg(long, value_enum, default_value_t = Format::Dot)]
        format: Format,
        #[arg(long, value_name = "FILE")]
        output: Option<PathBuf>,
    },
    /// The moduli fan as JSON.
    Fan {
        #[arg(long)]
        n: usize,
        #[arg(long, value_name = "FILE")]
        output: Option<PathBuf>,
    },
    /// The coordinate vector of a point as JSON.
    Embed {
        #[arg(long, value_name = "FILE")]
        point: PathBuf,
        #[arg(long, value_name = "FILE")]
        output: Option<PathBuf>,
    },
}

#[derive(Debug, thiserror::Error)]
enum CliError {
    #[error(transparent)]
    Model(#[from] Error),
    #[error("{path}: {source}")]
    Io { path: String, source: std::io::Error },
    #[error("{path}: {source}")]
    Json { path: String, source: serde_json::Error },
    #[error("{0}")]
    Usage(String),
}

type CliResult<T> = std::result::Result<T, CliError>;

fn read_json(path: &Path) -> CliResult<Value> {
    let text = fs::read_to_string(path)
        .map_err(|source| CliError::Io { path: path.display().to_string(), source })?;
    serde_json::from_str(&text).map_err(|source| CliError::Json { path: path.display().to_string(), source })
}

fn read_point(path: &Path) -> CliResult<ModuliPoint> {
    Ok(json::point_from_json(&read_json(path)?)?)
}

fn pretty(v: &Value) -> String {
    let mut s = serde_json::to_string_pretty(v).expect("JSON values serialize");
    s.push('\n');
    s
}

fn emit(out: &mut dyn Write, output: Option<&Path>, text: &str) -> CliResult<()> {
    match output {
        Some(path) => {
            fs::write(path, text).map_err(|source| CliError::Io { path: path.display().to_string(), source })
        }
        None => out
            .write_all(text.as_bytes())
            .map_err(|source| CliError::Io { path: "<stdout>".into(), source }),
    }
}

fn text_or_json(format: Format) -> CliResult<bool> {
    match format {
        Format::Text => Ok(false),
        Format::Json => Ok(true),
        Format::Dot => Err(CliError::Usage("--format dot only applies to `export link`".into())),
    }
}

fn point_text(x: &ModuliPoint) -> String {
    let mut s = format!("n = {}", x.n());
    if LeafSet::range(x.n()).ok() != Some(x.leaves()) {
        s.push_str(&format!(" (leaves {:?})", x.leaves()));
    }
    s.push('\n');
    for (split, len) in x.lengths() {
        s.push_str(&format!("{}  {}\n", split.bipartition(), len));
    }
    s
}

fn point_output(x: &ModuliPoint, format: Format) -> CliResult<String> {
    Ok(if text_or_json(format)? { pretty(&json::point_to_json(x)) } else { point_text(x) })
}

fn report_text(r: &BalancingReport) -> String {
    let mut s = format!(
        "face {}: {}",
        r.face,
        if r.balanced { "balanced" } else { "UNBALANCED" }
    );
    if let Some(smooth) = r.smooth {
        s.push_str(if smooth { ", smooth" } else { ", NOT SMOOTH" });
    }
    let dirs: Vec<String> = r.adjacent.iter().map(|a| format!("{}x{}", a.weight, a.split)).collect();
    s.push_str(&format!(" [{}]\n", dirs.join(" ")));
    s
}

fn reports_output(what: &str, reports: &[BalancingReport], format: Format) -> CliResult<(String, bool)> {
    let passed = reports.iter().all(BalancingReport::passed);
    let text = if text_or_json(format)? {
        pretty(&json!({
            "check": what,
            "passed": passed,
            "faces": reports.len(),
            "reports": reports.iter().map(json::report_to_json).collect::<Vec<_>>(),
        }))
    } else {
        let mut s: String = reports.iter().map(report_text).collect();
        let failed = reports.iter().filter(|r| !r.passed()).count();
        s.push_str(&format!(
            "{what}: {} of {} faces passed{}\n",
            reports.len() - failed,
            reports.len(),
            if passed { "" } else { " -- FAILED" }
        ));
        s
    };
    Ok((text, passed))
}

fn execute(cli: Cli, out: &mut dyn Write) -> CliResult<i32> {
    let mut certificate_ok = true;
    match cli.command {
        Command::Enumerate { n, dim, format } => {
            let types = enumerate_types(n, dim)?;
            let text = if text_or_json(format)? {
                pretty(&json!({
                    "n": n,
                    "dim": dim,
                    "count": types.len(),
                    "types": types.iter().map(json::type_splits).collect::<Vec<_>>(),
                }))
            } else {
                let mut s = format!("{} types\n", types.len());
                for t in &types {
                    s.push_str(&format!("{t}\n"));
                }
                s
            };
            emit(out, None, &text)?;
        }
        Command::Embed(args) => {
            let x = read_point(&args.point)?;
            let v = embed(&x)?;
            let text = if text_or_json(args.format)? {
                pretty(&json::vector_to_json(&v))
            } else {
                let coords = CoordinateSystem::new(x.leaves())?;
                coords
                    .indices()
                    .iter()
                    .zip(v.entries())
                    .map(|(r, e)| format!("{r}  {e}\n"))
                    .collect()
            };
            emit(out, None, &text)?;
        }
        Command::Reconstruct { n, vector, format } => {
            let v = json::vector_from_json(&read_json(&vector)?, LeafSet::range(n)?)?;
            emit(out, None, &point_output(&reconstruct(&v)?, format)?)?;
        }
        Command::Check(check) => {
            let (what, reports, format) = match check {
                CheckCommand::Balancing { n, fan, format } => {
                    let fan = match (n, fan) {
                        (_, Some(path)) => json::fan_from_json(&read_json(&path)?)?,
                        (Some(n), None) => moduli_fan(n)?,
                        (None, None) => return Err(CliError::Usage("need --n or --fan".into())),
                    };
                    ("balancing", check_balanced(&fan)?, format)
                }
                CheckCommand::Smooth { n, format } => ("smooth", check_all_smooth(n)?, format),
                CheckCommand::Psi { n, k, format } => {
                    let ks: Vec<Label> = match k {
                        Some(k) => vec![k],
                        None => (1..=n).collect(),
                    };
                    let mut all = Vec::new();
                    for k in ks {
                        all.extend(check_psi_balanced(n, k)?);
                    }
                    ("psi", all, format)
                }
            };
            let (text, passed) = reports_output(what, &reports, format)?;
            certificate_ok = passed;
            emit(out, None, &text)?;
        }
        Command::Forget { point, j, relabel } => {
            let mut x = forget(&read_point(&point.point)?, j)?;
            if relabel {
                x = relabel_dense(&x)?;
            }
            emit(out, None, &point_output(&x, point.format)?)?;
        }
        Command::Section { point, k } => {
            let x = section(&read_point(&point.point)?, k)?;
            emit(out, None, &point_output(&x, point.format)?)?;
        }
        Command::Decompose(args) => {
            let d = decompose_boundary(&read_point(&args.point)?)?;
            let text = if text_or_json(args.format)? {
                pretty(&json::decomposition_to_json(&d))
            } else {
                let mut s = format!("{} components\n", d.components.len());
                for (i, c) in d.components.iter().enumerate() {
                    s.push_str(&format!("component {i} (markers {:?}): {}", c.markers, point_text(&c.point)));
                }
                for g in &d.gluings {
                    s.push_str(&format!(
                        "glue marker {} along {} between components {} and {}\n",
                        g.marker,
                        g.split.bipartition(),
                        g.components[0],
                        g.components[1]
                    ));
                }
                s
            };
            emit(out, None, &text)?;
        }
        Command::Export(export) => match export {
            ExportCommand::Link { n, format, output } => {
                let g = link_graph(n)?;
                let text = match format {
                    Format::Dot => g.to_dot(),
                    Format::Json => pretty(&json::link_to_json(&g)),
                    Format::Text => {
                        return Err(CliError::Usage("export link supports --format dot or json".into()))
                    }
                };
                emit(out, output.as_deref(), &text)?;
            }
            ExportCommand::Fan { n, output } => {
                emit(out, output.as_deref(), &pretty(&json::fan_to_json(&moduli_fan(n)?)))?;
            }
            ExportCommand::Embed { point, output } => {
                let v = embed(&read_point(&point)?)?;
                emit(out, output.as_deref(), &pretty(&json::vector_to_json(&v)))?;
            }
        },
    }
    Ok(if certificate_ok { EXIT_OK } else { EXIT_CERTIFICATE })
}

/// Parses `args` (program name first) and runs the command, writing results
/// to `out` and diagnostics to `err`. Returns the process exit code.
pub fn run<I, T>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            use clap::error::ErrorKind;
            let info = matches!(e.kind(), ErrorKind::DisplayHelp | ErrorKind::DisplayVersion);
            let code = if info { EXIT_OK } else { EXIT_USAGE };
            let target: &mut dyn Write = if info { out } else { err };
            let _ = write!(target, "{}", e.render());
            return code;
        }
    };
    match execute(cli, out) {
        Ok(code) => code,
        Err(e) => {
            let _ = writeln!(err, "error: {e}");
            EXIT_USAGE
        }
    }
}

/// Sizes the global thread pool from [`THREADS_ENV`], if set.
pub fn configure_threads() -> Result<(), String> {
    let Ok(value) = std::env::var(THREADS_ENV) else { return Ok(()) };
    let threads: usize = value
        .trim()
        .parse()
        .map_err(|_| format!("{THREADS_ENV} must be a positive integer, got {value:?}"))?;
    if threads == 0 {
        return Err(format!("{THREADS_ENV} must be positive"));
    }
    rayon::ThreadPoolBuilder::new()
        .num_threads(threads)
        .build_global()
        .map_err(|e| e.to_string())
}
