//! Command-line front end. Exit codes: 0 success, 1 the packing failed a
//! check, 2 usage or input errors. Errors go to stderr as a single line
//! `error: CODE: message`.

use std::io::Write;
use std::path::{Path, PathBuf};

use clap::{Parser, Subcommand, ValueEnum};
use serde::Serialize;
use serde_json::json;

use crate::builtin::{builtin_packing, PackingName};
use crate::classify::classify;
use crate::decomp::decompose_packing;
use crate::diagram::{diagram_for_packing, export, ExportFormat};
use crate::error::Error;
use crate::geometry::{validate_packing, RodPacking};
use crate::input::parse_packing;

pub const PROJECTION_ENV: &str = "RODLINK_PROJECTION_INDEX";

#[derive(Parser, Debug)]
#[command(
    name = "rodlink",
    version,
    about = "Rod packings in the 3-torus as links in the 3-sphere"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Check rods and pairwise disjointness; prints a JSON report
    Validate { file: PathBuf },
    /// Geometric type of the complement, as JSON
    Classify { file: PathBuf },
    /// Arcs of each non-standard rod in the two boxes, as JSON
    Decompose { file: PathBuf },
    /// Link diagram in the 3-sphere with Dehn fillings
    Export {
        file: PathBuf,
        #[arg(long, value_enum, default_value = "json")]
        format: Format,
        /// Output file (stdout when omitted)
        #[arg(short, long)]
        output: Option<PathBuf>,
    },
    /// Builtin packings
    Builtin {
        /// List the builtin names
        #[arg(long)]
        list: bool,
        /// Print this builtin as a packing file
        name: Option<String>,
    },
}

#[derive(Clone, Copy, Debug, ValueEnum)]
enum Format {
    Json,
    Pdcode,
}

struct Failure {
    code: i32,
    tag: String,
    message: String,
}

fn usage(tag: &str, message: impl Into<String>) -> Failure {
    Failure {
        code: 2,
        tag: tag.into(),
        message: message.into(),
    }
}

fn rejected(e: Error) -> Failure {
    Failure {
        code: 1,
        tag: e.code().into(),
        message: e.to_string(),
    }
}

fn load(path: &Path) -> Result<RodPacking, Failure> {
    let text = std::fs::read_to_string(path).map_err(|e| usage("IO", format!("{}: {e}", path.display())))?;
    let toml_hint = path.extension().is_some_and(|e| e == "toml");
    parse_packing(&text, toml_hint).map_err(|e| usage("MALFORMED_FILE", e.to_string()))
}

fn to_json<T: Serialize>(v: &T) -> Vec<u8> {
    let mut out = serde_json::to_vec_pretty(v).expect("value serializes");
    out.push(b'\n');
    out
}

fn projection_start(env: Option<String>) -> Result<usize, Failure> {
    match env {
        None => Ok(0),
        Some(s) => s.trim().parse().map_err(|_| {
            usage(
                "BAD_ENV",
                format!("{PROJECTION_ENV} must be a non-negative integer, got {s:?}"),
            )
        }),
    }
}

fn dispatch(cli: Cli, env: Option<String>, stdout: &mut dyn Write) -> Result<i32, Failure> {
    let write = |out: &mut dyn Write, bytes: &[u8]| out.write_all(bytes).map_err(|e| usage("IO", e.to_string()));
    match cli.command {
        Command::Validate { file } => {
            let p = load(&file)?;
            let report = validate_packing(&p);
            write(stdout, &to_json(&report))?;
            Ok(if report.ok { 0 } else { 1 })
        }
        Command::Classify { file } => {
            let p = load(&file)?;
            let c = classify(&p).map_err(rejected)?;
            write(stdout, &to_json(&c))?;
            Ok(0)
        }
        Command::Decompose { file } => {
            let p = load(&file)?;
            let d = decompose_packing(&p).map_err(rejected)?;
            let sequences: Vec<_> = d
                .sequences
                .iter()
                .map(|s| json!({"rod": p.labels[s.rod_index], "rod_index": s.rod_index, "arcs": s.arcs}))
                .collect();
            let skipped: Vec<_> = d
                .skipped
                .iter()
                .map(|&(i, s)| {
                    let standard = ["R_x", "R_y", "R_z"][s];
                    json!({"rod": p.labels[i], "rod_index": i, "standard": standard})
                })
                .collect();
            write(stdout, &to_json(&json!({"sequences": sequences, "skipped": skipped})))?;
            Ok(0)
        }
        Command::Export { file, format, output } => {
            let start = projection_start(env)?;
            let p = load(&file)?;
            let (d, f) = diagram_for_packing(&p, start).map_err(rejected)?;
            let fmt = match format {
                Format::Json => ExportFormat::Json,
                Format::Pdcode => ExportFormat::PdText,
            };
            let bytes = export(&d, &f, fmt);
            match output {
                Some(path) => {
                    std::fs::write(&path, bytes).map_err(|e| usage("IO", format!("{}: {e}", path.display())))?
                }
                None => write(stdout, &bytes)?,
            }
            Ok(0)
        }
        Command::Builtin { list, name } => match (list, name) {
            (true, _) => {
                let mut s = String::new();
                for n in PackingName::ALL {
                    s.push_str(&format!("{}\t{}\t{} rods\n", n, n.symbol(), builtin_packing(n).len()));
                }
                write(stdout, s.as_bytes())?;
                Ok(0)
            }
            (false, Some(name)) => {
                let n: PackingName = name.parse().map_err(|e: String| usage("USAGE", e))?;
                let p = builtin_packing(n);
                let rods: Vec<_> = p
                    .rods
                    .iter()
                    .zip(&p.labels)
                    .map(|(r, l)| json!({"label": l, "direction": r.direction.coords(), "basepoint": r.basepoint.coords()}))
                    .collect();
                write(stdout, &to_json(&json!({ "rods": rods })))?;
                Ok(0)
            }
            (false, None) => Err(usage("USAGE", "builtin needs --list or a name")),
        },
    }
}

/// Runs the tool on `argv` (program name first) and returns the exit code.
pub fn run(argv: &[String], env_projection: Option<String>, stdout: &mut dyn Write, stderr: &mut dyn Write) -> i32 {
    let cli = match Cli::try_parse_from(argv) {
        Ok(c) => c,
        Err(e) => {
            use clap::error::ErrorKind;
            if matches!(e.kind(), ErrorKind::DisplayHelp | ErrorKind::DisplayVersion) {
                let _ = write!(stdout, "{e}");
                return 0;
            }
            let first = e.to_string();
            let line = first
                .lines()
                .next()
                .unwrap_or("invalid arguments")
                .trim_start_matches("error: ");
            let _ = writeln!(stderr, "error: USAGE: {line}");
            return 2;
        }
    };
    match dispatch(cli, env_projection, stdout) {
        Ok(code) => code,
        Err(f) => {
            let message = f.message.replace('\n', " ");
            let message = message.strip_prefix(&format!("{}: ", f.tag)).unwrap_or(&message);
            let _ = writeln!(stderr, "error: {}: {}", f.tag, message);
            f.code
        }
    }
}
