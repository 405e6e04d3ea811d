//! The `algroup` command line.
//!
//! ```text
//! algroup invariants <file> [--n N] [--ell L] [--format text|json]
//! algroup homspace <file> [--format text|json]
//! algroup verify --suite all|wedge|hom|eh|exactness|betti [--max-order K]
//! algroup examples list | show <name>
//! algroup --batch <dir> [--n N] [--ell L] [--format text|json]
//! ```
//!
//! Exit status is 0 on success, 1 when a descriptor or computation fails or a
//! verification suite finds a mismatch, and 2 on bad usage.

pub mod corpus;
pub mod format;
pub mod report;

use std::ffi::OsString;
use std::io::Write;
use std::path::{Path, PathBuf};

use clap::{Args, CommandFactory, Parser, Subcommand, ValueEnum};
use rayon::prelude::*;
use serde::Serialize;
use thiserror::Error;

use crate::descriptors::{Descriptor, Strictness, ValidationError};
use crate::invariants::InvariantError;
use crate::oracle::{run_suite, OracleError, Suite};
pub use format::{parse_fields, to_text, ParseError};
pub use report::{homspace_report, invariants_report, Report};

pub const EXIT_OK: i32 = 0;
pub const EXIT_FAILURE: i32 = 1;
pub const EXIT_USAGE: i32 = 2;

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, ValueEnum)]
pub enum Format {
    #[default]
    Text,
    Json,
}

#[derive(Debug, Parser)]
#[command(
    name = "algroup",
    version,
    about = "Invariants of connected algebraic groups from their numerical data",
    args_conflicts_with_subcommands = true,
    subcommand_negates_reqs = true
)]
struct Cli {
    #[command(subcommand)]
    command: Option<Command>,
    /// Process every `.desc` file in a directory.
    #[arg(long, value_name = "DIR")]
    batch: Option<PathBuf>,
    #[command(flatten)]
    opts: ComputeOpts,
}

#[derive(Debug, Args, Clone, Copy)]
struct ComputeOpts {
    /// Coefficients Z/n for torsion, cohomology and the Brauer sequence.
    #[arg(long, value_parser = clap::value_parser!(u64).range(1..))]
    n: Option<u64>,
    /// Prime ℓ for the ℓ-primary Brauer corank.
    #[arg(long)]
    ell: Option<u64>,
    #[arg(long, value_enum, default_value_t)]
    format: Format,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Invariants of a group descriptor.
    Invariants {
        file: PathBuf,
        #[command(flatten)]
        opts: ComputeOpts,
    },
    /// Fundamental group bound for a homogeneous space descriptor.
    Homspace {
        file: PathBuf,
        #[arg(long, value_enum, default_value_t)]
        format: Format,
    },
    /// Run brute-force verification suites.
    Verify {
        #[arg(long, value_enum)]
        suite: Suite,
        /// Order bound for the wedge, hom and eh suites.
        #[arg(long)]
        max_order: Option<u64>,
    },
    /// The bundled descriptor files.
    Examples {
        #[command(subcommand)]
        action: ExamplesAction,
    },
}

#[derive(Debug, Subcommand)]
enum ExamplesAction {
    List,
    Show { name: String },
}

#[derive(Debug, Error)]
pub enum CliError {
    #[error("{path}: {source}")]
    Io {
        path: String,
        source: std::io::Error,
    },
    #[error("{path}: {source}")]
    Parse { path: String, source: ParseError },
    #[error("{path}: {source}")]
    Invalid {
        path: String,
        source: ValidationError,
    },
    #[error("{path}: {source}")]
    Compute {
        path: String,
        source: InvariantError,
    },
    #[error("{path}: describes a {found}; use `{command}`")]
    WrongKind {
        path: String,
        found: &'static str,
        command: &'static str,
    },
    #[error(transparent)]
    Oracle(#[from] OracleError),
    #[error("no example named `{0}`; try `algroup examples list`")]
    UnknownExample(String),
}

impl CliError {
    pub fn exit_code(&self) -> i32 {
        match self {
            CliError::Oracle(_) | CliError::UnknownExample(_) => EXIT_USAGE,
            _ => EXIT_FAILURE,
        }
    }
}

/// Reads and validates a descriptor file.
pub fn load_descriptor(path: &Path) -> Result<Descriptor, CliError> {
    let name = path.display().to_string();
    let text = std::fs::read_to_string(path).map_err(|source| CliError::Io {
        path: name.clone(),
        source,
    })?;
    let fields = parse_fields(&text).map_err(|source| CliError::Parse {
        path: name.clone(),
        source,
    })?;
    fields
        .validate(Strictness::Lenient)
        .map_err(|source| CliError::Invalid { path: name, source })
}

fn report_for(
    path: &Path,
    d: &Descriptor,
    n: Option<u64>,
    ell: Option<u64>,
) -> Result<Report, CliError> {
    let r = match d {
        Descriptor::Group(g) => invariants_report(g, n, ell),
        Descriptor::HomSpace(h) => homspace_report(h),
    };
    r.map_err(|source| CliError::Compute {
        path: path.display().to_string(),
        source,
    })
}

fn render(r: &Report, format: Format) -> String {
    match format {
        Format::Text => r.to_string(),
        Format::Json => r.to_json(),
    }
}

fn cmd_invariants(file: &Path, o: ComputeOpts) -> Result<String, CliError> {
    let d = load_descriptor(file)?;
    if matches!(d, Descriptor::HomSpace(_)) {
        return Err(CliError::WrongKind {
            path: file.display().to_string(),
            found: "homogeneous space",
            command: "algroup homspace",
        });
    }
    Ok(render(&report_for(file, &d, o.n, o.ell)?, o.format))
}

fn cmd_homspace(file: &Path, format: Format) -> Result<String, CliError> {
    let d = load_descriptor(file)?;
    if matches!(d, Descriptor::Group(_)) {
        return Err(CliError::WrongKind {
            path: file.display().to_string(),
            found: "group",
            command: "algroup invariants",
        });
    }
    Ok(render(&report_for(file, &d, None, None)?, format))
}

#[derive(Serialize)]
struct BatchEntry {
    file: String,
    #[serde(skip_serializing_if = "Option::is_none")]
    report: Option<Report>,
    #[serde(skip_serializing_if = "Option::is_none")]
    error: Option<String>,
}

#[derive(Serialize)]
struct Batch {
    batch: Vec<BatchEntry>,
}

/// Every `.desc` file of `dir`, each routed by its kind. The second value is
/// false when any file failed.
fn cmd_batch(dir: &Path, o: ComputeOpts) -> Result<(String, bool), CliError> {
    let io = |source| CliError::Io {
        path: dir.display().to_string(),
        source,
    };
    let mut files: Vec<PathBuf> = std::fs::read_dir(dir)
        .map_err(io)?
        .filter_map(|e| e.ok().map(|e| e.path()))
        .filter(|p| p.is_file() && p.extension().is_some_and(|x| x == "desc"))
        .collect();
    files.sort();
    let entries: Vec<BatchEntry> = files
        .par_iter()
        .map(|p| {
            let file = p
                .file_name()
                .map(|f| f.to_string_lossy().into_owned())
                .unwrap_or_default();
            match load_descriptor(p).and_then(|d| report_for(p, &d, o.n, o.ell)) {
                Ok(r) => BatchEntry {
                    file,
                    report: Some(r),
                    error: None,
                },
                Err(e) => BatchEntry {
                    file,
                    report: None,
                    error: Some(e.to_string()),
                },
            }
        })
        .collect();
    let ok = entries.iter().all(|e| e.error.is_none());
    let out = match o.format {
        Format::Json => {
            let mut s = serde_json::to_string_pretty(&Batch { batch: entries })
                .expect("reports always serialize");
            s.push('\n');
            s
        }
        Format::Text => {
            let mut s = String::new();
            for e in &entries {
                s.push_str(&format!("== {} ==\n", e.file));
                match (&e.report, &e.error) {
                    (Some(r), _) => s.push_str(&r.to_string()),
                    (_, Some(err)) => s.push_str(&format!("error: {err}\n")),
                    _ => {}
                }
            }
            s
        }
    };
    Ok((out, ok))
}

fn cmd_verify(suite: Suite, max_order: Option<u64>) -> Result<(String, bool), CliError> {
    let verdicts = run_suite(suite, max_order)?;
    let mut s = String::new();
    for v in &verdicts {
        s.push_str(&format!("{v}\n"));
    }
    Ok((s, verdicts.iter().all(|v| v.passed())))
}

fn cmd_examples(action: &ExamplesAction) -> Result<String, CliError> {
    match action {
        ExamplesAction::List => Ok(corpus::CORPUS
            .iter()
            .map(|e| format!("{:<30}{}\n", e.name, e.summary()))
            .collect()),
        ExamplesAction::Show { name } => corpus::find(name)
            .map(|e| e.text.to_string())
            .ok_or_else(|| CliError::UnknownExample(name.clone())),
    }
}

/// Runs the command line with the given arguments (program name first) and
/// returns the exit status.
pub fn run<I, T>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(c) => c,
        Err(e) => {
            let text = e.render().to_string();
            return if e.use_stderr() {
                let _ = write!(err, "{text}");
                EXIT_USAGE
            } else {
                let _ = write!(out, "{text}");
                EXIT_OK
            };
        }
    };
    let result: Result<(String, bool), CliError> = match (&cli.command, &cli.batch) {
        (Some(Command::Invariants { file, opts }), _) => {
            cmd_invariants(file, *opts).map(|s| (s, true))
        }
        (Some(Command::Homspace { file, format }), _) => {
            cmd_homspace(file, *format).map(|s| (s, true))
        }
        (Some(Command::Verify { suite, max_order }), _) => cmd_verify(*suite, *max_order),
        (Some(Command::Examples { action }), _) => cmd_examples(action).map(|s| (s, true)),
        (None, Some(dir)) => cmd_batch(dir, cli.opts),
        (None, None) => {
            let _ = write!(err, "{}", Cli::command().render_usage());
            let _ = writeln!(err, "\nexpected a subcommand or --batch <DIR>");
            return EXIT_USAGE;
        }
    };
    match result {
        Ok((text, ok)) => {
            let _ = write!(out, "{text}");
            if ok {
                EXIT_OK
            } else {
                EXIT_FAILURE
            }
        }
        Err(e) => {
            let _ = writeln!(err, "error: {e}");
            e.exit_code()
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn call(args: &[&str]) -> (i32, String, String) {
        let (mut out, mut err) = (Vec::new(), Vec::new());
        let code = run(
            std::iter::once("algroup").chain(args.iter().copied()),
            &mut out,
            &mut err,
        );
        (
            code,
            String::from_utf8(out).unwrap(),
            String::from_utf8(err).unwrap(),
        )
    }

    #[test]
    fn usage_errors() {
        assert_eq!(call(&[]).0, EXIT_USAGE);
        assert_eq!(call(&["verify", "--suite", "bogus"]).0, EXIT_USAGE);
        assert_eq!(call(&["frobnicate"]).0, EXIT_USAGE);
        assert_eq!(call(&["examples", "show", "nope"]).0, EXIT_USAGE);
        assert_eq!(call(&["--help"]).0, EXIT_OK);
    }

    #[test]
    fn examples_listing() {
        let (code, out, _) = call(&["examples", "list"]);
        assert_eq!(code, EXIT_OK);
        assert!(out.lines().count() >= 7);
        let (code, out, _) = call(&["examples", "show", "elliptic-curve"]);
        assert_eq!(code, EXIT_OK);
        assert!(out.contains("free over Z_(p') of rank 2g"));
    }

    #[test]
    fn missing_file() {
        let (code, _, err) = call(&["invariants", "/nonexistent/x.desc"]);
        assert_eq!(code, EXIT_FAILURE);
        assert!(err.starts_with("error: /nonexistent/x.desc"));
    }
}
