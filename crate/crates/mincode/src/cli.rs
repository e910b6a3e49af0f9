//! `mincode` subcommands.

use std::io::Write;
use std::path::PathBuf;

use clap::{Args, Parser, Subcommand};
use mincode_core::blocking::SubspaceGuard;
use mincode_core::code::EnumerationGuard;
use mincode_core::constructions::predicted_weight_distribution;

use crate::analysis::{analyze, AnalysisOptions, AnalysisReport, Checks, Source};
use crate::error::{AppError, Result};
use crate::formats::{defining_set_json, parse_spec, read_defining_set, write_text};
use crate::parallel::Threads;
use crate::reproduce::{reproduce, reproduce_options, table};

#[derive(Debug, Parser)]
#[command(
    name = "mincode",
    version,
    about = "Minimal linear codes from cutting blocking sets"
)]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Args)]
pub struct SourceArgs {
    /// Construction spec: inline JSON or a path to a JSON file.
    #[arg(long, conflicts_with = "input")]
    pub spec: Option<String>,
    /// Defining-set file.
    #[arg(long = "in", value_name = "FILE")]
    pub input: Option<PathBuf>,
}

#[derive(Debug, Args)]
pub struct RunArgs {
    /// Largest message space q^k to enumerate.
    #[arg(long, value_name = "INT")]
    pub max_space: Option<u64>,
    /// Worker threads; 0 uses every core.
    #[arg(long, default_value_t = 0)]
    pub threads: usize,
}

#[derive(Debug, Args)]
pub struct FormatArgs {
    #[arg(long, conflicts_with = "text")]
    pub json: bool,
    #[arg(long)]
    pub text: bool,
}

impl FormatArgs {
    fn json_or(&self, default_json: bool) -> bool {
        self.json || (default_json && !self.text)
    }
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Materialize a construction spec as a defining-set file.
    Construct {
        #[arg(long)]
        spec: String,
        /// Output file; the set goes to stdout when omitted.
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Analyze a code: weights, minimality, blocking, bounds, closed forms.
    Analyze {
        #[command(flatten)]
        source: SourceArgs,
        /// Comma-separated subset of weights,minimality,blocking,bounds,predicted.
        #[arg(long)]
        checks: Option<String>,
        #[command(flatten)]
        run: RunArgs,
        #[command(flatten)]
        format: FormatArgs,
    },
    /// Run every check and report only the consistency verdict.
    Verify {
        #[command(flatten)]
        source: SourceArgs,
        #[command(flatten)]
        run: RunArgs,
        #[command(flatten)]
        format: FormatArgs,
    },
    /// Evaluate the bounds for linear and minimal codes.
    Audit {
        #[command(flatten)]
        source: SourceArgs,
        #[command(flatten)]
        run: RunArgs,
        #[command(flatten)]
        format: FormatArgs,
    },
    /// Rebuild the six worked examples and compare with their parameters.
    Reproduce {
        #[command(flatten)]
        run: RunArgs,
        #[command(flatten)]
        format: FormatArgs,
    },
}

fn load(source: &SourceArgs, subspaces: SubspaceGuard) -> Result<Source> {
    match (&source.spec, &source.input) {
        (Some(spec), None) => {
            let spec = parse_spec(spec)?;
            let built = spec.build(subspaces)?;
            Ok(Source {
                set: built.set,
                spec: Some(spec),
                guarantee: built.guarantee,
            })
        }
        (None, Some(path)) => Ok(Source {
            set: read_defining_set(path)?,
            spec: None,
            guarantee: None,
        }),
        _ => Err(AppError::Usage(
            "exactly one of --spec or --in is required".to_owned(),
        )),
    }
}

fn options(run: &RunArgs, checks: Checks) -> AnalysisOptions {
    AnalysisOptions {
        checks,
        space: run
            .max_space
            .map_or_else(EnumerationGuard::default, EnumerationGuard::new),
        subspaces: SubspaceGuard::default(),
        threads: Threads(run.threads),
    }
}

fn contradiction_of(report: &AnalysisReport) -> Result<()> {
    if report.contradictions.is_empty() {
        Ok(())
    } else {
        Err(AppError::Contradiction(report.contradictions.join("; ")))
    }
}

fn execute(cli: Cli, out: &mut dyn Write) -> Result<()> {
    let io = |e: std::io::Error| AppError::Io {
        path: PathBuf::from("<stdout>"),
        source: e,
    };
    match cli.command {
        Command::Construct { spec, out: path } => {
            let spec = parse_spec(&spec)?;
            let built = spec.build(SubspaceGuard::default())?;
            let text = defining_set_json(&built.set);
            let summary = format!(
                "{} vectors in GF({})^{}, span dimension {}",
                built.set.len(),
                built.set.field().order(),
                built.set.ambient_dim(),
                built.set.span_dim()
            );
            match path {
                Some(p) => {
                    write_text(&p, &text)?;
                    writeln!(out, "{summary}").map_err(io)?;
                }
                None => {
                    out.write_all(text.as_bytes()).map_err(io)?;
                    eprintln!("{summary}");
                }
            }
        }
        Command::Analyze {
            source,
            checks,
            run,
            format,
        } => {
            let checks = checks
                .as_deref()
                .map_or_else(|| Ok(Checks::all()), Checks::parse)?;
            let opts = options(&run, checks);
            let report = analyze(&load(&source, opts.subspaces)?, &opts)?;
            let text = if format.json_or(true) {
                report.to_json()
            } else {
                report.to_text()
            };
            out.write_all(text.as_bytes()).map_err(io)?;
            contradiction_of(&report)?;
        }
        Command::Verify {
            source,
            run,
            format,
        } => {
            let opts = options(&run, Checks::all());
            let report = analyze(&load(&source, opts.subspaces)?, &opts)?;
            if format.json_or(false) {
                let summary = serde_json::json!({
                    "schema": crate::analysis::SCHEMA,
                    "params": report.params(),
                    "minimal": report.minimal,
                    "consistent": report.contradictions.is_empty(),
                    "contradictions": report.contradictions,
                });
                writeln!(out, "{}", serde_json::to_string_pretty(&summary)?).map_err(io)?;
            } else {
                writeln!(
                    out,
                    "{}: {}",
                    report.params(),
                    if report.contradictions.is_empty() {
                        "all checks consistent"
                    } else {
                        "contradictions found"
                    }
                )
                .map_err(io)?;
                for c in &report.contradictions {
                    writeln!(out, "  {c}").map_err(io)?;
                }
            }
            contradiction_of(&report)?;
        }
        Command::Audit {
            source,
            run,
            format,
        } => {
            let opts = options(&run, Checks::parse("bounds")?);
            let report = analyze(&load(&source, opts.subspaces)?, &opts)?;
            let bounds = report.bounds.as_ref().expect("bounds requested");
            if format.json_or(false) {
                writeln!(out, "{}", serde_json::to_string_pretty(bounds)?).map_err(io)?;
            } else {
                out.write_all(report.to_text().as_bytes()).map_err(io)?;
            }
            contradiction_of(&report)?;
        }
        Command::Reproduce { run, format } => {
            let opts = reproduce_options(Threads(run.threads));
            let rows = reproduce(&opts, predicted_weight_distribution)?;
            if format.json_or(false) {
                writeln!(out, "{}", serde_json::to_string_pretty(&rows)?).map_err(io)?;
            } else {
                out.write_all(table(&rows).as_bytes()).map_err(io)?;
            }
            let failed: Vec<&str> = rows
                .iter()
                .filter(|r| !r.pass)
                .map(|r| r.name.as_str())
                .collect();
            if !failed.is_empty() {
                return Err(AppError::Mismatch(failed.join(", ")));
            }
        }
    }
    Ok(())
}

/// Parses `args` and runs the command, writing results to `out` and
/// diagnostics to stderr. Returns the process exit code.
pub fn run<I, T>(args: I, out: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { 1 } else { 0 };
            let _ = e.print();
            return code;
        }
    };
    match execute(cli, out) {
        Ok(()) => 0,
        Err(e) => {
            eprintln!("error: {e}");
            e.exit_code()
        }
    }
}
