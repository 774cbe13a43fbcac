//! Command-line front end. [`run`] never panics on user input and never
//! touches the process; the binary only forwards its output.
//!
//! Exit codes: `0` success, `2` parse or usage error, `3` violated
//! mathematical precondition (zero polynomial, wrong field, size limit, …).

mod args;
mod commands;
mod input;

use std::time::Instant;

use clap::Parser;
use serde_json::{json, Map, Value};

pub use args::Cli;
pub use input::{parse_poly_document, read_poly_file};

/// Version tag of the JSON certificate layout.
pub const SCHEMA_VERSION: &str = "1";

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CliOutput {
    pub code: i32,
    pub stdout: String,
    pub stderr: String,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum CliError {
    Usage(String),
    Lib(crate::Error),
}

impl CliError {
    fn code(&self) -> i32 {
        match self {
            CliError::Usage(_) => 2,
            CliError::Lib(e) if e.is_input_error() => 2,
            CliError::Lib(_) => 3,
        }
    }
}

impl std::fmt::Display for CliError {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            CliError::Usage(m) => write!(f, "{m}"),
            CliError::Lib(e) => write!(f, "{e}"),
        }
    }
}

impl From<crate::Error> for CliError {
    fn from(e: crate::Error) -> Self {
        CliError::Lib(e)
    }
}

/// A successful command: what was read and what was computed.
pub(crate) struct Report {
    pub command: &'static str,
    pub inputs: Map<String, Value>,
    pub result: Map<String, Value>,
}

/// Builds the certificate document. Keys come out sorted because
/// `serde_json::Map` is ordered.
pub fn certificate_document(
    command: &str,
    inputs: Map<String, Value>,
    result: Map<String, Value>,
    timing_ms: u64,
) -> Value {
    json!({
        "schema_version": SCHEMA_VERSION,
        "command": command,
        "inputs": inputs,
        "result": result,
        "timing_ms": timing_ms,
    })
}

fn render_text(report: &Report) -> String {
    let mut out = format!("{}\n", report.command);
    for (k, v) in &report.result {
        match v {
            Value::String(s) => out.push_str(&format!("  {k}: {s}\n")),
            other => out.push_str(&format!("  {k}: {other}\n")),
        }
    }
    out
}

/// Parses `argv` (program name first) and runs one subcommand.
pub fn run<S: AsRef<str>>(argv: &[S]) -> CliOutput {
    let argv: Vec<&str> = argv.iter().map(AsRef::as_ref).collect();
    let cli = match Cli::try_parse_from(&argv) {
        Ok(c) => c,
        Err(e) => {
            let text = e.render().to_string();
            return if e.use_stderr() {
                CliOutput {
                    code: 2,
                    stdout: String::new(),
                    stderr: text,
                }
            } else {
                CliOutput {
                    code: 0,
                    stdout: text,
                    stderr: String::new(),
                }
            };
        }
    };
    let start = Instant::now();
    let outcome = std::panic::catch_unwind(|| commands::dispatch(&cli.command));
    let outcome = match outcome {
        Ok(r) => r,
        Err(_) => {
            return CliOutput {
                code: 70,
                stdout: String::new(),
                stderr: "error: internal failure\n".into(),
            }
        }
    };
    match outcome {
        Ok(report) => {
            let timing = if cli.timing {
                start.elapsed().as_millis() as u64
            } else {
                0
            };
            let stdout = if cli.json {
                let doc = certificate_document(
                    report.command,
                    report.inputs.clone(),
                    report.result.clone(),
                    timing,
                );
                let mut s = serde_json::to_string_pretty(&doc).expect("serializable");
                s.push('\n');
                s
            } else {
                render_text(&report)
            };
            CliOutput {
                code: 0,
                stdout,
                stderr: String::new(),
            }
        }
        Err(e) => CliOutput {
            code: e.code(),
            stdout: String::new(),
            stderr: format!("error: {e}\n"),
        },
    }
}
