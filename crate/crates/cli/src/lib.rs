//! Command-line front end: `nipval <verb> <input> [flags]`.
//!
//! Every verb prints a human-readable report, or with `--json` a single JSON
//! document of the form `{schema, command, input, exit, result | error}`.
//! The shapes are published as JSON Schema files under `schemas/`.

mod args;
mod describe;
mod error;
mod eval;
mod oracle;

pub use args::{Cli, Command};
pub use error::{CliError, ExitCode};

use clap::Parser;
use serde_json::{json, Value};
use std::ffi::OsString;

/// Captured output of one invocation.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Output {
    pub code: ExitCode,
    pub stdout: String,
    pub stderr: String,
}

/// The result of a verb before rendering.
pub(crate) struct Report {
    pub code: ExitCode,
    pub json: Value,
    pub text: String,
}

pub fn run<I, T>(args: I) -> Output
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(c) => c,
        Err(e) => {
            let code = if e.use_stderr() {
                ExitCode::Usage
            } else {
                ExitCode::Success
            };
            let rendered = e.render().to_string();
            let (stdout, stderr) = if e.use_stderr() {
                (String::new(), rendered)
            } else {
                (rendered, String::new())
            };
            return Output {
                code,
                stdout,
                stderr,
            };
        }
    };
    execute(&cli)
}

pub fn execute(cli: &Cli) -> Output {
    let (name, json_mode, input) = (cli.command.name(), cli.command.json(), cli.command.input_label());
    let result = match &cli.command {
        Command::Classify(a)
        | Command::Decompose(a)
        | Command::Theory(a)
        | Command::Shelah(a)
        | Command::Audit(a) => describe::run(&cli.command, a),
        Command::Eval(a) => eval::run(a),
        Command::Oracle(a) => oracle::run(a),
    };
    match result {
        Ok(r) => {
            let stdout = if json_mode {
                let doc = json!({
                    "schema": 1,
                    "command": name,
                    "input": input,
                    "exit": r.code.code(),
                    "result": r.json,
                });
                render_json(&doc)
            } else {
                r.text
            };
            Output {
                code: r.code,
                stdout,
                stderr: String::new(),
            }
        }
        Err(e) => {
            let code = e.exit_code();
            let stdout = if json_mode {
                render_json(&json!({
                    "schema": 1,
                    "command": name,
                    "input": input,
                    "exit": code.code(),
                    "error": e.to_json(),
                }))
            } else {
                String::new()
            };
            Output {
                code,
                stdout,
                stderr: format!("error: {e}\n"),
            }
        }
    }
}

pub(crate) fn render_json(v: &Value) -> String {
    let mut s = serde_json::to_string_pretty(v).expect("JSON values always serialize");
    s.push('\n');
    s
}

pub(crate) fn to_value<T: serde::Serialize>(x: &T) -> Result<Value, CliError> {
    serde_json::to_value(x).map_err(|e| CliError::Internal(e.to_string()))
}
