use nipval::classifier::ClassifyError;
use nipval::dsl::DslError;
use nipval::hahn::HahnError;
use nipval::theories::TheoryError;
use nipval::valfield::ValFieldError;
use serde_json::{json, Value};
use std::path::PathBuf;
use thiserror::Error;

/// Process exit status. The numeric values follow `sysexits.h` for the error
/// range.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum ExitCode {
    /// NIP, or the command succeeded.
    Success,
    /// IP, or a check was refuted.
    Refuted,
    /// Unknown flags or an inconclusive check.
    Inconclusive,
    Usage,
    Parse,
    Internal,
}

impl ExitCode {
    pub fn code(self) -> i32 {
        match self {
            ExitCode::Success => 0,
            ExitCode::Refuted => 1,
            ExitCode::Inconclusive => 2,
            ExitCode::Usage => 64,
            ExitCode::Parse => 65,
            ExitCode::Internal => 70,
        }
    }

    /// Combines per-entry codes of a batch: errors dominate, then refutation,
    /// then unknown.
    pub fn worst(self, other: ExitCode) -> ExitCode {
        let rank = |c: ExitCode| match c {
            ExitCode::Success => 0,
            ExitCode::Inconclusive => 1,
            ExitCode::Refuted => 2,
            ExitCode::Usage => 3,
            ExitCode::Parse => 4,
            ExitCode::Internal => 5,
        };
        if rank(other) > rank(self) {
            other
        } else {
            self
        }
    }
}

#[derive(Debug, Error)]
pub enum CliError {
    #[error("{0}")]
    Usage(String),
    #[error("cannot read {path}: {source}")]
    Read {
        path: PathBuf,
        source: std::io::Error,
    },
    #[error(transparent)]
    Dsl(#[from] DslError),
    #[error("invalid case file: {0}")]
    CaseFile(String),
    #[error(transparent)]
    Series(#[from] HahnError),
    #[error(transparent)]
    Descriptor(#[from] ValFieldError),
    #[error(transparent)]
    Classify(#[from] ClassifyError),
    #[error(transparent)]
    Theory(#[from] TheoryError),
    #[error("internal error: {0}")]
    Internal(String),
}

impl CliError {
    pub fn exit_code(&self) -> ExitCode {
        match self {
            CliError::Usage(_) | CliError::Read { .. } => ExitCode::Usage,
            CliError::Dsl(_)
            | CliError::CaseFile(_)
            | CliError::Series(_)
            | CliError::Descriptor(_)
            | CliError::Classify(_)
            | CliError::Theory(_) => ExitCode::Parse,
            CliError::Internal(_) => ExitCode::Internal,
        }
    }

    fn kind(&self) -> &'static str {
        match self {
            CliError::Usage(_) | CliError::Read { .. } => "usage",
            CliError::Dsl(DslError::Syntax { .. }) => "syntax",
            CliError::Dsl(DslError::Semantic { .. }) => "semantic",
            CliError::CaseFile(_) => "case_file",
            CliError::Series(_) => "series",
            CliError::Descriptor(_) | CliError::Classify(_) | CliError::Theory(_) => "invalid_input",
            CliError::Internal(_) => "internal",
        }
    }

    pub fn to_json(&self) -> Value {
        let (line, column) = match self {
            CliError::Dsl(e) => {
                let (l, c) = e.position();
                (Some(l), Some(c))
            }
            _ => (None, None),
        };
        json!({
            "kind": self.kind(),
            "message": self.to_string(),
            "line": line,
            "column": column,
        })
    }
}
