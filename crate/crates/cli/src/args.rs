use clap::{Args, Parser, Subcommand};
use std::path::PathBuf;

#[derive(Debug, Parser)]
#[command(name = "nipval", version, about = "Decide NIP for finitely described henselian valued fields")]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Decide NIP; non-henselian input gets the necessary-condition check.
    Classify(DescArgs),
    /// Standard decomposition of a mixed-characteristic valuation.
    Decompose(DescArgs),
    /// Complete-theory tag of an NIP valued field.
    Theory(DescArgs),
    /// Route an NIP valued field to its Shelah family.
    Shelah(DescArgs),
    /// Check that at most the permitted coarsening has an imperfect residue field.
    Audit(DescArgs),
    /// Evaluate a series, invert it, or Hensel-lift a root of a polynomial.
    Eval(EvalArgs),
    /// Run the fundamental-equality check on tame extensions.
    Oracle(OracleArgs),
}

#[derive(Debug, Clone, Args)]
pub struct OutputArgs {
    /// Print one JSON document instead of text.
    #[arg(long)]
    pub json: bool,
    /// Include the clause-by-clause trail.
    #[arg(long)]
    pub explain: bool,
}

#[derive(Debug, Clone, Args)]
pub struct DescArgs {
    /// A descriptor, or the path of a file holding one (`-` reads stdin).
    #[arg(required_unless_present = "batch", conflicts_with = "batch")]
    pub input: Option<String>,
    /// A file with one descriptor per line; blank lines and `#` comments are skipped.
    #[arg(long, value_name = "FILE")]
    pub batch: Option<PathBuf>,
    #[command(flatten)]
    pub output: OutputArgs,
}

#[derive(Debug, Clone, Args)]
pub struct EvalArgs {
    /// A series such as `3 + 2*t - t^(1/2)`, or a polynomial in `X` with `--lift`.
    pub expr: String,
    /// Exponent group.
    #[arg(long, default_value = "Z")]
    pub group: String,
    /// Coefficient field: `Q` or `F(q)`.
    #[arg(long, default_value = "Q")]
    pub coeffs: String,
    /// Truncation multiplier N; results are exact beyond N times the gauge.
    #[arg(long, default_value_t = 10)]
    pub order: u32,
    /// Positive gauge element; defaults to the least positive element.
    #[arg(long)]
    pub gauge: Option<String>,
    /// Invert the series up to the truncation bound.
    #[arg(long, conflicts_with = "lift")]
    pub invert: bool,
    /// Lift this simple residue root of the polynomial `expr`.
    #[arg(long, value_name = "ROOT", allow_hyphen_values = true)]
    pub lift: Option<String>,
    #[command(flatten)]
    pub output: OutputArgs,
}

#[derive(Debug, Clone, Args)]
pub struct OracleArgs {
    /// JSON case file (a list of cases); the built-in catalogue when omitted.
    pub cases: Option<PathBuf>,
    /// p-adic precision used for every p-adic base, overriding the file.
    #[arg(long)]
    pub precision: Option<u32>,
    #[command(flatten)]
    pub output: OutputArgs,
}

impl Command {
    pub fn name(&self) -> &'static str {
        match self {
            Command::Classify(_) => "classify",
            Command::Decompose(_) => "decompose",
            Command::Theory(_) => "theory",
            Command::Shelah(_) => "shelah",
            Command::Audit(_) => "audit",
            Command::Eval(_) => "eval",
            Command::Oracle(_) => "oracle",
        }
    }

    pub fn output(&self) -> &OutputArgs {
        match self {
            Command::Classify(a)
            | Command::Decompose(a)
            | Command::Theory(a)
            | Command::Shelah(a)
            | Command::Audit(a) => &a.output,
            Command::Eval(a) => &a.output,
            Command::Oracle(a) => &a.output,
        }
    }

    pub fn json(&self) -> bool {
        self.output().json
    }

    /// What the JSON envelope records as `input`.
    pub fn input_label(&self) -> String {
        match self {
            Command::Classify(a)
            | Command::Decompose(a)
            | Command::Theory(a)
            | Command::Shelah(a)
            | Command::Audit(a) => match (&a.input, &a.batch) {
                (Some(s), _) => s.clone(),
                (None, Some(p)) => p.display().to_string(),
                (None, None) => String::new(),
            },
            Command::Eval(a) => a.expr.clone(),
            Command::Oracle(a) => a
                .cases
                .as_ref()
                .map(|p| p.display().to_string())
                .unwrap_or_else(|| "catalogue".into()),
        }
    }
}
