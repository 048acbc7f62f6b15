//! `oracle`: the fundamental-equality check over a case file or the
//! built-in catalogue.

use crate::args::OracleArgs;
use crate::{to_value, CliError, ExitCode, Report};
use nipval::hahn::oracle::{catalogue, run_cases, CaseSpec, OracleBase, OracleReport};
use serde_json::json;
use std::fmt::Write as _;

fn load(args: &OracleArgs) -> Result<Vec<CaseSpec>, CliError> {
    let mut specs = match &args.cases {
        None => catalogue(),
        Some(path) => {
            let text = std::fs::read_to_string(path).map_err(|source| CliError::Read {
                path: path.clone(),
                source,
            })?;
            serde_json::from_str(&text).map_err(|e| CliError::CaseFile(e.to_string()))?
        }
    };
    if let Some(prec) = args.precision {
        for s in &mut specs {
            if let OracleBase::Padic { precision, .. } = &mut s.base {
                *precision = prec;
            }
        }
    }
    Ok(specs)
}

fn line(r: &OracleReport) -> String {
    match (r.lhs, r.e, r.f, r.rhs, r.equal) {
        (Some(lhs), Some(e), Some(f), Some(rhs), Some(eq)) => format!(
            "{:<28} {:<20} [L:K] = {lhs}, e*f = {e}*{f} = {rhs}, {}",
            r.name,
            r.base,
            if eq { "equal" } else { "NOT equal" }
        ),
        _ => format!(
            "{:<28} {:<20} {}",
            r.name,
            r.base,
            r.reason.as_deref().unwrap_or("")
        ),
    }
}

pub(crate) fn run(args: &OracleArgs) -> Result<Report, CliError> {
    let specs = load(args)?;
    let cases = specs
        .iter()
        .map(CaseSpec::resolve)
        .collect::<Result<Vec<_>, _>>()?;
    let reports = run_cases(&cases)
        .into_iter()
        .collect::<Result<Vec<_>, _>>()?;

    let mut code = ExitCode::Success;
    let mut text = String::new();
    for r in &reports {
        let this = match r.equal {
            Some(true) => ExitCode::Success,
            Some(false) => ExitCode::Refuted,
            None => ExitCode::Inconclusive,
        };
        code = code.worst(this);
        let _ = writeln!(text, "{}", line(r));
        if args.output.explain {
            for s in &r.steps {
                let _ = writeln!(
                    text,
                    "    {}: degree {}, root valuation {}, e = {}, f = {}",
                    s.poly, s.degree, s.root_valuation, s.e, s.f
                );
            }
            if let Some(w) = &r.witness {
                for (i, s) in w.iter().enumerate() {
                    let _ = writeln!(
                        text,
                        "    witness {}: valuation {}, {} Newton steps, verified {}",
                        i + 1,
                        s.valuation,
                        s.newton_steps,
                        s.verified
                    );
                }
            }
        }
    }
    let certified = reports.iter().filter(|r| r.is_certified()).count();
    let _ = writeln!(text, "{certified}/{} certified", reports.len());
    Ok(Report {
        code,
        json: json!({ "cases": to_value(&reports)? }),
        text,
    })
}
