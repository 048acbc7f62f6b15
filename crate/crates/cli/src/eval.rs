//! `eval`: series arithmetic, truncated inversion and Hensel lifting.

use crate::args::EvalArgs;
use crate::{CliError, ExitCode, Report};
use nipval::dsl::{parse_element, parse_field, parse_group, parse_polynomial, parse_series};
use nipval::fields::FieldDesc;
use nipval::hahn::{hensel_lift, Coeff, CoeffField, Gauge, HahnSeries};
use nipval::oag::OAGDesc;
use serde_json::{json, Value};
use std::fmt::Write as _;

fn coeff_field(text: &str) -> Result<CoeffField, CliError> {
    if text.trim() == "Q" {
        return Ok(CoeffField::Rational);
    }
    match parse_field(text)? {
        FieldDesc::Finite { p, n } => {
            let q = p
                .checked_pow(n)
                .ok_or_else(|| CliError::Usage(format!("{text} is too large")))?;
            Ok(CoeffField::finite(q)?)
        }
        other => Err(CliError::Usage(format!(
            "coefficients must be Q or a finite field F(q), got {other}"
        ))),
    }
}

fn gauge(group: &OAGDesc, args: &EvalArgs) -> Result<Gauge, CliError> {
    Ok(match &args.gauge {
        Some(g) => Gauge::new(group, parse_element(g)?, args.order)?,
        None => Gauge::minimal(group, args.order)?,
    })
}

fn valuation_json(x: &HahnSeries) -> Value {
    let vr = x.val_res();
    json!({
        "valuation": vr.v.as_ref().map(|v| v.to_string()),
        "residue": vr.res.to_string(),
    })
}

fn valuation_text(x: &HahnSeries) -> String {
    let vr = x.val_res();
    let v = vr.v.map_or("inf".to_string(), |v| v.to_string());
    format!("v = {v}, res = {}", vr.res)
}

/// A residue root given as a constant series.
fn residue_root(text: &str, group: &OAGDesc, field: &CoeffField) -> Result<Coeff, CliError> {
    let s = parse_series(text, group, field)?;
    match s.terms() {
        [] => Ok(field.zero()),
        [(e, c)] if e.is_zero() => Ok(c.clone()),
        _ => Err(CliError::Usage(format!("--lift expects a constant, got {text}"))),
    }
}

pub(crate) fn run(args: &EvalArgs) -> Result<Report, CliError> {
    let group = parse_group(&args.group)?;
    let field = coeff_field(&args.coeffs)?;
    let mut text = String::new();

    if let Some(root) = &args.lift {
        let f = parse_polynomial(&args.expr, &group, &field)?;
        let a0 = residue_root(root, &group, &field)?;
        let g = gauge(&group, args)?;
        let lift = hensel_lift(&f, &a0, &g)?;
        let defects: Vec<Option<String>> = lift
            .steps
            .iter()
            .map(|s| s.defect.as_ref().map(|d| d.to_string()))
            .collect();
        let doubles = lift.doubles_each_step();
        let _ = writeln!(text, "root: {}", lift.root);
        let _ = writeln!(text, "{}", valuation_text(&lift.root));
        let _ = writeln!(text, "bound: {} (order {} x gauge {})", g.bound(), g.order, g.element);
        let shown: Vec<String> = defects
            .iter()
            .map(|d| d.clone().unwrap_or_else(|| "inf".into()))
            .collect();
        let _ = writeln!(text, "Newton defects: {}", shown.join(", "));
        let _ = writeln!(text, "defect at least doubles each step: {doubles}");
        return Ok(Report {
            code: ExitCode::Success,
            json: json!({
                "mode": "lift",
                "series": lift.root.to_text(),
                "value": valuation_json(&lift.root),
                "bound": g.bound().to_string(),
                "defects": defects,
                "doubles_each_step": doubles,
            }),
            text,
        });
    }

    let x = parse_series(&args.expr, &group, &field)?;
    if args.invert {
        let g = gauge(&group, args)?;
        let y = x.invert_trunc(&g)?;
        let err = x.mul(&y)?.sub(&HahnSeries::one(group.clone(), field.clone()))?;
        let err_v = err.valuation().map(|v| v.to_string());
        let _ = writeln!(text, "inverse: {y}");
        let _ = writeln!(text, "{}", valuation_text(&y));
        let _ = writeln!(
            text,
            "v(x*y - 1) = {} > {}",
            err_v.clone().unwrap_or_else(|| "inf".into()),
            g.bound()
        );
        return Ok(Report {
            code: ExitCode::Success,
            json: json!({
                "mode": "invert",
                "series": y.to_text(),
                "value": valuation_json(&y),
                "bound": g.bound().to_string(),
                "error_valuation": err_v,
            }),
            text,
        });
    }

    let _ = writeln!(text, "{x}");
    let _ = writeln!(text, "{}", valuation_text(&x));
    Ok(Report {
        code: ExitCode::Success,
        json: json!({
            "mode": "value",
            "series": x.to_text(),
            "value": valuation_json(&x),
            "in_valuation_ring": x.in_valuation_ring(),
        }),
        text,
    })
}
