//! Verbs that take a valued-field descriptor.

use crate::args::{Command, DescArgs};
use crate::{to_value, CliError, ExitCode, Report};
use nipval::classifier::{
    classify_nip, imperfect_coarsening_audit, necessary_conditions, AuditReport, ClauseRecord, Outcome, Verdict,
};
use nipval::dsl::parse_descriptor;
use nipval::oag::OAGDesc;
use nipval::theories::{cohen_normal_form, shelah_family, theory_of, ShelahRoute, SHELAH_NOTE};
use nipval::tri::Tri;
use nipval::valfield::ValuedFieldDesc;
use serde_json::{json, Value};
use std::fmt::Write as _;
use std::io::Read;
use std::path::Path;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
enum Verb {
    Classify,
    Decompose,
    Theory,
    Shelah,
    Audit,
}

pub(crate) fn run(cmd: &Command, args: &DescArgs) -> Result<Report, CliError> {
    let verb = match cmd {
        Command::Classify(_) => Verb::Classify,
        Command::Decompose(_) => Verb::Decompose,
        Command::Theory(_) => Verb::Theory,
        Command::Shelah(_) => Verb::Shelah,
        Command::Audit(_) => Verb::Audit,
        Command::Eval(_) | Command::Oracle(_) => unreachable!("not a descriptor verb"),
    };
    let explain = args.output.explain;
    match (&args.input, &args.batch) {
        (Some(input), _) => analyse(verb, &read_input(input)?, explain),
        (None, Some(path)) => batch(verb, &read_file(path)?, explain),
        (None, None) => Err(CliError::Usage("an input or --batch is required".into())),
    }
}

fn read_file(path: &Path) -> Result<String, CliError> {
    std::fs::read_to_string(path).map_err(|source| CliError::Read {
        path: path.to_path_buf(),
        source,
    })
}

/// `-` is stdin, an existing file is read, anything else is the expression.
fn read_input(input: &str) -> Result<String, CliError> {
    if input == "-" {
        let mut s = String::new();
        std::io::stdin()
            .read_to_string(&mut s)
            .map_err(|source| CliError::Read {
                path: "-".into(),
                source,
            })?;
        return Ok(s);
    }
    let path = Path::new(input);
    if path.is_file() {
        read_file(path)
    } else {
        Ok(input.to_string())
    }
}

fn batch(verb: Verb, text: &str, explain: bool) -> Result<Report, CliError> {
    let lines: Vec<(usize, &str)> = text
        .lines()
        .enumerate()
        .map(|(i, l)| (i + 1, l.trim()))
        .filter(|(_, l)| !l.is_empty() && !l.starts_with('#'))
        .collect();
    let workers = std::thread::available_parallelism().map_or(1, |n| n.get());
    let chunk = lines.len().div_ceil(workers).max(1);
    let results: Vec<Result<Report, CliError>> = std::thread::scope(|s| {
        let handles: Vec<_> = lines
            .chunks(chunk)
            .map(|part| {
                s.spawn(move || {
                    part.iter()
                        .map(|(_, l)| analyse(verb, l, explain))
                        .collect::<Vec<_>>()
                })
            })
            .collect();
        handles
            .into_iter()
            .flat_map(|h| h.join().expect("batch worker panicked"))
            .collect()
    });

    let mut code = ExitCode::Success;
    let mut entries = Vec::new();
    let mut text = String::new();
    for ((line, input), res) in lines.iter().zip(results) {
        match res {
            Ok(r) => {
                code = code.worst(r.code);
                let _ = write!(text, "[line {line}] {}", r.text);
                entries.push(json!({
                    "line": line,
                    "input": input,
                    "exit": r.code.code(),
                    "result": r.json,
                }));
            }
            Err(e) => {
                code = code.worst(e.exit_code());
                let _ = writeln!(text, "[line {line}] error: {e}");
                entries.push(json!({
                    "line": line,
                    "input": input,
                    "exit": e.exit_code().code(),
                    "error": e.to_json(),
                }));
            }
        }
    }
    Ok(Report {
        code,
        json: json!({ "entries": entries }),
        text,
    })
}

fn analyse(verb: Verb, text: &str, explain: bool) -> Result<Report, CliError> {
    let d = parse_descriptor(text)?;
    match verb {
        Verb::Classify => classify(&d, explain),
        Verb::Decompose => decompose(&d),
        Verb::Theory => theory(&d, explain),
        Verb::Shelah => shelah(&d, explain),
        Verb::Audit => audit(&d),
    }
}

fn verdict_code(v: &Verdict) -> ExitCode {
    match v.outcome {
        Outcome::Nip(_) => ExitCode::Success,
        Outcome::Ip { .. } => ExitCode::Refuted,
        Outcome::Unknown { .. } => ExitCode::Inconclusive,
    }
}

fn write_trail(out: &mut String, trail: &[ClauseRecord]) {
    for r in trail {
        let _ = writeln!(out, "  [{}] {}: {} ({})", r.clause, r.result, r.detail, r.basis);
    }
}

fn write_audit(out: &mut String, a: &AuditReport) {
    let _ = writeln!(
        out,
        "  [audit] {}: imperfect residue fields at cuts {:?}, permitted cut {}",
        a.ok,
        a.imperfect_cuts,
        a.allowed_cut.map_or("none".to_string(), |c| c.to_string())
    );
}

fn classify(d: &ValuedFieldDesc, explain: bool) -> Result<Report, CliError> {
    let hens = d.structural_flags().henselian;
    let mut text = format!("{d}\n");
    if hens.is_true() {
        let v = classify_nip(d)?;
        let headline = v.headline();
        let _ = writeln!(text, "{headline}");
        if explain {
            write_trail(&mut text, &v.trail);
            write_audit(&mut text, &v.audit);
        }
        return Ok(Report {
            code: verdict_code(&v),
            json: json!({
                "mode": "full",
                "headline": headline,
                "descriptor": to_value(d)?,
                "verdict": to_value(&v)?,
            }),
            text,
        });
    }
    let nec = necessary_conditions(d)?;
    let headline = match nec.failed_clauses.first() {
        Some(c) => format!("IP: clause {c} - a necessary condition fails"),
        None => format!("Unknown: henselian = {hens}, only necessary conditions were checked"),
    };
    let _ = writeln!(text, "{headline}\n{}", nec.note);
    if explain {
        write_trail(&mut text, &nec.trail);
    }
    Ok(Report {
        code: if nec.refuted {
            ExitCode::Refuted
        } else {
            ExitCode::Inconclusive
        },
        json: json!({
            "mode": "necessary",
            "headline": headline,
            "descriptor": to_value(d)?,
            "necessary": to_value(&nec)?,
        }),
        text,
    })
}

fn group_text(g: &OAGDesc) -> String {
    if g.is_trivial() {
        "trivial".into()
    } else {
        g.to_string()
    }
}

fn decompose(d: &ValuedFieldDesc) -> Result<Report, CliError> {
    let dec = d.standard_decomposition()?;
    let vk = &dec.value_group;
    let (upper_q, delta_0) = vk.quotient_and_subgroup(dec.delta_0).map_err(nipval::valfield::ValFieldError::from)?;
    let (_, delta_p) = vk.quotient_and_subgroup(dec.delta_p).map_err(nipval::valfield::ValFieldError::from)?;
    let middle = vk.slice(dec.delta_0.index, dec.delta_p.index);
    let (g_up, g_mid, g_low, g0, gp) = (
        group_text(&upper_q),
        group_text(&middle),
        group_text(&delta_p),
        group_text(&delta_0),
        group_text(&delta_p),
    );

    let mut text = String::new();
    let _ = writeln!(text, "K = {d}");
    let _ = writeln!(text, "value group {vk}, v(p) = {}", dec.vp);
    let _ = writeln!(
        text,
        "K --[{g_up}]--> Kv_0 --[{g_mid}{}]--> Kv_p --[{g_low}]--> Kv",
        if dec.quotient_discrete { ", discrete" } else { "" }
    );
    let _ = writeln!(text, "Δ_0 = {g0} (smallest convex subgroup containing v(p))");
    let _ = writeln!(text, "Δ_p = {gp} (largest convex subgroup not containing v(p))");
    let _ = writeln!(text, "(K, v_0)     : {}", dec.upper);
    let _ = writeln!(text, "(Kv_0, v_p)  : {}", dec.kv0_vbar_p);
    let _ = writeln!(text, "(Kv_p, v)    : {}", dec.kvp_vbar);

    let json = json!({
        "p": dec.p,
        "value_group": vk.to_string(),
        "v_p": to_value(&dec.vp)?,
        "delta_0": g0,
        "delta_p": gp,
        "delta_0_cut": dec.delta_0.index,
        "delta_p_cut": dec.delta_p.index,
        "quotient_discrete": dec.quotient_discrete,
        "chain": [
            { "from": "K", "to": "Kv_0", "group": g_up },
            { "from": "Kv_0", "to": "Kv_p", "group": g_mid },
            { "from": "Kv_p", "to": "Kv", "group": g_low },
        ],
        "pieces": {
            "upper": to_value(&dec.upper)?,
            "upper_p": to_value(&dec.upper_p)?,
            "k_v0": to_value(&dec.k_v0)?,
            "kv0_vbar_p": to_value(&dec.kv0_vbar_p)?,
            "kvp_vbar": to_value(&dec.kvp_vbar)?,
        },
    });
    Ok(Report {
        code: ExitCode::Success,
        json,
        text,
    })
}

/// Verdict for verbs that need an NIP input, or the report explaining why
/// there is none.
fn nip_verdict(d: &ValuedFieldDesc) -> Result<Result<Verdict, (ExitCode, String)>, CliError> {
    let hens = d.structural_flags().henselian;
    if !hens.is_true() {
        return Ok(Err((
            ExitCode::Inconclusive,
            format!("the valuation must be henselian (henselian = {hens})"),
        )));
    }
    let v = classify_nip(d)?;
    if v.is_nip() {
        Ok(Ok(v))
    } else {
        Ok(Err((verdict_code(&v), v.headline())))
    }
}

fn theory(d: &ValuedFieldDesc, explain: bool) -> Result<Report, CliError> {
    let mut text = format!("{d}\n");
    let v = match nip_verdict(d)? {
        Ok(v) => v,
        Err((code, reason)) => {
            let _ = writeln!(text, "no theory tag: {reason}");
            return Ok(Report {
                code,
                json: json!({ "tag": Value::Null, "cohen_normal_form": Value::Null, "reason": reason }),
                text,
            });
        }
    };
    let tag = theory_of(d, &v)?;
    let cnf = cohen_normal_form(d).ok();
    let _ = writeln!(text, "{}", v.headline());
    let _ = writeln!(text, "theory: {}", tag.notation);
    let _ = writeln!(text, "complete: {}", tag.complete);
    if let Some(f) = tag.shelah_family {
        let _ = writeln!(text, "Shelah family: {f}");
    }
    if let Some(c) = &cnf {
        let _ = writeln!(
            text,
            "Cohen normal form: totally ramified extension of degree {} of C({})",
            c.ext_degree, c.cohen_residue
        );
    }
    if explain {
        write_trail(&mut text, &v.trail);
    }
    Ok(Report {
        code: ExitCode::Success,
        json: json!({
            "tag": to_value(&tag)?,
            "cohen_normal_form": to_value(&cnf)?,
            "reason": Value::Null,
        }),
        text,
    })
}

fn shelah(d: &ValuedFieldDesc, explain: bool) -> Result<Report, CliError> {
    let mut text = format!("{d}\n");
    let v = match nip_verdict(d)? {
        Ok(v) => v,
        Err((code, reason)) => {
            let _ = writeln!(text, "no family: {reason}");
            return Ok(Report {
                code,
                json: json!({ "route": Value::Null, "family": Value::Null, "reason": reason, "note": SHELAH_NOTE }),
                text,
            });
        }
    };
    let route = shelah_family(d, &v)?;
    match &route {
        ShelahRoute::Family {
            family,
            description,
        } => {
            let _ = writeln!(text, "family {family}: {description}");
        }
        ShelahRoute::ResidueLevel { note } => {
            let _ = writeln!(text, "{note}");
        }
        ShelahRoute::Outside { reason } => {
            let _ = writeln!(text, "{reason}");
        }
    }
    let _ = writeln!(text, "note: {SHELAH_NOTE}");
    if explain {
        let _ = writeln!(text, "{}", v.headline());
        write_trail(&mut text, &v.trail);
    }
    Ok(Report {
        code: ExitCode::Success,
        json: json!({
            "route": to_value(&route)?,
            "family": to_value(&route.family())?,
            "reason": Value::Null,
            "note": SHELAH_NOTE,
        }),
        text,
    })
}

fn audit(d: &ValuedFieldDesc) -> Result<Report, CliError> {
    let a = imperfect_coarsening_audit(d);
    let mut text = format!("{d}\n");
    let headline = match a.ok {
        Tri::True => "audit passed".to_string(),
        Tri::False => format!("audit failed at cuts {:?}", a.offending_cuts),
        Tri::Unknown => format!("audit undetermined at cuts {:?}", a.unknown_cuts),
    };
    let _ = writeln!(text, "{headline}");
    write_audit(&mut text, &a);
    let code = match a.ok {
        Tri::True => ExitCode::Success,
        Tri::False => ExitCode::Refuted,
        Tri::Unknown => ExitCode::Inconclusive,
    };
    Ok(Report {
        code,
        json: json!({ "headline": headline, "audit": to_value(&a)? }),
        text,
    })
}
