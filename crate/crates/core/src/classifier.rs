//! NIP decision procedure for henselian valued fields.
//!
//! Clauses are evaluated in a fixed order: (1) the residue field is NIP,
//! (2) one of the cases (a), (b), (c) chosen by characteristic and by the
//! standard decomposition, (3) a finite residue field forces the valuation
//! to be trivial or finitely ramified. Each evaluated clause leaves a record
//! in the trail; unknown flags propagate to an `Unknown` outcome.

use crate::tri::Tri;
use crate::valfield::{CharPair, ValFieldError, ValuedFieldDesc};
use serde::ser::SerializeStruct;
use serde::{Serialize, Serializer};
use std::fmt;
use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ClassifyError {
    #[error("classification needs a henselian valuation (henselian = {0}); check the necessary conditions or classify the henselization")]
    NotHenselian(Tri),
    #[error(transparent)]
    Descriptor(#[from] ValFieldError),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum NipCase {
    A,
    B,
    C,
}

impl NipCase {
    pub fn label(self) -> &'static str {
        match self {
            NipCase::A => "a",
            NipCase::B => "b",
            NipCase::C => "c",
        }
    }
}

impl fmt::Display for NipCase {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.label())
    }
}

impl Serialize for NipCase {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        s.serialize_str(self.label())
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct ClauseRecord {
    pub clause: String,
    /// The principle that makes this clause relevant.
    pub basis: String,
    pub result: Tri,
    pub detail: String,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Outcome {
    Nip(NipCase),
    Ip { failed_clause: String, witness: String },
    Unknown { missing: Vec<String> },
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct AuditReport {
    pub ok: Tri,
    /// Cut at which an imperfect residue field is permitted.
    pub allowed_cut: Option<usize>,
    pub imperfect_cuts: Vec<usize>,
    pub offending_cuts: Vec<usize>,
    pub unknown_cuts: Vec<usize>,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Verdict {
    pub outcome: Outcome,
    pub trail: Vec<ClauseRecord>,
    pub failed_clauses: Vec<String>,
    pub audit: AuditReport,
}

impl Verdict {
    pub fn case(&self) -> Option<NipCase> {
        match self.outcome {
            Outcome::Nip(c) => Some(c),
            _ => None,
        }
    }

    pub fn is_nip(&self) -> bool {
        matches!(self.outcome, Outcome::Nip(_))
    }

    pub fn is_ip(&self) -> bool {
        matches!(self.outcome, Outcome::Ip { .. })
    }

    pub fn failed_clause(&self) -> Option<&str> {
        match &self.outcome {
            Outcome::Ip { failed_clause, .. } => Some(failed_clause),
            _ => None,
        }
    }

    pub fn outcome_name(&self) -> &'static str {
        match self.outcome {
            Outcome::Nip(_) => "NIP",
            Outcome::Ip { .. } => "IP",
            Outcome::Unknown { .. } => "Unknown",
        }
    }

    /// One-line summary, e.g. `NIP (case b)` or `IP: clause 2a.ii - ...`.
    pub fn headline(&self) -> String {
        match &self.outcome {
            Outcome::Nip(c) => format!("NIP (case {c})"),
            Outcome::Ip {
                failed_clause,
                witness,
            } => format!("IP: clause {failed_clause} - {witness}"),
            Outcome::Unknown { missing } => format!("Unknown: missing {}", missing.join(", ")),
        }
    }
}

impl Serialize for Verdict {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        let mut st = s.serialize_struct("Verdict", 8)?;
        st.serialize_field("schema", &1)?;
        st.serialize_field("outcome", self.outcome_name())?;
        st.serialize_field("case", &self.case())?;
        st.serialize_field("failed_clause", &self.failed_clause())?;
        let witness = match &self.outcome {
            Outcome::Ip { witness, .. } => Some(witness),
            _ => None,
        };
        st.serialize_field("witness", &witness)?;
        let missing: &[String] = match &self.outcome {
            Outcome::Unknown { missing } => missing,
            _ => &[],
        };
        st.serialize_field("missing", missing)?;
        st.serialize_field("failed_clauses", &self.failed_clauses)?;
        st.serialize_field("trail", &self.trail)?;
        st.serialize_field("audit", &self.audit)?;
        st.end()
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct NecessaryReport {
    pub refuted: bool,
    pub failed_clauses: Vec<String>,
    pub trail: Vec<ClauseRecord>,
    pub note: String,
}

/// Clause evaluation shared by the classifier and the necessary-condition
/// check.
struct Evaluation {
    trail: Vec<ClauseRecord>,
    /// `(identifier, value, witness)` for clauses (1), (2), (3).
    top: Vec<(String, Tri, String)>,
    case: Option<NipCase>,
    missing: Vec<String>,
}

impl Evaluation {
    fn record(&mut self, clause: &str, basis: &str, result: Tri, detail: String) {
        self.trail.push(ClauseRecord {
            clause: clause.into(),
            basis: basis.into(),
            result,
            detail,
        });
    }

    fn need(&mut self, value: Tri, name: &str) {
        if !value.is_known() && !self.missing.iter().any(|m| m == name) {
            self.missing.push(name.into());
        }
    }
}

fn kaplansky_detail(k: &ValuedFieldDesc, p: u64) -> String {
    let vk = k.value_group();
    let r = k.residue_field().predicates();
    let mut parts = vec![];
    if !vk.is_p_divisible(p) {
        parts.push(format!("value group {vk} not {p}-divisible"));
    }
    if !r.is_perfect.is_true() {
        parts.push(format!("residue field perfect: {}", r.is_perfect));
    }
    if !r.no_sep_ext_div_p.is_true() {
        parts.push(format!(
            "residue field without separable extensions of degree divisible by {p}: {}",
            r.no_sep_ext_div_p
        ));
    }
    if parts.is_empty() {
        "Kaplansky".into()
    } else {
        format!("Kaplansky fails or is undetermined ({})", parts.join("; "))
    }
}

/// The parts of "separably defectless Kaplansky" that definitely fail.
fn kaplansky_failures(k: &ValuedFieldDesc, p: u64, sep_defectless: Tri) -> Vec<String> {
    let r = k.residue_field().predicates();
    let mut out = vec![];
    if sep_defectless.is_false() {
        out.push("not separably defectless".to_string());
    }
    if !k.value_group().is_p_divisible(p) {
        out.push(format!("value group not {p}-divisible"));
    }
    if r.is_perfect.is_false() {
        out.push("residue field imperfect".to_string());
    }
    if r.no_sep_ext_div_p.is_false() {
        out.push(format!("residue field has a separable extension of degree divisible by {p}"));
    }
    out
}

/// Record the unknown inputs behind an undetermined Kaplansky predicate.
fn need_kaplansky(ev: &mut Evaluation, k: &ValuedFieldDesc, prefix: &str) {
    if k.predicates().is_kaplansky.is_known() {
        return;
    }
    let r = k.residue_field().predicates();
    ev.need(r.is_perfect, &format!("{prefix}.residue.perfect"));
    ev.need(r.no_sep_ext_div_p, &format!("{prefix}.residue.noPext"));
}

fn evaluate(k: &ValuedFieldDesc) -> Result<Evaluation, ClassifyError> {
    let mut ev = Evaluation {
        trail: vec![],
        top: vec![],
        case: None,
        missing: vec![],
    };
    let residue = k.residue_field();
    let rp = residue.predicates();
    let pred = k.predicates();
    let flags = k.structural_flags();

    // (1)
    ev.need(rp.is_nip, "Kv.nip");
    ev.record(
        "1",
        "the residue field is interpretable, so it must be NIP",
        rp.is_nip,
        format!("Kv = {residue}, NIP: {}", rp.is_nip),
    );
    ev.top.push((
        "1".into(),
        rp.is_nip,
        format!("residue field {residue} is not NIP"),
    ));

    // (2)
    match pred.char_pair {
        CharPair::EqualZero | CharPair::EqualP(_) => {
            ev.record(
                "2a.i",
                "case split by characteristic",
                Tri::True,
                format!("equal characteristic {}", pred.char_pair),
            );
            let (value, detail, basis) = if pred.is_trivial {
                (
                    Tri::True,
                    "trivial valuation".to_string(),
                    "a trivially valued field is NIP iff the field is",
                )
            } else {
                let v = flags.sep_defectless.and(pred.is_kaplansky);
                if !v.is_false() {
                    ev.need(flags.sep_defectless, "(K,v).sep_defectless");
                    need_kaplansky(&mut ev, k, "(K,v)");
                }
                let basis = if pred.char_pair == CharPair::EqualZero {
                    "in equal characteristic 0 a henselian field is NIP iff its residue field is"
                } else {
                    "a separably algebraically maximal Kaplansky field is NIP iff its residue field is"
                };
                let detail = match pred.char_pair {
                    CharPair::EqualP(p) => format!(
                        "separably defectless: {}; {}",
                        flags.sep_defectless,
                        kaplansky_detail(k, p)
                    ),
                    _ => "residue characteristic 0: defectless and Kaplansky".to_string(),
                };
                (v, detail, basis)
            };
            let witness = match pred.char_pair {
                CharPair::EqualP(p) if !pred.is_trivial => {
                    kaplansky_failures(k, p, flags.sep_defectless).join("; ")
                }
                _ => String::new(),
            };
            let witness = if witness.is_empty() {
                format!("neither trivial nor separably defectless Kaplansky: {detail}")
            } else {
                witness
            };
            ev.record("2a.ii", basis, value, detail);
            ev.top.push(("2a.ii".into(), value, witness));
            ev.case = Some(NipCase::A);
        }
        CharPair::Mixed(p) => {
            ev.record(
                "2a.i",
                "case split by characteristic",
                Tri::False,
                format!("mixed characteristic {}", pred.char_pair),
            );
            let d = k.standard_decomposition()?;
            let quotient = format!(
                "v(p) = {} in {}; Delta_p at cut {}, Delta_0 at cut {}, Delta_0/Delta_p {}",
                d.vp,
                d.value_group,
                d.delta_p.index,
                d.delta_0.index,
                if d.quotient_discrete {
                    "discrete"
                } else {
                    "dense"
                }
            );
            ev.record("2b.i", "case split by characteristic", Tri::True, quotient.clone());

            let bii = Tri::from(d.upper_p.predicates().is_finitely_ramified.unwrap_or(false));
            ev.record(
                "2b.ii",
                "a finitely ramified (K,v_p) transfers NIP from (Kv_p, v-bar)",
                bii,
                format!("(K,v_p) finitely ramified: {bii} (quotient {})", d.upper_p.value_group()),
            );

            let kvp = &d.kvp_vbar;
            let (biii, biii_detail) = if kvp.is_trivial() {
                (Tri::True, "(Kv_p, v-bar) is trivial".to_string())
            } else {
                let f = kvp.structural_flags();
                let v = f.sep_defectless.and(kvp.predicates().is_kaplansky);
                (
                    v,
                    format!(
                        "(Kv_p, v-bar) = {kvp}: separably defectless: {}; {}",
                        f.sep_defectless,
                        kaplansky_detail(kvp, p)
                    ),
                )
            };
            ev.record(
                "2b.iii",
                "(Kv_p, v-bar) is NIP when trivial or separably algebraically maximal Kaplansky",
                biii,
                biii_detail.clone(),
            );

            let kv0 = &d.k_v0;
            let f0 = kv0.structural_flags();
            let cii = f0.defectless.and(kv0.predicates().is_kaplansky);
            let cii_detail = format!(
                "(Kv_0, v-bar) = {kv0}: defectless: {}; {}",
                f0.defectless,
                kaplansky_detail(kv0, p)
            );
            ev.record("2c.i", "case split by characteristic", Tri::True, quotient);
            ev.record(
                "2c.ii",
                "an algebraically maximal Kaplansky (Kv_0, v-bar) transfers NIP through the standard decomposition",
                cii,
                cii_detail.clone(),
            );

            let b = bii.and(biii);
            let c = cii;
            let value = b.or(c);
            if value.is_true() {
                ev.case = Some(if b.is_true() { NipCase::B } else { NipCase::C });
            } else if !value.is_false() {
                if !b.is_false() && !kvp.is_trivial() && !biii.is_known() {
                    ev.need(kvp.structural_flags().sep_defectless, "(Kv_p,v-bar).sep_defectless");
                    need_kaplansky(&mut ev, kvp, "(Kv_p,v-bar)");
                }
                if !c.is_false() {
                    ev.need(f0.defectless, "(Kv_0,v-bar).defectless");
                    need_kaplansky(&mut ev, kv0, "(Kv_0,v-bar)");
                }
            }
            ev.top.push((
                "2".into(),
                value,
                format!(
                    "neither case (b) [2b.ii {bii}, 2b.iii {biii}: {biii_detail}] nor case (c) [2c.ii {cii}: {cii_detail}]"
                ),
            ));
        }
    }

    // (3)
    let finite = rp.is_finite;
    let fin_ram = pred.is_finitely_ramified.unwrap_or(false);
    let v3 = finite.implies(Tri::from(pred.is_trivial || fin_ram));
    if !v3.is_known() {
        ev.need(finite, "Kv.finite");
    }
    ev.record(
        "3",
        "a finite residue field forces a trivial or finitely ramified valuation",
        v3,
        format!(
            "Kv finite: {finite}; trivial: {}; (K,v) finitely ramified: {}",
            pred.is_trivial,
            match pred.is_finitely_ramified {
                Some(b) => b.to_string(),
                None => "n/a".into(),
            }
        ),
    );
    ev.top.push((
        "3".into(),
        v3,
        "finite residue field but the valuation is neither trivial nor finitely ramified".into(),
    ));
    Ok(ev)
}

/// Classify a henselian valued field.
pub fn classify_nip(k: &ValuedFieldDesc) -> Result<Verdict, ClassifyError> {
    let hens = k.structural_flags().henselian;
    if !hens.is_true() {
        return Err(ClassifyError::NotHenselian(hens));
    }
    let ev = evaluate(k)?;
    let audit = imperfect_coarsening_audit(k);
    let mut failed: Vec<String> = ev
        .top
        .iter()
        .filter(|(_, v, _)| v.is_false())
        .map(|(id, _, _)| id.clone())
        .collect();
    if audit.ok.is_false() {
        failed.push("audit".into());
    }
    let first_fail = ev.top.iter().find(|(_, v, _)| v.is_false());
    let outcome = if let Some((id, _, witness)) = first_fail {
        Outcome::Ip {
            failed_clause: id.clone(),
            witness: witness.clone(),
        }
    } else if audit.ok.is_false() {
        Outcome::Ip {
            failed_clause: "audit".into(),
            witness: format!(
                "imperfect residue fields at cuts {:?}, only cut {:?} may be imperfect",
                audit.offending_cuts, audit.allowed_cut
            ),
        }
    } else if ev.top.iter().all(|(_, v, _)| v.is_true()) {
        Outcome::Nip(ev.case.expect("clause 2 holds in some case"))
    } else {
        Outcome::Unknown {
            missing: ev.missing.clone(),
        }
    };
    Ok(Verdict {
        outcome,
        trail: ev.trail,
        failed_clauses: failed,
        audit,
    })
}

/// Necessary conditions for NIP, valid without henselianity.
pub fn necessary_conditions(k: &ValuedFieldDesc) -> Result<NecessaryReport, ClassifyError> {
    let ev = evaluate(k)?;
    let failed: Vec<String> = ev
        .top
        .iter()
        .filter(|(_, v, _)| v.is_false())
        .map(|(id, _, _)| id.clone())
        .collect();
    let refuted = !failed.is_empty();
    let note = if refuted {
        "a necessary condition fails, so (K,v) is not NIP".to_string()
    } else if k.structural_flags().henselian.is_true() {
        "no necessary condition fails; for henselian input the full classification applies".to_string()
    } else {
        "no necessary condition fails; without henselianity this does not show NIP (classify the henselization instead)".to_string()
    };
    Ok(NecessaryReport {
        refuted,
        failed_clauses: failed,
        trail: ev.trail,
        note,
    })
}

/// Check that at most one tower-aligned coarsening has an imperfect residue
/// field, and that it is the coarsest one of positive residue
/// characteristic.
pub fn imperfect_coarsening_audit(k: &ValuedFieldDesc) -> AuditReport {
    let allowed_cut = match k.char_pair() {
        CharPair::EqualZero => None,
        CharPair::EqualP(_) => Some(0),
        CharPair::Mixed(_) => k.standard_decomposition().ok().map(|d| d.delta_p.index),
    };
    let mut imperfect = vec![];
    let mut unknown = vec![];
    for cut in k.legal_cuts() {
        let perfect = k
            .residue_at(cut)
            .map(|f| f.is_perfect())
            .unwrap_or(Tri::Unknown);
        match perfect {
            Tri::False => imperfect.push(cut),
            Tri::Unknown => unknown.push(cut),
            Tri::True => {}
        }
    }
    let offending: Vec<usize> = imperfect
        .iter()
        .copied()
        .filter(|c| Some(*c) != allowed_cut)
        .collect();
    let ok = if !offending.is_empty() {
        Tri::False
    } else if unknown.iter().any(|c| Some(*c) != allowed_cut) {
        Tri::Unknown
    } else {
        Tri::True
    };
    AuditReport {
        ok,
        allowed_cut,
        imperfect_cuts: imperfect,
        offending_cuts: offending,
        unknown_cuts: unknown,
    }
}
