//! Complete-theory tags for NIP henselian valued fields, completeness
//! hypotheses, compatibility of algebraic parts, and routing into the
//! list of NIP valued-field families.

use crate::classifier::{NipCase, Verdict};
use crate::fields::{FieldDesc, ImpDegree};
use crate::oag::{ArchSummand, GroupElement, OAGDesc, OagError, Rank1Desc};
use crate::tri::Tri;
use crate::valfield::{CharPair, Core, ValFieldError, ValuedFieldDesc};
use num_traits::ToPrimitive;
use serde::Serialize;
use std::fmt;
use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum TheoryError {
    #[error("a theory tag needs an NIP verdict, got {0}")]
    NotNip(String),
    #[error("the valuation must be henselian")]
    NotHenselian,
    #[error("{0}")]
    Hypothesis(String),
    #[error(transparent)]
    Descriptor(#[from] ValFieldError),
    #[error(transparent)]
    Group(#[from] OagError),
}

/// An algebraic extension `(F, v_F)` of `(Q, v_p)` with residue field
/// `F_p^alg`, described by its value group pair, normalised so that
/// `v_F(p) = 1`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize)]
pub struct CompatibleCore {
    pub p: u64,
    pub hull: Rank1Desc,
    pub residue: FieldDesc,
    pub alg_maximal: bool,
    pub algebraic_over_q: bool,
}

impl CompatibleCore {
    /// The candidate whose value group pair is `([G]_g, g)`.
    pub fn for_group(p: u64, group: &OAGDesc, g: &GroupElement) -> Result<Self, OagError> {
        Ok(CompatibleCore {
            p,
            hull: group.rel_div_hull(g)?,
            residue: FieldDesc::falg(p),
            alg_maximal: true,
            algebraic_over_q: true,
        })
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
#[serde(tag = "kind")]
pub enum TheoryKind {
    /// `k` with the trivial valuation.
    Trivial { field: FieldDesc },
    /// The theory of `k((G))` in equal characteristic 0.
    EqChar0 { k: FieldDesc, group: OAGDesc },
    /// Separably defectless henselian fields of imperfection degree `e`.
    EqCharPSd {
        e: Option<ImpDegree>,
        k: FieldDesc,
        group: OAGDesc,
    },
    /// Mixed characteristic with `(K, v_p)` henselian and `(Kv_p, v̄)`
    /// separably algebraically maximal of imperfection degree `e`.
    MixedFinRam {
        e: Option<ImpDegree>,
        k: FieldDesc,
        group: OAGDesc,
        gamma: GroupElement,
    },
    /// Algebraically maximal of mixed characteristic, optionally with its
    /// algebraic part fixed.
    MixedAlgMax {
        k: FieldDesc,
        group: OAGDesc,
        gamma: GroupElement,
        completion: Option<CompatibleCore>,
    },
    /// Elementarily equivalent to a finite extension of a model of `inner`.
    FiniteExtOf {
        inner: Box<TheoryKind>,
        degree: Option<u64>,
    },
}

impl TheoryKind {
    pub fn notation(&self) -> String {
        let e_str = |e: &Option<ImpDegree>| e.map(|e| e.to_string()).unwrap_or_else(|| "?".into());
        match self {
            TheoryKind::Trivial { field } => format!("Th({field}, trivial)"),
            TheoryKind::EqChar0 { k, group } => format!("T({k},{group})"),
            TheoryKind::EqCharPSd { e, k, group } => format!("Tsd_{}({k},{group})", e_str(e)),
            TheoryKind::MixedFinRam { e, k, group, gamma } => {
                format!("T_{}({k},{group},{gamma})", e_str(e))
            }
            TheoryKind::MixedAlgMax {
                k,
                group,
                gamma,
                completion,
            } => match completion {
                Some(c) => format!("T({k},{group},{gamma},F[{}])", c.hull),
                None => format!("T({k},{group},{gamma})"),
            },
            TheoryKind::FiniteExtOf { inner, degree } => match degree {
                Some(d) => format!("finite extension of degree {d} of a model of {}", inner.notation()),
                None => format!("finite extension of a model of {}", inner.notation()),
            },
        }
    }
}

impl fmt::Display for TheoryKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.notation())
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Family {
    I,
    II,
    III,
    IV,
    V,
    VI,
}

impl Family {
    pub fn roman(self) -> &'static str {
        match self {
            Family::I => "i",
            Family::II => "ii",
            Family::III => "iii",
            Family::IV => "iv",
            Family::V => "v",
            Family::VI => "vi",
        }
    }

    pub fn description(self) -> &'static str {
        match self {
            Family::I => "model of T(C,G)",
            Family::II => "model of T(R,G)",
            Family::III => "model of Tsd_e(Falg(p),G) with G p-divisible",
            Family::IV => "finite extension of a model of T_0(F(p),G,g) with g minimum positive",
            Family::V => "finite extension of a model of T_e(Falg(p),G,g) with the image of g minimum positive in G/G_{g-} and G_{g-} p-divisible",
            Family::VI => "model of T(Falg(p),G,g) with G_{g+} p-divisible",
        }
    }
}

impl fmt::Display for Family {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({})", self.roman())
    }
}

impl Serialize for Family {
    fn serialize<S: serde::Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        s.serialize_str(self.roman())
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
#[serde(tag = "route")]
pub enum ShelahRoute {
    Family { family: Family, description: String },
    /// Trivially valued input: the field itself is the object.
    ResidueLevel { note: String },
    Outside { reason: String },
}

impl ShelahRoute {
    pub fn family(&self) -> Option<Family> {
        match self {
            ShelahRoute::Family { family, .. } => Some(*family),
            _ => None,
        }
    }
}

/// Appended to every routing report.
pub const SHELAH_NOTE: &str = "membership in a family is unconditional for the valued field; that the list exhausts all NIP fields depends on Shelah's conjecture";

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct TheoryTag {
    pub notation: String,
    pub theory: TheoryKind,
    pub complete: Tri,
    pub shelah_family: Option<Family>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct CohenNormalForm {
    pub cohen_residue: FieldDesc,
    pub ext_degree: u64,
}

fn require_nip(verdict: &Verdict) -> Result<NipCase, TheoryError> {
    verdict
        .case()
        .ok_or_else(|| TheoryError::NotNip(verdict.headline()))
}

/// The coordinate of `v(p)` at its leading position, as an integer.
fn leading_int(g: &GroupElement) -> Option<u64> {
    let lead = g.leading_index()?;
    let c = &g.coords()[lead];
    if c.is_integer() {
        c.to_integer().to_u64()
    } else {
        None
    }
}

/// `(lex(G[..lead], Z, G[lead+1..]), unit at lead)`: the value group pair of
/// the unramified base of a finitely ramified `v_p`.
fn unramified_base(group: &OAGDesc, gamma: &GroupElement) -> (OAGDesc, GroupElement) {
    let lead = gamma.leading_index().expect("v(p) is positive");
    let mut summands = group.summands().to_vec();
    summands[lead] = ArchSummand::Discrete;
    let mut coords = vec![0i64; group.rank()];
    coords[lead] = 1;
    (OAGDesc::new(summands), GroupElement::from_ints(&coords))
}

pub fn theory_of(k: &ValuedFieldDesc, verdict: &Verdict) -> Result<TheoryTag, TheoryError> {
    theory_of_with(k, verdict, None)
}

/// As [`theory_of`], with an optional algebraic part for case (c).
pub fn theory_of_with(
    k: &ValuedFieldDesc,
    verdict: &Verdict,
    completion: Option<CompatibleCore>,
) -> Result<TheoryTag, TheoryError> {
    let case = require_nip(verdict)?;
    let residue = k.residue_field();
    let group = k.value_group();
    let theory = if k.is_trivial() {
        TheoryKind::Trivial { field: k.field() }
    } else {
        match k.char_pair() {
            CharPair::EqualZero => TheoryKind::EqChar0 { k: residue, group },
            CharPair::EqualP(_) => TheoryKind::EqCharPSd {
                e: k.field().imperfection_degree(),
                k: residue,
                group,
            },
            CharPair::Mixed(p) => {
                let gamma = k.vp().expect("mixed characteristic has v(p)");
                let d = k.standard_decomposition()?;
                match case {
                    NipCase::B => {
                        let (base_group, base_gamma) = unramified_base(&group, &gamma);
                        let e_ram = leading_int(&gamma).ok_or_else(|| {
                            TheoryError::Hypothesis(format!(
                                "v(p) = {gamma} is not an integral multiple of the least positive element of Delta_0/Delta_p"
                            ))
                        })?;
                        let (inner, degree) = match residue {
                            FieldDesc::Finite { n, .. } => (
                                TheoryKind::MixedFinRam {
                                    e: Some(ImpDegree::Finite(0)),
                                    k: FieldDesc::Finite { p, n: 1 },
                                    group: base_group,
                                    gamma: base_gamma,
                                },
                                e_ram * n as u64,
                            ),
                            _ => (
                                TheoryKind::MixedFinRam {
                                    e: d.kvp_vbar.field().imperfection_degree(),
                                    k: residue,
                                    group: base_group,
                                    gamma: base_gamma,
                                },
                                e_ram,
                            ),
                        };
                        if degree > 1 {
                            TheoryKind::FiniteExtOf {
                                inner: Box::new(inner),
                                degree: Some(degree),
                            }
                        } else {
                            inner
                        }
                    }
                    NipCase::C => {
                        let completion = match completion {
                            Some(c) => Some(c),
                            None => derived_completion(k, p, &group, &gamma)?,
                        };
                        TheoryKind::MixedAlgMax {
                            k: residue,
                            group,
                            gamma,
                            completion,
                        }
                    }
                    NipCase::A => unreachable!("mixed characteristic is never case (a)"),
                }
            }
        }
    };
    let shelah = shelah_family(k, verdict)?.family();
    Ok(TheoryTag {
        notation: theory.notation(),
        complete: completeness_check(&theory),
        theory,
        shelah_family: shelah,
    })
}

/// The tame construction over `F_p^alg` has algebraic part determined by
/// the value group pair.
fn derived_completion(
    k: &ValuedFieldDesc,
    p: u64,
    group: &OAGDesc,
    gamma: &GroupElement,
) -> Result<Option<CompatibleCore>, TheoryError> {
    let tame = matches!(k.core(), Core::TameKaplansky { .. });
    if tame && k.residue_field() == FieldDesc::falg(p) {
        Ok(Some(CompatibleCore::for_group(p, group, gamma)?))
    } else {
        Ok(None)
    }
}

fn infinite_perfect_nip(k: &FieldDesc) -> Tri {
    let r = k.predicates();
    r.is_infinite.and(r.is_perfect).and(r.is_nip)
}

/// Whether the tag is known to denote a complete theory. Tags whose
/// completeness hypotheses fail are reported as unknown, not incomplete.
pub fn completeness_check(theory: &TheoryKind) -> Tri {
    let gate = |t: Tri| if t.is_true() { Tri::True } else { Tri::Unknown };
    match theory {
        TheoryKind::Trivial { .. } | TheoryKind::EqChar0 { .. } => Tri::True,
        TheoryKind::EqCharPSd { e, k, group } => {
            let r = k.predicates();
            let p = r.char;
            gate(
                Tri::from(e.is_some() && group.is_p_divisible(p) && !group.is_trivial())
                    .and(r.is_perfect)
                    .and(r.no_sep_ext_div_p),
            )
        }
        TheoryKind::MixedFinRam { e, k, group, gamma } => {
            let p = k.char();
            let (minus, _) = match group.gamma_cuts(gamma) {
                Ok(c) => c,
                Err(_) => return Tri::Unknown,
            };
            let lower_div = group.slice(minus.index, group.rank()).is_p_divisible(p);
            let min_pos = group.min_positive_image(gamma).unwrap_or(false);
            gate(infinite_perfect_nip(k).and(Tri::from(e.is_some() && lower_div && min_pos)))
        }
        TheoryKind::MixedAlgMax {
            k,
            group,
            gamma,
            completion,
        } => {
            let Some(c) = completion else {
                return Tri::Unknown;
            };
            let p = k.char();
            let groupwise = group.is_p_divisible(p)
                || group.rough_p_divisible(gamma, p).unwrap_or(false);
            let compatible = compatible_check(c, group, gamma, p);
            gate(infinite_perfect_nip(k).and(Tri::from(groupwise && compatible)))
        }
        TheoryKind::FiniteExtOf { inner, .. } => completeness_check(inner),
    }
}

pub fn compatible_check(f: &CompatibleCore, group: &OAGDesc, gamma: &GroupElement, p: u64) -> bool {
    if !gamma.is_positive() || f.p != p {
        return false;
    }
    let Ok(hull) = group.rel_div_hull(gamma) else {
        return false;
    };
    f.alg_maximal && f.algebraic_over_q && f.residue == FieldDesc::falg(p) && f.hull == hull
}

/// For finitely ramified mixed-characteristic fields: the residue field of
/// the Cohen field and the degree of the totally ramified extension.
pub fn cohen_normal_form(k: &ValuedFieldDesc) -> Result<CohenNormalForm, TheoryError> {
    let pair = k.char_pair();
    if !pair.is_mixed() {
        return Err(TheoryError::Hypothesis(format!(
            "Cohen normal form needs mixed characteristic, found {pair}"
        )));
    }
    if !k.structural_flags().henselian.is_true() {
        return Err(TheoryError::NotHenselian);
    }
    if k.predicates().is_finitely_ramified != Some(true) {
        return Err(TheoryError::Hypothesis(
            "Cohen normal form needs a finitely ramified valuation".into(),
        ));
    }
    let gamma = k.vp().expect("mixed characteristic has v(p)");
    let degree = leading_int(&gamma).expect("finitely ramified v(p) is a positive integer");
    Ok(CohenNormalForm {
        cohen_residue: k.residue_field(),
        ext_degree: degree,
    })
}

pub fn shelah_family(k: &ValuedFieldDesc, verdict: &Verdict) -> Result<ShelahRoute, TheoryError> {
    let case = require_nip(verdict)?;
    if !k.structural_flags().henselian.is_true() {
        return Err(TheoryError::NotHenselian);
    }
    let residue = k.residue_field();
    let family = |f: Family| ShelahRoute::Family {
        family: f,
        description: f.description().into(),
    };
    let outside = |why: String| ShelahRoute::Outside {
        reason: format!("outside the list of NIP valued-field families: {why}"),
    };
    if k.is_trivial() {
        let kind = match &residue {
            FieldDesc::RealClosed => {
                "real closed, RCVF family applies only with nontrivial v".to_string()
            }
            FieldDesc::AlgClosed { .. } => "algebraically closed".to_string(),
            FieldDesc::SepClosed { .. } => "separably closed".to_string(),
            FieldDesc::Finite { .. } => "finite field".to_string(),
            other => format!("{other}"),
        };
        return Ok(ShelahRoute::ResidueLevel {
            note: format!("residue-level: {kind}"),
        });
    }
    let route = match (k.char_pair(), case) {
        (CharPair::EqualZero, _) => match residue {
            FieldDesc::AlgClosed { char: 0 } => family(Family::I),
            FieldDesc::RealClosed => family(Family::II),
            other => outside(format!("residue field {other} is neither algebraically nor real closed")),
        },
        (CharPair::EqualP(p), _) => {
            if residue == FieldDesc::falg(p) {
                family(Family::III)
            } else {
                outside(format!("residue field {residue} is not algebraically closed"))
            }
        }
        (CharPair::Mixed(p), case) => match (&residue, case) {
            (FieldDesc::Finite { .. }, _) => family(Family::IV),
            (FieldDesc::AlgClosed { char }, NipCase::B) if *char == p => family(Family::V),
            (FieldDesc::AlgClosed { char }, NipCase::C) if *char == p => {
                let gamma = k.vp().expect("mixed characteristic has v(p)");
                if k.value_group().rough_p_divisible(&gamma, p)? {
                    family(Family::VI)
                } else {
                    outside("the smallest convex subgroup containing v(p) is not p-divisible".into())
                }
            }
            (other, _) => outside(format!(
                "residue field {other} is neither finite nor algebraically closed"
            )),
        },
    };
    Ok(route)
}
