//! Valued-field tower descriptors.
//!
//! A descriptor is a stack of Hahn layers over a core, where the core is a
//! trivially valued field, a finite extension of the p-adics, a Cohen field
//! (optionally composed with an equal-characteristic valued field below it),
//! a tame Kaplansky field, or an abstract core given by flags. Positions in
//! the value group are numbered outermost first, so convex subgroups are
//! suffixes and a cut index `c` splits the tower into the coarse part
//! `0..c` and the residue part `c..n`.

use crate::fields::{AbstractField, FieldDesc, FieldError, ImpDegree};
use crate::oag::{ConvexCut, GroupElement, OAGDesc, OagError};
use crate::tri::Tri;
use serde::{Serialize, Serializer};
use std::fmt;
use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ValFieldError {
    #[error(transparent)]
    Field(#[from] FieldError),
    #[error(transparent)]
    Group(#[from] OagError),
    #[error("tame core must be Kaplansky, but Kaplansky clause {clause} fails: {reason}")]
    NotKaplansky { clause: u8, reason: String },
    #[error("Qp({p},{e},{f}): {reason}")]
    BadPadic {
        p: u64,
        e: u32,
        f: u32,
        reason: String,
    },
    #[error("the lower part of a Cohen field must have equal positive characteristic, found {0}")]
    CohenLower(String),
    #[error("residue characteristic of a mixed-characteristic core must be prime, found {0}")]
    MixedResidueChar(u64),
    #[error("carrier field characteristic {found} does not match the expected {expected}")]
    CarrierChar { expected: u64, found: u64 },
    #[error("inconsistent flags: {0}")]
    Flags(String),
    #[error("expected mixed characteristic, found {0}")]
    NotMixed(CharPair),
    #[error("cut {cut} is not a legal coarsening point: {reason}")]
    IllegalCut { cut: usize, reason: String },
    #[error("cannot compose: {0}")]
    NotComposable(String),
}

pub type Result<T> = std::result::Result<T, ValFieldError>;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum CharPair {
    EqualZero,
    EqualP(u64),
    Mixed(u64),
}

impl CharPair {
    pub fn residue_char(self) -> u64 {
        match self {
            CharPair::EqualZero => 0,
            CharPair::EqualP(p) | CharPair::Mixed(p) => p,
        }
    }

    pub fn field_char(self) -> u64 {
        match self {
            CharPair::EqualP(p) => p,
            _ => 0,
        }
    }

    pub fn is_mixed(self) -> bool {
        matches!(self, CharPair::Mixed(_))
    }
}

impl fmt::Display for CharPair {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            CharPair::EqualZero => f.write_str("(0,0)"),
            CharPair::EqualP(p) => write!(f, "({p},{p})"),
            CharPair::Mixed(p) => write!(f, "(0,{p})"),
        }
    }
}

impl Serialize for CharPair {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.serialize_str(&self.to_string())
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
pub struct CoreFlags {
    pub henselian: Tri,
    pub defectless: Tri,
    pub sep_defectless: Tri,
    pub alg_maximal: Tri,
    pub sep_alg_maximal: Tri,
}

impl CoreFlags {
    pub fn all_true() -> Self {
        CoreFlags {
            henselian: Tri::True,
            defectless: Tri::True,
            sep_defectless: Tri::True,
            alg_maximal: Tri::True,
            sep_alg_maximal: Tri::True,
        }
    }

    pub fn unknown() -> Self {
        CoreFlags {
            henselian: Tri::Unknown,
            defectless: Tri::Unknown,
            sep_defectless: Tri::Unknown,
            alg_maximal: Tri::Unknown,
            sep_alg_maximal: Tri::Unknown,
        }
    }

    /// Close the flags under the implications between the five properties.
    /// `char_zero` is the characteristic of the field itself: there every
    /// extension is separable, so the separable and plain variants agree.
    fn close(mut self, char_zero: bool, residue_char_zero: bool) -> Result<Self> {
        fn force(slot: &mut Tri, value: Tri, rule: &str) -> Result<()> {
            match (*slot, value) {
                (_, Tri::Unknown) => Ok(()),
                (Tri::Unknown, v) => {
                    *slot = v;
                    Ok(())
                }
                (a, b) if a == b => Ok(()),
                _ => Err(ValFieldError::Flags(rule.to_string())),
            }
        }
        if residue_char_zero {
            force(
                &mut self.defectless,
                Tri::True,
                "valuations with residue characteristic 0 are defectless",
            )?;
        }
        for _ in 0..3 {
            if char_zero {
                let (d, s) = (self.defectless, self.sep_defectless);
                force(&mut self.defectless, s, "in characteristic 0 defectless and separably defectless agree")?;
                force(&mut self.sep_defectless, d, "in characteristic 0 defectless and separably defectless agree")?;
                let (a, s) = (self.alg_maximal, self.sep_alg_maximal);
                force(&mut self.alg_maximal, s, "in characteristic 0 algebraically maximal and separably algebraically maximal agree")?;
                force(&mut self.sep_alg_maximal, a, "in characteristic 0 algebraically maximal and separably algebraically maximal agree")?;
            }
            if self.defectless.is_true() {
                force(&mut self.sep_defectless, Tri::True, "defectless implies separably defectless")?;
            }
            if self.sep_defectless.is_false() {
                force(&mut self.defectless, Tri::False, "defectless implies separably defectless")?;
            }
            if self.henselian.and(self.defectless).is_true() {
                force(&mut self.alg_maximal, Tri::True, "henselian defectless implies algebraically maximal")?;
            }
            if self.henselian.and(self.sep_defectless).is_true() {
                force(&mut self.sep_alg_maximal, Tri::True, "henselian separably defectless implies separably algebraically maximal")?;
            }
            if self.alg_maximal.is_true() {
                force(&mut self.sep_alg_maximal, Tri::True, "algebraically maximal implies separably algebraically maximal")?;
            }
            if self.sep_alg_maximal.is_false() {
                force(&mut self.alg_maximal, Tri::False, "algebraically maximal implies separably algebraically maximal")?;
            }
            // The henselization is a separable immediate algebraic extension.
            if self.sep_alg_maximal.is_true() {
                force(&mut self.henselian, Tri::True, "separably algebraically maximal implies henselian")?;
            }
            if self.henselian.is_false() {
                force(&mut self.sep_alg_maximal, Tri::False, "separably algebraically maximal implies henselian")?;
                force(&mut self.alg_maximal, Tri::False, "algebraically maximal implies henselian")?;
            }
        }
        Ok(self)
    }

    /// Flags of a composition whose upper part is a genuine valued piece.
    fn compose(upper: CoreFlags, lower: CoreFlags, char_zero: bool) -> CoreFlags {
        let henselian = upper.henselian.and(lower.henselian);
        let defectless = upper.defectless.and(lower.defectless);
        let sep_defectless = if defectless.is_true() || char_zero {
            defectless
        } else {
            Tri::Unknown
        };
        let flags = CoreFlags {
            henselian,
            defectless,
            sep_defectless,
            alg_maximal: Tri::Unknown,
            sep_alg_maximal: Tri::Unknown,
        };
        flags
            .close(char_zero, false)
            .expect("composition of consistent flags is consistent")
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct AbstractCore {
    pub residue: FieldDesc,
    pub group: OAGDesc,
    /// `v(p)` for a mixed-characteristic core, `None` in equal characteristic.
    pub vp: Option<GroupElement>,
    /// The carrier field itself, when known.
    pub field: Option<FieldDesc>,
    pub flags: CoreFlags,
}

#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub enum Lower {
    Plain(FieldDesc),
    Valued(Box<ValuedFieldDesc>),
}

#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub enum Core {
    Trivial(FieldDesc),
    /// Finite extension of `Q_p` with ramification `e` and residue degree `f`.
    QpExt { p: u64, e: u32, f: u32 },
    Cohen(Lower),
    TameKaplansky {
        residue: FieldDesc,
        group: OAGDesc,
        vp: GroupElement,
    },
    Abstract(AbstractCore),
}

#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct ValuedFieldDesc {
    layers: Vec<OAGDesc>,
    core: Core,
}

/// Predicates read off a descriptor. Ramification predicates are `None`
/// outside mixed characteristic.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct ValuedPredicates {
    pub is_trivial: bool,
    pub char_pair: CharPair,
    pub is_finitely_ramified: Option<bool>,
    pub is_unramified: Option<bool>,
    pub is_kaplansky: Tri,
}

/// The properties preserved by passing to the henselization.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct HenselInvariants {
    pub trivial: bool,
    pub equal_char_zero: bool,
    pub equal_char_p: bool,
    pub mixed: bool,
    pub sep_defectless: Tri,
    pub defectless: Tri,
    pub kaplansky: Tri,
    pub finitely_ramified: bool,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Decomposition {
    pub p: u64,
    pub value_group: OAGDesc,
    pub vp: GroupElement,
    /// Largest convex subgroup not containing `v(p)`.
    pub delta_p: ConvexCut,
    /// Smallest convex subgroup containing `v(p)`.
    pub delta_0: ConvexCut,
    /// Whether `Δ_0/Δ_p` has a least positive element.
    pub quotient_discrete: bool,
    /// `(K, v_0)`.
    pub upper: ValuedFieldDesc,
    /// `(K, v_p)`.
    pub upper_p: ValuedFieldDesc,
    /// `(Kv_0, v̄)`.
    pub k_v0: ValuedFieldDesc,
    /// `(Kv_0, v̄_p)`.
    pub kv0_vbar_p: ValuedFieldDesc,
    /// `(Kv_p, v̄)`.
    pub kvp_vbar: ValuedFieldDesc,
}

impl Decomposition {
    /// Reassemble `(K, v_0)`, `(Kv_0, v̄_p)` and `(Kv_p, v̄)`.
    pub fn recompose(&self) -> Result<ValuedFieldDesc> {
        ValuedFieldDesc::compose(
            &ValuedFieldDesc::compose(&self.upper, &self.kv0_vbar_p)?,
            &self.kvp_vbar,
        )
    }
}

fn char_zero_field() -> FieldDesc {
    FieldDesc::Abstract(AbstractField::char_zero())
}

/// Field of a tame piece of equal characteristic `p`: perfect (Kaplansky
/// residue and p-divisible group) and without separable extensions of degree
/// divisible by `p` (ramification and residue degrees are prime to `p`).
fn tame_char_p_field(p: u64) -> FieldDesc {
    FieldDesc::Abstract(AbstractField {
        char: p,
        perfect: Tri::True,
        imperfection: Some(ImpDegree::Finite(0)),
        no_sep_ext_div_p: Tri::True,
        nip: Tri::Unknown,
    })
}

impl Lower {
    fn rank(&self) -> usize {
        match self {
            Lower::Plain(_) => 0,
            Lower::Valued(d) => d.rank(),
        }
    }

    fn residue(&self) -> FieldDesc {
        match self {
            Lower::Plain(k) => k.clone(),
            Lower::Valued(d) => d.residue_field(),
        }
    }

    fn char(&self) -> u64 {
        match self {
            Lower::Plain(k) => k.char(),
            Lower::Valued(d) => d.char_pair().field_char(),
        }
    }
}

impl Core {
    fn rank(&self) -> usize {
        match self {
            Core::Trivial(_) => 0,
            Core::QpExt { .. } => 1,
            Core::Cohen(l) => 1 + l.rank(),
            Core::TameKaplansky { group, .. } => group.rank(),
            Core::Abstract(a) => a.group.rank(),
        }
    }

    fn group(&self) -> OAGDesc {
        match self {
            Core::Trivial(_) => OAGDesc::trivial(),
            Core::QpExt { .. } => OAGDesc::integers(),
            Core::Cohen(Lower::Plain(_)) => OAGDesc::integers(),
            Core::Cohen(Lower::Valued(d)) => OAGDesc::lex([&OAGDesc::integers(), &d.value_group()]),
            Core::TameKaplansky { group, .. } => group.clone(),
            Core::Abstract(a) => a.group.clone(),
        }
    }

    fn char_pair(&self) -> CharPair {
        let eq = |c: u64| {
            if c == 0 {
                CharPair::EqualZero
            } else {
                CharPair::EqualP(c)
            }
        };
        match self {
            Core::Trivial(k) => eq(k.char()),
            Core::QpExt { p, .. } => CharPair::Mixed(*p),
            Core::Cohen(l) => CharPair::Mixed(l.char()),
            Core::TameKaplansky { residue, .. } => CharPair::Mixed(residue.char()),
            Core::Abstract(a) => match a.vp {
                Some(_) => CharPair::Mixed(a.residue.char()),
                None => eq(a.residue.char()),
            },
        }
    }

    fn vp(&self) -> Option<GroupElement> {
        match self {
            Core::QpExt { e, .. } => Some(GroupElement::from_ints(&[*e as i64])),
            Core::Cohen(l) => {
                let mut c = vec![1i64];
                c.extend(std::iter::repeat_n(0, l.rank()));
                Some(GroupElement::from_ints(&c))
            }
            Core::TameKaplansky { vp, .. } => Some(vp.clone()),
            Core::Abstract(a) => a.vp.clone(),
            Core::Trivial(_) => None,
        }
    }

    fn residue(&self) -> FieldDesc {
        match self {
            Core::Trivial(k) => k.clone(),
            Core::QpExt { p, f, .. } => FieldDesc::Finite { p: *p, n: *f },
            Core::Cohen(l) => l.residue(),
            Core::TameKaplansky { residue, .. } => residue.clone(),
            Core::Abstract(a) => a.residue.clone(),
        }
    }

    fn field(&self) -> FieldDesc {
        match self {
            Core::Trivial(k) => k.clone(),
            Core::QpExt { .. } | Core::Cohen(_) | Core::TameKaplansky { .. } => char_zero_field(),
            Core::Abstract(a) => {
                if let Some(f) = &a.field {
                    f.clone()
                } else if a.group.is_trivial() {
                    a.residue.clone()
                } else {
                    match self.char_pair() {
                        CharPair::EqualP(p) => FieldDesc::Abstract(AbstractField::unknown(p)),
                        _ => char_zero_field(),
                    }
                }
            }
        }
    }

    fn flags(&self) -> CoreFlags {
        match self {
            Core::Cohen(Lower::Valued(d)) => {
                CoreFlags::compose(CoreFlags::all_true(), d.structural_flags(), true)
            }
            Core::Abstract(a) => a.flags,
            _ => CoreFlags::all_true(),
        }
    }

    fn validate(self) -> Result<Core> {
        match self {
            Core::Trivial(k) => Ok(Core::Trivial(k.validate()?)),
            Core::QpExt { p, e, f } => {
                let bad = |reason: &str| ValFieldError::BadPadic {
                    p,
                    e,
                    f,
                    reason: reason.into(),
                };
                if !crate::oag::is_prime(p) {
                    return Err(bad("p must be prime"));
                }
                if e == 0 || f == 0 {
                    return Err(bad("ramification and residue degree must be at least 1"));
                }
                Ok(Core::QpExt { p, e, f })
            }
            Core::Cohen(Lower::Plain(k)) => {
                let k = k.validate()?;
                if k.char() == 0 {
                    return Err(ValFieldError::CohenLower(k.to_string()));
                }
                Ok(Core::Cohen(Lower::Plain(k)))
            }
            Core::Cohen(Lower::Valued(d)) => {
                if d.value_group().is_trivial() {
                    return Core::Cohen(Lower::Plain(d.field())).validate();
                }
                match d.char_pair() {
                    CharPair::EqualP(_) => Ok(Core::Cohen(Lower::Valued(d))),
                    other => Err(ValFieldError::CohenLower(other.to_string())),
                }
            }
            Core::TameKaplansky { residue, group, vp } => {
                let residue = residue.validate()?;
                let p = residue.char();
                if p == 0 {
                    return Err(ValFieldError::MixedResidueChar(0));
                }
                group.check(&vp)?;
                if !vp.is_positive() {
                    return Err(OagError::NonPositive.into());
                }
                if !group.is_p_divisible(p) {
                    return Err(ValFieldError::NotKaplansky {
                        clause: 1,
                        reason: format!("value group {group} is not {p}-divisible"),
                    });
                }
                let pr = residue.predicates();
                if !pr.is_perfect.is_true() {
                    return Err(ValFieldError::NotKaplansky {
                        clause: 2,
                        reason: format!("residue field {residue} is not known to be perfect"),
                    });
                }
                if !pr.no_sep_ext_div_p.is_true() {
                    let reason = if pr.no_sep_ext_div_p.is_false() {
                        format!("{residue} has separable extensions of degree divisible by {p}")
                    } else {
                        format!("{residue} is not known to lack separable extensions of degree divisible by {p}")
                    };
                    return Err(ValFieldError::NotKaplansky { clause: 3, reason });
                }
                Ok(Core::TameKaplansky { residue, group, vp })
            }
            Core::Abstract(a) => validate_abstract(a).map(Core::Abstract),
        }
    }
}

fn validate_abstract(a: AbstractCore) -> Result<AbstractCore> {
    let AbstractCore {
        residue,
        group,
        vp,
        field,
        flags,
    } = a;
    let residue = residue.validate()?;
    let field = field.map(|f| f.validate()).transpose()?;
    let rc = residue.char();
    if group.is_trivial() {
        if vp.is_some() {
            return Err(OagError::TrivialGroup.into());
        }
        let flags = flags.close(rc == 0, rc == 0)?;
        let all = CoreFlags::all_true();
        if [
            flags.henselian,
            flags.defectless,
            flags.sep_defectless,
            flags.alg_maximal,
            flags.sep_alg_maximal,
        ]
        .contains(&Tri::False)
        {
            return Err(ValFieldError::Flags(
                "the trivial valuation is henselian and defectless".into(),
            ));
        }
        return Ok(AbstractCore {
            residue,
            group,
            vp: None,
            field,
            flags: all,
        });
    }
    let field_char = match &vp {
        Some(g) => {
            group.check(g)?;
            if !g.is_positive() {
                return Err(OagError::NonPositive.into());
            }
            if rc == 0 {
                return Err(ValFieldError::MixedResidueChar(0));
            }
            0
        }
        None => rc,
    };
    if let Some(f) = &field {
        if f.char() != field_char {
            return Err(ValFieldError::CarrierChar {
                expected: field_char,
                found: f.char(),
            });
        }
    }
    let mut flags = flags;
    let closed_imperfection = match &field {
        Some(FieldDesc::AlgClosed { .. }) => Some(ImpDegree::Finite(0)),
        Some(FieldDesc::SepClosed { e, .. }) => Some(*e),
        _ => None,
    };
    if let Some(e) = closed_imperfection {
        // A separably closed field has no proper separable algebraic
        // extensions, so every separable condition holds trivially.
        match &residue {
            FieldDesc::AlgClosed { .. } | FieldDesc::Abstract(_) => {}
            other => {
                return Err(ValFieldError::Flags(format!(
                    "a separably closed valued field has algebraically closed residue field, not {other}"
                )))
            }
        }
        let closed = CoreFlags {
            henselian: Tri::True,
            sep_defectless: Tri::True,
            sep_alg_maximal: Tri::True,
            ..CoreFlags::unknown()
        };
        flags = merge(flags, closed)?;
        // An imperfect one has the purely inseparable immediate extension
        // obtained by adjoining p-th roots.
        if !e.is_zero() {
            flags = merge(
                flags,
                CoreFlags {
                    defectless: Tri::False,
                    alg_maximal: Tri::False,
                    ..CoreFlags::unknown()
                },
            )?;
        }
    }
    let flags = flags.close(field_char == 0, rc == 0)?;
    Ok(AbstractCore {
        residue,
        group,
        vp,
        field,
        flags,
    })
}

fn merge(a: CoreFlags, b: CoreFlags) -> Result<CoreFlags> {
    fn one(x: Tri, y: Tri, name: &str) -> Result<Tri> {
        match (x, y) {
            (Tri::Unknown, v) | (v, Tri::Unknown) => Ok(v),
            (x, y) if x == y => Ok(x),
            _ => Err(ValFieldError::Flags(format!(
                "{name} conflicts with the carrier field"
            ))),
        }
    }
    Ok(CoreFlags {
        henselian: one(a.henselian, b.henselian, "henselian")?,
        defectless: one(a.defectless, b.defectless, "defectless")?,
        sep_defectless: one(a.sep_defectless, b.sep_defectless, "separably defectless")?,
        alg_maximal: one(a.alg_maximal, b.alg_maximal, "algebraically maximal")?,
        sep_alg_maximal: one(a.sep_alg_maximal, b.sep_alg_maximal, "separably algebraically maximal")?,
    })
}

impl ValuedFieldDesc {
    /// Validate and normalise a tower. Trivial layers are dropped and a
    /// Cohen field over a trivially valued lower part becomes a plain one.
    pub fn build(layers: Vec<OAGDesc>, core: Core) -> Result<Self> {
        let layers = layers.into_iter().filter(|l| !l.is_trivial()).collect();
        Ok(ValuedFieldDesc {
            layers,
            core: core.validate()?,
        })
    }

    pub fn trivial(k: FieldDesc) -> Result<Self> {
        Self::build(vec![], Core::Trivial(k))
    }

    pub fn qp(p: u64, e: u32, f: u32) -> Result<Self> {
        Self::build(vec![], Core::QpExt { p, e, f })
    }

    pub fn cohen(lower: Lower) -> Result<Self> {
        Self::build(vec![], Core::Cohen(lower))
    }

    pub fn tame(residue: FieldDesc, group: OAGDesc, vp: GroupElement) -> Result<Self> {
        Self::build(vec![], Core::TameKaplansky { residue, group, vp })
    }

    pub fn abstract_core(core: AbstractCore) -> Result<Self> {
        Self::build(vec![], Core::Abstract(core))
    }

    /// `self((group))` with the composed valuation.
    pub fn hahn(&self, group: OAGDesc) -> Self {
        let mut layers = Vec::with_capacity(self.layers.len() + 1);
        if !group.is_trivial() {
            layers.push(group);
        }
        layers.extend(self.layers.iter().cloned());
        ValuedFieldDesc {
            layers,
            core: self.core.clone(),
        }
    }

    pub fn layers(&self) -> &[OAGDesc] {
        &self.layers
    }

    pub fn core(&self) -> &Core {
        &self.core
    }

    fn layer_rank(&self) -> usize {
        self.layers.iter().map(OAGDesc::rank).sum()
    }

    pub fn rank(&self) -> usize {
        self.layer_rank() + self.core.rank()
    }

    pub fn value_group(&self) -> OAGDesc {
        let core = self.core.group();
        OAGDesc::lex(self.layers.iter().chain(std::iter::once(&core)))
    }

    pub fn char_pair(&self) -> CharPair {
        self.core.char_pair()
    }

    /// `v(p)` in the full value group, for mixed characteristic.
    pub fn vp(&self) -> Option<GroupElement> {
        let core = self.core.vp()?;
        let pad = GroupElement::zero(self.layer_rank());
        Some(GroupElement::concat(&[&pad, &core]))
    }

    pub fn residue_field(&self) -> FieldDesc {
        self.core.residue()
    }

    pub fn is_trivial(&self) -> bool {
        self.rank() == 0
    }

    /// The underlying field, as a plain field descriptor.
    pub fn field(&self) -> FieldDesc {
        let base = self.core.field();
        if self.layers.is_empty() {
            return base;
        }
        let p = self.char_pair().field_char();
        if p == 0 {
            return char_zero_field();
        }
        // [k((G)) : k((G))^p] = [k : k^p] * |G/pG|.
        let extra = self
            .layers
            .iter()
            .flat_map(|l| l.summands())
            .filter(|a| !a.is_p_divisible(p))
            .count() as u32;
        let pr = base.predicates();
        let perfect = if extra > 0 {
            Tri::False
        } else {
            pr.is_perfect
        };
        FieldDesc::Abstract(AbstractField {
            char: p,
            perfect,
            imperfection: pr.imperfection_degree.map(|e| e.plus(extra)),
            no_sep_ext_div_p: Tri::Unknown,
            nip: Tri::Unknown,
        })
    }

    /// Residue field of the coarsening at `cut`.
    pub fn residue_at(&self, cut: usize) -> Result<FieldDesc> {
        let n = self.rank();
        if cut > n {
            return Err(OagError::CutOutOfRange { index: cut, rank: n }.into());
        }
        if cut == n {
            Ok(self.residue_field())
        } else {
            Ok(self.segment(cut, n)?.field())
        }
    }

    /// The valued field `(K v_outer, v̄)` where `v̄` is the valuation induced
    /// on the residue field of the coarsening at `outer` with value group
    /// the positions `outer..inner`.
    pub fn segment(&self, outer: usize, inner: usize) -> Result<ValuedFieldDesc> {
        let n = self.rank();
        if inner > n {
            return Err(OagError::CutOutOfRange { index: inner, rank: n }.into());
        }
        if outer > inner {
            return Err(OagError::CutOrder { outer, inner }.into());
        }
        if outer == 0 && inner == n {
            return Ok(self.clone());
        }
        if outer == inner {
            return Self::trivial(self.residue_at(inner)?);
        }
        let mut layers = Vec::new();
        let mut pos = 0;
        for l in &self.layers {
            let (s, e) = (pos, pos + l.rank());
            let (a, b) = (s.max(outer), e.min(inner));
            if a < b {
                layers.push(l.slice(a - s, b - s));
            }
            pos = e;
        }
        let c0 = pos;
        if inner <= c0 {
            return Self::build(layers, Core::Trivial(self.residue_at(inner)?));
        }
        let piece = self.core_segment(outer.max(c0) - c0, inner - c0)?;
        layers.extend(piece.layers);
        Self::build(layers, piece.core)
    }

    fn core_only(&self) -> ValuedFieldDesc {
        ValuedFieldDesc {
            layers: vec![],
            core: self.core.clone(),
        }
    }

    fn core_segment(&self, a: usize, b: usize) -> Result<ValuedFieldDesc> {
        let rank = self.core.rank();
        if a == 0 && b == rank {
            return Ok(self.core_only());
        }
        match &self.core {
            Core::Trivial(_) | Core::QpExt { .. } | Core::Cohen(Lower::Plain(_)) => {
                unreachable!("cores of rank at most one have no proper segments")
            }
            Core::Cohen(Lower::Valued(d)) => {
                if a == 0 {
                    let lower = d.segment(0, b - 1)?;
                    Self::build(vec![], Core::Cohen(Lower::Valued(Box::new(lower))))
                } else {
                    d.segment(a - 1, b - 1)
                }
            }
            Core::TameKaplansky { residue, group, vp } => {
                let p = residue.char();
                let lead = vp.leading_index().expect("v(p) is positive");
                let h = group.slice(a, b);
                let res = if b == rank {
                    residue.clone()
                } else if b <= lead {
                    char_zero_field()
                } else {
                    tame_char_p_field(p)
                };
                if a <= lead && lead < b {
                    if b == rank {
                        Self::tame(res, h, vp.slice(a, b))
                    } else {
                        Self::abstract_core(AbstractCore {
                            residue: res,
                            group: h,
                            vp: Some(vp.slice(a, b)),
                            field: None,
                            flags: CoreFlags::all_true(),
                        })
                    }
                } else if b <= lead {
                    Self::build(vec![h], Core::Trivial(res))
                } else {
                    Self::abstract_core(AbstractCore {
                        residue: res,
                        group: h,
                        vp: None,
                        field: Some(tame_char_p_field(p)),
                        flags: CoreFlags::all_true(),
                    })
                }
            }
            Core::Abstract(ac) => {
                let rc = ac.residue.char();
                let lead = ac.vp.as_ref().and_then(GroupElement::leading_index);
                let below_char_zero = |cut: usize| match lead {
                    Some(l) => cut <= l,
                    None => rc == 0,
                };
                // Interior residue fields are not determined by the flags;
                // only their characteristic is.
                let res = if b == rank {
                    ac.residue.clone()
                } else if below_char_zero(b) {
                    char_zero_field()
                } else {
                    FieldDesc::Abstract(AbstractField::unknown(rc))
                };
                let vp = match lead {
                    Some(l) if a <= l && l < b => ac.vp.as_ref().map(|g| g.slice(a, b)),
                    _ => None,
                };
                let field = if a == 0 { ac.field.clone() } else { None };
                let known = |t: Tri| if t.is_true() { Tri::True } else { Tri::Unknown };
                let flags = CoreFlags {
                    henselian: known(ac.flags.henselian),
                    defectless: known(ac.flags.defectless),
                    sep_defectless: known(ac.flags.defectless),
                    alg_maximal: Tri::Unknown,
                    sep_alg_maximal: Tri::Unknown,
                };
                Self::abstract_core(AbstractCore {
                    residue: res,
                    group: ac.group.slice(a, b),
                    vp,
                    field,
                    flags,
                })
            }
        }
    }

    /// Cut indices at which the tower can be split into descriptors.
    pub fn legal_cuts(&self) -> Vec<usize> {
        let c0 = self.layer_rank();
        let mut cuts: Vec<usize> = (0..=c0).collect();
        match &self.core {
            Core::Trivial(_) => {}
            Core::QpExt { .. } | Core::Cohen(Lower::Plain(_)) => cuts.push(c0 + 1),
            Core::Cohen(Lower::Valued(d)) => {
                cuts.extend(d.legal_cuts().into_iter().map(|j| c0 + 1 + j));
            }
            Core::TameKaplansky { .. } | Core::Abstract(_) => cuts.push(c0 + self.core.rank()),
        }
        cuts.dedup();
        cuts
    }

    /// Split at `cut` into `(K, w)` and `(Kw, v̄)`.
    pub fn coarsen_at(&self, cut: usize) -> Result<(ValuedFieldDesc, ValuedFieldDesc)> {
        let n = self.rank();
        if cut > n {
            return Err(OagError::CutOutOfRange { index: cut, rank: n }.into());
        }
        if !self.legal_cuts().contains(&cut) {
            let kind = match &self.core {
                Core::QpExt { .. } => "p-adic",
                Core::TameKaplansky { .. } => "tame",
                _ => "abstract",
            };
            return Err(ValFieldError::IllegalCut {
                cut,
                reason: format!("it lies strictly inside the {kind} core"),
            });
        }
        Ok((self.segment(0, cut)?, self.segment(cut, n)?))
    }

    /// Compose `upper` with a valuation `lower` on its residue field.
    pub fn compose(upper: &ValuedFieldDesc, lower: &ValuedFieldDesc) -> Result<ValuedFieldDesc> {
        if lower.is_trivial() {
            return Ok(upper.clone());
        }
        let mut layers = upper.layers.clone();
        let core = match &upper.core {
            Core::Trivial(_) => {
                layers.extend(lower.layers.iter().cloned());
                lower.core.clone()
            }
            Core::Cohen(Lower::Plain(_)) => Core::Cohen(Lower::Valued(Box::new(lower.clone()))),
            Core::Cohen(Lower::Valued(d)) => {
                Core::Cohen(Lower::Valued(Box::new(Self::compose(d, lower)?)))
            }
            Core::TameKaplansky { .. } | Core::Abstract(_) => {
                let upper_core = upper.core_only();
                let lower_flat = lower.as_abstract();
                let up = upper_core.as_abstract();
                if up.vp.is_some() && lower_flat.vp.is_some() {
                    return Err(ValFieldError::NotComposable(
                        "both parts have mixed characteristic".into(),
                    ));
                }
                let group = OAGDesc::lex([&up.group, &lower_flat.group]);
                let vp = match (&up.vp, &lower_flat.vp) {
                    (Some(g), None) => Some(GroupElement::concat(&[g, &lower_flat.group.zero()])),
                    (None, Some(g)) => Some(GroupElement::concat(&[&up.group.zero(), g])),
                    _ => None,
                };
                let char_zero = up.vp.is_some() || lower_flat.vp.is_some() || up.residue.char() == 0;
                let flags = CoreFlags::compose(up.flags, lower_flat.flags, char_zero);
                Core::Abstract(AbstractCore {
                    residue: lower_flat.residue,
                    group,
                    vp,
                    field: up.field,
                    flags,
                })
            }
            Core::QpExt { .. } => {
                return Err(ValFieldError::NotComposable(
                    "a p-adic core has finite residue field, which carries only the trivial valuation".into(),
                ))
            }
        };
        Self::build(layers, core)
    }

    /// Present the whole descriptor as a single abstract core.
    fn as_abstract(&self) -> AbstractCore {
        let pair = self.char_pair();
        AbstractCore {
            residue: self.residue_field(),
            group: self.value_group(),
            vp: self.vp(),
            field: match pair {
                CharPair::EqualP(_) => Some(self.field()),
                _ => None,
            },
            flags: self.structural_flags(),
        }
    }

    /// Flags of the full composed valuation.
    pub fn structural_flags(&self) -> CoreFlags {
        let core = self.core.flags();
        if self.layers.is_empty() {
            return core;
        }
        let char_zero = self.char_pair().field_char() == 0;
        CoreFlags::compose(CoreFlags::all_true(), core, char_zero)
    }

    /// Whether the tower contains a Cohen field over a valued lower part
    /// whose field is separably closed and imperfect with nontrivial
    /// valuation.
    pub fn has_cohen_over_imperfect_scvf(&self) -> bool {
        match &self.core {
            Core::Cohen(Lower::Valued(d)) => matches!(
                d.field(),
                FieldDesc::SepClosed { e, .. } if !e.is_zero()
            ),
            _ => false,
        }
    }

    /// Declare the valuation henselian. Value group, residue field and the
    /// other properties are unchanged, since the henselization is an
    /// immediate extension.
    pub fn henselize(&self) -> ValuedFieldDesc {
        let core = match &self.core {
            Core::Cohen(Lower::Valued(d)) => Core::Cohen(Lower::Valued(Box::new(d.henselize()))),
            Core::Abstract(ac) => {
                let mut ac = ac.clone();
                if !ac.flags.henselian.is_true() {
                    // Maximality was only refuted through the failure of
                    // henselianity; the henselization is not yet decided.
                    if ac.flags.alg_maximal.is_false() {
                        ac.flags.alg_maximal = Tri::Unknown;
                    }
                    if ac.flags.sep_alg_maximal.is_false() {
                        ac.flags.sep_alg_maximal = Tri::Unknown;
                    }
                    ac.flags.henselian = Tri::True;
                }
                Core::Abstract(ac)
            }
            other => other.clone(),
        };
        ValuedFieldDesc::build(self.layers.clone(), core)
            .expect("henselizing a valid descriptor keeps it valid")
    }

    pub fn predicates(&self) -> ValuedPredicates {
        let pair = self.char_pair();
        let vk = self.value_group();
        let residue = self.residue_field();
        let (fin, unram) = match (pair, self.vp()) {
            (CharPair::Mixed(_), Some(g)) => (
                Some(vk.interval_finite(&g).unwrap_or(false)),
                Some(vk.min_positive().is_some_and(|m| m == g)),
            ),
            _ => (None, None),
        };
        let kaplansky = match pair {
            CharPair::EqualZero => Tri::True,
            CharPair::EqualP(p) | CharPair::Mixed(p) => {
                let r = residue.predicates();
                Tri::from(vk.is_p_divisible(p))
                    .and(r.is_perfect)
                    .and(r.no_sep_ext_div_p)
            }
        };
        ValuedPredicates {
            is_trivial: self.is_trivial(),
            char_pair: pair,
            is_finitely_ramified: fin,
            is_unramified: unram,
            is_kaplansky: kaplansky,
        }
    }

    pub fn hensel_invariants(&self) -> HenselInvariants {
        let pr = self.predicates();
        let flags = self.structural_flags();
        HenselInvariants {
            trivial: pr.is_trivial,
            equal_char_zero: pr.char_pair == CharPair::EqualZero,
            equal_char_p: matches!(pr.char_pair, CharPair::EqualP(_)),
            mixed: pr.char_pair.is_mixed(),
            sep_defectless: flags.sep_defectless,
            defectless: flags.defectless,
            kaplansky: pr.is_kaplansky,
            finitely_ramified: pr.is_finitely_ramified.unwrap_or(false),
        }
    }

    pub fn standard_decomposition(&self) -> Result<Decomposition> {
        let pair = self.char_pair();
        let CharPair::Mixed(p) = pair else {
            return Err(ValFieldError::NotMixed(pair));
        };
        let vk = self.value_group();
        let vp = self.vp().expect("mixed characteristic has v(p)");
        let (delta_p, delta_0) = vk.gamma_cuts(&vp)?;
        let n = self.rank();
        Ok(Decomposition {
            p,
            quotient_discrete: vk.is_quotient_discrete(delta_0, delta_p)?,
            upper: self.segment(0, delta_0.index)?,
            upper_p: self.segment(0, delta_p.index)?,
            k_v0: self.segment(delta_0.index, n)?,
            kv0_vbar_p: self.segment(delta_0.index, delta_p.index)?,
            kvp_vbar: self.segment(delta_p.index, n)?,
            value_group: vk,
            vp,
            delta_p,
            delta_0,
        })
    }

    /// The same tower with consecutive Hahn layers merged into one.
    pub fn merged_layers(&self) -> ValuedFieldDesc {
        let layers = if self.layers.is_empty() {
            vec![]
        } else {
            vec![OAGDesc::lex(&self.layers)]
        };
        let core = match &self.core {
            Core::Cohen(Lower::Valued(d)) => Core::Cohen(Lower::Valued(Box::new(d.merged_layers()))),
            other => other.clone(),
        };
        ValuedFieldDesc { layers, core }
    }

    pub fn report(&self) -> DescriptorReport {
        DescriptorReport {
            schema: 1,
            text: self.to_string(),
            char_pair: self.char_pair(),
            value_group: self.value_group(),
            v_p: self.vp(),
            residue_field: self.residue_field(),
            field: self.field(),
            flags: self.structural_flags(),
            predicates: self.predicates(),
        }
    }
}

/// Stable JSON view of a descriptor.
#[derive(Debug, Clone, Serialize)]
pub struct DescriptorReport {
    pub schema: u32,
    pub text: String,
    pub char_pair: CharPair,
    pub value_group: OAGDesc,
    pub v_p: Option<GroupElement>,
    pub residue_field: FieldDesc,
    pub field: FieldDesc,
    pub flags: CoreFlags,
    pub predicates: ValuedPredicates,
}

impl Serialize for ValuedFieldDesc {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        self.report().serialize(s)
    }
}

impl fmt::Display for Core {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Core::Trivial(k) => write!(f, "triv({k})"),
            Core::QpExt { p, e, f: deg } => write!(f, "Qp({p},{e},{deg})"),
            Core::Cohen(Lower::Plain(k)) => write!(f, "cohen({k})"),
            Core::Cohen(Lower::Valued(d)) => write!(f, "cohen({d})"),
            Core::TameKaplansky { residue, group, vp } => {
                write!(f, "tame({residue},{group},{vp})")
            }
            Core::Abstract(a) => {
                write!(f, "abstract{{res={},group={},vp=", a.residue, a.group)?;
                match &a.vp {
                    Some(g) => write!(f, "{g}")?,
                    None => f.write_str("none")?,
                }
                if let Some(k) = &a.field {
                    write!(f, ",field={k}")?;
                }
                let fl = &a.flags;
                write!(
                    f,
                    ",hens={},dl={},sdl={},am={},sam={}}}",
                    fl.henselian.symbol(),
                    fl.defectless.symbol(),
                    fl.sep_defectless.symbol(),
                    fl.alg_maximal.symbol(),
                    fl.sep_alg_maximal.symbol()
                )
            }
        }
    }
}

impl fmt::Display for ValuedFieldDesc {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut s = self.core.to_string();
        for l in self.layers.iter().rev() {
            s = format!("hahn({s},{l})");
        }
        f.write_str(&s)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn falg(p: u64) -> FieldDesc {
        FieldDesc::falg(p)
    }

    fn scf(p: u64, e: u32) -> FieldDesc {
        FieldDesc::SepClosed {
            p,
            e: ImpDegree::Finite(e),
        }
    }

    fn scvf(p: u64, e: u32) -> ValuedFieldDesc {
        ValuedFieldDesc::abstract_core(AbstractCore {
            residue: falg(p),
            group: OAGDesc::rationals(),
            vp: None,
            field: Some(scf(p, e)),
            flags: CoreFlags::unknown(),
        })
        .unwrap()
    }

    #[test]
    fn build_examples() {
        let c_q = ValuedFieldDesc::trivial(FieldDesc::acf0())
            .unwrap()
            .hahn(OAGDesc::rationals());
        assert_eq!(c_q.char_pair(), CharPair::EqualZero);
        assert_eq!(c_q.value_group(), OAGDesc::rationals());
        assert_eq!(c_q.to_string(), "hahn(triv(ACF0),Q)");

        let q5 = ValuedFieldDesc::qp(5, 1, 1).unwrap();
        assert_eq!(q5.value_group(), OAGDesc::integers());
        assert_eq!(q5.vp(), Some(GroupElement::from_ints(&[1])));

        let err = ValuedFieldDesc::tame(
            FieldDesc::finite(5).unwrap(),
            OAGDesc::rationals(),
            GroupElement::from_ints(&[1]),
        )
        .unwrap_err();
        assert!(matches!(err, ValFieldError::NotKaplansky { clause: 3, .. }));

        let err = ValuedFieldDesc::tame(falg(5), OAGDesc::integers(), GroupElement::from_ints(&[1]))
            .unwrap_err();
        assert!(matches!(err, ValFieldError::NotKaplansky { clause: 1, .. }));
    }

    #[test]
    fn flags_examples() {
        let c_q = ValuedFieldDesc::trivial(FieldDesc::acf0())
            .unwrap()
            .hahn(OAGDesc::rationals());
        let fl = c_q.structural_flags();
        assert_eq!(fl.henselian, Tri::True);
        assert_eq!(fl.defectless, Tri::True);

        let f5z = ValuedFieldDesc::trivial(FieldDesc::finite(5).unwrap())
            .unwrap()
            .hahn(OAGDesc::integers());
        assert_eq!(f5z.structural_flags().defectless, Tri::True);

        let k = ValuedFieldDesc::cohen(Lower::Valued(Box::new(scvf(3, 1)))).unwrap();
        assert!(k.has_cohen_over_imperfect_scvf());
        let fl = k.structural_flags();
        assert_eq!(fl.henselian, Tri::True);
        assert_eq!(fl.sep_defectless, Tri::False);
        // Both pieces are henselian and separably defectless.
        let (up, low) = k.coarsen_at(1).unwrap();
        assert_eq!(up.structural_flags().sep_defectless, Tri::True);
        assert_eq!(low.structural_flags().sep_defectless, Tri::True);
        assert_eq!(low.structural_flags().henselian, Tri::True);
    }

    #[test]
    fn decomposition_examples() {
        let k = ValuedFieldDesc::qp(5, 1, 1).unwrap().hahn(OAGDesc::rationals());
        let d = k.standard_decomposition().unwrap();
        assert_eq!(d.value_group.to_string(), "lex(Q,Z)");
        assert_eq!(d.vp, GroupElement::from_ints(&[0, 1]));
        assert_eq!(d.delta_p.index, 2);
        assert_eq!(d.delta_0.index, 1);
        assert!(d.quotient_discrete);
        assert_eq!(d.k_v0, ValuedFieldDesc::qp(5, 1, 1).unwrap());
        assert_eq!(d.kvp_vbar.residue_field(), FieldDesc::finite(5).unwrap());
        assert!(d.kvp_vbar.is_trivial());
        assert_eq!(d.recompose().unwrap(), k);

        let t = ValuedFieldDesc::tame(falg(5), OAGDesc::rationals(), GroupElement::from_ints(&[1]))
            .unwrap();
        let d = t.standard_decomposition().unwrap();
        assert_eq!((d.delta_p.index, d.delta_0.index), (1, 0));
        assert!(!d.quotient_discrete);

        let lower = ValuedFieldDesc::trivial(scf(3, 1))
            .unwrap()
            .hahn(OAGDesc::rationals());
        let c = ValuedFieldDesc::cohen(Lower::Valued(Box::new(lower.clone()))).unwrap();
        let d = c.standard_decomposition().unwrap();
        assert_eq!(d.value_group.to_string(), "lex(Z,Q)");
        assert_eq!(d.vp, GroupElement::from_ints(&[1, 0]));
        assert_eq!((d.delta_p.index, d.delta_0.index), (1, 0));
        assert!(d.quotient_discrete);
        assert_eq!(d.kvp_vbar, lower);
        assert_eq!(d.recompose().unwrap(), c);

        assert!(matches!(
            ValuedFieldDesc::trivial(falg(5)).unwrap().standard_decomposition(),
            Err(ValFieldError::NotMixed(_))
        ));
    }

    #[test]
    fn coarsening_examples() {
        let k = ValuedFieldDesc::trivial(FieldDesc::acf0())
            .unwrap()
            .hahn(OAGDesc::lex([&OAGDesc::integers(), &OAGDesc::rationals()]));
        let (coarse, res) = k.coarsen_at(1).unwrap();
        assert_eq!(coarse.value_group(), OAGDesc::integers());
        assert_eq!(res.value_group(), OAGDesc::rationals());
        assert_eq!(res.residue_field(), FieldDesc::acf0());
        assert_eq!(
            ValuedFieldDesc::compose(&coarse, &res).unwrap().merged_layers(),
            k.merged_layers()
        );

        let k = ValuedFieldDesc::qp(5, 1, 1).unwrap().hahn(OAGDesc::rationals());
        let (coarse, res) = k.coarsen_at(1).unwrap();
        assert_eq!(coarse.char_pair(), CharPair::EqualZero);
        assert_eq!(res, ValuedFieldDesc::qp(5, 1, 1).unwrap());

        let q5 = ValuedFieldDesc::qp(5, 1, 1).unwrap();
        assert!(q5.coarsen_at(2).is_err());
        let t = ValuedFieldDesc::tame(
            falg(5),
            OAGDesc::lex([&OAGDesc::rationals(), &OAGDesc::rationals()]),
            GroupElement::from_ints(&[0, 1]),
        )
        .unwrap();
        assert!(matches!(t.coarsen_at(1), Err(ValFieldError::IllegalCut { .. })));
    }

    #[test]
    fn henselize_examples() {
        let q5 = ValuedFieldDesc::qp(5, 1, 1).unwrap();
        assert_eq!(q5.henselize(), q5);

        let ac = AbstractCore {
            residue: falg(5),
            group: OAGDesc::rationals(),
            vp: None,
            field: None,
            flags: CoreFlags {
                defectless: Tri::True,
                ..CoreFlags::unknown()
            },
        };
        let k = ValuedFieldDesc::abstract_core(ac).unwrap();
        let h = k.henselize();
        let fl = h.structural_flags();
        assert_eq!(fl.henselian, Tri::True);
        assert_eq!(fl.defectless, Tri::True);
        assert_eq!(h.hensel_invariants(), k.hensel_invariants());
        assert_eq!(h.henselize(), h);

        let ac = AbstractCore {
            residue: falg(5),
            group: OAGDesc::rationals(),
            vp: None,
            field: None,
            flags: CoreFlags {
                henselian: Tri::False,
                sep_defectless: Tri::True,
                ..CoreFlags::unknown()
            },
        };
        let k = ValuedFieldDesc::abstract_core(ac).unwrap();
        assert_eq!(k.structural_flags().sep_alg_maximal, Tri::False);
        let h = k.henselize();
        assert_eq!(h.structural_flags().sep_defectless, Tri::True);
        assert_eq!(h.structural_flags().sep_alg_maximal, Tri::True);
        assert_eq!(h.predicates().is_kaplansky, Tri::True);
    }

    #[test]
    fn predicate_examples() {
        let q = ValuedFieldDesc::trivial(falg(5)).unwrap().hahn(OAGDesc::rationals());
        assert_eq!(q.predicates().is_kaplansky, Tri::True);
        let z = ValuedFieldDesc::trivial(falg(5)).unwrap().hahn(OAGDesc::integers());
        assert_eq!(z.predicates().is_kaplansky, Tri::False);
        let q5 = ValuedFieldDesc::qp(5, 1, 1).unwrap().predicates();
        assert_eq!(q5.is_finitely_ramified, Some(true));
        assert_eq!(q5.is_unramified, Some(true));
        let e2 = ValuedFieldDesc::qp(5, 2, 1).unwrap().predicates();
        assert_eq!(e2.is_unramified, Some(false));
    }

    #[test]
    fn imperfection_of_hahn_fields() {
        let k = ValuedFieldDesc::trivial(scf(3, 1))
            .unwrap()
            .hahn(OAGDesc::integers())
            .hahn(OAGDesc::rationals());
        assert_eq!(k.field().imperfection_degree(), Some(ImpDegree::Finite(2)));
        assert_eq!(k.residue_at(1).unwrap().imperfection_degree(), Some(ImpDegree::Finite(2)));
        assert_eq!(k.residue_at(2).unwrap(), scf(3, 1));
    }

    #[test]
    fn abstract_flag_rules() {
        let bad = AbstractCore {
            residue: falg(5),
            group: OAGDesc::rationals(),
            vp: None,
            field: Some(scf(5, 1)),
            flags: CoreFlags {
                defectless: Tri::True,
                ..CoreFlags::unknown()
            },
        };
        assert!(matches!(
            ValuedFieldDesc::abstract_core(bad),
            Err(ValFieldError::Flags(_))
        ));
        let ac = AbstractCore {
            residue: falg(5),
            group: OAGDesc::rationals(),
            vp: Some(GroupElement::from_ints(&[1])),
            field: None,
            flags: CoreFlags {
                sep_defectless: Tri::True,
                ..CoreFlags::unknown()
            },
        };
        let k = ValuedFieldDesc::abstract_core(ac).unwrap();
        assert_eq!(k.structural_flags().defectless, Tri::True);
    }
}
