//! Residue and coefficient field descriptors.
//!
//! A descriptor records only what the classification consumes: the
//! characteristic, perfection and imperfection degree, whether the field has
//! separable extensions of degree divisible by its characteristic, and the
//! NIP status of the pure field. NIP is an input flag; it is never computed.

use crate::oag::is_prime;
use crate::tri::Tri;
use serde::{Serialize, Serializer};
use std::fmt;
use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum FieldError {
    #[error("characteristic {0} is neither 0 nor a prime")]
    BadCharacteristic(u64),
    #[error("{0} is not a prime power")]
    NotPrimePower(u64),
    #[error("characteristic 0 fields are perfect (imperfection degree must be 0)")]
    CharZeroImperfect,
    #[error("a perfect field has imperfection degree 0")]
    PerfectWithPositiveDegree,
    #[error("an imperfect field has positive imperfection degree")]
    ImperfectWithZeroDegree,
    #[error("infinite NIP fields of positive characteristic have no separable extensions of degree divisible by the characteristic")]
    NipWithPExtensions,
}

/// `[K : K^p] = p^e`; `e` may be infinite.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum ImpDegree {
    Finite(u32),
    Infinite,
}

impl ImpDegree {
    pub fn is_zero(self) -> bool {
        self == ImpDegree::Finite(0)
    }

    pub fn plus(self, k: u32) -> ImpDegree {
        match self {
            ImpDegree::Finite(e) => ImpDegree::Finite(e + k),
            ImpDegree::Infinite => ImpDegree::Infinite,
        }
    }
}

impl fmt::Display for ImpDegree {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            ImpDegree::Finite(e) => write!(f, "{e}"),
            ImpDegree::Infinite => f.write_str("inf"),
        }
    }
}

impl Serialize for ImpDegree {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        s.serialize_str(&self.to_string())
    }
}

/// Flags of an abstract field. Abstract descriptors always denote infinite
/// fields; finite fields have their own variant.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct AbstractField {
    pub char: u64,
    pub perfect: Tri,
    pub imperfection: Option<ImpDegree>,
    pub no_sep_ext_div_p: Tri,
    pub nip: Tri,
}

impl AbstractField {
    /// A characteristic-zero field about which nothing else is known.
    pub fn char_zero() -> Self {
        AbstractField {
            char: 0,
            perfect: Tri::True,
            imperfection: Some(ImpDegree::Finite(0)),
            no_sep_ext_div_p: Tri::Unknown,
            nip: Tri::Unknown,
        }
    }

    pub fn unknown(char: u64) -> Self {
        AbstractField {
            char,
            perfect: Tri::Unknown,
            imperfection: None,
            no_sep_ext_div_p: Tri::Unknown,
            nip: Tri::Unknown,
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub enum FieldDesc {
    /// `F_{p^n}`.
    Finite { p: u64, n: u32 },
    AlgClosed { char: u64 },
    RealClosed,
    /// Separably closed of characteristic `p` and imperfection degree `e`.
    SepClosed { p: u64, e: ImpDegree },
    Abstract(AbstractField),
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct FieldPredicates {
    pub char: u64,
    pub is_perfect: Tri,
    pub imperfection_degree: Option<ImpDegree>,
    pub no_sep_ext_div_p: Tri,
    pub is_nip: Tri,
    pub is_finite: Tri,
    pub is_infinite: Tri,
}

impl FieldDesc {
    pub fn finite(q: u64) -> Result<FieldDesc, FieldError> {
        let (p, n) = prime_power(q).ok_or(FieldError::NotPrimePower(q))?;
        Ok(FieldDesc::Finite { p, n })
    }

    pub fn acf0() -> FieldDesc {
        FieldDesc::AlgClosed { char: 0 }
    }

    pub fn falg(p: u64) -> FieldDesc {
        FieldDesc::AlgClosed { char: p }
    }

    pub fn char(&self) -> u64 {
        match self {
            FieldDesc::Finite { p, .. } => *p,
            FieldDesc::AlgClosed { char } => *char,
            FieldDesc::RealClosed => 0,
            FieldDesc::SepClosed { p, .. } => *p,
            FieldDesc::Abstract(a) => a.char,
        }
    }

    pub fn predicates(&self) -> FieldPredicates {
        let char = self.char();
        match self {
            FieldDesc::Finite { .. } => FieldPredicates {
                char,
                is_perfect: Tri::True,
                imperfection_degree: Some(ImpDegree::Finite(0)),
                // Every finite field has a cyclic extension of degree p.
                no_sep_ext_div_p: Tri::False,
                is_nip: Tri::True,
                is_finite: Tri::True,
                is_infinite: Tri::False,
            },
            FieldDesc::AlgClosed { .. } => FieldPredicates {
                char,
                is_perfect: Tri::True,
                imperfection_degree: Some(ImpDegree::Finite(0)),
                no_sep_ext_div_p: Tri::True,
                is_nip: Tri::True,
                is_finite: Tri::False,
                is_infinite: Tri::True,
            },
            FieldDesc::RealClosed => FieldPredicates {
                char,
                is_perfect: Tri::True,
                imperfection_degree: Some(ImpDegree::Finite(0)),
                no_sep_ext_div_p: Tri::Unknown,
                is_nip: Tri::True,
                is_finite: Tri::False,
                is_infinite: Tri::True,
            },
            FieldDesc::SepClosed { e, .. } => FieldPredicates {
                char,
                is_perfect: e.is_zero().into(),
                imperfection_degree: Some(*e),
                no_sep_ext_div_p: Tri::True,
                is_nip: Tri::True,
                is_finite: Tri::False,
                is_infinite: Tri::True,
            },
            FieldDesc::Abstract(a) => FieldPredicates {
                char,
                is_perfect: a.perfect,
                imperfection_degree: a.imperfection,
                no_sep_ext_div_p: a.no_sep_ext_div_p,
                is_nip: a.nip,
                is_finite: Tri::False,
                is_infinite: Tri::True,
            },
        }
    }

    pub fn is_perfect(&self) -> Tri {
        self.predicates().is_perfect
    }

    pub fn is_nip(&self) -> Tri {
        self.predicates().is_nip
    }

    pub fn is_finite(&self) -> Tri {
        self.predicates().is_finite
    }

    pub fn no_sep_ext_div_p(&self) -> Tri {
        self.predicates().no_sep_ext_div_p
    }

    pub fn imperfection_degree(&self) -> Option<ImpDegree> {
        self.predicates().imperfection_degree
    }

    /// Normalise a descriptor, rejecting inconsistent flag combinations.
    pub fn validate(&self) -> Result<FieldDesc, FieldError> {
        match self {
            FieldDesc::Finite { p, n } => {
                if !is_prime(*p) || *n == 0 {
                    return Err(FieldError::NotPrimePower(p.saturating_pow(*n)));
                }
                Ok(self.clone())
            }
            FieldDesc::AlgClosed { char } | FieldDesc::SepClosed { p: char, .. } => {
                if *char != 0 && !is_prime(*char) {
                    return Err(FieldError::BadCharacteristic(*char));
                }
                match self {
                    FieldDesc::SepClosed { p: 0, .. } => Err(FieldError::BadCharacteristic(0)),
                    FieldDesc::SepClosed { p, e } if e.is_zero() => {
                        Ok(FieldDesc::AlgClosed { char: *p })
                    }
                    _ => Ok(self.clone()),
                }
            }
            FieldDesc::RealClosed => Ok(self.clone()),
            FieldDesc::Abstract(a) => validate_abstract(a).map(FieldDesc::Abstract),
        }
    }
}

fn validate_abstract(a: &AbstractField) -> Result<AbstractField, FieldError> {
    let mut a = a.clone();
    if a.char != 0 && !is_prime(a.char) {
        return Err(FieldError::BadCharacteristic(a.char));
    }
    if a.char == 0 {
        if a.perfect == Tri::False || a.imperfection.is_some_and(|e| !e.is_zero()) {
            return Err(FieldError::CharZeroImperfect);
        }
        a.perfect = Tri::True;
        a.imperfection = Some(ImpDegree::Finite(0));
        return Ok(a);
    }
    match (a.perfect, a.imperfection) {
        (Tri::True, Some(e)) if !e.is_zero() => return Err(FieldError::PerfectWithPositiveDegree),
        (Tri::False, Some(e)) if e.is_zero() => return Err(FieldError::ImperfectWithZeroDegree),
        (Tri::True, None) => a.imperfection = Some(ImpDegree::Finite(0)),
        (Tri::Unknown, Some(e)) => a.perfect = e.is_zero().into(),
        _ => {}
    }
    // Infinite NIP fields of characteristic p have no Galois extensions of
    // degree divisible by p, equivalently no such separable extensions.
    if a.nip == Tri::True {
        if a.no_sep_ext_div_p == Tri::False {
            return Err(FieldError::NipWithPExtensions);
        }
        a.no_sep_ext_div_p = Tri::True;
    }
    Ok(a)
}

/// `q = p^n` with `p` prime.
pub fn prime_power(q: u64) -> Option<(u64, u32)> {
    if q < 2 {
        return None;
    }
    let p = (2..=q).find(|d| q.is_multiple_of(*d))?;
    let mut m = q;
    let mut n = 0;
    while m.is_multiple_of(p) {
        m /= p;
        n += 1;
    }
    (m == 1).then_some((p, n))
}

impl fmt::Display for FieldDesc {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            FieldDesc::Finite { p, n } => write!(f, "F({})", p.pow(*n)),
            FieldDesc::AlgClosed { char: 0 } => f.write_str("ACF0"),
            FieldDesc::AlgClosed { char } => write!(f, "Falg({char})"),
            FieldDesc::RealClosed => f.write_str("RCF"),
            FieldDesc::SepClosed { p, e } => write!(f, "SCF({p},{e})"),
            FieldDesc::Abstract(a) => {
                let imp = a
                    .imperfection
                    .map(|e| e.to_string())
                    .unwrap_or_else(|| "?".into());
                write!(
                    f,
                    "field{{char={},perfect={},imp={},noPext={},nip={}}}",
                    a.char,
                    a.perfect.symbol(),
                    imp,
                    a.no_sep_ext_div_p.symbol(),
                    a.nip.symbol()
                )
            }
        }
    }
}

impl Serialize for FieldDesc {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        s.serialize_str(&self.to_string())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn abs(char: u64, perfect: Tri, imp: Option<ImpDegree>, nip: Tri) -> FieldDesc {
        FieldDesc::Abstract(AbstractField {
            char,
            perfect,
            imperfection: imp,
            no_sep_ext_div_p: Tri::Unknown,
            nip,
        })
    }

    #[test]
    fn predicate_table() {
        let f = FieldDesc::falg(5).predicates();
        assert_eq!(f.char, 5);
        assert_eq!(f.is_perfect, Tri::True);
        assert_eq!(f.no_sep_ext_div_p, Tri::True);
        assert_eq!(f.is_nip, Tri::True);

        let f = FieldDesc::finite(9).unwrap().predicates();
        assert_eq!(f.char, 3);
        assert_eq!(f.is_perfect, Tri::True);
        assert_eq!(f.is_nip, Tri::True);
        assert_eq!(f.no_sep_ext_div_p, Tri::False);
        assert_eq!(f.is_finite, Tri::True);

        let f = FieldDesc::SepClosed {
            p: 2,
            e: ImpDegree::Finite(1),
        }
        .predicates();
        assert_eq!(f.is_perfect, Tri::False);
        assert_eq!(f.no_sep_ext_div_p, Tri::True);
        assert_eq!(f.is_nip, Tri::True);
        assert_eq!(f.imperfection_degree, Some(ImpDegree::Finite(1)));
    }

    #[test]
    fn validation_rules() {
        assert_eq!(
            abs(0, Tri::Unknown, Some(ImpDegree::Finite(3)), Tri::Unknown)
                .validate()
                .unwrap_err(),
            FieldError::CharZeroImperfect
        );
        assert!(abs(5, Tri::True, Some(ImpDegree::Finite(0)), Tri::Unknown)
            .validate()
            .is_ok());
        assert_eq!(
            abs(5, Tri::False, Some(ImpDegree::Finite(0)), Tri::Unknown)
                .validate()
                .unwrap_err(),
            FieldError::ImperfectWithZeroDegree
        );
        assert_eq!(
            abs(5, Tri::True, Some(ImpDegree::Finite(2)), Tri::Unknown)
                .validate()
                .unwrap_err(),
            FieldError::PerfectWithPositiveDegree
        );
        assert_eq!(
            abs(6, Tri::Unknown, None, Tri::Unknown).validate().unwrap_err(),
            FieldError::BadCharacteristic(6)
        );
        assert_eq!(
            FieldDesc::finite(12).unwrap_err(),
            FieldError::NotPrimePower(12)
        );
    }

    #[test]
    fn nip_forces_artin_schreier_closure() {
        let f = abs(3, Tri::True, None, Tri::True).validate().unwrap();
        assert_eq!(f.no_sep_ext_div_p(), Tri::True);
        let bad = FieldDesc::Abstract(AbstractField {
            char: 3,
            perfect: Tri::True,
            imperfection: None,
            no_sep_ext_div_p: Tri::False,
            nip: Tri::True,
        });
        assert_eq!(bad.validate().unwrap_err(), FieldError::NipWithPExtensions);
    }

    #[test]
    fn validate_is_idempotent_on_samples() {
        let samples = [
            abs(0, Tri::Unknown, None, Tri::True),
            abs(7, Tri::Unknown, Some(ImpDegree::Infinite), Tri::Unknown),
            abs(7, Tri::True, None, Tri::True),
            FieldDesc::SepClosed {
                p: 3,
                e: ImpDegree::Finite(0),
            },
            FieldDesc::finite(25).unwrap(),
        ];
        for s in samples {
            let once = s.validate().unwrap();
            assert_eq!(once.validate().unwrap(), once);
            let pr = once.predicates();
            if pr.is_perfect == Tri::True {
                assert_eq!(pr.imperfection_degree, Some(ImpDegree::Finite(0)));
            }
        }
    }

    #[test]
    fn dsl_spelling() {
        assert_eq!(FieldDesc::finite(25).unwrap().to_string(), "F(25)");
        assert_eq!(FieldDesc::acf0().to_string(), "ACF0");
        assert_eq!(
            abs(3, Tri::False, Some(ImpDegree::Infinite), Tri::Unknown).to_string(),
            "field{char=3,perfect=F,imp=inf,noPext=?,nip=?}"
        );
    }
}
