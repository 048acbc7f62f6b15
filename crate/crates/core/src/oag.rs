//! Ordered abelian groups presented as finite lexicographic products of
//! archimedean summands.
//!
//! A group `lex(A_1, ..., A_n)` has `A_1` most significant. Every summand is
//! either the integers (`Discrete`) or a subgroup of the rationals containing
//! 1 and closed under division by a set of primes (`Dense`). Convex subgroups
//! are exactly the suffixes of the summand list, so they are addressed by a
//! [`ConvexCut`] index in `0..=n`.

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};
use serde::{Serialize, Serializer};
use std::cmp::Ordering;
use std::collections::{BTreeMap, BTreeSet};
use std::fmt;
use thiserror::Error;

pub type Rat = BigRational;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum OagError {
    #[error("arity mismatch: group has {expected} summands, element has {found} coordinates")]
    ArityMismatch { expected: usize, found: usize },
    #[error("coordinate {index} = {value} is not a member of summand {summand}")]
    NonMember {
        index: usize,
        value: String,
        summand: String,
    },
    #[error("dense summand needs at least one divisible prime")]
    EmptyDense,
    #[error("{0} is not a prime")]
    NotPrime(u64),
    #[error("the zero element is not allowed here")]
    ZeroElement,
    #[error("element must be positive")]
    NonPositive,
    #[error("element must be non-negative")]
    Negative,
    #[error("operation needs a non-trivial group")]
    TrivialGroup,
    #[error("cut {index} out of range for a group of rank {rank}")]
    CutOutOfRange { index: usize, rank: usize },
    #[error("inner cut {inner} must lie strictly below outer cut {outer}")]
    CutOrder { outer: usize, inner: usize },
    #[error("number {0} is too large for prime factorisation")]
    TooLarge(String),
}

pub type Result<T> = std::result::Result<T, OagError>;

pub fn is_prime(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    let mut d = 2u64;
    while d.saturating_mul(d) <= n {
        if n.is_multiple_of(d) {
            return false;
        }
        d += 1;
    }
    true
}

/// Distinct prime factors of `|n|` by trial division.
pub fn prime_factors(n: &BigInt) -> Result<Vec<u64>> {
    let mut m = n
        .abs()
        .to_u64()
        .ok_or_else(|| OagError::TooLarge(n.to_string()))?;
    let mut out = Vec::new();
    let mut d = 2u64;
    while m > 1 && d.saturating_mul(d) <= m {
        if m % d == 0 {
            out.push(d);
            while m % d == 0 {
                m /= d;
            }
        }
        d += 1;
    }
    if m > 1 {
        out.push(m);
    }
    Ok(out)
}

/// q-adic valuation of a nonzero integer.
fn int_val(n: &BigInt, q: u64) -> i64 {
    let q = BigInt::from(q);
    let mut n = n.clone();
    let mut v = 0;
    while !n.is_zero() && n.is_multiple_of(&q) {
        n /= &q;
        v += 1;
    }
    v
}

/// q-adic valuation of a nonzero rational.
pub fn rat_val(r: &Rat, q: u64) -> i64 {
    int_val(r.numer(), q) - int_val(r.denom(), q)
}

#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub enum PrimeSet {
    All,
    Finite(BTreeSet<u64>),
}

impl PrimeSet {
    pub fn contains(&self, p: u64) -> bool {
        match self {
            PrimeSet::All => true,
            PrimeSet::Finite(s) => s.contains(&p),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub enum ArchSummand {
    Discrete,
    Dense(PrimeSet),
}

impl ArchSummand {
    pub fn integers() -> Self {
        ArchSummand::Discrete
    }

    pub fn rationals() -> Self {
        ArchSummand::Dense(PrimeSet::All)
    }

    /// The subgroup of the rationals generated by `1/p^m` for the given primes.
    pub fn localized<I: IntoIterator<Item = u64>>(primes: I) -> Result<Self> {
        let set: BTreeSet<u64> = primes.into_iter().collect();
        if set.is_empty() {
            return Err(OagError::EmptyDense);
        }
        if let Some(&q) = set.iter().find(|&&q| !is_prime(q)) {
            return Err(OagError::NotPrime(q));
        }
        Ok(ArchSummand::Dense(PrimeSet::Finite(set)))
    }

    pub fn is_discrete(&self) -> bool {
        matches!(self, ArchSummand::Discrete)
    }

    pub fn is_p_divisible(&self, p: u64) -> bool {
        match self {
            ArchSummand::Discrete => false,
            ArchSummand::Dense(s) => s.contains(p),
        }
    }

    pub fn contains(&self, r: &Rat) -> bool {
        match self {
            ArchSummand::Discrete => r.is_integer(),
            ArchSummand::Dense(PrimeSet::All) => true,
            ArchSummand::Dense(PrimeSet::Finite(s)) => {
                let mut d = r.denom().clone();
                for &q in s {
                    let q = BigInt::from(q);
                    while d.is_multiple_of(&q) {
                        d /= &q;
                    }
                }
                d.is_one()
            }
        }
    }
}

impl fmt::Display for ArchSummand {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            ArchSummand::Discrete => f.write_str("Z"),
            ArchSummand::Dense(PrimeSet::All) => f.write_str("Q"),
            ArchSummand::Dense(PrimeSet::Finite(s)) if s.len() == 1 => {
                write!(f, "Z[1/{}]", s.iter().next().unwrap())
            }
            ArchSummand::Dense(PrimeSet::Finite(s)) => {
                let ps: Vec<String> = s.iter().map(|p| p.to_string()).collect();
                write!(f, "dense{{{}}}", ps.join(","))
            }
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Hash, Default)]
pub struct OAGDesc {
    summands: Vec<ArchSummand>,
}

/// Index `i` denotes the convex subgroup formed by summands `i+1..=n`
/// (1-based), i.e. positions `i..n` of the summand list.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub struct ConvexCut {
    pub index: usize,
}

impl ConvexCut {
    pub fn new(index: usize) -> Self {
        ConvexCut { index }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct GroupElement {
    coords: Vec<Rat>,
}

impl GroupElement {
    /// Unchecked constructor; use [`OAGDesc::element`] to validate membership.
    pub fn from_coords(coords: Vec<Rat>) -> Self {
        GroupElement { coords }
    }

    pub fn from_ints(coords: &[i64]) -> Self {
        GroupElement {
            coords: coords.iter().map(|&c| Rat::from_integer(c.into())).collect(),
        }
    }

    pub fn zero(arity: usize) -> Self {
        GroupElement {
            coords: vec![Rat::zero(); arity],
        }
    }

    pub fn coords(&self) -> &[Rat] {
        &self.coords
    }

    pub fn arity(&self) -> usize {
        self.coords.len()
    }

    pub fn is_zero(&self) -> bool {
        self.coords.iter().all(Zero::is_zero)
    }

    /// Position of the most significant nonzero coordinate.
    pub fn leading_index(&self) -> Option<usize> {
        self.coords.iter().position(|c| !c.is_zero())
    }

    pub fn signum(&self) -> Ordering {
        match self.leading_index() {
            None => Ordering::Equal,
            Some(i) if self.coords[i].is_positive() => Ordering::Greater,
            Some(_) => Ordering::Less,
        }
    }

    pub fn is_positive(&self) -> bool {
        self.signum() == Ordering::Greater
    }

    pub fn checked_add(&self, other: &GroupElement) -> Result<GroupElement> {
        if self.arity() != other.arity() {
            return Err(OagError::ArityMismatch {
                expected: self.arity(),
                found: other.arity(),
            });
        }
        Ok(GroupElement {
            coords: self
                .coords
                .iter()
                .zip(&other.coords)
                .map(|(a, b)| a + b)
                .collect(),
        })
    }

    pub fn checked_cmp(&self, other: &GroupElement) -> Result<Ordering> {
        if self.arity() != other.arity() {
            return Err(OagError::ArityMismatch {
                expected: self.arity(),
                found: other.arity(),
            });
        }
        Ok(self.coords.cmp(&other.coords))
    }

    pub fn neg(&self) -> GroupElement {
        GroupElement {
            coords: self.coords.iter().map(|c| -c).collect(),
        }
    }

    pub fn scale(&self, k: &Rat) -> GroupElement {
        GroupElement {
            coords: self.coords.iter().map(|c| c * k).collect(),
        }
    }

    /// Coordinates restricted to positions `from..to`.
    pub fn slice(&self, from: usize, to: usize) -> GroupElement {
        GroupElement {
            coords: self.coords[from..to].to_vec(),
        }
    }

    pub fn concat(parts: &[&GroupElement]) -> GroupElement {
        GroupElement {
            coords: parts.iter().flat_map(|p| p.coords.iter().cloned()).collect(),
        }
    }
}

impl std::ops::Add for &GroupElement {
    type Output = GroupElement;
    fn add(self, rhs: &GroupElement) -> GroupElement {
        self.checked_add(rhs).expect("arity mismatch in group addition")
    }
}

impl std::ops::Sub for &GroupElement {
    type Output = GroupElement;
    fn sub(self, rhs: &GroupElement) -> GroupElement {
        self.checked_add(&rhs.neg()).expect("arity mismatch in group subtraction")
    }
}

impl fmt::Display for GroupElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.coords.len() == 1 {
            return write!(f, "{}", self.coords[0]);
        }
        let cs: Vec<String> = self.coords.iter().map(|c| c.to_string()).collect();
        write!(f, "({})", cs.join(","))
    }
}

impl Serialize for GroupElement {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        let cs: Vec<String> = self.coords.iter().map(|c| c.to_string()).collect();
        cs.serialize(s)
    }
}

/// Lower bound on the q-adic valuation; `NegInf` means unconstrained.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Floor {
    NegInf,
    At(i64),
}

impl fmt::Display for Floor {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Floor::NegInf => f.write_str("-inf"),
            Floor::At(v) => write!(f, "{v}"),
        }
    }
}

impl Serialize for Floor {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.serialize_str(&self.to_string())
    }
}

/// A rank-one group with a distinguished element, normalised so that the
/// element is 1: the set `{r in Q : v_q(r) >= floor(q) for all primes q}`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize)]
pub struct Rank1Desc {
    default_floor: Floor,
    prime_floors: BTreeMap<u64, Floor>,
}

impl Rank1Desc {
    pub fn new(default_floor: Floor, prime_floors: BTreeMap<u64, Floor>) -> Self {
        let mut d = Rank1Desc {
            default_floor,
            prime_floors,
        };
        d.prime_floors.retain(|_, f| *f != default_floor);
        d
    }

    /// The rationals.
    pub fn divisible() -> Self {
        Rank1Desc::new(Floor::NegInf, BTreeMap::new())
    }

    /// The integers.
    pub fn cyclic() -> Self {
        Rank1Desc::new(Floor::At(0), BTreeMap::new())
    }

    pub fn floor(&self, q: u64) -> Floor {
        self.prime_floors
            .get(&q)
            .copied()
            .unwrap_or(self.default_floor)
    }

    pub fn default_floor(&self) -> Floor {
        self.default_floor
    }

    pub fn prime_floors(&self) -> &BTreeMap<u64, Floor> {
        &self.prime_floors
    }

    pub fn is_q_divisible(&self, q: u64) -> bool {
        self.floor(q) == Floor::NegInf
    }

    pub fn contains(&self, r: &Rat) -> Result<bool> {
        if r.is_zero() {
            return Ok(true);
        }
        let mut primes: BTreeSet<u64> = self.prime_floors.keys().copied().collect();
        primes.extend(prime_factors(r.numer())?);
        primes.extend(prime_factors(r.denom())?);
        Ok(primes.into_iter().all(|q| match self.floor(q) {
            Floor::NegInf => true,
            Floor::At(f) => rat_val(r, q) >= f,
        }))
    }
}

impl fmt::Display for Rank1Desc {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "hull{{default={}", self.default_floor)?;
        for (q, fl) in &self.prime_floors {
            write!(f, ",{q}={fl}")?;
        }
        f.write_str("}")
    }
}

impl OAGDesc {
    pub fn new(summands: Vec<ArchSummand>) -> Self {
        OAGDesc { summands }
    }

    pub fn trivial() -> Self {
        OAGDesc::default()
    }

    pub fn integers() -> Self {
        OAGDesc::new(vec![ArchSummand::Discrete])
    }

    pub fn rationals() -> Self {
        OAGDesc::new(vec![ArchSummand::rationals()])
    }

    /// Lexicographic product, first factor most significant.
    pub fn lex<'a, I: IntoIterator<Item = &'a OAGDesc>>(parts: I) -> Self {
        OAGDesc {
            summands: parts
                .into_iter()
                .flat_map(|g| g.summands.iter().cloned())
                .collect(),
        }
    }

    pub fn summands(&self) -> &[ArchSummand] {
        &self.summands
    }

    pub fn rank(&self) -> usize {
        self.summands.len()
    }

    pub fn is_trivial(&self) -> bool {
        self.summands.is_empty()
    }

    pub fn zero(&self) -> GroupElement {
        GroupElement::zero(self.rank())
    }

    pub fn contains(&self, x: &GroupElement) -> bool {
        x.arity() == self.rank()
            && self
                .summands
                .iter()
                .zip(x.coords())
                .all(|(a, c)| a.contains(c))
    }

    /// Validated element construction.
    pub fn element(&self, coords: Vec<Rat>) -> Result<GroupElement> {
        let x = GroupElement::from_coords(coords);
        self.check(&x)?;
        Ok(x)
    }

    pub fn check(&self, x: &GroupElement) -> Result<()> {
        if x.arity() != self.rank() {
            return Err(OagError::ArityMismatch {
                expected: self.rank(),
                found: x.arity(),
            });
        }
        for (i, (a, c)) in self.summands.iter().zip(x.coords()).enumerate() {
            if !a.contains(c) {
                return Err(OagError::NonMember {
                    index: i,
                    value: c.to_string(),
                    summand: a.to_string(),
                });
            }
        }
        Ok(())
    }

    pub fn add(&self, x: &GroupElement, y: &GroupElement) -> Result<GroupElement> {
        self.check(x)?;
        self.check(y)?;
        x.checked_add(y)
    }

    pub fn compare(&self, x: &GroupElement, y: &GroupElement) -> Result<Ordering> {
        self.check(x)?;
        self.check(y)?;
        x.checked_cmp(y)
    }

    pub fn cut(&self, index: usize) -> Result<ConvexCut> {
        if index > self.rank() {
            return Err(OagError::CutOutOfRange {
                index,
                rank: self.rank(),
            });
        }
        Ok(ConvexCut { index })
    }

    /// Whole group as a cut.
    pub fn top_cut(&self) -> ConvexCut {
        ConvexCut { index: 0 }
    }

    /// Trivial subgroup as a cut.
    pub fn bottom_cut(&self) -> ConvexCut {
        ConvexCut {
            index: self.rank(),
        }
    }

    pub fn is_p_divisible(&self, p: u64) -> bool {
        self.summands.iter().all(|a| a.is_p_divisible(p))
    }

    pub fn is_divisible(&self) -> bool {
        self.summands
            .iter()
            .all(|a| matches!(a, ArchSummand::Dense(PrimeSet::All)))
    }

    pub fn has_min_positive(&self) -> Result<bool> {
        self.summands
            .last()
            .map(ArchSummand::is_discrete)
            .ok_or(OagError::TrivialGroup)
    }

    /// The minimum positive element, when it exists.
    pub fn min_positive(&self) -> Option<GroupElement> {
        if self.has_min_positive().ok()? {
            let mut e = self.zero();
            *e.coords.last_mut().unwrap() = Rat::one();
            Some(e)
        } else {
            None
        }
    }

    /// `(Γ_{γ−}, Γ_{γ+})`: the greatest convex subgroup omitting `γ` and the
    /// least one containing it.
    pub fn gamma_cuts(&self, gamma: &GroupElement) -> Result<(ConvexCut, ConvexCut)> {
        self.check(gamma)?;
        let lead = gamma.leading_index().ok_or(OagError::ZeroElement)?;
        Ok((ConvexCut { index: lead + 1 }, ConvexCut { index: lead }))
    }

    /// Whether `outer/inner` has a minimum positive element.
    pub fn is_quotient_discrete(&self, outer: ConvexCut, inner: ConvexCut) -> Result<bool> {
        self.cut(outer.index)?;
        self.cut(inner.index)?;
        if inner.index <= outer.index {
            return Err(OagError::CutOrder {
                outer: outer.index,
                inner: inner.index,
            });
        }
        Ok(self.summands[inner.index - 1].is_discrete())
    }

    /// The maximal p-divisible convex subgroup `Γ_(p)`.
    pub fn max_p_divisible_convex(&self, p: u64) -> ConvexCut {
        let k = self
            .summands
            .iter()
            .rev()
            .take_while(|a| a.is_p_divisible(p))
            .count();
        ConvexCut {
            index: self.rank() - k,
        }
    }

    /// Whether `[-γ, γ] ⊆ pΓ`. In a lexicographic product of archimedean
    /// summands this holds iff every summand of `Γ_{γ+}` is p-divisible.
    pub fn rough_p_divisible(&self, gamma: &GroupElement, p: u64) -> Result<bool> {
        self.check(gamma)?;
        if !gamma.is_positive() {
            return Err(OagError::NonPositive);
        }
        let (_, plus) = self.gamma_cuts(gamma)?;
        Ok(self.summands[plus.index..]
            .iter()
            .all(|a| a.is_p_divisible(p)))
    }

    /// Whether the interval `[0, γ]` is finite.
    pub fn interval_finite(&self, gamma: &GroupElement) -> Result<bool> {
        self.check(gamma)?;
        match gamma.signum() {
            Ordering::Less => Err(OagError::Negative),
            Ordering::Equal => Ok(true),
            Ordering::Greater => {
                let lead = gamma.leading_index().unwrap();
                Ok(lead + 1 == self.rank() && self.summands[lead].is_discrete())
            }
        }
    }

    /// Whether the image of `γ` is the minimum positive element of `Γ/Γ_{γ−}`.
    pub fn min_positive_image(&self, gamma: &GroupElement) -> Result<bool> {
        self.check(gamma)?;
        if !gamma.is_positive() {
            return Err(OagError::NonPositive);
        }
        let lead = gamma.leading_index().unwrap();
        Ok(self.summands[lead].is_discrete() && gamma.coords[lead].is_one())
    }

    /// `{r in Q : rγ ∈ Γ}`, i.e. the relative divisible hull of `⟨γ⟩`
    /// identified with a subgroup of the rationals via `r ↦ rγ`.
    pub fn rel_div_hull(&self, gamma: &GroupElement) -> Result<Rank1Desc> {
        self.check(gamma)?;
        if gamma.is_zero() {
            return Err(OagError::ZeroElement);
        }
        let support: Vec<(&ArchSummand, &Rat)> = self
            .summands
            .iter()
            .zip(gamma.coords())
            .filter(|(_, c)| !c.is_zero())
            .collect();

        // A prime outside every listed set is constrained at every summand
        // that is not the full rationals, with floor 0 from integral coordinates.
        let generic_constrained = support
            .iter()
            .any(|(a, _)| !matches!(a, ArchSummand::Dense(PrimeSet::All)));
        let default_floor = if generic_constrained {
            Floor::At(0)
        } else {
            Floor::NegInf
        };

        let mut relevant = BTreeSet::new();
        for (a, c) in &support {
            relevant.extend(prime_factors(c.numer())?);
            relevant.extend(prime_factors(c.denom())?);
            if let ArchSummand::Dense(PrimeSet::Finite(s)) = a {
                relevant.extend(s.iter().copied());
            }
        }
        let mut floors = BTreeMap::new();
        for q in relevant {
            let fl = support
                .iter()
                .filter(|(a, _)| !a.is_p_divisible(q))
                .map(|(_, c)| Floor::At(-rat_val(c, q)))
                .max()
                .unwrap_or(Floor::NegInf);
            floors.insert(q, fl);
        }
        Ok(Rank1Desc::new(default_floor, floors))
    }

    /// `(Γ/Δ, Δ)` for the convex subgroup `Δ` at `cut`.
    pub fn quotient_and_subgroup(&self, cut: ConvexCut) -> Result<(OAGDesc, OAGDesc)> {
        self.cut(cut.index)?;
        Ok((
            OAGDesc::new(self.summands[..cut.index].to_vec()),
            OAGDesc::new(self.summands[cut.index..].to_vec()),
        ))
    }

    /// Summands at positions `from..to` as a group.
    pub fn slice(&self, from: usize, to: usize) -> OAGDesc {
        OAGDesc::new(self.summands[from..to].to_vec())
    }
}

impl fmt::Display for OAGDesc {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.summands.len() == 1 {
            return write!(f, "{}", self.summands[0]);
        }
        let parts: Vec<String> = self.summands.iter().map(|a| a.to_string()).collect();
        write!(f, "lex({})", parts.join(","))
    }
}

impl Serialize for OAGDesc {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.serialize_str(&self.to_string())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn r(n: i64, d: i64) -> Rat {
        Rat::new(n.into(), d.into())
    }

    fn zq() -> OAGDesc {
        OAGDesc::new(vec![ArchSummand::Discrete, ArchSummand::rationals()])
    }

    fn zz() -> OAGDesc {
        OAGDesc::new(vec![ArchSummand::Discrete, ArchSummand::Discrete])
    }

    #[test]
    fn element_ops_examples() {
        let g = zz();
        let a = GroupElement::from_ints(&[1, 0]);
        let b = GroupElement::from_ints(&[0, 5]);
        assert_eq!(g.compare(&a, &b).unwrap(), Ordering::Greater);

        let g = zq();
        let x = g.element(vec![r(1, 1), r(1, 2)]).unwrap();
        let y = g.element(vec![r(0, 1), r(1, 2)]).unwrap();
        assert_eq!(g.add(&x, &y).unwrap(), GroupElement::from_ints(&[1, 1]));

        let err = zz().element(vec![r(1, 2), r(0, 1)]).unwrap_err();
        assert!(matches!(err, OagError::NonMember { index: 0, .. }));
        let err = zz().element(vec![r(1, 1)]).unwrap_err();
        assert!(matches!(err, OagError::ArityMismatch { .. }));
    }

    #[test]
    fn p_divisibility() {
        assert!(OAGDesc::rationals().is_p_divisible(5));
        assert!(!OAGDesc::integers().is_p_divisible(5));
        let z5 = ArchSummand::localized([5]).unwrap();
        assert!(OAGDesc::new(vec![z5, ArchSummand::rationals()]).is_p_divisible(5));
        assert!(!zq().is_p_divisible(5));
        assert!(OAGDesc::trivial().is_p_divisible(3));
    }

    #[test]
    fn dense_requires_prime() {
        assert_eq!(
            ArchSummand::localized(Vec::<u64>::new()).unwrap_err(),
            OagError::EmptyDense
        );
        assert_eq!(ArchSummand::localized([6]).unwrap_err(), OagError::NotPrime(6));
    }

    #[test]
    fn min_positive() {
        assert!(OAGDesc::integers().has_min_positive().unwrap());
        assert!(!zq().has_min_positive().unwrap());
        let qz = OAGDesc::new(vec![ArchSummand::rationals(), ArchSummand::Discrete]);
        assert!(qz.has_min_positive().unwrap());
        assert_eq!(qz.min_positive().unwrap(), GroupElement::from_ints(&[0, 1]));
        assert_eq!(
            OAGDesc::trivial().has_min_positive().unwrap_err(),
            OagError::TrivialGroup
        );
    }

    #[test]
    fn gamma_cut_examples() {
        let qz = OAGDesc::new(vec![ArchSummand::rationals(), ArchSummand::Discrete]);
        let (m, p) = qz.gamma_cuts(&GroupElement::from_ints(&[0, 1])).unwrap();
        assert_eq!((m.index, p.index), (2, 1));

        let zqq = OAGDesc::new(vec![
            ArchSummand::Discrete,
            ArchSummand::rationals(),
            ArchSummand::rationals(),
        ]);
        let (m, p) = zqq.gamma_cuts(&GroupElement::from_ints(&[0, 1, 0])).unwrap();
        assert_eq!((m.index, p.index), (2, 1));

        let (m, p) = OAGDesc::integers()
            .gamma_cuts(&GroupElement::from_ints(&[3]))
            .unwrap();
        assert_eq!((m.index, p.index), (1, 0));

        assert_eq!(
            OAGDesc::integers()
                .gamma_cuts(&GroupElement::from_ints(&[0]))
                .unwrap_err(),
            OagError::ZeroElement
        );
    }

    #[test]
    fn quotient_discreteness() {
        let qzq = OAGDesc::new(vec![
            ArchSummand::rationals(),
            ArchSummand::Discrete,
            ArchSummand::rationals(),
        ]);
        assert!(qzq
            .is_quotient_discrete(ConvexCut::new(1), ConvexCut::new(2))
            .unwrap());
        let zqq = OAGDesc::new(vec![
            ArchSummand::Discrete,
            ArchSummand::rationals(),
            ArchSummand::rationals(),
        ]);
        assert!(!zqq
            .is_quotient_discrete(ConvexCut::new(1), ConvexCut::new(2))
            .unwrap());
        assert!(zz()
            .is_quotient_discrete(ConvexCut::new(0), ConvexCut::new(2))
            .unwrap());
        assert!(matches!(
            zz().is_quotient_discrete(ConvexCut::new(1), ConvexCut::new(1)),
            Err(OagError::CutOrder { .. })
        ));
    }

    #[test]
    fn max_p_divisible() {
        let p = 7;
        let g = OAGDesc::new(vec![
            ArchSummand::Discrete,
            ArchSummand::rationals(),
            ArchSummand::localized([p]).unwrap(),
            ArchSummand::rationals(),
        ]);
        assert_eq!(g.max_p_divisible_convex(p).index, 1);
        assert_eq!(OAGDesc::integers().max_p_divisible_convex(3).index, 1);
        assert_eq!(OAGDesc::rationals().max_p_divisible_convex(3).index, 0);
    }

    #[test]
    fn rough_divisibility_examples() {
        assert!(OAGDesc::rationals()
            .rough_p_divisible(&GroupElement::from_ints(&[1]), 2)
            .unwrap());
        assert!(!OAGDesc::integers()
            .rough_p_divisible(&GroupElement::from_ints(&[2]), 2)
            .unwrap());
        assert!(zq()
            .rough_p_divisible(&GroupElement::from_ints(&[0, 1]), 3)
            .unwrap());
        assert_eq!(
            OAGDesc::integers()
                .rough_p_divisible(&GroupElement::from_ints(&[-1]), 2)
                .unwrap_err(),
            OagError::NonPositive
        );
    }

    #[test]
    fn interval_finiteness() {
        assert!(OAGDesc::integers()
            .interval_finite(&GroupElement::from_ints(&[3]))
            .unwrap());
        assert!(!zz()
            .interval_finite(&GroupElement::from_ints(&[1, 0]))
            .unwrap());
        assert!(!OAGDesc::rationals()
            .interval_finite(&GroupElement::from_ints(&[1]))
            .unwrap());
        assert_eq!(
            OAGDesc::integers()
                .interval_finite(&GroupElement::from_ints(&[-1]))
                .unwrap_err(),
            OagError::Negative
        );
    }

    #[test]
    fn min_positive_image_examples() {
        let z = OAGDesc::integers();
        assert!(z.min_positive_image(&GroupElement::from_ints(&[1])).unwrap());
        assert!(!z.min_positive_image(&GroupElement::from_ints(&[2])).unwrap());
        let g = zq();
        let x = g.element(vec![r(1, 1), r(-7, 2)]).unwrap();
        assert!(g.min_positive_image(&x).unwrap());
    }

    #[test]
    fn hull_examples() {
        let z = OAGDesc::integers();
        let h = z.rel_div_hull(&GroupElement::from_ints(&[1])).unwrap();
        assert_eq!(h, Rank1Desc::cyclic());
        let h = OAGDesc::rationals()
            .rel_div_hull(&GroupElement::from_ints(&[1]))
            .unwrap();
        assert_eq!(h, Rank1Desc::divisible());

        let p = 5;
        let g = OAGDesc::new(vec![ArchSummand::localized([p]).unwrap(), ArchSummand::Discrete]);
        let h = g.rel_div_hull(&GroupElement::from_ints(&[1, 0])).unwrap();
        assert_eq!(h.floor(p), Floor::NegInf);
        assert_eq!(h.floor(2), Floor::At(0));
        assert_eq!(h.floor(3), Floor::At(0));
        assert!(h.contains(&r(1, 625)).unwrap());
        assert!(!h.contains(&r(1, 3)).unwrap());

        // γ = 4 in Z: S = (1/4)Z.
        let h = z.rel_div_hull(&GroupElement::from_ints(&[4])).unwrap();
        assert_eq!(h.floor(2), Floor::At(-2));
        assert!(h.contains(&r(3, 4)).unwrap());
        assert!(!h.contains(&r(1, 8)).unwrap());
    }

    #[test]
    fn quotient_subgroup_examples() {
        let qzq = OAGDesc::new(vec![
            ArchSummand::rationals(),
            ArchSummand::Discrete,
            ArchSummand::rationals(),
        ]);
        let (q, s) = qzq.quotient_and_subgroup(ConvexCut::new(1)).unwrap();
        assert_eq!(q.to_string(), "Q");
        assert_eq!(s.to_string(), "lex(Z,Q)");
        let (q, s) = OAGDesc::integers()
            .quotient_and_subgroup(ConvexCut::new(0))
            .unwrap();
        assert!(q.is_trivial());
        assert_eq!(s, OAGDesc::integers());
        let (q, s) = zz().quotient_and_subgroup(ConvexCut::new(2)).unwrap();
        assert_eq!(q, zz());
        assert!(s.is_trivial());
        assert!(zz().quotient_and_subgroup(ConvexCut::new(3)).is_err());
    }

    #[test]
    fn display_forms() {
        assert_eq!(OAGDesc::trivial().to_string(), "lex()");
        let g = OAGDesc::new(vec![
            ArchSummand::localized([2, 3]).unwrap(),
            ArchSummand::localized([5]).unwrap(),
        ]);
        assert_eq!(g.to_string(), "lex(dense{2,3},Z[1/5])");
    }
}
