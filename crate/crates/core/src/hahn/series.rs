//! Finite-support generalized power series `Σ c_g t^g` with exponents in an
//! [`OAGDesc`] and exact coefficients.

use super::coeff::{Coeff, CoeffField};
use super::HahnError;
use crate::oag::{GroupElement, OAGDesc, Rat};
use num_traits::{One, Zero};
use std::cmp::Ordering;
use std::collections::BTreeMap;
use std::fmt;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct HahnSeries {
    group: OAGDesc,
    field: CoeffField,
    /// Strictly increasing exponents, nonzero coefficients.
    terms: Vec<(GroupElement, Coeff)>,
}

/// Valuation (`None` for the zero series, i.e. infinity) and residue.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ValRes {
    pub v: Option<GroupElement>,
    pub res: Coeff,
}

/// Truncation bound `N·g` for a positive gauge element `g`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Gauge {
    pub element: GroupElement,
    pub order: u32,
}

impl Gauge {
    pub fn new(group: &OAGDesc, element: GroupElement, order: u32) -> Result<Self, HahnError> {
        group.check(&element)?;
        if !element.is_positive() {
            return Err(HahnError::BadGauge(element.to_string()));
        }
        Ok(Gauge { element, order })
    }

    /// Uses the minimum positive element of `group`.
    pub fn minimal(group: &OAGDesc, order: u32) -> Result<Self, HahnError> {
        let g = group.min_positive().ok_or(HahnError::NoDefaultGauge)?;
        Ok(Gauge { element: g, order })
    }

    pub fn bound(&self) -> GroupElement {
        self.element.scale(&Rat::from_integer(self.order.into()))
    }

    /// Whether some multiple of `x > 0` exceeds the bound.
    fn reaches(&self, x: &GroupElement) -> bool {
        match (x.leading_index(), self.element.leading_index()) {
            (Some(a), Some(b)) => a <= b,
            _ => false,
        }
    }
}

impl HahnSeries {
    pub fn zero(group: OAGDesc, field: CoeffField) -> Self {
        HahnSeries {
            group,
            field,
            terms: Vec::new(),
        }
    }

    pub fn constant(group: OAGDesc, field: CoeffField, c: Coeff) -> Self {
        let e = group.zero();
        Self::monomial(group, field, c, e).expect("zero is in every group")
    }

    pub fn one(group: OAGDesc, field: CoeffField) -> Self {
        let c = field.one();
        Self::constant(group, field, c)
    }

    pub fn monomial(
        group: OAGDesc,
        field: CoeffField,
        c: Coeff,
        exponent: GroupElement,
    ) -> Result<Self, HahnError> {
        Self::from_terms(group, field, vec![(exponent, c)])
    }

    /// Sorts and merges the given terms, dropping zero coefficients.
    pub fn from_terms(
        group: OAGDesc,
        field: CoeffField,
        terms: Vec<(GroupElement, Coeff)>,
    ) -> Result<Self, HahnError> {
        let mut acc: BTreeMap<GroupElement, Coeff> = BTreeMap::new();
        for (e, c) in terms {
            group.check(&e)?;
            if !field.contains(&c) {
                return Err(HahnError::FieldMismatch);
            }
            match acc.get_mut(&e) {
                Some(x) => *x = field.add(x, &c),
                None => {
                    acc.insert(e, c);
                }
            }
        }
        Ok(HahnSeries {
            terms: acc.into_iter().filter(|(_, c)| !c.is_zero()).collect(),
            group,
            field,
        })
    }

    pub fn group(&self) -> &OAGDesc {
        &self.group
    }

    pub fn field(&self) -> &CoeffField {
        &self.field
    }

    pub fn terms(&self) -> &[(GroupElement, Coeff)] {
        &self.terms
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn coeff_at(&self, e: &GroupElement) -> Coeff {
        self.terms
            .binary_search_by(|(x, _)| x.cmp(e))
            .map(|i| self.terms[i].1.clone())
            .unwrap_or_else(|_| self.field.zero())
    }

    fn compatible(&self, other: &HahnSeries) -> Result<(), HahnError> {
        if self.group != other.group {
            return Err(HahnError::GroupMismatch {
                left: self.group.to_string(),
                right: other.group.to_string(),
            });
        }
        if self.field != other.field {
            return Err(HahnError::FieldMismatch);
        }
        Ok(())
    }

    fn with_terms(&self, terms: Vec<(GroupElement, Coeff)>) -> HahnSeries {
        HahnSeries {
            group: self.group.clone(),
            field: self.field.clone(),
            terms,
        }
    }

    pub fn add(&self, other: &HahnSeries) -> Result<HahnSeries, HahnError> {
        self.compatible(other)?;
        let f = &self.field;
        let (mut i, mut j) = (0, 0);
        let (a, b) = (&self.terms, &other.terms);
        let mut out = Vec::with_capacity(a.len() + b.len());
        while i < a.len() || j < b.len() {
            let ord = match (a.get(i), b.get(j)) {
                (Some(x), Some(y)) => x.0.cmp(&y.0),
                (Some(_), None) => Ordering::Less,
                _ => Ordering::Greater,
            };
            match ord {
                Ordering::Less => {
                    out.push(a[i].clone());
                    i += 1;
                }
                Ordering::Greater => {
                    out.push(b[j].clone());
                    j += 1;
                }
                Ordering::Equal => {
                    let c = f.add(&a[i].1, &b[j].1);
                    if !c.is_zero() {
                        out.push((a[i].0.clone(), c));
                    }
                    i += 1;
                    j += 1;
                }
            }
        }
        Ok(self.with_terms(out))
    }

    pub fn neg(&self) -> HahnSeries {
        let f = &self.field;
        self.with_terms(
            self.terms
                .iter()
                .map(|(e, c)| (e.clone(), f.neg(c)))
                .collect(),
        )
    }

    pub fn sub(&self, other: &HahnSeries) -> Result<HahnSeries, HahnError> {
        self.add(&other.neg())
    }

    pub fn mul(&self, other: &HahnSeries) -> Result<HahnSeries, HahnError> {
        self.compatible(other)?;
        let f = &self.field;
        let mut acc: BTreeMap<GroupElement, Coeff> = BTreeMap::new();
        for (ea, ca) in &self.terms {
            for (eb, cb) in &other.terms {
                let e = ea + eb;
                let c = f.mul(ca, cb);
                match acc.get_mut(&e) {
                    Some(x) => *x = f.add(x, &c),
                    None => {
                        acc.insert(e, c);
                    }
                }
            }
        }
        Ok(self.with_terms(acc.into_iter().filter(|(_, c)| !c.is_zero()).collect()))
    }

    /// The product with every term above `bound` dropped. Terms are sorted,
    /// so each row stops at the first exponent past the bound.
    pub fn mul_trunc(&self, other: &HahnSeries, bound: &GroupElement) -> Result<HahnSeries, HahnError> {
        self.compatible(other)?;
        let f = &self.field;
        let mut acc: BTreeMap<GroupElement, Coeff> = BTreeMap::new();
        for (ea, ca) in &self.terms {
            for (eb, cb) in &other.terms {
                let e = ea + eb;
                if &e > bound {
                    break;
                }
                let c = f.mul(ca, cb);
                match acc.get_mut(&e) {
                    Some(x) => *x = f.add(x, &c),
                    None => {
                        acc.insert(e, c);
                    }
                }
            }
        }
        Ok(self.with_terms(acc.into_iter().filter(|(_, c)| !c.is_zero()).collect()))
    }

    pub fn scale(&self, c: &Coeff) -> HahnSeries {
        let f = &self.field;
        self.with_terms(
            self.terms
                .iter()
                .map(|(e, x)| (e.clone(), f.mul(x, c)))
                .filter(|(_, x)| !x.is_zero())
                .collect(),
        )
    }

    /// Multiplication by `t^e`.
    pub fn shift(&self, e: &GroupElement) -> HahnSeries {
        self.with_terms(self.terms.iter().map(|(x, c)| (x + e, c.clone())).collect())
    }

    /// Drops every term with exponent above `bound`.
    pub fn truncate(&self, bound: &GroupElement) -> HahnSeries {
        self.with_terms(
            self.terms
                .iter()
                .take_while(|(e, _)| e <= bound)
                .cloned()
                .collect(),
        )
    }

    pub fn valuation(&self) -> Option<&GroupElement> {
        self.terms.first().map(|(e, _)| e)
    }

    pub fn leading_coeff(&self) -> Option<&Coeff> {
        self.terms.first().map(|(_, c)| c)
    }

    /// `res(x)` is the constant coefficient when `v(x) >= 0`, and 0 otherwise.
    pub fn val_res(&self) -> ValRes {
        let v = self.valuation().cloned();
        let res = match &v {
            Some(e) if e.is_zero() => self.terms[0].1.clone(),
            _ => self.field.zero(),
        };
        ValRes { v, res }
    }

    pub fn in_valuation_ring(&self) -> bool {
        self.valuation().is_none_or(|e| e.signum() != Ordering::Less)
    }

    /// `y` with `v(x·y - 1) > N·g`.
    pub fn invert_trunc(&self, gauge: &Gauge) -> Result<HahnSeries, HahnError> {
        let (v, c) = match self.terms.first() {
            Some((v, c)) => (v.clone(), c.clone()),
            None => return Err(HahnError::ZeroInverse),
        };
        let ci = self.field.inv(&c).expect("leading coefficients are nonzero");
        let y0 = HahnSeries::monomial(self.group.clone(), self.field.clone(), ci, v.neg())?;
        let one = HahnSeries::one(self.group.clone(), self.field.clone());
        // x·y0 = 1 - w with v(w) > 0, so 1/x = y0 · Σ w^k.
        let w = one.sub(&self.mul(&y0)?)?;
        let bound = gauge.bound();
        if w.is_zero() {
            return Ok(y0);
        }
        if w.terms.iter().any(|(e, _)| !gauge.reaches(e)) {
            return Err(HahnError::GaugeTooCoarse {
                valuation: w.valuation().unwrap().to_string(),
                gauge: gauge.element.to_string(),
            });
        }
        // Newton iteration y <- y + y·(1 - x·y): the part of 1 - x·y up to
        // the bound is squared at each step.
        let y_bound = &bound + &v.neg();
        let mut y = y0;
        loop {
            let r = one.sub(&self.mul_trunc(&y, &bound)?)?;
            if r.is_zero() {
                return Ok(y);
            }
            y = y.add(&y.mul_trunc(&r, &y_bound)?)?;
        }
    }

    /// Renders `3 + 2*t^(1,0) - t^(0,5/2)`; exponents of rank-1 groups are
    /// printed as plain rationals.
    pub fn to_text(&self) -> String {
        if self.terms.is_empty() {
            return "0".into();
        }
        let mut out = String::new();
        for (i, (e, c)) in self.terms.iter().enumerate() {
            let (neg, mag) = match c {
                Coeff::Rat(r) if r < &Rat::zero() => (true, Coeff::Rat(-r)),
                _ => (false, c.clone()),
            };
            if i == 0 {
                if neg {
                    out.push('-');
                }
            } else {
                out.push_str(if neg { " - " } else { " + " });
            }
            let mono = if e.is_zero() {
                None
            } else if e.arity() == 1 {
                let r = &e.coords()[0];
                Some(if r.is_integer() && !r.is_one() && r > &Rat::zero() {
                    format!("t^{r}")
                } else if r.is_one() {
                    "t".to_string()
                } else {
                    format!("t^({r})")
                })
            } else {
                let cs: Vec<String> = e.coords().iter().map(|c| c.to_string()).collect();
                Some(format!("t^({})", cs.join(",")))
            };
            match mono {
                None => out.push_str(&mag.to_string()),
                Some(m) if mag.is_one() => out.push_str(&m),
                Some(m) => out.push_str(&format!("{mag}*{m}")),
            }
        }
        out
    }
}

impl fmt::Display for HahnSeries {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.to_text())
    }
}

/// Polynomial in `X` with series coefficients, lowest degree first.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Polynomial {
    coeffs: Vec<HahnSeries>,
}

impl Polynomial {
    pub fn new(coeffs: Vec<HahnSeries>) -> Result<Self, HahnError> {
        let first = coeffs.first().ok_or(HahnError::EmptyPolynomial)?;
        for c in &coeffs[1..] {
            first.compatible(c)?;
        }
        let mut coeffs = coeffs;
        while coeffs.len() > 1 && coeffs.last().unwrap().is_zero() {
            coeffs.pop();
        }
        Ok(Polynomial { coeffs })
    }

    pub fn coeffs(&self) -> &[HahnSeries] {
        &self.coeffs
    }

    pub fn degree(&self) -> usize {
        self.coeffs.len() - 1
    }

    pub fn eval(&self, x: &HahnSeries) -> Result<HahnSeries, HahnError> {
        let mut acc = HahnSeries::zero(x.group.clone(), x.field.clone());
        for c in self.coeffs.iter().rev() {
            acc = acc.mul(x)?.add(c)?;
        }
        Ok(acc)
    }

    /// Like [`Polynomial::eval`], truncating intermediate results.
    fn eval_trunc(&self, x: &HahnSeries, bound: &GroupElement) -> Result<HahnSeries, HahnError> {
        let mut acc = HahnSeries::zero(x.group.clone(), x.field.clone());
        for c in self.coeffs.iter().rev() {
            acc = acc.mul_trunc(x, bound)?.add(c)?.truncate(bound);
        }
        Ok(acc)
    }

    pub fn derivative(&self) -> Polynomial {
        let f = self.coeffs[0].field.clone();
        let mut out: Vec<HahnSeries> = self
            .coeffs
            .iter()
            .enumerate()
            .skip(1)
            .map(|(i, c)| c.scale(&f.from_int(i as i64)))
            .collect();
        if out.is_empty() {
            out.push(HahnSeries::zero(self.coeffs[0].group.clone(), f));
        }
        Polynomial { coeffs: out }
    }

    /// The residue polynomial evaluated at `a`.
    fn residue_eval(&self, a: &Coeff) -> Coeff {
        let f = &self.coeffs[0].field;
        self.coeffs
            .iter()
            .rev()
            .fold(f.zero(), |acc, c| f.add(&f.mul(&acc, a), &c.val_res().res))
    }
}

/// One Newton step: the iterate and the valuation of `f` at it. `defect` is
/// `None` when `f` vanishes to the working precision `2N·g`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct NewtonStep {
    pub iterate: HahnSeries,
    pub defect: Option<GroupElement>,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct HenselLift {
    pub root: HahnSeries,
    /// Starts with the constant approximation `a0`.
    pub steps: Vec<NewtonStep>,
}

impl HenselLift {
    /// Whether every step at least doubled the defect valuation.
    pub fn doubles_each_step(&self) -> bool {
        let two = Rat::from_integer(2.into());
        self.steps.windows(2).all(|w| match (&w[0].defect, &w[1].defect) {
            (_, None) => true,
            (None, Some(_)) => false,
            (Some(a), Some(b)) => b >= &a.scale(&two),
        })
    }
}

/// Lifts a simple residue root `a0` of `f` to `x` with `res(x) = a0` and
/// `v(f(x)) > N·g` by Newton iteration.
pub fn hensel_lift(f: &Polynomial, a0: &Coeff, gauge: &Gauge) -> Result<HenselLift, HahnError> {
    let lead = &f.coeffs[0];
    let (group, field) = (lead.group.clone(), lead.field.clone());
    if let Some(c) = f.coeffs.iter().find(|c| !c.in_valuation_ring()) {
        return Err(HahnError::NotIntegral(c.to_text()));
    }
    if !field.contains(a0) {
        return Err(HahnError::FieldMismatch);
    }
    if !f.residue_eval(a0).is_zero() {
        return Err(HahnError::NotResidueRoot(a0.to_string()));
    }
    let df = f.derivative();
    if df.residue_eval(a0).is_zero() {
        return Err(HahnError::NotSimpleRoot(a0.to_string()));
    }
    let target = gauge.bound();
    // Working precision 2N·g keeps truncation error below the doubled defect.
    let work = Gauge {
        element: gauge.element.clone(),
        order: gauge.order.saturating_mul(2).max(1),
    };
    let work_bound = work.bound();
    let mut x = HahnSeries::constant(group, field, a0.clone());
    let mut steps = Vec::new();
    loop {
        let fx = f.eval_trunc(&x, &work_bound)?;
        let defect = fx.valuation().cloned();
        steps.push(NewtonStep {
            iterate: x.clone(),
            defect: defect.clone(),
        });
        match &defect {
            None => break,
            Some(d) if d > &target => break,
            Some(d) if !gauge.reaches(d) => {
                return Err(HahnError::GaugeTooCoarse {
                    valuation: d.to_string(),
                    gauge: gauge.element.to_string(),
                })
            }
            Some(_) => {}
        }
        let dfx = df.eval_trunc(&x, &work_bound)?;
        let inv = dfx.invert_trunc(&work)?;
        x = x.sub(&fx.mul_trunc(&inv, &work_bound)?)?.truncate(&work_bound);
    }
    let root = x.truncate(&target);
    Ok(HenselLift { root, steps })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn z() -> OAGDesc {
        OAGDesc::integers()
    }

    fn t(k: i64) -> GroupElement {
        GroupElement::from_ints(&[k])
    }

    fn series(field: &CoeffField, terms: &[(i64, i64)]) -> HahnSeries {
        HahnSeries::from_terms(
            z(),
            field.clone(),
            terms.iter().map(|&(e, c)| (t(e), field.from_int(c))).collect(),
        )
        .unwrap()
    }

    #[test]
    fn arith_examples() {
        let f5 = CoeffField::finite(5).unwrap();
        let a = series(&f5, &[(0, 1), (1, 1)]);
        let b = series(&f5, &[(0, 1), (1, -1)]);
        assert_eq!(a.mul(&b).unwrap(), series(&f5, &[(0, 1), (2, -1)]));
        assert!(a.add(&a.neg()).unwrap().terms().is_empty());

        let half = GroupElement::from_coords(vec![Rat::new(1.into(), 2.into())]);
        let s = HahnSeries::monomial(OAGDesc::rationals(), f5.clone(), f5.one(), half).unwrap();
        let sq = s.mul(&s).unwrap();
        assert_eq!(sq.terms(), &[(t(1), Coeff::Gf(1))]);

        let q = CoeffField::Rational;
        let other = series(&q, &[(0, 1)]);
        assert!(matches!(a.add(&other), Err(HahnError::FieldMismatch)));
    }

    #[test]
    fn val_res_examples() {
        let q = CoeffField::Rational;
        let x = series(&q, &[(0, 3), (1, 1)]);
        assert_eq!(x.val_res(), ValRes { v: Some(t(0)), res: q.from_int(3) });
        let y = series(&q, &[(-1, 1)]);
        assert_eq!(y.val_res(), ValRes { v: Some(t(-1)), res: q.zero() });
        let zero = HahnSeries::zero(z(), q.clone());
        assert_eq!(zero.val_res(), ValRes { v: None, res: q.zero() });
    }

    #[test]
    fn invert_examples() {
        let f5 = CoeffField::finite(5).unwrap();
        let g = Gauge::minimal(&z(), 3).unwrap();
        let x = series(&f5, &[(0, 1), (1, -1)]);
        let y = x.invert_trunc(&g).unwrap();
        assert_eq!(y, series(&f5, &[(0, 1), (1, 1), (2, 1), (3, 1)]));
        let one = HahnSeries::one(z(), f5.clone());
        assert!(x.mul(&y).unwrap().sub(&one).unwrap().valuation().unwrap() >= &t(4));

        let tt = series(&f5, &[(1, 1)]);
        assert_eq!(tt.invert_trunc(&g).unwrap(), series(&f5, &[(-1, 1)]));
        let q = CoeffField::Rational;
        let two = series(&q, &[(0, 2)]);
        let half = two.invert_trunc(&g).unwrap();
        assert_eq!(half.terms(), &[(t(0), Coeff::Rat(Rat::new(1.into(), 2.into())))]);
        assert!(matches!(
            HahnSeries::zero(z(), q).invert_trunc(&g),
            Err(HahnError::ZeroInverse)
        ));
    }

    #[test]
    fn infinitesimal_error_is_rejected() {
        let g2 = OAGDesc::lex([&OAGDesc::integers(), &OAGDesc::integers()]);
        let q = CoeffField::Rational;
        let x = HahnSeries::from_terms(
            g2.clone(),
            q.clone(),
            vec![
                (GroupElement::from_ints(&[0, 0]), q.one()),
                (GroupElement::from_ints(&[0, 1]), q.from_int(-1)),
            ],
        )
        .unwrap();
        let gauge = Gauge::new(&g2, GroupElement::from_ints(&[1, 0]), 2).unwrap();
        assert!(matches!(x.invert_trunc(&gauge), Err(HahnError::GaugeTooCoarse { .. })));
    }

    #[test]
    fn linear_lift_is_one_step() {
        let q = CoeffField::Rational;
        let c = series(&q, &[(0, 3), (1, 1)]);
        let f = Polynomial::new(vec![c.neg(), series(&q, &[(0, 1)])]).unwrap();
        let lift = hensel_lift(&f, &q.from_int(3), &Gauge::minimal(&z(), 5).unwrap()).unwrap();
        assert_eq!(lift.root, c);
        assert_eq!(lift.steps.len(), 2);
        assert_eq!(lift.steps[1].defect, None);
    }

    #[test]
    fn lift_rejects_bad_roots() {
        let f5 = CoeffField::finite(5).unwrap();
        let g = Gauge::minimal(&z(), 4).unwrap();
        // X^2 - t has the double residue root 0.
        let f = Polynomial::new(vec![series(&f5, &[(1, -1)]), series(&f5, &[]), series(&f5, &[(0, 1)])])
            .unwrap();
        assert!(matches!(hensel_lift(&f, &Coeff::Gf(0), &g), Err(HahnError::NotSimpleRoot(_))));
        assert!(matches!(hensel_lift(&f, &Coeff::Gf(1), &g), Err(HahnError::NotResidueRoot(_))));
    }

    #[test]
    fn text_rendering() {
        let q = CoeffField::Rational;
        assert_eq!(series(&q, &[(0, 3), (1, 2), (2, -1)]).to_text(), "3 + 2*t - t^2");
        assert_eq!(series(&q, &[(-1, 1)]).to_text(), "t^(-1)");
        assert_eq!(HahnSeries::zero(z(), q).to_text(), "0");
    }
}
