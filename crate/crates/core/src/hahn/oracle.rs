//! Brute-force check of `[L:K] = e·f` for tame towers over `F_p((Z))` or
//! over `Q_p` known to a fixed p-adic precision.
//!
//! Each step adjoins a root of a polynomial with coefficients in the base.
//! The step is certified irreducible over the field built so far when its
//! Newton polygon is a single segment of slope `-λ` and the associated
//! residual polynomial is irreducible over the current residue field. Then
//! the step contributes `e = [Γ + Zλ : Γ]` and `f = deg` of the residual
//! polynomial. Residue computations happen inside one finite field
//! `F_{p^M}` large enough to hold a root of every residual polynomial; the
//! angular component of the current uniformizer is tracked so that residual
//! polynomials over intermediate fields are normalised correctly.
//!
//! Only tame steps (`p ∤ e`) are accepted. Defect needs wild ramification,
//! which this check never constructs.

use super::coeff::{Coeff, CoeffField, GaloisField, MAX_FIELD_SIZE};
use super::series::{hensel_lift, Gauge, HahnSeries, Polynomial};
use super::HahnError;
use crate::oag::{rat_val, GroupElement, OAGDesc, Rat};
use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, ToPrimitive, Zero};
use serde::{Deserialize, Serialize};
use std::fmt;
use std::sync::Arc;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "lowercase")]
pub enum OracleBase {
    /// `F_p((Z))` with uniformizer `t`.
    Hahn { p: u64 },
    /// `Q_p` with coefficients known modulo `p^precision`.
    Padic { p: u64, precision: u32 },
}

impl OracleBase {
    pub fn prime(&self) -> u64 {
        match self {
            OracleBase::Hahn { p } | OracleBase::Padic { p, .. } => *p,
        }
    }
}

impl fmt::Display for OracleBase {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            OracleBase::Hahn { p } => write!(f, "F({p})((Z))"),
            OracleBase::Padic { p, precision } => write!(f, "Qp({p}) mod {p}^{precision}"),
        }
    }
}

/// Extension kinds accepted in case files.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "lowercase")]
pub enum ExtSpec {
    /// A root of `X^n - unit·π^power`, with `π = t` or `p`.
    Radical {
        n: u32,
        #[serde(default = "one_i64")]
        unit: i64,
        #[serde(default = "one_i64")]
        power: i64,
    },
    /// The unramified extension of residue degree `degree`, or a root of
    /// `poly` whose coefficients are constants.
    Unramified {
        #[serde(default)]
        degree: Option<u32>,
        #[serde(default)]
        poly: Option<String>,
    },
    /// A root of an arbitrary polynomial in `X` over the base.
    Poly { poly: String },
    /// Steps applied in order.
    Composite { steps: Vec<ExtSpec> },
}

fn one_i64() -> i64 {
    1
}

/// One entry of a case file.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct CaseSpec {
    pub name: String,
    pub base: OracleBase,
    pub ext: ExtSpec,
    /// When set on an `F_p((Z))` base, each step's root is also lifted in a
    /// Hahn field to this order as a witness.
    #[serde(default)]
    pub witness_order: Option<u32>,
}

/// A case with every step as an explicit polynomial over `Q` with
/// exponents in `Z`; the coefficients are reduced into the base.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct OracleCase {
    pub name: String,
    pub base: OracleBase,
    pub steps: Vec<Polynomial>,
    pub witness_order: Option<u32>,
}

impl CaseSpec {
    /// Expands the extension into explicit polynomials; `poly` strings use
    /// the series syntax with an indeterminate `X`.
    pub fn resolve(&self) -> Result<OracleCase, HahnError> {
        let parse = |text: &str| {
            crate::dsl::parse_polynomial(text, &OAGDesc::integers(), &CoeffField::Rational)
                .map_err(|e| HahnError::Parse(e.to_string()))
        };
        let mut steps = Vec::new();
        expand(&self.ext, &self.base, &parse, &mut steps)?;
        if steps.is_empty() {
            return Err(HahnError::Unsupported("composite extension without steps".into()));
        }
        Ok(OracleCase {
            name: self.name.clone(),
            base: self.base,
            steps,
            witness_order: self.witness_order,
        })
    }
}

fn expand<F>(ext: &ExtSpec, base: &OracleBase, parse: &F, out: &mut Vec<Polynomial>) -> Result<(), HahnError>
where
    F: Fn(&str) -> Result<Polynomial, HahnError>,
{
    let z = OAGDesc::integers();
    let q = CoeffField::Rational;
    let constant = |r: Rat| HahnSeries::constant(z.clone(), q.clone(), Coeff::Rat(r));
    match ext {
        ExtSpec::Radical { n, unit, power } => {
            if *n == 0 {
                return Err(HahnError::Unsupported("radical of degree 0".into()));
            }
            let c = match base {
                OracleBase::Hahn { .. } => HahnSeries::monomial(
                    z.clone(),
                    q.clone(),
                    q.from_int(-unit),
                    GroupElement::from_ints(&[*power]),
                )?,
                OracleBase::Padic { p, .. } => {
                    let pk = Rat::from_integer(BigInt::from(*p)).pow(*power as i32);
                    constant(pk * Rat::from_integer((-unit).into()))
                }
            };
            let mut coeffs = vec![c];
            for _ in 1..*n {
                coeffs.push(HahnSeries::zero(z.clone(), q.clone()));
            }
            coeffs.push(constant(Rat::one()));
            out.push(Polynomial::new(coeffs)?);
        }
        ExtSpec::Unramified { degree, poly } => {
            let f = match (degree, poly) {
                (Some(m), None) => {
                    let coeffs = irreducible_over_prime_field(base.prime(), *m)?;
                    Polynomial::new(
                        coeffs
                            .into_iter()
                            .map(|c| constant(Rat::from_integer(c.into())))
                            .collect(),
                    )?
                }
                (None, Some(text)) => parse(text)?,
                _ => {
                    return Err(HahnError::Unsupported(
                        "an unramified step needs exactly one of degree and poly".into(),
                    ))
                }
            };
            let constant_coeffs = f
                .coeffs()
                .iter()
                .all(|c| c.terms().iter().all(|(e, _)| e.is_zero()));
            if !constant_coeffs {
                return Err(HahnError::Unsupported(
                    "an unramified step needs constant coefficients".into(),
                ));
            }
            out.push(f);
        }
        ExtSpec::Poly { poly } => out.push(parse(poly)?),
        ExtSpec::Composite { steps } => {
            for s in steps {
                expand(s, base, parse, out)?;
            }
        }
    }
    Ok(())
}

/// Monic irreducible polynomial of degree `m` over `F_p` (lowest degree
/// first, coefficients in `0..p`): the minimal polynomial of the first
/// element of `F_{p^m}` of degree `m`.
pub fn irreducible_over_prime_field(p: u64, m: u32) -> Result<Vec<u64>, HahnError> {
    if m == 0 {
        return Err(HahnError::Unsupported("degree 0".into()));
    }
    let q = p.checked_pow(m).filter(|&q| q <= MAX_FIELD_SIZE).ok_or(HahnError::FieldTooLarge(p.saturating_pow(m)))?;
    let g = GaloisField::new(q)?;
    let z = g
        .elements()
        .find(|&a| g.frobenius_orbit(a, 1) == m)
        .expect("F_{p^m} has elements of degree m");
    // Π (X - z^{p^i}) over F_{p^m}
    let mut poly = vec![1u32];
    let mut conj = z;
    for _ in 0..m {
        let mut next = vec![0u32; poly.len() + 1];
        for (i, &c) in poly.iter().enumerate() {
            next[i + 1] = g.add(next[i + 1], c);
            next[i] = g.add(next[i], g.neg(g.mul(c, conj)));
        }
        poly = next;
        conj = g.pow(conj, p);
    }
    Ok(poly.into_iter().map(|c| {
        debug_assert!((c as u64) < p, "minimal polynomial has prime-field coefficients");
        c as u64
    }).collect())
}

/// What is known about a coefficient of a step polynomial.
#[derive(Debug, Clone, PartialEq, Eq)]
enum CoeffInfo {
    Zero,
    /// Valuation and the residue (in `F_p`) of the coefficient over `π^v`.
    Known { v: Rat, unit: u32 },
    /// Only `v >= bound` is known.
    AtLeast(Rat),
}

fn coeff_info(base: &OracleBase, c: &HahnSeries) -> Result<CoeffInfo, HahnError> {
    match base {
        OracleBase::Hahn { p } => {
            let fp = CoeffField::finite(*p)?;
            for (e, x) in c.terms() {
                let Coeff::Rat(r) = x else {
                    return Err(HahnError::FieldMismatch);
                };
                if let Coeff::Gf(u) = fp.from_rat(r)? {
                    if u != 0 {
                        return Ok(CoeffInfo::Known { v: e.coords()[0].clone(), unit: u });
                    }
                }
            }
            Ok(CoeffInfo::Zero)
        }
        OracleBase::Padic { p, precision } => {
            if c.terms().iter().any(|(e, _)| !e.is_zero()) {
                return Err(HahnError::Unsupported(format!(
                    "p-adic coefficients must be constants, found {}",
                    c.to_text()
                )));
            }
            let bound = Rat::from_integer((*precision).into());
            let r = match c.terms().first() {
                None => return Ok(CoeffInfo::AtLeast(bound)),
                Some((_, Coeff::Rat(r))) => r.clone(),
                Some(_) => return Err(HahnError::FieldMismatch),
            };
            let v = Rat::from_integer(rat_val(&r, *p).into());
            if v >= bound {
                return Ok(CoeffInfo::AtLeast(bound));
            }
            let pv = Rat::from_integer(BigInt::from(*p)).pow(v.to_integer().to_i32().unwrap());
            let u = r / pv;
            let fp = CoeffField::finite(*p)?;
            let Coeff::Gf(unit) = fp.from_rat(&u)? else { unreachable!() };
            Ok(CoeffInfo::Known { v, unit })
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct StepReport {
    pub poly: String,
    pub degree: u64,
    /// Valuation of every root, in units of `v(π)`.
    pub root_valuation: String,
    pub e: u64,
    pub f: u64,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct WitnessStep {
    pub valuation: String,
    pub newton_steps: usize,
    pub verified: bool,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct OracleReport {
    pub name: String,
    pub base: String,
    /// `certified` or `inconclusive`.
    pub status: &'static str,
    pub reason: Option<String>,
    pub lhs: Option<u64>,
    pub e: Option<u64>,
    pub f: Option<u64>,
    pub rhs: Option<u64>,
    pub equal: Option<bool>,
    pub steps: Vec<StepReport>,
    /// Order of the finite field used for residue computations.
    pub residue_workspace: Option<u64>,
    pub witness: Option<Vec<WitnessStep>>,
}

impl OracleReport {
    pub fn is_certified(&self) -> bool {
        self.status == "certified"
    }

    fn inconclusive(case: &OracleCase, reason: String) -> Self {
        OracleReport {
            name: case.name.clone(),
            base: case.base.to_string(),
            status: "inconclusive",
            reason: Some(reason),
            lhs: None,
            e: None,
            f: None,
            rhs: None,
            equal: None,
            steps: Vec::new(),
            residue_workspace: None,
            witness: None,
        }
    }
}

/// The field built so far: value group `(1/e)Z`, residue field `F_{p^f}`,
/// and the angular component of an element of value `1/e`.
#[derive(Debug, Clone, Copy)]
struct TowerState {
    e: u64,
    f: u64,
    uniformizer_ac: u32,
}

enum StepResult {
    Done {
        report: Box<StepReport>,
        state: TowerState,
        lambda: Rat,
        segment_value: Rat,
        residue_root: u32,
    },
    NeedsLargerField,
    Inconclusive(String),
}

fn pow_signed(g: &GaloisField, a: u32, k: &BigInt) -> u32 {
    let e = k.abs().to_u64().expect("small exponent");
    let x = g.pow(a, e);
    if k.is_negative() {
        g.inv(x).expect("nonzero")
    } else {
        x
    }
}

fn analyze_step(
    base: &OracleBase,
    g: &GaloisField,
    state: TowerState,
    poly: &Polynomial,
) -> Result<StepResult, HahnError> {
    let p = base.prime();
    let infos = poly
        .coeffs()
        .iter()
        .map(|c| coeff_info(base, c))
        .collect::<Result<Vec<_>, _>>()?;
    let n = infos.len() - 1;
    if n == 0 {
        return Err(HahnError::Unsupported("constant polynomial".into()));
    }
    let (v0, vn) = match (&infos[0], &infos[n]) {
        (CoeffInfo::Known { v: a, .. }, CoeffInfo::Known { v: b, .. }) => (a.clone(), b.clone()),
        (CoeffInfo::Zero, _) => {
            return Err(HahnError::NotCertified("X divides the polynomial".into()))
        }
        (_, CoeffInfo::Zero) => unreachable!("leading coefficient is nonzero"),
        _ => {
            return Ok(StepResult::Inconclusive(format!(
                "the valuation of an extreme coefficient of {} is not determined at this precision",
                poly_text(poly)
            )))
        }
    };
    let nr = Rat::from_integer(BigInt::from(n));
    let lambda = (&v0 - &vn) / &nr;
    let line = |j: usize| &v0 - &lambda * Rat::from_integer(BigInt::from(j));
    let mut on_segment: Vec<(usize, u32)> = Vec::new();
    for (j, info) in infos.iter().enumerate() {
        match info {
            CoeffInfo::Zero => {}
            CoeffInfo::Known { v, unit } => {
                let l = line(j);
                if v < &l {
                    return Err(HahnError::NotCertified(format!(
                        "the Newton polygon of {} has more than one segment",
                        poly_text(poly)
                    )));
                }
                if v == &l {
                    on_segment.push((j, *unit));
                }
            }
            CoeffInfo::AtLeast(b) => {
                if b <= &line(j) {
                    return Ok(StepResult::Inconclusive(format!(
                        "coefficient of X^{j} in {} is only known to have valuation >= {b}",
                        poly_text(poly)
                    )));
                }
            }
        }
    }
    let scaled = &lambda * Rat::from_integer(BigInt::from(state.e));
    let e = scaled.denom().to_u64().expect("small ramification");
    let a = scaled.numer().clone();
    if e.is_multiple_of(p) {
        return Err(HahnError::Wild { e, p });
    }
    let d = n as u64 / e;
    // Residual polynomial Σ unit_j y^j in the angular component y of a root.
    let residual = |y: u32| {
        on_segment
            .iter()
            .fold(0u32, |acc, &(j, u)| g.add(acc, g.mul(u, g.pow(y, j as u64))))
    };
    let Some(y) = g.elements().skip(1).find(|&y| residual(y) == 0) else {
        return Ok(StepResult::NeedsLargerField);
    };
    // z = x^e / π^a lies in the new residue field.
    let z = g.mul(g.pow(y, e), pow_signed(g, state.uniformizer_ac, &(-&a)));
    let orbit = g.frobenius_orbit(z, state.f as u32) as u64;
    if orbit != d {
        return Err(HahnError::NotCertified(format!(
            "the residual polynomial of {} is reducible over F({}^{})",
            poly_text(poly),
            p,
            state.f
        )));
    }
    // r·a + s·e = 1 gives an element x^r π^s of value 1/(e·E).
    let ext = a.extended_gcd(&BigInt::from(e));
    debug_assert!(ext.gcd.is_one());
    let uniformizer_ac = g.mul(
        pow_signed(g, y, &ext.x),
        pow_signed(g, state.uniformizer_ac, &ext.y),
    );
    Ok(StepResult::Done {
        report: Box::new(StepReport {
            poly: poly_text(poly),
            degree: n as u64,
            root_valuation: lambda.to_string(),
            e,
            f: d,
        }),
        state: TowerState {
            e: state.e * e,
            f: state.f * d,
            uniformizer_ac,
        },
        segment_value: v0,
        lambda,
        residue_root: y,
    })
}

fn poly_text(poly: &Polynomial) -> String {
    let mut parts = Vec::new();
    for (j, c) in poly.coeffs().iter().enumerate().rev() {
        if c.is_zero() {
            continue;
        }
        let x = match j {
            0 => String::new(),
            1 => "X".into(),
            _ => format!("X^{j}"),
        };
        let c = c.to_text();
        parts.push(match (x.is_empty(), c.as_str()) {
            (true, _) => c,
            (false, "1") => x,
            (false, _) => format!("({c})*{x}"),
        });
    }
    let mut out = String::new();
    for (i, part) in parts.iter().enumerate() {
        match (i, part.strip_prefix('-')) {
            (0, _) => out.push_str(part),
            (_, Some(rest)) if !rest.contains(' ') => {
                out.push_str(" - ");
                out.push_str(rest);
            }
            _ => {
                out.push_str(" + ");
                out.push_str(part);
            }
        }
    }
    out
}

/// Runs one case. `Err` means the case lies outside the supported tame
/// catalogue; an insufficient p-adic precision yields an inconclusive report.
pub fn fundamental_equality(case: &OracleCase) -> Result<OracleReport, HahnError> {
    let p = case.base.prime();
    if !crate::oag::is_prime(p) {
        return Err(HahnError::NotPrimePower(p));
    }
    let mut m = 1u32;
    while p.checked_pow(m).is_some_and(|q| q <= MAX_FIELD_SIZE) {
        let g = Arc::new(GaloisField::new(p.pow(m))?);
        let mut state = TowerState {
            e: 1,
            f: 1,
            uniformizer_ac: 1,
        };
        let mut reports = Vec::new();
        let mut lifts = Vec::new();
        let mut too_small = false;
        for poly in &case.steps {
            match analyze_step(&case.base, &g, state, poly)? {
                StepResult::Done {
                    report,
                    state: next,
                    lambda,
                    segment_value,
                    residue_root,
                } => {
                    reports.push(*report);
                    lifts.push((lambda, segment_value, residue_root));
                    state = next;
                }
                StepResult::NeedsLargerField => {
                    too_small = true;
                    break;
                }
                StepResult::Inconclusive(reason) => {
                    return Ok(OracleReport::inconclusive(
                        case,
                        format!("inconclusive at this precision: {reason}"),
                    ))
                }
            }
        }
        if too_small {
            m += 1;
            continue;
        }
        let lhs: u64 = reports.iter().map(|r| r.degree).product();
        let rhs = state.e * state.f;
        let witness = match (case.base, case.witness_order) {
            (OracleBase::Hahn { .. }, Some(order)) => Some(
                case.steps
                    .iter()
                    .zip(&lifts)
                    .map(|(poly, (lambda, mu, y))| witness(&g, poly, lambda, mu, *y, order))
                    .collect::<Result<Vec<_>, _>>()?,
            ),
            _ => None,
        };
        return Ok(OracleReport {
            name: case.name.clone(),
            base: case.base.to_string(),
            status: "certified",
            reason: None,
            lhs: Some(lhs),
            e: Some(state.e),
            f: Some(state.f),
            rhs: Some(rhs),
            equal: Some(lhs == rhs),
            steps: reports,
            residue_workspace: Some(p.pow(m)),
            witness,
        });
    }
    Err(HahnError::Unsupported(format!(
        "residual polynomials need a finite field larger than {MAX_FIELD_SIZE} elements"
    )))
}

/// Lifts the root with angular component `y` in `F_{p^M}((Q))` and checks
/// `v(f(x)) > v(f's segment) + order`.
fn witness(
    g: &Arc<GaloisField>,
    poly: &Polynomial,
    lambda: &Rat,
    segment_value: &Rat,
    y: u32,
    order: u32,
) -> Result<WitnessStep, HahnError> {
    let field = CoeffField::Finite(g.clone());
    let q_group = OAGDesc::rationals();
    let embed = |c: &HahnSeries, shift: &Rat| -> Result<HahnSeries, HahnError> {
        let terms = c
            .terms()
            .iter()
            .map(|(e, x)| {
                let Coeff::Rat(r) = x else {
                    return Err(HahnError::FieldMismatch);
                };
                Ok((
                    GroupElement::from_coords(vec![&e.coords()[0] + shift]),
                    field.from_rat(r)?,
                ))
            })
            .collect::<Result<Vec<_>, HahnError>>()?;
        HahnSeries::from_terms(q_group.clone(), field.clone(), terms)
    };
    // Q(Y) = t^{-μ} f(t^λ Y) has integral coefficients and residue root y.
    let scaled = poly
        .coeffs()
        .iter()
        .enumerate()
        .map(|(j, c)| embed(c, &(lambda * Rat::from_integer(BigInt::from(j)) - segment_value)))
        .collect::<Result<Vec<_>, _>>()?;
    let gauge = Gauge::new(&q_group, GroupElement::from_ints(&[1]), order)?;
    let lift = hensel_lift(&Polynomial::new(scaled)?, &Coeff::Gf(y), &gauge)?;
    let x = lift.root.shift(&GroupElement::from_coords(vec![lambda.clone()]));
    let original = Polynomial::new(
        poly.coeffs()
            .iter()
            .map(|c| embed(c, &Rat::zero()))
            .collect::<Result<Vec<_>, _>>()?,
    )?;
    let fx = original.eval(&x)?;
    let bound = GroupElement::from_coords(vec![segment_value + Rat::from_integer(order.into())]);
    let verified = fx.valuation().is_none_or(|v| v > &bound)
        && x.valuation() == Some(&GroupElement::from_coords(vec![lambda.clone()]));
    Ok(WitnessStep {
        valuation: lambda.to_string(),
        newton_steps: lift.steps.len() - 1,
        verified,
    })
}

/// Runs cases concurrently; they share no state.
pub fn run_cases(cases: &[OracleCase]) -> Vec<Result<OracleReport, HahnError>> {
    std::thread::scope(|s| {
        let handles: Vec<_> = cases
            .iter()
            .map(|c| s.spawn(move || fundamental_equality(c)))
            .collect();
        handles
            .into_iter()
            .map(|h| h.join().expect("oracle case panicked"))
            .collect()
    })
}

/// The built-in tame catalogue over `F_5((Z))` and `F_7((Z))`.
pub fn catalogue() -> Vec<CaseSpec> {
    let hahn = |p| OracleBase::Hahn { p };
    let radical = |n, unit, power| ExtSpec::Radical { n, unit, power };
    let unram = |m| ExtSpec::Unramified {
        degree: Some(m),
        poly: None,
    };
    let unram_poly = |s: &str| ExtSpec::Unramified {
        degree: None,
        poly: Some(s.into()),
    };
    let composite = |steps| ExtSpec::Composite { steps };
    let case = |name: &str, p, ext| CaseSpec {
        name: name.into(),
        base: hahn(p),
        ext,
        witness_order: Some(6),
    };
    vec![
        case("F5 adjoin t^(1/3)", 5, radical(3, 1, 1)),
        case("F5 adjoin t^(1/2)", 5, radical(2, 1, 1)),
        case("F5 unramified X^2 - 2", 5, unram_poly("X^2 - 2")),
        case("F5 unramified degree 3", 5, unram(3)),
        case("F5 adjoin root of X^2 - 2t", 5, radical(2, 2, 1)),
        case("F5 adjoin root of X^4 - 3t^2", 5, ExtSpec::Poly { poly: "X^4 - 3*t^2".into() }),
        case(
            "F5 t^(1/3) then unramified 2",
            5,
            composite(vec![radical(3, 1, 1), unram_poly("X^2 - 2")]),
        ),
        case(
            "F5 unramified 2 then t^(1/2)",
            5,
            composite(vec![unram_poly("X^2 - 2"), radical(2, 1, 1)]),
        ),
        case("F7 unramified X^2 - 3", 7, unram_poly("X^2 - 3")),
        case("F7 unramified X^3 - 2", 7, unram_poly("X^3 - 2")),
        case("F7 adjoin t^(1/5)", 7, radical(5, 1, 1)),
        case("F7 adjoin root of X^4 - 3t^2", 7, ExtSpec::Poly { poly: "X^4 - 3*t^2".into() }),
        case(
            "F7 t^(1/2) then unramified X^3 - 2",
            7,
            composite(vec![radical(2, 1, 1), unram_poly("X^3 - 2")]),
        ),
        case(
            "F7 root of X^2 - 3t then t^(1/2)",
            7,
            composite(vec![radical(2, 3, 1), radical(2, 1, 1)]),
        ),
    ]
}
