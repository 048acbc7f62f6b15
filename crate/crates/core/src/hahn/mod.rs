//! Generalized power series with exact coefficients: arithmetic, valuation
//! and residue, truncated inversion, Newton lifting, and a check of the
//! fundamental equality on tame extensions.

mod coeff;
pub mod oracle;
mod series;

pub use coeff::{Coeff, CoeffField, GaloisField, MAX_FIELD_SIZE};
pub use series::{hensel_lift, Gauge, HahnSeries, HenselLift, NewtonStep, Polynomial, ValRes};

use crate::oag::OagError;
use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum HahnError {
    #[error("{0} is not a prime power")]
    NotPrimePower(u64),
    #[error("finite fields are limited to {MAX_FIELD_SIZE} elements, got {0}")]
    FieldTooLarge(u64),
    #[error("{0} has no image in the coefficient field")]
    NotRepresentable(String),
    #[error("exponent groups differ: {left} vs {right}")]
    GroupMismatch { left: String, right: String },
    #[error("coefficient fields differ")]
    FieldMismatch,
    #[error("zero has no inverse")]
    ZeroInverse,
    #[error("gauge element {0} must be positive")]
    BadGauge(String),
    #[error("the exponent group has no minimum positive element; supply a gauge element")]
    NoDefaultGauge,
    #[error("valuation {valuation} is infinitesimal relative to the gauge {gauge}; truncation would not terminate")]
    GaugeTooCoarse { valuation: String, gauge: String },
    #[error("polynomial has no coefficients")]
    EmptyPolynomial,
    #[error("coefficient {0} is not in the valuation ring")]
    NotIntegral(String),
    #[error("{0} is not a root of the residue polynomial")]
    NotResidueRoot(String),
    #[error("{0} is a multiple root of the residue polynomial")]
    NotSimpleRoot(String),
    #[error("ramification index {e} is divisible by {p}; only tame steps are supported")]
    Wild { e: u64, p: u64 },
    #[error("not certified irreducible: {0}")]
    NotCertified(String),
    #[error("unsupported extension: {0}")]
    Unsupported(String),
    #[error("{0}")]
    Parse(String),
    #[error(transparent)]
    Group(#[from] OagError),
}
