//! Classification of henselian valued fields by NIP status, with an
//! executable Hahn-series engine for checking the valuation-theoretic
//! predicates the classification relies on.

pub mod classifier;
pub mod dsl;
pub mod fields;
pub mod hahn;
pub mod oag;
pub mod theories;
pub mod tri;
pub mod valfield;

pub use fields::{FieldDesc, FieldError, ImpDegree};
pub use oag::{GroupElement, OAGDesc, OagError};
pub use tri::Tri;
