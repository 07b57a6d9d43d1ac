//! Distances, similarity measures and a similarity-based decision method
//! for intuitionistic fuzzy soft sets (IFS-sets).
//!
//! The floating-point measures live in [`metrics`] and [`similarity`];
//! [`oracle`] re-evaluates every measure in exact rational arithmetic.

pub mod algebra;
pub mod dataset;
pub mod decision;
pub mod error;
pub mod metrics;
pub mod oracle;
pub mod similarity;
pub mod types;

pub use dataset::{parse_dataset, serialize_dataset, DatasetDocument, DatasetError};
pub use decision::{diagnose, DiagnosisConfig, Measure, Verdict, VerdictReport};
pub use error::{Error, Result, ValueFault};
pub use metrics::{ifss_distance, DistanceKind, NormalizeOver};
pub use oracle::Rational;
pub use similarity::{SimilarityConfig, SimilarityReading};
pub use types::{
    build_ifs_set, validate, validate_with, Assignment, ConstraintMode, Grade, IfSoftSet, IfValue,
    IntuitionisticFuzzySet, ParameterSet, SoftSet, Universe, ValidationReport, Violation,
};
