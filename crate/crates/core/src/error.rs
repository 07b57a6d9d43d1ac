use std::fmt;

use thiserror::Error;

/// What is wrong with a single (membership, non-membership) pair.
#[derive(Debug, Clone, Copy, PartialEq)]
pub enum ValueFault {
    MuOutOfRange(f64),
    NuOutOfRange(f64),
    SumExceedsOne { mu: f64, nu: f64 },
    /// A parameter outside the support carries something other than (0, 1).
    OutsideSupport { mu: f64, nu: f64 },
}

impl fmt::Display for ValueFault {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            ValueFault::MuOutOfRange(mu) => write!(f, "mu={mu} outside [0,1]"),
            ValueFault::NuOutOfRange(nu) => write!(f, "nu={nu} outside [0,1]"),
            ValueFault::SumExceedsOne { mu, nu } => write!(f, "mu+nu>1 ({mu} + {nu})"),
            ValueFault::OutsideSupport { mu, nu } => {
                write!(f, "non-empty value ({mu}, {nu}) outside the support")
            }
        }
    }
}

#[derive(Debug, Clone, PartialEq, Error)]
pub enum Error {
    #[error("universe must contain at least one element")]
    EmptyUniverse,
    #[error("parameter set must contain at least one parameter")]
    EmptyParameterSet,
    #[error("empty identifier in {0}")]
    EmptyName(&'static str),
    #[error("duplicate {kind} `{name}`")]
    DuplicateName { kind: &'static str, name: String },
    #[error("unknown element `{0}`")]
    UnknownElement(String),
    #[error("unknown parameter `{0}`")]
    UnknownParameter(String),
    #[error("parameter `{0}` is assigned values but is not in the support")]
    NotInSupport(String),
    #[error("duplicate assignment at ({parameter}, {element})")]
    DuplicateAssignment { parameter: String, element: String },
    #[error("{fault} at ({parameter}, {element})")]
    InvalidValue {
        parameter: String,
        element: String,
        fault: ValueFault,
    },
    #[error("{fault} at {element}")]
    InvalidElementValue { element: String, fault: ValueFault },
    #[error("expected {expected} values, found {found}")]
    LengthMismatch { expected: usize, found: usize },
    #[error("operands are defined over different universes")]
    UniverseMismatch,
    #[error("operands are defined over different parameter sets")]
    ParameterSetMismatch,
    #[error("supports differ: {{{}}} vs {{{}}}", left.join(", "), right.join(", "))]
    SupportMismatch { left: Vec<String>, right: Vec<String> },
    #[error(
        "s_ifs needs equal supports ({{{}}} vs {{{}}}); use s_prime or s_exp instead",
        left.join(", "),
        right.join(", ")
    )]
    MeasureSupportMismatch { left: Vec<String>, right: Vec<String> },
    #[error("no set named `{0}`")]
    UnknownSet(String),
    #[error("similarity is undefined: {0}")]
    UndefinedSimilarity(&'static str),
    #[error("steepness alpha must be positive, got {0}")]
    InvalidAlpha(f64),
    #[error("threshold must lie in (0,1), got {0}")]
    InvalidThreshold(f64),
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
