//! Universes, parameter sets, intuitionistic fuzzy values and the set
//! structures built from them.
//!
//! Every structure is immutable once built. Element and parameter order is
//! fixed at construction and is the component order of every vector used by
//! the distance and similarity measures.

use std::collections::HashMap;
use std::fmt;
use std::sync::Arc;

use num_rational::BigRational;
use num_traits::{Num, One, ToPrimitive};

use crate::error::{Error, Result, ValueFault};

/// Slack allowed on `mu + nu <= 1` for floating-point grades, absorbing
/// decimal-literal rounding.
pub const SUM_TOLERANCE: f64 = 1e-9;

/// Scalar type for membership grades: `f64` on the fast path, exact
/// rationals for the oracle.
pub trait Grade: Num + Clone + PartialOrd + fmt::Debug {
    fn to_f64(&self) -> f64;

    /// Whether `mu + nu <= 1` holds for this grade type.
    fn sum_admissible(mu: &Self, nu: &Self) -> bool;
}

impl Grade for f64 {
    fn to_f64(&self) -> f64 {
        *self
    }

    fn sum_admissible(mu: &Self, nu: &Self) -> bool {
        mu + nu <= 1.0 + SUM_TOLERANCE
    }
}

impl Grade for BigRational {
    fn to_f64(&self) -> f64 {
        ToPrimitive::to_f64(self).unwrap_or(f64::NAN)
    }

    fn sum_admissible(mu: &Self, nu: &Self) -> bool {
        mu + nu <= BigRational::one()
    }
}

#[derive(Debug)]
struct Names {
    names: Vec<String>,
    index: HashMap<String, usize>,
}

impl Names {
    fn new<I, S>(kind: &'static str, names: I) -> Result<Self>
    where
        I: IntoIterator<Item = S>,
        S: Into<String>,
    {
        let names: Vec<String> = names.into_iter().map(Into::into).collect();
        let mut index = HashMap::with_capacity(names.len());
        for (i, name) in names.iter().enumerate() {
            if name.is_empty() {
                return Err(Error::EmptyName(kind));
            }
            if index.insert(name.clone(), i).is_some() {
                return Err(Error::DuplicateName {
                    kind,
                    name: name.clone(),
                });
            }
        }
        Ok(Names { names, index })
    }
}

macro_rules! ordered_names {
    ($(#[$meta:meta])* $ty:ident, $kind:literal, $empty:expr) => {
        $(#[$meta])*
        #[derive(Clone)]
        pub struct $ty(Arc<Names>);

        impl $ty {
            pub fn new<I, S>(names: I) -> Result<Self>
            where
                I: IntoIterator<Item = S>,
                S: Into<String>,
            {
                let names = Names::new($kind, names)?;
                if names.names.is_empty() {
                    return Err($empty);
                }
                Ok($ty(Arc::new(names)))
            }

            pub fn len(&self) -> usize {
                self.0.names.len()
            }

            /// Always false; kept for the `len`/`is_empty` pairing.
            pub fn is_empty(&self) -> bool {
                self.0.names.is_empty()
            }

            pub fn names(&self) -> &[String] {
                &self.0.names
            }

            pub fn name(&self, index: usize) -> &str {
                &self.0.names[index]
            }

            pub fn index_of(&self, name: &str) -> Option<usize> {
                self.0.index.get(name).copied()
            }
        }

        impl PartialEq for $ty {
            fn eq(&self, other: &Self) -> bool {
                Arc::ptr_eq(&self.0, &other.0) || self.0.names == other.0.names
            }
        }

        impl Eq for $ty {}

        impl fmt::Debug for $ty {
            fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
                f.debug_tuple(stringify!($ty)).field(&self.0.names).finish()
            }
        }
    };
}

ordered_names!(
    /// The ordered universe `u_1..u_n` of objects under consideration.
    Universe,
    "element",
    Error::EmptyUniverse
);

ordered_names!(
    /// The ordered parameter set `x_1..x_m`.
    ParameterSet,
    "parameter",
    Error::EmptyParameterSet
);

/// A (membership, non-membership) pair with `mu, nu` in `[0,1]` and
/// `mu + nu <= 1`.
#[derive(Debug, Clone, PartialEq)]
pub struct IfValue<T = f64> {
    mu: T,
    nu: T,
}

impl<T: Grade> IfValue<T> {
    pub fn new(mu: T, nu: T) -> std::result::Result<Self, ValueFault> {
        let value = IfValue { mu, nu };
        match value.fault(ConstraintMode::Strict) {
            Some(fault) => Err(fault),
            None => Ok(value),
        }
    }

    /// Builds a value without checking any constraint.
    pub fn new_unchecked(mu: T, nu: T) -> Self {
        IfValue { mu, nu }
    }

    /// The empty value `(0, 1)`.
    pub fn empty() -> Self {
        IfValue {
            mu: T::zero(),
            nu: T::one(),
        }
    }

    /// The full value `(1, 0)`.
    pub fn full() -> Self {
        IfValue {
            mu: T::one(),
            nu: T::zero(),
        }
    }

    pub fn mu(&self) -> &T {
        &self.mu
    }

    pub fn nu(&self) -> &T {
        &self.nu
    }

    pub fn is_empty(&self) -> bool {
        self.mu.is_zero() && self.nu.is_one()
    }

    /// First constraint this value breaks under `mode`, if any.
    pub fn fault(&self, mode: ConstraintMode) -> Option<ValueFault> {
        let unit = |v: &T| *v >= T::zero() && *v <= T::one();
        if !unit(&self.mu) {
            return Some(ValueFault::MuOutOfRange(self.mu.to_f64()));
        }
        if !unit(&self.nu) {
            return Some(ValueFault::NuOutOfRange(self.nu.to_f64()));
        }
        if mode == ConstraintMode::Strict && !T::sum_admissible(&self.mu, &self.nu) {
            return Some(ValueFault::SumExceedsOne {
                mu: self.mu.to_f64(),
                nu: self.nu.to_f64(),
            });
        }
        None
    }

    pub fn to_f64(&self) -> IfValue<f64> {
        IfValue {
            mu: self.mu.to_f64(),
            nu: self.nu.to_f64(),
        }
    }
}

/// Which constraints a set's values must satisfy.
///
/// `Relaxed` drops `mu + nu <= 1` but keeps both grades inside `[0,1]`; it
/// exists for published data sets that break the sum constraint.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum ConstraintMode {
    #[default]
    Strict,
    Relaxed,
}

/// An intuitionistic fuzzy set over a universe: one [`IfValue`] per element.
#[derive(Debug, Clone, PartialEq)]
pub struct IntuitionisticFuzzySet<T = f64> {
    universe: Universe,
    values: Vec<IfValue<T>>,
}

impl<T: Grade> IntuitionisticFuzzySet<T> {
    /// Every element at `(0, 1)`.
    pub fn empty(universe: &Universe) -> Self {
        IntuitionisticFuzzySet {
            universe: universe.clone(),
            values: vec![IfValue::empty(); universe.len()],
        }
    }

    /// Every element at `(1, 0)`.
    pub fn full(universe: &Universe) -> Self {
        IntuitionisticFuzzySet {
            universe: universe.clone(),
            values: vec![IfValue::full(); universe.len()],
        }
    }

    /// Values in universe order. Each value is checked strictly.
    pub fn from_values(universe: &Universe, values: Vec<IfValue<T>>) -> Result<Self> {
        if values.len() != universe.len() {
            return Err(Error::LengthMismatch {
                expected: universe.len(),
                found: values.len(),
            });
        }
        for (j, v) in values.iter().enumerate() {
            if let Some(fault) = v.fault(ConstraintMode::Strict) {
                return Err(Error::InvalidElementValue {
                    element: universe.name(j).to_string(),
                    fault,
                });
            }
        }
        Ok(IntuitionisticFuzzySet {
            universe: universe.clone(),
            values,
        })
    }

    /// Named values; unlisted elements default to `(0, 1)`.
    pub fn from_pairs<'a, I>(universe: &Universe, pairs: I) -> Result<Self>
    where
        I: IntoIterator<Item = (&'a str, IfValue<T>)>,
    {
        let mut values = vec![IfValue::empty(); universe.len()];
        let mut seen = vec![false; universe.len()];
        for (name, value) in pairs {
            let j = universe
                .index_of(name)
                .ok_or_else(|| Error::UnknownElement(name.to_string()))?;
            if std::mem::replace(&mut seen[j], true) {
                return Err(Error::DuplicateName {
                    kind: "element",
                    name: name.to_string(),
                });
            }
            values[j] = value;
        }
        Self::from_values(universe, values)
    }

    pub(crate) fn from_raw(universe: &Universe, values: Vec<IfValue<T>>) -> Self {
        debug_assert_eq!(values.len(), universe.len());
        IntuitionisticFuzzySet {
            universe: universe.clone(),
            values,
        }
    }

    pub fn universe(&self) -> &Universe {
        &self.universe
    }

    pub fn values(&self) -> &[IfValue<T>] {
        &self.values
    }

    pub fn get(&self, index: usize) -> &IfValue<T> {
        &self.values[index]
    }

    pub fn value_of(&self, element: &str) -> Option<&IfValue<T>> {
        self.universe.index_of(element).map(|j| &self.values[j])
    }

    pub fn is_empty(&self) -> bool {
        self.values.iter().all(IfValue::is_empty)
    }

    pub fn to_f64(&self) -> IntuitionisticFuzzySet<f64> {
        IntuitionisticFuzzySet {
            universe: self.universe.clone(),
            values: self.values.iter().map(IfValue::to_f64).collect(),
        }
    }
}

/// A crisp soft set: each supported parameter maps to a subset of the universe.
#[derive(Debug, Clone, PartialEq)]
pub struct SoftSet {
    universe: Universe,
    parameters: ParameterSet,
    support: Vec<bool>,
    // approx[i][j] is the characteristic value of u_j in f(x_i)
    approx: Vec<Vec<bool>>,
}

impl SoftSet {
    /// `assignments` pairs a supported parameter with the elements of its
    /// approximation. Supported parameters without an assignment map to the
    /// empty set.
    pub fn new<S: AsRef<str>>(
        universe: &Universe,
        parameters: &ParameterSet,
        support: &[S],
        assignments: &[(S, Vec<S>)],
    ) -> Result<Self> {
        let support = support_mask(parameters, support)?;
        let mut approx = vec![vec![false; universe.len()]; parameters.len()];
        let mut assigned = vec![false; parameters.len()];
        for (parameter, elements) in assignments {
            let parameter = parameter.as_ref();
            let i = parameters
                .index_of(parameter)
                .ok_or_else(|| Error::UnknownParameter(parameter.to_string()))?;
            if !support[i] {
                return Err(Error::NotInSupport(parameter.to_string()));
            }
            if std::mem::replace(&mut assigned[i], true) {
                return Err(Error::DuplicateName {
                    kind: "parameter",
                    name: parameter.to_string(),
                });
            }
            for element in elements {
                let element = element.as_ref();
                let j = universe
                    .index_of(element)
                    .ok_or_else(|| Error::UnknownElement(element.to_string()))?;
                approx[i][j] = true;
            }
        }
        Ok(SoftSet {
            universe: universe.clone(),
            parameters: parameters.clone(),
            support,
            approx,
        })
    }

    pub fn universe(&self) -> &Universe {
        &self.universe
    }

    pub fn parameters(&self) -> &ParameterSet {
        &self.parameters
    }

    pub fn in_support(&self, parameter: usize) -> bool {
        self.support[parameter]
    }

    pub fn support_len(&self) -> usize {
        self.support.iter().filter(|s| **s).count()
    }

    /// Characteristic vector of the approximation of parameter `i`.
    pub fn characteristic(&self, parameter: usize) -> &[bool] {
        &self.approx[parameter]
    }

    pub fn contains(&self, parameter: usize, element: usize) -> bool {
        self.approx[parameter][element]
    }
}

/// An intuitionistic fuzzy soft set: each parameter maps to an
/// [`IntuitionisticFuzzySet`] over a shared universe, and parameters outside
/// the support map to the empty set `(0, 1)` everywhere.
#[derive(Debug, Clone, PartialEq)]
pub struct IfSoftSet<T = f64> {
    universe: Universe,
    parameters: ParameterSet,
    support: Vec<bool>,
    approx: Vec<IntuitionisticFuzzySet<T>>,
    mode: ConstraintMode,
    label: Option<String>,
}

impl<T: Grade> IfSoftSet<T> {
    pub fn builder(universe: &Universe, parameters: &ParameterSet) -> IfSoftSetBuilder<T> {
        IfSoftSetBuilder {
            universe: universe.clone(),
            parameters: parameters.clone(),
            support: Vec::new(),
            assignments: Vec::new(),
            mode: ConstraintMode::Strict,
            label: None,
        }
    }

    pub fn universe(&self) -> &Universe {
        &self.universe
    }

    pub fn parameters(&self) -> &ParameterSet {
        &self.parameters
    }

    pub fn mode(&self) -> ConstraintMode {
        self.mode
    }

    pub fn label(&self) -> Option<&str> {
        self.label.as_deref()
    }

    pub fn with_label(mut self, label: impl Into<String>) -> Self {
        self.label = Some(label.into());
        self
    }

    pub fn in_support(&self, parameter: usize) -> bool {
        self.support[parameter]
    }

    pub fn support_mask(&self) -> &[bool] {
        &self.support
    }

    pub fn support_len(&self) -> usize {
        self.support.iter().filter(|s| **s).count()
    }

    /// Names of the supported parameters, in parameter order.
    pub fn support_names(&self) -> Vec<String> {
        self.support
            .iter()
            .enumerate()
            .filter(|(_, s)| **s)
            .map(|(i, _)| self.parameters.name(i).to_string())
            .collect()
    }

    /// The approximation of parameter `i`.
    pub fn approx(&self, parameter: usize) -> &IntuitionisticFuzzySet<T> {
        &self.approx[parameter]
    }

    pub fn approx_of(&self, parameter: &str) -> Option<&IntuitionisticFuzzySet<T>> {
        self.parameters
            .index_of(parameter)
            .map(|i| &self.approx[i])
    }

    pub fn value(&self, parameter: usize, element: usize) -> &IfValue<T> {
        self.approx[parameter].get(element)
    }

    /// Converts every grade to `f64`, keeping structure, mode and label.
    pub fn to_f64(&self) -> IfSoftSet<f64> {
        IfSoftSet {
            universe: self.universe.clone(),
            parameters: self.parameters.clone(),
            support: self.support.clone(),
            approx: self.approx.iter().map(IntuitionisticFuzzySet::to_f64).collect(),
            mode: self.mode,
            label: self.label.clone(),
        }
    }

    /// Assembles a set from per-parameter approximations without checking
    /// values. Use [`validate`] to inspect the result.
    pub fn from_parts_unchecked(
        universe: &Universe,
        parameters: &ParameterSet,
        support: Vec<bool>,
        approx: Vec<Vec<IfValue<T>>>,
        mode: ConstraintMode,
    ) -> Result<Self> {
        if support.len() != parameters.len() {
            return Err(Error::LengthMismatch {
                expected: parameters.len(),
                found: support.len(),
            });
        }
        if approx.len() != parameters.len() {
            return Err(Error::LengthMismatch {
                expected: parameters.len(),
                found: approx.len(),
            });
        }
        let mut sets = Vec::with_capacity(approx.len());
        for row in approx {
            if row.len() != universe.len() {
                return Err(Error::LengthMismatch {
                    expected: universe.len(),
                    found: row.len(),
                });
            }
            sets.push(IntuitionisticFuzzySet::from_raw(universe, row));
        }
        Ok(IfSoftSet {
            universe: universe.clone(),
            parameters: parameters.clone(),
            support,
            approx: sets,
            mode,
            label: None,
        })
    }

    pub fn same_frame(&self, other: &Self) -> Result<()> {
        if self.universe != other.universe {
            return Err(Error::UniverseMismatch);
        }
        if self.parameters != other.parameters {
            return Err(Error::ParameterSetMismatch);
        }
        Ok(())
    }

    /// Equality of approximations, ignoring support, mode and label.
    pub fn same_approximations(&self, other: &Self) -> bool {
        self.universe == other.universe
            && self.parameters == other.parameters
            && self.approx == other.approx
    }
}

/// One cell of an IFS-set: a value for `element` under `parameter`.
#[derive(Debug, Clone, PartialEq)]
pub struct Assignment<T = f64> {
    pub parameter: String,
    pub element: String,
    pub mu: T,
    pub nu: T,
}

impl<T> Assignment<T> {
    pub fn new(parameter: impl Into<String>, element: impl Into<String>, mu: T, nu: T) -> Self {
        Assignment {
            parameter: parameter.into(),
            element: element.into(),
            mu,
            nu,
        }
    }
}

pub struct IfSoftSetBuilder<T = f64> {
    universe: Universe,
    parameters: ParameterSet,
    support: Vec<String>,
    assignments: Vec<Assignment<T>>,
    mode: ConstraintMode,
    label: Option<String>,
}

impl<T: Grade> IfSoftSetBuilder<T> {
    pub fn support<I, S>(mut self, parameters: I) -> Self
    where
        I: IntoIterator<Item = S>,
        S: Into<String>,
    {
        self.support.extend(parameters.into_iter().map(Into::into));
        self
    }

    pub fn assign(
        mut self,
        parameter: impl Into<String>,
        element: impl Into<String>,
        mu: T,
        nu: T,
    ) -> Self {
        self.assignments
            .push(Assignment::new(parameter, element, mu, nu));
        self
    }

    pub fn assignments<I: IntoIterator<Item = Assignment<T>>>(mut self, assignments: I) -> Self {
        self.assignments.extend(assignments);
        self
    }

    pub fn mode(mut self, mode: ConstraintMode) -> Self {
        self.mode = mode;
        self
    }

    pub fn label(mut self, label: impl Into<String>) -> Self {
        self.label = Some(label.into());
        self
    }

    pub fn build(self) -> Result<IfSoftSet<T>> {
        let universe = self.universe;
        let parameters = self.parameters;
        let support = support_mask(&parameters, &self.support)?;
        let mut approx = vec![vec![IfValue::<T>::empty(); universe.len()]; parameters.len()];
        let mut seen = vec![vec![false; universe.len()]; parameters.len()];
        for a in self.assignments {
            let i = parameters
                .index_of(&a.parameter)
                .ok_or_else(|| Error::UnknownParameter(a.parameter.clone()))?;
            let j = universe
                .index_of(&a.element)
                .ok_or_else(|| Error::UnknownElement(a.element.clone()))?;
            if !support[i] {
                return Err(Error::NotInSupport(a.parameter));
            }
            if std::mem::replace(&mut seen[i][j], true) {
                return Err(Error::DuplicateAssignment {
                    parameter: a.parameter,
                    element: a.element,
                });
            }
            let value = IfValue::new_unchecked(a.mu, a.nu);
            if let Some(fault) = value.fault(self.mode) {
                return Err(Error::InvalidValue {
                    parameter: a.parameter,
                    element: a.element,
                    fault,
                });
            }
            approx[i][j] = value;
        }
        let mut set =
            IfSoftSet::from_parts_unchecked(&universe, &parameters, support, approx, self.mode)?;
        set.label = self.label;
        Ok(set)
    }
}

/// Builds and validates an IFS-set in one call. Unassigned elements of a
/// supported parameter default to `(0, 1)`.
pub fn build_ifs_set<T: Grade, S: AsRef<str>>(
    universe: &Universe,
    parameters: &ParameterSet,
    support: &[S],
    assignments: Vec<Assignment<T>>,
) -> Result<IfSoftSet<T>> {
    IfSoftSet::builder(universe, parameters)
        .support(support.iter().map(|s| s.as_ref().to_string()))
        .assignments(assignments)
        .build()
}

fn support_mask<S: AsRef<str>>(parameters: &ParameterSet, support: &[S]) -> Result<Vec<bool>> {
    let mut mask = vec![false; parameters.len()];
    for name in support {
        let name = name.as_ref();
        let i = parameters
            .index_of(name)
            .ok_or_else(|| Error::UnknownParameter(name.to_string()))?;
        if std::mem::replace(&mut mask[i], true) {
            return Err(Error::DuplicateName {
                kind: "parameter",
                name: name.to_string(),
            });
        }
    }
    Ok(mask)
}

#[derive(Debug, Clone, PartialEq)]
pub struct Violation {
    pub parameter: String,
    pub element: String,
    pub fault: ValueFault,
}

impl fmt::Display for Violation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{} at ({}, {})", self.fault, self.parameter, self.element)
    }
}

/// Every invariant violation found in a set; empty means valid.
#[derive(Debug, Clone, Default, PartialEq)]
pub struct ValidationReport {
    pub violations: Vec<Violation>,
}

impl ValidationReport {
    pub fn is_valid(&self) -> bool {
        self.violations.is_empty()
    }
}

/// Checks a set against the constraints of its own [`ConstraintMode`].
pub fn validate<T: Grade>(set: &IfSoftSet<T>) -> ValidationReport {
    validate_with(set, set.mode())
}

/// Checks a set against the constraints of `mode`.
pub fn validate_with<T: Grade>(set: &IfSoftSet<T>, mode: ConstraintMode) -> ValidationReport {
    let mut violations = Vec::new();
    for (i, approx) in set.approx.iter().enumerate() {
        for (j, value) in approx.values().iter().enumerate() {
            let fault = if set.in_support(i) {
                value.fault(mode)
            } else if !value.is_empty() {
                Some(ValueFault::OutsideSupport {
                    mu: value.mu().to_f64(),
                    nu: value.nu().to_f64(),
                })
            } else {
                None
            };
            if let Some(fault) = fault {
                violations.push(Violation {
                    parameter: set.parameters.name(i).to_string(),
                    element: set.universe.name(j).to_string(),
                    fault,
                });
            }
        }
    }
    ValidationReport { violations }
}
