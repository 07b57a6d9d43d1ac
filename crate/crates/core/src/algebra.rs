//! Relations and operations on intuitionistic fuzzy sets.
//!
//! Binary operations require both operands to share a universe; mismatched
//! universes are an error rather than an implicit extension.

use crate::error::{Error, Result};
use crate::types::{Grade, IfValue, IntuitionisticFuzzySet};

fn same_universe<T: Grade>(a: &IntuitionisticFuzzySet<T>, b: &IntuitionisticFuzzySet<T>) -> Result<()> {
    if a.universe() == b.universe() {
        Ok(())
    } else {
        Err(Error::UniverseMismatch)
    }
}

fn zip_with<T, F>(
    a: &IntuitionisticFuzzySet<T>,
    b: &IntuitionisticFuzzySet<T>,
    f: F,
) -> Result<IntuitionisticFuzzySet<T>>
where
    T: Grade,
    F: Fn(&IfValue<T>, &IfValue<T>) -> IfValue<T>,
{
    same_universe(a, b)?;
    let values = a
        .values()
        .iter()
        .zip(b.values())
        .map(|(x, y)| f(x, y))
        .collect();
    Ok(IntuitionisticFuzzySet::from_raw(a.universe(), values))
}

fn max<T: Grade>(a: &T, b: &T) -> T {
    if a >= b { a.clone() } else { b.clone() }
}

fn min<T: Grade>(a: &T, b: &T) -> T {
    if a <= b { a.clone() } else { b.clone() }
}

/// Non-strict inclusion: `mu_A <= mu_B` and `nu_A >= nu_B` everywhere.
pub fn if_subset<T: Grade>(a: &IntuitionisticFuzzySet<T>, b: &IntuitionisticFuzzySet<T>) -> Result<bool> {
    same_universe(a, b)?;
    Ok(a
        .values()
        .iter()
        .zip(b.values())
        .all(|(x, y)| x.mu() <= y.mu() && x.nu() >= y.nu()))
}

pub fn if_equal<T: Grade>(a: &IntuitionisticFuzzySet<T>, b: &IntuitionisticFuzzySet<T>) -> Result<bool> {
    same_universe(a, b)?;
    Ok(a.values() == b.values())
}

/// Swaps membership and non-membership.
pub fn if_complement<T: Grade>(a: &IntuitionisticFuzzySet<T>) -> IntuitionisticFuzzySet<T> {
    let values = a
        .values()
        .iter()
        .map(|v| IfValue::new_unchecked(v.nu().clone(), v.mu().clone()))
        .collect();
    IntuitionisticFuzzySet::from_raw(a.universe(), values)
}

/// `(max mu, min nu)` pointwise.
pub fn if_union<T: Grade>(
    a: &IntuitionisticFuzzySet<T>,
    b: &IntuitionisticFuzzySet<T>,
) -> Result<IntuitionisticFuzzySet<T>> {
    zip_with(a, b, |x, y| {
        IfValue::new_unchecked(max(x.mu(), y.mu()), min(x.nu(), y.nu()))
    })
}

/// `(min mu, max nu)` pointwise.
pub fn if_intersection<T: Grade>(
    a: &IntuitionisticFuzzySet<T>,
    b: &IntuitionisticFuzzySet<T>,
) -> Result<IntuitionisticFuzzySet<T>> {
    zip_with(a, b, |x, y| {
        IfValue::new_unchecked(min(x.mu(), y.mu()), max(x.nu(), y.nu()))
    })
}

/// Algebraic sum: `mu = mu_A + mu_B - mu_A mu_B`, `nu = nu_A nu_B`.
pub fn if_sum<T: Grade>(
    a: &IntuitionisticFuzzySet<T>,
    b: &IntuitionisticFuzzySet<T>,
) -> Result<IntuitionisticFuzzySet<T>> {
    zip_with(a, b, |x, y| {
        let mu = x.mu().clone() + y.mu().clone() - x.mu().clone() * y.mu().clone();
        let nu = x.nu().clone() * y.nu().clone();
        IfValue::new_unchecked(mu, nu)
    })
}

/// Algebraic product: `mu = mu_A mu_B`, `nu = nu_A + nu_B - nu_A nu_B`.
pub fn if_product<T: Grade>(
    a: &IntuitionisticFuzzySet<T>,
    b: &IntuitionisticFuzzySet<T>,
) -> Result<IntuitionisticFuzzySet<T>> {
    zip_with(a, b, |x, y| {
        let mu = x.mu().clone() * y.mu().clone();
        let nu = x.nu().clone() + y.nu().clone() - x.nu().clone() * y.nu().clone();
        IfValue::new_unchecked(mu, nu)
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::types::Universe;

    fn single(mu: f64, nu: f64) -> IntuitionisticFuzzySet {
        let u = Universe::new(["u1"]).unwrap();
        IntuitionisticFuzzySet::from_values(&u, vec![IfValue::new(mu, nu).unwrap()]).unwrap()
    }

    fn cell(set: &IntuitionisticFuzzySet) -> (f64, f64) {
        let v = set.get(0);
        (*v.mu(), *v.nu())
    }

    fn close(a: (f64, f64), b: (f64, f64)) -> bool {
        (a.0 - b.0).abs() < 1e-12 && (a.1 - b.1).abs() < 1e-12
    }

    #[test]
    fn subset_cases() {
        let a = single(0.5, 0.4);
        let b = single(0.6, 0.4);
        assert!(if_subset(&a, &a).unwrap());
        assert!(if_subset(&a, &b).unwrap());
        assert!(!if_subset(&b, &a).unwrap());
        let empty = IntuitionisticFuzzySet::empty(a.universe());
        assert!(if_subset(&empty, &b).unwrap());
    }

    #[test]
    fn equality() {
        let a = single(0.5, 0.4);
        assert!(if_equal(&a, &a).unwrap());
        assert!(!if_equal(&a, &single(0.5, 0.3)).unwrap());
    }

    #[test]
    fn complement() {
        let empty = IntuitionisticFuzzySet::<f64>::empty(&Universe::new(["u1"]).unwrap());
        assert_eq!(cell(&if_complement(&empty)), (1.0, 0.0));
        assert_eq!(cell(&if_complement(&single(0.6, 0.3))), (0.3, 0.6));
        let a = single(0.6, 0.3);
        assert_eq!(if_complement(&if_complement(&a)), a);
    }

    #[test]
    fn union_and_intersection() {
        let a = single(0.5, 0.4);
        let b = single(0.3, 0.2);
        assert_eq!(cell(&if_union(&a, &b).unwrap()), (0.5, 0.2));
        assert_eq!(cell(&if_intersection(&a, &b).unwrap()), (0.3, 0.4));
        assert_eq!(if_union(&a, &a).unwrap(), a);
        assert_eq!(if_intersection(&a, &a).unwrap(), a);
        let empty = IntuitionisticFuzzySet::empty(a.universe());
        assert_eq!(if_union(&a, &empty).unwrap(), a);
        assert_eq!(if_intersection(&a, &empty).unwrap(), empty);
    }

    #[test]
    fn sum_and_product() {
        let a = single(0.5, 0.5);
        assert!(close(cell(&if_sum(&a, &a).unwrap()), (0.75, 0.25)));
        assert!(close(cell(&if_product(&a, &a).unwrap()), (0.25, 0.75)));
        let b = single(0.3, 0.6);
        let empty = IntuitionisticFuzzySet::empty(a.universe());
        let full = IntuitionisticFuzzySet::full(a.universe());
        assert_eq!(if_sum(&b, &empty).unwrap(), b);
        assert_eq!(if_product(&b, &full).unwrap(), b);
    }

    #[test]
    fn universe_mismatch_is_an_error() {
        let a = single(0.5, 0.4);
        let other = Universe::new(["v1"]).unwrap();
        let b = IntuitionisticFuzzySet::empty(&other);
        assert_eq!(if_union(&a, &b).unwrap_err(), Error::UniverseMismatch);
        assert_eq!(if_subset(&a, &b).unwrap_err(), Error::UniverseMismatch);
    }
}
