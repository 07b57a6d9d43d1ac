#![allow(dead_code)]

use ifsoft::oracle::{ratio, Rational};
use ifsoft::{ConstraintMode, IfSoftSet, IfValue, ParameterSet, Universe};
use proptest::prelude::*;

pub fn frame(n: usize, m: usize) -> (Universe, ParameterSet) {
    (
        Universe::new((1..=n).map(|j| format!("u{j}"))).unwrap(),
        ParameterSet::new((1..=m).map(|i| format!("x{i}"))).unwrap(),
    )
}

/// A two-decimal IF value.
pub fn arb_cell() -> impl Strategy<Value = (i64, i64)> {
    (0i64..=100).prop_flat_map(|mu| (Just(mu), 0i64..=100 - mu))
}

pub fn to_value((mu, nu): (i64, i64)) -> IfValue<Rational> {
    IfValue::new(ratio(mu, 100), ratio(nu, 100)).unwrap()
}

pub fn assemble(n: usize, m: usize, support: Vec<bool>, cells: Vec<(i64, i64)>) -> IfSoftSet<Rational> {
    let (u, e) = frame(n, m);
    let rows = (0..m)
        .map(|i| {
            (0..n)
                .map(|j| {
                    if support[i] {
                        to_value(cells[i * n + j])
                    } else {
                        IfValue::empty()
                    }
                })
                .collect()
        })
        .collect();
    IfSoftSet::from_parts_unchecked(&u, &e, support, rows, ConstraintMode::Strict).unwrap()
}

pub fn arb_support(m: usize) -> impl Strategy<Value = Vec<bool>> {
    prop::collection::vec(any::<bool>(), m)
}

pub fn arb_set_with(n: usize, m: usize, support: Vec<bool>) -> impl Strategy<Value = IfSoftSet<Rational>> {
    prop::collection::vec(arb_cell(), n * m)
        .prop_map(move |cells| assemble(n, m, support.clone(), cells))
}

pub fn arb_set(n: usize, m: usize) -> impl Strategy<Value = IfSoftSet<Rational>> {
    arb_support(m).prop_flat_map(move |s| arb_set_with(n, m, s))
}

pub fn dims() -> impl Strategy<Value = (usize, usize)> {
    (1usize..=8, 1usize..=8)
}

/// Two sets over one frame, independent supports.
pub fn arb_pair() -> impl Strategy<Value = (IfSoftSet<Rational>, IfSoftSet<Rational>)> {
    dims().prop_flat_map(|(n, m)| (arb_set(n, m), arb_set(n, m)))
}

/// Two sets over one frame sharing a support.
pub fn arb_pair_shared() -> impl Strategy<Value = (IfSoftSet<Rational>, IfSoftSet<Rational>)> {
    dims().prop_flat_map(|(n, m)| {
        arb_support(m).prop_flat_map(move |s| (arb_set_with(n, m, s.clone()), arb_set_with(n, m, s)))
    })
}

pub fn arb_triple() -> impl Strategy<Value = [IfSoftSet<Rational>; 3]> {
    dims().prop_flat_map(|(n, m)| (arb_set(n, m), arb_set(n, m), arb_set(n, m)).prop_map(|(a, b, c)| [a, b, c]))
}

pub fn arb_triple_shared() -> impl Strategy<Value = [IfSoftSet<Rational>; 3]> {
    dims().prop_flat_map(|(n, m)| {
        arb_support(m).prop_flat_map(move |s| {
            (
                arb_set_with(n, m, s.clone()),
                arb_set_with(n, m, s.clone()),
                arb_set_with(n, m, s),
            )
                .prop_map(|(a, b, c)| [a, b, c])
        })
    })
}

/// `|a - b| <= 1e-12 * max(1, |b|)`
pub fn agrees(float: f64, exact: f64) -> bool {
    (float - exact).abs() <= 1e-12 * exact.abs().max(1.0)
}
