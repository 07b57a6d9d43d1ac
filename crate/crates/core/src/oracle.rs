//! Exact rational reference implementations of every distance and
//! similarity.
//!
//! These are deliberately written as plain loops over cell coordinates and
//! share no code with the floating-point measures, so they can check them.
//! Euclidean kinds return the exact *square* of the distance.

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};
use crate::metrics::{DistanceKind, NormalizeOver};
use crate::similarity::SimilarityReading;
use crate::types::{IfSoftSet, IntuitionisticFuzzySet, SoftSet};

/// Arbitrary-precision rational, always in lowest terms with a positive
/// denominator.
pub type Rational = BigRational;

pub fn int(n: i64) -> Rational {
    Rational::from_integer(BigInt::from(n))
}

pub fn ratio(num: i64, den: i64) -> Rational {
    Rational::new(BigInt::from(num), BigInt::from(den))
}

fn cell_term(mu_a: &Rational, nu_a: &Rational, mu_b: &Rational, nu_b: &Rational, squared: bool) -> Rational {
    let dm = mu_a - mu_b;
    let dn = nu_a - nu_b;
    if squared {
        &dm * &dm + &dn * &dn
    } else {
        dm.abs() + dn.abs()
    }
}

fn scale(kind: DistanceKind, total: Rational, m: usize, n: usize, halve: bool) -> Rational {
    let mut den = int(m as i64);
    if halve {
        den *= int(2);
    }
    if matches!(
        kind,
        DistanceKind::NormalizedHamming | DistanceKind::NormalizedEuclidean
    ) {
        den *= int(n as i64);
    }
    total / den
}

fn squared(kind: DistanceKind) -> bool {
    matches!(kind, DistanceKind::Euclidean | DistanceKind::NormalizedEuclidean)
}

/// Exact IF-set distance (squared for Euclidean kinds).
pub fn oracle_if_distance(
    a: &IntuitionisticFuzzySet<Rational>,
    b: &IntuitionisticFuzzySet<Rational>,
    kind: DistanceKind,
) -> Result<Rational> {
    if a.universe() != b.universe() {
        return Err(Error::UniverseMismatch);
    }
    let n = a.universe().len();
    let mut total = Rational::zero();
    for j in 0..n {
        let (x, y) = (a.get(j), b.get(j));
        total += cell_term(x.mu(), x.nu(), y.mu(), y.nu(), squared(kind));
    }
    Ok(scale(kind, total, 1, n, true))
}

fn parameter_count(left: impl Fn(usize) -> bool, right: impl Fn(usize) -> bool, total: usize, normalize: NormalizeOver) -> usize {
    if normalize == NormalizeOver::Full {
        return total;
    }
    let mut union = 0;
    for i in 0..total {
        if left(i) || right(i) {
            union += 1;
        }
    }
    if union == 0 {
        total
    } else {
        union
    }
}

/// Exact soft-set distance (squared for Euclidean kinds).
pub fn oracle_soft_distance(
    f: &SoftSet,
    g: &SoftSet,
    kind: DistanceKind,
    normalize: NormalizeOver,
) -> Result<Rational> {
    if f.universe() != g.universe() {
        return Err(Error::UniverseMismatch);
    }
    if f.parameters() != g.parameters() {
        return Err(Error::ParameterSetMismatch);
    }
    let m_total = f.parameters().len();
    let n = f.universe().len();
    let m = parameter_count(|i| f.in_support(i), |i| g.in_support(i), m_total, normalize);
    let mut total = Rational::zero();
    for i in 0..m_total {
        for j in 0..n {
            let a = if f.contains(i, j) { int(1) } else { int(0) };
            let b = if g.contains(i, j) { int(1) } else { int(0) };
            let d = a - b;
            total += if squared(kind) { &d * &d } else { d.abs() };
        }
    }
    Ok(scale(kind, total, m, n, false))
}

/// Exact soft-set similarity over characteristic vectors.
pub fn oracle_soft_similarity(f: &SoftSet, g: &SoftSet) -> Result<Rational> {
    if f.universe() != g.universe() {
        return Err(Error::UniverseMismatch);
    }
    if f.parameters() != g.parameters() {
        return Err(Error::ParameterSetMismatch);
    }
    let m = f.parameters().len();
    let n = f.universe().len();
    if f.support_len() == 0 && g.support_len() == 0 {
        return Err(Error::UndefinedSimilarity("both supports are empty"));
    }
    let mut shared = false;
    let mut num = 0i64;
    let mut den = 0i64;
    for i in 0..m {
        shared |= f.in_support(i) && g.in_support(i);
        let mut dot = 0i64;
        let mut nf = 0i64;
        let mut ng = 0i64;
        for j in 0..n {
            let a = f.contains(i, j) as i64;
            let b = g.contains(i, j) as i64;
            dot += a * b;
            nf += a * a;
            ng += b * b;
        }
        num += dot;
        den += nf.max(ng);
    }
    if !shared {
        return Ok(Rational::zero());
    }
    if den == 0 {
        return Err(Error::UndefinedSimilarity("every approximation is empty"));
    }
    Ok(ratio(num, den))
}

/// Exact IFS-set distance (squared for Euclidean kinds).
pub fn oracle_ifss_distance(
    g: &IfSoftSet<Rational>,
    l: &IfSoftSet<Rational>,
    kind: DistanceKind,
    normalize: NormalizeOver,
) -> Result<Rational> {
    if g.universe() != l.universe() {
        return Err(Error::UniverseMismatch);
    }
    if g.parameters() != l.parameters() {
        return Err(Error::ParameterSetMismatch);
    }
    let m_total = g.parameters().len();
    let n = g.universe().len();
    let m = parameter_count(|i| g.in_support(i), |i| l.in_support(i), m_total, normalize);
    let mut total = Rational::zero();
    for i in 0..m_total {
        for j in 0..n {
            let (a, b) = (g.value(i, j), l.value(i, j));
            total += cell_term(a.mu(), a.nu(), b.mu(), b.nu(), squared(kind));
        }
    }
    Ok(scale(kind, total, m, n, true))
}

/// Exact IFS-set similarity under either numerator reading.
pub fn oracle_ifss_similarity(
    g: &IfSoftSet<Rational>,
    l: &IfSoftSet<Rational>,
    reading: SimilarityReading,
) -> Result<Rational> {
    if g.universe() != l.universe() {
        return Err(Error::UniverseMismatch);
    }
    if g.parameters() != l.parameters() {
        return Err(Error::ParameterSetMismatch);
    }
    let m = g.parameters().len();
    let n = g.universe().len();
    if (0..m).any(|i| g.in_support(i) != l.in_support(i)) {
        return Err(Error::SupportMismatch {
            left: g.support_names(),
            right: l.support_names(),
        });
    }
    let mut num = Rational::zero();
    let mut den = Rational::zero();
    for i in 0..m {
        if !g.in_support(i) {
            continue;
        }
        let mut dot = Rational::zero();
        let mut norm_g = Rational::zero();
        let mut norm_l = Rational::zero();
        for j in 0..n {
            let (a, b) = (g.value(i, j), l.value(i, j));
            let da = a.mu() - a.nu();
            let db = b.mu() - b.nu();
            let prod = &da * &db;
            match reading {
                SimilarityReading::Dot => dot += prod,
                SimilarityReading::Elementwise => dot += prod.abs(),
            }
            norm_g += &da * &da;
            norm_l += &db * &db;
        }
        num += dot.abs();
        den += if norm_g >= norm_l { norm_g } else { norm_l };
    }
    if den.is_zero() {
        return Ok(Rational::one());
    }
    Ok(num / den)
}

/// Exact `1 / (1 + d)` for the Hamming kinds; `None` for Euclidean kinds,
/// whose values are irrational in general.
pub fn oracle_ifss_similarity_prime(
    g: &IfSoftSet<Rational>,
    l: &IfSoftSet<Rational>,
    kind: DistanceKind,
    normalize: NormalizeOver,
) -> Result<Option<Rational>> {
    if squared(kind) {
        return Ok(None);
    }
    let d = oracle_ifss_distance(g, l, kind, normalize)?;
    Ok(Some(int(1) / (int(1) + d)))
}
