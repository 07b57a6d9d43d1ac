//! Hamming and Euclidean distances, plain and normalized, for IF sets, soft
//! sets and IFS-sets.

use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::types::{IfSoftSet, IntuitionisticFuzzySet, SoftSet};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Default, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum DistanceKind {
    #[default]
    Hamming,
    NormalizedHamming,
    Euclidean,
    NormalizedEuclidean,
}

impl DistanceKind {
    pub const ALL: [DistanceKind; 4] = [
        DistanceKind::Hamming,
        DistanceKind::NormalizedHamming,
        DistanceKind::Euclidean,
        DistanceKind::NormalizedEuclidean,
    ];

    pub fn as_str(self) -> &'static str {
        match self {
            DistanceKind::Hamming => "hamming",
            DistanceKind::NormalizedHamming => "normalized_hamming",
            DistanceKind::Euclidean => "euclidean",
            DistanceKind::NormalizedEuclidean => "normalized_euclidean",
        }
    }

    pub fn is_euclidean(self) -> bool {
        matches!(
            self,
            DistanceKind::Euclidean | DistanceKind::NormalizedEuclidean
        )
    }

    pub fn is_normalized(self) -> bool {
        matches!(
            self,
            DistanceKind::NormalizedHamming | DistanceKind::NormalizedEuclidean
        )
    }

    /// Applies the kind's normalization and root to a raw sum of absolute
    /// (Hamming) or squared (Euclidean) differences.
    fn finish(self, total: f64, scale: f64, n: usize) -> f64 {
        let mut value = total / scale;
        if self.is_normalized() {
            value /= n as f64;
        }
        if self.is_euclidean() {
            value.sqrt()
        } else {
            value
        }
    }
}

impl fmt::Display for DistanceKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

impl FromStr for DistanceKind {
    type Err = String;

    fn from_str(s: &str) -> std::result::Result<Self, Self::Err> {
        DistanceKind::ALL
            .into_iter()
            .find(|k| k.as_str() == s)
            .ok_or_else(|| format!("unknown distance kind `{s}`"))
    }
}

/// Which parameter count divides soft-set and IFS-set distances.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum NormalizeOver {
    /// `|A ∪ B|`, falling back to `|E|` when both supports are empty.
    #[default]
    Support,
    /// Always `|E|`.
    Full,
}

impl FromStr for NormalizeOver {
    type Err = String;

    fn from_str(s: &str) -> std::result::Result<Self, Self::Err> {
        match s {
            "support" => Ok(NormalizeOver::Support),
            "full" => Ok(NormalizeOver::Full),
            _ => Err(format!("unknown normalization `{s}` (expected full|support)")),
        }
    }
}

impl fmt::Display for NormalizeOver {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            NormalizeOver::Support => "support",
            NormalizeOver::Full => "full",
        })
    }
}

fn effective_m(left: &[bool], right: &[bool], normalize: NormalizeOver) -> usize {
    let union = left.iter().zip(right).filter(|(a, b)| **a || **b).count();
    match normalize {
        NormalizeOver::Support if union > 0 => union,
        _ => left.len(),
    }
}

/// The parameter count `m` used to normalize distances between `g` and `l`.
pub fn effective_parameter_count(g: &IfSoftSet, l: &IfSoftSet, normalize: NormalizeOver) -> usize {
    effective_m(g.support_mask(), l.support_mask(), normalize)
}

fn if_cell_sum(a: &IntuitionisticFuzzySet, b: &IntuitionisticFuzzySet, squared: bool) -> f64 {
    a.values()
        .iter()
        .zip(b.values())
        .map(|(x, y)| {
            let dm = x.mu() - y.mu();
            let dn = x.nu() - y.nu();
            if squared {
                dm * dm + dn * dn
            } else {
                dm.abs() + dn.abs()
            }
        })
        .sum()
}

/// Distance between two IF sets over the same universe.
pub fn if_distance(
    a: &IntuitionisticFuzzySet,
    b: &IntuitionisticFuzzySet,
    kind: DistanceKind,
) -> Result<f64> {
    if a.universe() != b.universe() {
        return Err(Error::UniverseMismatch);
    }
    let total = if_cell_sum(a, b, kind.is_euclidean());
    Ok(kind.finish(total, 2.0, a.universe().len()))
}

fn same_soft_frame(f: &SoftSet, g: &SoftSet) -> Result<()> {
    if f.universe() != g.universe() {
        return Err(Error::UniverseMismatch);
    }
    if f.parameters() != g.parameters() {
        return Err(Error::ParameterSetMismatch);
    }
    Ok(())
}

/// Distance between two soft sets, reading each approximation as a 0/1
/// characteristic vector. Normalized over the union of supports.
pub fn soft_distance(f: &SoftSet, g: &SoftSet, kind: DistanceKind) -> Result<f64> {
    soft_distance_with(f, g, kind, NormalizeOver::Support)
}

pub fn soft_distance_with(
    f: &SoftSet,
    g: &SoftSet,
    kind: DistanceKind,
    normalize: NormalizeOver,
) -> Result<f64> {
    same_soft_frame(f, g)?;
    let params = f.parameters().len();
    let left: Vec<bool> = (0..params).map(|i| f.in_support(i)).collect();
    let right: Vec<bool> = (0..params).map(|i| g.in_support(i)).collect();
    let m = effective_m(&left, &right, normalize);
    // |a - b| and (a - b)^2 coincide on {0, 1}
    let mismatches = (0..params)
        .map(|i| {
            f.characteristic(i)
                .iter()
                .zip(g.characteristic(i))
                .filter(|(a, b)| a != b)
                .count()
        })
        .sum::<usize>();
    Ok(kind.finish(mismatches as f64, m as f64, f.universe().len()))
}

/// Distance between two IFS-sets, normalized over the union of supports.
/// Parameters outside a set's support contribute through `(0, 1)`.
pub fn ifss_distance(g: &IfSoftSet, l: &IfSoftSet, kind: DistanceKind) -> Result<f64> {
    ifss_distance_with(g, l, kind, NormalizeOver::Support)
}

pub fn ifss_distance_with(
    g: &IfSoftSet,
    l: &IfSoftSet,
    kind: DistanceKind,
    normalize: NormalizeOver,
) -> Result<f64> {
    g.same_frame(l)?;
    let m = effective_parameter_count(g, l, normalize);
    let total: f64 = (0..g.parameters().len())
        .map(|i| if_cell_sum(g.approx(i), l.approx(i), kind.is_euclidean()))
        .sum();
    Ok(kind.finish(total, 2.0 * m as f64, g.universe().len()))
}
