//! Similarity measures for soft sets and IFS-sets, α-similarity and the
//! significance predicate.

use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::metrics::{ifss_distance_with, soft_distance_with, DistanceKind, NormalizeOver};
use crate::types::{IfSoftSet, SoftSet};

/// Steepness and threshold shared by the similarity measures.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct SimilarityConfig {
    alpha: f64,
    threshold: f64,
}

impl SimilarityConfig {
    pub fn new(alpha: f64, threshold: f64) -> Result<Self> {
        check_alpha(alpha)?;
        check_threshold(threshold)?;
        Ok(SimilarityConfig { alpha, threshold })
    }

    pub fn alpha(&self) -> f64 {
        self.alpha
    }

    pub fn threshold(&self) -> f64 {
        self.threshold
    }
}

impl Default for SimilarityConfig {
    fn default() -> Self {
        SimilarityConfig {
            alpha: 1.0,
            threshold: 0.5,
        }
    }
}

fn check_alpha(alpha: f64) -> Result<()> {
    // also rejects NaN
    if alpha > 0.0 && alpha.is_finite() {
        Ok(())
    } else {
        Err(Error::InvalidAlpha(alpha))
    }
}

fn check_threshold(threshold: f64) -> Result<()> {
    if threshold > 0.0 && threshold < 1.0 {
        Ok(())
    } else {
        Err(Error::InvalidThreshold(threshold))
    }
}

/// How the numerator of the IFS-set similarity combines difference vectors.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum SimilarityReading {
    /// `Σ_i |δ_G(x_i) · δ_L(x_i)|`
    #[default]
    Dot,
    /// `Σ_i Σ_j |δ_G(x_i)_j δ_L(x_i)_j|`
    Elementwise,
}

impl FromStr for SimilarityReading {
    type Err = String;

    fn from_str(s: &str) -> std::result::Result<Self, Self::Err> {
        match s {
            "dot" => Ok(SimilarityReading::Dot),
            "elementwise" => Ok(SimilarityReading::Elementwise),
            _ => Err(format!("unknown reading `{s}` (expected dot|elementwise)")),
        }
    }
}

impl fmt::Display for SimilarityReading {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            SimilarityReading::Dot => "dot",
            SimilarityReading::Elementwise => "elementwise",
        })
    }
}

/// Soft-set similarity over characteristic vectors:
/// `Σ_i f_i·g_i / Σ_i max(|f_i|², |g_i|²)`.
///
/// Disjoint supports give 0. Two empty supports, or supports whose
/// approximations are all empty, leave the ratio undefined.
pub fn soft_similarity(f: &SoftSet, g: &SoftSet) -> Result<f64> {
    if f.universe() != g.universe() {
        return Err(Error::UniverseMismatch);
    }
    if f.parameters() != g.parameters() {
        return Err(Error::ParameterSetMismatch);
    }
    let params = f.parameters().len();
    if f.support_len() == 0 && g.support_len() == 0 {
        return Err(Error::UndefinedSimilarity("both supports are empty"));
    }
    if !(0..params).any(|i| f.in_support(i) && g.in_support(i)) {
        return Ok(0.0);
    }
    let mut dot = 0usize;
    let mut max_norm = 0usize;
    for i in 0..params {
        let (a, b) = (f.characteristic(i), g.characteristic(i));
        dot += a.iter().zip(b).filter(|(x, y)| **x && **y).count();
        let na = a.iter().filter(|x| **x).count();
        let nb = b.iter().filter(|x| **x).count();
        max_norm += na.max(nb);
    }
    if max_norm == 0 {
        return Err(Error::UndefinedSimilarity("every approximation is empty"));
    }
    Ok(dot as f64 / max_norm as f64)
}

/// `1 / (1 + e^s)` with `e^s` the soft-set Euclidean distance.
pub fn soft_similarity_prime(f: &SoftSet, g: &SoftSet) -> Result<f64> {
    let e = soft_distance_with(f, g, DistanceKind::Euclidean, NormalizeOver::Support)?;
    Ok(1.0 / (1.0 + e))
}

/// `exp(-alpha e^s)` with `e^s` the soft-set Euclidean distance.
pub fn soft_similarity_exp(f: &SoftSet, g: &SoftSet, alpha: f64) -> Result<f64> {
    check_alpha(alpha)?;
    let e = soft_distance_with(f, g, DistanceKind::Euclidean, NormalizeOver::Support)?;
    Ok((-alpha * e).exp())
}

fn require_equal_supports(g: &IfSoftSet, l: &IfSoftSet) -> Result<()> {
    if g.support_mask() != l.support_mask() {
        return Err(Error::SupportMismatch {
            left: g.support_names(),
            right: l.support_names(),
        });
    }
    Ok(())
}

/// IFS-set similarity over per-parameter difference vectors `δ = μ − ν`,
/// dot reading.
pub fn ifss_similarity(g: &IfSoftSet, l: &IfSoftSet) -> Result<f64> {
    ifss_similarity_with(g, l, SimilarityReading::Dot)
}

/// IFS-set similarity under an explicit numerator reading. Requires equal
/// supports; returns 1 when every difference component of both sets is zero.
pub fn ifss_similarity_with(
    g: &IfSoftSet,
    l: &IfSoftSet,
    reading: SimilarityReading,
) -> Result<f64> {
    g.same_frame(l)?;
    require_equal_supports(g, l)?;
    let mut numerator = 0.0;
    let mut denominator = 0.0;
    for i in (0..g.parameters().len()).filter(|&i| g.in_support(i)) {
        let deltas = g
            .approx(i)
            .values()
            .iter()
            .zip(l.approx(i).values())
            .map(|(a, b)| (a.mu() - a.nu(), b.mu() - b.nu()));
        let mut dot = 0.0;
        let mut abs_dot = 0.0;
        let mut norm_g = 0.0;
        let mut norm_l = 0.0;
        for (dg, dl) in deltas {
            dot += dg * dl;
            abs_dot += (dg * dl).abs();
            norm_g += dg * dg;
            norm_l += dl * dl;
        }
        numerator += match reading {
            SimilarityReading::Dot => dot.abs(),
            SimilarityReading::Elementwise => abs_dot,
        };
        denominator += f64::max(norm_g, norm_l);
    }
    if denominator == 0.0 {
        return Ok(1.0);
    }
    Ok(numerator / denominator)
}

/// `1 / (1 + d)` with `d` the IFS-set Hamming distance.
pub fn ifss_similarity_prime(g: &IfSoftSet, l: &IfSoftSet) -> Result<f64> {
    ifss_similarity_prime_with(g, l, DistanceKind::Hamming, NormalizeOver::Support)
}

pub fn ifss_similarity_prime_with(
    g: &IfSoftSet,
    l: &IfSoftSet,
    kind: DistanceKind,
    normalize: NormalizeOver,
) -> Result<f64> {
    let d = ifss_distance_with(g, l, kind, normalize)?;
    Ok(1.0 / (1.0 + d))
}

/// `exp(-alpha d)` with `d` the IFS-set Hamming distance.
pub fn ifss_similarity_exp(g: &IfSoftSet, l: &IfSoftSet, alpha: f64) -> Result<f64> {
    ifss_similarity_exp_with(g, l, alpha, DistanceKind::Hamming, NormalizeOver::Support)
}

pub fn ifss_similarity_exp_with(
    g: &IfSoftSet,
    l: &IfSoftSet,
    alpha: f64,
    kind: DistanceKind,
    normalize: NormalizeOver,
) -> Result<f64> {
    check_alpha(alpha)?;
    let d = ifss_distance_with(g, l, kind, normalize)?;
    Ok((-alpha * d).exp())
}

/// `S′ >= threshold`, with `threshold` in (0,1).
pub fn alpha_similar(g: &IfSoftSet, l: &IfSoftSet, threshold: f64) -> Result<bool> {
    check_threshold(threshold)?;
    Ok(ifss_similarity_prime(g, l)? >= threshold)
}

/// `S′ > 1/2`, strictly.
pub fn significantly_similar(g: &IfSoftSet, l: &IfSoftSet) -> Result<bool> {
    Ok(ifss_similarity_prime(g, l)? > 0.5)
}
