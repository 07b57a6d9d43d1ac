//! Similarity-based decision method: compare an expert template IFS-set with
//! a subject IFS-set and decide whether they are similar.

use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::metrics::{effective_parameter_count, ifss_distance_with, DistanceKind, NormalizeOver};
use crate::similarity::{ifss_similarity_with, SimilarityConfig, SimilarityReading};
use crate::types::IfSoftSet;

/// Which similarity measure turns the distance into a score.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Measure {
    /// Difference-vector similarity; needs equal supports.
    SIfs,
    /// `1 / (1 + d)`
    #[default]
    SPrime,
    /// `exp(-alpha d)`
    SExp,
}

impl Measure {
    pub fn as_str(self) -> &'static str {
        match self {
            Measure::SIfs => "s_ifs",
            Measure::SPrime => "s_prime",
            Measure::SExp => "s_exp",
        }
    }
}

impl fmt::Display for Measure {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

impl FromStr for Measure {
    type Err = String;

    fn from_str(s: &str) -> std::result::Result<Self, Self::Err> {
        match s {
            "s_ifs" => Ok(Measure::SIfs),
            "s_prime" => Ok(Measure::SPrime),
            "s_exp" => Ok(Measure::SExp),
            _ => Err(format!("unknown measure `{s}` (expected s_ifs|s_prime|s_exp)")),
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Default, Serialize, Deserialize)]
pub struct DiagnosisConfig {
    pub similarity: SimilarityConfig,
    pub kind: DistanceKind,
    pub measure: Measure,
    pub reading: SimilarityReading,
    pub normalize: NormalizeOver,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Verdict {
    Similar,
    NotSimilar,
}

impl fmt::Display for Verdict {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Verdict::Similar => "SIMILAR",
            Verdict::NotSimilar => "NOT SIMILAR",
        })
    }
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct ReportInputs {
    pub template: String,
    pub subject: String,
}

/// Outcome of [`diagnose`].
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct VerdictReport {
    pub distance_kind: DistanceKind,
    pub distance: f64,
    pub measure: Measure,
    pub similarity: f64,
    pub threshold: f64,
    pub verdict: Verdict,
    pub inputs: ReportInputs,
    pub effective_m: usize,
    pub n: usize,
}

impl fmt::Display for VerdictReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "template:   {}", self.inputs.template)?;
        writeln!(f, "subject:    {}", self.inputs.subject)?;
        writeln!(f, "m, n:       {}, {}", self.effective_m, self.n)?;
        writeln!(f, "distance:   {} = {:.6}", self.distance_kind, self.distance)?;
        writeln!(f, "similarity: {} = {:.6}", self.measure, self.similarity)?;
        writeln!(f, "threshold:  {:.6}", self.threshold)?;
        write!(f, "verdict:    {}", self.verdict)
    }
}

/// Runs the decision method: distance, then similarity, then a strict
/// comparison of the similarity against the configured threshold.
pub fn diagnose(
    template: &IfSoftSet,
    subject: &IfSoftSet,
    config: &DiagnosisConfig,
) -> Result<VerdictReport> {
    template.same_frame(subject)?;
    let distance = ifss_distance_with(template, subject, config.kind, config.normalize)?;
    let similarity = match config.measure {
        Measure::SPrime => 1.0 / (1.0 + distance),
        Measure::SExp => (-config.similarity.alpha() * distance).exp(),
        Measure::SIfs => ifss_similarity_with(template, subject, config.reading).map_err(
            |e| match e {
                Error::SupportMismatch { left, right } => Error::MeasureSupportMismatch { left, right },
                other => other,
            },
        )?,
    };
    let threshold = config.similarity.threshold();
    let verdict = if similarity > threshold {
        Verdict::Similar
    } else {
        Verdict::NotSimilar
    };
    Ok(VerdictReport {
        distance_kind: config.kind,
        distance,
        measure: config.measure,
        similarity,
        threshold,
        verdict,
        inputs: ReportInputs {
            template: template.label().unwrap_or("<template>").to_string(),
            subject: subject.label().unwrap_or("<subject>").to_string(),
        },
        effective_m: effective_parameter_count(template, subject, config.normalize),
        n: template.universe().len(),
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::types::{ParameterSet, Universe};

    fn set(support: &[&str], cells: &[(&str, &str, f64, f64)]) -> IfSoftSet {
        let u = Universe::new(["u1", "u2"]).unwrap();
        let e = ParameterSet::new(["x1", "x2"]).unwrap();
        let mut b = IfSoftSet::builder(&u, &e).support(support.iter().copied());
        for (x, el, mu, nu) in cells {
            b = b.assign(*x, *el, *mu, *nu);
        }
        b.build().unwrap()
    }

    #[test]
    fn self_diagnosis_is_similar() {
        let t = set(&["x1"], &[("x1", "u1", 0.4, 0.3)]).with_label("t");
        let report = diagnose(&t, &t, &DiagnosisConfig::default()).unwrap();
        assert_eq!(report.distance, 0.0);
        assert_eq!(report.similarity, 1.0);
        assert_eq!(report.verdict, Verdict::Similar);
        assert_eq!(report.inputs.template, "t");
        assert_eq!(report.effective_m, 1);
        assert_eq!(report.n, 2);
    }

    #[test]
    fn s_ifs_support_mismatch_has_hint() {
        let a = set(&["x1"], &[("x1", "u1", 0.4, 0.3)]);
        let b = set(&["x2"], &[("x2", "u1", 0.4, 0.3)]);
        let config = DiagnosisConfig {
            measure: Measure::SIfs,
            ..DiagnosisConfig::default()
        };
        let err = diagnose(&a, &b, &config).unwrap_err();
        assert!(err.to_string().contains("use s_prime"));
    }

    #[test]
    fn report_serializes_snake_case() {
        let t = set(&["x1"], &[("x1", "u1", 0.4, 0.3)]);
        let report = diagnose(&t, &t, &DiagnosisConfig::default()).unwrap();
        let text = format!("{report}");
        assert!(text.ends_with("verdict:    SIMILAR"));
        assert_eq!(Measure::from_str("s_exp").unwrap(), Measure::SExp);
    }
}
