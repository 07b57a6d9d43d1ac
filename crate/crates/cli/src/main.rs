//! `ifsoft` command-line interface.
//!
//! Every command renders its full output into a buffer first, so a failure
//! never leaves partial results on stdout.

use std::fmt::Write as _;
use std::fs;
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use anyhow::{anyhow, Context};
use clap::{Parser, Subcommand, ValueEnum};
use ifsoft::metrics::ifss_distance_with;
use ifsoft::oracle::oracle_ifss_distance;
use ifsoft::similarity::{ifss_similarity_with, SimilarityConfig};
use ifsoft::{
    diagnose, parse_dataset, validate_with, ConstraintMode, DatasetDocument, DiagnosisConfig,
    DistanceKind, Measure, NormalizeOver, SimilarityReading,
};

#[derive(Parser)]
#[command(name = "ifsoft", version, about = "Distances, similarities and diagnosis over IFS-sets")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Parse a dataset and check every set.
    Validate { file: PathBuf },
    /// Distance between two sets.
    Distance {
        file: PathBuf,
        a: String,
        b: String,
        #[arg(long, value_enum, default_value_t = Kind::Hamming)]
        kind: Kind,
        #[arg(long, value_enum, default_value_t = Over::Support)]
        normalize_over: Over,
        /// Also print the exact fraction.
        #[arg(long)]
        exact: bool,
    },
    /// Similarity between two sets.
    Similarity {
        file: PathBuf,
        a: String,
        b: String,
        #[arg(long, value_enum, default_value_t = MeasureArg::Prime)]
        measure: MeasureArg,
        #[arg(long, default_value_t = 1.0)]
        alpha: f64,
        #[arg(long, value_enum, default_value_t = Kind::Hamming)]
        kind: Kind,
        #[arg(long, value_enum, default_value_t = Reading::Dot)]
        reading: Reading,
        #[arg(long, value_enum, default_value_t = Over::Support)]
        normalize_over: Over,
    },
    /// Compare a template against a subject and print a verdict.
    Diagnose {
        file: PathBuf,
        template: String,
        subject: String,
        #[arg(long, default_value_t = 0.5)]
        threshold: f64,
        #[arg(long, value_enum, default_value_t = Kind::Hamming)]
        kind: Kind,
        #[arg(long, value_enum, default_value_t = MeasureArg::Prime)]
        measure: MeasureArg,
        #[arg(long, default_value_t = 1.0)]
        alpha: f64,
        #[arg(long, value_enum, default_value_t = Reading::Dot)]
        reading: Reading,
        #[arg(long, value_enum, default_value_t = Over::Support)]
        normalize_over: Over,
        /// Write the report as JSON to this path.
        #[arg(long)]
        report: Option<PathBuf>,
    },
}

// clap-facing mirrors of the library enums, spelled the same way
#[derive(Clone, Copy, ValueEnum)]
#[value(rename_all = "snake_case")]
enum Kind {
    Hamming,
    NormalizedHamming,
    Euclidean,
    NormalizedEuclidean,
}

#[derive(Clone, Copy, ValueEnum)]
enum MeasureArg {
    #[value(name = "s_ifs")]
    Ifs,
    #[value(name = "s_prime")]
    Prime,
    #[value(name = "s_exp")]
    Exp,
}

#[derive(Clone, Copy, ValueEnum)]
enum Reading {
    Dot,
    Elementwise,
}

#[derive(Clone, Copy, ValueEnum)]
enum Over {
    Full,
    Support,
}

impl From<Kind> for DistanceKind {
    fn from(k: Kind) -> Self {
        match k {
            Kind::Hamming => DistanceKind::Hamming,
            Kind::NormalizedHamming => DistanceKind::NormalizedHamming,
            Kind::Euclidean => DistanceKind::Euclidean,
            Kind::NormalizedEuclidean => DistanceKind::NormalizedEuclidean,
        }
    }
}

impl From<MeasureArg> for Measure {
    fn from(m: MeasureArg) -> Self {
        match m {
            MeasureArg::Ifs => Measure::SIfs,
            MeasureArg::Prime => Measure::SPrime,
            MeasureArg::Exp => Measure::SExp,
        }
    }
}

impl From<Reading> for SimilarityReading {
    fn from(r: Reading) -> Self {
        match r {
            Reading::Dot => SimilarityReading::Dot,
            Reading::Elementwise => SimilarityReading::Elementwise,
        }
    }
}

impl From<Over> for NormalizeOver {
    fn from(o: Over) -> Self {
        match o {
            Over::Full => NormalizeOver::Full,
            Over::Support => NormalizeOver::Support,
        }
    }
}

fn load(path: &Path) -> anyhow::Result<DatasetDocument> {
    let text = fs::read_to_string(path).with_context(|| format!("cannot read {}", path.display()))?;
    parse_dataset(&text).map_err(|e| {
        let lines: Vec<String> = e
            .diagnostics
            .iter()
            .map(|d| format!("{}:{d}", path.display()))
            .collect();
        anyhow!(lines.join("\n"))
    })
}

fn run_validate(file: &Path) -> anyhow::Result<String> {
    let doc = load(file)?;
    let mut out = String::new();
    writeln!(
        out,
        "{}: {} elements, {} parameters, {} sets",
        file.display(),
        doc.universe.len(),
        doc.parameters.len(),
        doc.sets.len()
    )?;
    for decl in &doc.sets {
        let set = doc.exact_set(&decl.name)?;
        write!(out, "  {}: ok, support {}", decl.name, set.support_len())?;
        if set.mode() == ConstraintMode::Relaxed {
            let loose = validate_with(&set, ConstraintMode::Strict).violations.len();
            write!(out, " (relaxed, {loose} cells with mu+nu>1)")?;
        }
        writeln!(out)?;
    }
    Ok(out)
}

fn run_distance(
    file: &Path,
    a: &str,
    b: &str,
    kind: DistanceKind,
    normalize: NormalizeOver,
    exact: bool,
) -> anyhow::Result<String> {
    let doc = load(file)?;
    let (ga, gb) = (doc.exact_set(a)?, doc.exact_set(b)?);
    let value = ifss_distance_with(&ga.to_f64(), &gb.to_f64(), kind, normalize)?;
    let mut out = format!("{value:.6}");
    if exact {
        let fraction = oracle_ifss_distance(&ga, &gb, kind, normalize)?;
        if kind.is_euclidean() {
            write!(out, " (sqrt({fraction}))")?;
        } else {
            write!(out, " ({fraction})")?;
        }
    }
    out.push('\n');
    Ok(out)
}

fn run_similarity(
    file: &Path,
    a: &str,
    b: &str,
    measure: Measure,
    config: &DiagnosisConfig,
) -> anyhow::Result<String> {
    let doc = load(file)?;
    let (ga, gb) = (doc.float_set(a)?, doc.float_set(b)?);
    let value = match measure {
        Measure::SIfs => ifss_similarity_with(&ga, &gb, config.reading)?,
        _ => {
            let config = DiagnosisConfig { measure, ..*config };
            diagnose(&ga, &gb, &config)?.similarity
        }
    };
    Ok(format!("{value:.6}\n"))
}

fn run_diagnose(
    file: &Path,
    template: &str,
    subject: &str,
    config: &DiagnosisConfig,
    report: Option<&Path>,
) -> anyhow::Result<String> {
    let doc = load(file)?;
    let result = diagnose(&doc.float_set(template)?, &doc.float_set(subject)?, config)?;
    if let Some(path) = report {
        let json = serde_json::to_string_pretty(&result)?;
        fs::write(path, json + "\n").with_context(|| format!("cannot write {}", path.display()))?;
    }
    Ok(format!("{result}\n"))
}

fn config(
    alpha: f64,
    threshold: f64,
    kind: Kind,
    measure: MeasureArg,
    reading: Reading,
    normalize: Over,
) -> anyhow::Result<DiagnosisConfig> {
    Ok(DiagnosisConfig {
        similarity: SimilarityConfig::new(alpha, threshold)?,
        kind: kind.into(),
        measure: measure.into(),
        reading: reading.into(),
        normalize: normalize.into(),
    })
}

fn run(cli: Cli) -> anyhow::Result<String> {
    match cli.command {
        Command::Validate { file } => run_validate(&file),
        Command::Distance { file, a, b, kind, normalize_over, exact } => {
            run_distance(&file, &a, &b, kind.into(), normalize_over.into(), exact)
        }
        Command::Similarity { file, a, b, measure, alpha, kind, reading, normalize_over } => {
            let config = config(alpha, 0.5, kind, measure, reading, normalize_over)?;
            run_similarity(&file, &a, &b, measure.into(), &config)
        }
        Command::Diagnose {
            file,
            template,
            subject,
            threshold,
            kind,
            measure,
            alpha,
            reading,
            normalize_over,
            report,
        } => {
            let config = config(alpha, threshold, kind, measure, reading, normalize_over)?;
            run_diagnose(&file, &template, &subject, &config, report.as_deref())
        }
    }
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        // prints help/version with status 0, usage errors with status 2
        Err(e) => e.exit(),
    };
    match run(cli) {
        Ok(out) => {
            print!("{out}");
            ExitCode::SUCCESS
        }
        Err(e) => {
            eprintln!("error: {e:#}");
            ExitCode::from(1)
        }
    }
}
