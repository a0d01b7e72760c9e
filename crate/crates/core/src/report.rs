//! Versioned JSON report for verification campaigns.
//!
//! Every number is serialized as an exact string. The `run` section holds
//! wall-clock data and is dropped from the canonical form, so two runs with
//! the same configuration and seed produce byte-identical canonical JSON.

use serde::{Deserialize, Serialize};

use crate::convexity::{
    check_convexity, counterexample_f, paper_witness, strong_counterexample, CheckConfig,
    ConvexityKind, ConvexityReport, Verdict, WitnessSample,
};
use crate::diffcalc::{RealFunction, StepVector};
use crate::error::{Error, Result};
use crate::exactnum::{QuadElem, Radicand, Rational};
use crate::sampling::SamplerBounds;

pub const REPORT_SCHEMA: &str = "hoconvex/convexity-report";
pub const REPORT_SCHEMA_VERSION: u32 = 1;

/// Which function a campaign was run against, enough to rebuild it.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum FunctionFamily {
    /// `alpha(x)^(n+1) + beta(x)^(n+1)`.
    Counterexample,
    /// The counterexample plus `c x^(n+1)`.
    StrongCounterexample,
}

impl FunctionFamily {
    pub fn for_kind(kind: &ConvexityKind) -> Self {
        match kind.modulus() {
            Some(_) => FunctionFamily::StrongCounterexample,
            None => FunctionFamily::Counterexample,
        }
    }

    pub fn build(self, kind: &ConvexityKind, radicand: Radicand) -> Result<RealFunction> {
        let n = kind.order();
        match (self, kind.modulus()) {
            (FunctionFamily::Counterexample, _) => counterexample_f(n, radicand),
            (FunctionFamily::StrongCounterexample, Some(c)) => {
                strong_counterexample(n, c, radicand)
            }
            (FunctionFamily::StrongCounterexample, None) => Err(Error::InvalidConfig(
                "strong counterexample needs a modulus".into(),
            )),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ViolationRecord {
    pub index: usize,
    pub x: QuadElem,
    pub steps: Vec<QuadElem>,
    pub lhs: QuadElem,
    pub required_rhs: QuadElem,
    pub deficit: QuadElem,
}

/// Non-canonical metadata.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct RunInfo {
    pub timestamp_unix: u64,
    pub duration_ms: u64,
    pub threads: usize,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ReportDocument {
    pub schema: String,
    pub schema_version: u32,
    pub artifact_version: String,
    pub kind: String,
    pub n: u32,
    pub c: Option<Rational>,
    pub d: Radicand,
    pub seed: u64,
    pub sampler: SamplerBounds,
    pub random_samples: usize,
    pub prepended_witnesses: usize,
    pub function: FunctionFamily,
    pub descriptor: String,
    pub samples_checked: usize,
    pub strict_count: usize,
    pub violation_count: usize,
    pub verdict: Verdict,
    pub expected_verdict: Verdict,
    pub matches_theorem: bool,
    pub violations: Vec<ViolationRecord>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub run: Option<RunInfo>,
}

/// Outcome the separation theorems predict for the counterexample family:
/// Jensen kinds hold, Wright kinds fail.
pub fn expected_verdict(kind: &ConvexityKind) -> Verdict {
    if kind.is_wright() {
        Verdict::Violated
    } else {
        Verdict::CertifiedOnSamples
    }
}

/// Runs the campaign the `verify` command performs: the counterexample for
/// `kind` (plain or strong), with the refuting witness prepended for Wright
/// kinds.
pub fn verify_counterexample(
    kind: &ConvexityKind,
    config: &CheckConfig,
    seed: u64,
) -> Result<ReportDocument> {
    let family = FunctionFamily::for_kind(kind);
    let f = family.build(kind, config.radicand)?;
    let mut config = config.clone();
    if kind.is_wright() {
        let witness = WitnessSample::new(
            QuadElem::zero(),
            paper_witness(kind.order(), config.radicand)?,
        )?;
        config.prepend.insert(0, witness);
    }
    let report = check_convexity(&f, kind, &config, seed)?;
    Ok(ReportDocument::from_campaign(
        &report, family, &config, seed,
    ))
}

impl ReportDocument {
    pub fn from_campaign(
        report: &ConvexityReport,
        function: FunctionFamily,
        config: &CheckConfig,
        seed: u64,
    ) -> Self {
        let expected = expected_verdict(&report.kind);
        ReportDocument {
            schema: REPORT_SCHEMA.to_owned(),
            schema_version: REPORT_SCHEMA_VERSION,
            artifact_version: env!("CARGO_PKG_VERSION").to_owned(),
            kind: report.kind.name().to_owned(),
            n: report.kind.order(),
            c: report.kind.modulus().cloned(),
            d: config.radicand,
            seed,
            sampler: config.bounds,
            random_samples: config.samples,
            prepended_witnesses: config.prepend.len(),
            function,
            descriptor: report.descriptor.clone(),
            samples_checked: report.samples_checked,
            strict_count: report.strict_count,
            violation_count: report.violations.len(),
            verdict: report.verdict,
            expected_verdict: expected,
            matches_theorem: report.verdict == expected,
            violations: report
                .violations
                .iter()
                .map(|v| ViolationRecord {
                    index: v.index,
                    x: v.sample.x.clone(),
                    steps: v.sample.steps.steps().to_vec(),
                    lhs: v.lhs.clone(),
                    required_rhs: v.required_rhs.clone(),
                    deficit: v.deficit(),
                })
                .collect(),
            run: None,
        }
    }

    pub fn convexity_kind(&self) -> Result<ConvexityKind> {
        ConvexityKind::from_parts(&self.kind, self.n, self.c.clone())
    }

    /// Pretty JSON without the `run` section.
    pub fn to_canonical_json(&self) -> String {
        let canonical = ReportDocument {
            run: None,
            ..self.clone()
        };
        serde_json::to_string_pretty(&canonical).expect("report is always serializable")
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("report is always serializable")
    }

    pub fn from_json(text: &str) -> Result<Self> {
        serde_json::from_str(text)
            .map_err(|e| Error::InvalidConfig(format!("malformed report: {e}")))
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Revalidation {
    pub violations_checked: usize,
    pub problems: Vec<String>,
}

impl Revalidation {
    pub fn ok(&self) -> bool {
        self.problems.is_empty()
    }
}

/// Re-derives every recorded violation by exact re-evaluation, and checks
/// the report's internal consistency.
pub fn revalidate(doc: &ReportDocument) -> Result<Revalidation> {
    if doc.schema != REPORT_SCHEMA || doc.schema_version != REPORT_SCHEMA_VERSION {
        return Err(Error::InvalidConfig(format!(
            "unsupported report schema {} v{}",
            doc.schema, doc.schema_version
        )));
    }
    let kind = doc.convexity_kind()?;
    let f = doc.function.build(&kind, doc.d)?;
    let mut problems = Vec::new();

    if doc.violation_count != doc.violations.len() {
        problems.push(format!(
            "violation_count {} but {} records",
            doc.violation_count,
            doc.violations.len()
        ));
    }
    let verdict = if doc.violations.is_empty() {
        Verdict::CertifiedOnSamples
    } else {
        Verdict::Violated
    };
    if verdict != doc.verdict {
        problems.push(format!("verdict {} inconsistent with records", doc.verdict));
    }
    if doc.matches_theorem != (doc.verdict == expected_verdict(&kind)) {
        problems.push("matches_theorem flag is inconsistent".into());
    }

    for record in &doc.violations {
        let steps = match StepVector::new(record.steps.clone()) {
            Ok(steps) => steps,
            Err(e) => {
                problems.push(format!("violation {}: {e}", record.index));
                continue;
            }
        };
        let sample = match WitnessSample::new(record.x.clone(), steps) {
            Ok(sample) => sample,
            Err(e) => {
                problems.push(format!("violation {}: {e}", record.index));
                continue;
            }
        };
        if sample.steps.len() != kind.step_count() {
            problems.push(format!("violation {}: wrong number of steps", record.index));
            continue;
        }
        let lhs = kind.lhs(&f, &sample);
        let rhs = kind.required_rhs(&sample.steps);
        if lhs != record.lhs {
            problems.push(format!(
                "violation {}: lhs is {lhs}, report says {}",
                record.index, record.lhs
            ));
        }
        if rhs != record.required_rhs {
            problems.push(format!(
                "violation {}: required rhs is {rhs}, report says {}",
                record.index, record.required_rhs
            ));
        }
        if lhs >= rhs {
            problems.push(format!(
                "violation {}: inequality actually holds",
                record.index
            ));
        }
        if &record.required_rhs - &record.lhs != record.deficit {
            problems.push(format!(
                "violation {}: deficit does not match",
                record.index
            ));
        }
    }
    Ok(Revalidation {
        violations_checked: doc.violations.len(),
        problems,
    })
}
