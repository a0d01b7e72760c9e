//! Higher-order Jensen and Wright convexity: the separating counterexample
//! family, its closed forms, the strong-convexity shift, and seeded
//! certification campaigns.
//!
//! A campaign never proves convexity; it certifies the defining inequality
//! on finitely many exact samples. A single recorded violation, on the other
//! hand, is an exact refutation.

use std::fmt;

use serde::{Deserialize, Serialize};

use crate::additive::AdditiveMap;
use crate::diffcalc::{delta_equal, delta_iterated, RealFunction, StepVector};
use crate::error::{Error, Result};
use crate::exactnum::{QuadElem, Radicand, Rational, Sign};
use crate::par::{map_ordered, Execution};
use crate::sampling::{Sampler, SamplerBounds};

/// Which defining inequality a campaign checks. `n` is the convexity order,
/// so every inequality involves `n + 1` steps.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub enum ConvexityKind {
    Jensen { n: u32 },
    Wright { n: u32 },
    StrongJensen { n: u32, c: Rational },
    StrongWright { n: u32, c: Rational },
}

fn check_order(n: u32) -> Result<()> {
    if n == 0 {
        Err(Error::ZeroOrder)
    } else {
        Ok(())
    }
}

fn check_modulus(c: &Rational) -> Result<()> {
    if c.sign() == Sign::Positive {
        Ok(())
    } else {
        Err(Error::NonPositiveModulus(c.to_string()))
    }
}

impl ConvexityKind {
    pub fn jensen(n: u32) -> Result<Self> {
        check_order(n)?;
        Ok(ConvexityKind::Jensen { n })
    }

    pub fn wright(n: u32) -> Result<Self> {
        check_order(n)?;
        Ok(ConvexityKind::Wright { n })
    }

    pub fn strong_jensen(n: u32, c: Rational) -> Result<Self> {
        check_order(n)?;
        check_modulus(&c)?;
        Ok(ConvexityKind::StrongJensen { n, c })
    }

    pub fn strong_wright(n: u32, c: Rational) -> Result<Self> {
        check_order(n)?;
        check_modulus(&c)?;
        Ok(ConvexityKind::StrongWright { n, c })
    }

    /// Builds a kind from its report name (`jensen`, `wright`,
    /// `strong-jensen`, `strong-wright`).
    pub fn from_parts(name: &str, n: u32, c: Option<Rational>) -> Result<Self> {
        let need_c = || {
            c.clone()
                .ok_or_else(|| Error::InvalidConfig(format!("kind {name} requires a modulus c")))
        };
        let no_c = || match &c {
            Some(_) => Err(Error::InvalidConfig(format!(
                "kind {name} does not take a modulus"
            ))),
            None => Ok(()),
        };
        match name {
            "jensen" => no_c().and_then(|_| ConvexityKind::jensen(n)),
            "wright" => no_c().and_then(|_| ConvexityKind::wright(n)),
            "strong-jensen" => ConvexityKind::strong_jensen(n, need_c()?),
            "strong-wright" => ConvexityKind::strong_wright(n, need_c()?),
            other => Err(Error::InvalidConfig(format!("unknown kind {other:?}"))),
        }
    }

    pub fn name(&self) -> &'static str {
        match self {
            ConvexityKind::Jensen { .. } => "jensen",
            ConvexityKind::Wright { .. } => "wright",
            ConvexityKind::StrongJensen { .. } => "strong-jensen",
            ConvexityKind::StrongWright { .. } => "strong-wright",
        }
    }

    pub fn order(&self) -> u32 {
        match self {
            ConvexityKind::Jensen { n }
            | ConvexityKind::Wright { n }
            | ConvexityKind::StrongJensen { n, .. }
            | ConvexityKind::StrongWright { n, .. } => *n,
        }
    }

    pub fn modulus(&self) -> Option<&Rational> {
        match self {
            ConvexityKind::StrongJensen { c, .. } | ConvexityKind::StrongWright { c, .. } => {
                Some(c)
            }
            _ => None,
        }
    }

    /// Wright kinds quantify over arbitrary positive steps, Jensen kinds
    /// only over equal ones.
    pub fn is_wright(&self) -> bool {
        matches!(
            self,
            ConvexityKind::Wright { .. } | ConvexityKind::StrongWright { .. }
        )
    }

    pub fn step_count(&self) -> usize {
        self.order() as usize + 1
    }

    /// Right-hand side of the defining inequality: `0`, or
    /// `c (n+1)! h_1 ... h_{n+1}` for the strong kinds.
    pub fn required_rhs(&self, hs: &StepVector) -> QuadElem {
        match self.modulus() {
            None => QuadElem::zero(),
            Some(c) => {
                let scale = c * Rational::factorial(self.order() + 1);
                hs.product().scale(&scale)
            }
        }
    }

    /// Left-hand side: the (n+1)-fold difference, through the equal-step
    /// binomial expansion for Jensen kinds.
    pub fn lhs(&self, f: &RealFunction, sample: &WitnessSample) -> QuadElem {
        if self.is_wright() {
            delta_iterated(f, &sample.steps, &sample.x)
        } else {
            delta_equal(f, &sample.steps.steps()[0], self.order() + 1, &sample.x)
        }
    }

    fn validate_sample(&self, sample: &WitnessSample) -> Result<()> {
        if sample.steps.len() != self.step_count() {
            return Err(Error::LengthMismatch {
                expected: self.step_count(),
                found: sample.steps.len(),
            });
        }
        sample.steps.ensure_positive()?;
        if !self.is_wright() && !sample.steps.is_uniform() {
            return Err(Error::InvalidConfig(
                "Jensen samples need equal steps".into(),
            ));
        }
        Ok(())
    }
}

impl fmt::Display for ConvexityKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self.modulus() {
            None => write!(f, "{}(n={})", self.name(), self.order()),
            Some(c) => write!(f, "{}(n={}, c={c})", self.name(), self.order()),
        }
    }
}

/// One quantifier instance: a base point and `n + 1` positive steps.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct WitnessSample {
    pub x: QuadElem,
    pub steps: StepVector,
}

impl WitnessSample {
    pub fn new(x: QuadElem, steps: StepVector) -> Result<Self> {
        steps.ensure_positive()?;
        Ok(WitnessSample { x, steps })
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Violation {
    /// Position of the sample in the campaign, prepended witnesses first.
    pub index: usize,
    pub sample: WitnessSample,
    pub lhs: QuadElem,
    pub required_rhs: QuadElem,
}

impl Violation {
    /// `required_rhs - lhs`, strictly positive for a genuine violation.
    pub fn deficit(&self) -> QuadElem {
        &self.required_rhs - &self.lhs
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum Verdict {
    CertifiedOnSamples,
    Violated,
}

impl fmt::Display for Verdict {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Verdict::CertifiedOnSamples => "certified-on-samples",
            Verdict::Violated => "violated",
        })
    }
}

#[derive(Debug, Clone)]
pub struct ConvexityReport {
    pub kind: ConvexityKind,
    pub descriptor: String,
    pub samples_checked: usize,
    /// Samples where the inequality holds strictly.
    pub strict_count: usize,
    pub violations: Vec<Violation>,
    pub verdict: Verdict,
}

/// Campaign settings for [`check_convexity`].
#[derive(Debug, Clone)]
pub struct CheckConfig {
    /// Number of random samples, on top of any prepended witnesses.
    pub samples: usize,
    pub bounds: SamplerBounds,
    pub radicand: Radicand,
    /// Explicit samples checked before the random ones.
    pub prepend: Vec<WitnessSample>,
    pub execution: Execution,
}

impl Default for CheckConfig {
    fn default() -> Self {
        CheckConfig {
            samples: 200,
            bounds: SamplerBounds::default(),
            radicand: Radicand::DEFAULT,
            prepend: Vec::new(),
            execution: Execution::default(),
        }
    }
}

impl CheckConfig {
    pub fn with_samples(samples: usize) -> Self {
        CheckConfig {
            samples,
            ..CheckConfig::default()
        }
    }
}

/// Draws the deterministic sample list for a campaign.
pub fn draw_samples(
    kind: &ConvexityKind,
    config: &CheckConfig,
    seed: u64,
) -> Result<Vec<WitnessSample>> {
    let mut sampler = Sampler::new(seed, config.bounds, config.radicand)?;
    let k = kind.step_count();
    let mut samples = Vec::with_capacity(config.prepend.len() + config.samples);
    for sample in &config.prepend {
        kind.validate_sample(sample)?;
        samples.push(sample.clone());
    }
    for _ in 0..config.samples {
        let x = sampler.quad();
        let steps = if kind.is_wright() {
            sampler.positive_steps(k)
        } else {
            vec![sampler.positive_quad(); k]
        };
        samples.push(WitnessSample {
            x,
            steps: StepVector::new(steps)?,
        });
    }
    Ok(samples)
}

/// Evaluates the defining inequality of `kind` for `f` on seeded samples.
pub fn check_convexity(
    f: &RealFunction,
    kind: &ConvexityKind,
    config: &CheckConfig,
    seed: u64,
) -> Result<ConvexityReport> {
    if config.samples == 0 && config.prepend.is_empty() {
        return Err(Error::InvalidConfig("sample count must be positive".into()));
    }
    let samples = draw_samples(kind, config, seed)?;
    let samples_checked = samples.len();
    let outcomes = map_ordered(&samples, config.execution, |sample| {
        let lhs = kind.lhs(f, sample);
        let rhs = kind.required_rhs(&sample.steps);
        let sign = (&lhs - &rhs).sign();
        (lhs, rhs, sign)
    });

    let mut strict_count = 0;
    let mut violations = Vec::new();
    for (index, (sample, (lhs, required_rhs, sign))) in
        samples.into_iter().zip(outcomes).enumerate()
    {
        match sign {
            Sign::Positive => strict_count += 1,
            Sign::Zero => {}
            Sign::Negative => violations.push(Violation {
                index,
                sample,
                lhs,
                required_rhs,
            }),
        }
    }
    let verdict = if violations.is_empty() {
        Verdict::CertifiedOnSamples
    } else {
        Verdict::Violated
    };
    Ok(ConvexityReport {
        kind: kind.clone(),
        descriptor: f.descriptor().to_owned(),
        samples_checked,
        strict_count,
        violations,
        verdict,
    })
}

/// `f(x) = alpha(x)^(n+1) + beta(x)^(n+1)`: n-Jensen-convex but not n-Wright-convex.
pub fn counterexample_f(n: u32, radicand: Radicand) -> Result<RealFunction> {
    check_order(n)?;
    let alpha = AdditiveMap::alpha(radicand);
    let beta = AdditiveMap::beta(radicand);
    Ok(RealFunction::new(
        format!("f_n counterexample, n={n}, d={radicand}"),
        move |x| alpha.apply(x).pow(n + 1) + beta.apply(x).pow(n + 1),
    ))
}

/// `(n+1)! (∏ alpha(h_i) + ∏ beta(h_i))`, the x-independent value of
/// `Δ_{h_1...h_{n+1}} f(x)` for the counterexample.
pub fn closed_form_wright_delta(n: u32, hs: &StepVector, radicand: Radicand) -> Result<QuadElem> {
    check_order(n)?;
    if hs.len() != n as usize + 1 {
        return Err(Error::LengthMismatch {
            expected: n as usize + 1,
            found: hs.len(),
        });
    }
    let alpha_product = hs.map(&AdditiveMap::alpha(radicand)).product();
    let beta_product = hs.map(&AdditiveMap::beta(radicand)).product();
    Ok((alpha_product + beta_product).scale(&Rational::factorial(n + 1)))
}

/// `(n+1)! (alpha(h)^(n+1) + beta(h)^(n+1))`.
pub fn closed_form_jensen_delta(n: u32, h: &QuadElem, radicand: Radicand) -> Result<QuadElem> {
    check_order(n)?;
    let a = AdditiveMap::alpha(radicand).apply(h);
    let b = AdditiveMap::beta(radicand).apply(h);
    Ok((a.pow(n + 1) + b.pow(n + 1)).scale(&Rational::factorial(n + 1)))
}

/// The refuting steps `[-1 + sqrt d, 1, 1 + sqrt d, ..., 1 + sqrt d]` of
/// length `n + 1`. The `1 + sqrt d` block is empty for `n = 1`.
///
/// Over sqrt(2) these are exactly `sqrt 2 - 1, 1, sqrt 2 + 1`; for any
/// admissible `d` the alpha-images stay `-1, 1, 1, ...` and `beta(1) = 0`.
pub fn paper_witness(n: u32, radicand: Radicand) -> Result<StepVector> {
    check_order(n)?;
    let root = QuadElem::root(radicand);
    let mut steps = vec![&root - &QuadElem::one(), QuadElem::one()];
    steps.extend(std::iter::repeat_n(
        &root + &QuadElem::one(),
        n as usize - 1,
    ));
    StepVector::positive(steps)
}

fn scaled_power(n: u32, c: &Rational) -> RealFunction {
    let c = c.clone();
    RealFunction::new(format!("{c} x^{}", n + 1), move |x| x.pow(n + 1).scale(&c))
}

/// `g(x) = f(x) - c x^(n+1)`.
pub fn strong_shift(f: &RealFunction, n: u32, c: &Rational) -> Result<RealFunction> {
    check_order(n)?;
    check_modulus(c)?;
    Ok(f.sub(&scaled_power(n, c)))
}

/// `f(x) = g(x) + c x^(n+1)`.
pub fn strong_unshift(g: &RealFunction, n: u32, c: &Rational) -> Result<RealFunction> {
    check_order(n)?;
    check_modulus(c)?;
    Ok(g.add(&scaled_power(n, c)))
}

/// Strongly n-Jensen-convex with modulus `c` but not strongly n-Wright-convex.
pub fn strong_counterexample(n: u32, c: &Rational, radicand: Radicand) -> Result<RealFunction> {
    let g = counterexample_f(n, radicand)?;
    Ok(strong_unshift(&g, n, c)?.with_descriptor(format!(
        "strong f_n counterexample, n={n}, c={c}, d={radicand}"
    )))
}

/// One instance `(x, y, t)` of the classical two-point Wright inequality.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct ClassicSample {
    pub x: QuadElem,
    pub y: QuadElem,
    pub t: Rational,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct ClassicViolation {
    pub index: usize,
    pub sample: ClassicSample,
    /// `f(tx + (1-t)y) + f((1-t)x + ty)`.
    pub inner_sum: QuadElem,
    /// `f(x) + f(y)`.
    pub outer_sum: QuadElem,
}

#[derive(Debug, Clone)]
pub struct ClassicWrightReport {
    pub descriptor: String,
    pub samples_checked: usize,
    pub violations: Vec<ClassicViolation>,
    pub verdict: Verdict,
}

/// Checks `f(tx + (1-t)y) + f((1-t)x + ty) <= f(x) + f(y)` on each sample.
pub fn check_classic_wright(
    f: &RealFunction,
    samples: &[ClassicSample],
) -> Result<ClassicWrightReport> {
    if let Some(bad) = samples
        .iter()
        .find(|s| s.t.sign() == Sign::Negative || s.t > Rational::one())
    {
        return Err(Error::ParameterOutOfRange(bad.t.to_string()));
    }
    let mut violations = Vec::new();
    for (index, sample) in samples.iter().enumerate() {
        let t = &sample.t;
        let s = Rational::one() - t;
        let first = sample.x.scale(t) + sample.y.scale(&s);
        let second = sample.x.scale(&s) + sample.y.scale(t);
        let inner_sum = f.eval(&first) + f.eval(&second);
        let outer_sum = f.eval(&sample.x) + f.eval(&sample.y);
        if inner_sum > outer_sum {
            violations.push(ClassicViolation {
                index,
                sample: sample.clone(),
                inner_sum,
                outer_sum,
            });
        }
    }
    let verdict = if violations.is_empty() {
        Verdict::CertifiedOnSamples
    } else {
        Verdict::Violated
    };
    Ok(ClassicWrightReport {
        descriptor: f.descriptor().to_owned(),
        samples_checked: samples.len(),
        violations,
        verdict,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    const D: Radicand = Radicand::DEFAULT;

    fn q(s: &str) -> QuadElem {
        s.parse().unwrap()
    }

    fn r(s: &str) -> Rational {
        s.parse().unwrap()
    }

    fn fact(k: u32) -> QuadElem {
        QuadElem::from(Rational::factorial(k))
    }

    #[test]
    fn counterexample_values() {
        let f1 = counterexample_f(1, D).unwrap();
        assert_eq!(f1.eval(&q("1 + sqrt(2)")), q("3"));
        let f2 = counterexample_f(2, D).unwrap();
        assert_eq!(f2.eval(&q("sqrt(2)")), q("2*sqrt(2)"));
        for n in 1..=5 {
            let f = counterexample_f(n, D).unwrap();
            let x = q("-7/3");
            assert_eq!(f.eval(&x), x.pow(n + 1));
        }
        assert!(matches!(counterexample_f(0, D), Err(Error::ZeroOrder)));
    }

    #[test]
    fn witness_shape() {
        assert_eq!(
            paper_witness(1, D).unwrap().steps(),
            &[q("-1 + sqrt(2)"), q("1")]
        );
        assert_eq!(
            paper_witness(3, D).unwrap().steps(),
            &[
                q("-1 + sqrt(2)"),
                q("1"),
                q("1 + sqrt(2)"),
                q("1 + sqrt(2)")
            ]
        );
        for n in 1..=8 {
            let w = paper_witness(n, D).unwrap();
            assert_eq!(w.len(), n as usize + 1);
            assert!(w.iter().all(QuadElem::is_positive));
        }
    }

    #[test]
    fn closed_form_wright_values() {
        for n in 1..=8 {
            let w = paper_witness(n, D).unwrap();
            assert_eq!(closed_form_wright_delta(n, &w, D).unwrap(), -fact(n + 1));
        }
        let rational = StepVector::new(vec![q("1/2"), q("3"), q("2/5")]).unwrap();
        assert_eq!(
            closed_form_wright_delta(2, &rational, D).unwrap(),
            rational.product().scale(&Rational::factorial(3))
        );
        assert!(closed_form_wright_delta(3, &rational, D).is_err());
    }

    #[test]
    fn closed_form_jensen_values() {
        assert_eq!(closed_form_jensen_delta(2, &q("1"), D).unwrap(), q("6"));
        assert_eq!(
            closed_form_jensen_delta(1, &q("sqrt(2)"), D).unwrap(),
            q("4")
        );
        let mut sampler = Sampler::with_seed(3);
        for _ in 0..200 {
            let h = sampler.positive_quad();
            for n in 1..=4 {
                assert!(closed_form_jensen_delta(n, &h, D).unwrap().is_positive());
            }
        }
    }

    #[test]
    fn closed_form_matches_direct_evaluation() {
        let mut sampler = Sampler::with_seed(17);
        for n in 1..=4 {
            let f = counterexample_f(n, D).unwrap();
            for _ in 0..10 {
                let hs = StepVector::new(sampler.positive_steps(n as usize + 1)).unwrap();
                let x = sampler.quad();
                assert_eq!(
                    delta_iterated(&f, &hs, &x),
                    closed_form_wright_delta(n, &hs, D).unwrap()
                );
            }
        }
    }

    #[test]
    fn jensen_campaign_certifies_counterexample() {
        for n in 1..=3 {
            let f = counterexample_f(n, D).unwrap();
            let report = check_convexity(
                &f,
                &ConvexityKind::jensen(n).unwrap(),
                &CheckConfig::with_samples(50),
                9,
            )
            .unwrap();
            assert_eq!(report.verdict, Verdict::CertifiedOnSamples);
            assert_eq!(report.samples_checked, 50);
            assert_eq!(report.strict_count, 50);
        }
    }

    #[test]
    fn wright_campaign_refutes_counterexample_at_witness() {
        let n = 2;
        let f = counterexample_f(n, D).unwrap();
        let witness = WitnessSample::new(q("5/3 - sqrt(2)"), paper_witness(n, D).unwrap()).unwrap();
        let config = CheckConfig {
            prepend: vec![witness],
            ..CheckConfig::with_samples(20)
        };
        let report = check_convexity(&f, &ConvexityKind::wright(n).unwrap(), &config, 1).unwrap();
        assert_eq!(report.verdict, Verdict::Violated);
        let first = &report.violations[0];
        assert_eq!(first.index, 0);
        assert_eq!(first.lhs, q("-6"));
        assert_eq!(first.required_rhs, QuadElem::zero());
        for v in &report.violations {
            assert!(v.lhs < v.required_rhs);
        }
    }

    #[test]
    fn power_function_is_wright_convex_on_samples() {
        let n = 3;
        let report = check_convexity(
            &RealFunction::power(n + 1),
            &ConvexityKind::wright(n).unwrap(),
            &CheckConfig::with_samples(40),
            5,
        )
        .unwrap();
        assert_eq!(report.verdict, Verdict::CertifiedOnSamples);
    }

    #[test]
    fn campaign_config_errors() {
        let f = RealFunction::power(2);
        let kind = ConvexityKind::jensen(1).unwrap();
        assert!(matches!(
            check_convexity(&f, &kind, &CheckConfig::with_samples(0), 0),
            Err(Error::InvalidConfig(_))
        ));
        let unequal = WitnessSample::new(q("0"), paper_witness(1, D).unwrap()).unwrap();
        let config = CheckConfig {
            prepend: vec![unequal],
            ..CheckConfig::default()
        };
        assert!(check_convexity(&f, &kind, &config, 0).is_err());
    }

    #[test]
    fn kind_construction() {
        assert!(ConvexityKind::jensen(0).is_err());
        assert!(ConvexityKind::strong_wright(1, Rational::zero()).is_err());
        assert!(ConvexityKind::strong_jensen(1, r("-1/2")).is_err());
        let kind = ConvexityKind::from_parts("strong-wright", 2, Some(r("1/3"))).unwrap();
        assert_eq!(kind.to_string(), "strong-wright(n=2, c=1/3)");
        assert!(ConvexityKind::from_parts("wright", 2, Some(r("1"))).is_err());
        assert!(ConvexityKind::from_parts("strong-jensen", 2, None).is_err());
        assert!(ConvexityKind::from_parts("midpoint", 2, None).is_err());
    }

    #[test]
    fn strong_shift_examples() {
        let c = r("7/2");
        let n = 2;
        let f = counterexample_f(n, D).unwrap();
        let back = strong_unshift(&strong_shift(&f, n, &c).unwrap(), n, &c).unwrap();
        let cx = RealFunction::power(n + 1).scale(&c);
        let zero = strong_shift(&cx, n, &c).unwrap();
        let base = strong_unshift(&RealFunction::constant(QuadElem::zero()), n, &c).unwrap();
        let mut sampler = Sampler::with_seed(8);
        for _ in 0..20 {
            let x = sampler.quad();
            assert_eq!(back.eval(&x), f.eval(&x));
            assert!(zero.eval(&x).is_zero());
            assert_eq!(base.eval(&x), x.pow(n + 1).scale(&c));
        }
        assert!(strong_shift(&f, n, &Rational::zero()).is_err());
        assert!(strong_unshift(&f, n, &r("-1")).is_err());
        assert!(strong_counterexample(n, &Rational::zero(), D).is_err());
    }

    #[test]
    fn strong_counterexample_deficit() {
        for c in ["1/3", "1", "7/2"] {
            let c = r(c);
            for n in 1..=3 {
                let f = strong_counterexample(n, &c, D).unwrap();
                let kind = ConvexityKind::strong_wright(n, c.clone()).unwrap();
                let sample =
                    WitnessSample::new(q("1/2 + 3*sqrt(2)"), paper_witness(n, D).unwrap()).unwrap();
                let lhs = kind.lhs(&f, &sample);
                let rhs = kind.required_rhs(&sample.steps);
                assert_eq!(&rhs - &lhs, fact(n + 1));
            }
        }
    }

    #[test]
    fn classic_wright_checks() {
        let square = RealFunction::power(2);
        let mut sampler = Sampler::with_seed(4);
        let mut samples = vec![
            ClassicSample {
                x: q("1"),
                y: q("sqrt(2)"),
                t: Rational::zero(),
            },
            ClassicSample {
                x: q("1"),
                y: q("sqrt(2)"),
                t: Rational::one(),
            },
            ClassicSample {
                x: q("-3"),
                y: q("5 - sqrt(2)"),
                t: r("1/2"),
            },
        ];
        for _ in 0..50 {
            let t = sampler.positive_rational();
            let t = if t > Rational::one() {
                t.recip().unwrap()
            } else {
                t
            };
            samples.push(ClassicSample {
                x: sampler.quad(),
                y: sampler.quad(),
                t,
            });
        }
        let report = check_classic_wright(&square, &samples).unwrap();
        assert_eq!(report.verdict, Verdict::CertifiedOnSamples);

        let concave = RealFunction::power(2).scale(&r("-1"));
        let report = check_classic_wright(&concave, &samples[2..3]).unwrap();
        assert_eq!(report.verdict, Verdict::Violated);

        let bad = ClassicSample {
            x: q("0"),
            y: q("1"),
            t: r("3/2"),
        };
        assert!(matches!(
            check_classic_wright(&square, &[bad]),
            Err(Error::ParameterOutOfRange(_))
        ));
    }

    #[test]
    fn classic_endpoints_are_equalities() {
        let f = counterexample_f(1, D).unwrap();
        for t in [Rational::zero(), Rational::one()] {
            let sample = ClassicSample {
                x: q("2 - sqrt(2)"),
                y: q("1/3 + sqrt(2)"),
                t,
            };
            let t = &sample.t;
            let s = Rational::one() - t;
            let inner = f.eval(&(sample.x.scale(t) + sample.y.scale(&s)))
                + f.eval(&(sample.x.scale(&s) + sample.y.scale(t)));
            assert_eq!(inner, f.eval(&sample.x) + f.eval(&sample.y));
        }
    }

    #[test]
    fn other_radicand_witness_still_refutes() {
        let d = Radicand::new(3).unwrap();
        for n in 1..=4 {
            let f = counterexample_f(n, d).unwrap();
            let w = paper_witness(n, d).unwrap();
            assert_eq!(delta_iterated(&f, &w, &QuadElem::root(d)), -fact(n + 1));
        }
    }
}
