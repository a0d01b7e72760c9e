use hoconvex::convexity::draw_samples;
use hoconvex::{
    check_convexity, closed_form_jensen_delta, closed_form_wright_delta, counterexample_f,
    delta_equal, delta_iterated, paper_witness, strong_counterexample, strong_shift,
    strong_unshift, CheckConfig, ConvexityKind, Execution, QuadElem, Radicand, Rational,
    RealFunction, Sampler, StepVector, Verdict, WitnessSample,
};

const D: Radicand = Radicand::DEFAULT;

fn r(s: &str) -> Rational {
    s.parse().unwrap()
}

#[test]
fn closed_form_matches_direct_for_random_positive_steps() {
    let mut sampler = Sampler::with_seed(1234);
    for n in 1..=6u32 {
        let f = counterexample_f(n, D).unwrap();
        for _ in 0..40 {
            let hs = StepVector::new(sampler.positive_steps(n as usize + 1)).unwrap();
            let closed = closed_form_wright_delta(n, &hs, D).unwrap();
            for _ in 0..2 {
                assert_eq!(delta_iterated(&f, &hs, &sampler.quad()), closed);
            }
        }
    }
}

#[test]
fn wright_refutation_is_x_independent() {
    let mut sampler = Sampler::with_seed(77);
    for n in 1..=8u32 {
        let f = counterexample_f(n, D).unwrap();
        let w = paper_witness(n, D).unwrap();
        let expected = -QuadElem::from(Rational::factorial(n + 1));
        for _ in 0..3 {
            assert_eq!(delta_iterated(&f, &w, &sampler.quad()), expected);
        }
    }
}

/// `Δ_h^{n+1} g >= 0` exactly when `Δ_h^{n+1} f >= c (n+1)! h^{n+1}`, with
/// `g = f - c x^{n+1}`; likewise for general positive step vectors.
#[test]
fn shift_equivalence_for_both_quantifiers() {
    let mut sampler = Sampler::with_seed(31);
    let functions = [
        |n| counterexample_f(n, D).unwrap(),
        |_| RealFunction::polynomial(vec![r("1"), r("-3"), r("0"), r("1/2"), r("-1/5")]),
        |n: u32| RealFunction::power(n + 1).scale(&r("2/3")),
    ];
    for c in [r("1/3"), r("1"), r("7/2")] {
        for n in 1..=3u32 {
            for make in &functions {
                let f = make(n);
                let g = strong_shift(&f, n, &c).unwrap();
                let jensen = ConvexityKind::strong_jensen(n, c.clone()).unwrap();
                let wright = ConvexityKind::strong_wright(n, c.clone()).unwrap();
                for _ in 0..15 {
                    let x = sampler.quad();
                    let h = sampler.positive_quad();
                    let equal = WitnessSample::new(
                        x.clone(),
                        StepVector::equal(h.clone(), n as usize + 1).unwrap(),
                    )
                    .unwrap();
                    let plain_ok = delta_equal(&g, &h, n + 1, &x) >= QuadElem::zero();
                    let strong_ok = jensen.lhs(&f, &equal) >= jensen.required_rhs(&equal.steps);
                    assert_eq!(plain_ok, strong_ok);

                    let hs = StepVector::new(sampler.positive_steps(n as usize + 1)).unwrap();
                    let general = WitnessSample::new(x.clone(), hs.clone()).unwrap();
                    let plain_ok = delta_iterated(&g, &hs, &x) >= QuadElem::zero();
                    let strong_ok = wright.lhs(&f, &general) >= wright.required_rhs(&hs);
                    assert_eq!(plain_ok, strong_ok);
                }
            }
        }
    }
}

#[test]
fn unshift_adds_the_modulus_term() {
    let mut sampler = Sampler::with_seed(8);
    let c = r("7/2");
    for n in 1..=4u32 {
        let g = counterexample_f(n, D).unwrap();
        let f = strong_unshift(&g, n, &c).unwrap();
        for _ in 0..10 {
            let (x, h) = (sampler.quad(), sampler.positive_quad());
            let bonus = h.pow(n + 1).scale(&(&c * &Rational::factorial(n + 1)));
            assert_eq!(
                delta_equal(&f, &h, n + 1, &x),
                delta_equal(&g, &h, n + 1, &x) + bonus
            );
        }
    }
}

#[test]
fn strong_counterexample_certified_and_refuted() {
    for c in [r("1/3"), r("1"), r("7/2")] {
        for n in 1..=3u32 {
            let f = strong_counterexample(n, &c, D).unwrap();
            let jensen = ConvexityKind::strong_jensen(n, c.clone()).unwrap();
            let report =
                check_convexity(&f, &jensen, &CheckConfig::with_samples(40), n as u64).unwrap();
            assert_eq!(report.verdict, Verdict::CertifiedOnSamples);

            let witness =
                WitnessSample::new(QuadElem::integer(3), paper_witness(n, D).unwrap()).unwrap();
            let config = CheckConfig {
                prepend: vec![witness],
                ..CheckConfig::with_samples(5)
            };
            let wright = ConvexityKind::strong_wright(n, c.clone()).unwrap();
            let report = check_convexity(&f, &wright, &config, 0).unwrap();
            let first = &report.violations[0];
            assert_eq!(first.index, 0);
            assert_eq!(first.deficit(), QuadElem::from(Rational::factorial(n + 1)));
        }
    }
}

#[test]
fn jensen_closed_form_positive_for_every_order() {
    let mut sampler = Sampler::with_seed(2);
    for _ in 0..300 {
        let h = sampler.positive_quad();
        for n in 1..=8 {
            assert!(closed_form_jensen_delta(n, &h, D).unwrap().is_positive());
        }
    }
}

/// Anything certified Wright on a sample set is certified Jensen on the
/// equal-step members of that set.
#[test]
fn wright_certification_implies_jensen_on_equal_steps() {
    let n = 2;
    let wright = ConvexityKind::wright(n).unwrap();
    let jensen = ConvexityKind::jensen(n).unwrap();
    let functions = [
        RealFunction::power(3),
        RealFunction::polynomial(vec![r("1"), r("1"), r("-5"), r("1/2")]),
        RealFunction::power(4),
        counterexample_f(n, D).unwrap(),
    ];
    let mut sampler = Sampler::with_seed(4);
    let mut certified = 0;
    for f in &functions {
        let mut equal_samples = Vec::new();
        for _ in 0..20 {
            let h = sampler.positive_quad();
            let steps = StepVector::equal(h, n as usize + 1).unwrap();
            equal_samples.push(WitnessSample::new(sampler.quad(), steps).unwrap());
        }
        let config = CheckConfig {
            prepend: equal_samples.clone(),
            ..CheckConfig::with_samples(30)
        };
        let report = check_convexity(f, &wright, &config, 6).unwrap();
        if report.verdict == Verdict::CertifiedOnSamples {
            certified += 1;
            let subset = CheckConfig {
                prepend: equal_samples,
                samples: 0,
                ..CheckConfig::default()
            };
            let jensen_report = check_convexity(f, &jensen, &subset, 0).unwrap();
            assert_eq!(jensen_report.verdict, Verdict::CertifiedOnSamples);
        }
    }
    assert_eq!(certified, 2);
}

#[test]
fn sequential_and_parallel_campaigns_agree() {
    let n = 3;
    let f = counterexample_f(n, D).unwrap();
    let kind = ConvexityKind::wright(n).unwrap();
    let seq = CheckConfig {
        execution: Execution::Sequential,
        ..CheckConfig::with_samples(64)
    };
    let par = CheckConfig::with_samples(64);
    let a = check_convexity(&f, &kind, &seq, 10).unwrap();
    let b = check_convexity(&f, &kind, &par, 10).unwrap();
    assert_eq!(a.violations, b.violations);
    assert_eq!(a.strict_count, b.strict_count);
    let indices: Vec<usize> = a.violations.iter().map(|v| v.index).collect();
    let mut sorted = indices.clone();
    sorted.sort_unstable();
    assert_eq!(indices, sorted);
}

#[test]
fn recorded_violations_recheck() {
    let n = 2;
    let f = counterexample_f(n, D).unwrap();
    let kind = ConvexityKind::wright(n).unwrap();
    let report = check_convexity(&f, &kind, &CheckConfig::with_samples(100), 3).unwrap();
    for v in &report.violations {
        assert!(v.lhs < v.required_rhs);
        assert_eq!(kind.lhs(&f, &v.sample), v.lhs);
    }
}

#[test]
fn samples_are_deterministic_and_positive() {
    let kind = ConvexityKind::wright(4).unwrap();
    let config = CheckConfig::with_samples(50);
    let a = draw_samples(&kind, &config, 17).unwrap();
    let b = draw_samples(&kind, &config, 17).unwrap();
    assert_eq!(a, b);
    assert!(a
        .iter()
        .all(|s| s.steps.len() == 5 && s.steps.iter().all(QuadElem::is_positive)));
    let jensen = draw_samples(&ConvexityKind::jensen(4).unwrap(), &config, 17).unwrap();
    assert!(jensen.iter().all(|s| s.steps.is_uniform()));
}
