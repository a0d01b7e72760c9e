//! Seeded suites that exercise the difference-operator identities exactly:
//! the power-function formula, composition with additive maps, agreement of
//! the independent evaluation routes, and symmetry in the steps.

use serde::Serialize;

use crate::additive::AdditiveMap;
use crate::convexity::counterexample_f;
use crate::diffcalc::{
    check_additive_composition, check_power_identity, delta_equal, delta_iterated,
    delta_iterated_subset_sum, RealFunction, StepVector,
};
use crate::error::{Error, Result};
use crate::exactnum::{QuadElem, Radicand};
use crate::par::{map_ordered, Execution};
use crate::sampling::{Sampler, SamplerBounds};

/// At most this many failures are kept per suite.
const MAX_RECORDED_FAILURES: usize = 16;

#[derive(Debug, Clone)]
pub struct SuiteConfig {
    /// Largest power `n` for the power-function suite.
    pub n_max: u32,
    /// Instances per suite (per `n` for the power-function suite).
    pub samples: usize,
    pub seed: u64,
    pub bounds: SamplerBounds,
    pub radicand: Radicand,
    pub execution: Execution,
}

impl Default for SuiteConfig {
    fn default() -> Self {
        SuiteConfig {
            n_max: 6,
            samples: 200,
            seed: 0,
            bounds: SamplerBounds::default(),
            radicand: Radicand::DEFAULT,
            execution: Execution::default(),
        }
    }
}

impl SuiteConfig {
    pub fn validate(&self) -> Result<()> {
        if self.n_max == 0 {
            return Err(Error::InvalidConfig("n-max must be at least 1".into()));
        }
        if self.n_max > 12 {
            return Err(Error::InvalidConfig(
                "n-max above 12 is not supported".into(),
            ));
        }
        if self.samples == 0 {
            return Err(Error::InvalidConfig("sample count must be positive".into()));
        }
        self.bounds.validate()
    }

    fn sampler(&self, stream: u64) -> Result<Sampler> {
        Sampler::new(
            self.seed
                .wrapping_mul(0x9E37_79B9_7F4A_7C15)
                .wrapping_add(stream),
            self.bounds,
            self.radicand,
        )
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct IdentityFailure {
    pub index: usize,
    pub detail: String,
    pub lhs: QuadElem,
    pub rhs: QuadElem,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct SuiteOutcome {
    pub name: &'static str,
    pub checked: usize,
    pub failure_count: usize,
    pub failures: Vec<IdentityFailure>,
}

impl SuiteOutcome {
    pub fn passed(&self) -> bool {
        self.failure_count == 0
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct SuiteReport {
    pub suites: Vec<SuiteOutcome>,
}

impl SuiteReport {
    pub fn passed(&self) -> bool {
        self.suites.iter().all(SuiteOutcome::passed)
    }
}

fn collect(name: &'static str, results: Vec<Vec<IdentityFailure>>) -> SuiteOutcome {
    let checked = results.len();
    let all: Vec<IdentityFailure> = results.into_iter().flatten().collect();
    SuiteOutcome {
        name,
        checked,
        failure_count: all.len(),
        failures: all.into_iter().take(MAX_RECORDED_FAILURES).collect(),
    }
}

fn compare(
    index: usize,
    detail: impl FnOnce() -> String,
    lhs: QuadElem,
    rhs: QuadElem,
) -> Option<IdentityFailure> {
    (lhs != rhs).then(|| IdentityFailure {
        index,
        detail: detail(),
        lhs,
        rhs,
    })
}

/// Both iterated-difference routes over `x^n` against `n! ∏ h_i`, at three
/// base points per step vector.
pub fn power_identity_suite(config: &SuiteConfig) -> Result<SuiteOutcome> {
    config.validate()?;
    let mut sampler = config.sampler(1)?;
    let mut cases = Vec::new();
    for n in 1..=config.n_max {
        for _ in 0..config.samples {
            let hs = StepVector::new(sampler.steps(n as usize))?;
            let xs: Vec<QuadElem> = (0..3).map(|_| sampler.quad()).collect();
            cases.push((n, hs, xs));
        }
    }
    let results = map_ordered(&cases, config.execution, |(n, hs, xs)| {
        let power = RealFunction::power(*n);
        let mut failures = Vec::new();
        for x in xs {
            let check = check_power_identity(*n, hs, x).expect("length matches n");
            let oracle = delta_iterated_subset_sum(&power, hs, x).expect("n below the cap");
            failures.extend(compare(
                0,
                || format!("recursive, n={n}, x={x}"),
                check.lhs,
                check.rhs.clone(),
            ));
            failures.extend(compare(
                0,
                || format!("subset-sum, n={n}, x={x}"),
                oracle,
                check.rhs,
            ));
        }
        failures
    });
    Ok(collect("power-identity", index_failures(results)))
}

/// `Δ_{hs}(g ∘ a)(x) = Δ_{a(hs)} g(a(x))` for random additive maps,
/// polynomials of degree at most 5, and up to four steps.
pub fn additive_composition_suite(config: &SuiteConfig) -> Result<SuiteOutcome> {
    config.validate()?;
    let mut sampler = config.sampler(2)?;
    let cases: Vec<_> = (0..config.samples)
        .map(|_| {
            let a = AdditiveMap::random(&mut sampler);
            let degree = sampler.index(6);
            let g = sampler.polynomial(degree);
            let k = 1 + sampler.index(4);
            let hs = StepVector::new(sampler.steps(k)).expect("k >= 1");
            let x = sampler.quad();
            (a, g, hs, x)
        })
        .collect();
    let results = map_ordered(&cases, config.execution, |(a, g, hs, x)| {
        let g = RealFunction::polynomial(g.clone());
        let check = check_additive_composition(&g, a, hs, x);
        compare(
            0,
            || format!("g={}, k={}, x={x}", g.descriptor(), hs.len()),
            check.lhs,
            check.rhs,
        )
        .into_iter()
        .collect()
    });
    Ok(collect("additive-composition", index_failures(results)))
}

/// Draws a function from the mixed corpus: polynomials up to degree 6,
/// counterexample functions, and polynomials composed with additive maps.
pub fn corpus_function(sampler: &mut Sampler) -> RealFunction {
    match sampler.index(3) {
        0 => {
            let degree = sampler.index(7);
            RealFunction::polynomial(sampler.polynomial(degree))
        }
        1 => {
            let n = 1 + sampler.index(5) as u32;
            counterexample_f(n, sampler.radicand()).expect("n >= 1")
        }
        _ => {
            let degree = sampler.index(6);
            let g = RealFunction::polynomial(sampler.polynomial(degree));
            g.compose_additive(&AdditiveMap::random(sampler))
        }
    }
}

/// Recursive, subset-sum and (for equal steps) binomial evaluation agree.
pub fn oracle_equivalence_suite(config: &SuiteConfig) -> Result<SuiteOutcome> {
    config.validate()?;
    let mut sampler = config.sampler(3)?;
    let cases: Vec<_> = (0..config.samples)
        .map(|_| {
            let f = corpus_function(&mut sampler);
            let k = 1 + sampler.index(6);
            let steps = if sampler.coin() {
                sampler.steps(k)
            } else {
                vec![sampler.quad(); k]
            };
            let x = sampler.quad();
            (f, StepVector::new(steps).expect("k >= 1"), x)
        })
        .collect();
    let results = map_ordered(&cases, config.execution, |(f, hs, x)| {
        let recursive = delta_iterated(f, hs, x);
        let oracle = delta_iterated_subset_sum(f, hs, x).expect("k <= 6");
        let mut failures: Vec<_> = compare(
            0,
            || format!("subset-sum, f={}", f.descriptor()),
            recursive.clone(),
            oracle,
        )
        .into_iter()
        .collect();
        if hs.is_uniform() {
            let binomial = delta_equal(f, &hs.steps()[0], hs.len() as u32, x);
            failures.extend(compare(
                0,
                || format!("equal-step, f={}", f.descriptor()),
                recursive,
                binomial,
            ));
        }
        failures
    });
    Ok(collect("oracle-equivalence", index_failures(results)))
}

/// Every permutation of up to four steps.
pub fn permutation_symmetry_suite(config: &SuiteConfig) -> Result<SuiteOutcome> {
    config.validate()?;
    let mut sampler = config.sampler(4)?;
    let cases: Vec<_> = (0..config.samples)
        .map(|_| {
            let f = corpus_function(&mut sampler);
            let k = 1 + sampler.index(4);
            (f, sampler.steps(k), sampler.quad())
        })
        .collect();
    let results = map_ordered(&cases, config.execution, |(f, steps, x)| {
        let reference = delta_iterated(f, &StepVector::new(steps.clone()).expect("k >= 1"), x);
        permutations(steps)
            .into_iter()
            .filter_map(|perm| {
                let value = delta_iterated(f, &StepVector::new(perm).expect("k >= 1"), x);
                compare(
                    0,
                    || format!("permuted steps, f={}", f.descriptor()),
                    value,
                    reference.clone(),
                )
            })
            .collect()
    });
    Ok(collect("permutation-symmetry", index_failures(results)))
}

fn index_failures(results: Vec<Vec<IdentityFailure>>) -> Vec<Vec<IdentityFailure>> {
    results
        .into_iter()
        .enumerate()
        .map(|(i, fs)| {
            fs.into_iter()
                .map(|f| IdentityFailure { index: i, ..f })
                .collect()
        })
        .collect()
}

/// All orderings of `items`, the identity ordering first.
pub fn permutations<T: Clone>(items: &[T]) -> Vec<Vec<T>> {
    if items.len() <= 1 {
        return vec![items.to_vec()];
    }
    let mut out = Vec::new();
    for i in 0..items.len() {
        let mut rest = items.to_vec();
        let head = rest.remove(i);
        for mut tail in permutations(&rest) {
            tail.insert(0, head.clone());
            out.push(tail);
        }
    }
    out
}

/// Runs all four suites.
pub fn run_all(config: &SuiteConfig) -> Result<SuiteReport> {
    Ok(SuiteReport {
        suites: vec![
            power_identity_suite(config)?,
            additive_composition_suite(config)?,
            oracle_equivalence_suite(config)?,
            permutation_symmetry_suite(config)?,
        ],
    })
}
