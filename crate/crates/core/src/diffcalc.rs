//! The forward difference operator, its iterates, and exact checks of the
//! closed-form identities for power functions and additive compositions.

use std::collections::HashMap;
use std::fmt;
use std::sync::Arc;

use num_bigint::BigInt;
use serde::Serialize;

use crate::additive::AdditiveMap;
use crate::error::{Error, Result};
use crate::exactnum::{QuadElem, Rational};

/// Largest step vector the subset-sum expansion will enumerate (2^24 terms).
pub const SUBSET_SUM_MAX_STEPS: usize = 24;

type EvalFn = dyn Fn(&QuadElem) -> QuadElem + Send + Sync;

/// A pure, total function on Q(sqrt d) together with a printable descriptor.
#[derive(Clone)]
pub struct RealFunction {
    descriptor: String,
    eval: Arc<EvalFn>,
}

impl RealFunction {
    pub fn new<F>(descriptor: impl Into<String>, eval: F) -> Self
    where
        F: Fn(&QuadElem) -> QuadElem + Send + Sync + 'static,
    {
        RealFunction {
            descriptor: descriptor.into(),
            eval: Arc::new(eval),
        }
    }

    pub fn descriptor(&self) -> &str {
        &self.descriptor
    }

    pub fn eval(&self, x: &QuadElem) -> QuadElem {
        (self.eval)(x)
    }

    pub fn constant(value: QuadElem) -> Self {
        RealFunction::new(format!("const {value}"), move |_| value.clone())
    }

    pub fn identity() -> Self {
        RealFunction::new("x", |x| x.clone())
    }

    /// `x |-> x^k`.
    pub fn power(k: u32) -> Self {
        RealFunction::new(format!("x^{k}"), move |x| x.pow(k))
    }

    /// `x |-> c_0 + c_1 x + ... + c_m x^m`, evaluated by Horner's rule.
    pub fn polynomial(coeffs: Vec<Rational>) -> Self {
        let terms: Vec<String> = coeffs
            .iter()
            .enumerate()
            .filter(|(_, c)| !c.is_zero())
            .map(|(i, c)| match i {
                0 => format!("{c}"),
                1 => format!("({c})x"),
                _ => format!("({c})x^{i}"),
            })
            .collect();
        let descriptor = if terms.is_empty() {
            "0".to_owned()
        } else {
            terms.join(" + ")
        };
        RealFunction::new(descriptor, move |x| {
            coeffs.iter().rev().fold(QuadElem::zero(), |acc, c| {
                &acc * x + QuadElem::from(c.clone())
            })
        })
    }

    /// `x |-> self(a(x))`.
    pub fn compose_additive(&self, a: &AdditiveMap) -> Self {
        let outer = self.clone();
        let inner = a.clone();
        RealFunction::new(format!("({}) o additive", self.descriptor), move |x| {
            outer.eval(&inner.apply(x))
        })
    }

    pub fn add(&self, other: &RealFunction) -> Self {
        let (f, g) = (self.clone(), other.clone());
        RealFunction::new(
            format!("({}) + ({})", self.descriptor, other.descriptor),
            move |x| f.eval(x) + g.eval(x),
        )
    }

    pub fn sub(&self, other: &RealFunction) -> Self {
        let (f, g) = (self.clone(), other.clone());
        RealFunction::new(
            format!("({}) - ({})", self.descriptor, other.descriptor),
            move |x| f.eval(x) - g.eval(x),
        )
    }

    pub fn scale(&self, q: &Rational) -> Self {
        let (f, q) = (self.clone(), q.clone());
        RealFunction::new(format!("{q} * ({})", self.descriptor), move |x| {
            f.eval(x).scale(&q)
        })
    }

    pub fn with_descriptor(mut self, descriptor: impl Into<String>) -> Self {
        self.descriptor = descriptor.into();
        self
    }
}

impl fmt::Debug for RealFunction {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_tuple("RealFunction")
            .field(&self.descriptor)
            .finish()
    }
}

/// Ordered, nonempty list of difference steps `h_1, ..., h_k`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize)]
#[serde(transparent)]
pub struct StepVector(Vec<QuadElem>);

impl StepVector {
    pub fn new(steps: Vec<QuadElem>) -> Result<Self> {
        if steps.is_empty() {
            return Err(Error::EmptySteps);
        }
        Ok(StepVector(steps))
    }

    /// Like [`StepVector::new`], additionally requiring every step to be > 0.
    pub fn positive(steps: Vec<QuadElem>) -> Result<Self> {
        let hs = StepVector::new(steps)?;
        hs.ensure_positive()?;
        Ok(hs)
    }

    /// `k` copies of `h`.
    pub fn equal(h: QuadElem, k: usize) -> Result<Self> {
        StepVector::new(vec![h; k])
    }

    pub fn ensure_positive(&self) -> Result<()> {
        match self.0.iter().position(|h| !h.is_positive()) {
            Some(index) => Err(Error::NonPositiveStep {
                index,
                value: self.0[index].to_string(),
            }),
            None => Ok(()),
        }
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn steps(&self) -> &[QuadElem] {
        &self.0
    }

    pub fn iter(&self) -> std::slice::Iter<'_, QuadElem> {
        self.0.iter()
    }

    pub fn product(&self) -> QuadElem {
        self.0.iter().product()
    }

    /// True when all steps coincide, i.e. the vector is an equal-step instance.
    pub fn is_uniform(&self) -> bool {
        self.0.windows(2).all(|w| w[0] == w[1])
    }

    pub fn map(&self, a: &AdditiveMap) -> StepVector {
        StepVector(self.0.iter().map(|h| a.apply(h)).collect())
    }
}

impl TryFrom<Vec<QuadElem>> for StepVector {
    type Error = Error;
    fn try_from(steps: Vec<QuadElem>) -> Result<Self> {
        StepVector::new(steps)
    }
}

/// `Δ_h f(x) = f(x + h) - f(x)`.
pub fn delta_single(f: &RealFunction, h: &QuadElem, x: &QuadElem) -> QuadElem {
    f.eval(&(x + h)) - f.eval(x)
}

/// `Δ_{h_1...h_k} f(x)`, unfolded from the nested definition
/// `Δ_{h_1} (Δ_{h_2} (... (Δ_{h_k} f)))`.
///
/// Evaluations of `f` are memoized on the exact value of each partial-sum
/// point, since distinct subsets of steps can land on the same point.
pub fn delta_iterated(f: &RealFunction, hs: &StepVector, x: &QuadElem) -> QuadElem {
    let mut cache = HashMap::new();
    nested_delta(f, hs.steps(), x, &mut cache)
}

// g_0 = Δ_{h_1} g_1, ..., g_{k-1} = Δ_{h_k} g_k, g_k = f; returns g_0(x).
fn nested_delta(
    f: &RealFunction,
    steps: &[QuadElem],
    x: &QuadElem,
    cache: &mut HashMap<QuadElem, QuadElem>,
) -> QuadElem {
    match steps.split_first() {
        None => {
            if let Some(v) = cache.get(x) {
                return v.clone();
            }
            let v = f.eval(x);
            cache.insert(x.clone(), v.clone());
            v
        }
        Some((h, inner)) => {
            let ahead = nested_delta(f, inner, &(x + h), cache);
            let here = nested_delta(f, inner, x, cache);
            ahead - here
        }
    }
}

/// `Σ_{S ⊆ {1..k}} (-1)^{k-|S|} f(x + Σ_{i∈S} h_i)`, enumerated directly.
pub fn delta_iterated_subset_sum(
    f: &RealFunction,
    hs: &StepVector,
    x: &QuadElem,
) -> Result<QuadElem> {
    let k = hs.len();
    if k > SUBSET_SUM_MAX_STEPS {
        return Err(Error::StepVectorTooLong {
            len: k,
            max: SUBSET_SUM_MAX_STEPS,
        });
    }
    let mut total = QuadElem::zero();
    for mask in 0u32..(1 << k) {
        let point = hs
            .iter()
            .enumerate()
            .filter(|(i, _)| mask & (1 << i) != 0)
            .fold(x.clone(), |acc, (_, h)| acc + h);
        let value = f.eval(&point);
        if (k as u32 - mask.count_ones()).is_multiple_of(2) {
            total = total + value;
        } else {
            total = total - value;
        }
    }
    Ok(total)
}

/// `Δ_h^k f(x) = Σ_{j=0}^k (-1)^{k-j} C(k, j) f(x + j h)`.
///
/// # Panics
/// When `k == 0`.
pub fn delta_equal(f: &RealFunction, h: &QuadElem, k: u32, x: &QuadElem) -> QuadElem {
    assert!(k >= 1, "equal-step difference needs k >= 1");
    let mut binom = BigInt::from(1);
    let mut total = QuadElem::zero();
    let mut point = x.clone();
    for j in 0..=k {
        let term = f.eval(&point).scale(&Rational::from_integer(binom.clone()));
        if (k - j).is_multiple_of(2) {
            total = total + term;
        } else {
            total = total - term;
        }
        binom = binom * (k - j) / (j + 1);
        point = point + h;
    }
    total
}

/// Both sides of an exact identity.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct IdentityCheck {
    pub lhs: QuadElem,
    pub rhs: QuadElem,
}

impl IdentityCheck {
    pub fn holds(&self) -> bool {
        self.lhs == self.rhs
    }
}

/// `Δ_{h_1...h_n}(x^n)` against `n! ∏ h_i`, evaluated at the base point `x`.
pub fn check_power_identity(n: u32, hs: &StepVector, x: &QuadElem) -> Result<IdentityCheck> {
    if hs.len() != n as usize {
        return Err(Error::LengthMismatch {
            expected: n as usize,
            found: hs.len(),
        });
    }
    let lhs = delta_iterated(&RealFunction::power(n), hs, x);
    let rhs = hs.product().scale(&Rational::factorial(n));
    Ok(IdentityCheck { lhs, rhs })
}

/// `Δ_{h_1...h_k}(g ∘ a)(x)` against `Δ_{a(h_1)...a(h_k)} g(a(x))`.
pub fn check_additive_composition(
    g: &RealFunction,
    a: &AdditiveMap,
    hs: &StepVector,
    x: &QuadElem,
) -> IdentityCheck {
    let lhs = delta_iterated(&g.compose_additive(a), hs, x);
    let rhs = delta_iterated(g, &hs.map(a), &a.apply(x));
    IdentityCheck { lhs, rhs }
}
