//! Deterministic, seeded sampling of rationals and field elements.
//!
//! Every campaign draws its quantifier instances from a [`Sampler`]; with a
//! fixed seed the sequence is identical across runs and platforms.

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::{Deserialize, Serialize};

use crate::additive::AdditiveMap;
use crate::error::{Error, Result};
use crate::exactnum::{QuadElem, Radicand, Rational};

/// Magnitude limits for sampled rationals: `|p| <= num_bound`, `1 <= q <= den_bound`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct SamplerBounds {
    pub num_bound: u32,
    pub den_bound: u32,
}

impl SamplerBounds {
    pub fn new(num_bound: u32, den_bound: u32) -> Result<Self> {
        let bounds = SamplerBounds {
            num_bound,
            den_bound,
        };
        bounds.validate()?;
        Ok(bounds)
    }

    pub fn validate(&self) -> Result<()> {
        if self.num_bound == 0 || self.den_bound == 0 {
            return Err(Error::InvalidConfig(
                "sampler bounds must be at least 1".into(),
            ));
        }
        Ok(())
    }
}

impl Default for SamplerBounds {
    fn default() -> Self {
        SamplerBounds {
            num_bound: 100,
            den_bound: 100,
        }
    }
}

#[derive(Debug, Clone)]
pub struct Sampler {
    rng: ChaCha8Rng,
    bounds: SamplerBounds,
    radicand: Radicand,
}

impl Sampler {
    pub fn new(seed: u64, bounds: SamplerBounds, radicand: Radicand) -> Result<Self> {
        bounds.validate()?;
        Ok(Sampler {
            rng: ChaCha8Rng::seed_from_u64(seed),
            bounds,
            radicand,
        })
    }

    /// Default bounds over Q(sqrt 2).
    pub fn with_seed(seed: u64) -> Self {
        Sampler::new(seed, SamplerBounds::default(), Radicand::DEFAULT)
            .expect("default bounds are valid")
    }

    pub fn bounds(&self) -> SamplerBounds {
        self.bounds
    }

    pub fn radicand(&self) -> Radicand {
        self.radicand
    }

    pub fn rational(&mut self) -> Rational {
        let n = self.bounds.num_bound as i64;
        let numer = self.rng.random_range(-n..=n);
        let denom = self.rng.random_range(1..=self.bounds.den_bound as i64);
        Rational::new(numer, denom).expect("denominator is at least 1")
    }

    pub fn nonzero_rational(&mut self) -> Rational {
        loop {
            let q = self.rational();
            if !q.is_zero() {
                return q;
            }
        }
    }

    pub fn positive_rational(&mut self) -> Rational {
        let q = self.nonzero_rational();
        q.abs()
    }

    pub fn quad(&mut self) -> QuadElem {
        let rat = self.rational();
        let irr = self.rational();
        QuadElem::new(rat, irr, self.radicand)
    }

    /// Rejection-samples until the element is strictly positive.
    pub fn positive_quad(&mut self) -> QuadElem {
        loop {
            let x = self.quad();
            if x.is_positive() {
                return x;
            }
        }
    }

    pub fn positive_steps(&mut self, len: usize) -> Vec<QuadElem> {
        (0..len).map(|_| self.positive_quad()).collect()
    }

    pub fn steps(&mut self, len: usize) -> Vec<QuadElem> {
        (0..len).map(|_| self.quad()).collect()
    }

    /// Coefficients `c_0, ..., c_degree` of a random polynomial.
    pub fn polynomial(&mut self, degree: usize) -> Vec<Rational> {
        (0..=degree).map(|_| self.rational()).collect()
    }

    pub fn additive_map(&mut self) -> AdditiveMap {
        let one = self.quad();
        let root = self.quad();
        AdditiveMap::new(one, root, self.radicand).expect("sampled over one radicand")
    }

    pub fn index(&mut self, upper: usize) -> usize {
        self.rng.random_range(0..upper)
    }

    pub fn coin(&mut self) -> bool {
        self.rng.random()
    }
}
