//! Q-linear (additive) self-maps of Q(sqrt d).
//!
//! Q(sqrt d) is two-dimensional over Q with basis `{1, sqrt d}`, so an
//! additive map is pinned down by the images of those two basis vectors.
//! The rational-coordinate projection `alpha` and its complement `beta`
//! are the explicit fragment of a Hamel-basis coordinate split with `1` as
//! a basis element.

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::exactnum::{QuadElem, Radicand, Rational};
use crate::sampling::Sampler;

#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct AdditiveMap {
    image_of_one: QuadElem,
    image_of_root: QuadElem,
    radicand: Radicand,
}

impl AdditiveMap {
    pub fn new(
        image_of_one: QuadElem,
        image_of_root: QuadElem,
        radicand: Radicand,
    ) -> Result<Self> {
        let root = QuadElem::root(radicand);
        for image in [&image_of_one, &image_of_root] {
            if !image.is_compatible(&root) {
                return Err(Error::RadicandMismatch {
                    left: radicand.get(),
                    right: image.radicand().get(),
                });
            }
        }
        Ok(AdditiveMap {
            image_of_one,
            image_of_root,
            radicand,
        })
    }

    /// `alpha(a + b sqrt d) = a`.
    pub fn alpha(radicand: Radicand) -> Self {
        AdditiveMap {
            image_of_one: QuadElem::one(),
            image_of_root: QuadElem::zero(),
            radicand,
        }
    }

    /// `beta(x) = x - alpha(x) = b sqrt d`.
    pub fn beta(radicand: Radicand) -> Self {
        AdditiveMap {
            image_of_one: QuadElem::zero(),
            image_of_root: QuadElem::root(radicand),
            radicand,
        }
    }

    pub fn identity(radicand: Radicand) -> Self {
        AdditiveMap {
            image_of_one: QuadElem::one(),
            image_of_root: QuadElem::root(radicand),
            radicand,
        }
    }

    pub fn zero(radicand: Radicand) -> Self {
        AdditiveMap {
            image_of_one: QuadElem::zero(),
            image_of_root: QuadElem::zero(),
            radicand,
        }
    }

    /// A map with both basis images drawn from the sampler.
    pub fn random(sampler: &mut Sampler) -> Self {
        sampler.additive_map()
    }

    pub fn image_of_one(&self) -> &QuadElem {
        &self.image_of_one
    }

    pub fn image_of_root(&self) -> &QuadElem {
        &self.image_of_root
    }

    pub fn radicand(&self) -> Radicand {
        self.radicand
    }

    /// `x = l0 + l1 sqrt d  |->  l0 * m(1) + l1 * m(sqrt d)`.
    pub fn apply(&self, x: &QuadElem) -> QuadElem {
        assert!(
            x.is_rational() || x.radicand() == self.radicand,
            "additive map over sqrt({}) applied to {x}",
            self.radicand
        );
        self.image_of_one.scale(x.rat()) + self.image_of_root.scale(x.irr())
    }

    /// `self ∘ inner`.
    pub fn compose(&self, inner: &AdditiveMap) -> AdditiveMap {
        AdditiveMap {
            image_of_one: self.apply(&inner.image_of_one),
            image_of_root: self.apply(&inner.image_of_root),
            radicand: self.radicand,
        }
    }

    pub fn sum(&self, other: &AdditiveMap) -> AdditiveMap {
        AdditiveMap {
            image_of_one: &self.image_of_one + &other.image_of_one,
            image_of_root: &self.image_of_root + &other.image_of_root,
            radicand: self.radicand,
        }
    }

    pub fn scale(&self, q: &Rational) -> AdditiveMap {
        AdditiveMap {
            image_of_one: self.image_of_one.scale(q),
            image_of_root: self.image_of_root.scale(q),
            radicand: self.radicand,
        }
    }
}
