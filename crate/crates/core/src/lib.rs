//! Exact construction and certification of functions that are higher-order
//! Jensen-convex but not Wright-convex, over the real quadratic field
//! Q(sqrt d).
//!
//! All arithmetic is exact; every inequality is decided by an exact sign
//! computation and every identity by structural equality of canonical forms.

pub mod additive;
pub mod convexity;
pub mod diffcalc;
pub mod error;
pub mod exactnum;
pub mod identities;
pub mod par;
pub mod report;
pub mod sampling;

pub use additive::AdditiveMap;
pub use convexity::{
    check_classic_wright, check_convexity, closed_form_jensen_delta, closed_form_wright_delta,
    counterexample_f, paper_witness, strong_counterexample, strong_shift, strong_unshift,
    CheckConfig, ConvexityKind, ConvexityReport, Verdict, Violation, WitnessSample,
};
pub use diffcalc::{
    delta_equal, delta_iterated, delta_iterated_subset_sum, delta_single, RealFunction, StepVector,
};
pub use error::{Error, Result};
pub use exactnum::{QuadElem, Radicand, Rational, Sign};
pub use par::Execution;
pub use report::{revalidate, verify_counterexample, ReportDocument};
pub use sampling::{Sampler, SamplerBounds};
