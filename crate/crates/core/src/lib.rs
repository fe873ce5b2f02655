//! Exact computation of degenerate (λ-deformed) Bernoulli, Stirling, and
//! polylogarithm sequence families over arbitrary-precision rationals, plus a
//! verification suite that recomputes every supported identity along
//! independent paths and demands exact agreement.
//!
//! λ can be a concrete rational or a symbolic polynomial variable; a symbolic
//! run of a check establishes an identity for every λ at the verified
//! indices, because each side is a polynomial identity of bounded degree.

pub mod degenerate;
pub mod identity;
pub mod scalar;
pub mod sequences;
pub mod series;

pub use identity::{run_suite, FaultTarget, IdentityCheck, SuiteConfig, Verdict};
pub use scalar::{CoeffRing, LambdaPoly, Poly, Rational, ScalarError};
pub use sequences::{ComputePath, Family, SequenceValue, Triangle};
pub use series::{SeriesError, TruncatedSeries, ValuatedSeries};
