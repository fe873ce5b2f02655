//! The identity verification suite.
//!
//! Each check recomputes both sides of one identity along independent routes
//! and demands exact equality — coefficientwise through the configured
//! truncation order, for every configured λ representation. A symbolic-λ pass
//! is the strong verdict: both sides are λ-polynomials of bounded degree, so
//! exact agreement at order N proves the identity for all λ at the checked
//! indices. Numeric λ runs are cheap smoke tests of the same code paths.
//!
//! Checks are pure functions of immutable tables; a failed check always
//! carries a counterexample with both sides rendered exactly.

mod checks;

pub use checks::{classical_stirling_delta, Checker};

use serde::Serialize;

use crate::scalar::{LambdaPoly, Rational};

/// Outcome of one check.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Verdict {
    Pass,
    Fail,
}

/// A failing instance: where, and both computed sides rendered exactly.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Counterexample {
    pub location: String,
    pub lhs: String,
    pub rhs: String,
}

/// Result of one identity check for one λ representation.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct IdentityCheck {
    pub name: String,
    pub params: String,
    pub verdict: Verdict,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub counterexample: Option<Counterexample>,
    /// Explicit skip notes (e.g. enumeration beyond the composition budget);
    /// nothing is ever skipped silently.
    #[serde(skip_serializing_if = "Vec::is_empty")]
    pub notes: Vec<String>,
}

impl IdentityCheck {
    pub fn passed(&self) -> bool {
        self.verdict == Verdict::Pass
    }
}

/// Deliberate corruption of one internal table, for exercising the failure
/// path end to end. Exactly the checks that read the corrupted route fail.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum FaultTarget {
    /// Corrupt one entry of the explicit-sum route for poly-Bernoulli numbers.
    PolyBernoulliSum,
    /// Corrupt one entry of the recurrence route for degenerate Stirling-1.
    DegStirling1Recurrence,
    /// Corrupt one Carlitz degenerate Bernoulli number.
    CarlitzSeries,
}

impl FaultTarget {
    pub fn id(self) -> &'static str {
        match self {
            FaultTarget::PolyBernoulliSum => "poly-bernoulli-sum",
            FaultTarget::DegStirling1Recurrence => "deg-stirling1-recurrence",
            FaultTarget::CarlitzSeries => "carlitz-series",
        }
    }

    pub fn parse(s: &str) -> Option<FaultTarget> {
        [
            FaultTarget::PolyBernoulliSum,
            FaultTarget::DegStirling1Recurrence,
            FaultTarget::CarlitzSeries,
        ]
        .into_iter()
        .find(|f| f.id() == s)
    }
}

/// Suite configuration: truncation order, polylogarithm-order range, λ
/// representations, and the enumeration budget for the multinomial check.
#[derive(Debug, Clone, PartialEq)]
pub struct SuiteConfig {
    pub order: usize,
    pub k_min: i32,
    pub k_max: i32,
    /// Run every check with λ kept symbolic.
    pub symbolic: bool,
    /// Additional concrete λ values.
    pub lambdas: Vec<Rational>,
    /// Largest number of weak compositions enumerated per index of the
    /// multinomial check; indices beyond it are skipped with a note.
    pub composition_budget: u64,
    /// Optional deliberate corruption (test fixture).
    pub fault: Option<FaultTarget>,
}

impl Default for SuiteConfig {
    fn default() -> Self {
        SuiteConfig {
            order: 16,
            k_min: -2,
            k_max: 4,
            symbolic: true,
            lambdas: Vec::new(),
            composition_budget: 100_000,
            fault: None,
        }
    }
}

/// The canonical check order of the report.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub(crate) enum CheckId {
    LogExpInverse,
    PolylogDerivative,
    PolylogOrderOne,
    DegExpDerivative,
    ExpLogBinomial,
    StirlingOrthogonality,
    PolyBernoulliStirlingSum,
    PolyBernoulliIntegral,
    PolyBernoulliOrderOne,
    PolyBernoulliConvolution,
    PolyBernoulliMultinomial,
    PolyBernoulliDifference,
    Stirling2Delta,
    ClassicalStirlingDelta,
    DegStirling1Recurrence,
    ReciprocalPowerInversion,
}

pub(crate) const CHECK_ORDER: [CheckId; 16] = [
    CheckId::LogExpInverse,
    CheckId::PolylogDerivative,
    CheckId::PolylogOrderOne,
    CheckId::DegExpDerivative,
    CheckId::ExpLogBinomial,
    CheckId::StirlingOrthogonality,
    CheckId::PolyBernoulliStirlingSum,
    CheckId::PolyBernoulliIntegral,
    CheckId::PolyBernoulliOrderOne,
    CheckId::PolyBernoulliConvolution,
    CheckId::PolyBernoulliMultinomial,
    CheckId::PolyBernoulliDifference,
    CheckId::Stirling2Delta,
    CheckId::ClassicalStirlingDelta,
    CheckId::DegStirling1Recurrence,
    CheckId::ReciprocalPowerInversion,
];

/// Dispatch surface shared by the symbolic and numeric checkers.
trait CheckSet {
    fn run(&self, id: CheckId) -> IdentityCheck;
}

impl<R: crate::scalar::CoeffRing> CheckSet for Checker<R> {
    fn run(&self, id: CheckId) -> IdentityCheck {
        self.dispatch(id)
    }
}

/// Run the whole suite for the given configuration.
///
/// The report order is fixed: checks in canonical order, and within a check
/// the symbolic λ first, then the concrete λ values in configuration order.
/// Two runs with the same configuration produce byte-identical reports.
/// Individual failures never abort the suite. An empty λ configuration
/// (no symbolic, no values) produces an empty report.
pub fn run_suite(config: &SuiteConfig) -> Vec<IdentityCheck> {
    let mut checkers: Vec<Box<dyn CheckSet>> = Vec::new();
    if config.symbolic {
        checkers.push(Box::new(Checker::new(
            LambdaPoly::var(),
            "symbolic",
            config,
        )));
    }
    for lambda in &config.lambdas {
        checkers.push(Box::new(Checker::new(
            lambda.clone(),
            &lambda.to_string(),
            config,
        )));
    }
    if checkers.is_empty() {
        return Vec::new();
    }
    let mut report = Vec::new();
    for id in CHECK_ORDER {
        if id == CheckId::ClassicalStirlingDelta {
            // λ-independent; runs once.
            report.push(classical_stirling_delta(config.order));
            continue;
        }
        for checker in &checkers {
            report.push(checker.run(id));
        }
    }
    report
}

/// Serialize a report as JSON (schema: name, params, verdict,
/// counterexample?, notes?).
pub fn report_to_json(report: &[IdentityCheck]) -> String {
    serde_json::to_string_pretty(report).expect("report serializes")
}

/// Convenience for the common symbolic-only run.
pub fn run_symbolic_suite(order: usize) -> Vec<IdentityCheck> {
    run_suite(&SuiteConfig {
        order,
        ..SuiteConfig::default()
    })
}
