//! The named sequence families: Stirling numbers of both kinds (classical and
//! degenerate), Carlitz degenerate Bernoulli polynomials, and the
//! polylogarithm-weighted degenerate Bernoulli family.
//!
//! Every family is computable along at least two independent routes
//! (generating-function extraction, explicit finite sums, recurrences, basis
//! expansions, iterated integrals); the identity suite insists the routes
//! agree exactly. Table builders return plain immutable values — compute a
//! table once per (λ, order, k) and share it; entries never change after
//! construction, so sharing across threads is safe.

mod bernoulli;
mod stirling;

pub use bernoulli::{
    carlitz_beta, carlitz_beta_table, classical_bernoulli_numbers, classical_bernoulli_polynomials,
    poly_bernoulli, poly_bernoulli_integral_table, poly_bernoulli_poly,
    poly_bernoulli_poly_sum_table, poly_bernoulli_poly_table, poly_bernoulli_series,
    poly_bernoulli_sum_table, poly_bernoulli_table,
};
pub use stirling::{
    deg_stirling1, deg_stirling1_expansion_table, deg_stirling1_recurrence_table,
    deg_stirling1_table, deg_stirling2, deg_stirling2_expansion_table, deg_stirling2_sum_table,
    deg_stirling2_table, stirling1, stirling1_falling_factorial_table, stirling1_table, stirling2,
    stirling2_partition_count, stirling2_recurrence_table, stirling2_table,
};

use std::fmt;

use crate::degenerate::polylog_series;
use crate::scalar::CoeffRing;

/// Triangular table T(n,k) for 0 ≤ k ≤ n ≤ N; indices outside the triangle
/// read as zero.
#[derive(Debug, Clone, PartialEq)]
pub struct Triangle<R> {
    rows: Vec<Vec<R>>,
}

impl<R: CoeffRing> Triangle<R> {
    pub(crate) fn from_rows(rows: Vec<Vec<R>>) -> Self {
        for (n, row) in rows.iter().enumerate() {
            debug_assert_eq!(row.len(), n + 1, "row {n} must have {} entries", n + 1);
        }
        Triangle { rows }
    }

    /// Largest row index N.
    pub fn size(&self) -> usize {
        self.rows.len() - 1
    }

    /// T(n,k), with the usual convention T(n,k) = 0 for k > n.
    pub fn value(&self, n: usize, k: usize) -> R {
        self.rows
            .get(n)
            .and_then(|row| row.get(k))
            .cloned()
            .unwrap_or_else(R::zero)
    }

    pub fn rows(&self) -> &[Vec<R>] {
        &self.rows
    }

    /// Overwrite one entry; used by the suite's fault-injection fixture.
    pub(crate) fn set(&mut self, n: usize, k: usize, value: R) {
        self.rows[n][k] = value;
    }

    /// Map the entries into another ring (e.g. evaluate λ-polynomials at a
    /// point).
    pub fn map<S: CoeffRing>(&self, mut f: impl FnMut(&R) -> S) -> Triangle<S> {
        Triangle {
            rows: self
                .rows
                .iter()
                .map(|row| row.iter().map(&mut f).collect())
                .collect(),
        }
    }
}

/// The sequence families exposed by the table interface.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Family {
    /// Classical Bernoulli numbers B_n.
    Bernoulli,
    /// Carlitz degenerate Bernoulli numbers β_{n,λ}.
    Carlitz,
    /// Degenerate poly-Bernoulli numbers β⁽ᵏ⁾_{n,λ}.
    PolyBernoulli,
    /// Classical Stirling numbers of the first kind (signed).
    Stirling1,
    /// Classical Stirling numbers of the second kind.
    Stirling2,
    /// Degenerate Stirling numbers of the first kind.
    DegStirling1,
    /// Degenerate Stirling numbers of the second kind.
    DegStirling2,
    /// Coefficients of the degenerate polylogarithm l_{k,λ}.
    DegPolylogCoeffs,
}

impl Family {
    pub const ALL: [Family; 8] = [
        Family::Bernoulli,
        Family::Carlitz,
        Family::PolyBernoulli,
        Family::Stirling1,
        Family::Stirling2,
        Family::DegStirling1,
        Family::DegStirling2,
        Family::DegPolylogCoeffs,
    ];

    pub fn id(self) -> &'static str {
        match self {
            Family::Bernoulli => "bernoulli",
            Family::Carlitz => "carlitz",
            Family::PolyBernoulli => "poly-bernoulli",
            Family::Stirling1 => "stirling1",
            Family::Stirling2 => "stirling2",
            Family::DegStirling1 => "deg-stirling1",
            Family::DegStirling2 => "deg-stirling2",
            Family::DegPolylogCoeffs => "deg-polylog-coeffs",
        }
    }

    pub fn parse(id: &str) -> Option<Family> {
        Family::ALL.into_iter().find(|f| f.id() == id)
    }

    /// Families parameterized by λ.
    pub fn needs_lambda(self) -> bool {
        matches!(
            self,
            Family::Carlitz
                | Family::PolyBernoulli
                | Family::DegStirling1
                | Family::DegStirling2
                | Family::DegPolylogCoeffs
        )
    }

    /// Families parameterized by a polylogarithm order k.
    pub fn needs_k(self) -> bool {
        matches!(self, Family::PolyBernoulli | Family::DegPolylogCoeffs)
    }

    /// Families indexed by a pair (n, k) rather than a single n.
    pub fn is_triangular(self) -> bool {
        matches!(
            self,
            Family::Stirling1 | Family::Stirling2 | Family::DegStirling1 | Family::DegStirling2
        )
    }
}

impl fmt::Display for Family {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.id())
    }
}

/// Which computation route produced a value.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ComputePath {
    /// Generating-function coefficient extraction.
    Series,
    /// Triangle or history recurrence.
    Recurrence,
    /// Explicit finite sum.
    ExplicitSum,
    /// Iterated-integral pipeline.
    IteratedIntegral,
    /// Basis expansion / triangular inversion.
    Expansion,
    /// Direct combinatorial enumeration.
    Enumeration,
}

impl ComputePath {
    pub fn id(self) -> &'static str {
        match self {
            ComputePath::Series => "series",
            ComputePath::Recurrence => "recurrence",
            ComputePath::ExplicitSum => "explicit-sum",
            ComputePath::IteratedIntegral => "iterated-integral",
            ComputePath::Expansion => "expansion",
            ComputePath::Enumeration => "enumeration",
        }
    }
}

impl fmt::Display for ComputePath {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.id())
    }
}

/// One exact value of a named family, tagged with its indices and the route
/// that produced it.
#[derive(Debug, Clone, PartialEq)]
pub struct SequenceValue<R> {
    pub family: Family,
    pub n: usize,
    /// Second index: Stirling column, or polylogarithm order.
    pub k: Option<i32>,
    pub lambda: Option<R>,
    pub value: R,
    pub path: ComputePath,
}

/// Errors from assembling family tables.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum FamilyError {
    MissingLambda(Family),
    MissingK(Family),
}

impl fmt::Display for FamilyError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            FamilyError::MissingLambda(fam) => {
                write!(f, "family {fam} needs a --lambda argument")
            }
            FamilyError::MissingK(fam) => write!(f, "family {fam} needs a --k argument"),
        }
    }
}

impl std::error::Error for FamilyError {}

/// All values of a family up to index `n_max`, in deterministic
/// lexicographic index order, computed along the family's canonical route.
pub fn family_rows<R: CoeffRing>(
    family: Family,
    n_max: usize,
    k: Option<i32>,
    lambda: Option<&R>,
) -> Result<Vec<SequenceValue<R>>, FamilyError> {
    if family.needs_lambda() && lambda.is_none() {
        return Err(FamilyError::MissingLambda(family));
    }
    if family.needs_k() && k.is_none() {
        return Err(FamilyError::MissingK(family));
    }
    let lam = lambda.cloned();
    let row = |n: usize, kk: Option<i32>, value: R, path: ComputePath| SequenceValue {
        family,
        n,
        k: kk,
        lambda: lam.clone(),
        value,
        path,
    };

    let rows = match family {
        Family::Bernoulli => classical_bernoulli_numbers(n_max)
            .iter()
            .enumerate()
            .map(|(n, b)| row(n, None, R::from_rational(b), ComputePath::Recurrence))
            .collect(),
        Family::Carlitz => {
            let lambda = lambda.expect("checked above");
            carlitz_beta_table(lambda, &R::zero(), n_max)
                .into_iter()
                .enumerate()
                .map(|(n, v)| row(n, None, v, ComputePath::Series))
                .collect()
        }
        Family::PolyBernoulli => {
            let lambda = lambda.expect("checked above");
            let k = k.expect("checked above");
            poly_bernoulli_table(k, lambda, n_max)
                .into_iter()
                .enumerate()
                .map(|(n, v)| row(n, Some(k), v, ComputePath::Series))
                .collect()
        }
        Family::Stirling1 | Family::Stirling2 => {
            let table = if family == Family::Stirling1 {
                stirling1_table(n_max)
            } else {
                stirling2_table(n_max)
            };
            triangle_rows(&table.map(|q| R::from_rational(q)), row)
        }
        Family::DegStirling1 => {
            let lambda = lambda.expect("checked above");
            triangle_rows(&deg_stirling1_table(lambda, n_max), row)
        }
        Family::DegStirling2 => {
            let lambda = lambda.expect("checked above");
            triangle_rows(&deg_stirling2_table(lambda, n_max), row)
        }
        Family::DegPolylogCoeffs => {
            let lambda = lambda.expect("checked above");
            let k = k.expect("checked above");
            let series = polylog_series(k, lambda, n_max);
            (0..=n_max)
                .map(|n| row(n, Some(k), series.coeff(n).clone(), ComputePath::Series))
                .collect()
        }
    };
    Ok(rows)
}

fn triangle_rows<R: CoeffRing>(
    table: &Triangle<R>,
    row: impl Fn(usize, Option<i32>, R, ComputePath) -> SequenceValue<R>,
) -> Vec<SequenceValue<R>> {
    let mut out = Vec::new();
    for n in 0..=table.size() {
        for k in 0..=n {
            out.push(row(
                n,
                Some(k as i32),
                table.value(n, k),
                ComputePath::Series,
            ));
        }
    }
    out
}
