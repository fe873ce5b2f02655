//! Deterministic input builders shared by the benchmarks.

use polybern::scalar::{rat, LambdaPoly, Rational};
use polybern::series::TruncatedSeries;

/// A dense rational series with non-trivial, reproducible coefficients.
pub fn dense_series(order: usize) -> TruncatedSeries<Rational> {
    TruncatedSeries::from_fn(order, |n| {
        let n = n as i64;
        rat(3 * n * n - 7 * n + 5, n + 3)
    })
}

/// A unit series (nonzero constant term) for division benchmarks.
pub fn unit_series(order: usize) -> TruncatedSeries<Rational> {
    TruncatedSeries::from_fn(order, |n| {
        let n = n as i64;
        rat(2 * n + 1, n * n + 2)
    })
}

/// An inner series (zero constant term) for composition benchmarks.
pub fn inner_series(order: usize) -> TruncatedSeries<Rational> {
    TruncatedSeries::from_fn(order, |n| {
        if n == 0 {
            rat(0, 1)
        } else {
            let n = n as i64;
            rat(n - 4, 2 * n + 3)
        }
    })
}

/// The symbolic λ.
pub fn symbolic_lambda() -> LambdaPoly {
    LambdaPoly::var()
}
