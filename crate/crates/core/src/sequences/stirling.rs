//! Stirling numbers of both kinds, classical and degenerate.
//!
//! Second kind: x^n = Σ_k S₂(n,k)(x)_k, degenerate (x)_{n,λ} = Σ_k
//! S_{2,λ}(n,k)(x)_k, generating function (e_λ(t)−1)^k/k!. First kind
//! (signed): (x)_n = Σ_k S₁(n,k)x^k, degenerate (x)_n = Σ_k
//! S_{1,λ}(n,k)(x)_{k,λ}, generating function (log_λ(1+t))^k/k!. Each table
//! below names the route it uses; routes are deliberately independent.

use num_traits::{One, Zero};

use crate::degenerate::{
    exp_series, falling_factorial_poly, lambda_falling_factorial, lambda_falling_factorial_poly,
    log_series,
};
use crate::scalar::{binomial_rat, factorial_rat, rat, CoeffRing, Poly, Rational};
use crate::series::TruncatedSeries;

use super::Triangle;

/// T(n,k) = n!/k! · [tⁿ] baseᵏ for a base series with zero constant term.
fn gf_triangle<R: CoeffRing>(base: &TruncatedSeries<R>, order: usize) -> Triangle<R> {
    debug_assert_eq!(base.order(), order);
    debug_assert!(base.coeff(0).is_zero());
    let mut rows: Vec<Vec<R>> = (0..=order).map(|n| vec![R::zero(); n + 1]).collect();
    let mut power = TruncatedSeries::one(order);
    for k in 0..=order {
        if k > 0 {
            power = power.mul(base);
        }
        let k_factorial = factorial_rat(k);
        for (n, prow) in rows.iter_mut().enumerate().skip(k) {
            let scale = factorial_rat(n) / &k_factorial;
            prow[k] = power.coeff(n).clone() * &R::from_rational(&scale);
        }
    }
    Triangle::from_rows(rows)
}

/// Express `target` in the monic triangular basis b_0, …, b_n (deg b_k = k)
/// by back-substitution. Panics if the basis is not monic-triangular.
fn expand_in_basis<R: CoeffRing>(target: &Poly<R>, basis: &[Poly<R>]) -> Vec<R> {
    let n = basis.len() - 1;
    debug_assert!(target.degree().map_or(true, |d| d <= n));
    let mut remainder = target.clone();
    let mut out = vec![R::zero(); n + 1];
    for k in (0..=n).rev() {
        let c = remainder.coefficient(k);
        if !c.is_zero() {
            remainder = remainder - &basis[k].scale(&c);
        }
        out[k] = c;
    }
    assert!(
        remainder.is_zero(),
        "basis expansion left a nonzero remainder"
    );
    out
}

/// e^t − 1 truncated: the classical second-kind base.
fn classical_exp_minus_one(order: usize) -> TruncatedSeries<Rational> {
    TruncatedSeries::from_fn(order, |n| {
        if n == 0 {
            Rational::zero()
        } else {
            factorial_rat(n).recip()
        }
    })
}

/// log(1+t) truncated: the classical first-kind base.
fn classical_log1p(order: usize) -> TruncatedSeries<Rational> {
    TruncatedSeries::from_fn(order, |n| {
        if n == 0 {
            Rational::zero()
        } else {
            let sign = if n % 2 == 1 { 1 } else { -1 };
            rat(sign, n as i64)
        }
    })
}

/// Classical S₂ via generating-function extraction.
pub fn stirling2_table(order: usize) -> Triangle<Rational> {
    gf_triangle(&classical_exp_minus_one(order), order)
}

/// Classical S₂ via the triangle recurrence S₂(n+1,k) = k·S₂(n,k) + S₂(n,k−1).
pub fn stirling2_recurrence_table(order: usize) -> Triangle<Rational> {
    let mut rows: Vec<Vec<Rational>> = vec![vec![Rational::one()]];
    for n in 0..order {
        let mut row = vec![Rational::zero(); n + 2];
        for (k, slot) in row.iter_mut().enumerate() {
            let keep = if k <= n {
                rows[n][k].clone() * Rational::from_int(k as i64)
            } else {
                Rational::zero()
            };
            let split = if k >= 1 {
                rows[n][k - 1].clone()
            } else {
                Rational::zero()
            };
            *slot = keep + split;
        }
        rows.push(row);
    }
    Triangle::from_rows(rows)
}

/// S₂(n,k) by enumerating every set partition of {0,…,n−1} (as restricted
/// growth strings) and counting those with exactly k blocks. Exponential in
/// n; an oracle for small indices only.
pub fn stirling2_partition_count(n: usize, k: usize) -> u64 {
    fn walk(assignment: &mut Vec<usize>, n: usize, k: usize, hits: &mut u64) {
        if assignment.len() == n {
            let blocks = assignment.iter().copied().max().map_or(0, |m| m + 1);
            if blocks == k {
                *hits += 1;
            }
            return;
        }
        let fresh = assignment.iter().copied().max().map_or(0, |m| m + 1);
        for block in 0..=fresh {
            assignment.push(block);
            walk(assignment, n, k, hits);
            assignment.pop();
        }
    }
    if n == 0 {
        return u64::from(k == 0);
    }
    let mut hits = 0;
    walk(&mut Vec::with_capacity(n), n, k, &mut hits);
    hits
}

/// Classical signed S₁ via generating-function extraction.
pub fn stirling1_table(order: usize) -> Triangle<Rational> {
    gf_triangle(&classical_log1p(order), order)
}

/// Classical signed S₁ by expanding the falling factorials (x)_n in the
/// monomial basis.
pub fn stirling1_falling_factorial_table(order: usize) -> Triangle<Rational> {
    let rows = (0..=order)
        .map(|n| {
            let p: Poly<Rational> = falling_factorial_poly(n);
            (0..=n).map(|k| p.coefficient(k)).collect()
        })
        .collect();
    Triangle::from_rows(rows)
}

/// Degenerate S_{2,λ} via the generating function (e_λ(t)−1)^k/k!.
pub fn deg_stirling2_table<R: CoeffRing>(lambda: &R, order: usize) -> Triangle<R> {
    let base = exp_series(&R::one(), lambda, order).sub(&TruncatedSeries::one(order));
    gf_triangle(&base, order)
}

/// Degenerate S_{2,λ} via the binomial sum
/// (1/k!) Σ_j (−1)^(k−j) C(k,j) (j)_{n,λ}.
pub fn deg_stirling2_sum_table<R: CoeffRing>(lambda: &R, order: usize) -> Triangle<R> {
    let rows = (0..=order)
        .map(|n| {
            (0..=n)
                .map(|k| {
                    let mut acc = R::zero();
                    for j in 0..=k {
                        let j_embedded = R::from_int(j as i64);
                        let term = lambda_falling_factorial(&j_embedded, n, lambda)
                            * &R::from_rational(&binomial_rat(k as u64, j as u64));
                        if (k - j) % 2 == 0 {
                            acc = acc + &term;
                        } else {
                            acc = acc - &term;
                        }
                    }
                    acc * &R::from_rational(&factorial_rat(k).recip())
                })
                .collect()
        })
        .collect();
    Triangle::from_rows(rows)
}

/// Degenerate S_{2,λ} by expanding (x)_{n,λ} in the classical falling
/// factorial basis (x)_k.
pub fn deg_stirling2_expansion_table<R: CoeffRing>(lambda: &R, order: usize) -> Triangle<R> {
    let basis: Vec<Poly<R>> = (0..=order).map(falling_factorial_poly).collect();
    let rows = (0..=order)
        .map(|n| {
            let target = lambda_falling_factorial_poly(n, lambda);
            let mut coeffs = expand_in_basis(&target, &basis[..=n]);
            coeffs.truncate(n + 1);
            coeffs
        })
        .collect();
    Triangle::from_rows(rows)
}

/// Degenerate S_{1,λ} via the generating function (log_λ(1+t))^k/k!.
pub fn deg_stirling1_table<R: CoeffRing>(lambda: &R, order: usize) -> Triangle<R> {
    gf_triangle(&log_series(lambda, order), order)
}

/// Degenerate S_{1,λ} via the triangle recurrence
/// S_{1,λ}(n+1,k) = S_{1,λ}(n,k−1) + (λk − n)·S_{1,λ}(n,k).
pub fn deg_stirling1_recurrence_table<R: CoeffRing>(lambda: &R, order: usize) -> Triangle<R> {
    let mut rows: Vec<Vec<R>> = vec![vec![R::one()]];
    for n in 0..order {
        let mut row = vec![R::zero(); n + 2];
        for (k, slot) in row.iter_mut().enumerate() {
            let mut acc = if k >= 1 {
                rows[n][k - 1].clone()
            } else {
                R::zero()
            };
            if k <= n {
                let weight = lambda.clone() * &R::from_int(k as i64) - R::from_int(n as i64);
                acc = acc + &(weight * &rows[n][k]);
            }
            *slot = acc;
        }
        rows.push(row);
    }
    Triangle::from_rows(rows)
}

/// Degenerate S_{1,λ} by expanding (x)_n in the degenerate falling factorial
/// basis (x)_{k,λ}.
pub fn deg_stirling1_expansion_table<R: CoeffRing>(lambda: &R, order: usize) -> Triangle<R> {
    let basis: Vec<Poly<R>> = (0..=order)
        .map(|k| lambda_falling_factorial_poly(k, lambda))
        .collect();
    let rows = (0..=order)
        .map(|n| {
            let target: Poly<R> = falling_factorial_poly(n);
            let mut coeffs = expand_in_basis(&target, &basis[..=n]);
            coeffs.truncate(n + 1);
            coeffs
        })
        .collect();
    Triangle::from_rows(rows)
}

/// Classical S₂(n,k); zero outside 0 ≤ k ≤ n.
pub fn stirling2(n: usize, k: usize) -> Rational {
    stirling2_table(n).value(n, k)
}

/// Classical signed S₁(n,k); zero outside 0 ≤ k ≤ n.
pub fn stirling1(n: usize, k: usize) -> Rational {
    stirling1_table(n).value(n, k)
}

/// Degenerate S_{2,λ}(n,k) along the generating-function route.
pub fn deg_stirling2<R: CoeffRing>(n: usize, k: usize, lambda: &R) -> R {
    deg_stirling2_table(lambda, n).value(n, k)
}

/// Degenerate S_{1,λ}(n,k) along the generating-function route.
pub fn deg_stirling1<R: CoeffRing>(n: usize, k: usize, lambda: &R) -> R {
    deg_stirling1_table(lambda, n).value(n, k)
}
