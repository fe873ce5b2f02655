//! Bernoulli-type families.
//!
//! Classical B_n(x) from t·e^{xt}/(e^t−1); Carlitz degenerate β_{n,λ}(x) from
//! t·e_λ^x(t)/(e_λ(t)−1); and the polylogarithm-weighted degenerate family
//! β⁽ᵏ⁾_{n,λ}(x), whose numbers have the generating function
//! l_{k,λ}(1−e_λ(−t)) / (1−e_λ(−t)) and which recover (−1)ⁿβ_{n,λ} at k = 1.
//!
//! The poly-Bernoulli numbers come with three genuinely different routes: the
//! generating-function composition, a finite Stirling-weighted sum, and (for
//! k ≥ 2) an iterated-integral pipeline over valuated series. Route
//! agreement is what the identity suite certifies.

use crate::degenerate::{exp_series, lambda_falling_factorial, one_minus_exp_neg, polylog_series};
use crate::scalar::{
    binomial_rat, factorial_rat, integer_power, rat, CoeffRing, Rational, ScalarError,
};
use crate::series::{TruncatedSeries, ValuatedSeries};

use num_traits::{One, Zero};

/// Classical Bernoulli numbers B_0..B_order from the recurrence
/// Σ_{j≤n} C(n+1,j)·B_j = 0 (B_0 = 1).
pub fn classical_bernoulli_numbers(order: usize) -> Vec<Rational> {
    let mut values = vec![Rational::one()];
    for n in 1..=order {
        let mut acc = Rational::zero();
        for (j, b) in values.iter().enumerate() {
            acc += binomial_rat(n as u64 + 1, j as u64) * b;
        }
        values.push(-acc / rat(n as i64 + 1, 1));
    }
    values
}

/// Classical Bernoulli polynomials B_n(x) = Σ_k C(n,k)·B_k·x^(n−k).
pub fn classical_bernoulli_polynomials(order: usize, x: &Rational) -> Vec<Rational> {
    let numbers = classical_bernoulli_numbers(order);
    (0..=order)
        .map(|n| {
            let mut acc = Rational::zero();
            for (k, b) in numbers.iter().enumerate().take(n + 1) {
                acc += binomial_rat(n as u64, k as u64) * b * x.pow((n - k) as i32);
            }
            acc
        })
        .collect()
}

/// The unit series (e_λ(t)−1)/t, with coefficients (1)_{n+1,λ}/(n+1)!.
fn carlitz_denominator_unit<R: CoeffRing>(lambda: &R, order: usize) -> TruncatedSeries<R> {
    let one = R::one();
    let mut ff = R::one(); // (1)_{j,λ}
    let mut coeffs = Vec::with_capacity(order + 1);
    for j in 0..=order {
        let factor = one.clone() - &(lambda.clone() * &R::from_int(j as i64));
        ff = ff * &factor; // now (1)_{j+1,λ}
        coeffs.push(ff.clone() * &R::from_rational(&factorial_rat(j + 1).recip()));
    }
    TruncatedSeries::from_coeffs(coeffs)
}

/// Carlitz degenerate Bernoulli polynomials β_{0,λ}(x)..β_{N,λ}(x) by series
/// division of t·e_λ^x(t)/(e_λ(t)−1). The numbers are the x = 0 column.
pub fn carlitz_beta_table<R: CoeffRing>(lambda: &R, x: &R, order: usize) -> Vec<R> {
    let numerator = exp_series(x, lambda, order);
    let quotient = numerator
        .div(&carlitz_denominator_unit(lambda, order))
        .expect("(e_λ(t)−1)/t has constant term 1");
    quotient.egf_values()
}

/// β_{n,λ}(x) for a single index.
pub fn carlitz_beta<R: CoeffRing>(n: usize, lambda: &R, x: &R) -> R {
    carlitz_beta_table(lambda, x, n).pop().expect("n-th entry")
}

/// Number-level generating function Σ β⁽ᵏ⁾_{n,λ} tⁿ/n! through t^order,
/// exact, via composition of the polylogarithm with 1 − e_λ(−t) and one
/// valuated division.
pub fn poly_bernoulli_series<R: CoeffRing>(k: i32, lambda: &R, order: usize) -> TruncatedSeries<R> {
    // One extra order so dividing out the common t factor stays exact
    // through t^order.
    let internal = order + 1;
    let substitution = one_minus_exp_neg(lambda, internal);
    let composed = polylog_series(k, lambda, internal)
        .compose(&substitution)
        .expect("substitution series vanishes at t = 0");
    let quotient = ValuatedSeries::from_series(&composed)
        .div(&ValuatedSeries::from_series(&substitution))
        .expect("1 − e_λ(−t) has unit t-coefficient");
    quotient
        .to_series(order)
        .expect("quotient of equal valuations is a power series")
}

/// Degenerate poly-Bernoulli numbers β⁽ᵏ⁾_{0,λ}..β⁽ᵏ⁾_{N,λ}:
/// generating-function route.
pub fn poly_bernoulli_table<R: CoeffRing>(k: i32, lambda: &R, order: usize) -> Vec<R> {
    poly_bernoulli_series(k, lambda, order).egf_values()
}

/// Degenerate poly-Bernoulli numbers by the explicit Stirling-weighted sum
/// β⁽ᵏ⁾_{n,λ} = (−1)ⁿ Σ_m ∏_{j=1}^m(λ−j) · S_{2,λ}(n,m)/(m+1)ᵏ.
///
/// The weight ∏_{j=1}^m(λ−j) is computed as a product, never via a division
/// by λ, so the route is polynomial in λ and well defined at λ = 0.
pub fn poly_bernoulli_sum_table<R: CoeffRing>(k: i32, lambda: &R, order: usize) -> Vec<R> {
    let stirling = super::deg_stirling2_table(lambda, order);
    (0..=order)
        .map(|n| {
            let mut acc = R::zero();
            let mut weight = R::one(); // ∏_{j=1}^m (λ−j) at m = 0
            for m in 0..=n {
                if m > 0 {
                    let factor = lambda.clone() - R::from_int(m as i64);
                    weight = weight * &factor;
                }
                let scale = integer_power(m as u64 + 1, -k);
                let term = weight.clone() * &stirling.value(n, m) * &R::from_rational(&scale);
                acc = acc + &term;
            }
            if n % 2 == 0 {
                acc
            } else {
                -acc
            }
        })
        .collect()
}

/// Degenerate poly-Bernoulli numbers via the iterated-integral pipeline,
/// defined for k ≥ 2.
///
/// With F(t) = e_λ^{1−λ}(−t)/(1−e_λ(−t)) (offset −1), the pipeline is:
/// start from g = F·t (a unit power series); repeat (k−2) times
/// { integrate, multiply by F }; integrate once more; multiply by
/// 1/(1−e_λ(−x)). For k = 2 this is the single integral
/// (1/(1−e_λ(−x))) ∫₀ˣ t·e_λ^{1−λ}(−t)/(1−e_λ(−t)) dt.
pub fn poly_bernoulli_integral_table<R: CoeffRing>(
    k: i32,
    lambda: &R,
    order: usize,
) -> Result<Vec<R>, ScalarError> {
    if k < 2 {
        return Err(ScalarError::Domain(
            "the iterated-integral route is defined for k >= 2",
        ));
    }
    // Unit of (1−e_λ(−t))/t, directly at the working order.
    let one = R::one();
    let mut ff = R::one();
    let mut unit_coeffs = Vec::with_capacity(order + 1);
    for j in 0..=order {
        let factor = one.clone() - &(lambda.clone() * &R::from_int(j as i64));
        ff = ff * &factor; // (1)_{j+1,λ}
        let signed = if j % 2 == 0 { ff.clone() } else { -ff.clone() };
        unit_coeffs.push(signed * &R::from_rational(&factorial_rat(j + 1).recip()));
    }
    let unit = TruncatedSeries::from_coeffs(unit_coeffs);
    let unit_recip = TruncatedSeries::one(order)
        .div(&unit)
        .expect("unit constant term 1");
    // 1/(1−e_λ(−t)) = t^(−1) · unit⁻¹.
    let denominator_recip = ValuatedSeries::new(-1, unit_recip);
    let shifted_weight = R::one() - lambda.clone();
    let shifted_exp = exp_series(&shifted_weight, lambda, order).alternate_signs();
    let integrand_factor = denominator_recip.mul(&ValuatedSeries::from_series(&shifted_exp));

    // g = F·t, constant term 1.
    let mut g = integrand_factor.mul(&ValuatedSeries::new(1, TruncatedSeries::one(order)));
    for _ in 0..(k - 2) {
        g = integrand_factor.mul(&g.integrate().expect("integrand is a power series"));
    }
    g = g.integrate().expect("integrand is a power series");
    let result = denominator_recip.mul(&g);
    Ok(result
        .to_series(order)
        .expect("pipeline output is a power series")
        .egf_values())
}

/// β⁽ᵏ⁾_{n,λ} for a single index, generating-function route.
pub fn poly_bernoulli<R: CoeffRing>(n: usize, k: i32, lambda: &R) -> R {
    poly_bernoulli_table(k, lambda, n)
        .pop()
        .expect("n-th entry")
}

/// Degenerate poly-Bernoulli polynomials β⁽ᵏ⁾_{n,λ}(x): generating-function
/// route, multiplying the number-level series by e_λ^x(−t).
pub fn poly_bernoulli_poly_table<R: CoeffRing>(k: i32, lambda: &R, x: &R, order: usize) -> Vec<R> {
    let numbers = poly_bernoulli_series(k, lambda, order);
    let twist = exp_series(x, lambda, order).alternate_signs();
    numbers.mul(&twist).egf_values()
}

/// Degenerate poly-Bernoulli polynomials via the binomial convolution
/// β⁽ᵏ⁾_{n,λ}(x) = Σ_l C(n,l)·β⁽ᵏ⁾_{l,λ}·(−1)^(n−l)·(x)_{n−l,λ}.
pub fn poly_bernoulli_poly_sum_table<R: CoeffRing>(
    k: i32,
    lambda: &R,
    x: &R,
    order: usize,
) -> Vec<R> {
    let numbers = poly_bernoulli_table(k, lambda, order);
    (0..=order)
        .map(|n| {
            let mut acc = R::zero();
            for (l, b) in numbers.iter().enumerate().take(n + 1) {
                let term = b.clone()
                    * &lambda_falling_factorial(x, n - l, lambda)
                    * &R::from_rational(&binomial_rat(n as u64, l as u64));
                if (n - l) % 2 == 0 {
                    acc = acc + &term;
                } else {
                    acc = acc - &term;
                }
            }
            acc
        })
        .collect()
}

/// β⁽ᵏ⁾_{n,λ}(x) for a single index, generating-function route.
pub fn poly_bernoulli_poly<R: CoeffRing>(n: usize, k: i32, lambda: &R, x: &R) -> R {
    poly_bernoulli_poly_table(k, lambda, x, n)
        .pop()
        .expect("n-th entry")
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::scalar::LambdaPoly;

    fn sym() -> LambdaPoly {
        LambdaPoly::var()
    }

    fn lp(coeffs: &[(i64, i64)]) -> LambdaPoly {
        LambdaPoly::from_coeffs(coeffs.iter().map(|&(n, d)| rat(n, d)).collect())
    }

    #[test]
    fn classical_bernoulli_values() {
        let b = classical_bernoulli_numbers(6);
        assert_eq!(b[0], rat(1, 1));
        assert_eq!(b[1], rat(-1, 2));
        assert_eq!(b[2], rat(1, 6));
        assert_eq!(b[3], rat(0, 1));
        assert_eq!(b[4], rat(-1, 30));
        assert_eq!(b[6], rat(1, 42));
    }

    #[test]
    fn classical_bernoulli_poly_at_one() {
        // B_n(1) − B_n = δ_{n,1}.
        let numbers = classical_bernoulli_numbers(8);
        let at_one = classical_bernoulli_polynomials(8, &Rational::one());
        for n in 0..=8 {
            let difference = at_one[n].clone() - &numbers[n];
            let expected = if n == 1 {
                Rational::one()
            } else {
                Rational::zero()
            };
            assert_eq!(difference, expected, "n = {n}");
        }
    }

    #[test]
    fn carlitz_low_indices() {
        let table = carlitz_beta_table(&sym(), &LambdaPoly::zero(), 2);
        assert_eq!(table[0], LambdaPoly::one());
        assert_eq!(table[1], lp(&[(-1, 2), (1, 2)])); // (λ−1)/2
        assert_eq!(table[2], lp(&[(1, 6), (0, 1), (-1, 6)])); // (1−λ²)/6
    }

    #[test]
    fn carlitz_hand_division_oracle() {
        // Invert e_λ(t)−1 = t·(1 + (1−λ)/2·t + (1−λ)(1−2λ)/6·t²) by hand:
        // with u = 1 + u₁t + u₂t², 1/u = 1 − u₁t + (u₁²−u₂)t², so
        // β₁ = 1!·(−u₁) and β₂ = 2!·(u₁²−u₂).
        let lambda = sym();
        let u1 = (LambdaPoly::one() - &lambda).scale(&rat(1, 2));
        let u2 = ((LambdaPoly::one() - &lambda) * &(LambdaPoly::one() - &lambda.scale(&rat(2, 1))))
            .scale(&rat(1, 6));
        let beta1 = -u1.clone();
        let beta2 = (u1.clone() * &u1 - &u2).scale(&rat(2, 1));
        let table = carlitz_beta_table(&lambda, &LambdaPoly::zero(), 2);
        assert_eq!(table[1], beta1);
        assert_eq!(table[2], beta2);
    }

    #[test]
    fn carlitz_classical_limit() {
        let order = 10;
        let symbolic = carlitz_beta_table(&sym(), &LambdaPoly::zero(), order);
        let classical = classical_bernoulli_numbers(order);
        for n in 0..=order {
            assert_eq!(symbolic[n].eval(&Rational::zero()), classical[n], "n = {n}");
        }
        // Polynomial case, x = 1/2.
        let x = LambdaPoly::from_rational(&rat(1, 2));
        let symbolic = carlitz_beta_table(&sym(), &x, order);
        let classical = classical_bernoulli_polynomials(order, &rat(1, 2));
        for n in 0..=order {
            assert_eq!(symbolic[n].eval(&Rational::zero()), classical[n], "n = {n}");
        }
    }

    #[test]
    fn poly_bernoulli_index_zero_is_one() {
        for k in [-2, 0, 1, 3] {
            assert_eq!(poly_bernoulli(0, k, &sym()), LambdaPoly::one());
            assert_eq!(poly_bernoulli(0, k, &rat(2, 3)), Rational::one());
        }
    }

    #[test]
    fn poly_bernoulli_order_one_reduction() {
        // β⁽¹⁾_{n,λ} = (−1)ⁿ β_{n,λ}
        let order = 10;
        let poly = poly_bernoulli_table(1, &sym(), order);
        let carlitz = carlitz_beta_table(&sym(), &LambdaPoly::zero(), order);
        for n in 0..=order {
            let expected = if n % 2 == 0 {
                carlitz[n].clone()
            } else {
                -carlitz[n].clone()
            };
            assert_eq!(poly[n], expected, "n = {n}");
        }
    }

    #[test]
    fn poly_bernoulli_first_index_closed_form() {
        // β⁽ᵏ⁾_{1,λ} = (1−λ)/2ᵏ
        for k in [-1, 0, 1, 2, 4] {
            let expected = (LambdaPoly::one() - &sym()).scale(&integer_power(2, -k));
            assert_eq!(poly_bernoulli(1, k, &sym()), expected, "k = {k}");
        }
        assert_eq!(poly_bernoulli(1, 2, &rat(1, 2)), rat(1, 8));
    }

    #[test]
    fn poly_bernoulli_routes_agree() {
        let order = 8;
        for k in [-2, -1, 0, 1, 2, 3] {
            assert_eq!(
                poly_bernoulli_table(k, &sym(), order),
                poly_bernoulli_sum_table(k, &sym(), order),
                "symbolic, k = {k}"
            );
            let lambda = rat(5, 7);
            assert_eq!(
                poly_bernoulli_table(k, &lambda, order),
                poly_bernoulli_sum_table(k, &lambda, order),
                "λ = 5/7, k = {k}"
            );
        }
    }

    #[test]
    fn integral_route_matches_for_k_at_least_two() {
        let order = 8;
        for k in [2, 3, 4] {
            assert_eq!(
                poly_bernoulli_integral_table(k, &sym(), order).unwrap(),
                poly_bernoulli_table(k, &sym(), order),
                "k = {k}"
            );
        }
        assert_eq!(
            poly_bernoulli_integral_table(2, &rat(1, 2), order).unwrap(),
            poly_bernoulli_table(2, &rat(1, 2), order)
        );
    }

    #[test]
    fn integral_route_single_integral_anchor_for_k_two() {
        // For k = 2 the pipeline must reduce to
        // (1/(1−e_λ(−x))) ∫₀ˣ t/(1−e_λ(−t)) · e_λ^{1−λ}(−t) dt,
        // assembled here directly without the loop.
        let order = 9;
        let lambda = sym();
        // Over a unit order of `order`: 1−e_λ(−t) enters as t·(unit at order),
        // so it is built one order higher before the valuation is factored out.
        let substitution = one_minus_exp_neg(&lambda, order + 1);
        let denom = ValuatedSeries::from_series(&substitution);
        let shifted = exp_series(&(LambdaPoly::one() - &lambda), &lambda, order).alternate_signs();
        let integrand = ValuatedSeries::new(1, TruncatedSeries::one(order))
            .div(&denom)
            .unwrap()
            .mul(&ValuatedSeries::from_series(&shifted));
        let direct = denom
            .recip()
            .unwrap()
            .mul(&integrand.integrate().unwrap())
            .to_series(order)
            .unwrap()
            .egf_values();
        assert_eq!(
            direct,
            poly_bernoulli_integral_table(2, &lambda, order).unwrap()
        );
    }

    #[test]
    fn integral_route_rejects_small_k() {
        assert!(matches!(
            poly_bernoulli_integral_table(1, &sym(), 4),
            Err(ScalarError::Domain(_))
        ));
    }

    #[test]
    fn integral_route_value_spot_check() {
        // k = 2, n = 1, λ = 1/2 → (1−λ)/4 = 1/8.
        let table = poly_bernoulli_integral_table(2, &rat(1, 2), 1).unwrap();
        assert_eq!(table[1], rat(1, 8));
        // k = 3, n = 0 → 1.
        let table = poly_bernoulli_integral_table(3, &sym(), 0).unwrap();
        assert_eq!(table[0], LambdaPoly::one());
    }

    #[test]
    fn poly_bernoulli_poly_reduces_at_zero() {
        let order = 7;
        for k in [-1, 1, 2] {
            assert_eq!(
                poly_bernoulli_poly_table(k, &sym(), &LambdaPoly::zero(), order),
                poly_bernoulli_table(k, &sym(), order),
                "k = {k}"
            );
        }
    }

    #[test]
    fn poly_bernoulli_poly_routes_agree() {
        let order = 7;
        let x = LambdaPoly::one() - &sym(); // the shifted argument 1−λ
        for k in [-1, 0, 2] {
            assert_eq!(
                poly_bernoulli_poly_table(k, &sym(), &x, order),
                poly_bernoulli_poly_sum_table(k, &sym(), &x, order),
                "k = {k}"
            );
        }
        assert_eq!(
            poly_bernoulli_poly_table(2, &rat(-1, 3), &rat(1, 1), order),
            poly_bernoulli_poly_sum_table(2, &rat(-1, 3), &rat(1, 1), order)
        );
    }

    #[test]
    fn poly_bernoulli_poly_difference_at_one() {
        // β⁽ᵏ⁾_{1,λ}(1) − β⁽ᵏ⁾_{1,λ} = −1 for every k (pins the sign
        // convention of the difference identity at n = 1).
        for k in [-2, 1, 3] {
            let at_one = poly_bernoulli_poly(1, k, &sym(), &LambdaPoly::one());
            let at_zero = poly_bernoulli(1, k, &sym());
            assert_eq!(at_one - at_zero, -LambdaPoly::one(), "k = {k}");
        }
    }
}
