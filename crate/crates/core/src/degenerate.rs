//! The degenerate (λ-deformed) elementary functions as truncated series.
//!
//! The deformed exponential e_λ^x(t) = (1+λt)^(x/λ) expands with coefficients
//! (x)_{n,λ}/n!, where (x)_{n,λ} = x(x−λ)⋯(x−(n−1)λ) generalizes both the
//! power x^n (λ = 0) and the falling factorial (λ = 1). Its compositional
//! inverse log_λ(1+t) = ((1+t)^λ − 1)/λ and the deformed polylogarithm
//! l_{k,λ}(x) are built from the same product kernel ∏_{j=1}^{n−1}(λ−j).
//! Everything here recovers the classical exp/log/Li_k series at λ = 0.

use num_traits::Zero;

use crate::scalar::{factorial_rat, integer_power, CoeffRing, Poly, Rational};
use crate::series::TruncatedSeries;

/// Falling factorial x(x−1)⋯(x−n+1); the empty product (n = 0) is 1.
pub fn falling_factorial<R: CoeffRing>(x: &R, n: usize) -> R {
    let mut acc = R::one();
    for i in 0..n {
        let factor = x.clone() - R::from_int(i as i64);
        acc = acc * &factor;
    }
    acc
}

/// Generalized falling factorial (x)_{n,λ} = x(x−λ)(x−2λ)⋯(x−(n−1)λ).
///
/// Reduces to x^n at λ = 0 and to the ordinary falling factorial at λ = 1.
pub fn lambda_falling_factorial<R: CoeffRing>(x: &R, n: usize, lambda: &R) -> R {
    let mut acc = R::one();
    let mut shift = R::zero();
    for _ in 0..n {
        let factor = x.clone() - &shift;
        acc = acc * &factor;
        shift = shift + lambda;
    }
    acc
}

/// e_λ^x(t) = (1+λt)^(x/λ) = Σ (x)_{n,λ} t^n/n!, truncated at `order`.
pub fn exp_series<R: CoeffRing>(x: &R, lambda: &R, order: usize) -> TruncatedSeries<R> {
    let mut coeffs = Vec::with_capacity(order + 1);
    let mut ff = R::one();
    coeffs.push(R::one());
    for n in 1..=order {
        let factor = x.clone() - &(lambda.clone() * &R::from_int(n as i64 - 1));
        ff = ff * &factor;
        coeffs.push(ff.clone() * &R::from_rational(&factorial_rat(n).recip()));
    }
    TruncatedSeries::from_coeffs(coeffs)
}

/// log_λ(1+t) = Σ_{n≥1} ∏_{j=1}^{n−1}(λ−j) · t^n/n!, the compositional
/// inverse of e_λ(t); closed form ((1+t)^λ − 1)/λ.
pub fn log_series<R: CoeffRing>(lambda: &R, order: usize) -> TruncatedSeries<R> {
    let mut coeffs = Vec::with_capacity(order + 1);
    coeffs.push(R::zero());
    let mut prod = R::one();
    for n in 1..=order {
        if n > 1 {
            let factor = lambda.clone() - R::from_int(n as i64 - 1);
            prod = prod * &factor;
        }
        coeffs.push(prod.clone() * &R::from_rational(&factorial_rat(n).recip()));
    }
    TruncatedSeries::from_coeffs(coeffs)
}

/// Degenerate polylogarithm l_{k,λ}(x) = Σ_{n≥1} ∏_{j=1}^{n−1}(j−λ) ·
/// x^n / ((n−1)!·n^k), truncated at `order`. Negative k multiplies by
/// n^|k| instead of dividing; λ = 0 recovers the classical Li_k.
pub fn polylog_series<R: CoeffRing>(k: i32, lambda: &R, order: usize) -> TruncatedSeries<R> {
    let mut coeffs = Vec::with_capacity(order + 1);
    coeffs.push(R::zero());
    let mut prod = R::one();
    for n in 1..=order {
        if n > 1 {
            let factor = R::from_int(n as i64 - 1) - lambda.clone();
            prod = prod * &factor;
        }
        let scale = integer_power(n as u64, -k) / factorial_rat(n - 1);
        coeffs.push(prod.clone() * &R::from_rational(&scale));
    }
    TruncatedSeries::from_coeffs(coeffs)
}

/// 1 − e_λ(−t): vanishes at t = 0 with unit t-coefficient; the substitution
/// argument of the poly-Bernoulli generating function.
pub fn one_minus_exp_neg<R: CoeffRing>(lambda: &R, order: usize) -> TruncatedSeries<R> {
    let e = exp_series(&R::one(), lambda, order).alternate_signs();
    TruncatedSeries::one(order).sub(&e)
}

/// Checks e_λ(log_λ(1+t)) = 1 + t through t^order.
pub fn log_exp_inverse_holds<R: CoeffRing>(lambda: &R, order: usize) -> bool {
    let composed = exp_series(&R::one(), lambda, order)
        .compose(&log_series(lambda, order))
        .expect("log_λ has zero constant term");
    let mut expected = TruncatedSeries::one(order);
    if order >= 1 {
        expected = expected.add(&TruncatedSeries::var(order));
    }
    composed == expected
}

/// Checks d/dx l_{k,λ}(x) = l_{k−1,λ}(x)/x through t^(order−1).
pub fn polylog_derivative_holds<R: CoeffRing>(k: i32, lambda: &R, order: usize) -> bool {
    if order == 0 {
        return true;
    }
    let lhs = polylog_series(k, lambda, order)
        .derive()
        .truncated(order - 1);
    let rhs = polylog_series(k - 1, lambda, order).shift_down(1);
    lhs == rhs
}

/// Checks d/dx e_λ(−x) = −e_λ^{1−λ}(−x) through t^(order−1), building the
/// two sides independently.
pub fn exp_neg_derivative_holds<R: CoeffRing>(lambda: &R, order: usize) -> bool {
    if order == 0 {
        return true;
    }
    let lhs = exp_series(&R::one(), lambda, order)
        .alternate_signs()
        .derive()
        .truncated(order - 1);
    let shifted_weight = R::one() - lambda.clone();
    let rhs = exp_series(&shifted_weight, lambda, order)
        .alternate_signs()
        .neg()
        .truncated(order - 1);
    lhs == rhs
}

/// (x)_n as a polynomial in x over R.
pub fn falling_factorial_poly<R: CoeffRing>(n: usize) -> Poly<R> {
    let x = Poly::var();
    let mut acc = Poly::<R>::from_coeffs(vec![R::one()]);
    for i in 0..n {
        let factor = x.clone() - Poly::constant(R::from_int(i as i64));
        acc = acc * &factor;
    }
    acc
}

/// (x)_{n,λ} as a polynomial in x over R.
pub fn lambda_falling_factorial_poly<R: CoeffRing>(n: usize, lambda: &R) -> Poly<R> {
    let x = Poly::var();
    let mut acc = Poly::<R>::from_coeffs(vec![R::one()]);
    let mut shift = R::zero();
    for _ in 0..n {
        let factor = x.clone() - Poly::constant(shift.clone());
        acc = acc * &factor;
        shift = shift + lambda;
    }
    acc
}

/// Binomial series coefficient C(x, n) = (x)_n/n! for rational x.
pub fn binomial_series_coeff(x: &Rational, n: usize) -> Rational {
    falling_factorial(x, n) / factorial_rat(n)
}

/// Classical binomial-expansion route for e_λ^x(t) at a concrete nonzero
/// rational λ: the t^n coefficient of (1+λt)^(x/λ) is C(x/λ, n)·λ^n. Used as
/// an independent oracle against the product-kernel route.
pub fn exp_series_binomial_oracle(
    x: &Rational,
    lambda: &Rational,
    order: usize,
) -> TruncatedSeries<Rational> {
    assert!(!lambda.is_zero(), "the binomial route needs λ ≠ 0");
    let exponent = x / lambda;
    TruncatedSeries::from_fn(order, |n| {
        binomial_series_coeff(&exponent, n) * lambda.pow(n as i32)
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::scalar::{lambda_product, rat, LambdaPoly};
    use num_traits::{One, Zero};
    use proptest::prelude::*;

    fn sym() -> LambdaPoly {
        LambdaPoly::var()
    }

    #[test]
    fn falling_factorial_examples() {
        assert_eq!(falling_factorial(&rat(5, 1), 3), rat(60, 1));
        assert_eq!(falling_factorial(&rat(9, 7), 0), Rational::one());
        assert_eq!(falling_factorial(&rat(1, 2), 2), rat(-1, 4));
    }

    #[test]
    fn lambda_falling_factorial_examples() {
        assert_eq!(
            lambda_falling_factorial(&Rational::one(), 2, &rat(1, 2)),
            rat(1, 2)
        );
        assert!(lambda_falling_factorial(&Rational::one(), 3, &rat(1, 1)).is_zero());
        // λ = 0 collapses to plain powers.
        assert_eq!(
            lambda_falling_factorial(&rat(3, 1), 4, &Rational::zero()),
            rat(81, 1)
        );
    }

    #[test]
    fn lambda_falling_factorial_recurrence_step() {
        // (1)_{n+1,λ} = (1)_{n,λ}(1 − nλ)
        let lambda = sym();
        let one = LambdaPoly::one();
        for n in 0..8usize {
            let lhs = lambda_falling_factorial(&one, n + 1, &lambda);
            let step = one.clone() - lambda.scale(&rat(n as i64, 1));
            let rhs = lambda_falling_factorial(&one, n, &lambda) * step;
            assert_eq!(lhs, rhs, "n = {n}");
        }
    }

    #[test]
    fn exp_series_at_lambda_one_terminates() {
        // e_1(t) = 1 + t exactly.
        let e = exp_series(&Rational::one(), &Rational::one(), 3);
        assert_eq!(e.coeffs(), &[rat(1, 1), rat(1, 1), rat(0, 1), rat(0, 1)]);
    }

    #[test]
    fn exp_series_squares_binomial() {
        // e_1^2(t) = (1+t)².
        let e = exp_series(&rat(2, 1), &Rational::one(), 3);
        assert_eq!(e.coeffs(), &[rat(1, 1), rat(2, 1), rat(1, 1), rat(0, 1)]);
    }

    #[test]
    fn exp_series_classical_limit() {
        let e = exp_series(&rat(3, 1), &Rational::zero(), 5);
        for n in 0..=5 {
            assert_eq!(e.coeff(n), &(rat(3, 1).pow(n as i32) / factorial_rat(n)));
        }
    }

    #[test]
    fn exp_series_matches_binomial_oracle() {
        for (x, lambda) in [
            (rat(1, 1), rat(1, 2)),
            (rat(2, 3), rat(-1, 3)),
            (rat(-3, 2), rat(2, 1)),
        ] {
            assert_eq!(
                exp_series(&x, &lambda, 9),
                exp_series_binomial_oracle(&x, &lambda, 9),
                "x = {x}, λ = {lambda}"
            );
        }
    }

    #[test]
    fn log_series_quadratic_coefficient() {
        // c_2 = (λ−1)/2, from the closed form C(λ,2)/λ.
        let l = log_series(&sym(), 4);
        assert_eq!(
            l.coeff(2),
            &LambdaPoly::from_coeffs(vec![rat(-1, 2), rat(1, 2)])
        );
    }

    #[test]
    fn log_series_at_lambda_one_is_t() {
        let l = log_series(&Rational::one(), 6);
        assert_eq!(l, TruncatedSeries::var(6));
    }

    #[test]
    fn log_series_classical_limit() {
        let l = log_series(&Rational::zero(), 7);
        for n in 1..=7 {
            let sign = if n % 2 == 1 { 1 } else { -1 };
            assert_eq!(l.coeff(n), &rat(sign, n as i64), "n = {n}");
        }
    }

    #[test]
    fn log_series_matches_closed_form() {
        // ((1+t)^λ − 1)/λ for rational λ ≠ 0, binomial oracle.
        for lambda in [rat(1, 2), rat(-2, 5), rat(3, 1)] {
            let l = log_series(&lambda, 8);
            for n in 1..=8 {
                let expected = binomial_series_coeff(&lambda, n) / lambda.clone();
                assert_eq!(l.coeff(n), &expected, "λ = {lambda}, n = {n}");
            }
        }
    }

    #[test]
    fn log_coefficients_carry_the_product_kernel() {
        let l = log_series(&sym(), 6);
        for n in 1..=6 {
            assert_eq!(
                l.coeff(n).clone() * &LambdaPoly::from_rational(&factorial_rat(n)),
                lambda_product(n).unwrap(),
                "n = {n}"
            );
        }
    }

    #[test]
    fn log_exp_inverse_both_ways() {
        assert!(log_exp_inverse_holds(&rat(1, 2), 12));
        assert!(log_exp_inverse_holds(&sym(), 12));
        assert!(log_exp_inverse_holds(&Rational::one(), 12));

        // Other direction: log_λ(1 + (e_λ(t) − 1)) = t.
        let order = 10;
        let lambda = sym();
        let inner =
            exp_series(&LambdaPoly::one(), &lambda, order).sub(&TruncatedSeries::one(order));
        let composed = log_series(&lambda, order).compose(&inner).unwrap();
        assert_eq!(composed, TruncatedSeries::var(order));
    }

    #[test]
    fn polylog_first_coefficient_is_one() {
        for k in [-3, -1, 0, 1, 2, 5] {
            let l = polylog_series(k, &sym(), 3);
            assert!(l.coeff(0).is_zero());
            assert!(l.coeff(1).is_one(), "k = {k}");
        }
    }

    #[test]
    fn polylog_order_one_is_negated_log() {
        // l_{1,λ}(x) = −log_λ(1−x): flip signs of the log coefficients.
        let lambda = sym();
        let order = 10;
        let lhs = polylog_series(1, &lambda, order);
        let rhs = log_series(&lambda, order).alternate_signs().neg();
        assert_eq!(lhs, rhs);
    }

    #[test]
    fn polylog_classical_limit() {
        for k in [-2, 0, 1, 3] {
            let l = polylog_series(k, &Rational::zero(), 7);
            for n in 1..=7 {
                assert_eq!(l.coeff(n), &integer_power(n as u64, -k), "k = {k}, n = {n}");
            }
        }
    }

    #[test]
    fn polylog_derivative_relation() {
        assert!(polylog_derivative_holds(2, &rat(1, 3), 12));
        assert!(polylog_derivative_holds(1, &sym(), 12));
        assert!(polylog_derivative_holds(0, &rat(2, 1), 12));
        assert!(polylog_derivative_holds(-2, &sym(), 9));
    }

    #[test]
    fn exp_neg_derivative_relation() {
        assert!(exp_neg_derivative_holds(&rat(1, 2), 12));
        assert!(exp_neg_derivative_holds(&sym(), 12));
        assert!(exp_neg_derivative_holds(&Rational::zero(), 12));
    }

    #[test]
    fn one_minus_exp_neg_has_unit_t_coefficient() {
        let g = one_minus_exp_neg(&sym(), 6);
        assert!(g.coeff(0).is_zero());
        assert!(g.coeff(1).is_one());
        let v = crate::series::ValuatedSeries::from_series(&g);
        assert_eq!(v.offset(), Some(1));
        assert!(v.unit().unwrap().coeff(0).is_one());
    }

    #[test]
    fn falling_factorial_poly_expansions() {
        // (x)_3 = x³ − 3x² + 2x
        let p: Poly<Rational> = falling_factorial_poly(3);
        assert_eq!(p.coeffs(), &[rat(0, 1), rat(2, 1), rat(-3, 1), rat(1, 1)]);
        // (x)_{2,λ} = x² − λx
        let q: Poly<LambdaPoly> = lambda_falling_factorial_poly(2, &sym());
        assert_eq!(q.coefficient(1), -sym());
        assert_eq!(q.coefficient(2), LambdaPoly::one());
    }

    proptest! {
        #![proptest_config(ProptestConfig::with_cases(48))]

        #[test]
        fn exp_coefficients_carry_factorials(
            xn in -12i64..12, xd in 1i64..5,
            ln in -12i64..12, ld in 1i64..5,
        ) {
            // n!·[t^n] e_λ^x(t) = (x)_{n,λ}
            let x = rat(xn, xd);
            let lambda = rat(ln, ld);
            let order = 8;
            let e = exp_series(&x, &lambda, order);
            for n in 0..=order {
                prop_assert_eq!(
                    e.coeff(n) * &factorial_rat(n),
                    lambda_falling_factorial(&x, n, &lambda)
                );
            }
        }
    }
}
