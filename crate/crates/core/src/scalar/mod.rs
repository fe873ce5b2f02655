//! Exact scalars: arbitrary-precision rationals and dense polynomials in the
//! deformation parameter λ over the rationals.
//!
//! Everything downstream (series, sequence tables, identity checks) is generic
//! over [`CoeffRing`], which both [`Rational`] and [`LambdaPoly`] implement.
//! Computing over `Rational` fixes λ to a concrete value; computing over
//! `LambdaPoly` keeps λ symbolic, so a single run of a check establishes an
//! identity for every λ at the verified indices.

mod poly;

pub use poly::{LambdaPoly, Poly};

use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_traits::{One, Pow, Signed, Zero};

/// Arbitrary-precision rational number. Always stored reduced with a positive
/// denominator; renders as `p/q`, or `p` when the denominator is 1.
pub type Rational = num_rational::BigRational;

/// Errors from scalar construction, parsing, and exact division.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum ScalarError {
    /// A rational was requested with denominator zero.
    ZeroDenominator,
    /// Exact division was requested for operands that do not divide.
    NotDivisible,
    /// Division by zero or by a non-unit of the ring.
    DivisionByZero,
    /// Argument outside the defining range of the operation.
    Domain(&'static str),
    /// A scalar string did not match the rendering grammar.
    Parse(String),
}

impl fmt::Display for ScalarError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            ScalarError::ZeroDenominator => write!(f, "denominator must be nonzero"),
            ScalarError::NotDivisible => write!(f, "operands do not divide exactly"),
            ScalarError::DivisionByZero => write!(f, "division by zero or by a non-unit"),
            ScalarError::Domain(msg) => write!(f, "{msg}"),
            ScalarError::Parse(msg) => write!(f, "parse error: {msg}"),
        }
    }
}

impl std::error::Error for ScalarError {}

/// The coefficient-ring contract: a commutative ring with an embedding of the
/// rationals, equality, and enough division to invert unit series
/// coefficients.
///
/// Implemented by [`Rational`] and by [`Poly<R>`] for any coefficient ring
/// `R` (in particular by [`LambdaPoly`]). The ring axioms are not encoded in
/// the type system; they are exercised by randomized tests instead.
pub trait CoeffRing:
    Zero
    + One
    + Neg<Output = Self>
    + Sub<Output = Self>
    + for<'a> Add<&'a Self, Output = Self>
    + for<'a> Sub<&'a Self, Output = Self>
    + for<'a> Mul<&'a Self, Output = Self>
    + Clone
    + PartialEq
    + fmt::Debug
    + fmt::Display
    + Send
    + Sync
    + 'static
{
    /// Embed an integer.
    fn from_int(n: i64) -> Self;

    /// Embed a rational.
    fn from_rational(q: &Rational) -> Self;

    /// Multiplicative inverse, when `self` is a unit of the ring. For
    /// polynomials only nonzero constants are units.
    fn try_invert(&self) -> Option<Self>;

    /// Exact division; fails when `rhs` does not divide `self`.
    fn exact_div(&self, rhs: &Self) -> Result<Self, ScalarError>;

    /// Split into `(is_negative, magnitude)` for rendering. Rings without a
    /// useful sign keep everything on the positive side.
    fn sign_magnitude(&self) -> (bool, Self) {
        (false, self.clone())
    }
}

impl CoeffRing for Rational {
    fn from_int(n: i64) -> Self {
        Rational::from_integer(BigInt::from(n))
    }

    fn from_rational(q: &Rational) -> Self {
        q.clone()
    }

    fn try_invert(&self) -> Option<Self> {
        if self.is_zero() {
            None
        } else {
            Some(self.recip())
        }
    }

    fn exact_div(&self, rhs: &Self) -> Result<Self, ScalarError> {
        if rhs.is_zero() {
            Err(ScalarError::DivisionByZero)
        } else {
            Ok(self / rhs)
        }
    }

    fn sign_magnitude(&self) -> (bool, Self) {
        if self.is_negative() {
            (true, -self)
        } else {
            (false, self.clone())
        }
    }
}

/// Reduced rational `num/den` with positive denominator.
pub fn rational(num: i64, den: i64) -> Result<Rational, ScalarError> {
    if den == 0 {
        return Err(ScalarError::ZeroDenominator);
    }
    Ok(Rational::new(BigInt::from(num), BigInt::from(den)))
}

/// Convenience for rational literals in tests and tables. Panics on a zero
/// denominator; use [`rational`] for fallible construction.
pub fn rat(num: i64, den: i64) -> Rational {
    rational(num, den).expect("nonzero denominator")
}

/// n! as a big integer.
pub fn factorial(n: usize) -> BigInt {
    let mut acc = BigInt::one();
    for i in 2..=n {
        acc *= i as u64;
    }
    acc
}

/// n! as a rational.
pub fn factorial_rat(n: usize) -> Rational {
    Rational::from_integer(factorial(n))
}

/// Binomial coefficient C(n, k) as a big integer.
pub fn binomial(n: u64, k: u64) -> BigInt {
    if k > n {
        return BigInt::zero();
    }
    let k = k.min(n - k);
    let mut acc = BigInt::one();
    for i in 1..=k {
        acc = acc * (n - k + i) / i;
    }
    acc
}

/// Binomial coefficient C(n, k) as a rational.
pub fn binomial_rat(n: u64, k: u64) -> Rational {
    Rational::from_integer(binomial(n, k))
}

/// base^exp for a positive integer base and any integer exponent, as an exact
/// rational.
pub fn integer_power(base: u64, exp: i32) -> Rational {
    debug_assert!(base > 0);
    Pow::pow(Rational::from_integer(BigInt::from(base)), exp)
}

/// ∏_{j=1}^{n−1} (λ − j) as a polynomial in λ. The empty product (n = 1)
/// is 1; the product is undefined for n = 0.
///
/// This is the shared coefficient kernel of the degenerate logarithm and
/// polylogarithm: n! times the t^n coefficient of log_λ(1+t) equals exactly
/// this product.
pub fn lambda_product(n: usize) -> Result<LambdaPoly, ScalarError> {
    lambda_product_at(&LambdaPoly::var(), n)
}

/// ∏_{j=1}^{n−1} (λ − j) with λ an arbitrary ring element.
pub fn lambda_product_at<R: CoeffRing>(lambda: &R, n: usize) -> Result<R, ScalarError> {
    if n == 0 {
        return Err(ScalarError::Domain("lambda_product is defined for n >= 1"));
    }
    Ok(lambda_product_unchecked(lambda, n))
}

/// Infallible inner loop for `lambda_product_at`; callers guarantee n ≥ 1.
pub(crate) fn lambda_product_unchecked<R: CoeffRing>(lambda: &R, n: usize) -> R {
    debug_assert!(n >= 1);
    let mut acc = R::one();
    for j in 1..n {
        let factor = lambda.clone() - R::from_int(j as i64);
        acc = acc * &factor;
    }
    acc
}
