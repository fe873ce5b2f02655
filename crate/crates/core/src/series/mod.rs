//! Truncated formal power series in t over a coefficient ring.
//!
//! A series carries its coefficients c_0..c_N exactly; every operation is
//! exact through t^N. Binary operations insist on equal truncation orders
//! instead of silently truncating to the shorter operand — mixing orders is
//! the classic bug in series code, and it fails loudly here.

mod valuated;

pub use valuated::ValuatedSeries;

use std::fmt;

use crate::scalar::{factorial_rat, CoeffRing, Rational};

/// Errors from series operations whose success depends on the data.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum SeriesError {
    /// Division requires an invertible constant term in the divisor.
    NonUnitLeadingCoefficient,
    /// Composition requires the inner series to vanish at t = 0.
    InnerConstantTerm,
    /// Integration of a series with a genuine pole (negative offset).
    PoleIntegration { offset: i64 },
    /// A valuated series with a pole cannot be flattened to a power series.
    NegativeOffset { offset: i64 },
}

impl fmt::Display for SeriesError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            SeriesError::NonUnitLeadingCoefficient => {
                write!(f, "series division needs an invertible constant term")
            }
            SeriesError::InnerConstantTerm => {
                write!(
                    f,
                    "series composition needs an inner series with zero constant term"
                )
            }
            SeriesError::PoleIntegration { offset } => {
                write!(f, "cannot integrate a series with a pole (offset {offset})")
            }
            SeriesError::NegativeOffset { offset } => {
                write!(f, "series has a pole (offset {offset})")
            }
        }
    }
}

impl std::error::Error for SeriesError {}

/// Formal power series truncated at a fixed order N: exactly the
/// coefficients of 1, t, …, t^N.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TruncatedSeries<R> {
    coeffs: Vec<R>,
}

impl<R: CoeffRing> TruncatedSeries<R> {
    /// The zero series at the given order.
    pub fn zero(order: usize) -> Self {
        Self::from_fn(order, |_| R::zero())
    }

    /// The constant series 1 at the given order.
    pub fn one(order: usize) -> Self {
        Self::from_fn(order, |n| if n == 0 { R::one() } else { R::zero() })
    }

    /// The series t at the given order.
    pub fn var(order: usize) -> Self {
        Self::from_fn(order, |n| if n == 1 { R::one() } else { R::zero() })
    }

    /// Build from explicit coefficients; the order is `coeffs.len() - 1`.
    pub fn from_coeffs(coeffs: Vec<R>) -> Self {
        assert!(!coeffs.is_empty(), "a series stores at least c_0");
        TruncatedSeries { coeffs }
    }

    /// Build coefficientwise.
    pub fn from_fn(order: usize, f: impl FnMut(usize) -> R) -> Self {
        TruncatedSeries {
            coeffs: (0..=order).map(f).collect(),
        }
    }

    /// Truncation order N.
    pub fn order(&self) -> usize {
        self.coeffs.len() - 1
    }

    /// Coefficient of t^n; n must not exceed the order.
    pub fn coeff(&self, n: usize) -> &R {
        &self.coeffs[n]
    }

    /// All coefficients, constant term first.
    pub fn coeffs(&self) -> &[R] {
        &self.coeffs
    }

    /// Index of the first nonzero coefficient, if any.
    pub fn valuation(&self) -> Option<usize> {
        self.coeffs.iter().position(|c| !c.is_zero())
    }

    fn assert_same_order(&self, rhs: &Self, op: &str) {
        assert_eq!(
            self.order(),
            rhs.order(),
            "series {op} requires equal truncation orders"
        );
    }

    pub fn add(&self, rhs: &Self) -> Self {
        self.assert_same_order(rhs, "addition");
        Self::from_fn(self.order(), |n| self.coeffs[n].clone() + &rhs.coeffs[n])
    }

    pub fn sub(&self, rhs: &Self) -> Self {
        self.assert_same_order(rhs, "subtraction");
        Self::from_fn(self.order(), |n| self.coeffs[n].clone() - &rhs.coeffs[n])
    }

    pub fn neg(&self) -> Self {
        Self::from_fn(self.order(), |n| -self.coeffs[n].clone())
    }

    /// Multiply every coefficient by a ring element.
    pub fn scale(&self, s: &R) -> Self {
        Self::from_fn(self.order(), |n| self.coeffs[n].clone() * s)
    }

    /// Cauchy product, exact through t^N.
    pub fn mul(&self, rhs: &Self) -> Self {
        self.assert_same_order(rhs, "multiplication");
        let order = self.order();
        let mut out = vec![R::zero(); order + 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in rhs.coeffs.iter().take(order + 1 - i).enumerate() {
                if b.is_zero() {
                    continue;
                }
                let prod = a.clone() * b;
                let slot = std::mem::replace(&mut out[i + j], R::zero());
                out[i + j] = slot + &prod;
            }
        }
        Self::from_coeffs(out)
    }

    /// Quotient q with q·rhs = self through t^N. The divisor's constant term
    /// must be a unit of the ring.
    pub fn div(&self, rhs: &Self) -> Result<Self, SeriesError> {
        self.assert_same_order(rhs, "division");
        let inv = rhs.coeffs[0]
            .try_invert()
            .ok_or(SeriesError::NonUnitLeadingCoefficient)?;
        let order = self.order();
        let mut out: Vec<R> = Vec::with_capacity(order + 1);
        for n in 0..=order {
            let mut acc = self.coeffs[n].clone();
            for j in 1..=n {
                let prod = rhs.coeffs[j].clone() * &out[n - j];
                acc = acc - &prod;
            }
            out.push(acc * &inv);
        }
        Ok(Self::from_coeffs(out))
    }

    /// f(g(t)) through t^N by Horner's scheme; the inner series must have
    /// zero constant term.
    pub fn compose(&self, inner: &Self) -> Result<Self, SeriesError> {
        self.assert_same_order(inner, "composition");
        if !inner.coeffs[0].is_zero() {
            return Err(SeriesError::InnerConstantTerm);
        }
        let order = self.order();
        let mut acc = Self::zero(order);
        for c in self.coeffs.iter().rev() {
            acc = acc.mul(inner);
            let head = std::mem::replace(&mut acc.coeffs[0], R::zero());
            acc.coeffs[0] = head + c;
        }
        Ok(acc)
    }

    /// Antiderivative with zero constant term: r_n = c_{n−1}/n. The input's
    /// top coefficient is dropped; the order is preserved.
    pub fn integrate(&self) -> Self {
        let order = self.order();
        Self::from_fn(order, |n| {
            if n == 0 {
                R::zero()
            } else {
                let inv_n = Rational::new(1.into(), (n as i64).into());
                self.coeffs[n - 1].clone() * &R::from_rational(&inv_n)
            }
        })
    }

    /// Derivative: r_n = (n+1)·c_{n+1}, with the top coefficient set to zero
    /// (the true t^N coefficient of the derivative is beyond the truncation).
    pub fn derive(&self) -> Self {
        let order = self.order();
        Self::from_fn(order, |n| {
            if n == order {
                R::zero()
            } else {
                self.coeffs[n + 1].clone() * &R::from_int(n as i64 + 1)
            }
        })
    }

    /// Substitute t ↦ −t: flips the sign of every odd coefficient.
    pub fn alternate_signs(&self) -> Self {
        Self::from_fn(self.order(), |n| {
            if n % 2 == 0 {
                self.coeffs[n].clone()
            } else {
                -self.coeffs[n].clone()
            }
        })
    }

    /// Divide by t^k; the k lowest coefficients must be zero. The order
    /// shrinks by k.
    pub fn shift_down(&self, k: usize) -> Self {
        assert!(k <= self.order(), "shift exceeds the truncation order");
        assert!(
            self.coeffs[..k].iter().all(|c| c.is_zero()),
            "shift_down would discard nonzero low-order coefficients"
        );
        Self::from_coeffs(self.coeffs[k..].to_vec())
    }

    /// Explicitly lower the truncation order.
    pub fn truncated(&self, order: usize) -> Self {
        assert!(order <= self.order(), "cannot extend a truncated series");
        Self::from_coeffs(self.coeffs[..=order].to_vec())
    }

    /// Map the coefficients into another ring.
    pub fn map<S: CoeffRing>(&self, f: impl FnMut(&R) -> S) -> TruncatedSeries<S> {
        TruncatedSeries {
            coeffs: self.coeffs.iter().map(f).collect(),
        }
    }

    /// The sequence n!·c_n, i.e. the values of the sequence whose exponential
    /// generating function this series is.
    pub fn egf_values(&self) -> Vec<R> {
        self.coeffs
            .iter()
            .enumerate()
            .map(|(n, c)| c.clone() * &R::from_rational(&factorial_rat(n)))
            .collect()
    }
}

impl<R: CoeffRing> fmt::Display for TruncatedSeries<R> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut first = true;
        for (n, c) in self.coeffs.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            let (negative, magnitude) = c.sign_magnitude();
            if first {
                if negative {
                    write!(f, "-")?;
                }
                first = false;
            } else if negative {
                write!(f, " - ")?;
            } else {
                write!(f, " + ")?;
            }
            let mag = magnitude.to_string();
            let needs_parens = mag.contains(' ') || mag.contains('*');
            match n {
                0 => write!(f, "{mag}")?,
                _ => {
                    if !magnitude.is_one() {
                        if needs_parens {
                            write!(f, "({mag}) ")?;
                        } else {
                            write!(f, "{mag} ")?;
                        }
                    }
                    if n == 1 {
                        write!(f, "t")?;
                    } else {
                        write!(f, "t^{n}")?;
                    }
                }
            }
        }
        if first {
            write!(f, "0")?;
        }
        Ok(())
    }
}
