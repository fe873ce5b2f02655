//! Series with an explicit power-of-t offset: t^e · u(t) with u(0) ≠ 0.
//!
//! The offset may be negative, which is how the 1/t factors in iterated
//! integrals of polylogarithm type are tracked without ever leaving exact
//! arithmetic. A value with unit order M is exact through t^(e+M);
//! integration raises both the offset and the exactness window by one, while
//! multiplying by an offset −1 factor lowers them by one.

use crate::scalar::{CoeffRing, Rational};

use super::{SeriesError, TruncatedSeries};

/// t^offset · unit(t), with `unit` a truncated series whose constant term is
/// nonzero. The zero series has its own representation without an offset.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ValuatedSeries<R> {
    repr: Option<(i64, TruncatedSeries<R>)>,
}

impl<R: CoeffRing> ValuatedSeries<R> {
    /// The canonical zero.
    pub fn zero() -> Self {
        ValuatedSeries { repr: None }
    }

    /// Build from an offset and a series; any leading zeros of the series are
    /// folded into the offset so the unit invariant holds.
    pub fn new(offset: i64, series: TruncatedSeries<R>) -> Self {
        match series.valuation() {
            None => Self::zero(),
            Some(0) => ValuatedSeries {
                repr: Some((offset, series)),
            },
            Some(v) => ValuatedSeries {
                repr: Some((offset + v as i64, series.shift_down(v))),
            },
        }
    }

    /// Factor a plain series as t^v · unit.
    pub fn from_series(series: &TruncatedSeries<R>) -> Self {
        Self::new(0, series.clone())
    }

    pub fn is_zero(&self) -> bool {
        self.repr.is_none()
    }

    /// The offset e, `None` for zero.
    pub fn offset(&self) -> Option<i64> {
        self.repr.as_ref().map(|(e, _)| *e)
    }

    /// The unit factor, `None` for zero.
    pub fn unit(&self) -> Option<&TruncatedSeries<R>> {
        self.repr.as_ref().map(|(_, u)| u)
    }

    /// Product; offsets add, units multiply. Panics if the unit orders
    /// differ.
    pub fn mul(&self, rhs: &Self) -> Self {
        match (&self.repr, &rhs.repr) {
            (Some((e1, u1)), Some((e2, u2))) => ValuatedSeries {
                repr: Some((e1 + e2, u1.mul(u2))),
            },
            _ => Self::zero(),
        }
    }

    /// Pointwise reciprocal 1/(t^e·u) = t^(−e)·u^(−1); the unit's constant
    /// term must invert in the ring.
    pub fn recip(&self) -> Result<Self, SeriesError> {
        match &self.repr {
            None => Err(SeriesError::NonUnitLeadingCoefficient),
            Some((e, u)) => {
                let inv = TruncatedSeries::one(u.order()).div(u)?;
                Ok(ValuatedSeries {
                    repr: Some((-e, inv)),
                })
            }
        }
    }

    pub fn div(&self, rhs: &Self) -> Result<Self, SeriesError> {
        Ok(self.mul(&rhs.recip()?))
    }

    /// Term-by-term antiderivative ∫₀ᵗ. Defined only for genuine power
    /// series (offset ≥ 0); a negative offset means the integrand has a pole
    /// and the computation pipeline was assembled incorrectly.
    pub fn integrate(&self) -> Result<Self, SeriesError> {
        match &self.repr {
            None => Ok(Self::zero()),
            Some((e, u)) => {
                if *e < 0 {
                    return Err(SeriesError::PoleIntegration { offset: *e });
                }
                let unit = TruncatedSeries::from_fn(u.order(), |j| {
                    let inv = Rational::new(1.into(), (*e + j as i64 + 1).into());
                    u.coeff(j).clone() * &R::from_rational(&inv)
                });
                Ok(ValuatedSeries {
                    repr: Some((e + 1, unit)),
                })
            }
        }
    }

    /// Flatten back to a truncated series of the requested order. Fails for
    /// poles; panics if the requested order exceeds the exactness window
    /// offset + unit order.
    pub fn to_series(&self, order: usize) -> Result<TruncatedSeries<R>, SeriesError> {
        match &self.repr {
            None => Ok(TruncatedSeries::zero(order)),
            Some((e, u)) => {
                if *e < 0 {
                    return Err(SeriesError::NegativeOffset { offset: *e });
                }
                let e = *e as usize;
                assert!(
                    order <= e + u.order() || e > order,
                    "requested order {order} exceeds the exact window {}",
                    e + u.order()
                );
                Ok(TruncatedSeries::from_fn(order, |n| {
                    if n >= e && n - e <= u.order() {
                        u.coeff(n - e).clone()
                    } else {
                        R::zero()
                    }
                }))
            }
        }
    }
}

impl<R: CoeffRing> std::fmt::Display for ValuatedSeries<R> {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match &self.repr {
            None => write!(f, "0"),
            Some((e, u)) => write!(f, "t^{e} * ({u})"),
        }
    }
}
