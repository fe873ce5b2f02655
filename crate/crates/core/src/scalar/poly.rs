//! Dense univariate polynomials over a coefficient ring.
//!
//! [`LambdaPoly`] (polynomials in λ over the rationals) is the symbolic
//! coefficient ring used throughout the crate. The generic [`Poly<R>`] also
//! serves as the workhorse for basis conversions, where polynomials in a
//! second variable x carry λ-polynomial coefficients.

use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};
use std::str::FromStr;

use num_traits::{One, Zero};

use super::{CoeffRing, Rational, ScalarError};

/// Dense polynomial with coefficients in `R`. Canonical form: no trailing
/// zero coefficients are stored, and the zero polynomial stores nothing.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Poly<R> {
    coeffs: Vec<R>,
}

/// Polynomial in the deformation parameter λ with exact rational
/// coefficients. Renders with `L` for λ, e.g. `2 - 3*L + L^2`.
pub type LambdaPoly = Poly<Rational>;

impl<R: CoeffRing> Poly<R> {
    /// Build from coefficients (index = power), trimming trailing zeros.
    pub fn from_coeffs(mut coeffs: Vec<R>) -> Self {
        while coeffs.last().is_some_and(|c| c.is_zero()) {
            coeffs.pop();
        }
        Poly { coeffs }
    }

    /// The constant polynomial `c`.
    pub fn constant(c: R) -> Self {
        Self::from_coeffs(vec![c])
    }

    /// The variable itself (λ for [`LambdaPoly`]).
    pub fn var() -> Self {
        Poly {
            coeffs: vec![R::zero(), R::one()],
        }
    }

    /// Embedded integer constant.
    pub fn from_int(n: i64) -> Self {
        Self::constant(R::from_int(n))
    }

    /// Degree, or `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    /// Coefficient of the given power (zero beyond the degree).
    pub fn coefficient(&self, power: usize) -> R {
        self.coeffs.get(power).cloned().unwrap_or_else(R::zero)
    }

    /// Stored coefficients, constant term first.
    pub fn coeffs(&self) -> &[R] {
        &self.coeffs
    }

    /// Leading coefficient, `None` for zero.
    pub fn leading(&self) -> Option<&R> {
        self.coeffs.last()
    }

    /// Horner evaluation at a ring point; exact.
    pub fn eval(&self, x: &R) -> R {
        let mut acc = R::zero();
        for c in self.coeffs.iter().rev() {
            acc = acc * x + c;
        }
        acc
    }

    /// Multiply by a scalar.
    pub fn scale(&self, s: &R) -> Self {
        Self::from_coeffs(self.coeffs.iter().map(|c| c.clone() * s).collect())
    }

    fn add_impl(&self, rhs: &Self) -> Self {
        let n = self.coeffs.len().max(rhs.coeffs.len());
        let mut out = Vec::with_capacity(n);
        for i in 0..n {
            let a = self.coeffs.get(i).cloned().unwrap_or_else(R::zero);
            match rhs.coeffs.get(i) {
                Some(b) => out.push(a + b),
                None => out.push(a),
            }
        }
        Self::from_coeffs(out)
    }

    fn sub_impl(&self, rhs: &Self) -> Self {
        let n = self.coeffs.len().max(rhs.coeffs.len());
        let mut out = Vec::with_capacity(n);
        for i in 0..n {
            let a = self.coeffs.get(i).cloned().unwrap_or_else(R::zero);
            match rhs.coeffs.get(i) {
                Some(b) => out.push(a - b),
                None => out.push(a),
            }
        }
        Self::from_coeffs(out)
    }

    fn mul_impl(&self, rhs: &Self) -> Self {
        if self.coeffs.is_empty() || rhs.coeffs.is_empty() {
            return Self::zero();
        }
        let mut out = vec![R::zero(); self.coeffs.len() + rhs.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in rhs.coeffs.iter().enumerate() {
                let prod = a.clone() * b;
                let slot = std::mem::replace(&mut out[i + j], R::zero());
                out[i + j] = slot + &prod;
            }
        }
        Self::from_coeffs(out)
    }
}

impl<R: CoeffRing> Add for Poly<R> {
    type Output = Self;
    fn add(self, rhs: Self) -> Self {
        self.add_impl(&rhs)
    }
}

impl<'a, R: CoeffRing> Add<&'a Poly<R>> for Poly<R> {
    type Output = Self;
    fn add(self, rhs: &'a Poly<R>) -> Self {
        self.add_impl(rhs)
    }
}

impl<R: CoeffRing> Sub for Poly<R> {
    type Output = Self;
    fn sub(self, rhs: Self) -> Self {
        self.sub_impl(&rhs)
    }
}

impl<'a, R: CoeffRing> Sub<&'a Poly<R>> for Poly<R> {
    type Output = Self;
    fn sub(self, rhs: &'a Poly<R>) -> Self {
        self.sub_impl(rhs)
    }
}

impl<R: CoeffRing> Mul for Poly<R> {
    type Output = Self;
    fn mul(self, rhs: Self) -> Self {
        self.mul_impl(&rhs)
    }
}

impl<'a, R: CoeffRing> Mul<&'a Poly<R>> for Poly<R> {
    type Output = Self;
    fn mul(self, rhs: &'a Poly<R>) -> Self {
        self.mul_impl(rhs)
    }
}

impl<R: CoeffRing> Neg for Poly<R> {
    type Output = Self;
    fn neg(self) -> Self {
        Poly {
            coeffs: self.coeffs.into_iter().map(|c| -c).collect(),
        }
    }
}

impl<R: CoeffRing> Zero for Poly<R> {
    fn zero() -> Self {
        Poly { coeffs: Vec::new() }
    }
    fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }
}

impl<R: CoeffRing> One for Poly<R> {
    fn one() -> Self {
        Self::constant(R::one())
    }
}

impl<R: CoeffRing> CoeffRing for Poly<R> {
    fn from_int(n: i64) -> Self {
        Self::constant(R::from_int(n))
    }

    fn from_rational(q: &Rational) -> Self {
        Self::constant(R::from_rational(q))
    }

    fn try_invert(&self) -> Option<Self> {
        if self.degree() == Some(0) {
            self.coeffs[0].try_invert().map(Self::constant)
        } else {
            None
        }
    }

    /// Long division; succeeds only when the remainder is zero.
    fn exact_div(&self, rhs: &Self) -> Result<Self, ScalarError> {
        if rhs.is_zero() {
            return Err(ScalarError::DivisionByZero);
        }
        if self.is_zero() {
            return Ok(Self::zero());
        }
        let div_deg = rhs.degree().expect("nonzero");
        let num_deg = self.degree().expect("nonzero");
        if num_deg < div_deg {
            return Err(ScalarError::NotDivisible);
        }
        let lead = rhs.coeffs[div_deg].clone();
        let mut rem = self.clone();
        let mut quot = vec![R::zero(); num_deg - div_deg + 1];
        while let Some(rd) = rem.degree() {
            if rd < div_deg {
                return Err(ScalarError::NotDivisible);
            }
            let c = rem.coeffs[rd]
                .exact_div(&lead)
                .map_err(|_| ScalarError::NotDivisible)?;
            let shift = rd - div_deg;
            let mut sub = vec![R::zero(); shift];
            sub.extend(rhs.coeffs.iter().map(|b| b.clone() * &c));
            rem = rem.sub_impl(&Poly::from_coeffs(sub));
            quot[shift] = c;
        }
        Ok(Self::from_coeffs(quot))
    }
}

impl<R: CoeffRing> fmt::Display for Poly<R> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut first = true;
        for (power, c) in self.coeffs.iter().enumerate() {
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
            match power {
                0 => write!(f, "{mag}")?,
                _ => {
                    if !magnitude.is_one() {
                        if needs_parens {
                            write!(f, "({mag})*")?;
                        } else {
                            write!(f, "{mag}*")?;
                        }
                    }
                    if power == 1 {
                        write!(f, "L")?;
                    } else {
                        write!(f, "L^{power}")?;
                    }
                }
            }
        }
        Ok(())
    }
}

impl FromStr for LambdaPoly {
    type Err = ScalarError;

    /// Parse the rendering grammar: terms of the form `c`, `c*L^k`, or `L^k`
    /// joined by ` + ` / ` - `, with `L` for λ and `^1` / `*1` elided.
    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let s = s.trim();
        if s.is_empty() {
            return Err(ScalarError::Parse("empty polynomial string".into()));
        }
        let mut coeffs: Vec<Rational> = Vec::new();
        // A leading minus belongs to the first term ("-1 + L", "-L^2").
        let (mut negative, mut rest) = match s.strip_prefix('-') {
            Some(tail) => (true, tail),
            None => (false, s),
        };
        loop {
            let (term, next) = match (rest.find(" + "), rest.find(" - ")) {
                (Some(p), Some(m)) if p < m => (&rest[..p], Some((false, &rest[p + 3..]))),
                (Some(_), Some(m)) => (&rest[..m], Some((true, &rest[m + 3..]))),
                (Some(p), None) => (&rest[..p], Some((false, &rest[p + 3..]))),
                (None, Some(m)) => (&rest[..m], Some((true, &rest[m + 3..]))),
                (None, None) => (rest, None),
            };
            let (power, coeff) = parse_term(term)?;
            if coeffs.len() <= power {
                coeffs.resize(power + 1, Rational::zero());
            }
            let signed = if negative { -coeff } else { coeff };
            coeffs[power] += signed;
            match next {
                Some((neg, tail)) => {
                    negative = neg;
                    rest = tail;
                }
                None => break,
            }
        }
        Ok(LambdaPoly::from_coeffs(coeffs))
    }
}

fn parse_term(term: &str) -> Result<(usize, Rational), ScalarError> {
    let bad = |t: &str| ScalarError::Parse(format!("bad polynomial term {t:?}"));
    match term.find('L') {
        None => {
            let c: Rational = term.parse().map_err(|_| bad(term))?;
            Ok((0, c))
        }
        Some(pos) => {
            let coeff = if pos == 0 {
                Rational::one()
            } else {
                let head = &term[..pos];
                let head = head.strip_suffix('*').ok_or_else(|| bad(term))?;
                head.parse().map_err(|_| bad(term))?
            };
            let tail = &term[pos + 1..];
            let power = if tail.is_empty() {
                1
            } else {
                let digits = tail.strip_prefix('^').ok_or_else(|| bad(term))?;
                digits.parse::<usize>().map_err(|_| bad(term))?
            };
            Ok((power, coeff))
        }
    }
}
