//! Gross-polynomials: finite sums `Σ cᵢ·①^pᵢ` with rational coefficients and
//! rational exponents.
//!
//! The canonical form keeps terms sorted by strictly decreasing exponent with
//! no zero coefficients, so structural equality coincides with numeric
//! equality. Ordering is decided by the sign of the leading term of the
//! difference: `①` dominates every finite number, `①^2` dominates every
//! multiple of `①`, and negative exponents give infinitesimals.

use std::cmp::Ordering;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_traits::{One, Signed, ToPrimitive, Zero};

use crate::error::{GrossError, Result};
use crate::notation::Notation;
use crate::rational::{fmt_rational, pow_int, pow_rational};
use crate::Rational;

/// Largest integer power of a multi-term polynomial we expand.
const MAX_EXPANSION_POWER: u32 = 4096;

/// Largest number of term-by-term products a single checked multiplication may
/// perform.
const MAX_TERM_PRODUCTS: usize = 250_000;

#[derive(Clone, Debug, PartialEq, Eq, Hash, Default)]
pub struct GrossPolynomial {
    /// `(coefficient, exponent)`, exponents strictly decreasing, coefficients nonzero.
    terms: Vec<(Rational, Rational)>,
}

impl GrossPolynomial {
    pub fn zero() -> Self {
        GrossPolynomial { terms: Vec::new() }
    }

    pub fn one() -> Self {
        Self::constant(Rational::one())
    }

    pub fn grossone() -> Self {
        Self::monomial(Rational::one(), Rational::one())
    }

    pub fn constant(c: Rational) -> Self {
        Self::monomial(c, Rational::zero())
    }

    pub fn integer(n: impl Into<BigInt>) -> Self {
        Self::constant(Rational::from_integer(n.into()))
    }

    pub fn monomial(coeff: Rational, exponent: Rational) -> Self {
        if coeff.is_zero() {
            Self::zero()
        } else {
            GrossPolynomial {
                terms: vec![(coeff, exponent)],
            }
        }
    }

    /// Builds a canonical polynomial from arbitrary `(coefficient, exponent)` pairs.
    pub fn from_terms(mut terms: Vec<(Rational, Rational)>) -> Self {
        terms.sort_by(|a, b| b.1.cmp(&a.1));
        let mut out: Vec<(Rational, Rational)> = Vec::with_capacity(terms.len());
        for (c, e) in terms {
            match out.last_mut() {
                Some(last) if last.1 == e => last.0 += c,
                _ => out.push((c, e)),
            }
        }
        out.retain(|(c, _)| !c.is_zero());
        GrossPolynomial { terms: out }
    }

    pub fn terms(&self) -> &[(Rational, Rational)] {
        &self.terms
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    /// The value as a plain rational, when no `①` is present.
    pub fn as_rational(&self) -> Option<Rational> {
        match self.terms.as_slice() {
            [] => Some(Rational::zero()),
            [(c, e)] if e.is_zero() => Some(c.clone()),
            _ => None,
        }
    }

    pub fn is_finite(&self) -> bool {
        self.as_rational().is_some()
    }

    pub fn leading_term(&self) -> Option<&(Rational, Rational)> {
        self.terms.first()
    }

    /// Sign of the value: the sign of the leading coefficient.
    pub fn signum(&self) -> Ordering {
        match self.terms.first() {
            None => Ordering::Equal,
            Some((c, _)) if c.is_positive() => Ordering::Greater,
            Some(_) => Ordering::Less,
        }
    }

    pub fn is_positive(&self) -> bool {
        self.signum() == Ordering::Greater
    }

    /// Exact division. The divisor must be a single monomial.
    pub fn checked_div(&self, divisor: &GrossPolynomial) -> Result<GrossPolynomial> {
        match divisor.terms.as_slice() {
            [] => Err(GrossError::DivisionByZero),
            [(dc, de)] => Ok(GrossPolynomial {
                terms: self
                    .terms
                    .iter()
                    .map(|(c, e)| (c / dc, e - de))
                    .collect(),
            }),
            _ => Err(GrossError::NotDivisible {
                dividend: self.to_string(),
                divisor: divisor.to_string(),
            }),
        }
    }

    /// Product that refuses to expand more than [`MAX_TERM_PRODUCTS`] term pairs.
    pub fn checked_mul(&self, other: &GrossPolynomial) -> Result<GrossPolynomial> {
        if self.terms.len().saturating_mul(other.terms.len()) > MAX_TERM_PRODUCTS {
            return Err(GrossError::TooManyTerms(
                self.terms.len().saturating_mul(other.terms.len()),
            ));
        }
        Ok(self * other)
    }

    /// Non-negative integer power by repeated squaring.
    pub fn pow(&self, k: u32) -> Result<GrossPolynomial> {
        if let [(c, e)] = self.terms.as_slice() {
            let coeff = pow_int(c, &BigInt::from(k))?;
            return Ok(Self::monomial(coeff, e * Rational::from_integer(k.into())));
        }
        if k > MAX_EXPANSION_POWER && !self.is_zero() {
            return Err(GrossError::ExponentTooLarge(k.to_string()));
        }
        let mut result = Self::one();
        let mut base = self.clone();
        let mut k = k;
        while k > 0 {
            if k & 1 == 1 {
                result = result.checked_mul(&base)?;
            }
            k >>= 1;
            if k > 0 {
                base = base.checked_mul(&base)?;
            }
        }
        Ok(result)
    }

    /// Rational power. Monomials accept any exponent whose coefficient power is
    /// exact; other polynomials need an integer exponent (negative only for
    /// monomials).
    pub fn pow_rational(&self, exp: &Rational) -> Result<GrossPolynomial> {
        match self.terms.as_slice() {
            [] if exp.is_positive() => Ok(Self::zero()),
            [] if exp.is_zero() => Ok(Self::one()),
            [] => Err(GrossError::DivisionByZero),
            [(c, e)] => Ok(Self::monomial(pow_rational(c, exp)?, e * exp)),
            _ => {
                let unsupported = || GrossError::UnsupportedExponent(fmt_rational(exp));
                if !exp.is_integer() || exp.is_negative() {
                    return Err(unsupported());
                }
                let k = exp
                    .to_integer()
                    .to_u32()
                    .ok_or_else(|| GrossError::ExponentTooLarge(fmt_rational(exp)))?;
                self.pow(k)
            }
        }
    }

    /// Exact value with `①` replaced by the rational `m`.
    pub fn eval_at(&self, m: &Rational) -> Result<Rational> {
        let mut acc = Rational::zero();
        for (c, e) in &self.terms {
            if e.is_zero() {
                acc += c;
                continue;
            }
            let p = pow_rational(m, e).map_err(|err| match err {
                GrossError::NonIntegralPower { .. } => GrossError::NonIntegralPower {
                    base: fmt_rational(m),
                    exponent: fmt_rational(e),
                },
                other => other,
            })?;
            acc += c * p;
        }
        Ok(acc)
    }

    pub fn display(&self, notation: Notation) -> String {
        if self.terms.is_empty() {
            return "0".to_string();
        }
        let mut out = String::new();
        for (i, (c, e)) in self.terms.iter().enumerate() {
            if c.is_negative() {
                out.push('-');
            } else if i > 0 {
                out.push('+');
            }
            let mag = c.abs();
            if e.is_zero() {
                out.push_str(&fmt_rational(&mag));
                continue;
            }
            if !mag.is_one() {
                out.push_str(&fmt_rational(&mag));
                out.push('*');
            }
            out.push_str(notation.symbol());
            if e.is_one() {
                continue;
            }
            if e.is_integer() && e.is_positive() {
                out.push('^');
                out.push_str(&fmt_rational(e));
            } else {
                out.push_str("^(");
                out.push_str(&fmt_rational(e));
                out.push(')');
            }
        }
        out
    }
}

impl Ord for GrossPolynomial {
    fn cmp(&self, other: &Self) -> Ordering {
        (self - other).signum()
    }
}

impl PartialOrd for GrossPolynomial {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl From<Rational> for GrossPolynomial {
    fn from(r: Rational) -> Self {
        Self::constant(r)
    }
}

impl Add for &GrossPolynomial {
    type Output = GrossPolynomial;
    fn add(self, rhs: &GrossPolynomial) -> GrossPolynomial {
        GrossPolynomial::from_terms(self.terms.iter().chain(&rhs.terms).cloned().collect())
    }
}

impl Sub for &GrossPolynomial {
    type Output = GrossPolynomial;
    fn sub(self, rhs: &GrossPolynomial) -> GrossPolynomial {
        self + &(-rhs)
    }
}

impl Neg for &GrossPolynomial {
    type Output = GrossPolynomial;
    fn neg(self) -> GrossPolynomial {
        GrossPolynomial {
            terms: self.terms.iter().map(|(c, e)| (-c, e.clone())).collect(),
        }
    }
}

impl Mul for &GrossPolynomial {
    type Output = GrossPolynomial;
    fn mul(self, rhs: &GrossPolynomial) -> GrossPolynomial {
        let mut terms = Vec::with_capacity(self.terms.len() * rhs.terms.len());
        for (ca, ea) in &self.terms {
            for (cb, eb) in &rhs.terms {
                terms.push((ca * cb, ea + eb));
            }
        }
        GrossPolynomial::from_terms(terms)
    }
}

macro_rules! forward_owned {
    ($($tr:ident :: $m:ident),*) => {$(
        impl $tr for GrossPolynomial {
            type Output = GrossPolynomial;
            fn $m(self, rhs: GrossPolynomial) -> GrossPolynomial {
                (&self).$m(&rhs)
            }
        }
    )*};
}
forward_owned!(Add::add, Sub::sub, Mul::mul);

impl Neg for GrossPolynomial {
    type Output = GrossPolynomial;
    fn neg(self) -> GrossPolynomial {
        -&self
    }
}

impl fmt::Display for GrossPolynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.display(Notation::Unicode))
    }
}
