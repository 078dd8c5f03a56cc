//! Affine gross-integers `a·① + b`.
//!
//! These are the exponent language of [`ExpMeasure`](crate::ExpMeasure) and the
//! position language of sequential processes (`①-1`, `①+2`, `①+k-1`, ...).

use std::cmp::Ordering;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_traits::{One, Zero};

use crate::notation::Notation;
use crate::poly::GrossPolynomial;
use crate::Rational;

/// An affine form `gross·① + constant` with integer coefficients.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Default)]
pub struct GrossLinear {
    gross: BigInt,
    constant: BigInt,
}

impl GrossLinear {
    pub fn new(gross: impl Into<BigInt>, constant: impl Into<BigInt>) -> Self {
        GrossLinear {
            gross: gross.into(),
            constant: constant.into(),
        }
    }

    pub fn finite(constant: impl Into<BigInt>) -> Self {
        GrossLinear::new(0, constant)
    }

    /// The grossone itself.
    pub fn grossone() -> Self {
        GrossLinear::new(1, 0)
    }

    pub fn gross(&self) -> &BigInt {
        &self.gross
    }

    pub fn constant(&self) -> &BigInt {
        &self.constant
    }

    pub fn is_zero(&self) -> bool {
        self.gross.is_zero() && self.constant.is_zero()
    }

    pub fn is_finite(&self) -> bool {
        self.gross.is_zero()
    }

    /// Value at `① := m`.
    pub fn eval_at(&self, m: &BigInt) -> BigInt {
        &self.gross * m + &self.constant
    }

    pub fn to_poly(&self) -> GrossPolynomial {
        GrossPolynomial::from_terms(vec![
            (Rational::from_integer(self.gross.clone()), Rational::one()),
            (Rational::from_integer(self.constant.clone()), Rational::zero()),
        ])
    }

    /// Recovers an affine form from a polynomial, if it is one.
    pub fn from_poly(p: &GrossPolynomial) -> Option<Self> {
        let mut out = GrossLinear::default();
        for (coeff, exp) in p.terms() {
            if !coeff.is_integer() {
                return None;
            }
            if exp.is_zero() {
                out.constant = coeff.to_integer();
            } else if exp.is_one() {
                out.gross = coeff.to_integer();
            } else {
                return None;
            }
        }
        Some(out)
    }

    pub fn scale(&self, k: &BigInt) -> Self {
        GrossLinear::new(&self.gross * k, &self.constant * k)
    }

    pub fn display(&self, notation: Notation) -> String {
        self.to_poly().display(notation)
    }
}

impl Ord for GrossLinear {
    fn cmp(&self, other: &Self) -> Ordering {
        self.gross
            .cmp(&other.gross)
            .then_with(|| self.constant.cmp(&other.constant))
    }
}

impl PartialOrd for GrossLinear {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl Add for &GrossLinear {
    type Output = GrossLinear;
    fn add(self, rhs: &GrossLinear) -> GrossLinear {
        GrossLinear::new(&self.gross + &rhs.gross, &self.constant + &rhs.constant)
    }
}

impl Add for GrossLinear {
    type Output = GrossLinear;
    fn add(self, rhs: GrossLinear) -> GrossLinear {
        &self + &rhs
    }
}

impl Sub for &GrossLinear {
    type Output = GrossLinear;
    fn sub(self, rhs: &GrossLinear) -> GrossLinear {
        GrossLinear::new(&self.gross - &rhs.gross, &self.constant - &rhs.constant)
    }
}

impl Sub for GrossLinear {
    type Output = GrossLinear;
    fn sub(self, rhs: GrossLinear) -> GrossLinear {
        &self - &rhs
    }
}

impl Neg for GrossLinear {
    type Output = GrossLinear;
    fn neg(self) -> GrossLinear {
        GrossLinear::new(-self.gross, -self.constant)
    }
}

impl Mul<&BigInt> for &GrossLinear {
    type Output = GrossLinear;
    fn mul(self, rhs: &BigInt) -> GrossLinear {
        self.scale(rhs)
    }
}

impl fmt::Display for GrossLinear {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.display(Notation::Unicode))
    }
}
