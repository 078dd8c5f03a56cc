//! [`GrossValue`]: one numeral type covering gross-polynomials and
//! exponential measures, with a single total order.

use std::cmp::Ordering;
use std::fmt;

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};
use serde_json::{json, Value};

use crate::error::{GrossError, Result};
use crate::linear::GrossLinear;
use crate::measure::ExpMeasure;
use crate::notation::Notation;
use crate::poly::GrossPolynomial;
use crate::rational::fmt_rational;
use crate::Rational;

/// A gross-number: either polynomial in `①` or of exponential scale.
///
/// The `Exp` variant always depends on `①` (some exponent has a nonzero
/// `①` coefficient); purely rational measures are normalised into `Poly`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub enum GrossValue {
    Poly(GrossPolynomial),
    Exp(ExpMeasure),
}

impl GrossValue {
    pub fn zero() -> Self {
        GrossValue::Poly(GrossPolynomial::zero())
    }

    pub fn one() -> Self {
        GrossValue::Poly(GrossPolynomial::one())
    }

    pub fn grossone() -> Self {
        GrossValue::Poly(GrossPolynomial::grossone())
    }

    pub fn rational(r: Rational) -> Self {
        GrossValue::Poly(GrossPolynomial::constant(r))
    }

    pub fn integer(n: impl Into<BigInt>) -> Self {
        GrossValue::Poly(GrossPolynomial::integer(n))
    }

    /// `base^exponent` as a value, normalised.
    pub fn exp(base: &Rational, exponent: &GrossLinear) -> Result<Self> {
        Self::from_measure(ExpMeasure::new(base, exponent)?)
    }

    /// Normalises a measure: rational measures become `Poly`.
    pub fn from_measure(m: ExpMeasure) -> Result<Self> {
        match m.as_rational() {
            Some(r) => Ok(GrossValue::rational(r?)),
            None => Ok(GrossValue::Exp(m)),
        }
    }

    pub fn as_poly(&self) -> Option<&GrossPolynomial> {
        match self {
            GrossValue::Poly(p) => Some(p),
            GrossValue::Exp(_) => None,
        }
    }

    pub fn as_rational(&self) -> Option<Rational> {
        self.as_poly().and_then(GrossPolynomial::as_rational)
    }

    pub fn as_linear(&self) -> Option<GrossLinear> {
        self.as_poly().and_then(GrossLinear::from_poly)
    }

    /// The value as a measure, if it is one: an `Exp`, or a positive rational.
    pub fn as_measure(&self) -> Option<ExpMeasure> {
        match self {
            GrossValue::Exp(m) => Some(m.clone()),
            GrossValue::Poly(p) => {
                let r = p.as_rational()?;
                if r.is_positive() {
                    ExpMeasure::from_rational(&r).ok()
                } else {
                    None
                }
            }
        }
    }

    pub fn signum(&self) -> Ordering {
        match self {
            GrossValue::Poly(p) => p.signum(),
            GrossValue::Exp(_) => Ordering::Greater,
        }
    }

    pub fn is_zero(&self) -> bool {
        self.signum() == Ordering::Equal
    }

    pub fn is_positive(&self) -> bool {
        self.signum() == Ordering::Greater
    }

    pub fn checked_neg(&self) -> Result<Self> {
        match self {
            GrossValue::Poly(p) => Ok(GrossValue::Poly(-p)),
            GrossValue::Exp(m) => Err(GrossError::NonPositiveMeasure(format!("-{m}"))),
        }
    }

    pub fn checked_add(&self, other: &Self) -> Result<Self> {
        use GrossValue::*;
        match (self, other) {
            (Poly(a), Poly(b)) => Ok(Poly(a + b)),
            (Exp(_), Poly(p)) | (Poly(p), Exp(_)) if p.is_zero() => {
                Ok(if self.is_zero() { other } else { self }.clone())
            }
            (Exp(a), Exp(b)) => match finite_ratio(a, b) {
                Some(r) => {
                    let r = r?;
                    Self::from_measure(b.mul(&ExpMeasure::from_rational(&(r + Rational::one()))?))
                }
                None => Err(self.mixed(other)),
            },
            _ => Err(self.mixed(other)),
        }
    }

    pub fn checked_sub(&self, other: &Self) -> Result<Self> {
        use GrossValue::*;
        match (self, other) {
            (Poly(a), Poly(b)) => Ok(Poly(a - b)),
            (Exp(_), Poly(p)) if p.is_zero() => Ok(self.clone()),
            (Poly(p), Exp(m)) if p.is_zero() => {
                Err(GrossError::NonPositiveMeasure(format!("-{m}")))
            }
            (Exp(a), Exp(b)) => match finite_ratio(a, b) {
                Some(r) => {
                    let diff = r? - Rational::one();
                    if diff.is_zero() {
                        Ok(Self::zero())
                    } else if diff.is_negative() {
                        Err(GrossError::NonPositiveMeasure(format!("{a}-{b}")))
                    } else {
                        Self::from_measure(b.mul(&ExpMeasure::from_rational(&diff)?))
                    }
                }
                None => Err(self.mixed(other)),
            },
            _ => Err(self.mixed(other)),
        }
    }

    pub fn checked_mul(&self, other: &Self) -> Result<Self> {
        use GrossValue::*;
        match (self, other) {
            (Poly(a), Poly(b)) => Ok(Poly(a.checked_mul(b)?)),
            (Exp(a), Exp(b)) => Self::from_measure(a.mul(b)),
            (Exp(m), Poly(p)) | (Poly(p), Exp(m)) => {
                Self::scale_measure(m, p, |m, s| m.mul(s))
            }
        }
    }

    pub fn checked_div(&self, other: &Self) -> Result<Self> {
        use GrossValue::*;
        if other.is_zero() {
            return Err(GrossError::DivisionByZero);
        }
        match (self, other) {
            (Poly(a), Poly(b)) => Ok(Poly(a.checked_div(b)?)),
            (Exp(a), Exp(b)) => Self::from_measure(a.div(b)),
            (Exp(m), Poly(p)) => Self::scale_measure(m, p, |m, s| m.div(s)),
            (Poly(p), Exp(m)) => Self::scale_measure(&m.recip(), p, |m, s| m.mul(s)),
        }
    }

    /// `m ∘ p` where `p` must be a finite rational; zero collapses to zero.
    fn scale_measure(
        m: &ExpMeasure,
        p: &GrossPolynomial,
        op: impl Fn(&ExpMeasure, &ExpMeasure) -> ExpMeasure,
    ) -> Result<Self> {
        let r = p
            .as_rational()
            .ok_or_else(|| GrossError::MixedScaleProduct(p.to_string()))?;
        if r.is_zero() {
            return Ok(Self::zero());
        }
        if r.is_negative() {
            return Err(GrossError::NonPositiveMeasure(format!(
                "{}*{m}",
                fmt_rational(&r)
            )));
        }
        Self::from_measure(op(m, &ExpMeasure::from_rational(&r)?))
    }

    /// `self^exponent`.
    ///
    /// A finite exponent raises polynomials (exactly) or measures (integer
    /// exponents only). An infinite exponent must be gross-linear and the base
    /// a positive rational, producing an exponential measure.
    pub fn checked_pow(&self, exponent: &Self) -> Result<Self> {
        let unsupported = || GrossError::UnsupportedExponent(exponent.to_string());
        let GrossValue::Poly(e) = exponent else {
            return Err(unsupported());
        };
        if let Some(r) = e.as_rational() {
            return match self {
                GrossValue::Poly(p) => Ok(GrossValue::Poly(p.pow_rational(&r)?)),
                GrossValue::Exp(m) if r.is_integer() => {
                    Self::from_measure(m.pow(&r.to_integer()))
                }
                GrossValue::Exp(_) => Err(unsupported()),
            };
        }
        let lin = GrossLinear::from_poly(e).ok_or_else(|| GrossError::NotLinear(e.to_string()))?;
        match self {
            GrossValue::Poly(p) => match p.as_rational() {
                Some(base) => Self::exp(&base, &lin),
                None => Err(unsupported()),
            },
            GrossValue::Exp(_) => Err(unsupported()),
        }
    }

    /// Exact value at `① := m` (a positive integer).
    pub fn eval_at(&self, m: &BigInt) -> Result<Rational> {
        if m < &BigInt::one() {
            return Err(GrossError::InvalidSubstitution(m.to_string()));
        }
        match self {
            GrossValue::Poly(p) => p.eval_at(&Rational::from_integer(m.clone())),
            GrossValue::Exp(e) => e.eval_at(m),
        }
    }

    pub fn display(&self, notation: Notation) -> String {
        match self {
            GrossValue::Poly(p) => p.display(notation),
            GrossValue::Exp(m) => m.display(notation),
        }
    }

    /// JSON encoding: `{"factors": [...]}` for measures, `{"poly": [...]}` for
    /// polynomials with each term as `{"coeff": "p/q", "exp": "p/q"}`.
    pub fn to_json(&self) -> Value {
        match self {
            GrossValue::Exp(m) => m.to_json(),
            GrossValue::Poly(p) => {
                let terms: Vec<Value> = p
                    .terms()
                    .iter()
                    .map(|(c, e)| json!({"coeff": fmt_rational(c), "exp": fmt_rational(e)}))
                    .collect();
                json!({ "poly": terms })
            }
        }
    }

    pub fn from_json(v: &Value) -> Option<Self> {
        if v.get("factors").is_some() {
            return Self::from_measure(ExpMeasure::from_json(v)?).ok();
        }
        let terms = v.get("poly")?.as_array()?;
        let parse = |s: &Value| -> Option<Rational> { s.as_str()?.parse().ok() };
        let terms = terms
            .iter()
            .map(|t| Some((parse(t.get("coeff")?)?, parse(t.get("exp")?)?)))
            .collect::<Option<Vec<_>>>()?;
        Some(GrossValue::Poly(GrossPolynomial::from_terms(terms)))
    }

    fn mixed(&self, other: &Self) -> GrossError {
        GrossError::MixedScaleAddition(self.to_string(), other.to_string())
    }
}

/// `a/b` as a rational when the two measures share the same `①` scale.
fn finite_ratio(a: &ExpMeasure, b: &ExpMeasure) -> Option<Result<Rational>> {
    a.div(b).as_rational()
}

impl Ord for GrossValue {
    fn cmp(&self, other: &Self) -> Ordering {
        use GrossValue::*;
        match (self, other) {
            (Poly(a), Poly(b)) => a.cmp(b),
            (Exp(a), Exp(b)) => a.cmp(b),
            (Exp(m), Poly(p)) => exp_vs_poly(m, p),
            (Poly(p), Exp(m)) => exp_vs_poly(m, p).reverse(),
        }
    }
}

/// Exponential growth beats every polynomial; exponential decay loses to every
/// positive polynomial (including `①^(-k)`) and beats every non-positive one.
fn exp_vs_poly(m: &ExpMeasure, p: &GrossPolynomial) -> Ordering {
    if !p.is_positive() {
        return Ordering::Greater;
    }
    match m.growth() {
        Ordering::Less => Ordering::Less,
        _ => Ordering::Greater,
    }
}

impl PartialOrd for GrossValue {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl From<GrossPolynomial> for GrossValue {
    fn from(p: GrossPolynomial) -> Self {
        GrossValue::Poly(p)
    }
}

impl From<GrossLinear> for GrossValue {
    fn from(l: GrossLinear) -> Self {
        GrossValue::Poly(l.to_poly())
    }
}

impl From<Rational> for GrossValue {
    fn from(r: Rational) -> Self {
        GrossValue::rational(r)
    }
}

impl fmt::Display for GrossValue {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.display(Notation::Unicode))
    }
}
