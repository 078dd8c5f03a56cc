//! Exact positive quantities of exponential scale.
//!
//! An [`ExpMeasure`] is a product `Π p^(gₚ(①))` over primes `p`, each exponent
//! an affine [`GrossLinear`]. Factoring every base into primes makes the form
//! canonical: `3^(-2(①-1)) · 8^(①-1)` and `(8/9)^(①-1)` normalise to the same
//! map `{2 ↦ 3①-3, 3 ↦ -2①+2}`.
//!
//! Ordering splits the value into its `①`-scale part `R∞ = Π p^aₚ` and its
//! finite part `R₀ = Π p^bₚ` (where `gₚ = aₚ① + bₚ`). A measure is
//! exponentially infinite when `R∞ > 1` and exponentially infinitesimal when
//! `R∞ < 1`; only when `R∞ = 1` does `R₀` decide.

use std::cmp::Ordering;
use std::collections::btree_map::Entry;
use std::collections::BTreeMap;
use std::fmt;

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};
use serde_json::{json, Value};

use crate::error::{GrossError, Result};
use crate::factor::factorize;
use crate::linear::GrossLinear;
use crate::logsign::log_sum_sign;
use crate::notation::Notation;
use crate::rational::{fmt_rational, pow_int};
use crate::Rational;

#[derive(Clone, Debug, PartialEq, Eq, Hash, Default)]
pub struct ExpMeasure {
    factors: BTreeMap<BigInt, GrossLinear>,
}

impl ExpMeasure {
    /// The measure 1 (empty product).
    pub fn one() -> Self {
        Self::default()
    }

    /// `base^exponent` for a positive rational base.
    pub fn new(base: &Rational, exponent: &GrossLinear) -> Result<Self> {
        if !base.is_positive() {
            return Err(GrossError::NonPositiveBase(fmt_rational(base)));
        }
        let too_large = || GrossError::BaseTooLarge(fmt_rational(base));
        let num = factorize(base.numer()).ok_or_else(too_large)?;
        let den = factorize(base.denom()).ok_or_else(too_large)?;
        let mut factors = BTreeMap::new();
        if exponent.is_zero() {
            return Ok(ExpMeasure { factors });
        }
        for (p, mult) in num {
            factors.insert(p, exponent.scale(&BigInt::from(mult)));
        }
        for (p, mult) in den {
            factors.insert(p, exponent.scale(&-BigInt::from(mult)));
        }
        Ok(ExpMeasure { factors })
    }

    /// A positive rational as a measure with finite exponents only.
    pub fn from_rational(r: &Rational) -> Result<Self> {
        Self::new(r, &GrossLinear::finite(1))
    }

    /// Builds a measure directly from `(prime, exponent)` pairs. Keys are not
    /// checked for primality.
    pub fn from_factors(pairs: impl IntoIterator<Item = (BigInt, GrossLinear)>) -> Self {
        let mut out = ExpMeasure::one();
        for (p, g) in pairs {
            out.accumulate(p, &g);
        }
        out
    }

    fn accumulate(&mut self, p: BigInt, g: &GrossLinear) {
        match self.factors.entry(p) {
            Entry::Vacant(slot) => {
                if !g.is_zero() {
                    slot.insert(g.clone());
                }
            }
            Entry::Occupied(mut slot) => {
                let sum = slot.get() + g;
                if sum.is_zero() {
                    slot.remove();
                } else {
                    *slot.get_mut() = sum;
                }
            }
        }
    }

    pub fn factors(&self) -> &BTreeMap<BigInt, GrossLinear> {
        &self.factors
    }

    pub fn is_one(&self) -> bool {
        self.factors.is_empty()
    }

    /// `true` when no exponent involves `①`, i.e. the value is a plain rational.
    pub fn is_finite(&self) -> bool {
        self.factors.values().all(GrossLinear::is_finite)
    }

    pub fn mul(&self, other: &ExpMeasure) -> ExpMeasure {
        let mut out = self.clone();
        for (p, g) in &other.factors {
            out.accumulate(p.clone(), g);
        }
        out
    }

    pub fn pow(&self, k: &BigInt) -> ExpMeasure {
        if k.is_zero() {
            return ExpMeasure::one();
        }
        ExpMeasure {
            factors: self
                .factors
                .iter()
                .map(|(p, g)| (p.clone(), g.scale(k)))
                .collect(),
        }
    }

    pub fn recip(&self) -> ExpMeasure {
        self.pow(&-BigInt::one())
    }

    pub fn div(&self, other: &ExpMeasure) -> ExpMeasure {
        self.mul(&other.recip())
    }

    fn gross_parts(&self) -> Vec<(BigInt, BigInt)> {
        self.factors
            .iter()
            .map(|(p, g)| (p.clone(), g.gross().clone()))
            .collect()
    }

    fn const_parts(&self) -> Vec<(BigInt, BigInt)> {
        self.factors
            .iter()
            .map(|(p, g)| (p.clone(), g.constant().clone()))
            .collect()
    }

    /// How `R∞` compares with 1: `Greater` for exponentially infinite,
    /// `Less` for exponentially infinitesimal, `Equal` when the value is finite.
    pub fn growth(&self) -> Ordering {
        log_sum_sign(&self.gross_parts())
    }

    /// The `①`-scale base `R∞ = Π p^aₚ`.
    pub fn gross_base(&self) -> Result<Rational> {
        product(&self.gross_parts())
    }

    /// The finite factor `R₀ = Π p^bₚ`.
    pub fn finite_factor(&self) -> Result<Rational> {
        product(&self.const_parts())
    }

    /// The value as a rational, when it has no `①` dependence.
    pub fn as_rational(&self) -> Option<Result<Rational>> {
        self.is_finite().then(|| self.finite_factor())
    }

    /// Exact value with `①` replaced by the positive integer `m`.
    pub fn eval_at(&self, m: &BigInt) -> Result<Rational> {
        if m < &BigInt::one() {
            return Err(GrossError::InvalidSubstitution(m.to_string()));
        }
        let parts: Vec<(BigInt, BigInt)> = self
            .factors
            .iter()
            .map(|(p, g)| (p.clone(), g.eval_at(m)))
            .collect();
        product(&parts)
    }

    pub fn display(&self, notation: Notation) -> String {
        self.try_display(notation)
            .unwrap_or_else(|| self.display_factors(notation))
    }

    /// `B^(①+c)*r` with `B = R∞`; `None` when the pieces are too large to print.
    fn try_display(&self, notation: Notation) -> Option<String> {
        let base = self.gross_base().ok()?;
        let c = self.common_offset();
        let residue = ExpMeasure::from_factors(self.factors.iter().map(|(p, g)| {
            let folded = g.gross() * &c;
            (p.clone(), GrossLinear::finite(g.constant() - folded))
        }))
        .finite_factor()
        .ok()?;

        let sym = notation.symbol();
        let mut out = String::new();
        if !base.is_one() {
            if base.is_integer() {
                out.push_str(&fmt_rational(&base));
            } else {
                out.push_str(&format!("({})", fmt_rational(&base)));
            }
            if c.is_zero() {
                out.push('^');
                out.push_str(sym);
            } else {
                let sign = if c.is_negative() { '-' } else { '+' };
                out.push_str(&format!("^({sym}{sign}{})", c.abs()));
            }
        }
        if out.is_empty() {
            out.push_str(&fmt_rational(&residue));
        } else if !residue.is_one() {
            if residue.is_integer() {
                out.push_str(&format!("*{}", fmt_rational(&residue)));
            } else {
                out.push_str(&format!("*({})", fmt_rational(&residue)));
            }
        }
        Some(out)
    }

    /// The integer `c` with `bₚ = aₚ·c` for every prime carrying `①`, or 0.
    fn common_offset(&self) -> BigInt {
        let mut c: Option<BigInt> = None;
        for g in self.factors.values() {
            if g.gross().is_zero() {
                continue;
            }
            if !(g.constant() % g.gross()).is_zero() {
                return BigInt::zero();
            }
            let q = g.constant() / g.gross();
            match &c {
                Some(prev) if prev != &q => return BigInt::zero(),
                Some(_) => {}
                None => c = Some(q),
            }
        }
        c.unwrap_or_default()
    }

    fn display_factors(&self, notation: Notation) -> String {
        if self.factors.is_empty() {
            return "1".to_string();
        }
        self.factors
            .iter()
            .map(|(p, g)| format!("{p}^({})", g.display(notation)))
            .collect::<Vec<_>>()
            .join("*")
    }

    pub fn to_json(&self) -> Value {
        let factors: Vec<Value> = self
            .factors
            .iter()
            .map(|(p, g)| {
                json!({
                    "prime": int_json(p),
                    "gross": int_json(g.gross()),
                    "const": int_json(g.constant()),
                })
            })
            .collect();
        json!({ "factors": factors })
    }

    pub fn from_json(v: &Value) -> Option<Self> {
        let arr = v.get("factors")?.as_array()?;
        let mut pairs = Vec::with_capacity(arr.len());
        for f in arr {
            let p = int_from_json(f.get("prime")?)?;
            if !p.is_positive() || factorize(&p)?.len() != 1 || factorize(&p)?[0].1 != 1 {
                return None;
            }
            let g = GrossLinear::new(
                int_from_json(f.get("gross")?)?,
                int_from_json(f.get("const")?)?,
            );
            pairs.push((p, g));
        }
        Some(Self::from_factors(pairs))
    }
}

/// Total order on measures via the sign of `log(a/b)`.
impl Ord for ExpMeasure {
    fn cmp(&self, other: &Self) -> Ordering {
        let ratio = self.div(other);
        ratio
            .growth()
            .then_with(|| log_sum_sign(&ratio.const_parts()))
    }
}

impl PartialOrd for ExpMeasure {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Display for ExpMeasure {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.display(Notation::Unicode))
    }
}

fn product(parts: &[(BigInt, BigInt)]) -> Result<Rational> {
    parts.iter().try_fold(Rational::one(), |acc, (p, e)| {
        Ok(acc * pow_int(&Rational::from_integer(p.clone()), e)?)
    })
}

/// Integers go out as JSON numbers when they fit in an `i64`, else as strings.
pub(crate) fn int_json(n: &BigInt) -> Value {
    match i64::try_from(n) {
        Ok(v) => json!(v),
        Err(_) => json!(n.to_string()),
    }
}

pub(crate) fn int_from_json(v: &Value) -> Option<BigInt> {
    match v {
        Value::Number(n) => n.as_i64().map(BigInt::from),
        Value::String(s) => s.parse().ok(),
        _ => None,
    }
}
