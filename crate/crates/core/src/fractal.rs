//! Exact piece counts, piece sizes and total measures for Cantor's set,
//! Sierpinski's carpet and Menger's sponge.
//!
//! A snapshot is taken at step `n` of a process that starts from stage `k` of
//! the construction. Both may be finite or infinite, subject to
//! `1 ≤ k ≤ n ≤ ① + k - 1`. With `e` the number of subdivisions performed
//! (`n + k - 2` for the carpet and sponge, `n + k - 1` for Cantor's set, whose
//! first step already splits the unit interval):
//!
//! | fractal | pieces   | side      | measure        |
//! |---------|----------|-----------|----------------|
//! | cantor  | `2^e`    | `3^(-e)`  | `(2/3)^e`      |
//! | carpet  | `8^e`    | `3^(-e)`  | `(8/9)^e`      |
//! | sponge  | `20^e`   | `3^(-e)`  | `(20/27)^e`    |

use std::cmp::Ordering;
use std::fmt;
use std::str::FromStr;

use num_bigint::BigInt;
use num_traits::One;
use serde_json::{json, Value};

use crate::error::{GrossError, Result};
use crate::linear::GrossLinear;
use crate::measure::int_json;
use crate::notation::Notation;
use crate::value::GrossValue;
use crate::Rational;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Fractal {
    Cantor,
    Carpet,
    Sponge,
}

impl Fractal {
    pub const ALL: [Fractal; 3] = [Fractal::Cantor, Fractal::Carpet, Fractal::Sponge];

    pub fn name(self) -> &'static str {
        match self {
            Fractal::Cantor => "cantor",
            Fractal::Carpet => "carpet",
            Fractal::Sponge => "sponge",
        }
    }

    pub fn dim(self) -> u32 {
        match self {
            Fractal::Cantor => 1,
            Fractal::Carpet => 2,
            Fractal::Sponge => 3,
        }
    }

    /// Pieces kept out of `3^dim` at each subdivision.
    pub fn kept(self) -> u32 {
        match self {
            Fractal::Cantor => 2,
            Fractal::Carpet => 8,
            Fractal::Sponge => 20,
        }
    }

    /// Measure ratio between consecutive steps: `kept / 3^dim`.
    pub fn ratio(self) -> Rational {
        Rational::new(self.kept().into(), BigInt::from(3u32).pow(self.dim()))
    }

    /// Subdivisions performed by step `n` of the process starting at stage `k`.
    pub fn subdivisions(self, k: &GrossLinear, n: &GrossLinear) -> GrossLinear {
        let shift = match self {
            Fractal::Cantor => -1,
            Fractal::Carpet | Fractal::Sponge => -2,
        };
        &(k + n) + &GrossLinear::finite(shift)
    }
}

impl fmt::Display for Fractal {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Fractal {
    type Err = String;
    fn from_str(s: &str) -> std::result::Result<Self, String> {
        Fractal::ALL
            .into_iter()
            .find(|f| f.name() == s)
            .ok_or_else(|| format!("unknown fractal {s:?}"))
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FractalSnapshot {
    fractal: Fractal,
    offset_k: GrossLinear,
    step_n: GrossLinear,
    piece_count: GrossValue,
    piece_size: GrossValue,
    total_measure: GrossValue,
}

/// Exact rational values of a snapshot at `① := m`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FiniteApproximation {
    pub count: Rational,
    pub size: Rational,
    pub measure: Rational,
}

impl FractalSnapshot {
    pub fn new(fractal: Fractal, k: GrossLinear, n: GrossLinear) -> Result<Self> {
        check_range(&k, &n)?;
        let e = fractal.subdivisions(&k, &n);
        let three = Rational::from_integer(3.into());
        let piece_count = GrossValue::exp(&Rational::from_integer(fractal.kept().into()), &e)?;
        let piece_size = GrossValue::exp(&three, &-e.clone())?;
        let total_measure = GrossValue::exp(&fractal.ratio(), &e)?;
        Ok(FractalSnapshot {
            fractal,
            offset_k: k,
            step_n: n,
            piece_count,
            piece_size,
            total_measure,
        })
    }

    pub fn fractal(&self) -> Fractal {
        self.fractal
    }

    pub fn offset_k(&self) -> &GrossLinear {
        &self.offset_k
    }

    pub fn step_n(&self) -> &GrossLinear {
        &self.step_n
    }

    pub fn piece_count(&self) -> &GrossValue {
        &self.piece_count
    }

    pub fn piece_size(&self) -> &GrossValue {
        &self.piece_size
    }

    pub fn total_measure(&self) -> &GrossValue {
        &self.total_measure
    }

    /// `piece_size^dim · piece_count`, recomputed through measure arithmetic.
    pub fn recomposed_measure(&self) -> Result<GrossValue> {
        let as_measure = |v: &GrossValue| {
            v.as_measure()
                .ok_or_else(|| GrossError::NonPositiveMeasure(v.to_string()))
        };
        let size = as_measure(&self.piece_size)?;
        let count = as_measure(&self.piece_count)?;
        GrossValue::from_measure(size.pow(&self.fractal.dim().into()).mul(&count))
    }

    /// Exact values with `①` replaced by `m`. The range constraint must still
    /// hold for the substituted integers.
    pub fn finite_approximation(&self, m: &BigInt) -> Result<FiniteApproximation> {
        if m < &BigInt::one() {
            return Err(GrossError::InvalidSubstitution(m.to_string()));
        }
        let k = self.offset_k.eval_at(m);
        let n = self.step_n.eval_at(m);
        let violation = |detail: String| GrossError::RangeViolationAtSubstitution {
            m: m.to_string(),
            detail,
        };
        if k < BigInt::one() {
            return Err(violation(format!("1 <= k fails with k = {k}")));
        }
        if n < k {
            return Err(violation(format!("k <= n fails with k = {k}, n = {n}")));
        }
        if n > m + &k - 1 {
            return Err(violation(format!(
                "n <= m+k-1 fails with k = {k}, n = {n}"
            )));
        }
        Ok(FiniteApproximation {
            count: self.piece_count.eval_at(m)?,
            size: self.piece_size.eval_at(m)?,
            measure: self.total_measure.eval_at(m)?,
        })
    }

    pub fn to_json(&self) -> Value {
        let lin = |l: &GrossLinear| json!({"gross": int_json(l.gross()), "const": int_json(l.constant())});
        json!({
            "fractal": self.fractal.name(),
            "k": lin(&self.offset_k),
            "n": lin(&self.step_n),
            "count": value_json(&self.piece_count),
            "size": value_json(&self.piece_size),
            "measure": value_json(&self.total_measure),
        })
    }

    pub fn display(&self, notation: Notation) -> String {
        format!(
            "{} k={} n={}: count={} size={} measure={}",
            self.fractal,
            self.offset_k.display(notation),
            self.step_n.display(notation),
            self.piece_count.display(notation),
            self.piece_size.display(notation),
            self.total_measure.display(notation),
        )
    }
}

impl fmt::Display for FractalSnapshot {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.display(Notation::Unicode))
    }
}

/// Measure-style JSON for every value: finite rationals are written as their
/// prime factorisation with zero `①` coefficients.
fn value_json(v: &GrossValue) -> Value {
    match v.as_measure() {
        Some(m) => m.to_json(),
        None => v.to_json(),
    }
}

fn check_range(k: &GrossLinear, n: &GrossLinear) -> Result<()> {
    if k < &GrossLinear::finite(1) {
        return Err(GrossError::RangeViolation(format!("1 <= k fails with k = {k}")));
    }
    if n < k {
        return Err(GrossError::RangeViolation(format!(
            "k <= n fails with k = {k}, n = {n}"
        )));
    }
    let cap = k + &GrossLinear::new(1, -1);
    if n > &cap {
        return Err(GrossError::RangeViolation(format!(
            "n <= ①+k-1 fails with k = {k}, n = {n}"
        )));
    }
    Ok(())
}

pub fn carpet_snapshot(k: GrossLinear, n: GrossLinear) -> Result<FractalSnapshot> {
    FractalSnapshot::new(Fractal::Carpet, k, n)
}

pub fn sponge_snapshot(k: GrossLinear, n: GrossLinear) -> Result<FractalSnapshot> {
    FractalSnapshot::new(Fractal::Sponge, k, n)
}

pub fn cantor_snapshot(k: GrossLinear, n: GrossLinear) -> Result<FractalSnapshot> {
    FractalSnapshot::new(Fractal::Cantor, k, n)
}

/// Orders two snapshots of the same fractal by total measure and returns the
/// exact ratio `a / b`.
pub fn distinguish(a: &FractalSnapshot, b: &FractalSnapshot) -> Result<(Ordering, GrossValue)> {
    if a.fractal != b.fractal {
        return Err(GrossError::FractalMismatch(
            a.fractal.to_string(),
            b.fractal.to_string(),
        ));
    }
    let ratio = a.total_measure.checked_div(&b.total_measure)?;
    Ok((a.total_measure.cmp(&b.total_measure), ratio))
}
