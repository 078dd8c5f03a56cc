//! Sequential processes under the `①`-step cap.
//!
//! Any sequence, and hence any step-by-step process, has at most `①`
//! elements. A process starting at position `s` can therefore reach at most
//! `s + ① - 1`, and a collection with more than `①` elements cannot be
//! counted one element at a time.

use std::cmp::Ordering;

use num_bigint::BigInt;

use crate::error::{GrossError, Result};
use crate::linear::GrossLinear;
use crate::poly::GrossPolynomial;
use crate::value::GrossValue;
use crate::Rational;

/// A sequential process: a starting position and a length in `(0, ①]`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ProcessSpan {
    start: GrossLinear,
    length: GrossValue,
}

impl ProcessSpan {
    pub fn new(start: GrossLinear, length: GrossValue) -> Result<Self> {
        if !length.is_positive() || length > max_sequence_length() {
            return Err(GrossError::InvalidProcessLength(length.to_string()));
        }
        Ok(ProcessSpan { start, length })
    }

    pub fn start(&self) -> &GrossLinear {
        &self.start
    }

    pub fn length(&self) -> &GrossValue {
        &self.length
    }

    /// The last position visited, `start + length - 1`, when the length is
    /// polynomial.
    pub fn last(&self) -> Option<GrossPolynomial> {
        let len = self.length.as_poly()?;
        Some(&(&self.start.to_poly() + len) - &GrossPolynomial::one())
    }
}

/// The longest possible sequence: exactly `①` elements.
pub fn max_sequence_length() -> GrossValue {
    GrossValue::grossone()
}

/// Farthest element reachable from `start` in `①` sequential steps.
pub fn sequential_reach(start: &GrossLinear) -> Result<GrossLinear> {
    if start < &GrossLinear::finite(1) {
        return Err(GrossError::InvalidStart(start.to_string()));
    }
    Ok(start + &GrossLinear::new(1, -1))
}

/// Whether a collection of `count` elements can be counted one by one.
pub fn is_sequentially_countable(count: &GrossValue) -> Result<bool> {
    if !count.is_positive() {
        return Err(GrossError::NonPositiveCount(count.to_string()));
    }
    Ok(count.cmp(&max_sequence_length()) != Ordering::Greater)
}

/// Number of elements of ℕ: `①`.
pub fn set_measure_nat() -> GrossValue {
    GrossValue::grossone()
}

/// ℕ with `j` elements removed: `① - j`.
pub fn set_measure_remove(j: u64) -> GrossValue {
    GrossValue::from(GrossLinear::new(1, -BigInt::from(j)))
}

/// ℕ with `j` outside elements added: `① + j`.
pub fn set_measure_add(j: u64) -> GrossValue {
    GrossValue::from(GrossLinear::new(1, j))
}

/// ℕ^d, the set of `d`-tuples of naturals: `①^d`.
pub fn set_measure_tuples(d: u32) -> GrossValue {
    GrossValue::Poly(GrossPolynomial::monomial(
        Rational::from_integer(1.into()),
        Rational::from_integer(d.into()),
    ))
}
