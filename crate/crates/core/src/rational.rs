//! Exact helpers on top of `BigRational`: bounded powering and exact roots.

use num_bigint::BigInt;
use num_traits::{One, Signed, ToPrimitive, Zero};

use crate::error::{GrossError, Result};
use crate::Rational;

/// Upper bound on the bit size of any power we are willing to materialise.
pub(crate) const MAX_POWER_BITS: u64 = 1 << 22;

pub(crate) fn fmt_rational(r: &Rational) -> String {
    if r.is_integer() {
        r.numer().to_string()
    } else {
        format!("{}/{}", r.numer(), r.denom())
    }
}

fn bits(n: &BigInt) -> u64 {
    n.bits().max(1)
}

/// `base^exp` for an arbitrary integer exponent.
pub(crate) fn pow_int(base: &Rational, exp: &BigInt) -> Result<Rational> {
    if exp.is_zero() || base.is_one() {
        return Ok(Rational::one());
    }
    if base.is_zero() {
        return if exp.is_negative() {
            Err(GrossError::DivisionByZero)
        } else {
            Ok(Rational::zero())
        };
    }
    if base == &-Rational::one() {
        return Ok(if (exp % 2u32).is_zero() {
            Rational::one()
        } else {
            -Rational::one()
        });
    }
    let too_large = || GrossError::ExponentTooLarge(exp.to_string());
    let e = exp.abs().to_u64().ok_or_else(too_large)?;
    let size = bits(base.numer()).max(bits(base.denom()));
    if e.checked_mul(size).is_none_or(|b| b > MAX_POWER_BITS) {
        return Err(too_large());
    }
    let e = u32::try_from(e).map_err(|_| too_large())?;
    let p = Rational::new(base.numer().pow(e), base.denom().pow(e));
    Ok(if exp.is_negative() { p.recip() } else { p })
}

/// Exact `q`-th root of `r`, if it is rational.
pub(crate) fn exact_root(r: &Rational, q: u32) -> Option<Rational> {
    if q == 1 {
        return Some(r.clone());
    }
    if r.is_negative() && q.is_multiple_of(2) {
        return None;
    }
    let root = |n: &BigInt| -> Option<BigInt> {
        let c = n.nth_root(q);
        (c.pow(q) == *n).then_some(c)
    };
    Some(Rational::new(root(r.numer())?, root(r.denom())?))
}

/// `base^exp` for a rational exponent; fails unless the result is rational.
pub(crate) fn pow_rational(base: &Rational, exp: &Rational) -> Result<Rational> {
    if exp.is_integer() {
        return pow_int(base, &exp.to_integer());
    }
    let fail = || GrossError::NonIntegralPower {
        base: fmt_rational(base),
        exponent: fmt_rational(exp),
    };
    let q = exp.denom().to_u32().ok_or_else(fail)?;
    let root = exact_root(base, q).ok_or_else(fail)?;
    pow_int(&root, exp.numer())
}
