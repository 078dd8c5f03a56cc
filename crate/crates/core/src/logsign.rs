//! Exact sign of `Σ eᵢ·ln pᵢ` for distinct primes `pᵢ`.
//!
//! Equivalent to comparing `Π pᵢ^eᵢ` with 1. For moderate exponents the two
//! sides are multiplied out; otherwise `ln p` is enclosed in certified
//! fixed-point intervals that are refined until the enclosure of the sum
//! excludes zero. Logarithms of distinct primes are linearly independent over
//! the rationals, so a nonzero exponent vector always yields a nonzero sum
//! and the refinement terminates.

use std::cmp::Ordering;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, ToPrimitive, Zero};

use crate::rational::MAX_POWER_BITS;

pub(crate) fn log_sum_sign(parts: &[(BigInt, BigInt)]) -> Ordering {
    let parts: Vec<&(BigInt, BigInt)> = parts.iter().filter(|(_, e)| !e.is_zero()).collect();
    if parts.is_empty() {
        return Ordering::Equal;
    }
    if parts.iter().all(|(_, e)| e.is_positive()) {
        return Ordering::Greater;
    }
    if parts.iter().all(|(_, e)| e.is_negative()) {
        return Ordering::Less;
    }
    let g = parts
        .iter()
        .fold(BigInt::zero(), |acc, (_, e)| acc.gcd(e));
    let reduced: Vec<(BigInt, BigInt)> = parts
        .iter()
        .map(|(p, e)| (p.clone(), e / &g))
        .collect();

    let bits: Option<u64> = reduced.iter().try_fold(0u64, |acc, (p, e)| {
        acc.checked_add(e.abs().to_u64()?.checked_mul(p.bits())?)
    });
    match bits {
        Some(b) if b <= MAX_POWER_BITS => exact_sign(&reduced),
        _ => interval_sign(&reduced),
    }
}

fn exact_sign(parts: &[(BigInt, BigInt)]) -> Ordering {
    let mut num = BigInt::one();
    let mut den = BigInt::one();
    for (p, e) in parts {
        let k = e.abs().to_u32().expect("bounded by MAX_POWER_BITS");
        if e.is_positive() {
            num *= p.pow(k);
        } else {
            den *= p.pow(k);
        }
    }
    num.cmp(&den)
}

fn interval_sign(parts: &[(BigInt, BigInt)]) -> Ordering {
    let max_bits = parts.iter().map(|(_, e)| e.bits()).max().unwrap_or(0);
    let mut prec = 64 + max_bits;
    loop {
        let ln2 = atanh_bounds(&BigInt::one(), &BigInt::from(3u32), prec);
        let ln2 = (ln2.0 << 1usize, ln2.1 << 1usize);
        let mut lo = BigInt::zero();
        let mut hi = BigInt::zero();
        for (p, e) in parts {
            let (plo, phi) = ln_bounds(p, &ln2, prec);
            if e.is_positive() {
                lo += e * plo;
                hi += e * phi;
            } else {
                lo += e * phi;
                hi += e * plo;
            }
        }
        if lo.is_positive() {
            return Ordering::Greater;
        }
        if hi.is_negative() {
            return Ordering::Less;
        }
        prec *= 2;
    }
}

/// Bounds on `ln p · 2^prec`, given bounds on `ln 2 · 2^prec`.
fn ln_bounds(p: &BigInt, ln2: &(BigInt, BigInt), prec: u64) -> (BigInt, BigInt) {
    // p = 2^k · x with x in [1, 2); ln x = 2·atanh((x-1)/(x+1))
    let k = p.bits() - 1;
    let pow2 = BigInt::one() << k;
    let (lo, hi) = atanh_bounds(&(p - &pow2), &(p + &pow2), prec);
    let k = BigInt::from(k);
    (&k * &ln2.0 + (lo << 1usize), &k * &ln2.1 + (hi << 1usize))
}

/// Bounds on `atanh(a/b) · 2^prec` for `0 <= a/b <= 1/3`.
fn atanh_bounds(a: &BigInt, b: &BigInt, prec: u64) -> (BigInt, BigInt) {
    if a.is_zero() {
        return (BigInt::zero(), BigInt::zero());
    }
    let scale = BigInt::one() << prec;
    let a2 = a * a;
    let b2 = b * b;
    let mut num = a.clone();
    let mut den = b.clone();
    let mut sum = BigInt::zero();
    let mut n_terms = 0u64;
    let mut i = 0u64;
    // Stop once the next power y^(2i+1) is below one unit; the tail is then
    // at most y^(2i+1)/(1-y^2) <= 9/8 units.
    while &num * &scale >= den {
        sum += (&num * &scale) / (&den * BigInt::from(2 * i + 1));
        n_terms += 1;
        num *= &a2;
        den *= &b2;
        i += 1;
    }
    // Each floor loses < 1 unit, the tail adds < 2.
    let hi = &sum + BigInt::from(n_terms + 2);
    (sum, hi)
}
