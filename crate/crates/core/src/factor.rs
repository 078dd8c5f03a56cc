//! Trial-division factorization of small integers.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

/// Largest prime factor accepted.
pub const MAX_PRIME_FACTOR: u64 = 1_000_000;

/// Factors `n > 0` into `(prime, multiplicity)` pairs in increasing prime order.
///
/// Returns `None` when `n` has a prime factor above [`MAX_PRIME_FACTOR`].
pub fn factorize(n: &BigInt) -> Option<Vec<(BigInt, u64)>> {
    debug_assert!(n.is_positive());
    let mut n = n.clone();
    let mut out = Vec::new();
    let mut d = BigInt::from(2u32);
    let limit = BigInt::from(MAX_PRIME_FACTOR);
    while &d * &d <= n && d <= limit {
        let mut mult = 0u64;
        loop {
            let (q, r) = n.div_rem(&d);
            if !r.is_zero() {
                break;
            }
            n = q;
            mult += 1;
        }
        if mult > 0 {
            out.push((d.clone(), mult));
        }
        d += if d == BigInt::from(2u32) { 1u32 } else { 2u32 };
    }
    if n > BigInt::one() {
        if n > limit {
            return None;
        }
        out.push((n, 1));
    }
    Some(out)
}
