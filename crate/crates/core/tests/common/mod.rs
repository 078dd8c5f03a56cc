//! Seeded generators shared by the property and acceptance suites.

#![allow(dead_code)]

use grossone::{ExpMeasure, GrossLinear, GrossPolynomial, GrossValue, Rational};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

pub fn rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

pub fn q(n: i64, d: i64) -> Rational {
    Rational::new(n.into(), d.into())
}

pub fn small_rational(rng: &mut impl Rng) -> Rational {
    q(rng.random_range(-20..=20), rng.random_range(1..=6))
}

pub fn positive_rational(rng: &mut impl Rng) -> Rational {
    q(rng.random_range(1..=30), rng.random_range(1..=30))
}

/// Polynomial with up to four terms and integer exponents in [-3, 3].
pub fn poly(rng: &mut impl Rng) -> GrossPolynomial {
    let n = rng.random_range(0..=4);
    let terms = (0..n)
        .map(|_| {
            (
                small_rational(rng),
                Rational::from_integer(rng.random_range(-3..=3).into()),
            )
        })
        .collect();
    GrossPolynomial::from_terms(terms)
}

pub fn positive_poly(rng: &mut impl Rng) -> GrossPolynomial {
    loop {
        let p = poly(rng);
        if p.is_positive() {
            return p;
        }
    }
}

pub fn linear(rng: &mut impl Rng) -> GrossLinear {
    GrossLinear::new(rng.random_range(-3..=3), rng.random_range(-6..=6))
}

const BASES: [(i64, i64); 10] = [
    (2, 1),
    (3, 1),
    (1, 2),
    (2, 3),
    (8, 9),
    (20, 27),
    (9, 8),
    (5, 7),
    (8, 1),
    (20, 1),
];

/// Product of up to three `base^(a①+b)` factors and a positive rational.
pub fn measure(rng: &mut impl Rng) -> ExpMeasure {
    let mut m = ExpMeasure::from_rational(&positive_rational(rng)).unwrap();
    for _ in 0..rng.random_range(1..=3) {
        let (n, d) = BASES[rng.random_range(0..BASES.len())];
        m = m.mul(&ExpMeasure::new(&q(n, d), &linear(rng)).unwrap());
    }
    m
}

/// A value of either kind, normalised.
pub fn value(rng: &mut impl Rng) -> GrossValue {
    if rng.random_bool(0.5) {
        GrossValue::Poly(poly(rng))
    } else {
        GrossValue::from_measure(measure(rng)).unwrap()
    }
}

/// A valid `(k, n)` with `1 <= k <= n <= ①+k-1`, finite or infinite.
pub fn fractal_range(rng: &mut impl Rng) -> (GrossLinear, GrossLinear) {
    let infinite_k = rng.random_bool(0.3);
    let k = if infinite_k {
        GrossLinear::new(1, rng.random_range(-20..=20))
    } else {
        GrossLinear::finite(rng.random_range(1..=20))
    };
    let kb = k.constant().clone();
    let n = match (infinite_k, rng.random_range(0..2)) {
        // finite k: finite n >= k, or ① + c with c <= k-1
        (false, 0) => GrossLinear::finite(&kb + rng.random_range(0..=40)),
        (false, _) => GrossLinear::new(1, &kb - 1 - rng.random_range(0..=40)),
        // infinite k = ①+kb: ① + c with c >= kb, or 2① + c with c <= kb-1
        (true, 0) => GrossLinear::new(1, &kb + rng.random_range(0..=40)),
        (true, _) => GrossLinear::new(2, &kb - 1 - rng.random_range(0..=40)),
    };
    (k, n)
}
