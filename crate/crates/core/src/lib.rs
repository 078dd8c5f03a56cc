//! Exact arithmetic with grossone (`①`), the infinite unit counting the
//! natural numbers, together with a model of sequential processes under the
//! `①`-step cap and exact measures of classical fractals after finitely or
//! infinitely many construction steps.
//!
//! ```
//! use grossone::{carpet_snapshot, GrossLinear};
//!
//! let s = carpet_snapshot(GrossLinear::finite(1), GrossLinear::grossone()).unwrap();
//! assert_eq!(s.total_measure().to_string(), "(8/9)^(①-1)");
//! ```

pub mod error;
pub mod expr;
mod factor;
pub mod fractal;
pub mod linear;
mod logsign;
pub mod measure;
mod notation;
pub mod poly;
pub mod process;
mod rational;
pub mod value;

/// Arbitrary-precision rational, always in lowest terms with positive denominator.
pub type Rational = num_rational::BigRational;

pub use error::{GrossError, Result};
pub use factor::{factorize, MAX_PRIME_FACTOR};
pub use fractal::{
    cantor_snapshot, carpet_snapshot, distinguish, sponge_snapshot, FiniteApproximation, Fractal,
    FractalSnapshot,
};
pub use linear::GrossLinear;
pub use measure::ExpMeasure;
pub use notation::Notation;
pub use poly::GrossPolynomial;
pub use process::{
    is_sequentially_countable, max_sequence_length, sequential_reach, set_measure_add,
    set_measure_nat, set_measure_remove, set_measure_tuples, ProcessSpan,
};
pub use value::GrossValue;
