//! Truncated formal power series in one variable `q` over exact rationals.
//!
//! A [`Series`] of order `N` stores the coefficients of `q⁰..q^N` inclusive.
//! Binary operations truncate to the minimum operand order; identity
//! verification aligns orders naturally, so truncation never errors.

mod product;
mod series;

pub use product::{log_deriv_of_product, pochhammer, prod_pow, ExponentSequence};
pub use series::Series;

use num::BigInt;

/// Scalar of every series: an arbitrary-precision rational, always stored in
/// lowest terms with positive denominator.
pub type Coefficient = num::BigRational;

/// The rational `n/d`, normalized. Panics if `d == 0`.
pub fn rat(n: i64, d: i64) -> Coefficient {
    Coefficient::new(BigInt::from(n), BigInt::from(d))
}

/// The integer `n` as a coefficient.
pub fn int(n: i64) -> Coefficient {
    Coefficient::from_integer(BigInt::from(n))
}
