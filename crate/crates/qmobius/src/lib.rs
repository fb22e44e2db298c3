//! Exact arithmetic for truncated q-series and the partition statistics they
//! generate, together with a registry of Möbius-inversion identities that are
//! verified coefficientwise through independent code paths.
//!
//! The crate is organized in layers:
//!
//! - [`fps`] — truncated formal power series over exact rationals: ring
//!   operations, log/exp, the q-derivative, and infinite products
//!   `Π (1−qⁿ)^{a(n)}` with rational exponents.
//! - [`arith`] — the Möbius function, divisor sums, and the inversion
//!   transforms they induce, including the generic indexed-family inversion.
//! - [`partitions`] — brute-force partition enumeration (the combinatorial
//!   oracle), recurrence counters, Durfee geometry, and generating-function
//!   builders for every statistic.
//! - [`identities`] — named identity checks comparing two independent
//!   computations of the same series or table, with first-mismatch reports.
//! - [`cli`] — the command-line surface (`series`, `table`, `verify`).
//!
//! All coefficients are arbitrary-precision rationals; nothing is ever
//! rounded, and no series is ever evaluated at a numeric point.

pub mod arith;
pub mod cli;
pub mod fps;
pub mod identities;
pub mod partitions;

use std::fmt;

/// Errors shared across the crate.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Error {
    /// Division by a series whose constant term is zero.
    DivisionByNonUnit,
    /// Logarithm of a series whose constant term is not 1.
    LogOfNonOne,
    /// Exponential of a series whose constant term is not 0.
    ExpOfNonZero,
    /// An argument outside the operation's domain (e.g. `n = 0`).
    Domain(String),
    /// An enumeration request above the configured oracle limit.
    OracleLimitExceeded { n: u32, limit: u32 },
}

impl fmt::Display for Error {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Error::DivisionByNonUnit => {
                write!(f, "division by a series with zero constant term")
            }
            Error::LogOfNonOne => {
                write!(f, "log of a series whose constant term is not 1")
            }
            Error::ExpOfNonZero => {
                write!(f, "exp of a series whose constant term is not 0")
            }
            Error::Domain(msg) => write!(f, "domain error: {msg}"),
            Error::OracleLimitExceeded { n, limit } => {
                write!(f, "enumeration of n = {n} exceeds the oracle limit {limit}")
            }
        }
    }
}

impl std::error::Error for Error {}

pub type Result<T> = std::result::Result<T, Error>;
