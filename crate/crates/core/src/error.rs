//! Error type shared by every module of the crate.

use crate::polynomials::IntPoly;
use std::fmt;

/// Errors produced by the exact and numerical operations.
#[derive(Debug, Clone, PartialEq)]
pub enum Error {
    /// An argument fell outside the documented domain of an operation.
    Domain(String),
    /// An exhaustive enumeration was requested past the configured cap.
    EnumerationCap { n: u32, cap: u32 },
    /// Exact polynomial division left a nonzero remainder.
    NonzeroRemainder { remainder: IntPoly },
    /// Division by the zero polynomial.
    ZeroDivisor,
    /// The root solver did not reach the residual tolerance.
    NoConvergence {
        n: u32,
        iterations: u32,
        worst_residual: f64,
    },
}

impl fmt::Display for Error {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Error::Domain(msg) => write!(f, "domain error: {msg}"),
            Error::EnumerationCap { n, cap } => {
                write!(f, "enumeration of n = {n} exceeds the cap {cap}")
            }
            Error::NonzeroRemainder { remainder } => {
                write!(f, "exact division failed, remainder {remainder}")
            }
            Error::ZeroDivisor => write!(f, "division by the zero polynomial"),
            Error::NoConvergence {
                n,
                iterations,
                worst_residual,
            } => write!(
                f,
                "root solver for n = {n} did not converge after {iterations} iterations \
                 (worst scaled residual {worst_residual:e})"
            ),
        }
    }
}

impl std::error::Error for Error {}

pub type Result<T> = std::result::Result<T, Error>;
