//! Error type shared by all modules.

use alloc::string::String;
use core::fmt;

/// Errors reported by the exact computation kernels.
///
/// `Guard` is special: it signals that a computation was refused because it
/// would exceed the configured resource limits, not that anything is wrong
/// with the input. Callers are expected to report guard refusals distinctly
/// from failures.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Error {
    /// Division by zero or inversion of a non-unit.
    NotInvertible,
    /// A parameter was outside the operation's validity window.
    InvalidParameter(String),
    /// The requested closed form is only proved in a bounded range.
    UnprovenRange(String),
    /// Mixed coefficient rings or mismatched variable counts.
    RingMismatch(String),
    /// A resource guard refused the computation.
    Guard(String),
    /// Top-degree search exceeded its hard cap without finding vanishing.
    TopSearchCap { cap: usize },
    /// Two computation methods disagreed; both traces are in the message.
    MethodDisagreement(String),
    /// An internal consistency check failed (a bug, not a user error).
    Internal(String),
}

impl fmt::Display for Error {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Error::NotInvertible => write!(f, "not invertible"),
            Error::InvalidParameter(s) => write!(f, "invalid parameter: {s}"),
            Error::UnprovenRange(s) => write!(f, "outside proven range: {s}"),
            Error::RingMismatch(s) => write!(f, "ring mismatch: {s}"),
            Error::Guard(s) => write!(f, "resource guard: {s}"),
            Error::TopSearchCap { cap } => {
                write!(f, "no vanishing found up to hard cap degree {cap}")
            }
            Error::MethodDisagreement(s) => write!(f, "method disagreement: {s}"),
            Error::Internal(s) => write!(f, "internal error: {s}"),
        }
    }
}

impl core::error::Error for Error {}
