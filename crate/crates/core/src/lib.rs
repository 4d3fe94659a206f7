//! Exact computation of Hilbert functions of powers of ideals of forms, and
//! Weak Lefschetz diagnostics for powers of monomial complete intersections.
//!
//! Everything here is exact: big integers, prime fields, and cyclotomic
//! integers; no floating point anywhere. The crate is `no_std` (it requires
//! `alloc`) so the algorithmic substrate can be reused without an operating
//! system; IO, file formats and the command line live in the companion crate.
//!
//! The main entry points are:
//! - [`hilbert::hilbert_report`]: the Hilbert function of `R/I^k` for the
//!   supported generator families, by exact rank over a prime field or by
//!   monomial counting.
//! - [`series`]: closed-form Hilbert series and the truncation operator.
//! - [`wlp::wlp_check`]: Weak Lefschetz verdicts by per-degree ranks of the
//!   multiplication-by-a-linear-form map, or by series comparison.
//! - [`equivariant`]: S3 characters, isotypic multiplicities and the
//!   equivariant rank obstruction for three-variable monomial quotients.
//! - [`relations`]: the cyclotomic product form vanishing in powers of
//!   monomial complete intersections, and its kernel element.

#![no_std]

extern crate alloc;

#[cfg(test)]
extern crate std;

pub mod arith;
pub mod cyclo;
pub mod equivariant;
pub mod error;
pub mod fp;
pub mod hilbert;
pub mod ideal;
pub mod limits;
pub mod matrix;
pub mod monomial;
pub mod poly;
pub mod relations;
pub mod ring;
pub mod series;
pub mod wlp;

pub use error::Error;
pub use limits::Limits;

/// Crate-wide result type.
pub type Result<T> = core::result::Result<T, Error>;
