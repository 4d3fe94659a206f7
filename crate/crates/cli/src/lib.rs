//! IO companion to `idealpower-core`: JSON/CSV report formats, the
//! append-only result cache, and the claim verifier behind the `verify`
//! subcommand. The binary in `main.rs` is a thin argument layer over this.

pub mod cache;
pub mod claims;
pub mod formats;

/// Schema version stamped on every emitted JSON document and cache record.
pub const SCHEMA_VERSION: u32 = 1;
