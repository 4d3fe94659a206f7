//! Resource guards. Computations whose basis or matrix would exceed the
//! configured sizes are refused with [`Error::Guard`](crate::Error::Guard),
//! never silently truncated.

use crate::error::Error;
use crate::Result;

/// Size limits for degree bases and rank computations.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Limits {
    /// Largest allowed monomial basis in a single degree.
    pub max_basis: usize,
    /// Largest allowed `rows * cols` for a rank computation.
    pub max_matrix_entries: u64,
}

impl Default for Limits {
    fn default() -> Self {
        Limits {
            max_basis: 200_000,
            max_matrix_entries: 50_000_000,
        }
    }
}

impl Limits {
    /// A guard that never refuses; for tests and callers that know better.
    pub fn unlimited() -> Self {
        Limits {
            max_basis: usize::MAX,
            max_matrix_entries: u64::MAX,
        }
    }

    pub fn check_basis(&self, size: usize, what: &str) -> Result<()> {
        if size > self.max_basis {
            return Err(Error::Guard(alloc::format!(
                "{what}: basis size {size} exceeds limit {}",
                self.max_basis
            )));
        }
        Ok(())
    }

    pub fn check_matrix(&self, rows: usize, cols: usize, what: &str) -> Result<()> {
        let entries = rows as u64 * cols as u64;
        if entries > self.max_matrix_entries {
            return Err(Error::Guard(alloc::format!(
                "{what}: matrix {rows}x{cols} exceeds entry limit {}",
                self.max_matrix_entries
            )));
        }
        Ok(())
    }
}
