use thiserror::Error;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    /// Two objects that must share a shape do not.
    #[error("shape mismatch: expected {expected}, found {found}")]
    Shape { expected: String, found: String },

    /// An entry is outside its alphabet.
    #[error("invalid entry {value} at row {row}, column {column}: {reason}")]
    InvalidEntry {
        row: usize,
        column: usize,
        value: u64,
        reason: &'static str,
    },

    /// Parameters of a constructor or operation are out of range.
    #[error("invalid parameters: {0}")]
    InvalidParameters(String),

    /// An operation that requires enumeration would visit more vectors than allowed.
    #[error("enumerating 2^{log2_requested} vectors exceeds the cap of {cap}")]
    CapExceeded { log2_requested: usize, cap: u64 },

    /// The operation is only defined for a restricted class of codes.
    #[error("precondition violated: {0}")]
    Precondition(String),

    /// The input is not consistent with being derived from a code.
    #[error("inconsistent input: {0}")]
    Inconsistent(String),

    /// An internal invariant failed. Always a bug.
    #[error("internal invariant violated: {0}")]
    Internal(String),
}

impl Error {
    pub(crate) fn shape(expected: impl ToString, found: impl ToString) -> Self {
        Error::Shape {
            expected: expected.to_string(),
            found: found.to_string(),
        }
    }

    /// True for errors caused by an enumeration cap rather than by bad input.
    pub fn is_resource(&self) -> bool {
        matches!(self, Error::CapExceeded { .. })
    }
}

/// Fails with [`Error::CapExceeded`] when `2^log2_count` is larger than `cap`.
pub(crate) fn check_cap(log2_count: usize, cap: u64) -> Result<()> {
    if log2_count >= 64 || (1u64 << log2_count) > cap {
        return Err(Error::CapExceeded {
            log2_requested: log2_count,
            cap,
        });
    }
    Ok(())
}
