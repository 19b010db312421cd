use thiserror::Error;

use crate::report::ValidationReport;

/// Errors raised by constructors and constructions.
///
/// Axiom failures found by a validator are *not* errors; they are reported in a
/// [`ValidationReport`]. An `Error` means the input could not be interpreted at all,
/// or a construction's precondition does not hold.
#[derive(Debug, Error)]
pub enum Error {
    /// A table has the wrong shape or refers to an element that does not exist.
    #[error("malformed table: {0}")]
    Structural(String),

    /// An object handed to a constructor failed validation.
    #[error("{what} is invalid:\n{report}")]
    Invalid {
        what: String,
        report: ValidationReport,
    },

    /// A construction's precondition is not met.
    #[error("precondition failed: {0}")]
    Precondition(String),

    /// Two objects that must agree (a composite's middle object, a map's endpoint) differ.
    #[error("mismatch: {0}")]
    Mismatch(String),

    /// A construction produced an object that failed re-validation.
    ///
    /// This never happens for the constructions backed by a theorem; if it does, the
    /// attached report is a counterexample.
    #[error("construction produced an invalid result ({what}):\n{report}")]
    Counterexample {
        what: String,
        report: ValidationReport,
    },

    #[error("i/o error: {0}")]
    Io(#[from] std::io::Error),

    #[error("parse error: {0}")]
    Parse(#[from] serde_json::Error),
}

pub type Result<T, E = Error> = std::result::Result<T, E>;

pub(crate) fn ensure_valid(what: impl Into<String>, report: ValidationReport) -> Result<()> {
    if report.is_valid() {
        Ok(())
    } else {
        Err(Error::Invalid {
            what: what.into(),
            report,
        })
    }
}

pub(crate) fn ensure_constructed(what: impl Into<String>, report: ValidationReport) -> Result<()> {
    if report.is_valid() {
        Ok(())
    } else {
        Err(Error::Counterexample {
            what: what.into(),
            report,
        })
    }
}
