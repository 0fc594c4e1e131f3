//! Trisection calculus for 4-manifolds together with numerical certificates
//! for the Stein trisections of the 4-ball built from holomorphic branched
//! covers of `C²`.
//!
//! The crate is split along the lines of the workbench:
//!
//! * [`trisection`]: parameter arithmetic, homological diagrams, Smith normal form.
//! * [`bridge`]: counts for surfaces in (relative) bridge position and the perturbation move.
//! * [`cover`]: permutation monodromy, stratum lifting and the pullback trisection.
//! * [`geometry`]: explicit models in `C²` and their numerical certification.
//! * [`reconstruct`]: reducible trisections, prime splittings and the glued exhaustion.
//! * [`pipeline`]: the end-to-end runs behind the `tw` command-line tool.
//!
//! Sampling sweeps run on rayon when the `parallel` feature is enabled (the
//! default) and fall back to plain iterators otherwise; see [`par`].

pub mod bridge;
pub mod cover;
mod error;
pub mod geometry;
pub mod par;
pub mod pipeline;
pub mod reconstruct;
pub mod schema;
mod sector;
pub mod trisection;

pub use error::{Error, Result};
pub use sector::Sector;

/// A named constraint failure collected by the `validate_*` operations.
#[derive(Debug, Clone, PartialEq, Eq, serde::Serialize, serde::Deserialize)]
pub struct Violation {
    pub constraint: String,
    pub detail: String,
}

/// Result of validating a value against its structural invariants.
///
/// `valid` is always equal to `violations.is_empty()`.
#[derive(Debug, Clone, PartialEq, Eq, serde::Serialize, serde::Deserialize)]
pub struct ValidationReport {
    pub valid: bool,
    pub violations: Vec<Violation>,
}

impl ValidationReport {
    pub fn from_violations(violations: Vec<Violation>) -> Self {
        ValidationReport {
            valid: violations.is_empty(),
            violations,
        }
    }

    pub fn ok() -> Self {
        Self::from_violations(Vec::new())
    }

    pub fn has(&self, constraint: &str) -> bool {
        self.violations.iter().any(|v| v.constraint == constraint)
    }

    /// Converts an invalid report into [`Error::Invalid`].
    pub fn into_result(self, what: &str) -> Result<()> {
        if self.valid {
            Ok(())
        } else {
            let list = self
                .violations
                .iter()
                .map(|v| v.constraint.as_str())
                .collect::<Vec<_>>()
                .join(", ");
            Err(Error::Invalid(format!("{what}: {list}")))
        }
    }
}

pub(crate) fn violation(constraint: impl Into<String>, detail: impl Into<String>) -> Violation {
    Violation {
        constraint: constraint.into(),
        detail: detail.into(),
    }
}
