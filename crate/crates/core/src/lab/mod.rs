//! Claim checkers.
//!
//! Each checker takes a concrete instance (a graph, an `α`, indices) and
//! returns a [`Verdict`]: the status of the claim on that instance, the signed
//! margin to the inequality boundary, and a witness with the numbers behind
//! it. Instances outside a claim's hypotheses yield
//! [`Status::NotApplicable`] rather than being skipped, so scan coverage
//! stays auditable.
//!
//! Tolerance semantics ([`Tolerances`]):
//! * `|margin| <= equality` is equality;
//! * a strict inequality is asserted only when `margin > tight`; margins in
//!   `(equality, tight]` are reported as [`Status::NumericallyTight`].

mod checks;
mod scan;
mod suite;
mod verdict;
mod weyl;

pub use checks::{Lab, ALPHA0_BISECTION_TOL};
pub use scan::{ScanReport, ScanSummary};
pub use scan::SCAN_MIN_ORDER;
pub use suite::{run_claim, run_on_graph, Claim, ClaimSummary};
pub use verdict::{Datum, GraphRecord, Status, Verdict};

/// Numerical thresholds shared by all checkers.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Tolerances {
    /// Eigenvalue equality band.
    pub equality: f64,
    /// Upper end of the numerically-tight band for strict inequalities.
    pub tight: f64,
    /// Eigenspace clustering and common-eigenvector residuals (two numerical
    /// layers deep, hence looser).
    pub eigenspace: f64,
    /// Agreement between the bisected `α₀` and its closed forms.
    pub alpha0: f64,
}

impl Default for Tolerances {
    fn default() -> Self {
        Self {
            equality: 1e-9,
            tight: 1e-6,
            eigenspace: 1e-7,
            alpha0: 1e-6,
        }
    }
}

impl Tolerances {
    /// Status of `lhs >= rhs` given `margin = lhs - rhs`.
    pub fn classify_non_strict(&self, margin: f64) -> Status {
        if margin < -self.equality {
            Status::Violated
        } else if margin <= self.equality {
            Status::HoldsWithEquality
        } else if margin <= self.tight {
            Status::NumericallyTight
        } else {
            Status::Holds
        }
    }

    /// Status of `lhs > rhs` given `margin = lhs - rhs`.
    pub fn classify_strict(&self, margin: f64) -> Status {
        if margin <= self.equality {
            Status::Violated
        } else if margin <= self.tight {
            Status::NumericallyTight
        } else {
            Status::Holds
        }
    }

    /// Status of a "multiplicity at least `required`" claim.
    pub fn classify_count(&self, found: usize, required: usize) -> Status {
        if found < required {
            Status::Violated
        } else if found == required && required > 0 {
            Status::HoldsWithEquality
        } else {
            Status::Holds
        }
    }
}
