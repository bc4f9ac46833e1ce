//! `A_α(G)` construction, dense symmetric spectra, and the quantities built
//! on them: quadratic forms, eigen residuals, multiplicities, and the
//! positive-semidefiniteness threshold in `α`.

mod eigen;
mod forms;
mod matrix;
mod spectrum;
mod threshold;

pub use eigen::{spectrum, MAX_SWEEPS};
pub use forms::{eigen_residual, quadratic_forms, rayleigh_numerator, QuadraticForms};
pub use matrix::{adjacency_matrix, alpha_matrix, signless_laplacian, Alpha, SymmetricMatrix};
pub use spectrum::Spectrum;
pub use threshold::{psd_threshold, regular_alpha0, MAX_BISECTION_STEPS};

use crate::error::Result;
use crate::graph::Graph;
use crate::scalar::Scalar;

/// Eigenvalues of `A_α(G)`, descending, without vectors.
pub fn alpha_spectrum<T: Scalar>(g: &Graph, alpha: Alpha<T>) -> Result<Spectrum<T>> {
    spectrum(&alpha_matrix(g, alpha), false)
}
