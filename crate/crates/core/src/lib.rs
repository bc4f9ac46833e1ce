//! Spectra of `A_α(G) = αD(G) + (1 − α)A(G)` for small simple graphs.
//!
//! * [`graph`]: bitset graphs, named families, combinatorial invariants and
//!   canonical forms.
//! * [`spectra`]: matrix construction, a Jacobi eigensolver, quadratic forms,
//!   multiplicities and the positive-semidefiniteness threshold in `α`.
//! * [`closed_forms`]: family eigenvalue formulas, each checked against the solver.
//! * [`enumeration`]: non-isomorphic graphs up to order 8 by class.
//! * [`lab`]: one checker per spectral claim, emitting [`lab::Verdict`]s, plus
//!   the exhaustive scan for the least-eigenvalue conjecture.
//!
//! The numerical kernel is generic over [`Scalar`] (`f32`, `f64`); the
//! aliases below fix it to `f64`, which is what the checkers use.

pub mod closed_forms;
pub mod enumeration;
pub mod error;
pub mod graph;
pub mod lab;
pub mod numfmt;
pub mod scalar;
pub mod spectra;

pub use error::{Error, Result};
pub use graph::{CanonicalForm, FamilySpec, Graph};
pub use scalar::Scalar;

pub type Alpha = spectra::Alpha<f64>;
pub type SymmetricMatrix = spectra::SymmetricMatrix<f64>;
pub type Spectrum = spectra::Spectrum<f64>;

pub type AlphaF32 = spectra::Alpha<f32>;
pub type SymmetricMatrixF32 = spectra::SymmetricMatrix<f32>;
pub type SpectrumF32 = spectra::Spectrum<f32>;
