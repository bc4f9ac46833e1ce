//! Smallest `α` making `A_α(G)` positive semidefinite.

use super::{adjacency_matrix, alpha_matrix, spectrum, Alpha};
use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::scalar::Scalar;

/// Bisection step cap.
pub const MAX_BISECTION_STEPS: usize = 60;

fn min_eigenvalue<T: Scalar>(g: &Graph, alpha: T) -> Result<T> {
    let s = spectrum(&alpha_matrix(g, Alpha::new(alpha)?), false)?;
    Ok(s.smallest().unwrap_or_else(T::zero))
}

/// `α₀` within `±tol`, by bisection on `α ↦ λ_n(A_α(G))`, which is
/// non-decreasing in `α`. The returned value is the upper bracket, so
/// `A_{α₀}` is positive semidefinite up to rounding.
///
/// Edgeless graphs are rejected: `A_α` is the zero matrix for every `α`, so the
/// threshold degenerates (it would be 0).
pub fn psd_threshold<T: Scalar>(g: &Graph, tol: T) -> Result<Alpha<T>> {
    if g.size() == 0 {
        return Err(Error::Precondition(
            "edgeless graph: A_alpha is zero for every alpha, threshold is degenerate (0)".into(),
        ));
    }
    if !(tol > T::zero()) {
        return Err(Error::Precondition("tolerance must be positive".into()));
    }
    // rounding slack on the PSD test, relative to the matrix scale
    let scale = T::from_usize_exact(g.order().max(1));
    let slack = T::lit(64.0) * T::epsilon() * scale;
    let is_psd = |a: T| -> Result<bool> { Ok(min_eigenvalue(g, a)? >= -slack) };

    let (mut lo, mut hi) = (T::zero(), T::one());
    if is_psd(lo)? {
        return Alpha::new(lo);
    }
    let two = T::lit(2.0);
    for _ in 0..MAX_BISECTION_STEPS {
        if hi - lo <= tol {
            break;
        }
        let mid = (lo + hi) / two;
        if is_psd(mid)? {
            hi = mid;
        } else {
            lo = mid;
        }
    }
    Alpha::new(hi)
}

/// `−λ_min(A) / (d − λ_min(A))` for a `d`-regular graph with at least one
/// edge; `None` otherwise.
pub fn regular_alpha0<T: Scalar>(g: &Graph) -> Result<Option<T>> {
    let Some(d) = g.regular_degree() else {
        return Ok(None);
    };
    if d == 0 {
        return Ok(None);
    }
    let lmin = spectrum(&adjacency_matrix::<T>(g), false)?
        .smallest()
        .expect("non-empty graph");
    let d = T::from_usize_exact(d);
    Ok(Some(-lmin / (d - lmin)))
}
