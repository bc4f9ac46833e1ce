//! Cyclic Jacobi eigensolver for dense symmetric matrices.

use super::{Spectrum, SymmetricMatrix};
use crate::error::{Error, Result};
use crate::scalar::Scalar;

/// Sweep cap. Cyclic Jacobi converges quadratically; a handful of sweeps is
/// typical at n <= 64.
pub const MAX_SWEEPS: usize = 100;

fn off_diagonal_norm<T: Scalar>(a: &[T], n: usize) -> T {
    let mut s = T::zero();
    for i in 0..n {
        for j in 0..n {
            if i != j {
                s = s + a[i * n + j] * a[i * n + j];
            }
        }
    }
    s.sqrt()
}

/// Full eigendecomposition, eigenvalues descending.
///
/// Eigenvectors are always accumulated (they are needed to certify the
/// achieved tolerance) and dropped from the result unless `want_vectors`.
/// Each returned vector is normalised so its first largest-magnitude entry
/// is positive, which makes the output deterministic.
pub fn spectrum<T: Scalar>(m: &SymmetricMatrix<T>, want_vectors: bool) -> Result<Spectrum<T>> {
    if !m.is_finite() {
        return Err(Error::NonFinite);
    }
    let n = m.dim();
    let mut a: Vec<T> = (0..n).flat_map(|i| m.row(i).to_vec()).collect();
    let mut v = vec![T::zero(); n * n];
    for i in 0..n {
        v[i * n + i] = T::one();
    }

    let norm = m.frobenius_norm();
    let target = T::epsilon() * norm;
    let mut converged = false;
    for _ in 0..MAX_SWEEPS {
        if off_diagonal_norm(&a, n) <= target {
            converged = true;
            break;
        }
        for p in 0..n {
            for q in (p + 1)..n {
                let apq = a[p * n + q];
                if apq.abs() < T::min_positive_value() {
                    continue;
                }
                let app = a[p * n + p];
                let aqq = a[q * n + q];
                let theta = (aqq - app) / (apq + apq);
                let t = theta.signum() / (theta.abs() + theta.hypot(T::one()));
                let c = T::one() / t.hypot(T::one());
                let s = t * c;

                a[p * n + p] = app - t * apq;
                a[q * n + q] = aqq + t * apq;
                a[p * n + q] = T::zero();
                a[q * n + p] = T::zero();
                for k in 0..n {
                    if k == p || k == q {
                        continue;
                    }
                    let akp = a[k * n + p];
                    let akq = a[k * n + q];
                    let new_p = c * akp - s * akq;
                    let new_q = s * akp + c * akq;
                    a[k * n + p] = new_p;
                    a[p * n + k] = new_p;
                    a[k * n + q] = new_q;
                    a[q * n + k] = new_q;
                }
                for k in 0..n {
                    let vkp = v[k * n + p];
                    let vkq = v[k * n + q];
                    v[k * n + p] = c * vkp - s * vkq;
                    v[k * n + q] = s * vkp + c * vkq;
                }
            }
        }
    }
    if !converged {
        let off = off_diagonal_norm(&a, n);
        if off > target {
            return Err(Error::NoConvergence {
                sweeps: MAX_SWEEPS,
                off_norm: off.as_f64(),
            });
        }
    }

    let mut idx: Vec<usize> = (0..n).collect();
    idx.sort_by(|&i, &j| {
        a[j * n + j]
            .partial_cmp(&a[i * n + i])
            .expect("finite eigenvalues")
            .then(i.cmp(&j))
    });
    let eigenvalues: Vec<T> = idx.iter().map(|&i| a[i * n + i]).collect();
    let vectors: Vec<Vec<T>> = idx
        .iter()
        .map(|&col| {
            let mut x: Vec<T> = (0..n).map(|k| v[k * n + col]).collect();
            let lead = x.iter().fold(T::zero(), |best, &e| best.max(e.abs()));
            if let Some(first) = x.iter().find(|e| e.abs() == lead) {
                if *first < T::zero() {
                    x.iter_mut().for_each(|e| *e = -*e);
                }
            }
            x
        })
        .collect();

    let mut spec = Spectrum::with_vectors(eigenvalues, vectors);
    let achieved = spec.measured_tolerance(m);
    spec.set_tolerance(achieved);
    if !want_vectors {
        spec.drop_vectors();
    }
    Ok(spec)
}
