//! The three edge/degree expansions of `XᵀA_α(G)X` and eigenpair residuals.

use super::{Alpha, SymmetricMatrix};
use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::scalar::Scalar;

/// `XᵀA_α(G)X` evaluated three independent ways:
///
/// * `edge_sum`: `Σ_{uv∈E} (α x_u² + 2(1−α) x_u x_v + α x_v²)`
/// * `signless`: `(2α−1) Σ_u d_u x_u² + (1−α) Σ_{uv∈E} (x_u + x_v)²`
/// * `degree`: `α Σ_u d_u x_u² + 2(1−α) Σ_{uv∈E} x_u x_v`
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct QuadraticForms<T> {
    pub edge_sum: T,
    pub signless: T,
    pub degree: T,
}

impl<T: Scalar> QuadraticForms<T> {
    pub fn max_discrepancy(&self) -> T {
        let d1 = (self.edge_sum - self.signless).abs();
        let d2 = (self.edge_sum - self.degree).abs();
        let d3 = (self.signless - self.degree).abs();
        d1.max(d2).max(d3)
    }
}

pub fn quadratic_forms<T: Scalar>(g: &Graph, alpha: Alpha<T>, x: &[T]) -> Result<QuadraticForms<T>> {
    if x.len() != g.order() {
        return Err(Error::DimensionMismatch {
            expected: g.order(),
            got: x.len(),
        });
    }
    let a = alpha.get();
    let b = alpha.complement_weight();
    let two = T::lit(2.0);
    let edges = g.edges();

    let edge_sum = edges.iter().fold(T::zero(), |s, &(u, v)| {
        s + a * x[u] * x[u] + two * b * x[u] * x[v] + a * x[v] * x[v]
    });

    let weighted_sq = (0..g.order()).fold(T::zero(), |s, u| {
        s + T::from_usize_exact(g.degree(u)) * x[u] * x[u]
    });
    let pair_sq = edges
        .iter()
        .fold(T::zero(), |s, &(u, v)| s + (x[u] + x[v]) * (x[u] + x[v]));
    let signless = (two * a - T::one()) * weighted_sq + b * pair_sq;

    let cross = edges.iter().fold(T::zero(), |s, &(u, v)| s + x[u] * x[v]);
    let degree = a * weighted_sq + two * b * cross;

    Ok(QuadraticForms {
        edge_sum,
        signless,
        degree,
    })
}

/// `XᵀMX` by direct matrix-vector product.
pub fn rayleigh_numerator<T: Scalar>(m: &SymmetricMatrix<T>, x: &[T]) -> Result<T> {
    let mx = m.mul_vec(x)?;
    Ok(mx.iter().zip(x).fold(T::zero(), |s, (&a, &b)| s + a * b))
}

/// `‖MX − λX‖₂ / ‖X‖₂`; zero exactly for an eigenpair.
pub fn eigen_residual<T: Scalar>(m: &SymmetricMatrix<T>, lambda: T, x: &[T]) -> Result<T> {
    let mx = m.mul_vec(x)?;
    let norm = x.iter().fold(T::zero(), |s, &v| s + v * v).sqrt();
    if norm == T::zero() {
        return Err(Error::ZeroVector);
    }
    let r = mx
        .iter()
        .zip(x)
        .fold(T::zero(), |s, (&a, &b)| s + (a - lambda * b) * (a - lambda * b))
        .sqrt();
    Ok(r / norm)
}
