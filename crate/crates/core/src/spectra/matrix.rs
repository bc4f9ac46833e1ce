use std::fmt;
use std::ops::Add;

use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::scalar::Scalar;

/// Weight `α ∈ [0, 1]` of the degree term in `αD + (1 − α)A`.
#[derive(Debug, Clone, Copy, PartialEq, PartialOrd, Default)]
pub struct Alpha<T>(T);

impl<T: Scalar> Alpha<T> {
    pub fn new(value: T) -> Result<Self> {
        if value.is_finite() && value >= T::zero() && value <= T::one() {
            Ok(Self(value))
        } else {
            Err(Error::AlphaOutOfRange(value.as_f64()))
        }
    }

    pub fn half() -> Self {
        Self(T::lit(0.5))
    }

    #[inline]
    pub fn get(self) -> T {
        self.0
    }

    /// `1 − α`, the adjacency weight.
    #[inline]
    pub fn complement_weight(self) -> T {
        T::one() - self.0
    }
}

impl<T: Scalar> fmt::Display for Alpha<T> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.0)
    }
}

/// Dense real symmetric matrix, stored row-major in full.
#[derive(Clone, PartialEq)]
pub struct SymmetricMatrix<T> {
    n: usize,
    data: Vec<T>,
}

impl<T: Scalar> SymmetricMatrix<T> {
    pub fn zeros(n: usize) -> Self {
        Self {
            n,
            data: vec![T::zero(); n * n],
        }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = Self::zeros(n);
        for i in 0..n {
            m.set(i, i, T::one());
        }
        m
    }

    pub fn diagonal(values: &[T]) -> Self {
        let mut m = Self::zeros(values.len());
        for (i, &v) in values.iter().enumerate() {
            m.set(i, i, v);
        }
        m
    }

    /// Builds from rows; the lower triangle is authoritative and mirrored up.
    pub fn from_rows(rows: &[Vec<T>]) -> Result<Self> {
        let n = rows.len();
        let mut m = Self::zeros(n);
        for (i, row) in rows.iter().enumerate() {
            if row.len() != n {
                return Err(Error::DimensionMismatch {
                    expected: n,
                    got: row.len(),
                });
            }
            for (j, &v) in row.iter().enumerate().take(i + 1) {
                if !v.is_finite() {
                    return Err(Error::NonFinite);
                }
                m.set(i, j, v);
            }
        }
        Ok(m)
    }

    #[inline]
    pub fn dim(&self) -> usize {
        self.n
    }

    #[inline]
    pub fn get(&self, i: usize, j: usize) -> T {
        self.data[i * self.n + j]
    }

    /// Sets both `(i, j)` and `(j, i)`.
    #[inline]
    pub fn set(&mut self, i: usize, j: usize, v: T) {
        self.data[i * self.n + j] = v;
        self.data[j * self.n + i] = v;
    }

    pub fn row(&self, i: usize) -> &[T] {
        &self.data[i * self.n..(i + 1) * self.n]
    }

    pub fn trace(&self) -> T {
        (0..self.n).fold(T::zero(), |s, i| s + self.get(i, i))
    }

    pub fn frobenius_norm(&self) -> T {
        self.data.iter().fold(T::zero(), |s, &v| s + v * v).sqrt()
    }

    pub fn mul_vec(&self, x: &[T]) -> Result<Vec<T>> {
        if x.len() != self.n {
            return Err(Error::DimensionMismatch {
                expected: self.n,
                got: x.len(),
            });
        }
        Ok((0..self.n)
            .map(|i| {
                self.row(i)
                    .iter()
                    .zip(x)
                    .fold(T::zero(), |s, (&a, &b)| s + a * b)
            })
            .collect())
    }

    pub fn scaled(&self, c: T) -> Self {
        Self {
            n: self.n,
            data: self.data.iter().map(|&v| v * c).collect(),
        }
    }

    pub fn try_add(&self, other: &Self) -> Result<Self> {
        if self.n != other.n {
            return Err(Error::DimensionMismatch {
                expected: self.n,
                got: other.n,
            });
        }
        Ok(Self {
            n: self.n,
            data: self.data.iter().zip(&other.data).map(|(&a, &b)| a + b).collect(),
        })
    }

    pub fn is_finite(&self) -> bool {
        self.data.iter().all(|v| v.is_finite())
    }
}

impl<T: Scalar> Add for &SymmetricMatrix<T> {
    type Output = SymmetricMatrix<T>;

    /// Panics on dimension mismatch; use [`SymmetricMatrix::try_add`] otherwise.
    fn add(self, rhs: Self) -> SymmetricMatrix<T> {
        self.try_add(rhs).expect("matrix dimensions agree")
    }
}

impl<T: Scalar> fmt::Debug for SymmetricMatrix<T> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let rows: Vec<&[T]> = (0..self.n).map(|i| self.row(i)).collect();
        f.debug_struct("SymmetricMatrix")
            .field("n", &self.n)
            .field("rows", &rows)
            .finish()
    }
}

/// `A_α(G) = αD(G) + (1 − α)A(G)`.
pub fn alpha_matrix<T: Scalar>(g: &Graph, alpha: Alpha<T>) -> SymmetricMatrix<T> {
    let n = g.order();
    let a = alpha.get();
    let off = alpha.complement_weight();
    let mut m = SymmetricMatrix::zeros(n);
    for u in 0..n {
        m.set(u, u, a * T::from_usize_exact(g.degree(u)));
    }
    for (u, v) in g.edges() {
        m.set(u, v, off);
    }
    m
}

/// Adjacency matrix `A(G)`.
pub fn adjacency_matrix<T: Scalar>(g: &Graph) -> SymmetricMatrix<T> {
    alpha_matrix(g, Alpha(T::zero()))
}

/// Signless Laplacian `Q(G) = D(G) + A(G)`, built directly.
pub fn signless_laplacian<T: Scalar>(g: &Graph) -> SymmetricMatrix<T> {
    let n = g.order();
    let mut m = SymmetricMatrix::zeros(n);
    for u in 0..n {
        m.set(u, u, T::from_usize_exact(g.degree(u)));
    }
    for (u, v) in g.edges() {
        m.set(u, v, T::one());
    }
    m
}
