use super::SymmetricMatrix;
use crate::numfmt;
use crate::scalar::Scalar;

/// Eigenvalues in descending order `λ_1 ≥ … ≥ λ_n`, optionally with an
/// orthonormal set of eigenvectors aligned with them.
#[derive(Debug, Clone, PartialEq)]
pub struct Spectrum<T> {
    eigenvalues: Vec<T>,
    eigenvectors: Option<Vec<Vec<T>>>,
    tol: T,
}

impl<T: Scalar> Spectrum<T> {
    /// Values are sorted descending; the tolerance is zero (exact formula values).
    pub fn from_values(mut eigenvalues: Vec<T>) -> Self {
        eigenvalues.sort_by(|a, b| b.partial_cmp(a).expect("finite eigenvalues"));
        Self {
            eigenvalues,
            eigenvectors: None,
            tol: T::zero(),
        }
    }

    pub(crate) fn with_vectors(eigenvalues: Vec<T>, vectors: Vec<Vec<T>>) -> Self {
        Self {
            eigenvalues,
            eigenvectors: Some(vectors),
            tol: T::zero(),
        }
    }

    pub(crate) fn set_tolerance(&mut self, tol: T) {
        self.tol = tol;
    }

    pub(crate) fn drop_vectors(&mut self) {
        self.eigenvectors = None;
    }

    pub fn eigenvalues(&self) -> &[T] {
        &self.eigenvalues
    }

    pub fn into_eigenvalues(self) -> Vec<T> {
        self.eigenvalues
    }

    pub fn eigenvectors(&self) -> Option<&[Vec<T>]> {
        self.eigenvectors.as_deref()
    }

    /// Relative residual/orthogonality level certified at construction.
    pub fn tolerance(&self) -> T {
        self.tol
    }

    pub fn len(&self) -> usize {
        self.eigenvalues.len()
    }

    pub fn is_empty(&self) -> bool {
        self.eigenvalues.is_empty()
    }

    /// `λ_k`, 1-based as in the usual convention.
    pub fn lambda(&self, k: usize) -> Option<T> {
        k.checked_sub(1).and_then(|i| self.eigenvalues.get(i).copied())
    }

    pub fn largest(&self) -> Option<T> {
        self.eigenvalues.first().copied()
    }

    pub fn smallest(&self) -> Option<T> {
        self.eigenvalues.last().copied()
    }

    pub fn sum(&self) -> T {
        self.eigenvalues.iter().fold(T::zero(), |s, &v| s + v)
    }

    /// Largest of the eigenpair residuals `‖Av − λv‖` and pairwise dot
    /// products, relative to `max(1, ‖A‖_F)`. Zero when no vectors are held.
    pub fn measured_tolerance(&self, m: &SymmetricMatrix<T>) -> T {
        let Some(vectors) = &self.eigenvectors else {
            return T::zero();
        };
        let scale = T::one().max(m.frobenius_norm());
        let mut worst = T::zero();
        for (lambda, x) in self.eigenvalues.iter().zip(vectors) {
            let ax = m.mul_vec(x).expect("vector length matches");
            let r = ax
                .iter()
                .zip(x)
                .fold(T::zero(), |s, (&a, &b)| s + (a - *lambda * b) * (a - *lambda * b))
                .sqrt();
            worst = worst.max(r / scale);
        }
        for i in 0..vectors.len() {
            for j in (i + 1)..vectors.len() {
                let dot = vectors[i]
                    .iter()
                    .zip(&vectors[j])
                    .fold(T::zero(), |s, (&a, &b)| s + a * b);
                worst = worst.max(dot.abs());
            }
        }
        worst
    }

    /// Checks the structural invariants against the source matrix: descending
    /// order, residual/orthogonality within `tol`, and trace preservation.
    pub fn satisfies_invariants(&self, m: &SymmetricMatrix<T>, tol: T) -> bool {
        let sorted = self.eigenvalues.windows(2).all(|w| w[0] >= w[1]);
        let scale = T::one().max(m.frobenius_norm());
        let trace_ok = (self.sum() - m.trace()).abs() <= tol * scale;
        sorted && trace_ok && self.measured_tolerance(m) <= tol
    }

    /// Number of eigenvalues in the cluster around `value`.
    ///
    /// The cluster starts with every eigenvalue within `tol` of `value` and
    /// grows transitively: any eigenvalue within `tol` of a member joins. An
    /// eigenvalue cluster smeared by rounding is therefore never split.
    pub fn multiplicity_of(&self, value: T, tol: T) -> usize {
        let vals = &self.eigenvalues;
        let seeds: Vec<usize> = (0..vals.len())
            .filter(|&i| (vals[i] - value).abs() <= tol)
            .collect();
        let (Some(&first), Some(&last)) = (seeds.first(), seeds.last()) else {
            return 0;
        };
        // descending order: chaining only ever extends a contiguous run
        let mut lo = first;
        while lo > 0 && vals[lo - 1] - vals[lo] <= tol {
            lo -= 1;
        }
        let mut hi = last;
        while hi + 1 < vals.len() && vals[hi] - vals[hi + 1] <= tol {
            hi += 1;
        }
        hi - lo + 1
    }

    /// Indices (0-based) of the chained cluster around `value`, as in
    /// [`Self::multiplicity_of`].
    pub fn cluster_indices(&self, value: T, tol: T) -> Vec<usize> {
        let vals = &self.eigenvalues;
        let Some(seed) = (0..vals.len()).find(|&i| (vals[i] - value).abs() <= tol) else {
            return Vec::new();
        };
        let mut lo = seed;
        while lo > 0 && vals[lo - 1] - vals[lo] <= tol {
            lo -= 1;
        }
        let mut hi = seed;
        while hi + 1 < vals.len() && vals[hi] - vals[hi + 1] <= tol {
            hi += 1;
        }
        (lo..=hi).collect()
    }

    /// JSON array of the eigenvalues, descending, 17 significant digits.
    pub fn to_json(&self) -> String {
        let items: Vec<String> = self
            .eigenvalues
            .iter()
            .map(|v| numfmt::sig17(v.as_f64()))
            .collect();
        format!("[{}]", items.join(","))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn multiplicity_examples() {
        let s = Spectrum::from_values(vec![2.0, 2.0, 1.5, 1.2929]);
        assert_eq!(s.multiplicity_of(2.0, 1e-9), 2);
        let z = Spectrum::from_values(vec![0.0f64; 3]);
        assert_eq!(z.multiplicity_of(0.0, 1e-9), 3);
        let k2 = Spectrum::from_values(vec![1.0, 0.2]);
        assert_eq!(k2.multiplicity_of(0.5, 1e-9), 0);
    }

    #[test]
    fn multiplicity_chains_smeared_cluster() {
        // 1.0 ± rounding, spread wider than tol end to end
        let s = Spectrum::from_values(vec![1.0 + 1.5e-9, 1.0 + 0.6e-9, 1.0, 1.0 - 0.8e-9, 0.5]);
        assert_eq!(s.multiplicity_of(1.0, 1e-9), 4);
        assert_eq!(s.multiplicity_of(1.0 + 1.5e-9, 1e-9), 4);
        assert_eq!(s.cluster_indices(1.0, 1e-9), vec![0, 1, 2, 3]);
    }

    #[test]
    fn sorted_descending_and_indexed_from_one() {
        let s = Spectrum::from_values(vec![0.4, 2.0, 1.2, 1.2]);
        assert_eq!(s.eigenvalues(), &[2.0, 1.2, 1.2, 0.4]);
        assert_eq!(s.lambda(1), Some(2.0));
        assert_eq!(s.lambda(4), Some(0.4));
        assert_eq!(s.lambda(0), None);
        assert_eq!(s.lambda(5), None);
    }

    #[test]
    fn json_output() {
        let s = Spectrum::from_values(vec![1.0, 0.2]);
        assert_eq!(s.to_json(), "[1,0.20000000000000001]");
        assert_eq!(Spectrum::<f64>::from_values(vec![]).to_json(), "[]");
    }
}
