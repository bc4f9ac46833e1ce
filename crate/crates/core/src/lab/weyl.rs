//! Weyl's inequalities for `C = A + B` with So's equality condition: equality
//! holds exactly when one nonzero vector is an eigenvector for all three
//! eigenvalues involved.

use super::{Lab, Status, Verdict};
use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::spectra::{alpha_matrix, spectrum};
use crate::{Alpha, Spectrum, SymmetricMatrix};

struct Decomposed<'a> {
    m: &'a SymmetricMatrix,
    s: Spectrum,
}

impl<'a> Decomposed<'a> {
    fn new(m: &'a SymmetricMatrix) -> Result<Self> {
        Ok(Self {
            m,
            s: spectrum(m, true)?,
        })
    }

    fn value(&self, k: usize) -> f64 {
        self.s.lambda(k).expect("index validated")
    }

    /// Adds the projector onto the eigenspace cluster of `λ_k` into `p`.
    fn add_projector(&self, k: usize, tol: f64, p: &mut [f64]) {
        let n = self.m.dim();
        let vectors = self.s.eigenvectors().expect("computed with vectors");
        for c in self.s.cluster_indices(self.value(k), tol) {
            let v = &vectors[c];
            for r in 0..n {
                for s in 0..n {
                    p[r * n + s] += v[r] * v[s];
                }
            }
        }
    }

    fn residual(&self, k: usize, x: &[f64]) -> f64 {
        let lam = self.value(k);
        let mx = self.m.mul_vec(x).expect("dimension checked");
        mx.iter()
            .zip(x)
            .map(|(a, b)| (a - lam * b) * (a - lam * b))
            .sum::<f64>()
            .sqrt()
    }
}

struct Triple<'a> {
    a: Decomposed<'a>,
    b: Decomposed<'a>,
    c: Decomposed<'a>,
}

/// Unit vector closest to lying in all three eigenspaces, with its residuals.
fn common_eigenvector(t: &Triple<'_>, ks: [usize; 3], tol: f64) -> Result<(Vec<f64>, [f64; 3])> {
    let n = t.a.m.dim();
    let mut p = vec![0.0; n * n];
    t.a.add_projector(ks[0], tol, &mut p);
    t.b.add_projector(ks[1], tol, &mut p);
    t.c.add_projector(ks[2], tol, &mut p);
    // x in all three eigenspaces iff xᵀ(3I − ΣP)x = 0
    let rows: Vec<Vec<f64>> = (0..n)
        .map(|r| {
            (0..n)
                .map(|s| if r == s { 3.0 } else { 0.0 } - p[r * n + s])
                .collect()
        })
        .collect();
    let gap = spectrum(&SymmetricMatrix::from_rows(&rows)?, true)?;
    let x = gap.eigenvectors().expect("vectors")[n - 1].clone();
    let res = [
        t.a.residual(ks[0], &x),
        t.b.residual(ks[1], &x),
        t.c.residual(ks[2], &x),
    ];
    Ok((x, res))
}

fn rows_of(m: &SymmetricMatrix) -> Vec<Vec<f64>> {
    (0..m.dim()).map(|i| m.row(i).to_vec()).collect()
}

impl Lab {
    fn weyl_one(&self, t: &Triple<'_>, i: usize, j: usize) -> Result<Verdict> {
        let n = t.a.m.dim();
        if i < 1 || j < 1 || i > n || j > n {
            return Err(Error::Precondition(format!(
                "indices must lie in 1..={n}, got i = {i}, j = {j}"
            )));
        }
        let mut v = Verdict::new("lemma2.1", None, None).param("i", i).param("j", j);
        let ci = t.c.value(i);
        v.note("lambda_c", ci);
        let mut status = Status::NotApplicable;
        let mut margin = f64::INFINITY;
        let families: [(&str, bool, usize); 2] = [
            // λ_i(C) ≤ λ_j(A) + λ_{i−j+1}(B)
            ("upper", i >= j, (i + 1).saturating_sub(j)),
            // λ_i(C) ≥ λ_j(A) + λ_{i−j+n}(B)
            ("lower", i <= j, (i + n).saturating_sub(j)),
        ];
        for (name, applies, kb) in families {
            if !applies {
                continue;
            }
            let rhs = t.a.value(j) + t.b.value(kb);
            let m = if name == "upper" { rhs - ci } else { ci - rhs };
            v.note(&format!("{name}_rhs"), rhs);
            v.note(&format!("{name}_b_index"), kb);
            let mut s = self.tol.classify_non_strict(m);
            if s == Status::HoldsWithEquality {
                let (x, res) = common_eigenvector(t, [j, kb, i], self.tol.eigenspace)?;
                let found = res.iter().all(|&r| r <= self.tol.eigenspace);
                v.note(&format!("{name}_common_vector"), x);
                v.note(&format!("{name}_residuals"), res.to_vec());
                v.note(&format!("{name}_common_found"), found);
                if !found {
                    s = Status::Violated;
                }
            }
            status = status.combine(s);
            margin = margin.min(m);
        }
        Ok(v.settle(status, Some(margin)))
    }

    /// Weyl's inequalities at `(i, j)` for `A`, `B` and `A + B`: the upper
    /// family when `i ≥ j`, the lower family when `i ≤ j`, both when `i = j`.
    /// Equality is accepted only with a common eigenvector, which the witness
    /// carries with its three residuals.
    pub fn check_weyl(&self, a: &SymmetricMatrix, b: &SymmetricMatrix, i: usize, j: usize) -> Result<Verdict> {
        let c = a.try_add(b)?;
        let t = Triple {
            a: Decomposed::new(a)?,
            b: Decomposed::new(b)?,
            c: Decomposed::new(&c)?,
        };
        Ok(self
            .weyl_one(&t, i, j)?
            .with("a", rows_of(a))
            .with("b", rows_of(b)))
    }

    /// [`Self::check_weyl`] for every index pair, decomposing each matrix once.
    pub fn check_weyl_all(&self, a: &SymmetricMatrix, b: &SymmetricMatrix) -> Result<Vec<Verdict>> {
        let c = a.try_add(b)?;
        let t = Triple {
            a: Decomposed::new(a)?,
            b: Decomposed::new(b)?,
            c: Decomposed::new(&c)?,
        };
        let n = a.dim();
        let mut out = Vec::with_capacity(n * n);
        for i in 1..=n {
            for j in 1..=n {
                out.push(
                    self.weyl_one(&t, i, j)?
                        .with("a", rows_of(a))
                        .with("b", rows_of(b)),
                );
            }
        }
        Ok(out)
    }

    /// Weyl at every index pair for `A_α(G) + A_α(Gᶜ) = A_α(K_n)`.
    pub fn check_weyl_complement(&self, g: &Graph, alpha: Alpha) -> Result<Vec<Verdict>> {
        let a = alpha_matrix(g, alpha);
        let b = alpha_matrix(&g.complement(), alpha);
        let c = a.try_add(&b)?;
        let t = Triple {
            a: Decomposed::new(&a)?,
            b: Decomposed::new(&b)?,
            c: Decomposed::new(&c)?,
        };
        let n = g.order();
        let mut out = Vec::with_capacity(n * n);
        for i in 1..=n {
            for j in 1..=n {
                let mut v = self.weyl_one(&t, i, j)?;
                let shell = Verdict::new("lemma2.1", Some(g), Some(alpha.get()));
                v.graph = shell.graph;
                v.alpha = shell.alpha;
                out.push(v);
            }
        }
        Ok(out)
    }
}
