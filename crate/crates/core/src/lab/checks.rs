use super::{Status, Tolerances, Verdict};
use crate::closed_forms::complete_bipartite_min_eigenvalue;
use crate::error::{Error, Result};
use crate::graph::{bit, Graph, CANONICAL_MAX_VERTICES};
use crate::spectra::{alpha_matrix, alpha_spectrum, eigen_residual, psd_threshold, regular_alpha0};
use crate::{Alpha, Spectrum};

/// Bisection tolerance for `α₀`.
pub const ALPHA0_BISECTION_TOL: f64 = 1e-8;

/// Runs claim checks on concrete instances.
///
/// ```
/// use aalpha::lab::{Lab, Status};
/// use aalpha::{Alpha, FamilySpec};
///
/// let c4 = FamilySpec::Cycle(4).build().unwrap();
/// let v = Lab::default()
///     .check_circumference_bound(&c4, Alpha::new(0.6).unwrap(), 2)
///     .unwrap();
/// assert_eq!(v.status, Status::HoldsWithEquality);
/// ```
#[derive(Debug, Clone, Copy, Default)]
pub struct Lab {
    pub tol: Tolerances,
}

fn in_open_upper_half(alpha: Alpha) -> bool {
    alpha.get() > 0.5 && alpha.get() < 1.0
}

fn spectrum_of(g: &Graph, alpha: Alpha) -> Result<Spectrum> {
    alpha_spectrum(g, alpha)
}

fn lambda(s: &Spectrum, k: usize) -> f64 {
    s.lambda(k).expect("index checked against the order")
}

impl Lab {
    pub fn new(tol: Tolerances) -> Self {
        Self { tol }
    }

    /// `λ_i(A_α(G + e)) ≥ λ_i(A_α(G))` for every `i`, stated for `α ≥ 1/2`.
    pub fn check_edge_monotonicity(&self, g: &Graph, e: (usize, usize), alpha: Alpha) -> Result<Verdict> {
        let h = g.add_edge(e.0, e.1)?;
        let before = spectrum_of(g, alpha)?;
        let after = spectrum_of(&h, alpha)?;
        let (worst_index, margin) = before
            .eigenvalues()
            .iter()
            .zip(after.eigenvalues())
            .map(|(b, a)| a - b)
            .enumerate()
            .fold((0, f64::INFINITY), |best, (i, d)| if d < best.1 { (i, d) } else { best });
        let status = if alpha.get() < 0.5 {
            Status::NotApplicable
        } else {
            self.tol.classify_non_strict(margin)
        };
        Ok(Verdict::new("thm1.1", Some(g), Some(alpha.get()))
            .param("u", e.0.min(e.1))
            .param("v", e.0.max(e.1))
            .with("before", before.eigenvalues())
            .with("after", after.eigenvalues())
            .with("worst_index", worst_index + 1)
            .with("inequality_holds", margin >= -self.tol.equality)
            .settle(status, Some(margin)))
    }

    /// `λ_k(A_α(G)) = αn − 1` iff `G` has at least `k` vertices of degree
    /// `n − 1`, for `α > 1/2` and `2 ≤ k ≤ n`.
    pub fn check_kth_extremal(&self, g: &Graph, alpha: Alpha, k: usize) -> Result<Verdict> {
        let n = g.order();
        if k < 2 || k > n {
            return Err(Error::Precondition(format!("k must lie in 2..={n}, got {k}")));
        }
        let v = Verdict::new("thm1.2", Some(g), Some(alpha.get())).param("k", k);
        if alpha.get() <= 0.5 {
            return Ok(v.settle(Status::NotApplicable, None));
        }
        let s = spectrum_of(g, alpha)?;
        let target = alpha.get() * n as f64 - 1.0;
        let lk = lambda(&s, k);
        let gap = (lk - target).abs();
        let eigen_side = gap <= self.tol.equality;
        let full = g.full_degree_count();
        let degree_side = full >= k;
        let status = match (eigen_side, degree_side) {
            (true, true) => Status::HoldsWithEquality,
            (false, false) if gap <= self.tol.tight => Status::NumericallyTight,
            (false, false) => Status::Holds,
            _ => Status::Violated,
        };
        Ok(v.with("lambda_k", lk)
            .with("target", target)
            .with("eigen_side", eigen_side)
            .with("degree_side", degree_side)
            .with("full_degree_vertices", full)
            .settle(status, Some(target - lk)))
    }

    /// Longest-cycle bounds from `λ_k` against `2α`, connected `G`, `α ≥ 1/2`:
    /// `k` even and `λ_k = 2α` gives `c ≤ 2k`; `k` even and `λ_k < 2α` gives
    /// `c ≤ 2k − 1`; `k` odd and `λ_k ≤ 2α` gives `c ≤ 2k − 2`.
    pub fn check_circumference_bound(&self, g: &Graph, alpha: Alpha, k: usize) -> Result<Verdict> {
        if !g.is_connected() {
            return Err(Error::Precondition("graph must be connected".into()));
        }
        let n = g.order();
        if k < 1 || k > n {
            return Err(Error::Precondition(format!("k must lie in 1..={n}, got {k}")));
        }
        let v = Verdict::new("thm1.3", Some(g), Some(alpha.get())).param("k", k);
        if alpha.get() < 0.5 {
            return Ok(v.settle(Status::NotApplicable, None));
        }
        let s = spectrum_of(g, alpha)?;
        let lk = lambda(&s, k);
        let diff = lk - 2.0 * alpha.get();
        let eq = self.tol.equality;
        let (case, bound) = if k % 2 == 0 {
            if diff.abs() <= eq {
                ("I-1", 2 * k)
            } else if diff < -eq {
                ("I-2", 2 * k - 1)
            } else {
                return Ok(v.with("lambda_k", lk).settle(Status::NotApplicable, None));
            }
        } else if diff <= eq {
            ("II", 2 * k - 2)
        } else {
            return Ok(v.with("lambda_k", lk).settle(Status::NotApplicable, None));
        };
        let c = g.circumference();
        let is_cycle = g.regular_degree() == Some(2);
        let stated_equality_case = is_cycle
            && match case {
                "I-1" => n % 4 == 0 && k == n / 2,
                "I-2" => n % 4 == 3 && k == (n + 1) / 2,
                _ => n % 4 == 0 && k == n / 2 + 1,
            };
        let fragile = diff.abs() > eq && diff.abs() <= self.tol.tight;
        let status = if c > bound {
            if fragile {
                Status::NumericallyTight
            } else {
                Status::Violated
            }
        } else if c == bound {
            Status::HoldsWithEquality
        } else {
            Status::Holds
        };
        Ok(v.with("case", case)
            .with("lambda_k", lk)
            .with("two_alpha", 2.0 * alpha.get())
            .with("circumference", c)
            .with("bound", bound)
            .with("stated_equality_case", stated_equality_case)
            .settle(status, Some(bound as f64 - c as f64)))
    }

    /// Connected `G`, `α ≥ 1/2`: `λ_μ > 1` when `n > 2μ`, `λ_{μ−1} > 1` when `n = 2μ`.
    pub fn check_matching_bound(&self, g: &Graph, alpha: Alpha) -> Result<Verdict> {
        if !g.is_connected() {
            return Err(Error::Precondition("graph must be connected".into()));
        }
        let n = g.order();
        let mu = g.matching_number();
        let v = Verdict::new("thm3.3", Some(g), Some(alpha.get())).with("matching_number", mu);
        if alpha.get() < 0.5 {
            return Ok(v.settle(Status::NotApplicable, None));
        }
        let (case, index) = if n > 2 * mu {
            ("I", mu)
        } else {
            ("II", mu.saturating_sub(1))
        };
        // μ = 0 (K_1) and n = 2μ = 2 (K_2) ask for λ_0
        if index == 0 {
            return Ok(v.with("case", case).settle(Status::NotApplicable, None));
        }
        let s = spectrum_of(g, alpha)?;
        let value = lambda(&s, index);
        let margin = value - 1.0;
        Ok(v.param("index", index)
            .with("case", case)
            .with("lambda", value)
            .settle(self.tol.classify_strict(margin), Some(margin)))
    }

    /// `λ_k(A_hi(G)) ≥ λ_k(A_lo(G))` for every `k` when `hi > lo`.
    pub fn check_alpha_monotonicity(&self, g: &Graph, lo: Alpha, hi: Alpha) -> Result<Verdict> {
        if hi.get() <= lo.get() {
            return Err(Error::Precondition(format!(
                "need hi > lo, got lo = {lo}, hi = {hi}"
            )));
        }
        let a = spectrum_of(g, lo)?;
        let b = spectrum_of(g, hi)?;
        let (worst, margin) = a
            .eigenvalues()
            .iter()
            .zip(b.eigenvalues())
            .map(|(x, y)| y - x)
            .enumerate()
            .fold((0, f64::INFINITY), |best, (i, d)| if d < best.1 { (i, d) } else { best });
        let margin = if g.order() == 0 { 0.0 } else { margin };
        Ok(Verdict::new("lemma3.2", Some(g), Some(lo.get()))
            .with("alpha_hi", hi.get())
            .with("low", a.eigenvalues())
            .with("high", b.eigenvalues())
            .with("worst_index", worst + 1)
            .settle(self.tol.classify_non_strict(margin), Some(margin)))
    }

    /// Classifies `λ_n ≥ 2α − 1` with equality exactly when `equality_expected`.
    pub(crate) fn lower_bound_status(&self, margin: f64, equality_expected: bool) -> Status {
        let eq = self.tol.equality;
        if margin < -eq {
            Status::Violated
        } else if margin <= eq {
            if equality_expected {
                Status::HoldsWithEquality
            } else {
                Status::Violated
            }
        } else if equality_expected {
            Status::Violated
        } else if margin <= self.tol.tight {
            Status::NumericallyTight
        } else {
            Status::Holds
        }
    }

    /// `λ_n(A_α(G)) ≥ 2α − 1` for `α > 1/2` and no isolated vertices, with
    /// equality iff `G` has a `K_2` component.
    pub fn check_min_lower_bound(&self, g: &Graph, alpha: Alpha) -> Result<Verdict> {
        let v = Verdict::new("thm1.6", Some(g), Some(alpha.get()));
        if alpha.get() <= 0.5 || g.order() == 0 {
            return Ok(v.settle(Status::NotApplicable, None));
        }
        let s = spectrum_of(g, alpha)?;
        let ln = s.smallest().expect("non-empty");
        let v = v.with("lambda_n", ln).with("bound", 2.0 * alpha.get() - 1.0);
        if g.has_isolated_vertex() {
            return Ok(v.with("isolated_vertices", g.isolated_vertices().len())
                .settle(Status::NotApplicable, None));
        }
        let k2 = g.isolated_edge_count();
        let margin = ln - (2.0 * alpha.get() - 1.0);
        Ok(v.with("k2_components", k2)
            .settle(self.lower_bound_status(margin, k2 > 0), Some(margin)))
    }

    /// Trees with `1/2 < α < 1`: `λ_n ≥ 2α − 1`, equality iff `T = K_2`.
    pub fn check_tree_bound(&self, t: &Graph, alpha: Alpha) -> Result<Verdict> {
        if !t.is_tree() {
            return Err(Error::Precondition("graph must be a tree".into()));
        }
        let v = Verdict::new("lemma4.1", Some(t), Some(alpha.get()));
        // K_1 is a tree with the isolated-vertex eigenvalue 0 < 2α − 1
        if !in_open_upper_half(alpha) || t.order() < 2 {
            return Ok(v.settle(Status::NotApplicable, None));
        }
        let ln = spectrum_of(t, alpha)?.smallest().expect("non-empty");
        let margin = ln - (2.0 * alpha.get() - 1.0);
        let is_k2 = t.order() == 2;
        Ok(v.with("lambda_n", ln)
            .with("bound", 2.0 * alpha.get() - 1.0)
            .with("is_k2", is_k2)
            .settle(self.lower_bound_status(margin, is_k2), Some(margin)))
    }

    /// `λ_n(A_α(G)) ≤ αn − 1` for `1/2 < α < 1`, equality iff `G = K_n`.
    pub fn check_min_upper_bound(&self, g: &Graph, alpha: Alpha) -> Result<Verdict> {
        let v = Verdict::new("thm4.4", Some(g), Some(alpha.get()));
        // for n = 1 the bound αn − 1 < 0 = λ_1(K_1); the claim starts at K_2
        if !in_open_upper_half(alpha) || g.order() < 2 {
            return Ok(v.settle(Status::NotApplicable, None));
        }
        let n = g.order();
        let ln = spectrum_of(g, alpha)?.smallest().expect("non-empty");
        let bound = alpha.get() * n as f64 - 1.0;
        let complete = g.is_complete();
        Ok(v.with("lambda_n", ln)
            .with("bound", bound)
            .with("complete", complete)
            .settle(self.lower_bound_status(bound - ln, complete), Some(bound - ln)))
    }

    /// Bipartite `G`, `1/2 < α < 1`: `λ_n(A_α(G)) ≤ λ_n(A_α(K_{⌈n/2⌉,⌊n/2⌋}))`,
    /// equality iff `G` is that graph.
    pub fn check_bipartite_extremal(&self, g: &Graph, alpha: Alpha) -> Result<Verdict> {
        let Some((x, y)) = g.bipartition() else {
            return Err(Error::Precondition("graph must be bipartite".into()));
        };
        let v = Verdict::new("thm4.5", Some(g), Some(alpha.get()));
        let n = g.order();
        if !in_open_upper_half(alpha) || n < 2 {
            return Ok(v.settle(Status::NotApplicable, None));
        }
        let (a, b) = (n.div_ceil(2), n / 2);
        let target = complete_bipartite_min_eigenvalue(a, b, alpha)?.value;
        let ln = spectrum_of(g, alpha)?.smallest().expect("non-empty");
        let extremal = if n <= CANONICAL_MAX_VERTICES {
            let k = crate::FamilySpec::CompleteBipartite { a, b }.build()?;
            g.canonical_form()? == k.canonical_form()?
        } else {
            g.size() == a * b && x.len().max(y.len()) == a
        };
        Ok(v.with("lambda_n", ln)
            .with("extremal_value", target)
            .with("balanced_complete_bipartite", extremal)
            .settle(self.lower_bound_status(target - ln, extremal), Some(target - ln)))
    }

    /// Twin-class multiplicity: if the `k ≥ 2` vertices of `v1` share degree
    /// `d` and their neighbourhood outside `v1`, then `A_α(G)` has
    /// `(d+1)α − 1` (clique) or `dα` (independent set) with multiplicity at
    /// least `k − 1`, with eigenvectors `e_{v₁} − e_{vᵢ}`.
    pub fn check_multiplicity_construction(&self, g: &Graph, v1: &[usize], alpha: Alpha) -> Result<Verdict> {
        let n = g.order();
        let k = v1.len();
        if k < 2 {
            return Err(Error::Precondition("V1 needs at least two vertices".into()));
        }
        let mut mask = 0u64;
        for &v in v1 {
            if v >= n {
                return Err(Error::VertexOutOfRange { vertex: v, n });
            }
            if mask & bit(v) != 0 {
                return Err(Error::Precondition(format!("vertex {v} repeated in V1")));
            }
            mask |= bit(v);
        }
        let d = g.degree(v1[0]);
        if v1.iter().any(|&v| g.degree(v) != d) {
            return Err(Error::Precondition("vertices of V1 have different degrees".into()));
        }
        let outside = g.neighbors_mask(v1[0]) & !mask;
        if v1.iter().any(|&v| g.neighbors_mask(v) & !mask != outside) {
            return Err(Error::Precondition(
                "vertices of V1 have different neighbourhoods in V2".into(),
            ));
        }
        let inside: Vec<u32> = v1.iter().map(|&v| (g.neighbors_mask(v) & mask).count_ones()).collect();
        let clique = inside.iter().all(|&c| c as usize == k - 1);
        let independent = inside.iter().all(|&c| c == 0);
        if !clique && !independent {
            return Err(Error::Precondition(
                "V1 induces neither a clique nor an independent set".into(),
            ));
        }
        let a = alpha.get();
        let (claim, value) = if clique {
            ("prop2.2-clique", (d as f64 + 1.0) * a - 1.0)
        } else {
            ("prop2.2-independent", d as f64 * a)
        };
        let m = alpha_matrix(g, alpha);
        let s = crate::spectra::spectrum(&m, false)?;
        let mult = s.multiplicity_of(value, self.tol.equality);
        let mut worst_residual: f64 = 0.0;
        for &vi in &v1[1..] {
            let mut x = vec![0.0; n];
            x[v1[0]] = 1.0;
            x[vi] = -1.0;
            worst_residual = worst_residual.max(eigen_residual(&m, value, &x)?);
        }
        let mut status = self.tol.classify_count(mult, k - 1);
        if worst_residual > self.tol.equality {
            status = Status::Violated;
        }
        let mut sorted = v1.to_vec();
        sorted.sort_unstable();
        Ok(Verdict::new(claim, Some(g), Some(a))
            .param("k", k)
            .param("d", d)
            .with("v1", sorted)
            .with("eigenvalue", value)
            .with("multiplicity", mult)
            .with("max_residual", worst_residual)
            .settle(status, Some(mult as f64 - (k - 1) as f64)))
    }

    /// Forests: `α` is an eigenvalue with multiplicity at least `p − q`
    /// (pendant vertices minus their neighbours).
    pub fn check_forest_multiplicity(&self, f: &Graph, alpha: Alpha) -> Result<Verdict> {
        if !f.is_forest() {
            return Err(Error::Precondition("graph must be a forest".into()));
        }
        let (p, q) = f.pendant_counts();
        let s = spectrum_of(f, alpha)?;
        let mult = s.multiplicity_of(alpha.get(), self.tol.equality);
        let required = p.saturating_sub(q);
        let vacuous = p <= q;
        let status = if vacuous {
            Status::Holds
        } else {
            self.tol.classify_count(mult, required)
        };
        Ok(Verdict::new("cor2.4", Some(f), Some(alpha.get()))
            .param("p", p)
            .param("q", q)
            .with("multiplicity", mult)
            .with("vacuous", vacuous)
            .settle(status, Some(mult as f64 - required as f64)))
    }

    /// For `1/2 < α < 1`: `k` isolated vertices give `0` with multiplicity at
    /// least `k`, `l` isolated edges give `2α − 1` with multiplicity at least `l`.
    pub fn check_isolated_multiplicities(&self, g: &Graph, alpha: Alpha) -> Result<Verdict> {
        let v = Verdict::new("cor4.2", Some(g), Some(alpha.get()));
        if !in_open_upper_half(alpha) {
            return Ok(v.settle(Status::NotApplicable, None));
        }
        let k = g.isolated_vertices().len();
        let l = g.isolated_edge_count();
        let s = spectrum_of(g, alpha)?;
        let m0 = s.multiplicity_of(0.0, self.tol.equality);
        let ml = s.multiplicity_of(2.0 * alpha.get() - 1.0, self.tol.equality);
        let status = self
            .tol
            .classify_count(m0, k)
            .combine(self.tol.classify_count(ml, l));
        let margin = (m0 as f64 - k as f64).min(ml as f64 - l as f64);
        Ok(v.param("k", k)
            .param("l", l)
            .with("multiplicity_zero", m0)
            .with("multiplicity_two_alpha_minus_one", ml)
            .with("exact_zero", m0 == k)
            .with("exact_two_alpha_minus_one", ml == l)
            .settle(status, Some(margin)))
    }

    /// `α₀` by bisection against `−λ_min(A)/(d − λ_min(A))` for `d`-regular
    /// `G`, and against `1/2` when `G` has a bipartite component with an edge.
    pub fn check_alpha0_regular(&self, g: &Graph) -> Result<Verdict> {
        let v = Verdict::new("alpha0", Some(g), None);
        if g.size() == 0 {
            return Ok(v.with("reason", "edgeless").settle(Status::NotApplicable, None));
        }
        let formula: Option<f64> = regular_alpha0(g)?;
        let bipartite_rule = g.has_nontrivial_bipartite_component();
        if formula.is_none() && !bipartite_rule {
            return Ok(v.with("regular", false).settle(Status::NotApplicable, None));
        }
        let bisection = psd_threshold(g, ALPHA0_BISECTION_TOL)?.get();
        let mut v = v.with("bisection", bisection).with("regular", formula.is_some());
        let mut worst: f64 = 0.0;
        if let Some(f) = formula {
            let diff = (bisection - f).abs();
            v.note("regular_formula", f);
            v.note("regular_agrees", diff <= self.tol.alpha0);
            worst = worst.max(diff);
        }
        v.note("bipartite_component", bipartite_rule);
        if bipartite_rule {
            let diff = (bisection - 0.5).abs();
            v.note("bipartite_rule_agrees", diff <= self.tol.alpha0);
            worst = worst.max(diff);
        }
        let margin = self.tol.alpha0 - worst;
        let status = if margin < 0.0 { Status::Violated } else { Status::Holds };
        Ok(v.settle(status, Some(margin)))
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::FamilySpec;
    use crate::lab::Datum;

    fn lab() -> Lab {
        Lab::default()
    }

    fn al(a: f64) -> Alpha {
        Alpha::new(a).unwrap()
    }

    fn fam(s: &str) -> Graph {
        s.parse::<FamilySpec>().unwrap().build().unwrap()
    }

    fn graph(n: usize, edges: &[(usize, usize)]) -> Graph {
        Graph::from_edges(n, edges).unwrap()
    }

    fn ok(s: Status) -> bool {
        matches!(s, Status::Holds | Status::HoldsWithEquality)
    }

    #[test]
    fn edge_monotonicity_examples() {
        let p3 = fam("path:3");
        let v = lab().check_edge_monotonicity(&p3, (0, 2), al(0.75)).unwrap();
        assert!(ok(v.status), "{v:?}");
        assert!(v.margin.unwrap() > -1e-9);

        let e2 = Graph::empty(2).unwrap();
        let v = lab().check_edge_monotonicity(&e2, (0, 1), al(0.5)).unwrap();
        assert!(ok(v.status));
        let Some(Datum::Reals(after)) = v.witness.get("after") else { panic!() };
        assert!((after[0] - 1.0).abs() < 1e-12 && after[1].abs() < 1e-12);

        let e5 = Graph::empty(5).unwrap();
        let v = lab().check_edge_monotonicity(&e5, (1, 3), al(1.0)).unwrap();
        let Some(Datum::Reals(after)) = v.witness.get("after") else { panic!() };
        assert_eq!(after.len(), 5);
        assert!((after[0] - 1.0).abs() < 1e-12 && (after[1] - 1.0).abs() < 1e-12);
        assert!(after[2..].iter().all(|x| x.abs() < 1e-12));
        assert!(ok(v.status));
    }

    #[test]
    fn edge_monotonicity_below_half_is_not_applicable_but_reported() {
        let p3 = fam("path:3");
        let v = lab().check_edge_monotonicity(&p3, (0, 2), al(0.2)).unwrap();
        assert_eq!(v.status, Status::NotApplicable);
        assert!(v.witness_bool("inequality_holds").is_some());
        assert!(v.margin.is_some());
        assert!(lab().check_edge_monotonicity(&p3, (0, 1), al(0.75)).is_err());
    }

    #[test]
    fn kth_extremal_examples() {
        let g = fam("complete-minus-edge:4");
        let v = lab().check_kth_extremal(&g, al(0.75), 2).unwrap();
        assert_eq!(v.witness_bool("eigen_side"), Some(true));
        assert_eq!(v.witness_bool("degree_side"), Some(true));
        assert!(ok(v.status));
        let v = lab().check_kth_extremal(&g, al(0.75), 3).unwrap();
        assert_eq!(v.witness_bool("eigen_side"), Some(false));
        assert_eq!(v.witness_bool("degree_side"), Some(false));
        assert_eq!(v.status, Status::Holds);
        assert!((v.witness_real("lambda_k").unwrap() - 1.5).abs() < 1e-9);
        for n in 2..=7 {
            let v = lab().check_kth_extremal(&fam(&format!("complete:{n}")), al(0.8), n).unwrap();
            assert_eq!(v.status, Status::HoldsWithEquality);
        }
        assert!(lab().check_kth_extremal(&g, al(0.75), 1).is_err());
        assert!(lab().check_kth_extremal(&g, al(0.75), 5).is_err());
        assert_eq!(
            lab().check_kth_extremal(&g, al(0.5), 2).unwrap().status,
            Status::NotApplicable
        );
    }

    #[test]
    fn circumference_equality_witnesses() {
        let c4 = fam("cycle:4");
        let v = lab().check_circumference_bound(&c4, al(0.6), 2).unwrap();
        assert_eq!(v.status, Status::HoldsWithEquality);
        assert_eq!(v.witness.get("case"), Some(&Datum::from("I-1")));
        let c7 = fam("cycle:7");
        let v = lab().check_circumference_bound(&c7, al(0.75), 4).unwrap();
        assert_eq!(v.status, Status::HoldsWithEquality);
        assert_eq!(v.witness.get("case"), Some(&Datum::from("I-2")));
        assert_eq!(v.witness_bool("stated_equality_case"), Some(true));
        let v = lab().check_circumference_bound(&c4, al(0.6), 3).unwrap();
        assert_eq!(v.status, Status::HoldsWithEquality);
        assert_eq!(v.witness.get("case"), Some(&Datum::from("II")));
        assert_eq!(v.witness_bool("stated_equality_case"), Some(true));
        // λ_1 > 2α
        let v = lab().check_circumference_bound(&c4, al(0.6), 1).unwrap();
        assert_eq!(v.status, Status::NotApplicable);
        let two_k2 = graph(4, &[(0, 1), (2, 3)]);
        assert!(lab().check_circumference_bound(&two_k2, al(0.6), 1).is_err());
    }

    #[test]
    fn circumference_fails_at_alpha_one() {
        // A_1 = D: λ_1(C_4) = 2 = 2α, k = 1 odd, so c ≤ 0 would be required
        let v = lab().check_circumference_bound(&fam("cycle:4"), al(1.0), 1).unwrap();
        assert_eq!(v.status, Status::Violated);
    }

    #[test]
    fn matching_bound_examples() {
        let v = lab().check_matching_bound(&fam("path:3"), al(0.5)).unwrap();
        assert_eq!(v.status, Status::Holds);
        assert!((v.witness_real("lambda").unwrap() - 1.5).abs() < 1e-9);
        let v = lab().check_matching_bound(&fam("cycle:4"), al(0.5)).unwrap();
        assert_eq!(v.status, Status::Holds);
        assert_eq!(v.params["index"], 1);
        assert!((v.witness_real("lambda").unwrap() - 2.0).abs() < 1e-9);
        let v = lab().check_matching_bound(&fam("cycle:6"), al(0.75)).unwrap();
        assert_eq!(v.params["index"], 2);
        assert!((v.witness_real("lambda").unwrap() - 1.75).abs() < 1e-9);
        assert_eq!(v.status, Status::Holds);
        let v = lab().check_matching_bound(&fam("complete:2"), al(0.75)).unwrap();
        assert_eq!(v.status, Status::NotApplicable);
        assert!(lab().check_matching_bound(&Graph::empty(2).unwrap(), al(0.75)).is_err());
    }

    #[test]
    fn alpha_monotonicity_examples() {
        let v = lab().check_alpha_monotonicity(&fam("complete:2"), al(0.5), al(0.75)).unwrap();
        assert!(ok(v.status));
        let v = lab().check_alpha_monotonicity(&fam("cycle:4"), al(0.6), al(0.9)).unwrap();
        assert!(ok(v.status));
        assert!(lab().check_alpha_monotonicity(&fam("cycle:4"), al(0.6), al(0.6)).is_err());
        assert!(lab().check_alpha_monotonicity(&fam("cycle:4"), al(0.7), al(0.6)).is_err());
    }

    #[test]
    fn min_lower_bound_examples() {
        let k2_p3 = graph(5, &[(0, 1), (2, 3), (3, 4)]);
        let v = lab().check_min_lower_bound(&k2_p3, al(0.75)).unwrap();
        assert_eq!(v.status, Status::HoldsWithEquality);
        assert!((v.witness_real("lambda_n").unwrap() - 0.5).abs() < 1e-9);
        let v = lab().check_min_lower_bound(&fam("star:4"), al(0.75)).unwrap();
        assert_eq!(v.status, Status::Holds);
        assert!((v.witness_real("lambda_n").unwrap() - 0.6340).abs() < 1e-4);
        let v = lab().check_min_lower_bound(&fam("cycle:5"), al(0.75)).unwrap();
        assert_eq!(v.status, Status::Holds);
        let expected = 1.5 + 0.5 * (4.0 * std::f64::consts::PI / 5.0).cos();
        assert!((v.witness_real("lambda_n").unwrap() - expected).abs() < 1e-9);
        let v = lab().check_min_lower_bound(&graph(3, &[(0, 1)]), al(0.75)).unwrap();
        assert_eq!(v.status, Status::NotApplicable);
    }

    #[test]
    fn min_lower_bound_equality_iff_fails_at_alpha_one() {
        // A_1(P_3) = diag(1, 2, 1): λ_3 = 1 = 2α − 1 with no K_2 component
        let v = lab().check_min_lower_bound(&fam("path:3"), al(1.0)).unwrap();
        assert_eq!(v.status, Status::Violated);
        assert_eq!(v.margin, Some(0.0));
    }

    #[test]
    fn tree_bound_examples() {
        let v = lab().check_tree_bound(&fam("complete:2"), al(0.8)).unwrap();
        assert_eq!(v.status, Status::HoldsWithEquality);
        assert!((v.witness_real("lambda_n").unwrap() - 0.6).abs() < 1e-12);
        let v = lab().check_tree_bound(&fam("path:4"), al(0.75)).unwrap();
        assert_eq!(v.status, Status::Holds);
        assert!((v.witness_real("lambda_n").unwrap() - 0.6464).abs() < 1e-4);
        assert!(lab().check_tree_bound(&fam("cycle:4"), al(0.75)).is_err());
        assert_eq!(
            lab().check_tree_bound(&fam("path:4"), al(1.0)).unwrap().status,
            Status::NotApplicable
        );
        assert_eq!(
            lab().check_tree_bound(&Graph::empty(1).unwrap(), al(0.75)).unwrap().status,
            Status::NotApplicable
        );
    }

    #[test]
    fn min_upper_bound_examples() {
        let v = lab().check_min_upper_bound(&fam("complete:5"), al(0.75)).unwrap();
        assert_eq!(v.status, Status::HoldsWithEquality);
        assert!((v.witness_real("lambda_n").unwrap() - 2.75).abs() < 1e-9);
        let v = lab().check_min_upper_bound(&fam("complete-minus-edge:4"), al(0.75)).unwrap();
        assert_eq!(v.status, Status::Holds);
        assert!((v.witness_real("lambda_n").unwrap() - 1.2929).abs() < 1e-4);
        let v = lab().check_min_upper_bound(&Graph::empty(3).unwrap(), al(0.75)).unwrap();
        assert_eq!(v.status, Status::Holds);
        let v = lab().check_min_upper_bound(&Graph::empty(1).unwrap(), al(0.75)).unwrap();
        assert_eq!(v.status, Status::NotApplicable);
    }

    #[test]
    fn bipartite_extremal_examples() {
        let v = lab().check_bipartite_extremal(&fam("bipartite:2,2"), al(0.75)).unwrap();
        assert_eq!(v.status, Status::HoldsWithEquality);
        assert!((v.witness_real("extremal_value").unwrap() - 1.0).abs() < 1e-12);
        let v = lab().check_bipartite_extremal(&fam("path:4"), al(0.75)).unwrap();
        assert_eq!(v.status, Status::Holds);
        let v = lab().check_bipartite_extremal(&fam("star:4"), al(0.75)).unwrap();
        assert_eq!(v.status, Status::Holds);
        assert!(lab().check_bipartite_extremal(&fam("cycle:5"), al(0.75)).is_err());
    }

    #[test]
    fn bipartite_extremal_structural_path_above_canonical_cap() {
        let v = lab().check_bipartite_extremal(&fam("bipartite:5,4"), al(0.7)).unwrap();
        assert_eq!(v.status, Status::HoldsWithEquality);
        let v = lab().check_bipartite_extremal(&fam("star:9"), al(0.7)).unwrap();
        assert_eq!(v.status, Status::Holds);
    }

    #[test]
    fn multiplicity_construction_examples() {
        let star = fam("star:4");
        let v = lab().check_multiplicity_construction(&star, &[1, 2, 3], al(0.75)).unwrap();
        assert_eq!(v.claim_id, "prop2.2-independent");
        assert!(v.witness_int("multiplicity").unwrap() >= 2);
        assert!(ok(v.status));
        assert!(v.witness_real("max_residual").unwrap() <= 1e-9);

        // K_4 − e with the missing edge between 2 and 3
        let g = fam("complete-minus-edge:4");
        let v = lab().check_multiplicity_construction(&g, &[0, 1], al(0.75)).unwrap();
        assert_eq!(v.claim_id, "prop2.2-clique");
        assert!((v.witness_real("eigenvalue").unwrap() - 2.0).abs() < 1e-12);
        assert!(ok(v.status));
        let v = lab().check_multiplicity_construction(&g, &[2, 3], al(0.75)).unwrap();
        assert_eq!(v.claim_id, "prop2.2-independent");
        assert!((v.witness_real("eigenvalue").unwrap() - 1.5).abs() < 1e-12);
        assert!(ok(v.status));
    }

    #[test]
    fn multiplicity_construction_names_the_failed_condition() {
        let p4 = fam("path:4");
        let msg = |r: Result<Verdict>| r.unwrap_err().to_string();
        assert!(msg(lab().check_multiplicity_construction(&p4, &[0, 1], al(0.7))).contains("degrees"));
        assert!(msg(lab().check_multiplicity_construction(&p4, &[1, 2], al(0.7))).contains("neighbourhoods"));
        // V1 induces 2K_2: equal degrees, common outside neighbour 4
        let mixed = graph(5, &[(0, 1), (2, 3), (0, 4), (1, 4), (2, 4), (3, 4)]);
        let r = lab().check_multiplicity_construction(&mixed, &[0, 1, 2, 3], al(0.7));
        assert!(msg(r).contains("neither a clique nor an independent set"));
        assert!(lab().check_multiplicity_construction(&p4, &[1], al(0.7)).is_err());
    }

    #[test]
    fn forest_multiplicity_examples() {
        let v = lab().check_forest_multiplicity(&fam("star:6"), al(0.6)).unwrap();
        assert_eq!(v.params["p"] - v.params["q"], 4);
        assert!(v.witness_int("multiplicity").unwrap() >= 4);
        assert!(ok(v.status));
        let v = lab().check_forest_multiplicity(&fam("path:4"), al(0.75)).unwrap();
        assert_eq!(v.witness_bool("vacuous"), Some(true));
        assert_eq!(v.status, Status::Holds);
        let double_star = graph(6, &[(0, 1), (0, 2), (0, 3), (1, 4), (1, 5)]);
        let v = lab().check_forest_multiplicity(&double_star, al(0.75)).unwrap();
        assert_eq!((v.params["p"], v.params["q"]), (4, 2));
        assert!(v.witness_int("multiplicity").unwrap() >= 2);
        assert!(ok(v.status));
        assert!(lab().check_forest_multiplicity(&fam("cycle:3"), al(0.75)).is_err());
    }

    #[test]
    fn isolated_multiplicities_examples() {
        let g = graph(8, &[(2, 3), (4, 5), (6, 7)]);
        let v = lab().check_isolated_multiplicities(&g, al(0.75)).unwrap();
        assert!(ok(v.status));
        assert!(v.witness_int("multiplicity_zero").unwrap() >= 2);
        assert!(v.witness_int("multiplicity_two_alpha_minus_one").unwrap() >= 3);
        let v = lab().check_isolated_multiplicities(&fam("complete:3"), al(0.75)).unwrap();
        assert_eq!(v.status, Status::Holds);
        let k1_p3 = graph(4, &[(1, 2), (2, 3)]);
        let v = lab().check_isolated_multiplicities(&k1_p3, al(0.75)).unwrap();
        assert!(v.witness_int("multiplicity_zero").unwrap() >= 1);
        assert!(ok(v.status));
    }

    #[test]
    fn alpha0_examples() {
        let v = lab().check_alpha0_regular(&fam("complete:4")).unwrap();
        assert_eq!(v.status, Status::Holds);
        assert!((v.witness_real("regular_formula").unwrap() - 0.25).abs() < 1e-12);
        let v = lab().check_alpha0_regular(&fam("cycle:4")).unwrap();
        assert_eq!(v.status, Status::Holds);
        assert_eq!(v.witness_bool("bipartite_rule_agrees"), Some(true));
        assert_eq!(v.witness_bool("regular_agrees"), Some(true));
        let v = lab().check_alpha0_regular(&fam("cycle:5")).unwrap();
        let lmin = 2.0 * (4.0 * std::f64::consts::PI / 5.0).cos();
        assert!((v.witness_real("regular_formula").unwrap() - (-lmin / (2.0 - lmin))).abs() < 1e-12);
        assert!((v.witness_real("bisection").unwrap() - 0.44721).abs() < 1e-5);
        assert_eq!(v.status, Status::Holds);
        // non-regular without bipartite component
        let paw = graph(4, &[(0, 1), (1, 2), (0, 2), (2, 3)]);
        assert_eq!(lab().check_alpha0_regular(&paw).unwrap().status, Status::NotApplicable);
        // non-regular with a bipartite component: the rule alone fires
        let k3_p3 = graph(6, &[(0, 1), (1, 2), (0, 2), (3, 4), (4, 5)]);
        let v = lab().check_alpha0_regular(&k3_p3).unwrap();
        assert_eq!(v.status, Status::Holds);
        assert_eq!(v.witness_bool("regular"), Some(false));
        assert_eq!(
            lab().check_alpha0_regular(&Graph::empty(3).unwrap()).unwrap().status,
            Status::NotApplicable
        );
    }

    #[test]
    fn checkers_are_deterministic() {
        let g = fam("complete-minus-edge:5");
        let a = lab().check_min_upper_bound(&g, al(0.7)).unwrap();
        let b = lab().check_min_upper_bound(&g, al(0.7)).unwrap();
        assert_eq!(a.to_json(), b.to_json());
    }
}
