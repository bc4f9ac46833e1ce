//! Closed-form `A_α` eigenvalues of named families.
//!
//! Every formula here is cross-checked against the dense solver in the tests.
//! One printed expression, for the least eigenvalue of `K_n − e`, does not
//! agree with the solver for `n ≥ 4`; [`kn_minus_e_min_eigenvalue`] therefore
//! always returns the solver value alongside it and reports the discrepancy
//! as data.

use crate::error::{Error, Result};
use crate::graph::FamilySpec;
use crate::scalar::Scalar;
use crate::spectra::{alpha_spectrum, Alpha, Spectrum};

/// A scalar formula value plus whether `α` lies in the open interval
/// `(1/2, 1)` the formula was stated for.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct FormulaValue<T> {
    pub value: T,
    pub within_stated_range: bool,
}

fn in_open_upper_half<T: Scalar>(alpha: Alpha<T>) -> bool {
    alpha.get() > T::lit(0.5) && alpha.get() < T::one()
}

fn solver_values<T: Scalar>(spec: FamilySpec, alpha: Alpha<T>) -> Vec<f64> {
    spec.build()
        .and_then(|g| alpha_spectrum(&g, alpha))
        .map(|s| s.eigenvalues().iter().map(|v| v.as_f64()).collect())
        .unwrap_or_default()
}

/// `C_s`: `λ_i = 2α + 2(1−α)cos(iπ/s)` for even `i` and
/// `2α + 2(1−α)cos((i−1)π/s)` for odd `i`, `i = 1..s`.
pub fn cycle_spectrum<T: Scalar>(s: usize, alpha: Alpha<T>) -> Result<Spectrum<T>> {
    if s < 3 {
        return Err(Error::InfeasibleFamily(format!("cycle needs s >= 3, got {s}")));
    }
    let two = T::lit(2.0);
    let sf = T::from_usize_exact(s);
    let values = (1..=s)
        .map(|i| {
            let j = if i % 2 == 0 { i } else { i - 1 };
            let angle = T::from_usize_exact(j) * T::PI() / sf;
            two * alpha.get() + two * alpha.complement_weight() * angle.cos()
        })
        .collect();
    Ok(Spectrum::from_values(values))
}

/// `K_n`: `n − 1` once and `αn − 1` with multiplicity `n − 1`.
pub fn complete_graph_spectrum<T: Scalar>(n: usize, alpha: Alpha<T>) -> Result<Spectrum<T>> {
    if n == 0 {
        return Err(Error::InfeasibleFamily("complete graph needs n >= 1".into()));
    }
    let nf = T::from_usize_exact(n);
    let mut values = vec![nf - T::one()];
    values.extend(std::iter::repeat(alpha.get() * nf - T::one()).take(n - 1));
    Ok(Spectrum::from_values(values))
}

/// Discriminant of the two-class quotient of `CS_{a,n−a}`:
/// `(nα+a−1)² − 4a²α + 4aα + 4a(n−a) − 8a(n−a)α`.
pub fn complete_split_discriminant<T: Scalar>(a: usize, n: usize, alpha: Alpha<T>) -> T {
    let (af, nf, al) = (T::from_usize_exact(a), T::from_usize_exact(n), alpha.get());
    let four = T::lit(4.0);
    let trace = nf * al + af - T::one();
    let cross = af * (nf - af);
    trace * trace - four * af * af * al + four * af * al + four * cross - T::lit(8.0) * cross * al
}

/// `CS_{a,n−a} = K_a ∨ (n−a)K_1`: `nα − 1` with multiplicity `a − 1`, `aα` with
/// multiplicity `n − a − 1`, and the two quotient roots
/// `(nα + a − 1 ± √disc) / 2`.
pub fn complete_split_spectrum<T: Scalar>(a: usize, n: usize, alpha: Alpha<T>) -> Result<Spectrum<T>> {
    let spec = FamilySpec::CompleteSplit { clique: a, n };
    spec.validate()?;
    let disc = complete_split_discriminant(a, n, alpha);
    if disc < T::zero() {
        return Err(Error::FormulaDiscrepancy {
            formula: "complete split spectrum",
            inputs: format!("a = {a}, n = {n}, alpha = {alpha}"),
            discriminant: disc.as_f64(),
            solver: solver_values(spec, alpha),
        });
    }
    let (af, nf, al) = (T::from_usize_exact(a), T::from_usize_exact(n), alpha.get());
    let two = T::lit(2.0);
    let trace = nf * al + af - T::one();
    let root = disc.sqrt();
    let mut values = vec![(trace + root) / two, (trace - root) / two];
    values.extend(std::iter::repeat(nf * al - T::one()).take(a - 1));
    values.extend(std::iter::repeat(af * al).take(n - a - 1));
    Ok(Spectrum::from_values(values))
}

/// `λ_n(A_α(K_{1,n−1})) = ½(αn − √(α²n² + 4(n−1)(1−2α)))`.
pub fn star_min_eigenvalue<T: Scalar>(n: usize, alpha: Alpha<T>) -> Result<FormulaValue<T>> {
    if n < 2 {
        return Err(Error::InfeasibleFamily(format!("star needs n >= 2, got {n}")));
    }
    let (nf, al) = (T::from_usize_exact(n), alpha.get());
    let disc = al * al * nf * nf + T::lit(4.0) * (nf - T::one()) * (T::one() - T::lit(2.0) * al);
    if disc < T::zero() {
        return Err(Error::FormulaDiscrepancy {
            formula: "star least eigenvalue",
            inputs: format!("n = {n}, alpha = {alpha}"),
            discriminant: disc.as_f64(),
            solver: solver_values(FamilySpec::Star(n), alpha),
        });
    }
    Ok(FormulaValue {
        value: (al * nf - disc.sqrt()) / T::lit(2.0),
        within_stated_range: in_open_upper_half(alpha),
    })
}

/// `λ_n(A_α(K_{a,b})) = ½(αn − √(α²n² + 4ab(1−2α)))`, `n = a + b`.
pub fn complete_bipartite_min_eigenvalue<T: Scalar>(
    a: usize,
    b: usize,
    alpha: Alpha<T>,
) -> Result<FormulaValue<T>> {
    let spec = FamilySpec::CompleteBipartite { a, b };
    spec.validate()?;
    let (nf, al) = (T::from_usize_exact(a + b), alpha.get());
    let ab = T::from_usize_exact(a * b);
    let disc = al * al * nf * nf + T::lit(4.0) * ab * (T::one() - T::lit(2.0) * al);
    if disc < T::zero() {
        return Err(Error::FormulaDiscrepancy {
            formula: "complete bipartite least eigenvalue",
            inputs: format!("a = {a}, b = {b}, alpha = {alpha}"),
            discriminant: disc.as_f64(),
            solver: solver_values(spec, alpha),
        });
    }
    Ok(FormulaValue {
        value: (al * nf - disc.sqrt()) / T::lit(2.0),
        within_stated_range: in_open_upper_half(alpha),
    })
}

/// `λ_4(A_α(P_4)) = min{α + ½ − ½√(4α² − 8α + 5), 2α − ½ − ½√(8α² − 12α + 5)}`.
pub fn p4_min_eigenvalue<T: Scalar>(alpha: Alpha<T>) -> FormulaValue<T> {
    let al = alpha.get();
    let half = T::lit(0.5);
    let d1 = T::lit(4.0) * al * al - T::lit(8.0) * al + T::lit(5.0);
    let d2 = T::lit(8.0) * al * al - T::lit(12.0) * al + T::lit(5.0);
    // both quadratics have negative discriminant in α, hence are positive everywhere
    debug_assert!(d1 > T::zero() && d2 > T::zero());
    let first = al + half - half * d1.sqrt();
    let second = T::lit(2.0) * al - half - half * d2.sqrt();
    FormulaValue {
        value: first.min(second),
        within_stated_range: in_open_upper_half(alpha),
    }
}

/// Printed least-eigenvalue expression for `K_n − e` next to the solver value.
#[derive(Debug, Clone, PartialEq)]
pub struct KnMinusEdgeReport<T> {
    pub n: usize,
    pub alpha: Alpha<T>,
    /// `(nα+n−3)² − 4(n−2)²(α+αn−2)`.
    pub printed_discriminant: T,
    /// `(nα+n−3 − √disc)/2`, absent when the discriminant is negative.
    pub printed_value: Option<T>,
    /// `λ_n(A_α(K_n − e))` from the dense solver. Authoritative.
    pub solver_value: T,
    /// `printed_value − solver_value` when the former exists.
    pub difference: Option<T>,
    pub within_stated_range: bool,
}

impl<T: Scalar> KnMinusEdgeReport<T> {
    /// The printed expression is usable and matches the solver within `tol`.
    pub fn is_consistent(&self, tol: T) -> bool {
        self.difference.is_some_and(|d| d.abs() <= tol)
    }
}

pub fn kn_minus_e_min_eigenvalue<T: Scalar>(n: usize, alpha: Alpha<T>) -> Result<KnMinusEdgeReport<T>> {
    if n < 3 {
        return Err(Error::InfeasibleFamily(format!("K_n - e needs n >= 3, got {n}")));
    }
    let (nf, al) = (T::from_usize_exact(n), alpha.get());
    let two = T::lit(2.0);
    let trace = nf * al + nf - T::lit(3.0);
    let m = nf - two;
    let disc = trace * trace - T::lit(4.0) * m * m * (al + al * nf - two);
    let printed_value = (disc >= T::zero()).then(|| (trace - disc.sqrt()) / two);

    let g = FamilySpec::CompleteMinusEdge(n).build()?;
    let solver_value = alpha_spectrum(&g, alpha)?
        .smallest()
        .expect("n >= 3 eigenvalues");
    Ok(KnMinusEdgeReport {
        n,
        alpha,
        printed_discriminant: disc,
        printed_value,
        solver_value,
        difference: printed_value.map(|p| p - solver_value),
        within_stated_range: in_open_upper_half(alpha),
    })
}
