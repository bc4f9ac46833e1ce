//! Acceptance suite: one line per criterion, non-zero exit on any failure.
//!
//! Run with `cargo test -p aalpha-core --test acceptance`.

use std::process::ExitCode;
use std::time::{Duration, Instant};

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use aalpha::closed_forms::{
    complete_bipartite_min_eigenvalue, complete_graph_spectrum, complete_split_spectrum, cycle_spectrum,
    kn_minus_e_min_eigenvalue, p4_min_eigenvalue, star_min_eigenvalue,
};
use aalpha::enumeration::{count, enumerate, GraphClass};
use aalpha::lab::{run_claim, Claim, Lab, Status, Verdict};
use aalpha::spectra::{alpha_spectrum, psd_threshold, regular_alpha0};
use aalpha::{Alpha, FamilySpec, Graph, SymmetricMatrix};

const EQ: f64 = 1e-9;

type Outcome = Result<String, String>;

fn alphas(values: &[f64]) -> Vec<Alpha> {
    values.iter().map(|&a| Alpha::new(a).unwrap()).collect()
}

fn ensure(cond: bool, msg: impl FnOnce() -> String) -> Result<(), String> {
    if cond {
        Ok(())
    } else {
        Err(msg())
    }
}

fn run_all(lab: &Lab, claim: Claim, orders: impl IntoIterator<Item = usize>, grid: &[Alpha]) -> Result<Vec<Verdict>, String> {
    let mut out = Vec::new();
    for n in orders {
        out.extend(run_claim(lab, claim, n, grid).map_err(|e| format!("{claim} n={n}: {e}"))?);
    }
    Ok(out)
}

fn no_violations(vs: &[Verdict]) -> Result<(), String> {
    match vs.iter().find(|v| v.status.is_violation()) {
        Some(v) => Err(format!("violation: {}", v.to_json())),
        None => Ok(()),
    }
}

fn graph_of(v: &Verdict) -> Graph {
    v.graph.as_ref().unwrap().to_graph().unwrap()
}

fn solver(g: &Graph, a: Alpha) -> Vec<f64> {
    alpha_spectrum(g, a).unwrap().into_eigenvalues()
}

fn max_diff(x: &[f64], y: &[f64]) -> f64 {
    assert_eq!(x.len(), y.len());
    x.iter().zip(y).map(|(a, b)| (a - b).abs()).fold(0.0, f64::max)
}

fn c1_closed_forms() -> Outcome {
    let start = Instant::now();
    let grid = alphas(&[0.5, 0.55, 0.6, 0.75, 0.9, 0.99]);
    let mut worst: f64 = 0.0;
    let mut compared = 0;
    let build = |s: FamilySpec| s.build().unwrap();
    for &a in &grid {
        for s in 3..=10 {
            let f = cycle_spectrum(s, a).unwrap();
            worst = worst.max(max_diff(f.eigenvalues(), &solver(&build(FamilySpec::Cycle(s)), a)));
            compared += 1;
        }
        for n in 1..=10 {
            let f = complete_graph_spectrum(n, a).unwrap();
            worst = worst.max(max_diff(f.eigenvalues(), &solver(&build(FamilySpec::Complete(n)), a)));
            compared += 1;
            for clique in 1..n {
                let f = complete_split_spectrum(clique, n, a).map_err(|e| e.to_string())?;
                let g = build(FamilySpec::CompleteSplit { clique, n });
                worst = worst.max(max_diff(f.eigenvalues(), &solver(&g, a)));
                compared += 1;
            }
        }
        for n in 2..=10 {
            let f = star_min_eigenvalue(n, a).map_err(|e| e.to_string())?.value;
            let s = solver(&build(FamilySpec::Star(n)), a);
            worst = worst.max((f - s[n - 1]).abs());
            compared += 1;
        }
        for x in 1..=9 {
            for y in 1..=(10 - x) {
                let f = complete_bipartite_min_eigenvalue(x, y, a).map_err(|e| e.to_string())?.value;
                let s = solver(&build(FamilySpec::CompleteBipartite { a: x, b: y }), a);
                worst = worst.max((f - s[x + y - 1]).abs());
                compared += 1;
            }
        }
        let f = p4_min_eigenvalue(a).value;
        worst = worst.max((f - solver(&build(FamilySpec::Path(4)), a)[3]).abs());
        compared += 1;
    }
    let elapsed = start.elapsed();
    ensure(worst <= EQ, || format!("max |dlambda| = {worst:e}"))?;
    ensure(elapsed < Duration::from_secs(10), || format!("took {elapsed:?}"))?;
    Ok(format!("{compared} formula/solver comparisons, max |dlambda| = {worst:.1e}"))
}

fn c2_edge_monotonicity(lab: &Lab) -> Outcome {
    let vs = run_all(lab, Claim::EdgeMonotonicity, 1..=6, &alphas(&[0.5, 0.6, 0.75, 0.9]))?;
    no_violations(&vs)?;
    let worst = vs.iter().filter_map(|v| v.margin).fold(f64::INFINITY, f64::min);
    ensure(worst >= -EQ, || format!("min margin {worst:e}"))?;
    Ok(format!("{} (graph, non-edge, alpha) instances, min margin {worst:.1e}", vs.len()))
}

fn c3_kth_extremal(lab: &Lab) -> Outcome {
    let vs = run_all(lab, Claim::KthExtremal, 2..=6, &alphas(&[0.6, 0.75, 0.9]))?;
    let mut both_true = 0;
    for v in &vs {
        let g = graph_of(v);
        let k = v.params["k"] as usize;
        let lk = alpha_spectrum(&g, Alpha::new(v.alpha.unwrap()).unwrap()).unwrap().lambda(k).unwrap();
        let target = v.alpha.unwrap() * g.order() as f64 - 1.0;
        let eigen_side = (lk - target).abs() <= EQ;
        let degree_side = (0..g.order()).filter(|&u| g.degree(u) == g.order() - 1).count() >= k;
        ensure(eigen_side == degree_side, || format!("sides disagree: {}", v.to_json()))?;
        both_true += usize::from(eigen_side);
    }
    no_violations(&vs)?;
    Ok(format!("{} instances agree ({both_true} with both sides true)", vs.len()))
}

fn c4_min_lower_bound(lab: &Lab) -> Outcome {
    let grid = alphas(&[0.6, 0.75, 0.9]);
    let general = run_all(lab, Claim::MinLowerBound, 1..=6, &grid)?;
    let trees = run_all(lab, Claim::TreeBound, 1..=8, &grid)?;
    let mut equalities = 0;
    for v in general.iter().chain(&trees) {
        if v.status == Status::NotApplicable {
            let g = graph_of(v);
            ensure(g.order() < 2 || (0..g.order()).any(|u| g.degree(u) == 0), || {
                format!("unexpected not-applicable: {}", v.to_json())
            })?;
            continue;
        }
        let g = graph_of(v);
        let margin = v.margin.unwrap();
        ensure(margin >= -EQ, || format!("bound fails: {}", v.to_json()))?;
        let has_k2 = g
            .components()
            .iter()
            .any(|c| c.len() == 2);
        ensure((margin.abs() <= EQ) == has_k2, || format!("equality band mismatch: {}", v.to_json()))?;
        equalities += usize::from(has_k2);
    }
    no_violations(&general)?;
    no_violations(&trees)?;
    Ok(format!(
        "{} + {} tree instances, {equalities} equalities all with a K_2 component",
        general.len(),
        trees.len()
    ))
}

fn c5_upper_bounds(lab: &Lab) -> Outcome {
    let grid = alphas(&[0.6, 0.75, 0.9]);
    let upper = run_all(lab, Claim::MinUpperBound, 1..=6, &grid)?;
    let bip = run_all(lab, Claim::BipartiteExtremal, 1..=6, &grid)?;
    no_violations(&upper)?;
    no_violations(&bip)?;
    for v in &upper {
        let Some(m) = v.margin else { continue };
        ensure(m >= -EQ, || format!("upper bound fails: {}", v.to_json()))?;
        let n = v.graph.as_ref().unwrap().n;
        let kn = FamilySpec::Complete(n).build().unwrap().canonical_form().unwrap();
        let is_kn = v.graph.as_ref().unwrap().canonical == Some(kn);
        ensure((m.abs() <= EQ) == is_kn, || format!("equality not exactly at K_n: {}", v.to_json()))?;
    }
    for v in &bip {
        let Some(m) = v.margin else { continue };
        ensure(m >= -EQ, || format!("bipartite bound fails: {}", v.to_json()))?;
        let n = v.graph.as_ref().unwrap().n;
        let balanced = FamilySpec::CompleteBipartite { a: n.div_ceil(2), b: n / 2 }
            .build()
            .unwrap()
            .canonical_form()
            .unwrap();
        let is_balanced = v.graph.as_ref().unwrap().canonical == Some(balanced);
        ensure((m.abs() <= EQ) == is_balanced, || {
            format!("equality not exactly at the balanced complete bipartite graph: {}", v.to_json())
        })?;
    }
    let eq_upper = upper.iter().filter(|v| v.status == Status::HoldsWithEquality).count();
    let eq_bip = bip.iter().filter(|v| v.status == Status::HoldsWithEquality).count();
    // one extremal graph per order 2..=6 and per alpha
    ensure(eq_upper == 5 * grid.len() && eq_bip == 5 * grid.len(), || {
        format!("equality counts {eq_upper}, {eq_bip}")
    })?;
    Ok(format!(
        "{} + {} instances, equality only at K_n and K_(ceil(n/2),floor(n/2))",
        upper.len(),
        bip.len()
    ))
}

fn c6_circumference_matching(lab: &Lab) -> Outcome {
    let grid = alphas(&[0.5, 0.6, 0.75, 0.9]);
    let circ = run_all(lab, Claim::Circumference, 1..=7, &grid)?;
    let matching = run_all(lab, Claim::MatchingBound, 1..=7, &grid)?;
    no_violations(&circ)?;
    no_violations(&matching)?;
    let witnesses = [("cycle:4", 0.6, 2, "I-1"), ("cycle:7", 0.75, 4, "I-2"), ("cycle:4", 0.6, 3, "II")];
    for (spec, a, k, case) in witnesses {
        let g = spec.parse::<FamilySpec>().unwrap().build().unwrap();
        let v = lab
            .check_circumference_bound(&g, Alpha::new(a).unwrap(), k)
            .map_err(|e| e.to_string())?;
        ensure(v.status == Status::HoldsWithEquality && v.margin == Some(0.0), || {
            format!("{spec} k={k}: {}", v.to_json())
        })?;
        ensure(v.witness.get("case") == Some(&case.into()), || format!("{spec} k={k}: wrong case"))?;
    }
    Ok(format!(
        "{} circumference + {} matching instances, 3 equality witnesses reproduced",
        circ.len(),
        matching.len()
    ))
}

fn c7_multiplicities(lab: &Lab) -> Outcome {
    let grid = alphas(&[0.5, 0.6, 0.75, 0.9]);
    let mut total = 0;
    let mut worst_residual: f64 = 0.0;
    for claim in [Claim::CliqueMultiplicity, Claim::IndependentMultiplicity] {
        let vs = run_all(lab, claim, 1..=7, &grid)?;
        no_violations(&vs)?;
        for v in &vs {
            let r = v.witness_real("max_residual").unwrap();
            worst_residual = worst_residual.max(r);
        }
        total += vs.len();
    }
    ensure(worst_residual <= EQ, || format!("eigenvector residual {worst_residual:e}"))?;
    for claim in [Claim::ForestMultiplicity, Claim::IsolatedMultiplicities] {
        let vs = run_all(lab, claim, 1..=7, &grid)?;
        no_violations(&vs)?;
        total += vs.len();
    }
    // complete split graphs: (nα − 1) with multiplicity a − 1, aα with multiplicity n − a − 1
    for &a in &grid {
        for n in 2..=8 {
            for clique in 1..n {
                let g = FamilySpec::CompleteSplit { clique, n }.build().unwrap();
                let s = alpha_spectrum(&g, a).unwrap();
                let top = n as f64 * a.get() - 1.0;
                let low = clique as f64 * a.get();
                let (mt, ml) = (s.multiplicity_of(top, EQ), s.multiplicity_of(low, EQ));
                let ok = if (top - low).abs() <= EQ {
                    mt >= n - 2
                } else {
                    mt >= clique - 1 && ml >= n - clique - 1
                };
                ensure(ok, || format!("CS({clique},{n}) at {a}: multiplicities {mt}, {ml}"))?;
                total += 1;
            }
        }
    }
    Ok(format!("{total} instances, max construction residual {worst_residual:.1e}"))
}

fn random_symmetric(rng: &mut ChaCha8Rng, n: usize) -> SymmetricMatrix {
    let mut rows = vec![vec![0.0; n]; n];
    for i in 0..n {
        for j in 0..=i {
            let x: f64 = rng.gen_range(-1.0..=1.0);
            rows[i][j] = x;
            rows[j][i] = x;
        }
    }
    SymmetricMatrix::from_rows(&rows).unwrap()
}

fn c8_weyl(lab: &Lab) -> Outcome {
    let mut rng = ChaCha8Rng::seed_from_u64(0x5eed_2024);
    let mut checked = 0;
    let mut worst: f64 = f64::INFINITY;
    for n in 2..=6 {
        for _ in 0..100 {
            let a = random_symmetric(&mut rng, n);
            let b = random_symmetric(&mut rng, n);
            let vs = lab.check_weyl_all(&a, &b).map_err(|e| e.to_string())?;
            no_violations(&vs)?;
            for v in &vs {
                worst = worst.min(v.margin.unwrap());
            }
            checked += vs.len();
        }
    }
    ensure(worst >= -EQ, || format!("min margin {worst:e}"))?;
    Ok(format!("{checked} (pair, i, j) checks over 500 random pairs, min margin {worst:.1e}"))
}

fn c9_alpha0() -> Outcome {
    let mut regular = 0;
    let mut bipartite = 0;
    let mut worst: f64 = 0.0;
    for n in 2..=8 {
        for g in enumerate(n, GraphClass::All).unwrap() {
            if g.size() == 0 {
                continue;
            }
            let formula = regular_alpha0::<f64>(&g).unwrap();
            let bip = g.components().iter().any(|c| {
                let mask = c.iter().fold(0u64, |m, &v| m | 1 << v);
                let h = g.induced(mask);
                h.size() > 0 && h.is_bipartite()
            });
            if formula.is_none() && !bip {
                continue;
            }
            let a0 = psd_threshold(&g, 1e-8).unwrap().get();
            if let Some(f) = formula {
                worst = worst.max((a0 - f).abs());
                regular += 1;
            }
            if bip {
                worst = worst.max((a0 - 0.5).abs());
                bipartite += 1;
            }
        }
    }
    ensure(worst <= 1e-6, || format!("max disagreement {worst:e}"))?;
    Ok(format!(
        "{regular} regular and {bipartite} bipartite-component graphs, max |diff| = {worst:.1e}"
    ))
}

fn c10_kn_minus_e() -> Outcome {
    let r = kn_minus_e_min_eigenvalue(4, Alpha::new(0.75).unwrap()).map_err(|e| e.to_string())?;
    ensure(!r.is_consistent(EQ), || "printed formula not flagged".into())?;
    ensure((r.printed_discriminant + 12.0).abs() <= 1e-12, || {
        format!("discriminant {}", r.printed_discriminant)
    })?;
    ensure(r.printed_value.is_none(), || "printed value should be undefined".into())?;
    let expected = (4.0 - 2f64.sqrt()) / 2.0;
    ensure((r.solver_value - expected).abs() <= EQ, || format!("solver {}", r.solver_value))?;
    Ok(format!(
        "printed discriminant {} flagged, solver value {:.12} = (4 - sqrt 2)/2",
        r.printed_discriminant, r.solver_value
    ))
}

fn c11_conjecture_scan(lab: &Lab) -> Outcome {
    let start = Instant::now();
    let grid = alphas(&[0.55, 0.6, 0.75, 0.9]);
    let expected = [2, 6, 21, 112, 853];
    let mut counterexamples = 0;
    let mut lines = 0;
    for (n, &want) in (3..=7).zip(&expected) {
        let report = lab.conjecture_scan(n, &grid).map_err(|e| e.to_string())?;
        for s in &report.summaries {
            ensure(s.graphs_scanned == want, || format!("n={n}: scanned {}", s.graphs_scanned))?;
            ensure(s.star_matches == 1, || format!("n={n}: star matched {} times", s.star_matches))?;
            let parsed: serde_json::Value = serde_json::from_str(&s.to_json()).map_err(|e| e.to_string())?;
            ensure(parsed["graphs_scanned"] == want, || "summary not machine-readable".into())?;
            counterexamples += s.violations;
            lines += 1;
        }
        for v in report.counterexamples() {
            println!("       counterexample: {}", v.to_json());
        }
    }
    let elapsed = start.elapsed();
    ensure(elapsed < Duration::from_secs(30 * 60), || format!("took {elapsed:?}"))?;
    Ok(format!(
        "{} graphs per alpha, {lines} summaries, {counterexamples} counterexamples, {elapsed:.1?}",
        expected.iter().sum::<usize>()
    ))
}

fn c12_counts() -> Outcome {
    let all: Vec<usize> = (1..=7).map(|n| count(n, GraphClass::All).unwrap()).collect();
    let trees: Vec<usize> = (1..=8).map(|n| count(n, GraphClass::Tree).unwrap()).collect();
    ensure(all == [1, 2, 4, 11, 34, 156, 1044], || format!("all graphs {all:?}"))?;
    ensure(trees == [1, 1, 1, 2, 3, 6, 11, 23], || format!("trees {trees:?}"))?;
    Ok(format!("all graphs {all:?}, trees {trees:?}"))
}

fn main() -> ExitCode {
    let lab = Lab::default();
    let criteria: Vec<(&str, &str, Box<dyn Fn() -> Outcome>)> = vec![
        ("C1", "closed forms agree with the solver", Box::new(c1_closed_forms)),
        ("C2", "edge-addition monotonicity, n <= 6", Box::new(move || c2_edge_monotonicity(&lab))),
        ("C3", "lambda_k = alpha*n - 1 iff, n <= 6", Box::new(move || c3_kth_extremal(&lab))),
        ("C4", "lambda_n >= 2*alpha - 1 and tree bound", Box::new(move || c4_min_lower_bound(&lab))),
        ("C5", "least-eigenvalue upper bounds", Box::new(move || c5_upper_bounds(&lab))),
        ("C6", "circumference and matching bounds, n <= 7", Box::new(move || c6_circumference_matching(&lab))),
        ("C7", "multiplicity lower bounds", Box::new(move || c7_multiplicities(&lab))),
        ("C8", "Weyl inequalities on random pairs", Box::new(move || c8_weyl(&lab))),
        ("C9", "alpha_0 bisection vs closed forms, n <= 8", Box::new(c9_alpha0)),
        ("C10", "K_n - e printed formula discrepancy", Box::new(c10_kn_minus_e)),
        ("C11", "star conjecture scan, n = 3..7", Box::new(move || c11_conjecture_scan(&lab))),
        ("C12", "enumeration counts", Box::new(c12_counts)),
    ];
    let mut failed = 0;
    for (id, title, run) in &criteria {
        let start = Instant::now();
        let outcome = run();
        let secs = start.elapsed().as_secs_f64();
        match outcome {
            Ok(detail) => println!("[PASS] {id} {title}: {detail} ({secs:.2}s)"),
            Err(detail) => {
                failed += 1;
                println!("[FAIL] {id} {title}: {detail} ({secs:.2}s)");
            }
        }
    }
    println!("{} of {} criteria passed", criteria.len() - failed, criteria.len());
    if failed == 0 {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
