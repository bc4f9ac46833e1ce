use std::fs;

use rayon::prelude::*;

use aalpha::closed_forms::{
    complete_bipartite_min_eigenvalue, complete_graph_spectrum, complete_split_spectrum, cycle_spectrum,
    kn_minus_e_min_eigenvalue, p4_min_eigenvalue, star_min_eigenvalue,
};
use aalpha::enumeration::{enumerate, enumerate_cached};
use aalpha::lab::{run_on_graph, Claim, ClaimSummary, Lab, Status, Tolerances, Verdict, ALPHA0_BISECTION_TOL};
use aalpha::spectra::{alpha_spectrum, psd_threshold, regular_alpha0};
use aalpha::{Alpha, Error, FamilySpec, Graph};

use crate::config::{
    check_orders, parse_alphas, parse_claims, parse_format, parse_range, parse_tolerance, pick, pick_path,
    ConfigFile, Format, DEFAULT_ALPHAS, DEFAULT_SCAN_ALPHAS, DEFAULT_TOLERANCE,
};
use crate::output::{Record, Sink};
use crate::{CliError, GraphInput, Outcome, OutputArgs, ScanArgs, VerifyArgs};

/// Absolute agreement required between a closed form and the solver.
const FORMULA_TOL: f64 = 1e-9;

fn default_alphas(values: &[f64]) -> Vec<Alpha> {
    values.iter().map(|&a| Alpha::new(a).expect("defaults lie in [0, 1]")).collect()
}

fn load_graph(input: &GraphInput) -> Result<(String, Graph), CliError> {
    if let Some(spec) = &input.family {
        let fam: FamilySpec = spec.parse().map_err(|e: Error| CliError::Usage(e.to_string()))?;
        let g = fam.build().map_err(|e| CliError::Usage(e.to_string()))?;
        return Ok((fam.to_string(), g));
    }
    let path = input.edges.as_ref().expect("clap requires one input");
    let text = fs::read_to_string(path)
        .map_err(|e| CliError::Usage(format!("cannot read {}: {e}", path.display())))?;
    let g = Graph::parse_edge_list(&text)
        .map_err(|e| CliError::Usage(format!("{}: {e}", path.display())))?;
    Ok((path.display().to_string(), g))
}

fn open_sink(out: &OutputArgs, config: &ConfigFile) -> Result<Sink, CliError> {
    let format = pick(out.format.as_deref(), config, "format", parse_format, || Format::Jsonl)?;
    let path = pick_path(out.output.as_deref(), config, "output");
    Sink::open(path.as_deref(), format)
}

fn load_config(path: Option<&std::path::Path>) -> Result<ConfigFile, CliError> {
    path.map_or_else(|| Ok(ConfigFile::default()), ConfigFile::load)
}

pub fn spectrum(input: &GraphInput, alpha: Option<&str>, out: &OutputArgs) -> Result<Outcome, CliError> {
    let (name, g) = load_graph(input)?;
    let alphas = match alpha {
        Some(s) => parse_alphas(s)?,
        None => default_alphas(&DEFAULT_ALPHAS),
    };
    let mut sink = open_sink(out, &ConfigFile::default())?;
    let mut outcome = Outcome::Clean;
    for a in alphas {
        let s = alpha_spectrum(&g, a)?;
        let trace = s.sum();
        let expected = a.get() * 2.0 * g.size() as f64;
        let trace_ok = (trace - expected).abs() <= FORMULA_TOL * expected.abs().max(1.0);
        if !trace_ok {
            outcome = Outcome::Violations;
        }
        let record = Record::new()
            .field("graph", name.as_str())
            .field("n", g.order())
            .field("m", g.size())
            .field("alpha", a.get())
            .field("eigenvalues", s.eigenvalues().to_vec())
            .field("lambda_1", s.largest())
            .field("lambda_n", s.smallest())
            .field("trace", trace)
            .field("trace_expected", expected)
            .field("trace_check", trace_ok);
        sink.write(&record)?;
    }
    sink.finish()?;
    Ok(outcome)
}

struct FamilyComparison {
    formula: &'static str,
    formula_values: Option<Vec<f64>>,
    solver_values: Vec<f64>,
    discriminant: Option<f64>,
    within_stated_range: Option<bool>,
}

fn compare_family(fam: FamilySpec, g: &Graph, alpha: Alpha) -> Result<FamilyComparison, CliError> {
    let solver = alpha_spectrum(g, alpha)?;
    let full = solver.eigenvalues().to_vec();
    let least = vec![solver.smallest().unwrap_or(0.0)];
    let mut c = FamilyComparison {
        formula: "none",
        formula_values: None,
        solver_values: full.clone(),
        discriminant: None,
        within_stated_range: None,
    };
    let discrepancy = |c: &mut FamilyComparison, e: Error| match e {
        Error::FormulaDiscrepancy { discriminant, .. } => {
            c.discriminant = Some(discriminant);
            Ok(())
        }
        other => Err(CliError::Core(other)),
    };
    match fam {
        FamilySpec::Cycle(s) => {
            c.formula = "cycle spectrum";
            c.formula_values = Some(cycle_spectrum(s, alpha)?.into_eigenvalues());
        }
        FamilySpec::Complete(n) => {
            c.formula = "complete graph spectrum";
            c.formula_values = Some(complete_graph_spectrum(n, alpha)?.into_eigenvalues());
        }
        FamilySpec::CompleteSplit { clique, n } => {
            c.formula = "complete split spectrum";
            match complete_split_spectrum(clique, n, alpha) {
                Ok(s) => c.formula_values = Some(s.into_eigenvalues()),
                Err(e) => discrepancy(&mut c, e)?,
            }
        }
        FamilySpec::Star(n) => {
            c.formula = "star least eigenvalue";
            c.solver_values = least;
            match star_min_eigenvalue(n, alpha) {
                Ok(v) => {
                    c.formula_values = Some(vec![v.value]);
                    c.within_stated_range = Some(v.within_stated_range);
                }
                Err(e) => discrepancy(&mut c, e)?,
            }
        }
        FamilySpec::CompleteBipartite { a, b } => {
            c.formula = "complete bipartite least eigenvalue";
            c.solver_values = least;
            match complete_bipartite_min_eigenvalue(a, b, alpha) {
                Ok(v) => {
                    c.formula_values = Some(vec![v.value]);
                    c.within_stated_range = Some(v.within_stated_range);
                }
                Err(e) => discrepancy(&mut c, e)?,
            }
        }
        FamilySpec::Path(4) => {
            c.formula = "P_4 least eigenvalue";
            c.solver_values = least;
            let v = p4_min_eigenvalue(alpha);
            c.formula_values = Some(vec![v.value]);
            c.within_stated_range = Some(v.within_stated_range);
        }
        FamilySpec::CompleteMinusEdge(n) if n >= 3 => {
            c.formula = "K_n - e least eigenvalue";
            let r = kn_minus_e_min_eigenvalue(n, alpha)?;
            c.solver_values = vec![r.solver_value];
            c.discriminant = Some(r.printed_discriminant);
            c.formula_values = r.printed_value.map(|v| vec![v]);
            c.within_stated_range = Some(r.within_stated_range);
        }
        _ => {}
    }
    Ok(c)
}

pub fn family(spec: &str, alpha: Option<&str>, out: &OutputArgs) -> Result<Outcome, CliError> {
    let fam: FamilySpec = spec.parse().map_err(|e: Error| CliError::Usage(e.to_string()))?;
    let g = fam.build().map_err(|e| CliError::Usage(e.to_string()))?;
    let alphas = match alpha {
        Some(s) => parse_alphas(s)?,
        None => default_alphas(&DEFAULT_ALPHAS),
    };
    let mut sink = open_sink(out, &ConfigFile::default())?;
    let mut outcome = Outcome::Clean;
    for a in alphas {
        let c = compare_family(fam, &g, a)?;
        let max_difference = c.formula_values.as_ref().and_then(|f| {
            (f.len() == c.solver_values.len()).then(|| {
                f.iter()
                    .zip(&c.solver_values)
                    .map(|(x, y)| (x - y).abs())
                    .fold(0.0, f64::max)
            })
        });
        let consistent = match (c.formula, max_difference) {
            ("none", _) => None,
            (_, Some(d)) => Some(d <= FORMULA_TOL),
            (_, None) => Some(false),
        };
        if consistent == Some(false) {
            outcome = Outcome::Violations;
            eprintln!(
                "{fam} at alpha = {}: {} disagrees with the solver",
                a.get(),
                c.formula
            );
        }
        let record = Record::new()
            .field("family", fam.to_string())
            .field("alpha", a.get())
            .field("formula", c.formula)
            .field("within_stated_range", c.within_stated_range)
            .field("discriminant", c.discriminant)
            .field("formula_values", c.formula_values.map_or(crate::output::Cell::Null, Into::into))
            .field("solver_values", c.solver_values)
            .field("max_difference", max_difference)
            .field("consistent", consistent);
        sink.write(&record)?;
    }
    sink.finish()?;
    Ok(outcome)
}

fn verdict_record(v: &Verdict) -> Record {
    let (n, edges, canonical) = match &v.graph {
        Some(g) => (
            Some(g.n),
            g.edges.iter().map(|(a, b)| format!("{a}-{b}")).collect::<Vec<_>>().join(" "),
            g.canonical.map(|c| format!("{}:{c}", c.order())).unwrap_or_default(),
        ),
        None => (None, String::new(), String::new()),
    };
    let params = v
        .params
        .iter()
        .map(|(k, x)| format!("{k}={x}"))
        .collect::<Vec<_>>()
        .join(";");
    Record::new()
        .field("claim_id", v.claim_id.as_str())
        .field("graph_n", n.map_or(crate::output::Cell::Null, Into::into))
        .field("graph_edges", edges)
        .field("canonical", canonical)
        .field("alpha", v.alpha)
        .field("params", params)
        .field("status", v.status.name())
        .field("margin", v.margin)
}

fn write_verdict(sink: &mut Sink, v: &Verdict) -> Result<(), CliError> {
    sink.write_json_or_csv(&v.to_json(), &verdict_record(v))
}

fn graphs_of(n: usize, claim: Claim, cache: Option<&std::path::Path>) -> Result<Vec<Graph>, CliError> {
    Ok(match cache {
        Some(dir) => enumerate_cached(dir, n, claim.class())?,
        None => enumerate(n, claim.class())?,
    })
}

pub fn verify(args: &VerifyArgs) -> Result<Outcome, CliError> {
    let config = load_config(args.config.as_deref())?;
    let claims = pick(args.claims.as_deref(), &config, "claims", parse_claims, || Claim::ALL.to_vec())?;
    let range = pick(args.n.as_deref(), &config, "n", parse_range, || (2, 7))?;
    check_orders(range, 1)?;
    let alphas = pick(args.alpha.as_deref(), &config, "alpha", parse_alphas, || {
        default_alphas(&DEFAULT_ALPHAS)
    })?;
    let tolerance = pick(args.tolerance.as_deref(), &config, "tolerance", parse_tolerance, || {
        DEFAULT_TOLERANCE
    })?;
    let cache = pick_path(args.cache_dir.as_deref(), &config, "cache-dir");
    let defaults = Tolerances::default();
    let lab = Lab {
        tol: Tolerances {
            equality: tolerance,
            tight: defaults.tight.max(tolerance),
            ..defaults
        },
    };
    let mut sink = open_sink(&args.out, &config)?;
    let mut total_violations = 0;
    for claim in claims {
        let mut verdicts = Vec::new();
        for n in range.0..=range.1 {
            let graphs = graphs_of(n, claim, cache.as_deref())?;
            let batches: Vec<Vec<Verdict>> = graphs
                .par_iter()
                .map(|g| run_on_graph(&lab, claim, g, &alphas))
                .collect::<Result<_, _>>()?;
            verdicts.extend(batches.into_iter().flatten());
        }
        for v in &verdicts {
            write_verdict(&mut sink, v)?;
        }
        let summary = ClaimSummary::of(claim.id(), &verdicts);
        total_violations += summary.violated;
        eprintln!("{}", summary.to_json());
    }
    sink.finish()?;
    if total_violations > 0 {
        eprintln!("{total_violations} violation(s) found");
        return Ok(Outcome::Violations);
    }
    Ok(Outcome::Clean)
}

pub fn scan(args: &ScanArgs) -> Result<Outcome, CliError> {
    let config = load_config(args.config.as_deref())?;
    let range = pick(args.n.as_deref(), &config, "n", parse_range, || (3, 7))?;
    check_orders(range, aalpha::lab::SCAN_MIN_ORDER)?;
    let alphas = pick(args.alpha.as_deref(), &config, "alpha", parse_alphas, || {
        default_alphas(&DEFAULT_SCAN_ALPHAS)
    })?;
    if let Some(a) = alphas.iter().find(|a| !(a.get() > 0.5 && a.get() < 1.0)) {
        return Err(CliError::Usage(format!("scan needs 1/2 < alpha < 1, got {a}")));
    }
    let mut sink = open_sink(&args.out, &config)?;
    let csv = matches!(
        pick(args.out.format.as_deref(), &config, "format", parse_format, || Format::Jsonl)?,
        Format::Csv
    );
    let lab = Lab::default();
    let mut counterexamples = 0;
    let mut scanned = 0;
    for n in range.0..=range.1 {
        let report = lab.conjecture_scan(n, &alphas)?;
        for s in &report.summaries {
            scanned += s.graphs_scanned;
            let record = Record::new()
                .field("claim_id", "conj4.3")
                .field("n", s.n)
                .field("alpha", s.alpha)
                .field("graphs_scanned", s.graphs_scanned)
                .field("violations", s.violations)
                .field("tight", s.tight)
                .field("star_matches", s.star_matches)
                .field("star_value", s.star_value)
                .field("min_non_star_value", s.min_non_star.map(|m| m.0))
                .field(
                    "min_non_star_graph",
                    s.min_non_star.map(|m| format!("{}:{}", m.1.order(), m.1)).unwrap_or_default(),
                );
            sink.write_json_or_csv(&s.to_json(), &record)?;
        }
        for v in report.counterexamples() {
            counterexamples += 1;
            eprintln!("COUNTEREXAMPLE {}", v.to_json());
        }
        if !csv {
            let verdicts: Vec<&Verdict> = if args.all_verdicts {
                report.verdicts.iter().collect()
            } else {
                report.counterexamples().collect()
            };
            for v in verdicts {
                write_verdict(&mut sink, v)?;
            }
        }
    }
    sink.finish()?;
    eprintln!("scanned {scanned} graph/alpha pairs, {counterexamples} counterexample(s)");
    Ok(if counterexamples > 0 { Outcome::Violations } else { Outcome::Clean })
}

pub fn alpha0(input: &GraphInput, out: &OutputArgs) -> Result<Outcome, CliError> {
    let (name, g) = load_graph(input)?;
    if g.size() == 0 {
        return Err(CliError::Usage(
            "edgeless graph: A_alpha is the zero matrix for every alpha, so the threshold is degenerate".into(),
        ));
    }
    let tol = Tolerances::default().alpha0;
    let bisection = psd_threshold(&g, ALPHA0_BISECTION_TOL)?.get();
    let regular: Option<f64> = regular_alpha0(&g)?;
    let regular_agrees = regular.map(|f| (bisection - f).abs() <= tol);
    let bipartite = g.has_nontrivial_bipartite_component();
    let bipartite_agrees = bipartite.then(|| (bisection - 0.5).abs() <= tol);
    let status = if regular_agrees == Some(false) || bipartite_agrees == Some(false) {
        Status::Violated
    } else if regular.is_none() && !bipartite {
        Status::NotApplicable
    } else {
        Status::Holds
    };
    let mut sink = open_sink(out, &ConfigFile::default())?;
    let record = Record::new()
        .field("graph", name)
        .field("n", g.order())
        .field("m", g.size())
        .field("alpha0", bisection)
        .field("bisection_tolerance", ALPHA0_BISECTION_TOL)
        .field("regular_formula", regular)
        .field("regular_agrees", regular_agrees)
        .field("bipartite_component", bipartite)
        .field("bipartite_rule", bipartite.then_some(0.5))
        .field("bipartite_rule_agrees", bipartite_agrees)
        .field("status", status.name());
    sink.write(&record)?;
    sink.finish()?;
    Ok(if status.is_violation() { Outcome::Violations } else { Outcome::Clean })
}
