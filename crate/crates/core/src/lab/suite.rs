//! Claim identifiers and exhaustive runs over enumerated graphs.

use std::fmt;
use std::str::FromStr;

use rayon::prelude::*;
use serde::ser::SerializeMap;
use serde::{Serialize, Serializer};

use super::{Lab, Status, Verdict};
use crate::enumeration::{enumerate, GraphClass};
use crate::error::{Error, Result};
use crate::graph::{Graph, TwinClass};
use crate::Alpha;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Claim {
    EdgeMonotonicity,
    KthExtremal,
    Circumference,
    MinLowerBound,
    Weyl,
    CliqueMultiplicity,
    IndependentMultiplicity,
    ForestMultiplicity,
    MatchingBound,
    AlphaMonotonicity,
    TreeBound,
    IsolatedMultiplicities,
    MinUpperBound,
    BipartiteExtremal,
    Alpha0,
    StarConjecture,
}

impl Claim {
    pub const ALL: [Claim; 16] = [
        Self::EdgeMonotonicity,
        Self::KthExtremal,
        Self::Circumference,
        Self::MinLowerBound,
        Self::Weyl,
        Self::CliqueMultiplicity,
        Self::IndependentMultiplicity,
        Self::ForestMultiplicity,
        Self::MatchingBound,
        Self::AlphaMonotonicity,
        Self::TreeBound,
        Self::IsolatedMultiplicities,
        Self::MinUpperBound,
        Self::BipartiteExtremal,
        Self::Alpha0,
        Self::StarConjecture,
    ];

    pub fn id(self) -> &'static str {
        match self {
            Self::EdgeMonotonicity => "thm1.1",
            Self::KthExtremal => "thm1.2",
            Self::Circumference => "thm1.3",
            Self::MinLowerBound => "thm1.6",
            Self::Weyl => "lemma2.1",
            Self::CliqueMultiplicity => "prop2.2-clique",
            Self::IndependentMultiplicity => "prop2.2-independent",
            Self::ForestMultiplicity => "cor2.4",
            Self::MatchingBound => "thm3.3",
            Self::AlphaMonotonicity => "lemma3.2",
            Self::TreeBound => "lemma4.1",
            Self::IsolatedMultiplicities => "cor4.2",
            Self::MinUpperBound => "thm4.4",
            Self::BipartiteExtremal => "thm4.5",
            Self::Alpha0 => "alpha0",
            Self::StarConjecture => "conj4.3",
        }
    }

    /// Graph class each claim is run over.
    pub fn class(self) -> GraphClass {
        match self {
            Self::Circumference | Self::MatchingBound | Self::StarConjecture => GraphClass::Connected,
            Self::MinLowerBound => GraphClass::NoIsolatedVertex,
            Self::ForestMultiplicity => GraphClass::Forest,
            Self::TreeBound => GraphClass::Tree,
            Self::BipartiteExtremal => GraphClass::Bipartite,
            _ => GraphClass::All,
        }
    }

    pub fn summary(self) -> &'static str {
        match self {
            Self::EdgeMonotonicity => "adding an edge never lowers any eigenvalue (alpha >= 1/2)",
            Self::KthExtremal => "lambda_k = alpha*n - 1 iff k vertices of degree n - 1 (alpha > 1/2)",
            Self::Circumference => "circumference bounds from lambda_k against 2*alpha",
            Self::MinLowerBound => "lambda_n >= 2*alpha - 1 without isolated vertices, equality iff a K_2 component",
            Self::Weyl => "Weyl inequalities for A_alpha(G) + A_alpha(complement) with common-eigenvector equality",
            Self::CliqueMultiplicity => "(d+1)*alpha - 1 with multiplicity k - 1 on twin cliques",
            Self::IndependentMultiplicity => "d*alpha with multiplicity k - 1 on twin independent sets",
            Self::ForestMultiplicity => "alpha with multiplicity at least p - q in forests",
            Self::MatchingBound => "lambda_mu > 1 (n > 2mu) or lambda_(mu-1) > 1 (n = 2mu)",
            Self::AlphaMonotonicity => "every lambda_k is non-decreasing in alpha",
            Self::TreeBound => "lambda_n >= 2*alpha - 1 for trees, equality iff K_2",
            Self::IsolatedMultiplicities => "0 and 2*alpha - 1 multiplicities from isolated vertices and edges",
            Self::MinUpperBound => "lambda_n <= alpha*n - 1, equality iff complete",
            Self::BipartiteExtremal => "bipartite lambda_n is maximised by the balanced complete bipartite graph",
            Self::Alpha0 => "PSD threshold: regular formula and bipartite-component rule",
            Self::StarConjecture => "the star uniquely minimises lambda_n among connected graphs",
        }
    }
}

impl fmt::Display for Claim {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.id())
    }
}

impl FromStr for Claim {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        Self::ALL
            .into_iter()
            .find(|c| c.id() == s)
            .ok_or_else(|| Error::Parse(format!("unknown claim {s:?}")))
    }
}

/// Status counts for a batch of verdicts.
#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct ClaimSummary {
    pub claim_id: String,
    pub checked: usize,
    pub holds: usize,
    pub equality: usize,
    pub tight: usize,
    pub not_applicable: usize,
    pub violated: usize,
}

impl ClaimSummary {
    pub fn of(claim_id: &str, verdicts: &[Verdict]) -> Self {
        let mut s = Self {
            claim_id: claim_id.to_owned(),
            ..Self::default()
        };
        for v in verdicts {
            s.checked += 1;
            match v.status {
                Status::Holds => s.holds += 1,
                Status::HoldsWithEquality => s.equality += 1,
                Status::NumericallyTight => s.tight += 1,
                Status::NotApplicable => s.not_applicable += 1,
                Status::Violated => s.violated += 1,
            }
        }
        s
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string(self).expect("summaries always serialise")
    }
}

impl Serialize for ClaimSummary {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        let mut map = s.serialize_map(Some(7))?;
        map.serialize_entry("claim_id", &self.claim_id)?;
        map.serialize_entry("checked", &self.checked)?;
        map.serialize_entry("holds", &self.holds)?;
        map.serialize_entry("equality", &self.equality)?;
        map.serialize_entry("tight", &self.tight)?;
        map.serialize_entry("not-applicable", &self.not_applicable)?;
        map.serialize_entry("violated", &self.violated)?;
        map.end()
    }
}

fn twin_sets(g: &Graph, clique: bool) -> Vec<Vec<usize>> {
    g.twin_classes()
        .into_iter()
        .filter_map(|c| match (c, clique) {
            (TwinClass::Adjacent(v), true) | (TwinClass::NonAdjacent(v), false) => Some(v),
            _ => None,
        })
        .collect()
}

/// All verdicts of `claim` on one graph across the `α` grid.
pub fn run_on_graph(lab: &Lab, claim: Claim, g: &Graph, alphas: &[Alpha]) -> Result<Vec<Verdict>> {
    let n = g.order();
    let mut out = Vec::new();
    match claim {
        Claim::Alpha0 => out.push(lab.check_alpha0_regular(g)?),
        Claim::AlphaMonotonicity => {
            let mut grid: Vec<f64> = alphas.iter().map(|a| a.get()).chain([0.0, 1.0]).collect();
            grid.sort_by(f64::total_cmp);
            grid.dedup();
            for (i, &lo) in grid.iter().enumerate() {
                for &hi in &grid[i + 1..] {
                    out.push(lab.check_alpha_monotonicity(g, Alpha::new(lo)?, Alpha::new(hi)?)?);
                }
            }
        }
        _ => {
            for &alpha in alphas {
                match claim {
                    Claim::EdgeMonotonicity => {
                        for e in g.non_edges() {
                            out.push(lab.check_edge_monotonicity(g, e, alpha)?);
                        }
                    }
                    Claim::KthExtremal => {
                        for k in 2..=n {
                            out.push(lab.check_kth_extremal(g, alpha, k)?);
                        }
                    }
                    Claim::Circumference => {
                        for k in 1..=n {
                            out.push(lab.check_circumference_bound(g, alpha, k)?);
                        }
                    }
                    Claim::MinLowerBound => out.push(lab.check_min_lower_bound(g, alpha)?),
                    Claim::Weyl => out.extend(lab.check_weyl_complement(g, alpha)?),
                    Claim::CliqueMultiplicity | Claim::IndependentMultiplicity => {
                        for set in twin_sets(g, claim == Claim::CliqueMultiplicity) {
                            out.push(lab.check_multiplicity_construction(g, &set, alpha)?);
                        }
                    }
                    Claim::ForestMultiplicity => out.push(lab.check_forest_multiplicity(g, alpha)?),
                    Claim::MatchingBound => out.push(lab.check_matching_bound(g, alpha)?),
                    Claim::TreeBound => out.push(lab.check_tree_bound(g, alpha)?),
                    Claim::IsolatedMultiplicities => out.push(lab.check_isolated_multiplicities(g, alpha)?),
                    Claim::MinUpperBound => out.push(lab.check_min_upper_bound(g, alpha)?),
                    Claim::BipartiteExtremal => out.push(lab.check_bipartite_extremal(g, alpha)?),
                    Claim::StarConjecture => out.push(lab.check_least_eigenvalue_conjecture(g, alpha)?),
                    Claim::Alpha0 | Claim::AlphaMonotonicity => unreachable!("handled above"),
                }
            }
        }
    }
    Ok(out)
}

/// Runs `claim` over every graph of order `n` in the claim's class. Verdicts
/// come out in canonical graph order, then `α` order, then parameter order.
pub fn run_claim(lab: &Lab, claim: Claim, n: usize, alphas: &[Alpha]) -> Result<Vec<Verdict>> {
    let graphs = enumerate(n, claim.class())?;
    let batches: Vec<Vec<Verdict>> = graphs
        .par_iter()
        .map(|g| run_on_graph(lab, claim, g, alphas))
        .collect::<Result<_>>()?;
    Ok(batches.into_iter().flatten().collect())
}
