use std::fmt;
use std::str::FromStr;

use super::Graph;
use crate::error::{Error, Result};

/// Named graph families with a fixed vertex labelling.
///
/// Labelling conventions: the star centre is vertex 0; the first part of
/// `K_{a,b}` is `0..a`; the clique of the complete split graph is `0..clique`.
/// With these, `Star(n)`, `CompleteBipartite { a: 1, b: n - 1 }` and
/// `CompleteSplit { clique: 1, n }` build identical graphs, and
/// `CompleteMinusEdge(n)` equals `CompleteSplit { clique: n - 2, n }`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum FamilySpec {
    Complete(usize),
    Cycle(usize),
    Path(usize),
    /// `K_{1,n-1}` on `n` vertices.
    Star(usize),
    CompleteBipartite { a: usize, b: usize },
    /// `K_clique ∨ (n - clique) K_1`.
    CompleteSplit { clique: usize, n: usize },
    /// `K_n` minus the edge `(n-2, n-1)`.
    CompleteMinusEdge(usize),
    Empty(usize),
}

impl FamilySpec {
    pub fn order(&self) -> usize {
        match *self {
            Self::Complete(n)
            | Self::Cycle(n)
            | Self::Path(n)
            | Self::Star(n)
            | Self::CompleteMinusEdge(n)
            | Self::Empty(n)
            | Self::CompleteSplit { n, .. } => n,
            Self::CompleteBipartite { a, b } => a + b,
        }
    }

    pub fn validate(&self) -> Result<()> {
        let bad = |msg: String| Err(Error::InfeasibleFamily(msg));
        match *self {
            Self::Complete(0) => bad("complete graph needs n >= 1".into()),
            Self::Cycle(n) if n < 3 => bad(format!("cycle needs n >= 3, got {n}")),
            Self::Path(0) => bad("path needs n >= 1".into()),
            Self::Star(n) if n < 2 => bad(format!("star needs n >= 2, got {n}")),
            Self::CompleteBipartite { a, b } if a == 0 || b == 0 => {
                bad(format!("complete bipartite needs a, b >= 1, got ({a}, {b})"))
            }
            Self::CompleteSplit { clique, n } if clique == 0 || clique >= n => bad(format!(
                "complete split needs 1 <= a <= n - 1, got a = {clique}, n = {n}"
            )),
            Self::CompleteMinusEdge(n) if n < 2 => {
                bad(format!("complete minus edge needs n >= 2, got {n}"))
            }
            _ => Ok(()),
        }
    }

    pub fn build(&self) -> Result<Graph> {
        self.validate()?;
        let n = self.order();
        let mut edges = Vec::new();
        match *self {
            Self::Complete(n) => {
                for u in 0..n {
                    for v in (u + 1)..n {
                        edges.push((u, v));
                    }
                }
            }
            Self::Cycle(n) => edges.extend((0..n).map(|v| (v, (v + 1) % n))),
            Self::Path(n) => edges.extend((1..n).map(|v| (v - 1, v))),
            Self::Star(n) => edges.extend((1..n).map(|v| (0, v))),
            Self::CompleteBipartite { a, b } => {
                for u in 0..a {
                    for v in a..(a + b) {
                        edges.push((u, v));
                    }
                }
            }
            Self::CompleteSplit { clique, n } => {
                for u in 0..clique {
                    for v in (u + 1)..n {
                        edges.push((u, v));
                    }
                }
            }
            Self::CompleteMinusEdge(n) => {
                return Self::Complete(n).build()?.remove_edge(n - 2, n - 1);
            }
            Self::Empty(_) => {}
        }
        Graph::from_edges(n, &edges)
    }
}

impl fmt::Display for FamilySpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match *self {
            Self::Complete(n) => write!(f, "complete:{n}"),
            Self::Cycle(n) => write!(f, "cycle:{n}"),
            Self::Path(n) => write!(f, "path:{n}"),
            Self::Star(n) => write!(f, "star:{n}"),
            Self::CompleteBipartite { a, b } => write!(f, "bipartite:{a},{b}"),
            Self::CompleteSplit { clique, n } => write!(f, "split:{clique},{n}"),
            Self::CompleteMinusEdge(n) => write!(f, "complete-minus-edge:{n}"),
            Self::Empty(n) => write!(f, "empty:{n}"),
        }
    }
}

/// Parses `kind:params`, e.g. `cycle:5`, `bipartite:2,3`, `split:2,6`.
impl FromStr for FamilySpec {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let (kind, params) = s
            .split_once(':')
            .ok_or_else(|| Error::Parse(format!("family spec {s:?}: expected kind:params")))?;
        let nums = params
            .split(',')
            .map(|p| {
                p.trim()
                    .parse::<usize>()
                    .map_err(|e| Error::Parse(format!("family spec {s:?}: {e}")))
            })
            .collect::<Result<Vec<_>>>()?;
        let arity = |k: usize| {
            if nums.len() == k {
                Ok(())
            } else {
                Err(Error::Parse(format!(
                    "family {kind:?} takes {k} parameter(s), got {}",
                    nums.len()
                )))
            }
        };
        let spec = match kind.trim().to_ascii_lowercase().as_str() {
            "complete" | "k" => {
                arity(1)?;
                Self::Complete(nums[0])
            }
            "cycle" | "c" => {
                arity(1)?;
                Self::Cycle(nums[0])
            }
            "path" | "p" => {
                arity(1)?;
                Self::Path(nums[0])
            }
            "star" => {
                arity(1)?;
                Self::Star(nums[0])
            }
            "bipartite" | "complete-bipartite" => {
                arity(2)?;
                Self::CompleteBipartite { a: nums[0], b: nums[1] }
            }
            "split" | "complete-split" => {
                arity(2)?;
                Self::CompleteSplit { clique: nums[0], n: nums[1] }
            }
            "complete-minus-edge" | "kminus" => {
                arity(1)?;
                Self::CompleteMinusEdge(nums[0])
            }
            "empty" => {
                arity(1)?;
                Self::Empty(nums[0])
            }
            other => return Err(Error::Parse(format!("unknown family {other:?}"))),
        };
        spec.validate()?;
        Ok(spec)
    }
}
