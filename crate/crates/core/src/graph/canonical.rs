use std::fmt;
use std::str::FromStr;

use super::{bit, Graph};
use crate::error::{Error, Result};

/// Largest order accepted by [`Graph::canonical_form`].
pub const CANONICAL_MAX_VERTICES: usize = 8;

/// Isomorphism-invariant encoding of a graph on at most 8 vertices.
///
/// The encoding lists the upper triangle of the adjacency matrix column by
/// column, `(0,1), (0,2), (1,2), (0,3), (1,3), (2,3), …`, and is the
/// lexicographically smallest such bitstring over all vertex orderings. Two
/// graphs have equal canonical forms iff they are isomorphic. `Ord` agrees
/// with lexicographic order of the bitstrings for equal `n`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct CanonicalForm {
    n: u8,
    /// First pair in the most significant of the low `n(n-1)/2` bits.
    code: u32,
}

fn pair_count(n: usize) -> usize {
    n * n.saturating_sub(1) / 2
}

impl CanonicalForm {
    pub fn order(&self) -> usize {
        self.n as usize
    }

    pub fn code(&self) -> u32 {
        self.code
    }

    /// The graph whose labelling realises this form.
    pub fn to_graph(&self) -> Graph {
        let n = self.order();
        let mut adj = vec![0u64; n];
        let mut shift = pair_count(n);
        for j in 1..n {
            for i in 0..j {
                shift -= 1;
                if self.code >> shift & 1 == 1 {
                    adj[i] |= bit(j);
                    adj[j] |= bit(i);
                }
            }
        }
        Graph::from_masks(adj)
    }

    /// Parses a bitstring of length `n(n-1)/2` for the given order. The
    /// string must already be canonical.
    pub fn parse(n: usize, s: &str) -> Result<Self> {
        if n > CANONICAL_MAX_VERTICES {
            return Err(Error::ScaleLimit {
                what: "canonical form",
                n,
                max: CANONICAL_MAX_VERTICES,
            });
        }
        let s = s.trim();
        if s.len() != pair_count(n) {
            return Err(Error::Parse(format!(
                "canonical bitstring for n = {n} needs {} bits, got {}",
                pair_count(n),
                s.len()
            )));
        }
        let mut code = 0u32;
        for c in s.chars() {
            code = code << 1
                | match c {
                    '0' => 0,
                    '1' => 1,
                    _ => return Err(Error::Parse(format!("bad bit {c:?} in {s:?}"))),
                };
        }
        let form = Self { n: n as u8, code };
        if form.to_graph().canonical_form()? != form {
            return Err(Error::Parse(format!("{s:?} is not a canonical bitstring")));
        }
        Ok(form)
    }
}

impl fmt::Display for CanonicalForm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let len = pair_count(self.order());
        for shift in (0..len).rev() {
            f.write_str(if self.code >> shift & 1 == 1 { "1" } else { "0" })?;
        }
        Ok(())
    }
}

/// `n:bits`, e.g. `3:111` for the triangle.
impl FromStr for CanonicalForm {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let (n, bits) = s
            .split_once(':')
            .ok_or_else(|| Error::Parse(format!("expected n:bits, got {s:?}")))?;
        let n = n
            .trim()
            .parse()
            .map_err(|e| Error::Parse(format!("{s:?}: {e}")))?;
        Self::parse(n, bits)
    }
}

#[derive(Clone, Copy)]
struct Partial {
    order: [u8; CANONICAL_MAX_VERTICES],
    used: u64,
}

impl Graph {
    /// Lexicographically minimal encoding over all relabellings.
    ///
    /// The bitstring is built one column at a time; column `k` depends only on
    /// the vertices placed at positions `0..=k`. Level by level we keep every
    /// partial ordering whose prefix ties the smallest one seen, so the search
    /// is exact while discarding most of the `n!` orderings early.
    pub fn canonical_form(&self) -> Result<CanonicalForm> {
        let n = self.n;
        if n > CANONICAL_MAX_VERTICES {
            return Err(Error::ScaleLimit {
                what: "canonical form",
                n,
                max: CANONICAL_MAX_VERTICES,
            });
        }
        let mut frontier = vec![Partial {
            order: [0; CANONICAL_MAX_VERTICES],
            used: 0,
        }];
        let mut next = Vec::new();
        let mut code = 0u32;
        for k in 0..n {
            let mut best = u32::MAX;
            next.clear();
            for p in &frontier {
                for v in 0..n {
                    if p.used & bit(v) != 0 {
                        continue;
                    }
                    let row = self.adj[v];
                    let mut chunk = 0u32;
                    for &u in &p.order[..k] {
                        chunk = chunk << 1 | (row >> u & 1) as u32;
                    }
                    if chunk > best {
                        continue;
                    }
                    if chunk < best {
                        best = chunk;
                        next.clear();
                    }
                    let mut q = *p;
                    q.order[k] = v as u8;
                    q.used |= bit(v);
                    next.push(q);
                }
            }
            code = if k == 0 { 0 } else { code << k | best };
            std::mem::swap(&mut frontier, &mut next);
        }
        Ok(CanonicalForm { n: n as u8, code })
    }

    /// Whether two graphs are isomorphic (both of order at most 8).
    pub fn is_isomorphic(&self, other: &Graph) -> Result<bool> {
        Ok(self.n == other.n
            && self.size() == other.size()
            && self.canonical_form()? == other.canonical_form()?)
    }
}
