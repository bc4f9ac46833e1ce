//! Pairwise non-isomorphic graphs of small order.
//!
//! Order `n` representatives are grown from order `n − 1` ones by adding a
//! vertex with every possible neighbourhood and deduplicating on canonical
//! form. Each supported class is closed under deleting a suitable vertex
//! (any vertex for all/bipartite graphs, a non-cut vertex for connected
//! graphs, a leaf or isolated vertex for forests, a leaf for trees), so
//! growing only the class's own representatives reaches every member.
//! Results are memoised per `(n, class)` and emitted in canonical order.

use std::collections::{BTreeSet, HashMap};
use std::fmt;
use std::fs;
use std::path::{Path, PathBuf};
use std::str::FromStr;
use std::sync::{Arc, Mutex, OnceLock};

use rayon::prelude::*;

use crate::error::{Error, Result};
use crate::graph::{CanonicalForm, Graph};

/// Largest order served.
pub const MAX_ORDER: usize = 8;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum GraphClass {
    All,
    Connected,
    Tree,
    Forest,
    Bipartite,
    NoIsolatedVertex,
}

impl GraphClass {
    pub const ALL: [GraphClass; 6] = [
        Self::All,
        Self::Connected,
        Self::Tree,
        Self::Forest,
        Self::Bipartite,
        Self::NoIsolatedVertex,
    ];

    pub fn matches(self, g: &Graph) -> bool {
        match self {
            Self::All => true,
            Self::Connected => g.is_connected(),
            Self::Tree => g.is_tree(),
            Self::Forest => g.is_forest(),
            Self::Bipartite => g.is_bipartite(),
            Self::NoIsolatedVertex => !g.has_isolated_vertex(),
        }
    }

    pub fn name(self) -> &'static str {
        match self {
            Self::All => "all",
            Self::Connected => "connected",
            Self::Tree => "tree",
            Self::Forest => "forest",
            Self::Bipartite => "bipartite",
            Self::NoIsolatedVertex => "no-isolated-vertex",
        }
    }
}

impl fmt::Display for GraphClass {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for GraphClass {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        Self::ALL
            .into_iter()
            .find(|c| c.name() == s)
            .ok_or_else(|| Error::Parse(format!("unknown graph class {s:?}")))
    }
}

fn check_order(n: usize) -> Result<()> {
    if n > MAX_ORDER {
        return Err(Error::ScaleLimit {
            what: "enumeration",
            n,
            max: MAX_ORDER,
        });
    }
    if n == 0 {
        return Err(Error::Precondition("enumeration needs n >= 1".into()));
    }
    Ok(())
}

type Memo = Mutex<HashMap<(usize, GraphClass), Arc<Vec<CanonicalForm>>>>;

fn memo() -> &'static Memo {
    static MEMO: OnceLock<Memo> = OnceLock::new();
    MEMO.get_or_init(Default::default)
}

/// Neighbourhood masks a new vertex may receive when extending a class member.
fn extension_masks(class: GraphClass, g: &Graph) -> Vec<u64> {
    let k = g.order();
    match class {
        GraphClass::Forest => std::iter::once(0).chain((0..k).map(|v| 1u64 << v)).collect(),
        GraphClass::Tree => (0..k).map(|v| 1u64 << v).collect(),
        GraphClass::Connected => (1..(1u64 << k)).collect(),
        _ => (0..(1u64 << k)).collect(),
    }
}

fn grow(class: GraphClass, prev: &[CanonicalForm]) -> Vec<CanonicalForm> {
    let found: Vec<Vec<CanonicalForm>> = prev
        .par_iter()
        .map(|form| {
            let g = form.to_graph();
            let k = g.order();
            let mut out = Vec::new();
            for mask in extension_masks(class, &g) {
                let mut adj: Vec<u64> = (0..k)
                    .map(|v| g.neighbors_mask(v) | ((mask >> v & 1) << k))
                    .collect();
                adj.push(mask);
                let h = Graph::from_masks(adj);
                if class == GraphClass::Bipartite && !h.is_bipartite() {
                    continue;
                }
                out.push(h.canonical_form().expect("order within canonical cap"));
            }
            out
        })
        .collect();
    let set: BTreeSet<CanonicalForm> = found.into_iter().flatten().collect();
    set.into_iter().collect()
}

/// Canonical forms of the class at order `n`, sorted.
pub fn enumerate_forms(n: usize, class: GraphClass) -> Result<Arc<Vec<CanonicalForm>>> {
    check_order(n)?;
    if let Some(hit) = memo().lock().expect("memo lock").get(&(n, class)) {
        return Ok(Arc::clone(hit));
    }
    let forms: Vec<CanonicalForm> = match class {
        GraphClass::NoIsolatedVertex => enumerate_forms(n, GraphClass::All)?
            .iter()
            .filter(|f| class.matches(&f.to_graph()))
            .copied()
            .collect(),
        _ if n == 1 => {
            let k1 = Graph::empty(1)?.canonical_form()?;
            vec![k1]
        }
        _ => grow(class, &enumerate_forms(n - 1, class)?),
    };
    let forms = Arc::new(forms);
    memo()
        .lock()
        .expect("memo lock")
        .insert((n, class), Arc::clone(&forms));
    Ok(forms)
}

/// One representative per isomorphism class of order-`n` graphs in `class`,
/// in ascending canonical order. Each graph is labelled by its canonical form.
pub fn enumerate(n: usize, class: GraphClass) -> Result<Vec<Graph>> {
    Ok(enumerate_forms(n, class)?
        .iter()
        .map(CanonicalForm::to_graph)
        .collect())
}

pub fn count(n: usize, class: GraphClass) -> Result<usize> {
    Ok(enumerate_forms(n, class)?.len())
}

/// Cache file name for `(n, class)` inside a cache directory.
pub fn cache_path(dir: &Path, n: usize, class: GraphClass) -> PathBuf {
    dir.join(format!("graphs-n{n}-{class}.txt"))
}

/// Writes one canonical bitstring per line.
pub fn write_cache(dir: &Path, n: usize, class: GraphClass) -> Result<PathBuf> {
    let forms = enumerate_forms(n, class)?;
    let mut text = String::new();
    for f in forms.iter() {
        text.push_str(&f.to_string());
        text.push('\n');
    }
    let path = cache_path(dir, n, class);
    fs::create_dir_all(dir)
        .and_then(|_| fs::write(&path, text))
        .map_err(|e| Error::Parse(format!("writing {}: {e}", path.display())))?;
    Ok(path)
}

/// Reads a cache file written by [`write_cache`]. Every line must be a
/// canonical form of a class member and the list must be strictly
/// increasing; anything else is rejected so the caller can regenerate.
pub fn read_cache(dir: &Path, n: usize, class: GraphClass) -> Result<Vec<Graph>> {
    check_order(n)?;
    let path = cache_path(dir, n, class);
    let text = fs::read_to_string(&path)
        .map_err(|e| Error::Parse(format!("reading {}: {e}", path.display())))?;
    let mut forms: Vec<CanonicalForm> = Vec::new();
    for line in text.lines() {
        let form = CanonicalForm::parse(n, line)?;
        if forms.last().is_some_and(|prev| *prev >= form) {
            return Err(Error::Parse(format!("{}: not strictly sorted", path.display())));
        }
        if !class.matches(&form.to_graph()) {
            return Err(Error::Parse(format!("{}: {line} is not {class}", path.display())));
        }
        forms.push(form);
    }
    Ok(forms.iter().map(CanonicalForm::to_graph).collect())
}

/// Cached enumeration: reads `dir`'s file when valid, otherwise enumerates
/// and rewrites it.
pub fn enumerate_cached(dir: &Path, n: usize, class: GraphClass) -> Result<Vec<Graph>> {
    match read_cache(dir, n, class) {
        Ok(graphs) => Ok(graphs),
        Err(_) => {
            write_cache(dir, n, class)?;
            enumerate(n, class)
        }
    }
}
