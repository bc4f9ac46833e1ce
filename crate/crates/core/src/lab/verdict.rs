use std::collections::BTreeMap;
use std::fmt;
use std::str::FromStr;

use serde::ser::{SerializeMap, SerializeSeq};
use serde::{Serialize, Serializer};
use serde_json::value::RawValue;

use crate::error::{Error, Result};
use crate::graph::{CanonicalForm, Graph, CANONICAL_MAX_VERTICES};
use crate::numfmt::sig17;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Status {
    Holds,
    HoldsWithEquality,
    Violated,
    NumericallyTight,
    NotApplicable,
}

impl Status {
    pub const ALL: [Status; 5] = [
        Self::Holds,
        Self::HoldsWithEquality,
        Self::Violated,
        Self::NumericallyTight,
        Self::NotApplicable,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Self::Holds => "holds",
            Self::HoldsWithEquality => "holds-with-equality",
            Self::Violated => "violated",
            Self::NumericallyTight => "numerically-tight",
            Self::NotApplicable => "not-applicable",
        }
    }

    pub fn is_violation(self) -> bool {
        self == Self::Violated
    }

    /// The worse of two statuses for a claim made of several sub-checks.
    pub(crate) fn combine(self, other: Status) -> Status {
        fn rank(s: Status) -> u8 {
            match s {
                Status::NotApplicable => 0,
                Status::Holds => 1,
                Status::HoldsWithEquality => 2,
                Status::NumericallyTight => 3,
                Status::Violated => 4,
            }
        }
        if rank(other) > rank(self) {
            other
        } else {
            self
        }
    }
}

impl fmt::Display for Status {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Status {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        Self::ALL
            .into_iter()
            .find(|st| st.name() == s)
            .ok_or_else(|| Error::Parse(format!("unknown status {s:?}")))
    }
}

/// The instance a verdict was computed on.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GraphRecord {
    pub n: usize,
    pub edges: Vec<(usize, usize)>,
    /// Present for orders the canonical labeller supports.
    pub canonical: Option<CanonicalForm>,
}

impl GraphRecord {
    pub fn of(g: &Graph) -> Self {
        let canonical = if g.order() <= CANONICAL_MAX_VERTICES {
            g.canonical_form().ok()
        } else {
            None
        };
        Self {
            n: g.order(),
            edges: g.edges(),
            canonical,
        }
    }

    pub fn to_graph(&self) -> Result<Graph> {
        Graph::from_edges(self.n, &self.edges)
    }
}

/// One witness entry.
#[derive(Debug, Clone, PartialEq)]
pub enum Datum {
    Real(f64),
    Int(i64),
    Bool(bool),
    Text(String),
    Reals(Vec<f64>),
    Ints(Vec<i64>),
    Matrix(Vec<Vec<f64>>),
}

impl From<f64> for Datum {
    fn from(v: f64) -> Self {
        Self::Real(v)
    }
}

impl From<usize> for Datum {
    fn from(v: usize) -> Self {
        Self::Int(v as i64)
    }
}

impl From<bool> for Datum {
    fn from(v: bool) -> Self {
        Self::Bool(v)
    }
}

impl From<&str> for Datum {
    fn from(v: &str) -> Self {
        Self::Text(v.to_owned())
    }
}

impl From<String> for Datum {
    fn from(v: String) -> Self {
        Self::Text(v)
    }
}

impl From<Vec<f64>> for Datum {
    fn from(v: Vec<f64>) -> Self {
        Self::Reals(v)
    }
}

impl From<&[f64]> for Datum {
    fn from(v: &[f64]) -> Self {
        Self::Reals(v.to_vec())
    }
}

impl From<Vec<usize>> for Datum {
    fn from(v: Vec<usize>) -> Self {
        Self::Ints(v.into_iter().map(|x| x as i64).collect())
    }
}

impl From<Vec<Vec<f64>>> for Datum {
    fn from(v: Vec<Vec<f64>>) -> Self {
        Self::Matrix(v)
    }
}

/// A float written with 17 significant digits, `null` when not finite.
pub(crate) struct Num(pub(crate) f64);

impl Serialize for Num {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        if !self.0.is_finite() {
            return s.serialize_none();
        }
        let raw = RawValue::from_string(sig17(self.0)).map_err(serde::ser::Error::custom)?;
        raw.serialize(s)
    }
}

struct Nums<'a>(&'a [f64]);

impl Serialize for Nums<'_> {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        let mut seq = s.serialize_seq(Some(self.0.len()))?;
        for &x in self.0 {
            seq.serialize_element(&Num(x))?;
        }
        seq.end()
    }
}

impl Serialize for Datum {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        match self {
            Datum::Real(x) => Num(*x).serialize(s),
            Datum::Int(i) => s.serialize_i64(*i),
            Datum::Bool(b) => s.serialize_bool(*b),
            Datum::Text(t) => s.serialize_str(t),
            Datum::Reals(v) => Nums(v).serialize(s),
            Datum::Ints(v) => v.serialize(s),
            Datum::Matrix(rows) => {
                let mut seq = s.serialize_seq(Some(rows.len()))?;
                for r in rows {
                    seq.serialize_element(&Nums(r))?;
                }
                seq.end()
            }
        }
    }
}

/// The record of checking one claim on one instance.
#[derive(Debug, Clone, PartialEq)]
pub struct Verdict {
    pub claim_id: String,
    /// `None` for claims about arbitrary matrices; the witness then carries them.
    pub graph: Option<GraphRecord>,
    pub alpha: Option<f64>,
    pub params: BTreeMap<String, i64>,
    pub status: Status,
    /// Signed distance to the boundary; positive means room to spare.
    pub margin: Option<f64>,
    pub witness: BTreeMap<String, Datum>,
}

impl Verdict {
    pub(crate) fn new(claim_id: &str, graph: Option<&Graph>, alpha: Option<f64>) -> Self {
        Self {
            claim_id: claim_id.to_owned(),
            graph: graph.map(GraphRecord::of),
            alpha,
            params: BTreeMap::new(),
            status: Status::NotApplicable,
            margin: None,
            witness: BTreeMap::new(),
        }
    }

    pub(crate) fn param(mut self, key: &str, value: usize) -> Self {
        self.params.insert(key.to_owned(), value as i64);
        self
    }

    pub(crate) fn note(&mut self, key: &str, value: impl Into<Datum>) {
        self.witness.insert(key.to_owned(), value.into());
    }

    pub(crate) fn with(mut self, key: &str, value: impl Into<Datum>) -> Self {
        self.note(key, value);
        self
    }

    pub(crate) fn settle(mut self, status: Status, margin: Option<f64>) -> Self {
        self.status = status;
        self.margin = margin;
        self
    }

    pub fn witness_real(&self, key: &str) -> Option<f64> {
        match self.witness.get(key) {
            Some(Datum::Real(x)) => Some(*x),
            _ => None,
        }
    }

    pub fn witness_bool(&self, key: &str) -> Option<bool> {
        match self.witness.get(key) {
            Some(Datum::Bool(b)) => Some(*b),
            _ => None,
        }
    }

    pub fn witness_int(&self, key: &str) -> Option<i64> {
        match self.witness.get(key) {
            Some(Datum::Int(i)) => Some(*i),
            _ => None,
        }
    }

    /// One JSON object, no trailing newline.
    pub fn to_json(&self) -> String {
        serde_json::to_string(self).expect("verdicts always serialise")
    }
}

impl Serialize for Verdict {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        let mut map = s.serialize_map(Some(9))?;
        map.serialize_entry("claim_id", &self.claim_id)?;
        map.serialize_entry("graph_n", &self.graph.as_ref().map(|g| g.n))?;
        map.serialize_entry(
            "graph_edges",
            &self.graph.as_ref().map(|g| g.edges.iter().map(|&(u, v)| [u, v]).collect::<Vec<_>>()),
        )?;
        map.serialize_entry(
            "canonical",
            &self.graph.as_ref().and_then(|g| g.canonical).map(|c| format!("{}:{c}", c.order())),
        )?;
        map.serialize_entry("alpha", &self.alpha.map(Num))?;
        map.serialize_entry("params", &self.params)?;
        map.serialize_entry("status", self.status.name())?;
        map.serialize_entry("margin", &self.margin.map(Num))?;
        map.serialize_entry("witness", &self.witness)?;
        map.end()
    }
}
