//! Increasing trees on `{0, ..., k}` and their correspondence with code words
//! of length `k`.
//!
//! On vertices `1..=k+1` rooted at `k+1`, a word contributes the edges
//! `(j-1, j+n_j)` for `j = 2..=k` and `(k, k+1)`. Relabelling `v -> k+1-v`
//! turns this into an increasing tree rooted at `0`. The map is onto the
//! code words whenever `m >= k`; for smaller `m` some trees have no word.

use std::fmt;
use std::str::FromStr;

use itertools::Itertools;
use serde::{Deserialize, Serialize};

use crate::codeword::{self, CodeWord, MultiplicityVector};
use crate::error::{Error, Result};

/// A rooted tree on `{0, ..., k}` with root `0` and `parent(v) < v`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(try_from = "TreeJson", into = "TreeJson")]
pub struct IncreasingTree {
    // parent[v - 1] for v = 1..=k
    parent: Vec<usize>,
}

#[derive(Serialize, Deserialize)]
struct TreeJson {
    k: usize,
    parent: Vec<usize>,
}

impl TryFrom<TreeJson> for IncreasingTree {
    type Error = Error;

    fn try_from(json: TreeJson) -> Result<Self> {
        if json.k != json.parent.len() {
            return Err(Error::LengthMismatch { left: json.k, right: json.parent.len() });
        }
        IncreasingTree::new(json.parent)
    }
}

impl From<IncreasingTree> for TreeJson {
    fn from(t: IncreasingTree) -> Self {
        TreeJson { k: t.parent.len(), parent: t.parent }
    }
}

impl IncreasingTree {
    /// `parents[v - 1]` is the parent of vertex `v`.
    pub fn new(parents: Vec<usize>) -> Result<Self> {
        if parents.is_empty() {
            return Err(Error::EmptyTree);
        }
        for (idx, &p) in parents.iter().enumerate() {
            let vertex = idx + 1;
            if p >= vertex {
                return Err(Error::InvalidTree { vertex, parent: p });
            }
        }
        Ok(IncreasingTree { parent: parents })
    }

    /// Number of non-root vertices.
    pub fn k(&self) -> usize {
        self.parent.len()
    }

    pub fn parent(&self, v: usize) -> usize {
        self.parent[v - 1]
    }

    pub fn parents(&self) -> &[usize] {
        &self.parent
    }

    pub fn degree(&self, v: usize) -> usize {
        let children = self.parent.iter().filter(|&&p| p == v).count();
        if v == 0 {
            children
        } else {
            children + 1
        }
    }

    pub fn root_degree(&self) -> usize {
        self.degree(0)
    }

    pub fn to_json(&self) -> serde_json::Value {
        serde_json::to_value(self).expect("trees always serialize")
    }

    pub fn to_dot(&self) -> String {
        let mut out = String::from("graph increasing_tree {\n");
        for v in 0..=self.k() {
            out.push_str(&format!("  {v};\n"));
        }
        for (idx, p) in self.parent.iter().enumerate() {
            out.push_str(&format!("  {p} -- {};\n", idx + 1));
        }
        out.push_str("}\n");
        out
    }
}

/// The parent list, comma-separated: `0,1,0`.
impl fmt::Display for IncreasingTree {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.parent.iter().join(","))
    }
}

/// Reads either the comma-separated parent list or the JSON object form.
impl FromStr for IncreasingTree {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let s = s.trim();
        if s.starts_with('{') {
            return Ok(serde_json::from_str(s)?);
        }
        let mut offset = 0;
        let mut parents = Vec::new();
        for piece in s.split(',') {
            let p = piece.trim().parse::<usize>().map_err(|_| Error::Syntax {
                offset,
                message: "expected a parent index".into(),
            })?;
            parents.push(p);
            offset += piece.len() + 1;
        }
        IncreasingTree::new(parents)
    }
}

pub fn word_to_tree(w: &CodeWord) -> IncreasingTree {
    let k = w.len();
    let n = w.multiplicities();
    // Before relabelling, vertex v < k hangs below v + 1 + n_{v+1} and k below k + 1.
    // After relabelling u = k + 1 - v, u hangs below u - 1 - n_{k+2-u}.
    let parent = (1..=k)
        .map(|u| if u == 1 { 0 } else { u - 1 - n.get(k + 2 - u) })
        .collect();
    IncreasingTree { parent }
}

/// Inverse of [`word_to_tree`]; fails when the word for `t` breaks rule 3 at `m`.
pub fn tree_to_word(t: &IncreasingTree, m: u32) -> Result<CodeWord> {
    let k = t.k();
    // Vertex v = 1..k-1 before relabelling is u = k + 1 - v; its upper endpoint
    // is k + 1 - parent(u), giving n_{v+1} = (k + 1 - parent(u)) - (v + 1).
    let pairs = (1..k).map(|v| {
        let u = k + 1 - v;
        let upper = k + 1 - t.parent(u);
        (v + 1, upper - (v + 1))
    });
    let counts = MultiplicityVector::from_pairs(k, pairs)?;
    codeword::from_multiplicities(&counts, m)
}

/// All `k!` increasing trees on `{0..k}`, with parent vectors in lexicographic
/// order.
pub struct Trees {
    current: Option<Vec<usize>>,
}

impl Iterator for Trees {
    type Item = IncreasingTree;

    fn next(&mut self) -> Option<IncreasingTree> {
        let parents = self.current.take()?;
        let mut successor = parents.clone();
        // Odometer: vertex v ranges over 0..v.
        let mut idx = successor.len();
        let advanced = loop {
            if idx == 0 {
                break false;
            }
            idx -= 1;
            if successor[idx] + 1 < idx + 1 {
                successor[idx] += 1;
                break true;
            }
            successor[idx] = 0;
        };
        if advanced {
            self.current = Some(successor);
        }
        Some(IncreasingTree { parent: parents })
    }
}

pub fn enumerate_trees(k: usize) -> Result<Trees> {
    if k == 0 {
        return Err(Error::EmptyTree);
    }
    Ok(Trees { current: Some(vec![0; k]) })
}
