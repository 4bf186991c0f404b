//! Intersection loci, their codimensions, containment, and the stratification
//! poset of the level-`k` monster space.
//!
//! A word `W` with multiplicities `n_j` labels the locus
//! `I_W = ∩_{n_j >= 1} I_j[n_j - 1]`; factors with `n_j = 0` are the whole
//! space and are left out. `I_W ⊇ I_W'` exactly when `n_j <= n'_j` for all `j`.

use std::collections::HashMap;
use std::fmt;

use itertools::Itertools;
use serde::Serialize;

use crate::codeword::{self, CodeWord, MultiplicityVector};
use crate::counting;
use crate::error::{Error, Result};

/// Default cap on poset size for [`hasse`].
pub const DEFAULT_NODE_LIMIT: usize = 1 << 20;

/// `∩ I_j[depth]` on `M(level)` over the listed factors.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct IntersectionLocus {
    pub level: usize,
    pub dimension_m: u32,
    /// `(j, n_j - 1)` for every `j` with `n_j >= 1`, ascending in `j`.
    pub factors: Vec<(usize, usize)>,
}

impl IntersectionLocus {
    pub fn codimension(&self) -> usize {
        self.factors.iter().map(|(_, depth)| depth + 1).sum()
    }

    pub fn is_whole_space(&self) -> bool {
        self.factors.is_empty()
    }
}

/// Renders as e.g. `I2[2] ∩ I4`; depth 0 factors print without brackets and
/// the empty intersection prints as `M(k)`.
impl fmt::Display for IntersectionLocus {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.factors.is_empty() {
            return f.pad(&format!("M({})", self.level));
        }
        let parts = self.factors.iter().map(|&(j, depth)| {
            if depth == 0 {
                format!("I{j}")
            } else {
                format!("I{j}[{depth}]")
            }
        });
        f.pad(&parts.format(" ∩ ").to_string())
    }
}

pub fn locus(w: &CodeWord) -> IntersectionLocus {
    let factors = w
        .multiplicities()
        .iter()
        .filter(|&(_, n)| n >= 1)
        .map(|(j, n)| (j, n - 1))
        .collect();
    IntersectionLocus {
        level: w.len(),
        dimension_m: w.dimension(),
        factors,
    }
}

/// `Σ |A_j|`.
pub fn codimension(w: &CodeWord) -> usize {
    w.symbols().iter().map(|s| s.len()).sum()
}

/// `m + (m - 1) k`.
pub fn ambient_dimension(k: usize, m: u32) -> usize {
    m as usize + (m as usize - 1) * k
}

pub fn stratum_dimension(w: &CodeWord) -> usize {
    ambient_dimension(w.len(), w.dimension()) - codimension(w)
}

fn check_compatible(a: &CodeWord, b: &CodeWord) -> Result<()> {
    if a.len() != b.len() {
        return Err(Error::LengthMismatch { left: a.len(), right: b.len() });
    }
    if a.dimension() != b.dimension() {
        return Err(Error::DimensionMismatch {
            left: a.dimension(),
            right: b.dimension(),
        });
    }
    Ok(())
}

/// Whether the locus of `outer` contains the locus of `inner`.
pub fn contains(outer: &CodeWord, inner: &CodeWord) -> Result<bool> {
    check_compatible(outer, inner)?;
    Ok(outer.multiplicities().dominated_by(&inner.multiplicities()))
}

/// Valid words reached from `w` by raising a single `n_j` by one; invalid
/// candidates are dropped. Ordered by `j`.
pub fn excision_set(w: &CodeWord) -> Vec<CodeWord> {
    let v = w.multiplicities();
    (2..=w.len())
        .filter_map(|j| codeword::from_multiplicities(&v.incremented(j), w.dimension()).ok())
        .collect()
}

/// All strata of `M(k)` ordered by containment, stored as cover relations.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct StratumPoset {
    k: usize,
    m: u32,
    nodes: Vec<CodeWord>,
    /// `(a, b)`: the locus of `nodes[b]` is a maximal proper sublocus of `nodes[a]`.
    covers: Vec<(usize, usize)>,
}

#[derive(Serialize)]
struct PosetJson<'a> {
    k: usize,
    m: u32,
    nodes: Vec<String>,
    covers: &'a [(usize, usize)],
}

impl StratumPoset {
    pub fn k(&self) -> usize {
        self.k
    }

    pub fn m(&self) -> u32 {
        self.m
    }

    pub fn nodes(&self) -> &[CodeWord] {
        &self.nodes
    }

    pub fn covers(&self) -> &[(usize, usize)] {
        &self.covers
    }

    pub fn index_of(&self, w: &CodeWord) -> Option<usize> {
        self.nodes.iter().position(|n| n == w)
    }

    /// Reflexive-transitive closure of the cover relation, one row per node.
    pub fn reachability(&self) -> Vec<Vec<bool>> {
        let n = self.nodes.len();
        let mut down: Vec<Vec<usize>> = vec![Vec::new(); n];
        for &(a, b) in &self.covers {
            down[a].push(b);
        }
        (0..n)
            .map(|start| {
                let mut seen = vec![false; n];
                let mut stack = vec![start];
                seen[start] = true;
                while let Some(x) = stack.pop() {
                    for &y in &down[x] {
                        if !seen[y] {
                            seen[y] = true;
                            stack.push(y);
                        }
                    }
                }
                seen
            })
            .collect()
    }

    /// Nodes that no cover points into.
    pub fn maxima(&self) -> Vec<usize> {
        let mut has_parent = vec![false; self.nodes.len()];
        for &(_, b) in &self.covers {
            has_parent[b] = true;
        }
        (0..self.nodes.len()).filter(|&i| !has_parent[i]).collect()
    }

    pub fn to_json(&self) -> serde_json::Value {
        serde_json::to_value(PosetJson {
            k: self.k,
            m: self.m,
            nodes: self.nodes.iter().map(codeword::format).collect(),
            covers: &self.covers,
        })
        .expect("posets always serialize")
    }

    /// Graphviz source; nodes of equal codimension share a rank.
    pub fn to_dot(&self) -> String {
        let mut out = format!("digraph strata_k{}_m{} {{\n  rankdir=TB;\n", self.k, self.m);
        for (i, w) in self.nodes.iter().enumerate() {
            out.push_str(&format!("  n{i} [label=\"{}\"];\n", codeword::format(w)));
        }
        let by_codim = (0..self.nodes.len()).into_group_map_by(|&i| codimension(&self.nodes[i]));
        for c in by_codim.keys().sorted() {
            let ids = by_codim[c].iter().map(|i| format!("n{i}")).join("; ");
            out.push_str(&format!("  {{ rank=same; {ids}; }}\n"));
        }
        for &(a, b) in &self.covers {
            out.push_str(&format!("  n{a} -> n{b};\n"));
        }
        out.push_str("}\n");
        out
    }
}

pub fn hasse(k: usize, m: u32) -> Result<StratumPoset> {
    hasse_with_limit(k, m, DEFAULT_NODE_LIMIT)
}

/// As [`hasse`], refusing to build posets with more than `limit` nodes.
pub fn hasse_with_limit(k: usize, m: u32, limit: usize) -> Result<StratumPoset> {
    let expected = counting::count(k, m)?;
    if expected > limit.into() {
        let nodes = u128::try_from(&expected).unwrap_or(u128::MAX);
        return Err(Error::TooManyNodes { nodes, limit });
    }
    let nodes: Vec<CodeWord> = codeword::enumerate(k, m)?.collect();
    let index: HashMap<MultiplicityVector, usize> = nodes
        .iter()
        .enumerate()
        .map(|(i, w)| (w.multiplicities(), i))
        .collect();
    let mut covers = Vec::new();
    for (a, w) in nodes.iter().enumerate() {
        for smaller in excision_set(w) {
            covers.push((a, index[&smaller.multiplicities()]));
        }
    }
    Ok(StratumPoset { k, m, nodes, covers })
}
