//! The seven-letter RVT code for base dimension 3 and its translation to and
//! from subscript code words.
//!
//! Translation is driven by a context made of the previous RVT letter and
//! the previous subscript set:
//!
//! | context            | R   | V     | T1    | T2    | L1       | L2       | L3       |
//! |--------------------|-----|-------|-------|-------|----------|----------|----------|
//! | after `R`          | `R` | `V_k` |       |       |          |          |          |
//! | after `V`/`T1`, `V_j` | `R` | `V_k` | `V_j` |    | `V_{jk}` |          |          |
//! | after `T2`, `V_j`  | `R` | `V_k` |       | `V_j` |          |          | `V_{jk}` |
//! | after `L*`, `V_{ij}` | `R` | `V_k` | `V_j` | `V_i` | `V_{jk}` | `V_{ij}` | `V_{ik}` |
//!
//! where `k` is the current position and `i < j`.

use std::fmt;
use std::str::FromStr;

use itertools::Itertools;
use serde::{Deserialize, Serialize};

use crate::codeword::{self, CodeWord, SubscriptSet};
use crate::error::{Error, Result};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum RvtSymbol {
    R,
    V,
    T1,
    T2,
    L1,
    L2,
    L3,
}

impl RvtSymbol {
    pub const ALL: [RvtSymbol; 7] = [
        RvtSymbol::R,
        RvtSymbol::V,
        RvtSymbol::T1,
        RvtSymbol::T2,
        RvtSymbol::L1,
        RvtSymbol::L2,
        RvtSymbol::L3,
    ];

    pub fn as_str(self) -> &'static str {
        match self {
            RvtSymbol::R => "R",
            RvtSymbol::V => "V",
            RvtSymbol::T1 => "T1",
            RvtSymbol::T2 => "T2",
            RvtSymbol::L1 => "L1",
            RvtSymbol::L2 => "L2",
            RvtSymbol::L3 => "L3",
        }
    }

    /// Whether `next` may immediately follow `self`.
    pub fn may_precede(self, next: RvtSymbol) -> bool {
        use RvtSymbol::*;
        match self {
            R => matches!(next, R | V),
            V | T1 => matches!(next, R | V | T1 | L1),
            T2 => matches!(next, R | V | T2 | L3),
            L1 | L2 | L3 => true,
        }
    }
}

impl fmt::Display for RvtSymbol {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

impl FromStr for RvtSymbol {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        RvtSymbol::ALL
            .into_iter()
            .find(|sym| sym.as_str() == s)
            .ok_or_else(|| Error::Syntax {
                offset: 0,
                message: format!("unknown RVT symbol {s:?}"),
            })
    }
}

/// A validated RVT word.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(try_from = "RvtJson", into = "RvtJson")]
pub struct RvtWord(Vec<RvtSymbol>);

#[derive(Serialize, Deserialize)]
struct RvtJson {
    rvt: Vec<RvtSymbol>,
}

impl TryFrom<RvtJson> for RvtWord {
    type Error = Error;

    fn try_from(json: RvtJson) -> Result<Self> {
        validate_rvt(json.rvt)
    }
}

impl From<RvtWord> for RvtJson {
    fn from(w: RvtWord) -> Self {
        RvtJson { rvt: w.0 }
    }
}

impl RvtWord {
    pub fn symbols(&self) -> &[RvtSymbol] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn to_json(&self) -> serde_json::Value {
        serde_json::to_value(self).expect("RVT words always serialize")
    }
}

impl fmt::Display for RvtWord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.0.iter().join(" "))
    }
}

impl FromStr for RvtWord {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        parse_rvt(s)
    }
}

/// Accepts a word iff it starts with `R` and every adjacent pair is allowed.
pub fn validate_rvt(symbols: Vec<RvtSymbol>) -> Result<RvtWord> {
    let Some(&first) = symbols.first() else {
        return Err(Error::EmptyWord);
    };
    if first != RvtSymbol::R {
        return Err(Error::RvtFirstNotR {
            found: first.to_string(),
        });
    }
    for (idx, pair) in symbols.windows(2).enumerate() {
        if !pair[0].may_precede(pair[1]) {
            return Err(Error::InvalidRvt {
                position: idx + 2,
                prev: pair[0].to_string(),
                next: pair[1].to_string(),
            });
        }
    }
    Ok(RvtWord(symbols))
}

/// Parses whitespace-separated tokens such as `"R V T1 L1"`.
pub fn parse_rvt(text: &str) -> Result<RvtWord> {
    let mut symbols = Vec::new();
    let mut offset = 0;
    for piece in text.split_inclusive(char::is_whitespace) {
        let token = piece.trim_end();
        if !token.is_empty() {
            let sym = token.parse::<RvtSymbol>().map_err(|_| Error::Syntax {
                offset,
                message: format!("unknown RVT symbol {token:?}"),
            })?;
            symbols.push(sym);
        }
        offset += piece.len();
    }
    validate_rvt(symbols)
}

/// Table selector, carried from one position to the next.
#[derive(Debug, Clone, Copy)]
enum Context {
    AfterR,
    AfterVOrT1 { j: u32 },
    AfterT2 { j: u32 },
    AfterL { i: u32, j: u32 },
}

impl Context {
    fn from_step(tag: RvtSymbol, set: &SubscriptSet) -> Context {
        let s = set.as_slice();
        match tag {
            RvtSymbol::R => Context::AfterR,
            RvtSymbol::V | RvtSymbol::T1 => Context::AfterVOrT1 { j: s[0] },
            RvtSymbol::T2 => Context::AfterT2 { j: s[0] },
            RvtSymbol::L1 | RvtSymbol::L2 | RvtSymbol::L3 => Context::AfterL { i: s[0], j: s[1] },
        }
    }

    /// Forward table lookup at position `k`. `None` when the pair is not in
    /// the table, which validation already rules out.
    fn subscript(self, tag: RvtSymbol, k: u32) -> Option<Vec<u32>> {
        use RvtSymbol::*;
        let pair = |a: u32, b: u32| if a < b { vec![a, b] } else { vec![b, a] };
        Some(match (self, tag) {
            (_, R) => vec![],
            (_, V) => vec![k],
            (Context::AfterVOrT1 { j }, T1) | (Context::AfterT2 { j }, T2) => vec![j],
            (Context::AfterVOrT1 { j }, L1) | (Context::AfterT2 { j }, L3) => pair(j, k),
            (Context::AfterL { j, .. }, T1) => vec![j],
            (Context::AfterL { i, .. }, T2) => vec![i],
            (Context::AfterL { j, .. }, L1) => pair(j, k),
            (Context::AfterL { i, j }, L2) => vec![i, j],
            (Context::AfterL { i, .. }, L3) => pair(i, k),
            _ => return None,
        })
    }

    /// Reverse table lookup: which letter produces `set` at position `k`.
    fn tag(self, set: &[u32], k: u32) -> Option<RvtSymbol> {
        use RvtSymbol::*;
        if set.is_empty() {
            return Some(R);
        }
        if set == [k] {
            return Some(V);
        }
        match self {
            Context::AfterR => None,
            Context::AfterVOrT1 { j } => match set {
                [a] if *a == j => Some(T1),
                [a, b] if *a == j && *b == k => Some(L1),
                _ => None,
            },
            Context::AfterT2 { j } => match set {
                [a] if *a == j => Some(T2),
                [a, b] if *a == j && *b == k => Some(L3),
                _ => None,
            },
            Context::AfterL { i, j } => match set {
                [a] if *a == j => Some(T1),
                [a] if *a == i => Some(T2),
                [a, b] if *a == j && *b == k => Some(L1),
                [a, b] if *a == i && *b == j => Some(L2),
                [a, b] if *a == i && *b == k => Some(L3),
                _ => None,
            },
        }
    }
}

pub fn rvt_to_subscript(w: &RvtWord) -> CodeWord {
    let mut symbols: Vec<SubscriptSet> = Vec::with_capacity(w.len());
    let mut context = Context::AfterR;
    for (idx, &tag) in w.0.iter().enumerate().skip(1) {
        let k = idx as u32 + 1;
        let elements = context
            .subscript(tag, k)
            .expect("validated RVT words only use table entries");
        let set = SubscriptSet::from_sorted(&elements).expect("table entries are sorted");
        context = Context::from_step(tag, &set);
        symbols.push(set);
    }
    symbols.insert(0, SubscriptSet::empty());
    codeword::validate(symbols, 3).expect("translated RVT words are valid code words")
}

pub fn subscript_to_rvt(w: &CodeWord) -> Result<RvtWord> {
    if w.dimension() != 3 {
        return Err(Error::RvtDimension { m: w.dimension() });
    }
    let mut tags = vec![RvtSymbol::R];
    let mut context = Context::AfterR;
    for (idx, set) in w.symbols().iter().enumerate().skip(1) {
        let k = idx as u32 + 1;
        let tag = context
            .tag(set.as_slice(), k)
            .expect("valid m = 3 words are covered by the tables");
        context = Context::from_step(tag, set);
        tags.push(tag);
    }
    validate_rvt(tags)
}
