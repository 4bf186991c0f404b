use std::fmt;

use thiserror::Error;

/// A single broken grammar rule in a candidate code word. Positions are 1-based.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Violation {
    /// Rule 1: the first symbol must be `R`.
    FirstSymbolNotR { found: Vec<u32> },
    /// Rule 2: the subscript at `position` is not contained in the previous
    /// subscript together with `position`.
    NotSubset {
        position: usize,
        symbol: Vec<u32>,
        allowed: Vec<u32>,
    },
    /// Rule 3: the subscript at `position` has `size >= m` elements.
    TooManySubscripts { position: usize, size: usize, m: u32 },
}

impl Violation {
    pub fn rule(&self) -> u8 {
        match self {
            Violation::FirstSymbolNotR { .. } => 1,
            Violation::NotSubset { .. } => 2,
            Violation::TooManySubscripts { .. } => 3,
        }
    }

    pub fn position(&self) -> usize {
        match self {
            Violation::FirstSymbolNotR { .. } => 1,
            Violation::NotSubset { position, .. } | Violation::TooManySubscripts { position, .. } => {
                *position
            }
        }
    }
}

fn braces(set: &[u32]) -> String {
    let inner: Vec<String> = set.iter().map(u32::to_string).collect();
    format!("{{{}}}", inner.join(","))
}

impl fmt::Display for Violation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Violation::FirstSymbolNotR { found } => {
                write!(f, "rule 1 violated at position 1: first symbol is V{} instead of R", braces(found))
            }
            Violation::NotSubset { position, symbol, allowed } => write!(
                f,
                "rule 2 violated at position {position}: {} is not a subset of {}",
                braces(symbol),
                braces(allowed)
            ),
            Violation::TooManySubscripts { position, size, m } => write!(
                f,
                "rule 3 violated at position {position}: subscript has {size} elements, must be fewer than m = {m}"
            ),
        }
    }
}

/// Every violation found while validating one candidate word.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Violations(pub Vec<Violation>);

impl fmt::Display for Violations {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (i, v) in self.0.iter().enumerate() {
            if i > 0 {
                f.write_str("; ")?;
            }
            write!(f, "{v}")?;
        }
        Ok(())
    }
}

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("invalid code word: {0}")]
    InvalidWord(Violations),

    #[error("base dimension must be at least 2, got {m}")]
    DimensionTooSmall { m: u32 },

    #[error("a word must contain at least one symbol")]
    EmptyWord,

    #[error("subscript {value} is not allowed, subscripts start at 2")]
    SubscriptTooSmall { value: u32 },

    #[error("subscripts must be strictly increasing")]
    SubscriptsNotIncreasing,

    #[error("syntax error at offset {offset}: {message}")]
    Syntax { offset: usize, message: String },

    #[error("n_{j} = {count} exceeds the bound k + 1 - j = {max}")]
    MultiplicityOutOfRange { j: usize, count: usize, max: usize },

    #[error("multiplicity index {j} is outside 2..={k}")]
    MultiplicityIndex { j: usize, k: usize },

    #[error("position {position} would carry {size} subscripts, must be fewer than m = {m}")]
    Occupancy { position: usize, size: usize, m: u32 },

    #[error("RVT rule violated at position {position}: {next} may not follow {prev}")]
    InvalidRvt {
        position: usize,
        prev: String,
        next: String,
    },

    #[error("RVT word must start with R, found {found}")]
    RvtFirstNotR { found: String },

    #[error("RVT coding is defined only for m = 3, got m = {m}")]
    RvtDimension { m: u32 },

    #[error("words have different lengths ({left} and {right})")]
    LengthMismatch { left: usize, right: usize },

    #[error("objects use different base dimensions ({left} and {right})")]
    DimensionMismatch { left: u32, right: u32 },

    #[error("chart level {position} is {value}, must lie in 1..={m}")]
    ChartLevelOutOfRange { position: usize, value: u32, m: u32 },

    #[error("coordinate subscript {q} must lie in 1..={m}")]
    CoordinateOutOfRange { q: u32, m: u32 },

    #[error("the intersection locus does not meet the chart")]
    DoesNotMeetChart,

    #[error("vertex {vertex} has parent {parent}, parents must be smaller than their children")]
    InvalidTree { vertex: usize, parent: usize },

    #[error("tree must have at least one non-root vertex")]
    EmptyTree,

    #[error("poset would have {nodes} nodes, exceeding the limit of {limit}")]
    TooManyNodes { nodes: u128, limit: usize },

    #[error("malformed JSON: {0}")]
    Json(String),
}

impl From<serde_json::Error> for Error {
    fn from(e: serde_json::Error) -> Self {
        Error::Json(e.to_string())
    }
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
