//! Code words over the alphabet `V_A`, where `A` ranges over finite sets of
//! integers `>= 2` and `R` stands for `V_{}`.
//!
//! A word `V_{A_1} ... V_{A_k}` is valid for base dimension `m` when
//!
//! 1. `A_1` is empty,
//! 2. `A_j ⊆ A_{j-1} ∪ {j}` for `j >= 2`,
//! 3. `|A_j| < m` for every `j`.
//!
//! Equivalently, the positions carrying `j` form one block starting at `j`,
//! so a word is determined by its [`MultiplicityVector`] `n_2, ..., n_k`.

use std::cmp::Ordering;
use std::fmt;
use std::str::FromStr;

use itertools::Itertools;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result, Violation, Violations};

/// A subscript set `A`, kept sorted and free of duplicates.
///
/// Sets order by size first and then lexicographically, which is the order
/// [`enumerate`] uses at each position.
#[derive(Debug, Clone, Default, PartialEq, Eq, Hash)]
pub struct SubscriptSet(Vec<u32>);

impl SubscriptSet {
    /// The empty set, written `R`.
    pub fn empty() -> Self {
        SubscriptSet(Vec::new())
    }

    /// Builds a set from arbitrary elements; duplicates collapse.
    pub fn new(elements: impl IntoIterator<Item = u32>) -> Result<Self> {
        let mut v: Vec<u32> = elements.into_iter().collect();
        v.sort_unstable();
        v.dedup();
        if let Some(&first) = v.first() {
            if first < 2 {
                return Err(Error::SubscriptTooSmall { value: first });
            }
        }
        Ok(SubscriptSet(v))
    }

    /// Builds a set from a slice that must already be strictly increasing.
    pub fn from_sorted(elements: &[u32]) -> Result<Self> {
        if elements.windows(2).any(|w| w[0] >= w[1]) {
            return Err(Error::SubscriptsNotIncreasing);
        }
        Self::new(elements.iter().copied())
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn contains(&self, j: u32) -> bool {
        self.0.binary_search(&j).is_ok()
    }

    pub fn as_slice(&self) -> &[u32] {
        &self.0
    }

    pub fn iter(&self) -> impl Iterator<Item = u32> + '_ {
        self.0.iter().copied()
    }

    pub fn is_subset(&self, other: &SubscriptSet) -> bool {
        self.0.iter().all(|x| other.contains(*x))
    }

    /// `self ∪ {j}`.
    pub fn with(&self, j: u32) -> SubscriptSet {
        let mut v = self.0.clone();
        if let Err(idx) = v.binary_search(&j) {
            v.insert(idx, j);
        }
        SubscriptSet(v)
    }
}

impl Ord for SubscriptSet {
    fn cmp(&self, other: &Self) -> Ordering {
        self.0.len().cmp(&other.0.len()).then_with(|| self.0.cmp(&other.0))
    }
}

impl PartialOrd for SubscriptSet {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Display for SubscriptSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.0.is_empty() {
            f.write_str("R")
        } else {
            write!(f, "V{{{}}}", self.0.iter().join(","))
        }
    }
}

/// A validated code word together with the base dimension it was checked
/// against.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(try_from = "CodeWordJson", into = "CodeWordJson")]
pub struct CodeWord {
    symbols: Vec<SubscriptSet>,
    dimension: u32,
}

#[derive(Serialize, Deserialize)]
struct CodeWordJson {
    m: u32,
    symbols: Vec<Vec<u32>>,
}

impl TryFrom<CodeWordJson> for CodeWord {
    type Error = Error;

    fn try_from(json: CodeWordJson) -> Result<Self> {
        let symbols = json
            .symbols
            .iter()
            .map(|s| SubscriptSet::from_sorted(s))
            .collect::<Result<Vec<_>>>()?;
        validate(symbols, json.m)
    }
}

impl From<CodeWord> for CodeWordJson {
    fn from(w: CodeWord) -> Self {
        CodeWordJson {
            m: w.dimension,
            symbols: w.symbols.into_iter().map(|s| s.0).collect(),
        }
    }
}

impl CodeWord {
    /// The all-`R` word of length `k`.
    pub fn all_r(k: usize, m: u32) -> Result<Self> {
        validate(vec![SubscriptSet::empty(); k], m)
    }

    pub fn symbols(&self) -> &[SubscriptSet] {
        &self.symbols
    }

    /// The subscript set at 1-based `position`.
    pub fn symbol(&self, position: usize) -> &SubscriptSet {
        &self.symbols[position - 1]
    }

    /// Word length `k`.
    pub fn len(&self) -> usize {
        self.symbols.len()
    }

    pub fn is_empty(&self) -> bool {
        self.symbols.is_empty()
    }

    pub fn dimension(&self) -> u32 {
        self.dimension
    }

    pub fn is_all_r(&self) -> bool {
        self.symbols.iter().all(SubscriptSet::is_empty)
    }

    pub fn multiplicities(&self) -> MultiplicityVector {
        multiplicities(self)
    }

    /// Re-validates the same symbols against another base dimension.
    pub fn with_dimension(&self, m: u32) -> Result<CodeWord> {
        validate(self.symbols.clone(), m)
    }

    pub fn to_json(&self) -> serde_json::Value {
        serde_json::to_value(self).expect("code words always serialize")
    }
}

impl fmt::Display for CodeWord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&format(self))
    }
}

/// The counts `n_j` of how often `j` appears as a subscript, for
/// `j = 2, ..., k`. `n_1` is identically zero.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct MultiplicityVector {
    // counts[j] = n_j for j in 0..=k; entries 0 and 1 stay zero.
    counts: Vec<usize>,
}

impl MultiplicityVector {
    /// All-zero vector for words of length `k`.
    pub fn zeros(k: usize) -> Self {
        MultiplicityVector { counts: vec![0; k + 1] }
    }

    /// Builds a vector of length `k` from `n_2, n_3, ...`; missing trailing
    /// entries are zero.
    pub fn from_counts(k: usize, counts: &[usize]) -> Result<Self> {
        if counts.len() > k.saturating_sub(1) {
            return Err(Error::MultiplicityIndex { j: counts.len() + 1, k });
        }
        let mut v = Self::zeros(k);
        for (idx, &n) in counts.iter().enumerate() {
            v.counts[idx + 2] = n;
        }
        Ok(v)
    }

    /// Builds a vector from explicit `(j, n_j)` pairs.
    pub fn from_pairs(k: usize, pairs: impl IntoIterator<Item = (usize, usize)>) -> Result<Self> {
        let mut v = Self::zeros(k);
        for (j, n) in pairs {
            if j < 2 || j > k {
                return Err(Error::MultiplicityIndex { j, k });
            }
            v.counts[j] = n;
        }
        Ok(v)
    }

    /// Word length `k`.
    pub fn length(&self) -> usize {
        self.counts.len() - 1
    }

    /// `n_j`; zero for any `j` outside `2..=k`.
    pub fn get(&self, j: usize) -> usize {
        if j < 2 {
            0
        } else {
            self.counts.get(j).copied().unwrap_or(0)
        }
    }

    /// `(j, n_j)` for `j = 2, ..., k`.
    pub fn iter(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        self.counts.iter().copied().enumerate().skip(2)
    }

    /// `n_2, ..., n_k` as a slice.
    pub fn as_slice(&self) -> &[usize] {
        self.counts.get(2..).unwrap_or(&[])
    }

    pub fn total(&self) -> usize {
        self.counts.iter().sum()
    }

    /// A copy with `n_j` increased by one.
    pub fn incremented(&self, j: usize) -> MultiplicityVector {
        let mut v = self.clone();
        v.counts[j] += 1;
        v
    }

    /// Componentwise `self <= other`.
    pub fn dominated_by(&self, other: &MultiplicityVector) -> bool {
        self.counts.len() == other.counts.len()
            && self.counts.iter().zip(&other.counts).all(|(a, b)| a <= b)
    }
}

/// Checks the three grammar rules and returns every violation found.
pub fn validate(symbols: Vec<SubscriptSet>, m: u32) -> Result<CodeWord> {
    if m < 2 {
        return Err(Error::DimensionTooSmall { m });
    }
    if symbols.is_empty() {
        return Err(Error::EmptyWord);
    }
    let mut violations = Vec::new();
    if !symbols[0].is_empty() {
        violations.push(Violation::FirstSymbolNotR {
            found: symbols[0].0.clone(),
        });
    }
    for (idx, symbol) in symbols.iter().enumerate() {
        let position = idx + 1;
        if idx > 0 {
            let allowed = symbols[idx - 1].with(position as u32);
            if !symbol.is_subset(&allowed) {
                violations.push(Violation::NotSubset {
                    position,
                    symbol: symbol.0.clone(),
                    allowed: allowed.0,
                });
            }
        }
        if symbol.len() >= m as usize {
            violations.push(Violation::TooManySubscripts {
                position,
                size: symbol.len(),
                m,
            });
        }
    }
    if violations.is_empty() {
        Ok(CodeWord { symbols, dimension: m })
    } else {
        Err(Error::InvalidWord(Violations(violations)))
    }
}

pub fn multiplicities(w: &CodeWord) -> MultiplicityVector {
    let mut v = MultiplicityVector::zeros(w.len());
    for symbol in &w.symbols {
        for j in symbol.iter() {
            v.counts[j as usize] += 1;
        }
    }
    v
}

/// Rebuilds the word with `A_p = { j : j <= p <= j + n_j - 1 }`.
pub fn from_multiplicities(v: &MultiplicityVector, m: u32) -> Result<CodeWord> {
    if m < 2 {
        return Err(Error::DimensionTooSmall { m });
    }
    let k = v.length();
    if k == 0 {
        return Err(Error::EmptyWord);
    }
    for (j, n) in v.iter() {
        let max = k + 1 - j;
        if n > max {
            return Err(Error::MultiplicityOutOfRange { j, count: n, max });
        }
    }
    let mut sets: Vec<Vec<u32>> = vec![Vec::new(); k];
    for (j, n) in v.iter() {
        for p in j..j + n {
            sets[p - 1].push(j as u32);
        }
    }
    for (idx, set) in sets.iter().enumerate() {
        if set.len() >= m as usize {
            return Err(Error::Occupancy {
                position: idx + 1,
                size: set.len(),
                m,
            });
        }
    }
    let symbols = sets.into_iter().map(SubscriptSet).collect();
    validate(symbols, m)
}

/// Candidate subscripts at `position` following `prev`: all subsets of
/// `prev ∪ {position}` with fewer than `m` elements, in [`SubscriptSet`] order.
fn successors(prev: &SubscriptSet, position: usize, m: u32) -> Vec<SubscriptSet> {
    let pool = prev.with(position as u32);
    let max = pool.len().min(m as usize - 1);
    (0..=max)
        .flat_map(|size| pool.0.iter().copied().combinations(size))
        .map(SubscriptSet)
        .collect()
}

struct Frame {
    candidates: Vec<SubscriptSet>,
    next: usize,
}

impl Frame {
    fn current(&self) -> &SubscriptSet {
        &self.candidates[self.next - 1]
    }
}

/// Streaming enumeration of all valid words of one length and dimension.
///
/// Words come out in lexicographic order by position, comparing subscript sets
/// by size and then lexicographically. The iterator keeps one frame per
/// position, each holding at most `2^(m-1)` candidates.
pub struct Words {
    k: usize,
    m: u32,
    stack: Vec<Frame>,
}

impl Iterator for Words {
    type Item = CodeWord;

    fn next(&mut self) -> Option<CodeWord> {
        loop {
            let depth = self.stack.len();
            let top = self.stack.last_mut()?;
            if top.next >= top.candidates.len() {
                self.stack.pop();
                continue;
            }
            top.next += 1;
            if depth == self.k {
                let symbols = self.stack.iter().map(|f| f.current().clone()).collect();
                return Some(CodeWord {
                    symbols,
                    dimension: self.m,
                });
            }
            let candidates = successors(top.current(), depth + 1, self.m);
            self.stack.push(Frame { candidates, next: 0 });
        }
    }
}

/// Every valid word of length `k` for base dimension `m`, each exactly once.
pub fn enumerate(k: usize, m: u32) -> Result<Words> {
    if m < 2 {
        return Err(Error::DimensionTooSmall { m });
    }
    if k == 0 {
        return Err(Error::EmptyWord);
    }
    Ok(Words {
        k,
        m,
        stack: vec![Frame {
            candidates: vec![SubscriptSet::empty()],
            next: 0,
        }],
    })
}

/// Canonical text: tokens `R` or `V{a,b,...}` separated by single spaces.
pub fn format(w: &CodeWord) -> String {
    format_symbols(&w.symbols)
}

/// Canonical text for a symbol sequence that has not been validated.
pub fn format_symbols(symbols: &[SubscriptSet]) -> String {
    symbols.iter().map(SubscriptSet::to_string).join(" ")
}

/// Parses the text syntax and validates the result against `m`.
///
/// ```text
/// word  := token (sep token)*
/// sep   := whitespace | "."
/// token := "R" | "V{}" | "V{" int ("," int)* "}"
/// ```
pub fn parse(text: &str, m: u32) -> Result<CodeWord> {
    validate(parse_symbols(text)?, m)
}

/// Parses the text syntax without applying the grammar rules.
pub fn parse_symbols(text: &str) -> Result<Vec<SubscriptSet>> {
    Lexer { bytes: text.as_bytes(), pos: 0 }.word()
}

struct Lexer<'a> {
    bytes: &'a [u8],
    pos: usize,
}

impl Lexer<'_> {
    fn err<T>(&self, message: impl Into<String>) -> Result<T> {
        Err(Error::Syntax {
            offset: self.pos,
            message: message.into(),
        })
    }

    fn peek(&self) -> Option<u8> {
        self.bytes.get(self.pos).copied()
    }

    fn skip_separators(&mut self) -> bool {
        let start = self.pos;
        while matches!(self.peek(), Some(b) if b == b'.' || b.is_ascii_whitespace()) {
            self.pos += 1;
        }
        self.pos > start
    }

    fn expect(&mut self, byte: u8) -> Result<()> {
        if self.peek() == Some(byte) {
            self.pos += 1;
            Ok(())
        } else {
            self.err(format!("expected '{}'", byte as char))
        }
    }

    fn int(&mut self) -> Result<u32> {
        let start = self.pos;
        while matches!(self.peek(), Some(b) if b.is_ascii_digit()) {
            self.pos += 1;
        }
        if start == self.pos {
            return self.err("expected an integer");
        }
        let digits = std::str::from_utf8(&self.bytes[start..self.pos]).expect("ascii digits");
        match digits.parse::<u32>() {
            Ok(v) => Ok(v),
            Err(_) => {
                self.pos = start;
                self.err("integer out of range")
            }
        }
    }

    fn token(&mut self) -> Result<SubscriptSet> {
        match self.peek() {
            Some(b'R') => {
                self.pos += 1;
                Ok(SubscriptSet::empty())
            }
            Some(b'V') => {
                self.pos += 1;
                self.expect(b'{')?;
                let mut elements = Vec::new();
                if self.peek() != Some(b'}') {
                    loop {
                        let at = self.pos;
                        let value = self.int()?;
                        if value < 2 {
                            self.pos = at;
                            return self.err(format!("subscript {value} is below 2"));
                        }
                        if elements.last().is_some_and(|&last| last >= value) {
                            self.pos = at;
                            return self.err("subscripts must be strictly increasing");
                        }
                        elements.push(value);
                        if self.peek() == Some(b',') {
                            self.pos += 1;
                        } else {
                            break;
                        }
                    }
                }
                self.expect(b'}')?;
                Ok(SubscriptSet(elements))
            }
            Some(_) => self.err("expected 'R' or 'V{'"),
            None => self.err("unexpected end of input"),
        }
    }

    fn word(&mut self) -> Result<Vec<SubscriptSet>> {
        self.skip_separators();
        let mut symbols = vec![self.token()?];
        loop {
            let separated = self.skip_separators();
            if self.peek().is_none() {
                return Ok(symbols);
            }
            if !separated {
                return self.err("expected a separator between symbols");
            }
            symbols.push(self.token()?);
        }
    }
}

/// Parses with `m` unknown: the word is validated against the smallest
/// dimension rule 3 allows.
impl FromStr for CodeWord {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let symbols = parse_symbols(s)?;
        let widest = symbols.iter().map(SubscriptSet::len).max().unwrap_or(0);
        validate(symbols, (widest as u32 + 1).max(2))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn set(v: &[u32]) -> SubscriptSet {
        SubscriptSet::new(v.iter().copied()).unwrap()
    }

    fn word(sets: &[&[u32]]) -> Vec<SubscriptSet> {
        sets.iter().map(|s| set(s)).collect()
    }

    #[test]
    fn single_r_is_valid() {
        let w = validate(word(&[&[]]), 2).unwrap();
        assert_eq!(format(&w), "R");
    }

    #[test]
    fn rule_three_rejects_wide_subscript() {
        let err = validate(word(&[&[], &[2], &[2, 3], &[2, 3, 4]]), 3).unwrap_err();
        let Error::InvalidWord(Violations(v)) = err else {
            panic!("expected violations, got {err:?}")
        };
        assert_eq!(v, vec![Violation::TooManySubscripts { position: 4, size: 3, m: 3 }]);
    }

    #[test]
    fn figure_word_is_valid() {
        assert!(validate(word(&[&[], &[2], &[3]]), 3).is_ok());
    }

    #[test]
    fn rule_two_violation_reports_position() {
        for m in 2..6 {
            let err = validate(word(&[&[], &[], &[2]]), m).unwrap_err();
            let Error::InvalidWord(Violations(v)) = err else { panic!() };
            assert_eq!(v.len(), 1);
            assert_eq!(v[0].rule(), 2);
            assert_eq!(v[0].position(), 3);
        }
    }

    #[test]
    fn all_violations_are_collected() {
        let err = validate(word(&[&[2], &[3, 4], &[2, 3, 4]]), 2).unwrap_err();
        let Error::InvalidWord(Violations(v)) = err else { panic!() };
        let rules: Vec<(u8, usize)> = v.iter().map(|x| (x.rule(), x.position())).collect();
        assert_eq!(rules, vec![(1, 1), (2, 2), (3, 2), (2, 3), (3, 3)]);
    }

    #[test]
    fn bad_dimension_and_empty() {
        assert_eq!(validate(word(&[&[]]), 1), Err(Error::DimensionTooSmall { m: 1 }));
        assert_eq!(validate(vec![], 3), Err(Error::EmptyWord));
        assert_eq!(SubscriptSet::new([1]), Err(Error::SubscriptTooSmall { value: 1 }));
    }

    #[test]
    fn multiplicities_of_examples() {
        let w = parse("R V{2} V{2,3} V{2,3} V{2,5} V{5} V{5} V{5}", 3).unwrap();
        let v = multiplicities(&w);
        assert_eq!(v.as_slice(), &[4, 2, 0, 4, 0, 0, 0]);

        let w = CodeWord::all_r(6, 2).unwrap();
        assert!(multiplicities(&w).as_slice().iter().all(|&n| n == 0));

        let w = parse("R V{2} V{2} V{2,4} R", 3).unwrap();
        assert_eq!(multiplicities(&w).as_slice(), &[3, 0, 1, 0]);
    }

    #[test]
    fn rebuild_from_multiplicities() {
        let v = MultiplicityVector::from_pairs(5, [(2, 3), (4, 1)]).unwrap();
        assert_eq!(format(&from_multiplicities(&v, 3).unwrap()), "R V{2} V{2} V{2,4} R");

        let v = MultiplicityVector::from_counts(2, &[1]).unwrap();
        assert_eq!(format(&from_multiplicities(&v, 2).unwrap()), "R V{2}");
    }

    #[test]
    fn occupancy_depends_on_dimension() {
        let v = MultiplicityVector::from_counts(4, &[3, 2]).unwrap();
        let w = from_multiplicities(&v, 3).unwrap();
        assert_eq!(format(&w), "R V{2} V{2,3} V{2,3}");
        // Oracle: the same symbols run through `validate` at m = 2.
        assert!(validate(w.symbols().to_vec(), 2).is_err());
        assert_eq!(
            from_multiplicities(&v, 2),
            Err(Error::Occupancy { position: 3, size: 2, m: 2 })
        );
    }

    #[test]
    fn multiplicity_range_is_checked() {
        let v = MultiplicityVector::from_counts(3, &[3]).unwrap();
        assert_eq!(
            from_multiplicities(&v, 4),
            Err(Error::MultiplicityOutOfRange { j: 2, count: 3, max: 2 })
        );
        assert!(MultiplicityVector::from_counts(3, &[1, 1, 1]).is_err());
        assert!(MultiplicityVector::from_pairs(3, [(1, 1)]).is_err());
    }

    #[test]
    fn enumerate_length_three_in_order() {
        let words: Vec<String> = enumerate(3, 3).unwrap().map(|w| format(&w)).collect();
        assert_eq!(
            words,
            [
                "R R R",
                "R R V{3}",
                "R V{2} R",
                "R V{2} V{2}",
                "R V{2} V{3}",
                "R V{2} V{2,3}",
            ]
        );
    }

    #[test]
    fn enumerate_length_four_counts() {
        assert_eq!(enumerate(4, 4).unwrap().count(), 24);
        assert_eq!(enumerate(4, 3).unwrap().count(), 23);
        let missing = parse("R V{2} V{2,3} V{2,3,4}", 4).unwrap();
        assert!(!enumerate(4, 3).unwrap().any(|w| w.symbols() == missing.symbols()));
        assert_eq!(enumerate(1, 2).unwrap().count(), 1);
        assert!(enumerate(0, 3).is_err());
        assert!(enumerate(3, 1).is_err());
    }

    #[test]
    fn parse_and_format() {
        let w = parse("R V{2} V{2,3}", 3).unwrap();
        assert_eq!(w.symbols(), word(&[&[], &[2], &[2, 3]]).as_slice());
        assert_eq!(format(&w), "R V{2} V{2,3}");

        let w = parse("V{}.V{2}  V{2,3}", 3).unwrap();
        assert_eq!(format(&w), "R V{2} V{2,3}");

        // Rendering does not depend on validity.
        assert_eq!(format_symbols(&word(&[&[], &[2], &[2, 4]])), "R V{2} V{2,4}");
        assert_eq!(format_symbols(&parse_symbols("R V{2} V{2,4}").unwrap()), "R V{2} V{2,4}");

        let err = parse("V{2} R", 3).unwrap_err();
        let Error::InvalidWord(Violations(v)) = err else { panic!() };
        assert_eq!(v[0].rule(), 1);
    }

    #[test]
    fn multi_digit_subscripts_parse() {
        let mut text = String::from("R");
        for p in 2..=14 {
            text.push_str(if p == 14 { " V{14}" } else { " R" });
        }
        let w = parse(&text, 2).unwrap();
        assert_eq!(format(&w), text);
    }

    #[test]
    fn syntax_errors_carry_offsets() {
        let cases = [
            ("R X", 2),
            ("R V2", 3),
            ("R V{2,}", 6),
            ("R V{3,2}", 6),
            ("R V{1}", 4),
            ("RV{2}", 1),
            ("R V{2", 5),
            ("", 0),
        ];
        for (text, offset) in cases {
            match parse(text, 3) {
                Err(Error::Syntax { offset: got, .. }) => assert_eq!(got, offset, "{text:?}"),
                other => panic!("{text:?}: {other:?}"),
            }
        }
    }

    #[test]
    fn json_shape() {
        let w = parse("R V{2} V{2,3}", 3).unwrap();
        let json = serde_json::to_string(&w).unwrap();
        assert_eq!(json, r#"{"m":3,"symbols":[[],[2],[2,3]]}"#);
        let back: CodeWord = serde_json::from_str(&json).unwrap();
        assert_eq!(back, w);
        assert!(serde_json::from_str::<CodeWord>(r#"{"m":3,"symbols":[[2]]}"#).is_err());
    }

    #[test]
    fn from_str_picks_minimal_dimension() {
        let w: CodeWord = "R V{2} V{2,3}".parse().unwrap();
        assert_eq!(w.dimension(), 3);
        let w: CodeWord = "R R".parse().unwrap();
        assert_eq!(w.dimension(), 2);
    }

    #[test]
    fn subscript_order_is_size_then_lex() {
        let mut sets = vec![set(&[2, 3]), set(&[4]), set(&[]), set(&[2]), set(&[2, 4])];
        sets.sort();
        assert_eq!(sets, vec![set(&[]), set(&[2]), set(&[4]), set(&[2, 3]), set(&[2, 4])]);
    }
}
