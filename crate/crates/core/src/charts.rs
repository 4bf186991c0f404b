//! Symbolic coordinate charts `C(p_1 ... p_k)` on the level-`k` monster space.
//!
//! Level `j` of a chart carries the names `x_q(p_1 ... p_j)` for `q = 1..m`.
//! The retained name `x_{p_j}(p_1 ... p_j)` is another name for
//! `x_{p_j}(p_1 ... p_{j-1})`, so each coordinate has a unique shortest name
//! whose subscript differs from the last prefix symbol.

use std::collections::BTreeSet;
use std::fmt;
use std::str::FromStr;

use itertools::Itertools;
use serde::{Deserialize, Serialize};

use crate::codeword::CodeWord;
use crate::error::{Error, Result};

#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Chart {
    levels: Vec<u32>,
    dimension_m: u32,
}

impl Chart {
    pub fn new(levels: Vec<u32>, m: u32) -> Result<Self> {
        if m < 2 {
            return Err(Error::DimensionTooSmall { m });
        }
        for (idx, &value) in levels.iter().enumerate() {
            if value < 1 || value > m {
                return Err(Error::ChartLevelOutOfRange { position: idx + 1, value, m });
            }
        }
        Ok(Chart { levels, dimension_m: m })
    }

    /// Accepts `"3,2,1,2,3"`, or the digit string `"32123"` when `m <= 9`.
    pub fn parse(text: &str, m: u32) -> Result<Self> {
        let text = text.trim();
        let syntax = |offset: usize, message: &str| Error::Syntax { offset, message: message.into() };
        let levels = if text.is_empty() {
            Vec::new()
        } else if text.contains(',') {
            let mut offset = 0;
            let mut levels = Vec::new();
            for piece in text.split(',') {
                let value = piece.trim().parse::<u32>().map_err(|_| syntax(offset, "expected a chart level"))?;
                levels.push(value);
                offset += piece.len() + 1;
            }
            levels
        } else if m <= 9 {
            text.chars()
                .enumerate()
                .map(|(i, c)| c.to_digit(10).ok_or_else(|| syntax(i, "expected a digit")))
                .collect::<Result<Vec<_>>>()?
        } else {
            match text.parse::<u32>() {
                Ok(v) => vec![v],
                Err(_) => return Err(syntax(0, "expected a comma-separated chart")),
            }
        };
        Chart::new(levels, m)
    }

    pub fn levels(&self) -> &[u32] {
        &self.levels
    }

    /// `p_position`, 1-based.
    pub fn level(&self, position: usize) -> u32 {
        self.levels[position - 1]
    }

    pub fn len(&self) -> usize {
        self.levels.len()
    }

    pub fn is_empty(&self) -> bool {
        self.levels.is_empty()
    }

    pub fn dimension(&self) -> u32 {
        self.dimension_m
    }

    /// `x_q(p_1 ... p_j)` in this chart, as written (not canonicalized).
    pub fn name(&self, q: u32, j: usize) -> CoordinateName {
        CoordinateName::new(q, self.levels[..j].to_vec())
    }
}

/// Comma-separated levels, the canonical text form.
impl fmt::Display for Chart {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.levels.iter().join(","))
    }
}

/// A coordinate name `x_q(prefix)`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct CoordinateName {
    pub q: u32,
    pub prefix: Vec<u32>,
}

impl CoordinateName {
    pub fn new(q: u32, prefix: Vec<u32>) -> Self {
        CoordinateName { q, prefix }
    }

    pub fn is_shortest(&self) -> bool {
        self.prefix.last() != Some(&self.q)
    }

    pub fn shortest(&self) -> CoordinateName {
        shortest_name(self)
    }
}

/// `x3(3212)`; prefixes with any level above 9 are comma-separated.
impl fmt::Display for CoordinateName {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "x{}", self.q)?;
        if self.prefix.is_empty() {
            return Ok(());
        }
        if self.prefix.iter().all(|&p| p <= 9) {
            write!(f, "({})", self.prefix.iter().join(""))
        } else {
            write!(f, "({})", self.prefix.iter().join(","))
        }
    }
}

impl FromStr for CoordinateName {
    type Err = Error;

    /// Reads `x3`, `x3(3212)` or `x3(3,2,1,2)`.
    fn from_str(s: &str) -> Result<Self> {
        let syntax = |offset: usize, message: &str| Error::Syntax { offset, message: message.into() };
        let s = s.trim();
        let rest = s.strip_prefix('x').ok_or_else(|| syntax(0, "expected 'x'"))?;
        let (q_text, prefix_text) = match rest.find('(') {
            Some(open) => {
                let inner = rest[open + 1..]
                    .strip_suffix(')')
                    .ok_or_else(|| syntax(s.len(), "expected ')'"))?;
                (&rest[..open], Some(inner))
            }
            None => (rest, None),
        };
        let q = q_text.parse::<u32>().map_err(|_| syntax(1, "expected a subscript"))?;
        let prefix = match prefix_text {
            None => Vec::new(),
            Some(inner) if inner.contains(',') => inner
                .split(',')
                .map(|p| p.trim().parse::<u32>().map_err(|_| syntax(2 + q_text.len(), "bad prefix")))
                .collect::<Result<_>>()?,
            Some(inner) => inner
                .chars()
                .map(|c| c.to_digit(10).ok_or_else(|| syntax(2 + q_text.len(), "bad prefix")))
                .collect::<Result<_>>()?,
        };
        Ok(CoordinateName { q, prefix })
    }
}

/// Strips trailing prefix symbols equal to the subscript.
pub fn shortest_name(c: &CoordinateName) -> CoordinateName {
    let keep = c.prefix.iter().rposition(|&p| p != c.q).map_or(0, |i| i + 1);
    CoordinateName::new(c.q, c.prefix[..keep].to_vec())
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TableEntry {
    pub name: CoordinateName,
    pub shortest: bool,
    pub retained: bool,
}

/// The `(k + 1) × m` grid of coordinate names of a chart.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CoordinateTable {
    /// Row `j` holds `x_1(p_1..p_j), ..., x_m(p_1..p_j)`.
    pub rows: Vec<Vec<TableEntry>>,
}

impl CoordinateTable {
    pub fn entries(&self) -> impl Iterator<Item = &TableEntry> {
        self.rows.iter().flatten()
    }

    pub fn non_shortest(&self) -> Vec<&CoordinateName> {
        self.entries().filter(|e| !e.shortest).map(|e| &e.name).collect()
    }

    pub fn distinct_coordinates(&self) -> BTreeSet<CoordinateName> {
        self.entries().map(|e| e.name.shortest()).collect()
    }

    /// One row per line; non-shortest names in square brackets and the
    /// retained name marked with `*`.
    pub fn render(&self) -> String {
        let mut out = String::new();
        for row in &self.rows {
            let mut cells = row.iter().map(|e| {
                let mut cell = if e.shortest { e.name.to_string() } else { format!("[{}]", e.name) };
                if e.retained {
                    cell.push('*');
                }
                cell
            });
            out.push_str(&cells.join(" "));
            out.push('\n');
        }
        out
    }
}

pub fn coordinate_table(chart: &Chart) -> CoordinateTable {
    let rows = (0..=chart.len())
        .map(|j| {
            (1..=chart.dimension())
                .map(|q| {
                    let name = chart.name(q, j);
                    TableEntry {
                        shortest: name.is_shortest(),
                        retained: j >= 1 && q == chart.level(j),
                        name,
                    }
                })
                .collect()
        })
        .collect();
    CoordinateTable { rows }
}

fn check_compatible(w: &CodeWord, chart: &Chart) -> Result<()> {
    if w.len() != chart.len() {
        return Err(Error::LengthMismatch { left: w.len(), right: chart.len() });
    }
    if w.dimension() != chart.dimension() {
        return Err(Error::DimensionMismatch {
            left: w.dimension(),
            right: chart.dimension(),
        });
    }
    Ok(())
}

/// `I_W` meets the chart iff for every `j` with `n_j >= 1` the symbol
/// `p_{j-1}` does not recur among `p_j, ..., p_{j+n_j-1}`.
pub fn meets(w: &CodeWord, chart: &Chart) -> Result<bool> {
    check_compatible(w, chart)?;
    Ok(meets_unchecked(w, chart))
}

fn meets_unchecked(w: &CodeWord, chart: &Chart) -> bool {
    w.multiplicities().iter().filter(|&(_, n)| n >= 1).all(|(j, n)| {
        let anchor = chart.level(j - 1);
        (j..j + n).all(|p| chart.level(p) != anchor)
    })
}

/// The coordinates whose vanishing cuts out `I_W` in the chart, in order of
/// `j` and then depth.
pub fn equations(w: &CodeWord, chart: &Chart) -> Result<Vec<CoordinateName>> {
    check_compatible(w, chart)?;
    if !meets_unchecked(w, chart) {
        return Err(Error::DoesNotMeetChart);
    }
    let mut names = Vec::with_capacity(w.len());
    for (j, n) in w.multiplicities().iter() {
        let anchor = chart.level(j - 1);
        for p in j..j + n {
            names.push(chart.name(anchor, p).shortest());
        }
    }
    Ok(names)
}

/// One `name = 0` line per equation.
pub fn render_equations(names: &[CoordinateName]) -> String {
    names.iter().map(|n| format!("{n} = 0\n")).collect()
}

/// Greedy chart meeting `I_W`: `p_1 = 1`, then each `p_j` is the smallest
/// value avoiding `{ p_{i-1} : i ∈ A_j }`.
pub fn witness_chart(w: &CodeWord) -> Chart {
    let mut levels: Vec<u32> = Vec::with_capacity(w.len());
    for set in w.symbols() {
        let forbidden: BTreeSet<u32> = set.iter().map(|i| levels[i as usize - 2]).collect();
        let choice = (1..=w.dimension())
            .find(|p| !forbidden.contains(p))
            .expect("rule 3 leaves at least one free chart index");
        levels.push(choice);
    }
    Chart::new(levels, w.dimension()).expect("greedy levels lie in 1..=m")
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::codeword::parse;

    fn name(s: &str) -> CoordinateName {
        s.parse().unwrap()
    }

    #[test]
    fn shortest_names() {
        assert_eq!(shortest_name(&name("x2(32)")), name("x2(3)"));
        assert_eq!(shortest_name(&name("x3(32123)")), name("x3(3212)"));
        assert_eq!(shortest_name(&name("x1(321)")), name("x1(32)"));
        assert_eq!(shortest_name(&name("x1(111)")), name("x1"));
        assert_eq!(shortest_name(&name("x2")), name("x2"));
    }

    #[test]
    fn name_rendering() {
        assert_eq!(name("x3(3212)").to_string(), "x3(3212)");
        assert_eq!(CoordinateName::new(2, vec![10, 2]).to_string(), "x2(10,2)");
        assert_eq!(name("x2(10,2)"), CoordinateName::new(2, vec![10, 2]));
        assert!("y3".parse::<CoordinateName>().is_err());
        assert!("x3(32".parse::<CoordinateName>().is_err());
    }

    #[test]
    fn chart_parsing() {
        let c = Chart::parse("32123", 3).unwrap();
        assert_eq!(c.levels(), &[3, 2, 1, 2, 3]);
        assert_eq!(Chart::parse("3,2,1,2,3", 3).unwrap(), c);
        assert_eq!(c.to_string(), "3,2,1,2,3");
        assert!(Chart::parse("", 3).unwrap().is_empty());
        assert!(matches!(
            Chart::parse("324", 3),
            Err(Error::ChartLevelOutOfRange { position: 3, value: 4, m: 3 })
        ));
        assert!(matches!(Chart::parse("3,x", 3), Err(Error::Syntax { offset: 2, .. })));
        assert_eq!(Chart::parse("12,3", 12).unwrap().levels(), &[12, 3]);
    }

    #[test]
    fn sample_table() {
        let table = coordinate_table(&Chart::parse("32123", 3).unwrap());
        assert_eq!(table.rows.len(), 6);
        assert_eq!(table.entries().count(), 18);
        let boxed: Vec<String> = table.non_shortest().iter().map(|n| n.to_string()).collect();
        assert_eq!(boxed, ["x3(3)", "x2(32)", "x1(321)", "x2(3212)", "x3(32123)"]);
        assert_eq!(table.distinct_coordinates().len(), 13);
    }

    #[test]
    fn empty_chart_table() {
        let table = coordinate_table(&Chart::new(vec![], 4).unwrap());
        assert_eq!(table.rows.len(), 1);
        assert!(table.entries().all(|e| e.shortest && !e.retained));
        assert_eq!(table.render(), "x1 x2 x3 x4\n");
    }

    #[test]
    fn meets_and_equations() {
        let chart = Chart::parse("32123", 3).unwrap();
        let w = parse("R V{2} V{2} V{2,4} R", 3).unwrap();
        assert!(meets(&w, &chart).unwrap());
        let eqs = equations(&w, &chart).unwrap();
        assert_eq!(render_equations(&eqs), "x3(32) = 0\nx3(321) = 0\nx3(3212) = 0\nx1(3212) = 0\n");

        let deeper = parse("R V{2} V{2} V{2,4} V{2}", 3).unwrap();
        assert!(!meets(&deeper, &chart).unwrap());
        assert_eq!(equations(&deeper, &chart), Err(Error::DoesNotMeetChart));

        let all_r = CodeWord::all_r(5, 3).unwrap();
        assert!(meets(&all_r, &chart).unwrap());
        assert!(equations(&all_r, &chart).unwrap().is_empty());
    }

    #[test]
    fn mismatched_chart() {
        let w = parse("R V{2}", 3).unwrap();
        assert!(matches!(meets(&w, &Chart::parse("123", 3).unwrap()), Err(Error::LengthMismatch { .. })));
        assert!(matches!(meets(&w, &Chart::parse("12", 4).unwrap()), Err(Error::DimensionMismatch { .. })));
    }

    #[test]
    fn witness_examples() {
        let w = parse("R V{2} V{2} V{2,4} R", 3).unwrap();
        let c = witness_chart(&w);
        assert_eq!(c.levels(), &[1, 2, 2, 3, 1]);
        assert!(meets(&w, &c).unwrap());

        let c = witness_chart(&CodeWord::all_r(4, 5).unwrap());
        assert_eq!(c.levels(), &[1, 1, 1, 1]);

        let w = parse("R V{2} V{2,3}", 3).unwrap();
        let c = witness_chart(&w);
        assert_eq!(c.levels(), &[1, 2, 3]);
        assert!(meets(&w, &c).unwrap());
    }
}
