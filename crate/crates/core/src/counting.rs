//! Exact counts of code words.
//!
//! `N(k, r)` is the number of words of length `k` whose last subscript has
//! `r` elements. It obeys
//!
//! ```text
//! N(1, 0) = 1,  N(1, r) = 0 for r > 0
//! N(k, r) = sum_{i = max(r-1, 0)}^{m-1} C(i+1, r) N(k-1, i)
//! ```
//!
//! The `r = 0` case reduces to the total number of words of length `k - 1`.

use num_bigint::BigUint;
use num_traits::{One, Zero};
use serde::Serialize;

use crate::error::{Error, Result};

/// `N(k, r)` for `0 <= r <= m - 1`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CountTable {
    k: usize,
    m: u32,
    entries: Vec<BigUint>,
}

#[derive(Serialize)]
struct CountJson {
    k: usize,
    m: u32,
    #[serde(rename = "N")]
    n: Vec<String>,
    total: String,
}

impl CountTable {
    pub fn k(&self) -> usize {
        self.k
    }

    pub fn m(&self) -> u32 {
        self.m
    }

    pub fn entries(&self) -> &[BigUint] {
        &self.entries
    }

    /// `N(k, r)`; zero outside the stored range.
    pub fn get(&self, r: usize) -> BigUint {
        self.entries.get(r).cloned().unwrap_or_else(BigUint::zero)
    }

    pub fn total(&self) -> BigUint {
        self.entries.iter().sum()
    }

    /// `{"k":..,"m":..,"N":[..],"total":".."}` with every count as a decimal string.
    pub fn to_json(&self) -> serde_json::Value {
        serde_json::to_value(CountJson {
            k: self.k,
            m: self.m,
            n: self.entries.iter().map(BigUint::to_string).collect(),
            total: self.total().to_string(),
        })
        .expect("count tables always serialize")
    }
}

/// Pascal's triangle up to row `rows`.
fn binomials(rows: usize) -> Vec<Vec<BigUint>> {
    let mut table: Vec<Vec<BigUint>> = Vec::with_capacity(rows + 1);
    for n in 0..=rows {
        let mut row = vec![BigUint::one(); n + 1];
        for r in 1..n {
            row[r] = &table[n - 1][r - 1] + &table[n - 1][r];
        }
        table.push(row);
    }
    table
}

pub fn count_table(k: usize, m: u32) -> Result<CountTable> {
    if m < 2 {
        return Err(Error::DimensionTooSmall { m });
    }
    if k == 0 {
        return Err(Error::EmptyWord);
    }
    let width = m as usize;
    let binom = binomials(width);
    let mut row = vec![BigUint::zero(); width];
    row[0] = BigUint::one();
    for _ in 2..=k {
        let mut next = vec![BigUint::zero(); width];
        next[0] = row.iter().sum();
        for (r, slot) in next.iter_mut().enumerate().skip(1) {
            for (i, prev) in row.iter().enumerate().skip(r - 1) {
                if !prev.is_zero() {
                    *slot += &binom[i + 1][r] * prev;
                }
            }
        }
        row = next;
    }
    Ok(CountTable { k, m, entries: row })
}

/// Number of valid words of length `k` for base dimension `m`.
pub fn count(k: usize, m: u32) -> Result<BigUint> {
    Ok(count_table(k, m)?.total())
}

/// Unsigned Stirling number of the first kind, via
/// `c(n+1, j) = n c(n, j) + c(n, j-1)` with `c(0, 0) = 1`.
pub fn stirling_first(n: usize, j: usize) -> BigUint {
    if j > n {
        return BigUint::zero();
    }
    let mut row = vec![BigUint::one()];
    for size in 0..n {
        let mut next = vec![BigUint::zero(); size + 2];
        for (idx, value) in row.iter().enumerate() {
            next[idx] += value * BigUint::from(size);
            next[idx + 1] += value;
        }
        row = next;
    }
    row[j].clone()
}
