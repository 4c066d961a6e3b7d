//! Castelnuovo polynomials and diagrams.
//!
//! A Castelnuovo polynomial `s(t) = sum s_i t^i` has coefficients
//! `1, 2, ..., sigma` followed by a non-increasing, non-negative tail. Its
//! weight is `s(1)`. Left-aligning the rows of its diagram gives a partition
//! of the weight into distinct parts, and that bijection drives enumeration.

use std::fmt;

use num_bigint::{BigInt, BigUint};
use num_traits::{One, Zero};
use serde::Serialize;

use crate::series::LaurentPoly;
use crate::{Error, Result};

#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub struct CastelnuovoPoly {
    values: Vec<u64>,
    weight: u64,
    sigma: u64,
}

impl CastelnuovoPoly {
    /// The weight 0 polynomial `s = 0`.
    pub fn empty() -> Self {
        Self { values: Vec::new(), weight: 0, sigma: 0 }
    }

    /// Checks the Castelnuovo shape, trimming trailing zeros first.
    pub fn validate(values: &[i64]) -> Result<Self> {
        let len = values.iter().rposition(|&v| v != 0).map_or(0, |i| i + 1);
        let values = &values[..len];
        let mut rising = true;
        let mut prev = 0i64;
        for (i, &v) in values.iter().enumerate() {
            if v < 0 {
                return Err(Error::NonCastelnuovo { index: i, reason: "negative value" });
            }
            if rising && v == i as i64 + 1 {
                prev = v;
                continue;
            }
            rising = false;
            if v > prev {
                return Err(Error::NonCastelnuovo {
                    index: i,
                    reason: if i == 0 { "s_0 must be 1" } else { "tail increases" },
                });
            }
            prev = v;
        }
        let values: Vec<u64> = values.iter().map(|&v| v as u64).collect();
        Ok(Self::from_valid(values))
    }

    fn from_valid(values: Vec<u64>) -> Self {
        let weight = values.iter().sum();
        let sigma = values.iter().copied().max().unwrap_or(0);
        Self { values, weight, sigma }
    }

    /// Parses a comma separated coefficient list such as `"1,2,1"`; the empty
    /// string is the weight 0 polynomial.
    pub fn parse(text: &str) -> Result<Self> {
        let text = text.trim();
        if text.is_empty() {
            return Ok(Self::empty());
        }
        let mut values = Vec::new();
        for (index, field) in text.split(',').enumerate() {
            let v =
                field.trim().parse::<i64>().map_err(|_| Error::NonCastelnuovo { index, reason: "not an integer" })?;
            values.push(v);
        }
        Self::validate(&values)
    }

    pub fn values(&self) -> &[u64] {
        &self.values
    }

    /// `s_i`, zero outside `0..len` (including negative indices).
    pub fn get(&self, i: i64) -> u64 {
        usize::try_from(i).ok().and_then(|i| self.values.get(i)).copied().unwrap_or(0)
    }

    pub fn weight(&self) -> u64 {
        self.weight
    }

    pub fn sigma(&self) -> u64 {
        self.sigma
    }

    /// Degree of `s(t)`; `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.values.len().checked_sub(1)
    }

    pub fn to_laurent(&self) -> LaurentPoly {
        LaurentPoly::new(0, self.values.iter().map(|&v| BigInt::from(v)).collect())
    }

    /// Row lengths of the left-aligned diagram, bottom row first.
    pub fn to_distinct_partition(&self) -> Vec<u64> {
        (1..=self.sigma).map(|k| self.values.iter().filter(|&&v| v >= k).count() as u64).collect()
    }

    /// Inverse of [`Self::to_distinct_partition`]; `parts` must be strictly
    /// decreasing and positive.
    pub fn from_distinct_partition(parts: &[u64]) -> Result<Self> {
        if let Some(i) = parts.windows(2).position(|w| w[0] <= w[1]) {
            return Err(Error::NonCastelnuovo { index: i + 1, reason: "parts not strictly decreasing" });
        }
        if parts.last() == Some(&0) {
            return Err(Error::NonCastelnuovo { index: parts.len() - 1, reason: "zero part" });
        }
        // Row k (0-based) occupies columns k ..= k + parts[k] - 1.
        let len = parts.iter().enumerate().map(|(k, &p)| k + p as usize).max().unwrap_or(0);
        let mut values = vec![0u64; len];
        for (k, &p) in parts.iter().enumerate() {
            for v in &mut values[k..k + p as usize] {
                *v += 1;
            }
        }
        Ok(Self::from_valid(values))
    }

    /// Staircase of `[]` cells, top row first; column `i` has height `s_i`.
    pub fn render_diagram(&self) -> String {
        (1..=self.sigma)
            .rev()
            .map(|k| {
                let row: String = self.values.iter().map(|&v| if v >= k { "[]" } else { "  " }).collect();
                row.trim_end().to_string()
            })
            .collect::<Vec<_>>()
            .join("\n")
    }
}

impl fmt::Display for CastelnuovoPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        self.to_laurent().fmt(f)
    }
}

/// All Castelnuovo polynomials of the given weight, in descending
/// lexicographic order of their coefficient vectors.
pub fn enumerate(weight: u64) -> Vec<CastelnuovoPoly> {
    let mut out: Vec<CastelnuovoPoly> = distinct_partitions(weight)
        .iter()
        .map(|parts| CastelnuovoPoly::from_distinct_partition(parts).expect("distinct parts"))
        .collect();
    out.sort_by(|a, b| b.values.cmp(&a.values));
    out
}

/// Partitions of `n` into distinct parts, each listed in decreasing order.
pub fn distinct_partitions(n: u64) -> Vec<Vec<u64>> {
    fn go(rest: u64, max: u64, cur: &mut Vec<u64>, out: &mut Vec<Vec<u64>>) {
        if rest == 0 {
            out.push(cur.clone());
            return;
        }
        for part in (1..=max.min(rest)).rev() {
            cur.push(part);
            go(rest - part, part - 1, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    go(n, n, &mut Vec::new(), &mut out);
    out
}

/// Number of partitions of `n` into distinct parts (0/1 knapsack count).
pub fn count_distinct_part_partitions(n: u64) -> BigUint {
    let n = n as usize;
    let mut ways = vec![BigUint::zero(); n + 1];
    ways[0] = BigUint::one();
    for part in 1..=n {
        for total in (part..=n).rev() {
            let add = ways[total - part].clone();
            ways[total] += add;
        }
    }
    ways.swap_remove(n)
}

/// Number of partitions of `n` into odd parts (unbounded knapsack count).
pub fn count_odd_part_partitions(n: u64) -> BigUint {
    let n = n as usize;
    let mut ways = vec![BigUint::zero(); n + 1];
    ways[0] = BigUint::one();
    for part in (1..=n).step_by(2) {
        for total in part..=n {
            let add = ways[total - part].clone();
            ways[total] += add;
        }
    }
    ways.swap_remove(n)
}
