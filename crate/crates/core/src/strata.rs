//! Strata of the Hilbert scheme by Hilbert series: dimensions, extremal
//! strata and the comparability poset.

use std::fmt::Write as _;

use num_bigint::BigInt;
use num_traits::ToPrimitive;

use crate::betti::{enumerate_betti, minimal_betti, BettiPair};
use crate::castelnuovo::{self, CastelnuovoPoly};
use crate::hilbert::{compare, flat, triangular, AdmissibleSeries, SeriesOrder};
use crate::series::LaurentPoly;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct ExtDimension {
    pub c: i64,
    pub dim: i64,
}

/// Constant term of `(t^-1 - t^-2) s(t^-1) s(t)`.
pub fn c_from_laurent(s: &CastelnuovoPoly) -> BigInt {
    let sp = s.to_laurent();
    let factor = LaurentPoly::from_i64s(-2, &[-1, 1]);
    (&(&factor * &sp.invert_t()) * &sp).constant_term()
}

/// `sum_j s_j (s_{j-1} - s_{j-2})`.
pub fn c_from_differences(s: &CastelnuovoPoly) -> i64 {
    (0..s.values().len() as i64).map(|j| s.get(j) as i64 * (s.get(j - 1) as i64 - s.get(j - 2) as i64)).sum()
}

/// `dim Ext^1(I, I) = 1 + n + c`, and 0 for the free module (`n = 0`).
///
/// Panics if the two computations of `c` disagree.
pub fn ext_dimension(s: &CastelnuovoPoly) -> ExtDimension {
    let c = c_from_laurent(s).to_i64().expect("c is bounded by the weight");
    let rewritten = c_from_differences(s);
    assert_eq!(c, rewritten, "constant-term and difference formulas for c disagree on {s}");
    let n = s.weight() as i64;
    let dim = if n == 0 { 0 } else { 1 + n + c };
    ExtDimension { c, dim }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct StratumRecord {
    pub s: CastelnuovoPoly,
    pub h: AdmissibleSeries,
    pub dim: i64,
    pub c: i64,
    pub resolutions: Vec<BettiPair>,
    pub minimal: BettiPair,
    pub is_hmin: bool,
    pub is_hmax: bool,
}

impl StratumRecord {
    pub fn new(s: &CastelnuovoPoly) -> Self {
        let h = AdmissibleSeries::new(s);
        let ExtDimension { c, dim } = ext_dimension(s);
        let resolutions = enumerate_betti(h.numerator()).expect("rank one numerators are finite");
        let minimal = minimal_betti(h.numerator()).expect("admissible numerator");
        let n = s.weight();
        Self { s: s.clone(), dim, c, resolutions, minimal, is_hmin: *s == triangular(n), is_hmax: *s == flat(n), h }
    }

    pub fn invariant(&self) -> u64 {
        self.s.weight()
    }
}

/// One record per Castelnuovo polynomial of weight `n`, by descending
/// dimension and then enumeration order.
pub fn build_strata(n: u64) -> Vec<StratumRecord> {
    let mut records: Vec<StratumRecord> = castelnuovo::enumerate(n).iter().map(StratumRecord::new).collect();
    records.sort_by_key(|r| std::cmp::Reverse(r.dim));
    records
}

/// The stratum of dimension `2n`; `None` for `n = 0`.
pub fn max_stratum(n: u64) -> Option<StratumRecord> {
    if n == 0 {
        return None;
    }
    let mut top: Vec<_> = build_strata(n).into_iter().filter(|r| r.dim == 2 * n as i64).collect();
    assert_eq!(top.len(), 1, "expected a unique stratum of dimension 2n for n = {n}");
    top.pop()
}

/// Strata of one weight under the coefficientwise order on series. An edge
/// `lower -> upper` is a cover `h_lower < h_upper`: a potential
/// degeneration, not a proven closure relation.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct StrataPoset {
    pub n: u64,
    pub nodes: Vec<StratumRecord>,
    pub edges: Vec<(usize, usize)>,
    less: Vec<Vec<bool>>,
}

impl StrataPoset {
    pub fn less_than(&self, i: usize, j: usize) -> bool {
        self.less[i][j]
    }

    /// Unordered pairs `(i, j)`, `i < j`, that are not comparable.
    pub fn incomparable_pairs(&self) -> Vec<(usize, usize)> {
        let k = self.nodes.len();
        (0..k)
            .flat_map(|i| (i + 1..k).map(move |j| (i, j)))
            .filter(|&(i, j)| !self.less[i][j] && !self.less[j][i])
            .collect()
    }

    pub fn is_chain(&self) -> bool {
        self.incomparable_pairs().is_empty()
    }

    pub fn maximal(&self) -> Vec<usize> {
        (0..self.nodes.len()).filter(|&i| !(0..self.nodes.len()).any(|j| self.less[i][j])).collect()
    }

    pub fn minimal(&self) -> Vec<usize> {
        (0..self.nodes.len()).filter(|&i| !(0..self.nodes.len()).any(|j| self.less[j][i])).collect()
    }

    /// No `i < j < ... < i`.
    pub fn is_acyclic(&self) -> bool {
        let k = self.nodes.len();
        (0..k).all(|i| !self.less[i][i] && (0..k).all(|j| !(self.less[i][j] && self.less[j][i])))
    }

    pub fn to_dot(&self) -> String {
        let mut out = String::new();
        let _ = writeln!(out, "digraph strata_n{} {{", self.n);
        let _ = writeln!(out, "  label=\"potential degenerations, n = {}\";", self.n);
        out.push_str("  rankdir=BT;\n  node [shape=box];\n");
        for (i, r) in self.nodes.iter().enumerate() {
            let _ = writeln!(out, "  s{i} [label=\"s = {}\\ndim {}\"];", r.s, r.dim);
        }
        for (lo, hi) in &self.edges {
            let _ = writeln!(out, "  s{lo} -> s{hi};");
        }
        out.push_str("}\n");
        out
    }
}

pub fn build_poset(n: u64) -> StrataPoset {
    let nodes = build_strata(n);
    let k = nodes.len();
    let less: Vec<Vec<bool>> = (0..k)
        .map(|i| (0..k).map(|j| compare(&nodes[i].h, &nodes[j].h).expect("same weight") == SeriesOrder::Less).collect())
        .collect();
    let edges = (0..k)
        .flat_map(|i| (0..k).map(move |j| (i, j)))
        .filter(|&(i, j)| less[i][j] && !(0..k).any(|m| less[i][m] && less[m][j]))
        .collect();
    StrataPoset { n, nodes, edges, less }
}
