//! Betti numbers of projective dimension one resolutions
//! `0 -> (+)_i A(-i)^{b_i} -> (+)_i A(-i)^{a_i} -> M -> 0`.
//!
//! Legal Betti numbers for a numerator `q` are characterized by three
//! equivalent condition systems: bounds on `a` in terms of partial sums of
//! `q`, partial-sum inequalities between `a` and `b`, and membership of the
//! two main diagonals in the ladder `L_{a,b}`. [`check_conditions`]
//! evaluates all three independently.

use std::collections::BTreeMap;
use std::fmt::Write as _;

use num_bigint::{BigInt, BigUint};
use num_traits::{One, ToPrimitive};
use serde::Serialize;

use crate::castelnuovo::CastelnuovoPoly;
use crate::hilbert::is_admissible_numerator;
use crate::series::LaurentPoly;
use crate::{Error, Result};

/// Generator counts `a` and relation counts `b`, keyed by degree. Zero
/// entries are never stored.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub struct BettiPair {
    a: BTreeMap<i64, u64>,
    b: BTreeMap<i64, u64>,
}

impl BettiPair {
    pub fn new(a: impl IntoIterator<Item = (i64, u64)>, b: impl IntoIterator<Item = (i64, u64)>) -> Self {
        fn collect(it: impl IntoIterator<Item = (i64, u64)>) -> BTreeMap<i64, u64> {
            let mut m = BTreeMap::new();
            for (d, c) in it {
                *m.entry(d).or_insert(0) += c;
            }
            m.retain(|_, c| *c > 0);
            m
        }
        Self { a: collect(a), b: collect(b) }
    }

    pub fn a(&self) -> &BTreeMap<i64, u64> {
        &self.a
    }

    pub fn b(&self) -> &BTreeMap<i64, u64> {
        &self.b
    }

    pub fn a_at(&self, d: i64) -> u64 {
        self.a.get(&d).copied().unwrap_or(0)
    }

    pub fn b_at(&self, d: i64) -> u64 {
        self.b.get(&d).copied().unwrap_or(0)
    }

    /// Total number of generators.
    pub fn generators(&self) -> u64 {
        self.a.values().sum()
    }

    /// Total number of relations.
    pub fn relations(&self) -> u64 {
        self.b.values().sum()
    }

    /// `sum_i (a_i - b_i) t^i`.
    pub fn numerator(&self) -> LaurentPoly {
        let terms = self
            .a
            .iter()
            .map(|(&d, &c)| LaurentPoly::monomial(c, d))
            .chain(self.b.iter().map(|(&d, &c)| LaurentPoly::monomial(-BigInt::from(c), d)));
        terms.fold(LaurentPoly::zero(), |acc, t| &acc + &t)
    }

    /// No degree carries both a generator and a relation.
    pub fn is_minimal(&self) -> bool {
        self.a.keys().all(|d| !self.b.contains_key(d))
    }

    /// Smallest and largest degree in either support.
    fn degree_range(&self) -> Option<(i64, i64)> {
        let keys = self.a.keys().chain(self.b.keys());
        let lo = keys.clone().min()?;
        let hi = keys.max()?;
        Some((*lo, *hi))
    }
}

/// `S(c)`: degree `i` repeated `c_i` times, ascending. Index 1 of the
/// returned ladder coordinates is position 0 here.
pub fn expand_sequence(c: &BTreeMap<i64, u64>) -> Vec<i64> {
    c.iter().flat_map(|(&d, &k)| std::iter::repeat_n(d, k as usize)).collect()
}

/// `L_{a,b} = {(alpha, beta) in [1,m] x [1,n] | S(a)_alpha < S(b)_beta}`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Ladder {
    rows: usize,
    cols: usize,
    sa: Vec<i64>,
    sb: Vec<i64>,
    cells: Vec<bool>,
}

impl Ladder {
    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn sa(&self) -> &[i64] {
        &self.sa
    }

    pub fn sb(&self) -> &[i64] {
        &self.sb
    }

    /// Membership of the 1-indexed cell `(alpha, beta)`; cells outside the
    /// rectangle are not members.
    pub fn contains(&self, alpha: usize, beta: usize) -> bool {
        (1..=self.rows).contains(&alpha)
            && (1..=self.cols).contains(&beta)
            && self.cells[(alpha - 1) * self.cols + beta - 1]
    }

    pub fn len(&self) -> usize {
        self.cells.iter().filter(|&&c| c).count()
    }

    pub fn is_empty(&self) -> bool {
        self.len() == 0
    }

    /// `(alpha, beta) not in L  =>  (alpha+1, beta), (alpha, beta-1) not in L`.
    pub fn is_closed(&self) -> bool {
        (1..=self.rows).all(|al| {
            (1..=self.cols)
                .all(|be| self.contains(al, be) || (!self.contains(al + 1, be) && !self.contains(al, be - 1)))
        })
    }
}

pub fn build_ladder(pair: &BettiPair) -> Ladder {
    let sa = expand_sequence(&pair.a);
    let sb = expand_sequence(&pair.b);
    let cells = sa.iter().flat_map(|x| sb.iter().map(move |y| x < y)).collect();
    let ladder = Ladder { rows: sa.len(), cols: sb.len(), sa, sb, cells };
    assert!(ladder.is_closed(), "ladder closure failed for {pair:?}");
    ladder
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct ConditionVerdicts {
    pub set1: bool,
    pub set2: bool,
    pub set3: bool,
}

impl ConditionVerdicts {
    pub fn agree(&self) -> bool {
        self.set1 == self.set2 && self.set2 == self.set3
    }

    pub fn all(&self) -> bool {
        self.set1 && self.set2 && self.set3
    }
}

pub fn check_conditions(pair: &BettiPair) -> ConditionVerdicts {
    ConditionVerdicts {
        set1: numerator_bounds_hold(pair),
        set2: partial_sums_hold(pair),
        set3: ladder_diagonals_hold(pair),
    }
}

/// `a_l = 0` below the lowest term `q_sigma` of `q = a - b`, `a_sigma = q_sigma > 0`
/// and `max(q_l, 0) <= a_l < sum_{i <= l} q_i` above it.
fn numerator_bounds_hold(pair: &BettiPair) -> bool {
    let Some((lo, hi)) = pair.degree_range() else { return false };
    let q = |d: i64| i128::from(pair.a_at(d)) - i128::from(pair.b_at(d));
    let Some(sigma) = (lo..=hi).find(|&d| q(d) != 0) else { return false };
    if (lo..sigma).any(|d| pair.a_at(d) != 0) {
        return false;
    }
    let a_sigma = i128::from(pair.a_at(sigma));
    if a_sigma != q(sigma) || a_sigma <= 0 {
        return false;
    }
    let mut partial = q(sigma);
    for l in sigma + 1..=hi + 1 {
        partial += q(l);
        let a_l = i128::from(pair.a_at(l));
        if a_l < q(l).max(0) || a_l >= partial {
            return false;
        }
    }
    true
}

/// With `a_sigma` the lowest non-zero generator count: `b_i = 0` for
/// `i <= sigma` and `sum_{i <= l} b_i < sum_{i < l} a_i` for `l > sigma`.
fn partial_sums_hold(pair: &BettiPair) -> bool {
    let Some((&sigma, _)) = pair.a.first_key_value() else { return false };
    let Some((lo, hi)) = pair.degree_range() else { return false };
    if (lo..=sigma).any(|d| pair.b_at(d) != 0) {
        return false;
    }
    let (mut b_sum, mut a_below) = (0u128, u128::from(pair.a_at(sigma)));
    for l in sigma + 1..=hi + 1 {
        b_sum += u128::from(pair.b_at(l));
        if b_sum >= a_below {
            return false;
        }
        a_below += u128::from(pair.a_at(l));
    }
    true
}

/// `n < m` and every cell with `beta >= alpha - 1` lies in `L_{a,b}`.
fn ladder_diagonals_hold(pair: &BettiPair) -> bool {
    if pair.relations() >= pair.generators() {
        return false;
    }
    let ladder = build_ladder(pair);
    (1..=ladder.rows()).all(|al| (1..=ladder.cols()).all(|be| be + 1 < al || ladder.contains(al, be)))
}

fn coeff_i128(q: &LaurentPoly, d: i64) -> Result<i128> {
    let c = q.coeff(d);
    c.to_i128().ok_or_else(|| Error::Overflow(c.to_string()))
}

/// Every legal Betti pair for a rank one numerator `q`.
///
/// Higher rank numerators admit infinitely many pairs; use
/// [`enumerate_betti_up_to`] for those.
pub fn enumerate_betti(q: &LaurentPoly) -> Result<Vec<BettiPair>> {
    let rank = q.eval_one();
    if rank > BigInt::one() {
        return Err(Error::UnboundedEnumeration { rank: rank.to_string() });
    }
    enumerate_betti_up_to(q, q.degree().unwrap_or(0))
}

/// Legal Betti pairs for `q` whose generators all sit in degrees `<= cutoff`.
///
/// Pairs are ordered lexicographically on `(a_{sigma+1}, a_{sigma+2}, ...)`.
pub fn enumerate_betti_up_to(q: &LaurentPoly, cutoff: i64) -> Result<Vec<BettiPair>> {
    let sigma = is_admissible_numerator(q)
        .ok_or_else(|| Error::NotAdmissible(format!("partial sums of {q} are not eventually positive")))?;
    let top = q.degree().unwrap_or(sigma);
    if cutoff < top {
        return Err(Error::CutoffTooLow { cutoff, degree: top });
    }
    let q_sigma = coeff_i128(q, sigma)?;
    // Allowed range [lo, hi) of a_l for each l in sigma+1..=cutoff.
    let mut ranges = Vec::new();
    let mut partial = q_sigma;
    for l in sigma + 1..=cutoff {
        let q_l = coeff_i128(q, l)?;
        partial += q_l;
        ranges.push((l, q_l, q_l.max(0), partial));
    }
    let to_u64 = |x: i128| u64::try_from(x).map_err(|_| Error::Overflow(x.to_string()));
    let mut out = Vec::new();
    let mut choice: Vec<i128> = ranges.iter().map(|r| r.2).collect();
    loop {
        let mut a = vec![(sigma, to_u64(q_sigma)?)];
        let mut b = Vec::new();
        for (&(l, q_l, _, _), &a_l) in ranges.iter().zip(&choice) {
            a.push((l, to_u64(a_l)?));
            b.push((l, to_u64(a_l - q_l)?));
        }
        out.push(BettiPair::new(a, b));
        // odometer, last degree fastest
        let Some(pos) = (0..choice.len()).rev().find(|&i| choice[i] + 1 < ranges[i].3) else {
            break;
        };
        choice[pos] += 1;
        for i in pos + 1..choice.len() {
            choice[i] = ranges[i].2;
        }
    }
    Ok(out)
}

/// `prod_{l > sigma} [1 + min(s_{l-1} - s_l, s_{l-2} - s_{l-1})]`.
pub fn count_resolutions(s: &CastelnuovoPoly) -> BigUint {
    let sigma = s.sigma() as i64;
    let len = s.values().len() as i64;
    let v = |i: i64| i128::from(s.get(i));
    (sigma + 1..=len + 1).fold(BigUint::one(), |acc, l| {
        let factor = 1 + (v(l - 1) - v(l)).min(v(l - 2) - v(l - 1));
        acc * BigUint::from(factor as u128)
    })
}

/// The unique legal pair with disjoint supports: `(q_i, 0)` or `(0, -q_i)`.
pub fn minimal_betti(q: &LaurentPoly) -> Result<BettiPair> {
    if is_admissible_numerator(q).is_none() {
        return Err(Error::NotAdmissible(format!("partial sums of {q} are not eventually positive")));
    }
    let mut a = Vec::new();
    let mut b = Vec::new();
    for (d, c) in q.terms() {
        let c = c.to_i128().ok_or_else(|| Error::Overflow(c.to_string()))?;
        let mag = u64::try_from(c.unsigned_abs()).map_err(|_| Error::Overflow(c.to_string()))?;
        if c > 0 {
            a.push((d, mag));
        } else {
            b.push((d, mag));
        }
    }
    Ok(BettiPair::new(a, b))
}

#[derive(Debug, Clone, Copy, Default, PartialEq, Eq)]
pub enum Glyphs {
    #[default]
    Unicode,
    Ascii,
}

impl Glyphs {
    fn arrow(self) -> &'static str {
        match self {
            Glyphs::Unicode => " → ",
            Glyphs::Ascii => " -> ",
        }
    }

    fn plus(self) -> &'static str {
        match self {
            Glyphs::Unicode => " ⊕ ",
            Glyphs::Ascii => " + ",
        }
    }
}

fn render_free(terms: &BTreeMap<i64, u64>, glyphs: Glyphs) -> String {
    terms
        .iter()
        .map(|(&d, &c)| {
            let mut s = match d {
                0 => "A".to_string(),
                d if d > 0 => format!("A(-{d})"),
                d => format!("A({})", -d),
            };
            if c > 1 {
                let _ = write!(s, "^{c}");
            }
            s
        })
        .collect::<Vec<_>>()
        .join(glyphs.plus())
}

/// `0 → (+)A(-i)^{b_i} → (+)A(-i)^{a_i} → I → 0`, empty relation module omitted.
pub fn render_resolution(pair: &BettiPair, glyphs: Glyphs) -> String {
    let mut parts = vec!["0".to_string()];
    if !pair.b.is_empty() {
        parts.push(render_free(&pair.b, glyphs));
    }
    parts.push(render_free(&pair.a, glyphs));
    parts.push("I".into());
    parts.push("0".into());
    parts.join(glyphs.arrow())
}
