//! Admissible Hilbert series `h(t) = 1/(1-t)^3 - s(t)/(1-t) = q(t)/(1-t)^3`.

use std::cmp::Ordering;

use num_bigint::BigInt;
use num_traits::{One, Signed, ToPrimitive, Zero};
use serde::Serialize;

use crate::castelnuovo::{self, CastelnuovoPoly};
use crate::series::{LaurentPoly, TruncatedSeries};
use crate::{Error, Result};

/// Extra expansion degrees kept beyond `deg s` by default.
pub const DEFAULT_WINDOW_MARGIN: usize = 8;

/// Smallest margin over `deg s` at which the expansion has stabilized.
const MIN_WINDOW_MARGIN: usize = 3;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct AdmissibleSeries {
    numerator: LaurentPoly,
    invariant: u64,
    source: CastelnuovoPoly,
    expansion: TruncatedSeries,
}

impl AdmissibleSeries {
    /// Series of `s` expanded to the default window `deg s + 8`.
    pub fn new(s: &CastelnuovoPoly) -> Self {
        let window = default_window(s);
        series_from_castelnuovo(s, window).expect("default window is large enough")
    }

    pub fn numerator(&self) -> &LaurentPoly {
        &self.numerator
    }

    pub fn invariant(&self) -> u64 {
        self.invariant
    }

    pub fn source(&self) -> &CastelnuovoPoly {
        &self.source
    }

    pub fn expansion(&self) -> &TruncatedSeries {
        &self.expansion
    }

    /// Same series with a different expansion window.
    pub fn with_window(&self, window: usize) -> Result<Self> {
        series_from_castelnuovo(&self.source, window)
    }

    /// `dim A_m - dim I_m = s_0 + ... + s_m`, the Hilbert function of the
    /// quotient `A/I`.
    pub fn quotient_hilbert_function(&self, max_degree: usize) -> Vec<u64> {
        let mut acc = 0;
        (0..=max_degree as i64)
            .map(|m| {
                acc += self.source.get(m);
                acc
            })
            .collect()
    }
}

fn default_window(s: &CastelnuovoPoly) -> usize {
    s.degree().unwrap_or(0) + DEFAULT_WINDOW_MARGIN
}

/// `q(t) = 1 - (1-t)^2 s(t)`.
pub fn numerator_of(s: &CastelnuovoPoly) -> LaurentPoly {
    &LaurentPoly::one() - &(&LaurentPoly::one_minus_t().pow(2) * &s.to_laurent())
}

pub fn series_from_castelnuovo(s: &CastelnuovoPoly, window: usize) -> Result<AdmissibleSeries> {
    let required = s.degree().unwrap_or(0) + MIN_WINDOW_MARGIN;
    if window < required {
        return Err(Error::WindowTooSmall { window, required });
    }
    let numerator = numerator_of(s);
    let expansion = numerator.divide_one_minus_t_pow(3, window)?;
    Ok(AdmissibleSeries { numerator, invariant: s.weight(), source: s.clone(), expansion })
}

/// Recovers `s(t) = (1 - q(t))/(1-t)^2` and checks that it is Castelnuovo.
pub fn castelnuovo_from_series(q: &LaurentPoly) -> Result<CastelnuovoPoly> {
    let rank = q.eval_one();
    if !rank.is_one() {
        return Err(Error::NotAdmissible(format!("q(1) = {rank}, expected rank one")));
    }
    let s = (&LaurentPoly::one() - q)
        .div_exact_one_minus_t_pow(2)
        .ok_or_else(|| Error::NotAdmissible("q is not normalized: (1-t)^2 does not divide 1 - q".into()))?;
    if s.lowest_degree().is_some_and(|lo| lo < 0) {
        return Err(Error::NotAdmissible(format!("s(t) = {s} has negative powers of t")));
    }
    let values = (0..=s.degree().unwrap_or(-1))
        .map(|d| s.coeff(d).to_i64().ok_or_else(|| Error::Overflow(s.coeff(d).to_string())))
        .collect::<Result<Vec<_>>>()?;
    CastelnuovoPoly::validate(&values).map_err(|e| Error::NotAdmissible(format!("s(t) = {s} is not Castelnuovo ({e})")))
}

/// Partial-sum test: `sum_{i <= l} q_i` vanishes below some `sigma` and is
/// positive from `sigma` on. Returns that `sigma`.
pub fn is_admissible_numerator(q: &LaurentPoly) -> Option<i64> {
    let sigma = q.lowest_degree()?;
    let top = q.degree()?;
    let mut partial = BigInt::zero();
    for l in sigma..=top {
        partial += q.coeff(l);
        if !partial.is_positive() {
            return None;
        }
    }
    Some(sigma)
}

/// `h = r/(1-t)^3 + a/(1-t)^2 + b/(1-t) + f(t)`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SeriesDecomposition {
    pub rank: BigInt,
    pub a: BigInt,
    pub b: BigInt,
    pub tail: LaurentPoly,
}

impl SeriesDecomposition {
    pub fn is_normalized(&self) -> bool {
        self.a.is_zero()
    }

    /// `-b` for normalized series.
    pub fn invariant(&self) -> Option<BigInt> {
        self.is_normalized().then(|| -&self.b)
    }

    /// `q = r + a(1-t) + b(1-t)^2 + f(1-t)^3`.
    pub fn numerator(&self) -> LaurentPoly {
        let u = LaurentPoly::one_minus_t();
        let c = |x: &BigInt, k: u32| &LaurentPoly::monomial(x.clone(), 0) * &u.pow(k);
        let parts = [c(&self.rank, 0), c(&self.a, 1), c(&self.b, 2), &self.tail * &u.pow(3)];
        parts.iter().fold(LaurentPoly::zero(), |acc, p| &acc + p)
    }
}

/// Splits `q/(1-t)^3` by repeated exact division by `1 - t`.
pub fn decompose(q: &LaurentPoly) -> SeriesDecomposition {
    let (q1, rank) = q.div_rem_one_minus_t();
    let (q2, a) = q1.div_rem_one_minus_t();
    let (tail, b) = q2.div_rem_one_minus_t();
    SeriesDecomposition { rank, a, b, tail }
}

/// `(h_min, h_max)` for weight `n`.
pub fn h_min_max(n: u64) -> (AdmissibleSeries, AdmissibleSeries) {
    (AdmissibleSeries::new(&triangular(n)), AdmissibleSeries::new(&flat(n)))
}

/// `1, 2, ..., k, v` with `k(k+1)/2 + v = n` and `0 <= v <= k`.
pub fn triangular(n: u64) -> CastelnuovoPoly {
    let mut values = Vec::new();
    let mut rest = n;
    let mut next = 1;
    while rest >= next {
        values.push(next);
        rest -= next;
        next += 1;
    }
    values.push(rest);
    CastelnuovoPoly::validate(&values.iter().map(|&v| v as i64).collect::<Vec<_>>())
        .expect("triangular shape is Castelnuovo")
}

/// `1 + t + ... + t^(n-1)`.
pub fn flat(n: u64) -> CastelnuovoPoly {
    CastelnuovoPoly::validate(&vec![1; n as usize]).expect("constant shape is Castelnuovo")
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum SeriesOrder {
    Less,
    Equal,
    Greater,
    Incomparable,
}

/// Coefficientwise comparison of two series of the same invariant.
///
/// `h1 - h2 = (s2 - s1)/(1-t)`, whose coefficients are partial sums of
/// `s2 - s1` and are zero past both degrees, so the comparison is exact.
pub fn compare(h1: &AdmissibleSeries, h2: &AdmissibleSeries) -> Result<SeriesOrder> {
    if h1.invariant != h2.invariant {
        return Err(Error::InvariantMismatch(h1.invariant, h2.invariant));
    }
    let len = h1.source.values().len().max(h2.source.values().len()) as i64;
    let (mut less, mut greater) = (false, false);
    let mut diff = 0i128;
    for m in 0..len {
        diff += i128::from(h2.source.get(m)) - i128::from(h1.source.get(m));
        match diff.cmp(&0) {
            Ordering::Less => less = true,
            Ordering::Greater => greater = true,
            Ordering::Equal => {}
        }
    }
    Ok(match (less, greater) {
        (false, false) => SeriesOrder::Equal,
        (true, false) => SeriesOrder::Less,
        (false, true) => SeriesOrder::Greater,
        (true, true) => SeriesOrder::Incomparable,
    })
}

/// All admissible series of weight `n`, in enumeration order.
pub fn admissible_series(n: u64) -> Vec<AdmissibleSeries> {
    castelnuovo::enumerate(n).iter().map(AdmissibleSeries::new).collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    fn s(v: &[i64]) -> CastelnuovoPoly {
        CastelnuovoPoly::validate(v).unwrap()
    }

    fn head(h: &AdmissibleSeries, k: usize) -> Vec<i64> {
        h.expansion().coeffs()[..k].iter().map(|c| c.to_i64().unwrap()).collect()
    }

    #[test]
    fn series_examples() {
        let h = AdmissibleSeries::new(&s(&[1]));
        assert_eq!(head(&h, 5), [0, 2, 5, 9, 14]);
        let h = AdmissibleSeries::new(&CastelnuovoPoly::empty());
        assert_eq!(h.numerator(), &LaurentPoly::one());
        assert_eq!(head(&h, 6), [1, 3, 6, 10, 15, 21]);
        let h = AdmissibleSeries::new(&s(&[1, 2, 1]));
        assert_eq!(h.numerator(), &LaurentPoly::from_i64s(2, &[2, 0, -1]));
        assert_eq!(head(&h, 5), [0, 0, 2, 6, 11]);
    }

    #[test]
    fn window_checks() {
        let p = s(&[1, 2, 1]);
        assert_eq!(series_from_castelnuovo(&p, 4), Err(Error::WindowTooSmall { window: 4, required: 5 }));
        let h = series_from_castelnuovo(&p, 5).unwrap();
        assert!(h.expansion().coeff(6).is_err());
        assert_eq!(h.with_window(20).unwrap().expansion().window(), 20);
    }

    #[test]
    fn inverse_examples() {
        let q = LaurentPoly::from_i64s(2, &[2, 0, -1]);
        assert_eq!(castelnuovo_from_series(&q).unwrap(), s(&[1, 2, 1]));
        assert_eq!(castelnuovo_from_series(&LaurentPoly::one()).unwrap(), CastelnuovoPoly::empty());
        assert!(matches!(castelnuovo_from_series(&LaurentPoly::from_i64s(0, &[1, 1])), Err(Error::NotAdmissible(_))));
        // rank one but not normalized: q = t
        assert!(castelnuovo_from_series(&LaurentPoly::monomial(1, 1)).is_err());
        // normalized but s = 1 + 3t is not Castelnuovo
        let bad = numerator_of_values(&[1, 3]);
        assert!(castelnuovo_from_series(&bad).is_err());
    }

    fn numerator_of_values(v: &[i64]) -> LaurentPoly {
        &LaurentPoly::one() - &(&LaurentPoly::one_minus_t().pow(2) * &LaurentPoly::from_i64s(0, v))
    }

    #[test]
    fn admissibility_examples() {
        assert_eq!(is_admissible_numerator(&LaurentPoly::from_i64s(2, &[2, 0, -1])), Some(2));
        assert_eq!(is_admissible_numerator(&LaurentPoly::one()), Some(0));
        assert_eq!(is_admissible_numerator(&LaurentPoly::from_i64s(1, &[2, -3, 2])), None);
        assert_eq!(is_admissible_numerator(&LaurentPoly::zero()), None);
        // rank two, lowest term in negative degree
        assert_eq!(is_admissible_numerator(&LaurentPoly::from_i64s(-1, &[1, 0, 1])), Some(-1));
    }

    #[test]
    fn decompose_examples() {
        let d = decompose(&LaurentPoly::from_i64s(2, &[2, 0, -1]));
        assert_eq!((d.rank.clone(), d.a.clone(), d.b.clone()), (1.into(), 0.into(), (-4).into()));
        assert_eq!(d.invariant(), Some(BigInt::from(4)));
        let d = decompose(&LaurentPoly::one());
        assert_eq!((d.rank, d.a, d.b, d.tail), (1.into(), 0.into(), 0.into(), LaurentPoly::zero()));
        let q = numerator_of_values(&[1, 1]);
        let d = decompose(&q);
        assert_eq!((d.rank.clone(), d.a.clone(), d.b.clone()), (1.into(), 0.into(), (-2).into()));
        assert_eq!(d.numerator(), q);
    }

    #[test]
    fn decompose_non_normalized() {
        // q = t: shifting a normalized module changes a
        let q = LaurentPoly::monomial(1, 1);
        let d = decompose(&q);
        assert!(!d.is_normalized());
        assert_eq!(d.invariant(), None);
        assert_eq!(d.numerator(), q);
    }

    #[test]
    fn extremal_series() {
        let (lo, hi) = h_min_max(3);
        assert_eq!(lo.source(), &s(&[1, 2]));
        assert_eq!(hi.source(), &s(&[1, 1, 1]));
        let (lo, hi) = h_min_max(1);
        assert_eq!(lo, hi);
        assert_eq!(lo.source(), &s(&[1]));
        let (lo, hi) = h_min_max(6);
        assert_eq!(lo.source(), &s(&[1, 2, 3]));
        assert_eq!(hi.source(), &s(&[1, 1, 1, 1, 1, 1]));
        assert_eq!(triangular(4), s(&[1, 2, 1]));
        assert_eq!(triangular(0), CastelnuovoPoly::empty());
    }

    #[test]
    fn compare_examples() {
        let (lo, hi) = h_min_max(3);
        assert_eq!(compare(&hi, &lo).unwrap(), SeriesOrder::Greater);
        assert_eq!(compare(&lo, &hi).unwrap(), SeriesOrder::Less);
        assert_eq!(compare(&lo, &lo).unwrap(), SeriesOrder::Equal);
        let b = AdmissibleSeries::new(&s(&[1, 2, 2, 1]));
        let c = AdmissibleSeries::new(&s(&[1, 2, 1, 1, 1]));
        assert_eq!(compare(&b, &c).unwrap(), SeriesOrder::Less);
        assert_eq!(compare(&b, &lo), Err(Error::InvariantMismatch(6, 3)));
    }

    #[test]
    fn compare_agrees_with_expansions() {
        // oracle: compare the truncated windows directly, with a window past both degrees
        for n in 0..=10 {
            let all = admissible_series(n);
            for x in &all {
                for y in &all {
                    let w = 20;
                    let (ex, ey) = (x.with_window(w).unwrap(), y.with_window(w).unwrap());
                    let pairs: Vec<_> = ex.expansion().coeffs().iter().zip(ey.expansion().coeffs()).collect();
                    let le = pairs.iter().all(|(a, b)| a <= b);
                    let ge = pairs.iter().all(|(a, b)| a >= b);
                    let expect = match (le, ge) {
                        (true, true) => SeriesOrder::Equal,
                        (true, false) => SeriesOrder::Less,
                        (false, true) => SeriesOrder::Greater,
                        (false, false) => SeriesOrder::Incomparable,
                    };
                    assert_eq!(compare(x, y).unwrap(), expect);
                }
            }
        }
    }

    #[test]
    fn quotient_function_weight_three() {
        let (lo, hi) = h_min_max(3);
        assert_eq!(hi.quotient_hilbert_function(5), [1, 2, 3, 3, 3, 3]);
        assert_eq!(lo.quotient_hilbert_function(5), [1, 3, 3, 3, 3, 3]);
    }
}
