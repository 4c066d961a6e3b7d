//! Exact integer Laurent polynomials and truncated power series.
//!
//! Every value is kept in canonical form: the first and last stored
//! coefficients are non-zero, and the zero polynomial is the empty vector
//! with lowest degree 0. Structural equality is therefore mathematical
//! equality.

use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};

use crate::{Error, Result};

/// A finitely supported integer sequence `sum_d c_d t^d`, `d` in `Z`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Default)]
pub struct LaurentPoly {
    lowest: i64,
    coeffs: Vec<BigInt>,
}

impl LaurentPoly {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn one() -> Self {
        Self::monomial(1, 0)
    }

    /// `c t^degree`.
    pub fn monomial(c: impl Into<BigInt>, degree: i64) -> Self {
        Self::new(degree, vec![c.into()])
    }

    /// `1 - t`, the factor every Hilbert series is built from.
    pub fn one_minus_t() -> Self {
        Self::from_i64s(0, &[1, -1])
    }

    /// Builds `coeffs[0] t^lowest + coeffs[1] t^(lowest+1) + ...` and trims it.
    pub fn new(lowest: i64, coeffs: Vec<BigInt>) -> Self {
        let mut p = Self { lowest, coeffs };
        p.trim();
        p
    }

    pub fn from_i64s(lowest: i64, coeffs: &[i64]) -> Self {
        Self::new(lowest, coeffs.iter().map(|&c| BigInt::from(c)).collect())
    }

    fn trim(&mut self) {
        while self.coeffs.last().is_some_and(Zero::is_zero) {
            self.coeffs.pop();
        }
        let lead = self.coeffs.iter().take_while(|c| c.is_zero()).count();
        if lead == self.coeffs.len() {
            self.coeffs.clear();
            self.lowest = 0;
        } else if lead > 0 {
            self.coeffs.drain(..lead);
            self.lowest += lead as i64;
        }
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// Lowest degree carrying a non-zero coefficient; `None` for zero.
    pub fn lowest_degree(&self) -> Option<i64> {
        (!self.is_zero()).then_some(self.lowest)
    }

    /// Highest degree carrying a non-zero coefficient; `None` for zero.
    pub fn degree(&self) -> Option<i64> {
        (!self.is_zero()).then(|| self.lowest + self.coeffs.len() as i64 - 1)
    }

    /// Stored coefficients, starting at [`Self::lowest_degree`].
    pub fn coeffs(&self) -> &[BigInt] {
        &self.coeffs
    }

    /// Coefficient of `t^d` (zero outside the support).
    pub fn coeff(&self, d: i64) -> BigInt {
        let idx = d - self.lowest;
        if idx < 0 {
            return BigInt::zero();
        }
        self.coeffs.get(idx as usize).cloned().unwrap_or_default()
    }

    pub fn constant_term(&self) -> BigInt {
        self.coeff(0)
    }

    /// Iterates `(degree, coefficient)` over the non-zero terms.
    pub fn terms(&self) -> impl Iterator<Item = (i64, &BigInt)> + '_ {
        self.coeffs.iter().enumerate().filter(|(_, c)| !c.is_zero()).map(move |(i, c)| (self.lowest + i as i64, c))
    }

    /// Value at `t = 1`, i.e. the sum of the coefficients.
    pub fn eval_one(&self) -> BigInt {
        self.coeffs.iter().sum()
    }

    /// Substitution `t -> t^-1`.
    pub fn invert_t(&self) -> Self {
        match self.degree() {
            None => Self::zero(),
            Some(deg) => Self::new(-deg, self.coeffs.iter().rev().cloned().collect()),
        }
    }

    /// Multiplication by `t^k`.
    pub fn shift(&self, k: i64) -> Self {
        if self.is_zero() {
            return Self::zero();
        }
        Self { lowest: self.lowest + k, coeffs: self.coeffs.clone() }
    }

    pub fn pow(&self, k: u32) -> Self {
        (0..k).fold(Self::one(), |acc, _| &acc * self)
    }

    /// Writes `self = r + (1 - t) * quotient` with `r = self(1)`, returning
    /// `(quotient, r)`.
    pub fn div_rem_one_minus_t(&self) -> (Self, BigInt) {
        let r = self.eval_one();
        let reduced = self - &Self::monomial(r.clone(), 0);
        let Some(lo) = reduced.lowest_degree() else {
            return (Self::zero(), r);
        };
        // (1 - t) Q = P  <=>  Q_k = sum_{i <= k} P_i; the prefix sums vanish from deg P on.
        let deg = reduced.degree().unwrap_or(lo);
        let mut acc = BigInt::zero();
        let mut q = Vec::with_capacity((deg - lo) as usize);
        for d in lo..deg {
            acc += reduced.coeff(d);
            q.push(acc.clone());
        }
        (Self::new(lo, q), r)
    }

    /// Exact division by `(1 - t)^k`; `None` when a remainder is left.
    pub fn div_exact_one_minus_t_pow(&self, k: u32) -> Option<Self> {
        let mut cur = self.clone();
        for _ in 0..k {
            let (q, r) = cur.div_rem_one_minus_t();
            if !r.is_zero() {
                return None;
            }
            cur = q;
        }
        Some(cur)
    }

    /// First `window + 1` coefficients of `self / (1 - t)^k`, computed by `k`
    /// rounds of prefix sums.
    pub fn divide_one_minus_t_pow(&self, k: u32, window: usize) -> Result<TruncatedSeries> {
        if let Some(lo) = self.lowest_degree() {
            if lo < 0 {
                return Err(Error::NegativeDegree(lo));
            }
        }
        let mut coeffs: Vec<BigInt> = (0..=window as i64).map(|d| self.coeff(d)).collect();
        for _ in 0..k {
            let mut acc = BigInt::zero();
            for c in coeffs.iter_mut() {
                acc += &*c;
                *c = acc.clone();
            }
        }
        Ok(TruncatedSeries { coeffs })
    }
}

impl Add for &LaurentPoly {
    type Output = LaurentPoly;

    fn add(self, rhs: &LaurentPoly) -> LaurentPoly {
        if self.is_zero() {
            return rhs.clone();
        }
        if rhs.is_zero() {
            return self.clone();
        }
        let lo = self.lowest.min(rhs.lowest);
        let hi = self.degree().max(rhs.degree()).unwrap_or(lo);
        let coeffs = (lo..=hi).map(|d| self.coeff(d) + rhs.coeff(d)).collect();
        LaurentPoly::new(lo, coeffs)
    }
}

impl Neg for &LaurentPoly {
    type Output = LaurentPoly;

    fn neg(self) -> LaurentPoly {
        LaurentPoly { lowest: self.lowest, coeffs: self.coeffs.iter().map(|c| -c).collect() }
    }
}

impl Sub for &LaurentPoly {
    type Output = LaurentPoly;

    fn sub(self, rhs: &LaurentPoly) -> LaurentPoly {
        self + &(-rhs)
    }
}

impl Mul for &LaurentPoly {
    type Output = LaurentPoly;

    fn mul(self, rhs: &LaurentPoly) -> LaurentPoly {
        if self.is_zero() || rhs.is_zero() {
            return LaurentPoly::zero();
        }
        let mut out = vec![BigInt::zero(); self.coeffs.len() + rhs.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in rhs.coeffs.iter().enumerate() {
                out[i + j] += a * b;
            }
        }
        LaurentPoly::new(self.lowest + rhs.lowest, out)
    }
}

macro_rules! forward_owned {
    ($($tr:ident $m:ident),*) => {$(
        impl $tr for LaurentPoly {
            type Output = LaurentPoly;
            fn $m(self, rhs: LaurentPoly) -> LaurentPoly {
                (&self).$m(&rhs)
            }
        }
    )*};
}
forward_owned!(Add add, Sub sub, Mul mul);

impl fmt::Display for LaurentPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return f.write_str("0");
        }
        for (k, (d, c)) in self.terms().enumerate() {
            let mag = c.abs();
            match (k, c.is_negative()) {
                (0, true) => f.write_str("-")?,
                (0, false) => {}
                (_, true) => f.write_str(" - ")?,
                (_, false) => f.write_str(" + ")?,
            }
            if d == 0 || !mag.is_one() {
                write!(f, "{mag}")?;
            }
            match d {
                0 => {}
                1 => f.write_str("t")?,
                _ => write!(f, "t^{d}")?,
            }
        }
        Ok(())
    }
}

/// Coefficients of a power series in degrees `0..=window`.
///
/// Queries beyond the window are errors: nothing is known about them.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TruncatedSeries {
    coeffs: Vec<BigInt>,
}

impl TruncatedSeries {
    pub fn window(&self) -> usize {
        self.coeffs.len() - 1
    }

    pub fn coeff(&self, degree: i64) -> Result<&BigInt> {
        usize::try_from(degree)
            .ok()
            .and_then(|d| self.coeffs.get(d))
            .ok_or(Error::OutOfWindow { degree, window: self.window() })
    }

    pub fn coeffs(&self) -> &[BigInt] {
        &self.coeffs
    }

    /// The window as a polynomial (everything above it dropped).
    pub fn to_poly(&self) -> LaurentPoly {
        LaurentPoly::new(0, self.coeffs.clone())
    }
}
