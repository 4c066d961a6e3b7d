//! Finite-field witnesses for legal Betti numbers.
//!
//! For a Betti pair `(a, b)` we sample a graded matrix
//! `phi: (+)A(-i)^{b_i} -> (+)A(-i)^{a_i}` over `A = F_p[x,y,z]` whose
//! entry `(alpha, beta)` is a random form of degree `S(b)_beta - S(a)_alpha`
//! when the cell lies in the ladder, and zero otherwise. The cokernel has
//! Hilbert function `sum_i (a_i - b_i) dim A_{d-i}` in every degree where
//! `phi` is injective; we check that degree by degree with exact Gaussian
//! elimination over `F_p`.

use num_traits::ToPrimitive;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;
use serde::Serialize;

use crate::betti::{build_ladder, check_conditions, enumerate_betti, BettiPair, Ladder};
use crate::castelnuovo::CastelnuovoPoly;
use crate::hilbert::numerator_of;
use crate::{Error, Result};

/// `dim_k A_d = (d+1)(d+2)/2` for `d >= 0`, else 0.
pub fn monomial_count(d: i64) -> u64 {
    if d < 0 {
        0
    } else {
        let d = d as u64;
        (d + 1) * (d + 2) / 2
    }
}

/// Position of `x^i y^j z^(d-i-j)` in the degree-lex basis of `A_d`
/// (x > y > z, so `x^d` comes first).
fn monomial_index(d: u32, i: u32, j: u32) -> usize {
    let r = (d - i) as usize;
    r * (r + 1) / 2 + (d - i - j) as usize
}

/// Exponents of the degree `d` basis, in index order.
fn monomials(d: u32) -> Vec<(u32, u32, u32)> {
    (0..=d).rev().flat_map(|i| (0..=d - i).rev().map(move |j| (i, j, d - i - j))).collect()
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Default)]
#[serde(rename_all = "kebab-case")]
pub enum Support {
    /// Every ladder cell may be non-zero.
    #[default]
    FullLadder,
    /// Only the diagonals `beta = alpha` and `beta = alpha - 1`.
    TwoDiagonal,
}

impl Support {
    fn allows(self, alpha: usize, beta: usize) -> bool {
        match self {
            Support::FullLadder => true,
            Support::TwoDiagonal => beta == alpha || beta + 1 == alpha,
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct GradedMatrixSpec {
    pub pair: BettiPair,
    pub prime: u64,
    pub support: Support,
    pub seed: u64,
}

/// A homogeneous form: its degree and coefficients in the degree-lex basis.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Form {
    pub degree: u32,
    pub coeffs: Vec<u64>,
}

impl Form {
    pub fn is_zero(&self) -> bool {
        self.coeffs.iter().all(|&c| c == 0)
    }
}

/// Graded map whose column `beta` is the image of the relation generator of
/// degree `S(b)_beta`, written in the generators of degrees `S(a)`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GradedMatrix {
    prime: u64,
    row_degrees: Vec<i64>,
    col_degrees: Vec<i64>,
    entries: Vec<Option<Form>>,
}

impl GradedMatrix {
    pub fn rows(&self) -> usize {
        self.row_degrees.len()
    }

    pub fn cols(&self) -> usize {
        self.col_degrees.len()
    }

    pub fn prime(&self) -> u64 {
        self.prime
    }

    /// Entry at `(alpha, beta)`, 1-indexed; `None` for structural zeros.
    pub fn entry(&self, alpha: usize, beta: usize) -> Option<&Form> {
        self.entries[(alpha - 1) * self.cols() + beta - 1].as_ref()
    }

    /// Scalar matrix of the map in degree `d`, rows indexed by the degree `d`
    /// part of the target, columns by the degree `d` part of the source.
    pub fn block(&self, d: i64) -> FpMatrix {
        let row_offsets = offsets(&self.row_degrees, d);
        let col_offsets = offsets(&self.col_degrees, d);
        let mut m = FpMatrix::zeros(*row_offsets.last().unwrap(), *col_offsets.last().unwrap(), self.prime);
        for (beta, &deg_b) in self.col_degrees.iter().enumerate() {
            let Ok(shift) = u32::try_from(d - deg_b) else { continue };
            for (k, (i, j, _)) in monomials(shift).into_iter().enumerate() {
                let col = col_offsets[beta] + k;
                for (alpha, &row_offset) in row_offsets.iter().take(self.rows()).enumerate() {
                    let Some(form) = &self.entries[alpha * self.cols() + beta] else { continue };
                    let target = shift + form.degree;
                    for (t, (fi, fj, _)) in monomials(form.degree).into_iter().enumerate() {
                        let c = form.coeffs[t];
                        if c == 0 {
                            continue;
                        }
                        let row = row_offset + monomial_index(target, i + fi, j + fj);
                        m.add_to(row, col, c);
                    }
                }
            }
        }
        m
    }
}

/// Start of each generator's block in degree `d`, plus the total at the end.
fn offsets(degrees: &[i64], d: i64) -> Vec<usize> {
    let mut out = Vec::with_capacity(degrees.len() + 1);
    let mut acc = 0;
    out.push(0);
    for &g in degrees {
        acc += monomial_count(d - g) as usize;
        out.push(acc);
    }
    out
}

/// Dense matrix over `F_p`, `p < 2^31`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FpMatrix {
    rows: usize,
    cols: usize,
    p: u64,
    data: Vec<u64>,
}

impl FpMatrix {
    pub fn zeros(rows: usize, cols: usize, p: u64) -> Self {
        Self { rows, cols, p, data: vec![0; rows * cols] }
    }

    pub fn from_rows(rows: &[Vec<u64>], p: u64) -> Self {
        let cols = rows.first().map_or(0, Vec::len);
        let data = rows.iter().flat_map(|r| r.iter().map(|&x| x % p)).collect();
        Self { rows: rows.len(), cols, p, data }
    }

    pub fn shape(&self) -> (usize, usize) {
        (self.rows, self.cols)
    }

    pub fn get(&self, r: usize, c: usize) -> u64 {
        self.data[r * self.cols + c]
    }

    fn add_to(&mut self, r: usize, c: usize, v: u64) {
        let x = &mut self.data[r * self.cols + c];
        *x = (*x + v) % self.p;
    }

    /// Rank by row reduction.
    pub fn rank(&self) -> usize {
        let p = self.p;
        let mut a = self.data.clone();
        let (rows, cols) = (self.rows, self.cols);
        let mut rank = 0;
        for col in 0..cols {
            if rank == rows {
                break;
            }
            let Some(pivot) = (rank..rows).find(|&r| a[r * cols + col] != 0) else { continue };
            if pivot != rank {
                for c in col..cols {
                    a.swap(pivot * cols + c, rank * cols + c);
                }
            }
            let inv = mod_pow(a[rank * cols + col], p - 2, p);
            for c in col..cols {
                a[rank * cols + c] = a[rank * cols + c] * inv % p;
            }
            for r in rank + 1..rows {
                let f = a[r * cols + col];
                if f == 0 {
                    continue;
                }
                for c in col..cols {
                    let sub = f * a[rank * cols + c] % p;
                    a[r * cols + c] = (a[r * cols + c] + p - sub) % p;
                }
            }
            rank += 1;
        }
        rank
    }
}

fn mod_pow(mut base: u64, mut exp: u64, p: u64) -> u64 {
    let mut acc = 1;
    base %= p;
    while exp > 0 {
        if exp & 1 == 1 {
            acc = acc * base % p;
        }
        base = base * base % p;
        exp >>= 1;
    }
    acc
}

fn check_prime(p: u64) -> Result<()> {
    let odd_prime = p > 2
        && p < (1 << 31)
        && p % 2 == 1
        && (3..).step_by(2).take_while(|d| d * d <= p).all(|d| !p.is_multiple_of(d));
    if odd_prime {
        Ok(())
    } else {
        Err(Error::BadPrime(p))
    }
}

/// Samples a ladder-supported matrix for `spec.pair`, deterministically in
/// `spec.seed`.
pub fn sample_matrix(spec: &GradedMatrixSpec) -> Result<GradedMatrix> {
    check_prime(spec.prime)?;
    if !check_conditions(&spec.pair).all() {
        return Err(Error::IllegalBetti);
    }
    let ladder: Ladder = build_ladder(&spec.pair);
    let mut rng = ChaCha8Rng::seed_from_u64(spec.seed);
    let mut entries = Vec::with_capacity(ladder.rows() * ladder.cols());
    for alpha in 1..=ladder.rows() {
        for beta in 1..=ladder.cols() {
            if !spec.support.allows(alpha, beta) {
                entries.push(None);
                continue;
            }
            if !ladder.contains(alpha, beta) {
                if spec.support == Support::TwoDiagonal {
                    return Err(Error::InfeasibleSupport { alpha, beta });
                }
                entries.push(None);
                continue;
            }
            let degree = (ladder.sb()[beta - 1] - ladder.sa()[alpha - 1]) as u32;
            let coeffs = (0..monomial_count(degree.into())).map(|_| rng.gen_range(0..spec.prime)).collect();
            entries.push(Some(Form { degree, coeffs }));
        }
    }
    Ok(GradedMatrix {
        prime: spec.prime,
        row_degrees: ladder.sa().to_vec(),
        col_degrees: ladder.sb().to_vec(),
        entries,
    })
}

/// `dim coker` in degrees `0..=max_degree`.
pub fn cokernel_hilbert_function(matrix: &GradedMatrix, max_degree: usize) -> Vec<u64> {
    (0..=max_degree as i64).map(|d| degree_row(matrix, d, 0).computed).collect()
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct DegreeRow {
    pub degree: i64,
    pub predicted: i64,
    pub computed: u64,
    pub injective: bool,
}

fn degree_row(matrix: &GradedMatrix, d: i64, predicted: i64) -> DegreeRow {
    let block = matrix.block(d);
    let (rows, cols) = block.shape();
    let rank = block.rank();
    DegreeRow { degree: d, predicted, computed: (rows - rank) as u64, injective: rank == cols }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct WitnessReport {
    pub spec: GradedMatrixSpec,
    pub max_degree: usize,
    pub degrees: Vec<DegreeRow>,
    pub success: bool,
}

impl WitnessReport {
    /// Degrees where the computed value differs from the predicted one.
    pub fn mismatches(&self) -> impl Iterator<Item = &DegreeRow> {
        self.degrees.iter().filter(|r| r.computed as i64 != r.predicted)
    }
}

/// Samples `spec` and compares its cokernel with
/// `sum_i (a_i - b_i) t^i / (1-t)^3` in degrees `0..=max_degree`.
pub fn check_witness(spec: &GradedMatrixSpec, max_degree: usize) -> Result<WitnessReport> {
    let matrix = sample_matrix(spec)?;
    let expansion = spec.pair.numerator().divide_one_minus_t_pow(3, max_degree)?;
    let degrees: Vec<DegreeRow> = expansion
        .coeffs()
        .iter()
        .enumerate()
        .map(|(d, c)| {
            let predicted = c.to_i64().ok_or_else(|| Error::Overflow(c.to_string()))?;
            Ok(degree_row(&matrix, d as i64, predicted))
        })
        .collect::<Result<_>>()?;
    let success = degrees.iter().all(|r| r.injective && r.computed as i64 == r.predicted);
    Ok(WitnessReport { spec: spec.clone(), max_degree, degrees, success })
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct PairOutcome {
    pub pair: BettiPair,
    pub successes: usize,
    pub reports: Vec<WitnessReport>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct WitnessRun {
    pub s: Vec<u64>,
    pub prime: u64,
    pub trials: usize,
    pub max_degree: usize,
    pub seed: u64,
    pub support: Support,
    pub pairs: Vec<PairOutcome>,
}

impl WitnessRun {
    pub fn all_succeeded(&self) -> bool {
        self.pairs.iter().all(|p| p.successes == self.trials)
    }
}

/// Runs `trials` samples for every legal Betti pair of `s`. Trial `k` uses
/// seed `seed + k`, so parallel and serial runs agree.
pub fn run_witness(
    s: &CastelnuovoPoly,
    trials: usize,
    prime: u64,
    max_degree: usize,
    seed: u64,
    support: Support,
) -> Result<WitnessRun> {
    check_prime(prime)?;
    let pairs = enumerate_betti(&numerator_of(s))?;
    let pairs = pairs
        .into_iter()
        .map(|pair| {
            let reports = (0..trials)
                .into_par_iter()
                .map(|k| {
                    let spec =
                        GradedMatrixSpec { pair: pair.clone(), prime, support, seed: seed.wrapping_add(k as u64) };
                    check_witness(&spec, max_degree)
                })
                .collect::<Result<Vec<_>>>()?;
            let successes = reports.iter().filter(|r| r.success).count();
            Ok(PairOutcome { pair, successes, reports })
        })
        .collect::<Result<Vec<_>>>()?;
    Ok(WitnessRun { s: s.values().to_vec(), prime, trials, max_degree, seed, support, pairs })
}
