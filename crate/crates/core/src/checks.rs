//! Identity suite over all weights up to a bound.

use num_bigint::BigUint;

use crate::betti::{check_conditions, count_resolutions, enumerate_betti, minimal_betti};
use crate::castelnuovo::{self, count_distinct_part_partitions, count_odd_part_partitions};
use crate::hilbert::{castelnuovo_from_series, decompose, is_admissible_numerator, numerator_of};
use crate::strata::{build_strata, c_from_differences, c_from_laurent};

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CheckOutcome {
    pub name: &'static str,
    pub passed: bool,
    /// First counterexample, if any.
    pub detail: Option<String>,
}

fn run(name: &'static str, max_weight: u64, f: impl Fn(u64) -> Option<String>) -> CheckOutcome {
    let detail = (0..=max_weight).find_map(f);
    CheckOutcome { name, passed: detail.is_none(), detail }
}

pub fn run_all(max_weight: u64) -> Vec<CheckOutcome> {
    vec![
        run("partition counts", max_weight, |n| {
            let k = BigUint::from(castelnuovo::enumerate(n).len());
            let (d, o) = (count_distinct_part_partitions(n), count_odd_part_partitions(n));
            (k != d || d != o).then(|| format!("n = {n}: {k} diagrams, {d} distinct, {o} odd"))
        }),
        run("resolution count", max_weight, |n| {
            castelnuovo::enumerate(n).into_iter().find_map(|s| {
                let listed = enumerate_betti(&numerator_of(&s)).map(|v| v.len()).unwrap_or(0);
                let closed = count_resolutions(&s);
                (BigUint::from(listed) != closed).then(|| format!("s = {s}: {listed} enumerated, {closed} by product"))
            })
        }),
        run("sigma coincidence", max_weight, |n| {
            castelnuovo::enumerate(n).into_iter().find_map(|s| {
                let sigma = is_admissible_numerator(&numerator_of(&s));
                (sigma != Some(s.sigma() as i64)).then(|| format!("s = {s}: numerator sigma {sigma:?}"))
            })
        }),
        run("series round trip", max_weight, |n| {
            castelnuovo::enumerate(n).into_iter().find_map(|s| {
                let q = numerator_of(&s);
                let back = castelnuovo_from_series(&q).ok();
                let d = decompose(&q);
                let normalized = d.rank == 1.into() && d.invariant() == Some(n.into());
                (back.as_ref() != Some(&s) || !normalized).then(|| format!("s = {s}"))
            })
        }),
        run("ladder conditions", max_weight, |n| {
            castelnuovo::enumerate(n).into_iter().find_map(|s| {
                let q = numerator_of(&s);
                let pairs = enumerate_betti(&q).ok()?;
                let minimal = minimal_betti(&q).ok()?;
                let bad = pairs.iter().find(|p| !check_conditions(p).all() || p.numerator() != q);
                let min_ok = pairs.iter().filter(|p| p.is_minimal()).eq([&minimal]);
                (bad.is_some() || !min_ok).then(|| format!("s = {s}"))
            })
        }),
        run("c formulas", max_weight, |n| {
            castelnuovo::enumerate(n).into_iter().find_map(|s| {
                let (a, b) = (c_from_laurent(&s), c_from_differences(&s));
                (a != b.into()).then(|| format!("s = {s}: {a} vs {b}"))
            })
        }),
        run("dimension bounds", max_weight, |n| {
            let strata = build_strata(n);
            if n == 0 {
                return (strata.len() != 1 || strata[0].dim != 0).then(|| "n = 0".to_string());
            }
            let (lo, hi) = ((n as i64 + 2).min(2 * n as i64), 2 * n as i64);
            let out_of_range = strata.iter().find(|r| r.dim < lo || r.dim > hi);
            let top = strata.iter().filter(|r| r.dim == hi).count();
            let equality = strata.iter().all(|r| (r.dim == hi) == r.is_hmin && (r.dim == lo) == r.is_hmax);
            (out_of_range.is_some() || top != 1 || !equality).then(|| format!("n = {n}"))
        }),
    ]
}
