//! Per-weight tables of strata: series, Castelnuovo polynomial, stratum
//! dimension and every legal minimal resolution.

use std::fmt::Write as _;
use std::str::FromStr;

use num_bigint::BigInt;
use num_traits::{ToPrimitive, Zero};
use serde::{Serialize, Serializer};

use crate::betti::{render_resolution, BettiPair, Glyphs};
use crate::strata::{build_strata, StratumRecord};
use crate::{Error, Result};

pub const SCHEMA_VERSION: u32 = 1;

/// Number of series terms shown per row, counted from the first non-zero one.
pub const SERIES_TERMS: usize = 6;

pub const CSV_HEADER: [&str; 5] = ["n", "s", "dim", "num_resolutions", "resolutions"];

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Format {
    Text,
    Json,
    Csv,
}

impl FromStr for Format {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "text" => Ok(Format::Text),
            "json" => Ok(Format::Json),
            "csv" => Ok(Format::Csv),
            other => Err(Error::UnknownFormat(other.to_string())),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SeriesTerm {
    pub degree: i64,
    pub coeff: BigInt,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TableRow {
    pub record: StratumRecord,
    pub series: Vec<SeriesTerm>,
}

impl TableRow {
    fn new(record: StratumRecord) -> Self {
        let lowest = record.h.numerator().lowest_degree().unwrap_or(0).max(0) as usize;
        let window = record.h.expansion().window().max(lowest + SERIES_TERMS);
        let h = record.h.with_window(window).expect("window only grows");
        let series = h
            .expansion()
            .coeffs()
            .iter()
            .enumerate()
            .skip(lowest)
            .filter(|(_, c)| !c.is_zero())
            .take(SERIES_TERMS)
            .map(|(d, c)| SeriesTerm { degree: d as i64, coeff: c.clone() })
            .collect();
        Self { record, series }
    }

    pub fn n(&self) -> u64 {
        self.record.invariant()
    }

    /// `2t^2 + 6t^3 + ... + ...`.
    pub fn series_text(&self) -> String {
        let mut out = String::new();
        for (k, term) in self.series.iter().enumerate() {
            if k > 0 {
                out.push_str(" + ");
            }
            let coeff =
                if term.coeff == BigInt::from(1) && term.degree != 0 { String::new() } else { term.coeff.to_string() };
            match term.degree {
                0 => write!(out, "{coeff}"),
                1 => write!(out, "{coeff}t"),
                d => write!(out, "{coeff}t^{d}"),
            }
            .expect("write to String");
        }
        out.push_str(" + ...");
        out
    }

    pub fn resolution_texts(&self, glyphs: Glyphs) -> Vec<String> {
        self.record.resolutions.iter().map(|p| render_resolution(p, glyphs)).collect()
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Table {
    pub max_weight: u64,
    pub rows: Vec<TableRow>,
}

/// Every stratum of every weight `0..=max_weight`.
pub fn appendix_table(max_weight: u64) -> Table {
    let rows = (0..=max_weight).flat_map(build_strata).map(TableRow::new).collect();
    Table { max_weight, rows }
}

pub fn emit(table: &Table, format: Format, glyphs: Glyphs) -> Result<String> {
    match format {
        Format::Text => Ok(emit_text(table, glyphs)),
        Format::Json => Ok(emit_json(table, glyphs)),
        Format::Csv => emit_csv(table, glyphs),
    }
}

fn emit_text(table: &Table, glyphs: Glyphs) -> String {
    let mut out = String::new();
    let mut last_n = None;
    for row in &table.rows {
        if last_n != Some(row.n()) {
            if last_n.is_some() {
                out.push('\n');
            }
            let _ = writeln!(out, "n = {}", row.n());
            last_n = Some(row.n());
        } else {
            out.push_str("  --\n");
        }
        let _ = writeln!(out, "  h_I(t) = {}", row.series_text());
        let _ = writeln!(out, "  s_I(t) = {}", row.record.s);
        for line in row.record.s.render_diagram().lines() {
            let _ = writeln!(out, "    {line}");
        }
        let _ = writeln!(out, "  dim Ext^1(I,I) = {}", row.record.dim);
        for r in row.resolution_texts(glyphs) {
            let _ = writeln!(out, "  {r}");
        }
    }
    out
}

fn big_number<S: Serializer>(x: &BigInt, ser: S) -> std::result::Result<S::Ok, S::Error> {
    match x.to_i64() {
        Some(v) => ser.serialize_i64(v),
        None => ser.serialize_str(&x.to_string()),
    }
}

#[derive(Serialize)]
struct JsonTable<'a> {
    schema_version: u32,
    max_weight: u64,
    strata: Vec<JsonStratum<'a>>,
}

#[derive(Serialize)]
struct JsonTerm {
    degree: i64,
    #[serde(serialize_with = "big_number")]
    coeff: BigInt,
}

#[derive(Serialize)]
struct JsonResolution<'a> {
    a: &'a std::collections::BTreeMap<i64, u64>,
    b: &'a std::collections::BTreeMap<i64, u64>,
    minimal: bool,
    text: String,
}

#[derive(Serialize)]
struct JsonStratum<'a> {
    n: u64,
    s: &'a [u64],
    s_poly: String,
    sigma: u64,
    series: Vec<JsonTerm>,
    dim: i64,
    c: i64,
    is_hmin: bool,
    is_hmax: bool,
    resolutions: Vec<JsonResolution<'a>>,
}

fn json_resolution(p: &BettiPair, glyphs: Glyphs) -> JsonResolution<'_> {
    JsonResolution { a: p.a(), b: p.b(), minimal: p.is_minimal(), text: render_resolution(p, glyphs) }
}

fn emit_json(table: &Table, glyphs: Glyphs) -> String {
    let strata = table
        .rows
        .iter()
        .map(|row| {
            let r = &row.record;
            JsonStratum {
                n: row.n(),
                s: r.s.values(),
                s_poly: r.s.to_string(),
                sigma: r.s.sigma(),
                series: row.series.iter().map(|t| JsonTerm { degree: t.degree, coeff: t.coeff.clone() }).collect(),
                dim: r.dim,
                c: r.c,
                is_hmin: r.is_hmin,
                is_hmax: r.is_hmax,
                resolutions: r.resolutions.iter().map(|p| json_resolution(p, glyphs)).collect(),
            }
        })
        .collect();
    let doc = JsonTable { schema_version: SCHEMA_VERSION, max_weight: table.max_weight, strata };
    let mut s = serde_json::to_string_pretty(&doc).expect("plain data serializes");
    s.push('\n');
    s
}

fn emit_csv(table: &Table, glyphs: Glyphs) -> Result<String> {
    let mut w = csv::WriterBuilder::new().terminator(csv::Terminator::CRLF).from_writer(Vec::new());
    let io = |e: csv::Error| Error::Overflow(e.to_string());
    w.write_record(CSV_HEADER).map_err(io)?;
    for row in &table.rows {
        let resolutions = row.resolution_texts(glyphs).join("; ");
        w.write_record([
            row.n().to_string(),
            row.record.s.to_string(),
            row.record.dim.to_string(),
            row.record.resolutions.len().to_string(),
            resolutions,
        ])
        .map_err(io)?;
    }
    let bytes = w.into_inner().map_err(|e| Error::Overflow(e.to_string()))?;
    Ok(String::from_utf8(bytes).expect("csv of UTF-8 fields"))
}
