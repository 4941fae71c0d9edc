//! The serialized coefficient table shared by `compute`, the cache and the
//! round-trip tests.

use std::collections::BTreeMap;
use std::fmt::Write as _;

use num_bigint::BigInt;
use serde::{Deserialize, Serialize};

use crate::series::{
    Coeff, ExponentTriple, JacobiSeries, SiegelSeries, TruncationSpec, DENOMINATORS,
};

/// Output encodings understood by `compute`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, clap::ValueEnum)]
pub enum Format {
    Json,
    Csv,
}

impl Format {
    pub fn as_str(&self) -> &'static str {
        match self {
            Format::Json => "json",
            Format::Csv => "csv",
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct Truncation {
    pub tq: i64,
    pub ts: i64,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct TermRow {
    pub e: Vec<i64>,
    /// `"p"` or `"p/q"` in lowest terms.
    pub coeff: String,
}

/// A computed expansion in transport form. Field order is the JSON key order.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Table {
    pub form: String,
    pub route: String,
    pub denominators: Vec<i64>,
    pub truncation: Truncation,
    pub terms: Vec<TermRow>,
}

/// Column names for the CSV header, one per exponent coordinate.
fn columns(arity: usize, integral_grid: bool) -> &'static [&'static str] {
    match (arity, integral_grid) {
        (3, _) => &["a", "b", "c"],
        (2, false) => &["a", "b"],
        _ => &["n", "l"],
    }
}

impl Table {
    pub fn from_siegel(form: &str, route: &str, x: &SiegelSeries) -> Self {
        let t = x.trunc();
        Self {
            form: form.to_owned(),
            route: route.to_owned(),
            denominators: DENOMINATORS.to_vec(),
            truncation: Truncation { tq: t.tq, ts: t.ts },
            terms: x
                .iter()
                .map(|(e, c)| TermRow {
                    e: vec![e.a, e.b, e.c],
                    coeff: c.to_string(),
                })
                .collect(),
        }
    }

    pub fn from_jacobi(form: &str, route: &str, x: &JacobiSeries) -> Self {
        let t = x.trunc();
        Self {
            form: form.to_owned(),
            route: route.to_owned(),
            denominators: DENOMINATORS[..2].to_vec(),
            truncation: Truncation { tq: t.tq, ts: 0 },
            terms: x
                .iter()
                .map(|(e, c)| TermRow {
                    e: vec![e.a, e.b],
                    coeff: c.to_string(),
                })
                .collect(),
        }
    }

    /// Rows `(n, l, value)` on the integral grid, e.g. the Borcherds exponents.
    pub fn from_integer_grid(
        form: &str,
        route: &str,
        truncation: Truncation,
        rows: impl IntoIterator<Item = (i64, i64, i64)>,
    ) -> Self {
        Self {
            form: form.to_owned(),
            route: route.to_owned(),
            denominators: vec![1, 1],
            truncation,
            terms: rows
                .into_iter()
                .map(|(n, l, v)| TermRow {
                    e: vec![n, l],
                    coeff: v.to_string(),
                })
                .collect(),
        }
    }

    /// Single-line JSON followed by a newline.
    pub fn to_json(&self) -> String {
        let mut s = serde_json::to_string(self).expect("tables always serialize");
        s.push('\n');
        s
    }

    pub fn from_json(s: &str) -> serde_json::Result<Self> {
        serde_json::from_str(s)
    }

    pub fn to_csv(&self) -> String {
        let arity = self
            .terms
            .first()
            .map_or(self.denominators.len(), |t| t.e.len());
        let grid = self.denominators.iter().all(|&d| d == 1);
        let mut out = columns(arity, grid).join(",");
        out.push_str(",coeff\n");
        for row in &self.terms {
            for v in &row.e {
                write!(out, "{v},").unwrap();
            }
            writeln!(out, "{}", row.coeff).unwrap();
        }
        out
    }

    pub fn render(&self, format: Format) -> String {
        match format {
            Format::Json => self.to_json(),
            Format::Csv => self.to_csv(),
        }
    }

    /// The term map with parsed coefficients.
    pub fn coefficients(&self) -> Result<BTreeMap<Vec<i64>, Coeff>, String> {
        self.terms
            .iter()
            .map(|row| Ok((row.e.clone(), parse_coeff(&row.coeff)?)))
            .collect()
    }

    /// Rebuilds a three-variable series from a Siegel table.
    pub fn to_siegel(&self) -> Result<SiegelSeries, String> {
        if self.denominators != DENOMINATORS {
            return Err(format!(
                "not a Siegel table: denominators {:?}",
                self.denominators
            ));
        }
        let trunc = TruncationSpec::new(self.truncation.tq, self.truncation.ts);
        let mut terms = Vec::with_capacity(self.terms.len());
        for row in &self.terms {
            let [a, b, c] = row.e[..] else {
                return Err(format!("expected three exponents, got {:?}", row.e));
            };
            terms.push((ExponentTriple::new(a, b, c), parse_coeff(&row.coeff)?));
        }
        Ok(SiegelSeries::from_terms(trunc, terms))
    }
}

/// Inverse of the `Display` of a rational: `"p"` or `"p/q"`.
pub fn parse_coeff(s: &str) -> Result<Coeff, String> {
    let int = |t: &str| {
        t.parse::<BigInt>()
            .map_err(|e| format!("bad coefficient `{s}`: {e}"))
    };
    match s.split_once('/') {
        None => Ok(Coeff::from_integer(int(s)?)),
        Some((p, q)) => {
            let q = int(q)?;
            if q == BigInt::from(0) {
                return Err(format!("bad coefficient `{s}`: zero denominator"));
            }
            Ok(Coeff::new(int(p)?, q))
        }
    }
}
