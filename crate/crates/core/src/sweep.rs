//! Convergence tables: exact proportions against the arcsine limit.

use crate::closed_forms::{arcsine_limit, proportion_nm, AsymptoticParams};
use crate::error::{Error, Result};
use crate::exact_math::to_f64;
use crate::hexagon::AxisIndex;
use num_rational::BigRational;
use serde::{Deserialize, Serialize};
use std::str::FromStr;

/// Rounds to 15 significant digits, the precision of emitted floats.
pub fn round_sig15(x: f64) -> f64 {
    if !x.is_finite() || x == 0.0 {
        return x;
    }
    format!("{x:.14e}").parse().expect("formatted float parses")
}

#[derive(Clone, Debug, PartialEq)]
pub struct SweepRow {
    pub n: u32,
    pub m: u32,
    pub l: u32,
    pub proportion_exact: BigRational,
    pub proportion_float: f64,
    pub arcsine_value: f64,
    pub abs_error: f64,
}

#[derive(Serialize, Deserialize)]
struct Record {
    #[serde(rename = "N")]
    n: u32,
    m: u32,
    l: u32,
    proportion_exact: String,
    proportion_float: f64,
    arcsine_value: f64,
    abs_error: f64,
}

impl From<&SweepRow> for Record {
    fn from(r: &SweepRow) -> Self {
        Record {
            n: r.n,
            m: r.m,
            l: r.l,
            proportion_exact: r.proportion_exact.to_string(),
            proportion_float: r.proportion_float,
            arcsine_value: r.arcsine_value,
            abs_error: r.abs_error,
        }
    }
}

impl TryFrom<Record> for SweepRow {
    type Error = Error;

    fn try_from(r: Record) -> Result<Self> {
        let proportion_exact = BigRational::from_str(&r.proportion_exact)
            .map_err(|e| Error::Parse(format!("bad rational {:?}: {e}", r.proportion_exact)))?;
        Ok(SweepRow {
            n: r.n,
            m: r.m,
            l: r.l,
            proportion_exact,
            proportion_float: r.proportion_float,
            arcsine_value: r.arcsine_value,
            abs_error: r.abs_error,
        })
    }
}

/// `m = round(aN)`, which must be at least 1, and `l = clamp(round(bN), 1, N)`.
pub fn sweep_params(ap: AsymptoticParams, n: u32) -> Result<(u32, u32)> {
    if n == 0 {
        return Err(Error::OutOfRange("N must be positive".into()));
    }
    let m = (ap.a() * n as f64).round();
    if m < 1.0 {
        return Err(Error::OutOfRange(format!(
            "round(a*N) = {m} at N = {n}; need m >= 1"
        )));
    }
    let l = (ap.b() * n as f64).round().clamp(1.0, n as f64);
    Ok((m as u32, l as u32))
}

pub fn sweep_row(ap: AsymptoticParams, n: u32) -> Result<SweepRow> {
    let (m, l) = sweep_params(ap, n)?;
    let exact = proportion_nm(n, m, AxisIndex::within(l, n)?)?;
    let proportion_float = round_sig15(to_f64(&exact));
    let arcsine_value = round_sig15(arcsine_limit(ap));
    Ok(SweepRow {
        n,
        m,
        l,
        proportion_exact: exact,
        proportion_float,
        arcsine_value,
        abs_error: round_sig15((proportion_float - arcsine_value).abs()),
    })
}

pub fn sweep(ap: AsymptoticParams, ns: &[u32]) -> Result<Vec<SweepRow>> {
    ns.iter().map(|&n| sweep_row(ap, n)).collect()
}

/// Accepts `10,20,30` or `start:end:step` (inclusive end).
pub fn parse_n_list(spec: &str) -> Result<Vec<u32>> {
    let num = |s: &str| {
        s.trim()
            .parse::<u32>()
            .map_err(|_| Error::Parse(format!("not a nonnegative integer: {s:?}")))
    };
    let out: Vec<u32> = if spec.contains(':') {
        let parts: Vec<&str> = spec.split(':').collect();
        let [start, end, step] = parts[..] else {
            return Err(Error::Parse(format!(
                "range must be start:end:step, got {spec:?}"
            )));
        };
        let (start, end, step) = (num(start)?, num(end)?, num(step)?);
        if step == 0 {
            return Err(Error::Parse("range step must be positive".into()));
        }
        (start..=end).step_by(step as usize).collect()
    } else {
        spec.split(',').map(num).collect::<Result<_>>()?
    };
    if out.is_empty() {
        return Err(Error::Parse(format!("empty N list {spec:?}")));
    }
    Ok(out)
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum SweepFormat {
    Csv,
    Json,
}

impl FromStr for SweepFormat {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "csv" => Ok(SweepFormat::Csv),
            "json" => Ok(SweepFormat::Json),
            _ => Err(Error::Parse(format!(
                "unknown format {s:?}; expected csv or json"
            ))),
        }
    }
}

pub const CSV_HEADER: &str = "N,m,l,proportion_exact,proportion_float,arcsine_value,abs_error";

pub fn to_csv(rows: &[SweepRow]) -> Result<String> {
    let mut w = csv::WriterBuilder::new()
        .has_headers(false)
        .from_writer(Vec::new());
    w.write_record(CSV_HEADER.split(',')).map_err(csv_err)?;
    for r in rows {
        w.serialize(Record::from(r)).map_err(csv_err)?;
    }
    let bytes = w.into_inner().map_err(|e| Error::Parse(e.to_string()))?;
    Ok(String::from_utf8(bytes).expect("csv output is utf-8"))
}

pub fn from_csv(text: &str) -> Result<Vec<SweepRow>> {
    let mut r = csv::Reader::from_reader(text.as_bytes());
    let header = r
        .headers()
        .map_err(csv_err)?
        .iter()
        .collect::<Vec<_>>()
        .join(",");
    if header != CSV_HEADER {
        return Err(Error::Parse(format!("unexpected csv header {header:?}")));
    }
    r.deserialize::<Record>()
        .map(|rec| rec.map_err(csv_err)?.try_into())
        .collect()
}

pub fn to_json(rows: &[SweepRow]) -> Result<String> {
    let records: Vec<Record> = rows.iter().map(Record::from).collect();
    serde_json::to_string_pretty(&records).map_err(|e| Error::Parse(e.to_string()))
}

pub fn from_json(text: &str) -> Result<Vec<SweepRow>> {
    let records: Vec<Record> =
        serde_json::from_str(text).map_err(|e| Error::Parse(e.to_string()))?;
    records.into_iter().map(SweepRow::try_from).collect()
}

pub fn emit(rows: &[SweepRow], format: SweepFormat) -> Result<String> {
    match format {
        SweepFormat::Csv => to_csv(rows),
        SweepFormat::Json => to_json(rows).map(|s| s + "\n"),
    }
}

fn csv_err(e: csv::Error) -> Error {
    Error::Parse(e.to_string())
}
