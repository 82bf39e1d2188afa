//! CSV and JSON reports.
//!
//! Decimals are rendered with ten significant digits straight from the exact
//! rationals; JSON additionally carries each value as a `"p/q"` string.

use std::io::Write;

use serde::Serialize;
use thiserror::Error;

use super::{CrossoverReport, EfficiencyRow, EfficiencySeries};
use crate::scalar::ExactScalar;

const SIGNIFICANT_DIGITS: u32 = 10;

pub const ROW_CSV_HEADER: [&str; 13] = super::COLUMNS;
pub const SERIES_CSV_HEADER: [&str; 4] = ["model", "n", "S", "E"];

#[derive(Debug, Error)]
pub enum EmitError {
    #[error("nothing to emit")]
    Empty,
    #[error(transparent)]
    Io(#[from] std::io::Error),
    #[error(transparent)]
    Csv(#[from] csv::Error),
    #[error(transparent)]
    Json(#[from] serde_json::Error),
}

fn decimal(v: &ExactScalar) -> String {
    v.to_significant(SIGNIFICANT_DIGITS)
}

fn csv_writer<W: Write>(sink: W) -> csv::Writer<W> {
    csv::WriterBuilder::new()
        .terminator(csv::Terminator::Any(b'\n'))
        .from_writer(sink)
}

/// One CSV line per row under the `n,rho,L,...,R_n` header.
pub fn emit_rows_csv<W: Write>(rows: &[EfficiencyRow], sink: W) -> Result<(), EmitError> {
    if rows.is_empty() {
        return Err(EmitError::Empty);
    }
    let mut w = csv_writer(sink);
    w.write_record(ROW_CSV_HEADER)?;
    for row in rows {
        let mut record = vec![row.n.to_string(), row.rho.to_string()];
        record.extend(row.scalar_columns().iter().map(|(_, v)| decimal(v)));
        w.write_record(&record)?;
    }
    w.flush()?;
    Ok(())
}

/// `model,n,S,E` lines for every point of every series, in order.
pub fn emit_series_csv<W: Write>(series: &[EfficiencySeries], sink: W) -> Result<(), EmitError> {
    if series.iter().all(|s| s.points.is_empty()) {
        return Err(EmitError::Empty);
    }
    let mut w = csv_writer(sink);
    w.write_record(SERIES_CSV_HEADER)?;
    for s in series {
        for p in &s.points {
            w.write_record([
                s.model.tag().to_owned(),
                p.n.to_string(),
                decimal(&p.surface),
                decimal(&p.efficiency),
            ])?;
        }
    }
    w.flush()?;
    Ok(())
}

#[derive(Serialize)]
struct JsonScalar {
    decimal: String,
    ratio: String,
}

impl From<&ExactScalar> for JsonScalar {
    fn from(v: &ExactScalar) -> Self {
        Self {
            decimal: decimal(v),
            ratio: v.ratio_string(),
        }
    }
}

#[derive(Serialize)]
struct JsonRow {
    n: u32,
    rho: u64,
    #[serde(rename = "L")]
    char_length: JsonScalar,
    #[serde(rename = "V_M")]
    menger_volume: JsonScalar,
    #[serde(rename = "V_s")]
    slice_volume: JsonScalar,
    #[serde(rename = "S_M")]
    menger_surface: JsonScalar,
    #[serde(rename = "S_s")]
    slice_surface: JsonScalar,
    #[serde(rename = "V_tot")]
    total_volume: JsonScalar,
    #[serde(rename = "E_M")]
    menger_efficiency: JsonScalar,
    #[serde(rename = "E_s")]
    slice_efficiency: JsonScalar,
    #[serde(rename = "R_E")]
    efficiency_ratio: JsonScalar,
    #[serde(rename = "R_S")]
    surface_ratio: JsonScalar,
    #[serde(rename = "R_n")]
    quality_ratio: JsonScalar,
}

impl From<&EfficiencyRow> for JsonRow {
    fn from(r: &EfficiencyRow) -> Self {
        Self {
            n: r.n.get(),
            rho: r.rho,
            char_length: (&r.char_length).into(),
            menger_volume: (&r.menger_volume).into(),
            slice_volume: (&r.slice_volume).into(),
            menger_surface: (&r.menger_surface).into(),
            slice_surface: (&r.slice_surface).into(),
            total_volume: (&r.total_volume).into(),
            menger_efficiency: (&r.menger_efficiency).into(),
            slice_efficiency: (&r.slice_efficiency).into(),
            efficiency_ratio: (&r.efficiency_ratio).into(),
            surface_ratio: (&r.surface_ratio).into(),
            quality_ratio: (&r.quality_ratio).into(),
        }
    }
}

#[derive(Serialize)]
struct JsonBracket {
    n_low: u32,
    n_high: u32,
}

#[derive(Serialize)]
struct JsonCrossover {
    rising: &'static str,
    falling: &'static str,
    s_star: String,
    e_star: String,
    rising_bracket: JsonBracket,
    falling_bracket: JsonBracket,
    method: &'static str,
}

impl From<&CrossoverReport> for JsonCrossover {
    fn from(c: &CrossoverReport) -> Self {
        let bracket = |(n_low, n_high)| JsonBracket { n_low, n_high };
        Self {
            rising: c.rising.tag(),
            falling: c.falling.tag(),
            s_star: format_float_significant(c.s_star),
            e_star: format_float_significant(c.e_star),
            rising_bracket: bracket(c.rising_bracket),
            falling_bracket: bracket(c.falling_bracket),
            method: c.method,
        }
    }
}

/// Ten significant digits for an interpolated (inexact) value.
pub(crate) fn format_float_significant(v: f64) -> String {
    format!("{:.*e}", SIGNIFICANT_DIGITS as usize - 1, v)
}

#[derive(Serialize)]
struct JsonDocument {
    rows: Vec<JsonRow>,
    crossover: Option<JsonCrossover>,
}

/// Writes `{"rows": [...], "crossover": {...} | null}` followed by a newline.
pub fn emit_json<W: Write>(
    rows: &[EfficiencyRow],
    crossover: Option<&CrossoverReport>,
    mut sink: W,
) -> Result<(), EmitError> {
    let doc = JsonDocument {
        rows: rows.iter().map(JsonRow::from).collect(),
        crossover: crossover.map(JsonCrossover::from),
    };
    serde_json::to_writer_pretty(&mut sink, &doc)?;
    sink.write_all(b"\n")?;
    sink.flush()?;
    Ok(())
}
