//! Comparison table, efficiency-versus-surface series and crossover search.

mod crossover;
mod emit;

pub use crossover::{find_crossover, CrossoverError, CrossoverReport, INTERPOLATION_METHOD};
pub use emit::{emit_json, emit_rows_csv, emit_series_csv, EmitError, ROW_CSV_HEADER, SERIES_CSV_HEADER};

use crate::metrics::{self, IterationIndex, ModelKind};
use crate::scalar::ExactScalar;

/// Column names of a comparison row, in table order.
pub const COLUMNS: [&str; 13] = [
    "n", "rho", "L", "V_M", "V_s", "S_M", "S_s", "V_tot", "E_M", "E_s", "R_E", "R_S", "R_n",
];

/// One row of the slice-versus-sponge comparison table.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct EfficiencyRow {
    pub n: IterationIndex,
    pub rho: u64,
    pub char_length: ExactScalar,
    pub menger_volume: ExactScalar,
    pub slice_volume: ExactScalar,
    pub menger_surface: ExactScalar,
    pub slice_surface: ExactScalar,
    pub total_volume: ExactScalar,
    pub menger_efficiency: ExactScalar,
    pub slice_efficiency: ExactScalar,
    pub efficiency_ratio: ExactScalar,
    pub surface_ratio: ExactScalar,
    pub quality_ratio: ExactScalar,
}

impl EfficiencyRow {
    /// The eleven rational columns paired with their names (everything after
    /// `n` and `rho`).
    pub fn scalar_columns(&self) -> [(&'static str, &ExactScalar); 11] {
        [
            ("L", &self.char_length),
            ("V_M", &self.menger_volume),
            ("V_s", &self.slice_volume),
            ("S_M", &self.menger_surface),
            ("S_s", &self.slice_surface),
            ("V_tot", &self.total_volume),
            ("E_M", &self.menger_efficiency),
            ("E_s", &self.slice_efficiency),
            ("R_E", &self.efficiency_ratio),
            ("R_S", &self.surface_ratio),
            ("R_n", &self.quality_ratio),
        ]
    }
}

pub fn table_row(n: IterationIndex) -> EfficiencyRow {
    let ratios = metrics::ratios(n);
    EfficiencyRow {
        n,
        rho: metrics::slice_count(n),
        char_length: metrics::char_length(n),
        menger_volume: metrics::menger_volume(n),
        slice_volume: metrics::slice_volume(n),
        menger_surface: metrics::menger_surface(n),
        slice_surface: metrics::slice_surface(n),
        total_volume: metrics::total_volume(n),
        menger_efficiency: metrics::efficiency(ModelKind::MengerSponge, n),
        slice_efficiency: metrics::efficiency(ModelKind::Slices, n),
        efficiency_ratio: ratios.efficiency,
        surface_ratio: ratios.surface,
        quality_ratio: ratios.quality,
    }
}

/// Rows for `0..=n_max`.
pub fn full_table(n_max: IterationIndex) -> Vec<EfficiencyRow> {
    n_max.up_to().map(table_row).collect()
}

/// Fixed point with four decimals, but never more than six significant
/// digits (`13.0370`, `110.604`).
fn plain(v: &ExactScalar) -> String {
    let fixed = v.to_fixed(4);
    if v.abs() < 1 {
        return fixed;
    }
    let significant = v.to_significant(6);
    let decimals = |s: &str| s.split_once('.').map_or(0, |(_, f)| f.len());
    if decimals(&significant) < decimals(&fixed) {
        significant
    } else {
        fixed
    }
}

/// Efficiency columns switch to `m.mmmm(-p)` below one.
fn efficiency_cell(v: &ExactScalar) -> String {
    if v.abs() < 1 {
        v.to_negative_exponent_shorthand(4)
    } else {
        plain(v)
    }
}

/// Renders a row the way the printed table does.
pub fn format_paper_precision(row: &EfficiencyRow) -> [String; 13] {
    let length = if row.n.get() == 0 {
        "1".to_owned()
    } else {
        format!("1/{}", row.n.resolution())
    };
    [
        row.n.to_string(),
        row.rho.to_string(),
        length,
        plain(&row.menger_volume),
        plain(&row.slice_volume),
        plain(&row.menger_surface),
        plain(&row.slice_surface),
        plain(&row.total_volume),
        efficiency_cell(&row.menger_efficiency),
        efficiency_cell(&row.slice_efficiency),
        plain(&row.efficiency_ratio),
        plain(&row.surface_ratio),
        plain(&row.quality_ratio),
    ]
}

/// Text rendering of a table, one line per row, columns right-aligned.
pub fn render_text_table(rows: &[EfficiencyRow]) -> String {
    let cells: Vec<[String; 13]> = rows.iter().map(format_paper_precision).collect();
    let mut widths = COLUMNS.map(str::len);
    for row in &cells {
        for (w, c) in widths.iter_mut().zip(row) {
            *w = (*w).max(c.len());
        }
    }
    let line = |values: &mut dyn Iterator<Item = &str>| {
        values
            .zip(widths)
            .map(|(v, w)| format!("{v:>w$}"))
            .collect::<Vec<_>>()
            .join("  ")
    };
    let mut out = line(&mut COLUMNS.iter().copied());
    out.push('\n');
    for row in &cells {
        out.push_str(&line(&mut row.iter().map(String::as_str)));
        out.push('\n');
    }
    out
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SeriesPoint {
    pub n: IterationIndex,
    pub surface: ExactScalar,
    pub efficiency: ExactScalar,
}

/// Efficiency as a function of surface for one model, ordered by `n`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct EfficiencySeries {
    pub model: ModelKind,
    pub points: Vec<SeriesPoint>,
}

pub fn efficiency_series(kind: ModelKind, n_max: IterationIndex) -> EfficiencySeries {
    let points = n_max
        .up_to()
        .map(|n| SeriesPoint {
            n,
            surface: metrics::model_surface(kind, n),
            efficiency: metrics::efficiency(kind, n),
        })
        .collect();
    EfficiencySeries { model: kind, points }
}
