//! Printed-table reproduction and report round-trips.

mod common;

use std::collections::BTreeSet;

use menger_core::analysis::{
    emit_json, emit_rows_csv, emit_series_csv, efficiency_series, find_crossover, format_paper_precision,
    full_table, CrossoverError, COLUMNS,
};
use menger_core::{ExactScalar, IterationIndex, ModelKind};

fn idx(n: u32) -> IterationIndex {
    IterationIndex::new(n).unwrap()
}

#[test]
fn printed_table_matches_except_known_misprints() {
    let mut mismatches = BTreeSet::new();
    for row in full_table(idx(6)) {
        let cells = format_paper_precision(&row);
        let printed = common::PRINTED_TABLE[row.n.get() as usize];
        for (col, (ours, theirs)) in cells.iter().zip(printed).enumerate() {
            if ours != theirs {
                mismatches.insert((row.n.get(), COLUMNS[col], ours.clone()));
            }
        }
    }
    let documented: BTreeSet<_> = common::ERRATA
        .iter()
        .map(|e| (e.n, e.column, e.rounded.to_owned()))
        .collect();
    assert_eq!(mismatches, documented);
}

#[test]
fn misprints_are_genuine() {
    let rows = full_table(idx(6));
    for e in common::ERRATA {
        let row = &rows[e.n as usize];
        let (_, value) = row
            .scalar_columns()
            .into_iter()
            .find(|(name, _)| *name == e.column)
            .unwrap();
        assert_eq!(*value, common::ratio(e.exact), "{e:?}");
    }
}

#[test]
fn quality_ratio_threshold() {
    let rows = full_table(idx(6));
    assert!(rows[1].quality_ratio < 1);
    assert!(rows[2].quality_ratio > 1);
    for w in rows[1..].windows(2) {
        assert!(w[1].quality_ratio > w[0].quality_ratio);
    }
}

#[test]
fn row_csv_round_trips_within_ten_digits() {
    let rows = full_table(idx(12));
    let mut out = Vec::new();
    emit_rows_csv(&rows, &mut out).unwrap();
    let mut reader = csv::Reader::from_reader(out.as_slice());
    assert_eq!(reader.headers().unwrap().iter().collect::<Vec<_>>(), COLUMNS);
    let records: Vec<_> = reader.records().map(Result::unwrap).collect();
    assert_eq!(records.len(), rows.len());
    for (row, record) in rows.iter().zip(&records) {
        assert_eq!(record[0].parse::<u32>().unwrap(), row.n.get());
        assert_eq!(record[1].parse::<u64>().unwrap(), row.rho);
        for (k, (_, exact)) in row.scalar_columns().iter().enumerate() {
            let parsed: f64 = record[k + 2].parse().unwrap();
            let exact = exact.to_f64();
            assert!(((parsed - exact) / exact).abs() <= 1e-9, "{parsed} vs {exact}");
        }
    }
}

#[test]
fn series_csv_round_trips() {
    let series = [
        efficiency_series(ModelKind::Slices, idx(6)),
        efficiency_series(ModelKind::MengerSponge, idx(6)),
    ];
    let mut out = Vec::new();
    emit_series_csv(&series, &mut out).unwrap();
    let mut reader = csv::Reader::from_reader(out.as_slice());
    let records: Vec<_> = reader.records().map(Result::unwrap).collect();
    assert_eq!(records.len(), 14);
    for (record, point) in records.iter().zip(series.iter().flat_map(|s| &s.points)) {
        let s: f64 = record[2].parse().unwrap();
        let e: f64 = record[3].parse().unwrap();
        assert!((s / point.surface.to_f64() - 1.0).abs() <= 1e-9);
        assert!((e / point.efficiency.to_f64() - 1.0).abs() <= 1e-9);
    }
}

#[test]
fn json_rationals_parse_back_exactly() {
    let rows = full_table(idx(6));
    let mut out = Vec::new();
    emit_json(&rows, None, &mut out).unwrap();
    let doc: serde_json::Value = serde_json::from_slice(&out).unwrap();
    for (row, json) in rows.iter().zip(doc["rows"].as_array().unwrap()) {
        for (name, exact) in row.scalar_columns() {
            let r = json[name]["ratio"].as_str().unwrap();
            assert_eq!(common::ratio(r), *exact);
        }
    }
    assert_eq!(common::ratio("26/6"), ExactScalar::from_ratio(13, 3));
}

#[test]
fn crossover_on_tabulated_series() {
    let menger = efficiency_series(ModelKind::MengerSponge, idx(6));
    let slices = efficiency_series(ModelKind::Slices, idx(6));
    // With exact values the sponge curve is never below the slice curve.
    match find_crossover(&menger, &slices) {
        Err(CrossoverError::NoCrossover { dominant, shared_range }) => {
            assert_eq!(dominant, Some(ModelKind::MengerSponge));
            assert!((shared_range.0 - 6.0).abs() < 1e-12);
        }
        other => panic!("{other:?}"),
    }
    let menger1 = efficiency_series(ModelKind::MengerSponge, idx(1));
    let slices1 = efficiency_series(ModelKind::Slices, idx(1));
    assert!(matches!(find_crossover(&menger1, &slices1), Err(CrossoverError::NoCrossover { .. })));
}
