//! Shared fixtures: the printed comparison table, its known misprints, and
//! oracles that stay independent of the library's evaluation paths.

#![allow(dead_code)]

use std::collections::{BTreeMap, HashMap};

use menger_core::mesh::MeshBuffer;
use menger_core::ExactScalar;
use num_bigint::BigInt;

/// The published table, row by row, exactly as printed.
pub const PRINTED_TABLE: [[&str; 13]; 7] = [
    ["0", "1", "1", "1.0000", "1.0000", "6.0000", "6.0000", "27.0000", "4.3334", "4.3334", "1.0000", "1.0000", "1.0000"],
    ["1", "2", "1/3", "0.7407", "0.6667", "8.0000", "6.6667", "4.6296", "4.8611(-1)", "5.9444(-1)", "0.8177", "1.2000", "0.9813"],
    ["2", "5", "1/9", "0.5487", "0.5556", "13.0370", "12.2222", "1.8258", "9.7959(-2)", "1.0393(-1)", "0.9426", "1.0667", "1.0054"],
    ["3", "14", "1/27", "0.4064", "0.5185", "24.7572", "30.0741", "1.2391", "3.3633(-2)", "2.3910(-2)", "1.4037", "0.8232", "1.1555"],
    ["4", "41", "1/81", "0.3011", "0.5062", "51.2702", "84.0247", "1.0759", "1.5113(-2)", "6.7807(-3)", "2.2288", "0.6102", "1.3599"],
    ["5", "122", "1/243", "0.2230", "0.5021", "110.604", "246.008", "1.0249", "7.2500(-3)", "2.1253(-3)", "3.4113", "0.4496", "1.5337"],
    ["6", "365", "1/729", "0.1652", "0.5007", "242.828", "732.003", "1.0083", "3.4718(-3)", "6.9339(-4)", "5.0070", "0.3317", "1.6610"],
];

/// A printed cell that disagrees with the correctly rounded exact value.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord)]
pub struct Erratum {
    pub n: u32,
    pub column: &'static str,
    pub printed: &'static str,
    pub exact: &'static str,
    pub rounded: &'static str,
}

pub const ERRATA: [Erratum; 6] = [
    Erratum { n: 0, column: "E_M", printed: "4.3334", exact: "13/3", rounded: "4.3333" },
    Erratum { n: 0, column: "E_s", printed: "4.3334", exact: "13/3", rounded: "4.3333" },
    Erratum { n: 1, column: "R_E", printed: "0.8177", exact: "175/214", rounded: "0.8178" },
    Erratum { n: 3, column: "E_s", printed: "2.3910(-2)", exact: "14183/591948", rounded: "2.3960(-2)" },
    Erratum { n: 4, column: "R_n", printed: "1.3599", exact: "411787/302786", rounded: "1.3600" },
    Erratum { n: 6, column: "E_s", printed: "6.9339(-4)", exact: "98320963/141796430415", rounded: "6.9340(-4)" },
];

pub fn ratio(s: &str) -> ExactScalar {
    let (p, q) = s.split_once('/').unwrap_or((s, "1"));
    ExactScalar::from_bigints(p.parse::<BigInt>().unwrap(), q.parse::<BigInt>().unwrap())
}

fn big_pow(base: u32, exp: u32) -> BigInt {
    num_traits::pow(BigInt::from(base), exp as usize)
}

/// `(2 * 20^n + 4 * 8^n) / 9^n`, built from integers only.
pub fn menger_surface_simplified(n: u32) -> ExactScalar {
    let numer = BigInt::from(2) * big_pow(20, n) + BigInt::from(4) * big_pow(8, n);
    ExactScalar::from_bigints(numer, big_pow(9, n))
}

/// `1/2 + 1/(2 * 3^n)`.
pub fn slice_volume_simplified(n: u32) -> ExactScalar {
    ExactScalar::from_ratio(1, 2) + ExactScalar::from_bigints(BigInt::from(1), BigInt::from(2) * big_pow(3, n))
}

/// `rho * (2 * 9^n + 4 * 3^n)` exposed faces for the slice stack.
pub fn slice_face_count(n: u32) -> u64 {
    let rho = 3u64.pow(n) / 2 + 1;
    rho * (2 * 9u64.pow(n) + 4 * 3u64.pow(n))
}

/// `2 * 20^n + 4 * 8^n` exposed faces for the sponge.
pub fn menger_face_count(n: u32) -> u64 {
    2 * 20u64.pow(n) + 4 * 8u64.pow(n)
}

/// Number of triangles sharing each undirected edge, keyed on bit patterns.
pub fn edge_valence(m: &MeshBuffer) -> HashMap<([u32; 3], [u32; 3]), usize> {
    let mut edges = HashMap::new();
    for t in m.triangles() {
        let v = t.vertices.map(|p| p.map(f32::to_bits));
        for (a, b) in [(v[0], v[1]), (v[1], v[2]), (v[2], v[0])] {
            let key = if a <= b { (a, b) } else { (b, a) };
            *edges.entry(key).or_insert(0) += 1;
        }
    }
    edges
}

/// Histogram of edge valences.
pub fn valence_histogram(m: &MeshBuffer) -> BTreeMap<usize, usize> {
    let mut h = BTreeMap::new();
    for count in edge_valence(m).into_values() {
        *h.entry(count).or_insert(0) += 1;
    }
    h
}
