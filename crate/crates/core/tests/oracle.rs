//! Closed forms against the voxel oracle and integer-only reformulations.

mod common;

use menger_core::metrics::{
    char_length, menger_surface, menger_volume, model_surface, model_volume, ratios, slice_count,
    slice_volume, total_volume,
};
use menger_core::voxel::{build_grid, count_exposed_faces, measure_surface, measure_volume, OracleCap};
use menger_core::{ExactScalar, IterationIndex, ModelKind};
use proptest::prelude::*;

fn idx(n: u32) -> IterationIndex {
    IterationIndex::new(n).unwrap()
}

#[test]
fn oracle_matches_closed_forms_up_to_order_four() {
    for kind in ModelKind::ALL {
        for n in 0..=4 {
            let g = build_grid(kind, idx(n), OracleCap::default()).unwrap();
            assert_eq!(measure_volume(&g), model_volume(kind, idx(n)), "{kind} volume n={n}");
            assert_eq!(measure_surface(&g), model_surface(kind, idx(n)), "{kind} surface n={n}");
        }
    }
}

#[test]
fn solid_and_face_counts_follow_their_integer_formulas() {
    for n in 0..=4 {
        let sponge = build_grid(ModelKind::MengerSponge, idx(n), OracleCap::default()).unwrap();
        assert_eq!(sponge.solid_count(), 20u64.pow(n));
        assert_eq!(count_exposed_faces(&sponge), common::menger_face_count(n));

        let slices = build_grid(ModelKind::Slices, idx(n), OracleCap::default()).unwrap();
        assert_eq!(slices.solid_count(), slice_count(idx(n)) * 9u64.pow(n));
        assert_eq!(count_exposed_faces(&slices), common::slice_face_count(n));
    }
}

#[test]
fn face_formula_matches_surface_closed_form_through_order_six() {
    for n in 0..=6 {
        let faces = ExactScalar::from(common::menger_face_count(n));
        assert_eq!(faces * char_length(idx(n)).pow(2), menger_surface(idx(n)));
    }
}

#[test]
fn lowered_cap_is_honoured() {
    let cap = OracleCap::new(3).unwrap();
    assert!(build_grid(ModelKind::MengerSponge, idx(3), cap).is_ok());
    assert!(build_grid(ModelKind::MengerSponge, idx(4), cap).is_err());
}

proptest! {
    #[test]
    fn closed_form_identities(n in 0u32..=12) {
        let i = idx(n);
        prop_assert_eq!(menger_surface(i), common::menger_surface_simplified(n));
        prop_assert_eq!(slice_volume(i), common::slice_volume_simplified(n));
        prop_assert_eq!(
            ratios(i).quality,
            (total_volume(i) - menger_volume(i)) / (total_volume(i) - slice_volume(i))
        );
        prop_assert!(slice_volume(i) > ExactScalar::from_ratio(1, 2));
    }

    #[test]
    fn membership_agrees_between_grid_and_pointwise_tests(n in 0u32..=3, seed in any::<u64>()) {
        use menger_core::voxel::{is_solid_menger, is_solid_slices, VoxelCoord};
        let r = 3u64.pow(n);
        let c = VoxelCoord::new((seed % r) as u32, ((seed / r) % r) as u32, ((seed / (r * r)) % r) as u32);
        let sponge = build_grid(ModelKind::MengerSponge, idx(n), OracleCap::default()).unwrap();
        let slices = build_grid(ModelKind::Slices, idx(n), OracleCap::default()).unwrap();
        prop_assert_eq!(sponge.get(c).unwrap(), is_solid_menger(c, idx(n)).unwrap());
        prop_assert_eq!(slices.get(c).unwrap(), is_solid_slices(c, idx(n)).unwrap());
    }
}
