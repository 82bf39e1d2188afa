mod common;

use menger_core::mesh::{mesh_from_grid, write_obj, write_stl_binary};
use menger_core::voxel::{build_grid, count_exposed_faces, OracleCap};
use menger_core::{IterationIndex, ModelKind};

fn grid(kind: ModelKind, n: u32) -> menger_core::voxel::VoxelGrid {
    build_grid(kind, IterationIndex::new(n).unwrap(), OracleCap::default()).unwrap()
}

#[test]
fn triangles_are_twice_the_exposed_faces() {
    for kind in ModelKind::ALL {
        for n in 0..=4 {
            let g = grid(kind, n);
            assert_eq!(mesh_from_grid(&g).len() as u64, 2 * count_exposed_faces(&g), "{kind} n={n}");
        }
    }
}

#[test]
fn sponge_mesh_is_closed() {
    for n in 0..=2 {
        let m = mesh_from_grid(&grid(ModelKind::MengerSponge, n));
        let histogram = common::valence_histogram(&m);
        assert_eq!(histogram.keys().copied().collect::<Vec<_>>(), vec![2], "n={n}: {histogram:?}");
    }
}

#[test]
fn stl_sizes() {
    for (n, bytes) in [(1, 7284u64), (2, 105_684)] {
        let m = mesh_from_grid(&grid(ModelKind::MengerSponge, n));
        let mut out = Vec::new();
        assert_eq!(write_stl_binary(&m, &mut out).unwrap(), bytes);
        assert_eq!(out.len() as u64, bytes);
    }
}

#[test]
fn obj_vertices_are_shared() {
    // Every unique vertex appears once; all 4x4x4 lattice points of the
    // n = 1 sponge lie on its outer faces or tunnel walls.
    let m = mesh_from_grid(&grid(ModelKind::MengerSponge, 1));
    let mut out = Vec::new();
    write_obj(&m, &mut out).unwrap();
    let text = String::from_utf8(out).unwrap();
    let vertices: Vec<&str> = text.lines().filter(|l| l.starts_with("v ")).collect();
    let unique: std::collections::HashSet<_> = vertices.iter().collect();
    assert_eq!(vertices.len(), unique.len());
    assert_eq!(text.lines().filter(|l| l.starts_with("f ")).count(), 144);
    assert_eq!(vertices.len(), 64);
}
