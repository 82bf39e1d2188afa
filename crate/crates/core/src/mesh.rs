//! Triangle meshes of voxelised geometries, with binary STL and OBJ writers.
//!
//! One quad per exposed voxel face, split into two triangles along the
//! first-to-third corner diagonal. No faces are merged.

use std::collections::HashMap;
use std::io::{self, Write};

use rayon::prelude::*;

use crate::voxel::{FaceDirection, VoxelGrid};

const STL_HEADER: &[u8] = b"menger-core binary STL";

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Triangle {
    pub normal: [f32; 3],
    pub vertices: [[f32; 3]; 3],
}

#[derive(Debug, Clone, Default, PartialEq)]
pub struct MeshBuffer {
    triangles: Vec<Triangle>,
}

impl MeshBuffer {
    pub fn new(triangles: Vec<Triangle>) -> Self {
        Self { triangles }
    }

    pub fn triangles(&self) -> &[Triangle] {
        &self.triangles
    }

    pub fn len(&self) -> usize {
        self.triangles.len()
    }

    pub fn is_empty(&self) -> bool {
        self.triangles.is_empty()
    }
}

/// Lattice corner offsets `(origin, u, v)` for a face so that `u × v` points
/// along the outward normal.
fn face_frame(direction: FaceDirection) -> ([u32; 3], [u32; 3], [u32; 3]) {
    const X: [u32; 3] = [1, 0, 0];
    const Y: [u32; 3] = [0, 1, 0];
    const Z: [u32; 3] = [0, 0, 1];
    const O: [u32; 3] = [0, 0, 0];
    match direction {
        FaceDirection::PosX => (X, Y, Z),
        FaceDirection::NegX => (O, Z, Y),
        FaceDirection::PosY => (Y, Z, X),
        FaceDirection::NegY => (O, X, Z),
        FaceDirection::PosZ => (Z, X, Y),
        FaceDirection::NegZ => (O, Y, X),
    }
}

fn offset_to_normal(direction: FaceDirection) -> [f32; 3] {
    direction.offset().map(|c| c as f32)
}

/// Builds the exposed-face mesh of `g` in unit-cube coordinates.
///
/// Faces are ordered by z, then y, then x, then direction in
/// [`FaceDirection::ALL`] order.
pub fn mesh_from_grid(g: &VoxelGrid) -> MeshBuffer {
    let r = g.resolution();
    // i / 3^n is never a binary midpoint, so going through f64 rounds to
    // the same f32 as a single correctly rounded division.
    let coords: Vec<f32> = (0..=r).map(|i| (f64::from(i) / f64::from(r)) as f32).collect();

    let layers: Vec<Vec<Triangle>> = (0..r)
        .into_par_iter()
        .map(|z| {
            let mut out = Vec::new();
            for y in 0..r {
                for x in 0..r {
                    if !g.is_solid(x, y, z) {
                        continue;
                    }
                    for direction in FaceDirection::ALL {
                        if !g.face_exposed(x, y, z, direction) {
                            continue;
                        }
                        let (origin, u, v) = face_frame(direction);
                        let corner = |du: u32, dv: u32| {
                            let p = [
                                x + origin[0] + du * u[0] + dv * v[0],
                                y + origin[1] + du * u[1] + dv * v[1],
                                z + origin[2] + du * u[2] + dv * v[2],
                            ];
                            p.map(|i| coords[i as usize])
                        };
                        let (a, b, c, d) = (corner(0, 0), corner(1, 0), corner(1, 1), corner(0, 1));
                        let normal = offset_to_normal(direction);
                        out.push(Triangle { normal, vertices: [a, b, c] });
                        out.push(Triangle { normal, vertices: [a, c, d] });
                    }
                }
            }
            out
        })
        .collect();

    MeshBuffer::new(layers.concat())
}

/// Writes little-endian binary STL and returns the number of bytes written.
///
/// Layout: 80-byte zero-padded header, `u32` triangle count, then per
/// triangle the normal and three vertices as `f32` followed by a zero `u16`.
pub fn write_stl_binary<W: Write>(m: &MeshBuffer, sink: &mut W) -> io::Result<u64> {
    let count = u32::try_from(m.len())
        .map_err(|_| io::Error::new(io::ErrorKind::InvalidInput, "too many triangles for STL"))?;

    let mut header = [0u8; 80];
    header[..STL_HEADER.len()].copy_from_slice(STL_HEADER);
    sink.write_all(&header)?;
    sink.write_all(&count.to_le_bytes())?;

    let mut record = [0u8; 50];
    for t in m.triangles() {
        let floats = t.normal.iter().chain(t.vertices.iter().flatten());
        for (slot, value) in record.chunks_exact_mut(4).zip(floats) {
            slot.copy_from_slice(&value.to_le_bytes());
        }
        record[48..].fill(0);
        sink.write_all(&record)?;
    }
    Ok(84 + 50 * u64::from(count))
}

struct CountingWriter<'a, W> {
    inner: &'a mut W,
    written: u64,
}

impl<W: Write> Write for CountingWriter<'_, W> {
    fn write(&mut self, buf: &[u8]) -> io::Result<usize> {
        let n = self.inner.write(buf)?;
        self.written += n as u64;
        Ok(n)
    }

    fn flush(&mut self) -> io::Result<()> {
        self.inner.flush()
    }
}

/// Writes a text OBJ and returns the number of bytes written.
///
/// Vertices are deduplicated on their exact bit patterns and numbered in
/// first-use order.
pub fn write_obj<W: Write>(m: &MeshBuffer, sink: &mut W) -> io::Result<u64> {
    let mut index: HashMap<[u32; 3], usize> = HashMap::new();
    let mut vertices: Vec<[f32; 3]> = Vec::new();
    let mut faces: Vec<[usize; 3]> = Vec::with_capacity(m.len());
    for t in m.triangles() {
        let face = t.vertices.map(|v| {
            *index.entry(v.map(f32::to_bits)).or_insert_with(|| {
                vertices.push(v);
                vertices.len()
            })
        });
        faces.push(face);
    }

    let mut out = CountingWriter { inner: sink, written: 0 };
    for [x, y, z] in &vertices {
        writeln!(out, "v {x} {y} {z}")?;
    }
    for [a, b, c] in &faces {
        writeln!(out, "f {a} {b} {c}")?;
    }
    Ok(out.written)
}
