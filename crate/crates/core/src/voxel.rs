//! Brute-force voxel oracle.
//!
//! Both models are unions of lattice-aligned boxes at resolution `3^n`, so
//! voxelising them on that lattice is exact. Counting solid cells and exposed
//! faces gives volume and surface through a route that shares nothing with
//! the closed forms in [`crate::metrics`].

use rayon::prelude::*;
use thiserror::Error;

use crate::metrics::{IterationIndex, ModelKind};
use crate::scalar::ExactScalar;

/// Oracle cap used when none is configured; the largest tabulated order.
pub const DEFAULT_ORACLE_CAP: u32 = 6;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum VoxelError {
    #[error("iteration order {n} exceeds the voxel oracle cap of {cap}")]
    IterationOutOfRange { n: u32, cap: u32 },
    #[error("oracle cap {requested} is above the maximum of {max}; the cap may only be lowered")]
    CapTooLarge { requested: u32, max: u32 },
    #[error("voxel ({x}, {y}, {z}) lies outside a lattice of resolution {resolution}")]
    CoordinateOutOfRange { x: u32, y: u32, z: u32, resolution: u32 },
    #[error("could not allocate {bytes} bytes for the occupancy grid")]
    Allocation { bytes: usize },
}

/// Upper bound on the iteration order the oracle will voxelise.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct OracleCap(u32);

impl OracleCap {
    pub fn new(cap: u32) -> Result<Self, VoxelError> {
        if cap > DEFAULT_ORACLE_CAP {
            return Err(VoxelError::CapTooLarge {
                requested: cap,
                max: DEFAULT_ORACLE_CAP,
            });
        }
        Ok(Self(cap))
    }

    pub fn get(self) -> u32 {
        self.0
    }

    fn check(self, n: IterationIndex) -> Result<(), VoxelError> {
        if n.get() > self.0 {
            return Err(VoxelError::IterationOutOfRange { n: n.get(), cap: self.0 });
        }
        Ok(())
    }
}

impl Default for OracleCap {
    fn default() -> Self {
        Self(DEFAULT_ORACLE_CAP)
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct VoxelCoord {
    pub x: u32,
    pub y: u32,
    pub z: u32,
}

impl VoxelCoord {
    pub fn new(x: u32, y: u32, z: u32) -> Self {
        Self { x, y, z }
    }

    fn check(self, resolution: u32) -> Result<(), VoxelError> {
        if self.x >= resolution || self.y >= resolution || self.z >= resolution {
            return Err(VoxelError::CoordinateOutOfRange {
                x: self.x,
                y: self.y,
                z: self.z,
                resolution,
            });
        }
        Ok(())
    }
}

fn resolution_of(n: IterationIndex) -> u32 {
    // 3^12 fits comfortably in a u32.
    n.resolution() as u32
}

/// Sponge membership: a voxel is removed as soon as some base-3 digit
/// position has a `1` in at least two of its three coordinates.
pub fn is_solid_menger(c: VoxelCoord, n: IterationIndex) -> Result<bool, VoxelError> {
    c.check(resolution_of(n))?;
    let (mut x, mut y, mut z) = (c.x, c.y, c.z);
    for _ in 0..n.get() {
        let ones = u32::from(x % 3 == 1) + u32::from(y % 3 == 1) + u32::from(z % 3 == 1);
        if ones >= 2 {
            return Ok(false);
        }
        x /= 3;
        y /= 3;
        z /= 3;
    }
    Ok(true)
}

/// Slice membership: even `z` layers are substrate, odd layers are coolant.
pub fn is_solid_slices(c: VoxelCoord, n: IterationIndex) -> Result<bool, VoxelError> {
    c.check(resolution_of(n))?;
    Ok(c.z.is_multiple_of(2))
}

/// Bitmask of the digit positions where `v` has a base-3 digit of one.
fn ones_mask(mut v: u32, digits: u32) -> u32 {
    let mut mask = 0;
    for k in 0..digits {
        if v % 3 == 1 {
            mask |= 1 << k;
        }
        v /= 3;
    }
    mask
}

/// Packed occupancy over the `3^n` lattice, x fastest.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct VoxelGrid {
    kind: ModelKind,
    n: IterationIndex,
    resolution: u32,
    words: Vec<u64>,
}

impl VoxelGrid {
    pub fn kind(&self) -> ModelKind {
        self.kind
    }

    pub fn n(&self) -> IterationIndex {
        self.n
    }

    pub fn resolution(&self) -> u32 {
        self.resolution
    }

    /// Total number of cells, `resolution^3`.
    pub fn len(&self) -> usize {
        let r = self.resolution as usize;
        r * r * r
    }

    pub fn is_empty(&self) -> bool {
        self.len() == 0
    }

    pub fn voxel_edge(&self) -> ExactScalar {
        ExactScalar::from_ratio(1, i64::from(self.resolution))
    }

    pub fn index(&self, x: u32, y: u32, z: u32) -> usize {
        let r = self.resolution as usize;
        x as usize + r * (y as usize + r * z as usize)
    }

    /// Occupancy at a coordinate known to be in range.
    #[inline]
    pub fn is_solid(&self, x: u32, y: u32, z: u32) -> bool {
        debug_assert!(x < self.resolution && y < self.resolution && z < self.resolution);
        let i = self.index(x, y, z);
        self.words[i / 64] >> (i % 64) & 1 == 1
    }

    pub fn get(&self, c: VoxelCoord) -> Result<bool, VoxelError> {
        c.check(self.resolution)?;
        Ok(self.is_solid(c.x, c.y, c.z))
    }

    /// Out-of-lattice cells count as empty.
    #[inline]
    fn solid_or_outside(&self, x: i64, y: i64, z: i64) -> bool {
        let r = i64::from(self.resolution);
        if x < 0 || y < 0 || z < 0 || x >= r || y >= r || z >= r {
            return false;
        }
        self.is_solid(x as u32, y as u32, z as u32)
    }

    pub fn solid_count(&self) -> u64 {
        self.words.par_iter().map(|w| u64::from(w.count_ones())).sum()
    }

    /// Raw packed words; bits past `len()` are zero.
    pub fn words(&self) -> &[u64] {
        &self.words
    }

    /// Whether the face of solid voxel `(x, y, z)` in `direction` touches
    /// coolant.
    pub fn face_exposed(&self, x: u32, y: u32, z: u32, direction: FaceDirection) -> bool {
        let [dx, dy, dz] = direction.offset();
        !self.solid_or_outside(i64::from(x) + dx, i64::from(y) + dy, i64::from(z) + dz)
    }
}

/// The six axis-aligned face directions, in canonical order.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum FaceDirection {
    PosX,
    NegX,
    PosY,
    NegY,
    PosZ,
    NegZ,
}

impl FaceDirection {
    pub const ALL: [FaceDirection; 6] = [
        FaceDirection::PosX,
        FaceDirection::NegX,
        FaceDirection::PosY,
        FaceDirection::NegY,
        FaceDirection::PosZ,
        FaceDirection::NegZ,
    ];

    pub fn offset(self) -> [i64; 3] {
        match self {
            FaceDirection::PosX => [1, 0, 0],
            FaceDirection::NegX => [-1, 0, 0],
            FaceDirection::PosY => [0, 1, 0],
            FaceDirection::NegY => [0, -1, 0],
            FaceDirection::PosZ => [0, 0, 1],
            FaceDirection::NegZ => [0, 0, -1],
        }
    }
}

/// Voxelises `kind` at order `n`.
///
/// Words are filled independently in parallel, so the result does not depend
/// on how rayon splits the work.
pub fn build_grid(kind: ModelKind, n: IterationIndex, cap: OracleCap) -> Result<VoxelGrid, VoxelError> {
    cap.check(n)?;
    let resolution = resolution_of(n);
    let r = resolution as usize;
    let cells = r * r * r;
    let word_count = cells.div_ceil(64);

    let mut words: Vec<u64> = Vec::new();
    words
        .try_reserve_exact(word_count)
        .map_err(|_| VoxelError::Allocation { bytes: word_count * 8 })?;
    words.resize(word_count, 0);

    let masks: Vec<u32> = (0..resolution).map(|v| ones_mask(v, n.get())).collect();

    words.par_iter_mut().enumerate().for_each(|(w, word)| {
        let start = w * 64;
        let end = (start + 64).min(cells);
        let (mut x, mut y, mut z) = (start % r, (start / r) % r, start / (r * r));
        let mut bits = 0u64;
        for bit in 0..end - start {
            let solid = match kind {
                ModelKind::Slices => z % 2 == 0,
                ModelKind::MengerSponge => {
                    let (mx, my, mz) = (masks[x], masks[y], masks[z]);
                    (mx & my) | (my & mz) | (mx & mz) == 0
                }
            };
            bits |= u64::from(solid) << bit;
            x += 1;
            if x == r {
                x = 0;
                y += 1;
                if y == r {
                    y = 0;
                    z += 1;
                }
            }
        }
        *word = bits;
    });

    Ok(VoxelGrid {
        kind,
        n,
        resolution,
        words,
    })
}

/// Solid cell count times the voxel volume.
pub fn measure_volume(g: &VoxelGrid) -> ExactScalar {
    ExactScalar::from(g.solid_count()) * g.voxel_edge().pow(3)
}

/// Number of unit faces shared by a solid voxel and coolant, where the
/// region outside the lattice is coolant.
pub fn count_exposed_faces(g: &VoxelGrid) -> u64 {
    let r = g.resolution;
    (0..r)
        .into_par_iter()
        .map(|z| {
            let mut faces = 0u64;
            for y in 0..r {
                for x in 0..r {
                    if !g.is_solid(x, y, z) {
                        continue;
                    }
                    let (xi, yi, zi) = (i64::from(x), i64::from(y), i64::from(z));
                    let neighbours = [
                        g.solid_or_outside(xi + 1, yi, zi),
                        g.solid_or_outside(xi - 1, yi, zi),
                        g.solid_or_outside(xi, yi + 1, zi),
                        g.solid_or_outside(xi, yi - 1, zi),
                        g.solid_or_outside(xi, yi, zi + 1),
                        g.solid_or_outside(xi, yi, zi - 1),
                    ];
                    faces += 6 - neighbours.iter().filter(|&&s| s).count() as u64;
                }
            }
            faces
        })
        .sum()
}

/// Exposed face count times the voxel face area.
pub fn measure_surface(g: &VoxelGrid) -> ExactScalar {
    ExactScalar::from(count_exposed_faces(g)) * g.voxel_edge().pow(2)
}
