//! Closed-form volumes, surfaces and cooling efficiencies of the two models.
//!
//! Both geometries live in the unit cube and are parametrised by an
//! iteration order `n`:
//!
//! - **Slices**: `rho = floor(3^n / 2) + 1` plates of thickness `L = 1/3^n`,
//!   separated by coolant gaps of the same thickness.
//! - **Menger sponge**: the `n`-th iterate of removing the seven central
//!   subcubes of every `3 × 3 × 3` subdivision.
//!
//! The model sits in a wrapping cube of edge `1 + 2L`; whatever the model
//! does not occupy is coolant. Efficiency is coolant volume per unit of
//! model surface. Everything here is exact rational arithmetic.

use std::fmt;
use std::str::FromStr;

use thiserror::Error;

use crate::scalar::ExactScalar;

/// Largest iteration order accepted by the closed-form operations.
pub const MAX_ITERATION: u32 = 12;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum MetricsError {
    #[error("iteration order {n} exceeds the closed-form cap of {max}")]
    IterationOutOfRange { n: u32, max: u32 },
}

/// Iteration order `n`, validated against [`MAX_ITERATION`].
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct IterationIndex(u32);

impl IterationIndex {
    pub const ZERO: IterationIndex = IterationIndex(0);
    pub const MAX: IterationIndex = IterationIndex(MAX_ITERATION);

    pub fn new(n: u32) -> Result<Self, MetricsError> {
        if n > MAX_ITERATION {
            return Err(MetricsError::IterationOutOfRange {
                n,
                max: MAX_ITERATION,
            });
        }
        Ok(Self(n))
    }

    pub fn get(self) -> u32 {
        self.0
    }

    /// Every index from zero through `self`, inclusive.
    pub fn up_to(self) -> impl Iterator<Item = IterationIndex> {
        (0..=self.0).map(IterationIndex)
    }

    /// `3^n`, the lattice resolution per axis.
    pub fn resolution(self) -> u64 {
        3u64.pow(self.0)
    }
}

impl TryFrom<u32> for IterationIndex {
    type Error = MetricsError;

    fn try_from(n: u32) -> Result<Self, Self::Error> {
        Self::new(n)
    }
}

impl fmt::Display for IterationIndex {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        self.0.fmt(f)
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum ModelKind {
    Slices,
    MengerSponge,
}

impl ModelKind {
    pub const ALL: [ModelKind; 2] = [ModelKind::Slices, ModelKind::MengerSponge];

    /// Short lowercase tag used on the command line and in CSV output.
    pub fn tag(self) -> &'static str {
        match self {
            ModelKind::Slices => "slices",
            ModelKind::MengerSponge => "menger",
        }
    }
}

impl fmt::Display for ModelKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.tag())
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
#[error("unknown model `{0}` (expected `slices` or `menger`)")]
pub struct UnknownModel(pub String);

impl FromStr for ModelKind {
    type Err = UnknownModel;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s.to_ascii_lowercase().as_str() {
            "slices" | "slice" => Ok(ModelKind::Slices),
            "menger" | "menger-sponge" | "sponge" => Ok(ModelKind::MengerSponge),
            _ => Err(UnknownModel(s.to_owned())),
        }
    }
}

/// Slice thickness and Menger subcube edge, `1/3^n`.
pub fn char_length(n: IterationIndex) -> ExactScalar {
    ExactScalar::from_ratio(1, 3).pow(n.get() as i32)
}

/// Number of slices, `floor(3^n / 2) + 1`.
pub fn slice_count(n: IterationIndex) -> u64 {
    n.resolution() / 2 + 1
}

pub fn slice_volume(n: IterationIndex) -> ExactScalar {
    ExactScalar::from(slice_count(n)) * char_length(n)
}

pub fn slice_surface(n: IterationIndex) -> ExactScalar {
    let per_slice = ExactScalar::from_integer(2) + ExactScalar::from_integer(4) * char_length(n);
    ExactScalar::from(slice_count(n)) * per_slice
}

/// `(20/27)^n`.
pub fn menger_volume(n: IterationIndex) -> ExactScalar {
    ExactScalar::from_ratio(20, 27).pow(n.get() as i32)
}

/// `(1/9) (20/9)^(n-1) (40 + 80 (2/5)^n)`.
pub fn menger_surface(n: IterationIndex) -> ExactScalar {
    let n = n.get() as i32;
    let growth = ExactScalar::from_ratio(20, 9).pow(n - 1);
    let bracket =
        ExactScalar::from_integer(40) + ExactScalar::from_integer(80) * ExactScalar::from_ratio(2, 5).pow(n);
    ExactScalar::from_ratio(1, 9) * growth * bracket
}

/// Wrapping cube volume, `(1 + 2L)^3`.
pub fn total_volume(n: IterationIndex) -> ExactScalar {
    (ExactScalar::one() + ExactScalar::from_integer(2) * char_length(n)).pow(3)
}

pub fn model_volume(kind: ModelKind, n: IterationIndex) -> ExactScalar {
    match kind {
        ModelKind::Slices => slice_volume(n),
        ModelKind::MengerSponge => menger_volume(n),
    }
}

pub fn model_surface(kind: ModelKind, n: IterationIndex) -> ExactScalar {
    match kind {
        ModelKind::Slices => slice_surface(n),
        ModelKind::MengerSponge => menger_surface(n),
    }
}

/// Wrapping cube volume minus model volume.
pub fn coolant_volume(kind: ModelKind, n: IterationIndex) -> ExactScalar {
    total_volume(n) - model_volume(kind, n)
}

/// Coolant volume available per unit of model surface.
pub fn efficiency(kind: ModelKind, n: IterationIndex) -> ExactScalar {
    coolant_volume(kind, n) / model_surface(kind, n)
}

/// The three comparison ratios between the sponge and the slices.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Ratios {
    /// `E_M / E_s`
    pub efficiency: ExactScalar,
    /// `S_M / S_s`
    pub surface: ExactScalar,
    /// Product of the two; above one the sponge is the better configuration.
    pub quality: ExactScalar,
}

pub fn ratios(n: IterationIndex) -> Ratios {
    let efficiency = efficiency(ModelKind::MengerSponge, n) / efficiency(ModelKind::Slices, n);
    let surface = menger_surface(n) / slice_surface(n);
    let quality = &efficiency * &surface;
    Ratios {
        efficiency,
        surface,
        quality,
    }
}

/// Derived geometry of one model at one iteration order.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GeometrySummary {
    pub kind: ModelKind,
    pub n: IterationIndex,
    /// Slice count; `None` for the sponge.
    pub rho: Option<u64>,
    pub char_length: ExactScalar,
    pub volume: ExactScalar,
    pub surface: ExactScalar,
}

impl GeometrySummary {
    pub fn new(kind: ModelKind, n: IterationIndex) -> Self {
        Self {
            kind,
            n,
            rho: (kind == ModelKind::Slices).then(|| slice_count(n)),
            char_length: char_length(n),
            volume: model_volume(kind, n),
            surface: model_surface(kind, n),
        }
    }
}
