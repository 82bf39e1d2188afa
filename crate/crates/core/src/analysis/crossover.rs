use thiserror::Error;

use super::EfficiencySeries;
use crate::metrics::ModelKind;

/// Tag recorded in every report; both curves are interpolated linearly in
/// `(ln S, ln E)`.
pub const INTERPOLATION_METHOD: &str = "log-linear";

#[derive(Debug, Clone, PartialEq, Error)]
pub enum CrossoverError {
    #[error("{model} series has {points} point(s); at least two are needed")]
    TooFewPoints { model: ModelKind, points: usize },
    #[error("the two series cover disjoint surface ranges")]
    DisjointRanges,
    #[error("{}", describe_no_crossover(*.dominant, *.shared_range))]
    NoCrossover {
        /// Model whose curve is never below the other's; `None` when neither
        /// dominates (the curves coincide, or the first only drops through
        /// the second).
        dominant: Option<ModelKind>,
        shared_range: (f64, f64),
    },
}

fn describe_no_crossover(dominant: Option<ModelKind>, (lo, hi): (f64, f64)) -> String {
    match dominant {
        Some(model) => format!("no crossover: {model} is never below the other curve on S in [{lo:.6}, {hi:.6}]"),
        None => format!("no crossover from below to above on S in [{lo:.6}, {hi:.6}]"),
    }
}

#[derive(Debug, Clone, PartialEq)]
pub struct CrossoverReport {
    /// Model that overtakes past `s_star`.
    pub rising: ModelKind,
    /// Model it overtakes.
    pub falling: ModelKind,
    /// Surface where the two interpolated curves meet.
    pub s_star: f64,
    /// Interpolated efficiency at `s_star`.
    pub e_star: f64,
    /// Iteration orders of the segment containing `s_star`, rising model.
    pub rising_bracket: (u32, u32),
    /// Same for the falling model.
    pub falling_bracket: (u32, u32),
    pub method: &'static str,
}

struct LogCurve {
    /// `(ln S, ln E, n)`, strictly increasing in `ln S`.
    points: Vec<(f64, f64, u32)>,
}

impl LogCurve {
    fn new(series: &EfficiencySeries) -> Result<Self, CrossoverError> {
        if series.points.len() < 2 {
            return Err(CrossoverError::TooFewPoints {
                model: series.model,
                points: series.points.len(),
            });
        }
        let points = series
            .points
            .iter()
            .map(|p| (p.surface.to_f64().ln(), p.efficiency.to_f64().ln(), p.n.get()))
            .collect();
        Ok(Self { points })
    }

    fn start(&self) -> f64 {
        self.points[0].0
    }

    fn end(&self) -> f64 {
        self.points[self.points.len() - 1].0
    }

    /// Index `i` of the segment `[i, i + 1]` holding `ls`; the last segment
    /// owns its right endpoint.
    fn segment(&self, ls: f64) -> usize {
        let i = self.points.partition_point(|p| p.0 <= ls);
        i.saturating_sub(1).min(self.points.len() - 2)
    }

    fn eval(&self, ls: f64) -> f64 {
        let i = self.segment(ls);
        let (x0, y0, _) = self.points[i];
        let (x1, y1, _) = self.points[i + 1];
        y0 + (ls - x0) * (y1 - y0) / (x1 - x0)
    }

    fn bracket(&self, ls: f64) -> (u32, u32) {
        let i = self.segment(ls);
        (self.points[i].2, self.points[i + 1].2)
    }
}

/// Finds the smallest surface past which `a`'s efficiency curve rises from
/// below `b`'s to above it.
///
/// A crossing needs `a` strictly below `b` somewhere before it is strictly
/// above; curves that only touch, or where one is never below the other, give
/// [`CrossoverError::NoCrossover`].
pub fn find_crossover(a: &EfficiencySeries, b: &EfficiencySeries) -> Result<CrossoverReport, CrossoverError> {
    let ca = LogCurve::new(a)?;
    let cb = LogCurve::new(b)?;
    let lo = ca.start().max(cb.start());
    let hi = ca.end().min(cb.end());
    if lo > hi {
        return Err(CrossoverError::DisjointRanges);
    }

    // Between consecutive breakpoints both curves are straight lines, so the
    // log-gap is linear there and its sign pattern is read off the vertices.
    let mut breaks: Vec<f64> = ca
        .points
        .iter()
        .chain(&cb.points)
        .map(|p| p.0)
        .filter(|&x| x >= lo && x <= hi)
        .collect();
    breaks.push(lo);
    breaks.push(hi);
    breaks.sort_by(f64::total_cmp);
    breaks.dedup();

    let gap = |x: f64| ca.eval(x) - cb.eval(x);
    let mut last_negative: Option<usize> = None;
    let (mut any_positive, mut any_negative) = (false, false);
    for (i, &x) in breaks.iter().enumerate() {
        let g = gap(x);
        if g < 0.0 {
            last_negative = Some(i);
            any_negative = true;
        } else if g > 0.0 {
            any_positive = true;
            if let Some(j) = last_negative {
                let (x0, g0) = (breaks[j], gap(breaks[j]));
                let (x1, g1) = (breaks[j + 1], gap(breaks[j + 1]));
                let root = x0 + (x1 - x0) * (-g0) / (g1 - g0);
                return Ok(CrossoverReport {
                    rising: a.model,
                    falling: b.model,
                    s_star: root.exp(),
                    e_star: ca.eval(root).exp(),
                    rising_bracket: ca.bracket(root),
                    falling_bracket: cb.bracket(root),
                    method: INTERPOLATION_METHOD,
                });
            }
        }
    }

    let dominant = match (any_positive, any_negative) {
        (true, false) => Some(a.model),
        (false, true) => Some(b.model),
        _ => None,
    };
    Err(CrossoverError::NoCrossover {
        dominant,
        shared_range: (lo.exp(), hi.exp()),
    })
}
