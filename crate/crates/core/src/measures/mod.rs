//! Symmetry-measure engines.
//!
//! Each engine maximizes an overlap ratio over a family of reflections and
//! returns a [`SymmetryReport`]. Reported values are always realized by the
//! reported line or center, so they are lower bounds on the true measure;
//! the search is designed to reach the true value within
//! `achieved_tolerance`.

mod axial;
mod central;
mod folding;

use serde::Serialize;

use crate::geom::{ConvexPolygon, HalfPlane, LineSpec, Point, Side};
use crate::{Error, Result};

pub use axial::{axiality, best_offset_axial, overlap_area_axial, overlap_ratio_axial};
pub use central::{central_symmetry, overlap_ratio_central};
pub use folding::{fold_cap, folding, folding_feasible};

/// Polygons whose diameter exceeds this multiple of their minimum width
/// are rejected: overlap areas drop below floating-point resolution.
pub const MAX_ASPECT_RATIO: f64 = 1e6;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum MeasureKind {
    Axiality,
    Central,
    Folding,
}

impl MeasureKind {
    pub fn name(self) -> &'static str {
        match self {
            MeasureKind::Axiality => "axiality",
            MeasureKind::Central => "central",
            MeasureKind::Folding => "folding",
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct MeasureOptions {
    /// Grid size over the line-normal angle.
    pub angle_samples: usize,
    /// Offset and center tolerance, as a fraction of the diameter.
    pub offset_tolerance: f64,
    /// Number of best grid angles refined further.
    pub refine_brackets: usize,
    /// Golden-section iterations per angle refinement.
    pub refine_rounds: usize,
    /// Offsets scanned per fold direction.
    pub fold_offset_samples: usize,
}

impl Default for MeasureOptions {
    fn default() -> Self {
        MeasureOptions {
            angle_samples: 720,
            offset_tolerance: 1e-10,
            refine_brackets: 5,
            refine_rounds: 60,
            fold_offset_samples: 512,
        }
    }
}

impl MeasureOptions {
    /// Cheaper settings for inner loops such as annealing.
    pub fn fast() -> Self {
        MeasureOptions {
            angle_samples: 180,
            offset_tolerance: 1e-8,
            refine_brackets: 2,
            refine_rounds: 30,
            fold_offset_samples: 128,
        }
    }

    pub fn validate(&self) -> Result<()> {
        let positive = self.angle_samples > 0
            && self.refine_brackets > 0
            && self.refine_rounds > 0
            && self.fold_offset_samples > 1;
        if !positive {
            return Err(Error::BadParam("measure options must be positive".into()));
        }
        if !(self.offset_tolerance > 0.0 && self.offset_tolerance < 1.0) {
            return Err(Error::BadParam(format!(
                "offset tolerance {} must lie in (0, 1) as a fraction of the diameter",
                self.offset_tolerance
            )));
        }
        Ok(())
    }
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct SymmetryReport {
    pub measure: MeasureKind,
    pub value: f64,
    /// Mirror or fold line; absent for central symmetry.
    pub line: Option<LineSpec>,
    /// Reflection center; central symmetry only.
    pub center: Option<Point>,
    /// Side of `line` that is folded over; folding only.
    pub fold_side: Option<Side>,
    /// Overlap area for axiality and central symmetry, cap area for folding.
    pub overlap_area: f64,
    pub body_area: f64,
    pub evaluations: u64,
    /// Width of the final search bracket: radians of line angle for
    /// axiality and folding, length units for the central center.
    pub achieved_tolerance: f64,
    /// Set when the optimum sits on the edge of its refinement bracket, so
    /// the value may be limited by grid resolution.
    pub resolution_limited: bool,
}

impl SymmetryReport {
    /// The region whose area is `overlap_area`: `P ∩ refl(P)` for axiality
    /// and central symmetry, the folded cap for folding.
    pub fn overlap_region(&self, p: &ConvexPolygon) -> Option<ConvexPolygon> {
        match (self.measure, self.line, self.center, self.fold_side) {
            (MeasureKind::Axiality, Some(l), _, _) => p.intersect(&p.reflect(&l)),
            (MeasureKind::Central, _, Some(c), _) => p.intersect(&p.point_reflect(c)),
            (MeasureKind::Folding, Some(l), _, Some(s)) => p.clip(&HalfPlane::new(l, s)),
            _ => None,
        }
    }
}

/// Shared input validation for all engines.
pub(crate) fn check_measurable(p: &ConvexPolygon) -> Result<()> {
    let ar = p.aspect_ratio();
    if !ar.is_finite() || ar > MAX_ASPECT_RATIO {
        return Err(Error::TooThin(ar));
    }
    Ok(())
}

/// Maps `f` over `items`, in parallel when the `parallel` feature is on.
/// Output order always matches input order.
pub(crate) fn map_ordered<T, R, S, I, F>(items: &[T], init: I, f: F) -> Vec<R>
where
    T: Sync,
    R: Send,
    I: Fn() -> S + Sync + Send,
    F: Fn(&mut S, &T) -> R + Sync + Send,
{
    #[cfg(feature = "parallel")]
    {
        use rayon::prelude::*;
        items.par_iter().map_init(&init, |s, t| f(s, t)).collect()
    }
    #[cfg(not(feature = "parallel"))]
    {
        let mut s = init();
        items.iter().map(|t| f(&mut s, t)).collect()
    }
}

/// Lexicographic `(value, theta, d)` comparison used to break ties
/// deterministically.
pub(crate) fn better(a: (f64, f64, f64), b: (f64, f64, f64)) -> bool {
    a.0.total_cmp(&b.0)
        .then(b.1.total_cmp(&a.1))
        .then(b.2.total_cmp(&a.2))
        .is_gt()
}

/// Indices of the `k` best local maxima of a cyclic sequence, best first.
pub(crate) fn top_local_maxima(values: &[f64], k: usize) -> Vec<usize> {
    let n = values.len();
    let mut peaks: Vec<usize> = (0..n)
        .filter(|&i| {
            let (l, r) = (values[(i + n - 1) % n], values[(i + 1) % n]);
            values[i] >= l && values[i] >= r
        })
        .collect();
    if peaks.is_empty() {
        peaks = (0..n).collect();
    }
    peaks.sort_by(|&a, &b| values[b].total_cmp(&values[a]).then(a.cmp(&b)));
    peaks.truncate(k);
    peaks
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn tie_break_is_lexicographic() {
        assert!(better((1.0, 0.0, 0.0), (0.5, 0.0, 0.0)));
        assert!(better((1.0, 0.1, 0.0), (1.0, 0.2, 0.0)));
        assert!(!better((1.0, 0.2, 0.0), (1.0, 0.1, 0.0)));
        assert!(better((1.0, 0.1, -1.0), (1.0, 0.1, 0.0)));
    }

    #[test]
    fn local_maxima_wrap_around() {
        let v = [5.0, 1.0, 2.0, 1.0, 4.0];
        assert_eq!(top_local_maxima(&v, 2), vec![0, 2]);
        assert_eq!(top_local_maxima(&v, 5), vec![0, 2]);
    }

    #[test]
    fn default_options_validate() {
        assert!(MeasureOptions::default().validate().is_ok());
        let bad = MeasureOptions {
            offset_tolerance: 2.0,
            ..MeasureOptions::default()
        };
        assert!(bad.validate().is_err());
    }
}
