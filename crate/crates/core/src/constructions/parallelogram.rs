//! Parallelograms with unit base and their folding symmetry in closed form.

use serde::{Deserialize, Serialize};

use crate::geom::{ConvexPolygon, Point};
use crate::{Error, Result};

/// Golden ratio.
pub const PHI: f64 = 1.618_033_988_749_895;

/// Shear `d1` and height `h` of the parallelogram with base `(0,0)–(1,0)`.
/// The base is the longest side: `d1² + h² ≤ 1`.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct ParallelogramParam {
    pub d1: f64,
    pub h: f64,
}

impl ParallelogramParam {
    pub fn new(d1: f64, h: f64) -> Result<Self> {
        let p = ParallelogramParam { d1, h };
        p.check(false)?;
        Ok(p)
    }

    /// With `allow_flat`, `h = 0` is accepted as the degenerate limit.
    fn check(&self, allow_flat: bool) -> Result<()> {
        let ParallelogramParam { d1, h } = *self;
        let h_ok = if allow_flat { h >= 0.0 } else { h > 0.0 };
        if !((0.0..1.0).contains(&d1) && h_ok && h <= 1.0 && d1 * d1 + h * h <= 1.0 + 1e-12) {
            return Err(Error::BadParam(format!(
                "parallelogram needs 0 ≤ d1 < 1, 0 < h ≤ 1, d1² + h² ≤ 1; got d1={d1}, h={h}"
            )));
        }
        Ok(())
    }
}

/// Vertices `(0,0), (1,0), (1+d1, h), (d1, h)`.
pub fn parallelogram(p: ParallelogramParam) -> Result<ConvexPolygon> {
    p.check(false)?;
    let pts = [
        Point::new(0.0, 0.0),
        Point::new(1.0, 0.0),
        Point::new(1.0 + p.d1, p.h),
        Point::new(p.d1, p.h),
    ];
    ConvexPolygon::new(&pts)
}

/// `max{1/(1 − d1 + √(1−h²)), √(d1² + h²), 1 − d1}`. The flat limit
/// `h = 0` is accepted here even though no polygon exists there.
pub fn folding_parallelogram_closed_form(p: ParallelogramParam) -> Result<f64> {
    p.check(true)?;
    let ParallelogramParam { d1, h } = p;
    let diagonal = 1.0 / (1.0 - d1 + (1.0 - h * h).sqrt());
    Ok(diagonal.max((d1 * d1 + h * h).sqrt()).max(1.0 - d1))
}

/// Evenly spread grid of valid parameters: `d1 = 0.95·i/n` and
/// `h = ((j+1)/n)·√(1 − d1²)` for `i, j < n`.
pub fn parallelogram_grid(n: usize) -> Vec<ParallelogramParam> {
    let mut out = Vec::with_capacity(n * n);
    for i in 0..n {
        let d1 = 0.95 * i as f64 / n as f64;
        for j in 0..n {
            let h = (j as f64 + 1.0) / n as f64 * (1.0 - d1 * d1).sqrt();
            out.push(ParallelogramParam { d1, h });
        }
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn examples() {
        let r = parallelogram(ParallelogramParam::new(0.0, 0.5).unwrap()).unwrap();
        assert!((r.area() - 0.5).abs() < 1e-15);
        assert!(ParallelogramParam::new(0.3, 0.4).is_ok());
        assert!(ParallelogramParam::new(2.0 - PHI, 0.01).is_ok());
        assert!(ParallelogramParam::new(0.9, 0.9).is_err());
    }

    #[test]
    fn closed_form_values() {
        let v = |d1, h| folding_parallelogram_closed_form(ParallelogramParam { d1, h }).unwrap();
        assert!((v(0.0, 1e-9) - 1.0).abs() < 1e-15);
        assert!((v(2.0 - PHI, 0.0) - 1.0 / PHI).abs() < 1e-15);
        assert!((v(0.3, 0.4) - 0.7).abs() < 1e-15);
    }

    #[test]
    fn grid_is_valid_and_beats_golden_limit() {
        let grid = parallelogram_grid(20);
        assert_eq!(grid.len(), 400);
        for p in grid {
            assert!(ParallelogramParam::new(p.d1, p.h).is_ok());
            assert!(folding_parallelogram_closed_form(p).unwrap() > 1.0 / PHI);
        }
    }
}
