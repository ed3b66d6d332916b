//! Axiality: the largest overlap of a polygon with a mirror image.

use std::f64::consts::PI;

use crate::geom::{ring_support, Clipper, ConvexPolygon, LineSpec, Point};
use crate::golden;
use crate::Result;

use super::{better, check_measurable, map_ordered, top_local_maxima};
use super::{MeasureKind, MeasureOptions, SymmetryReport};

/// `area(P ∩ refl_L P)`.
pub fn overlap_area_axial(p: &ConvexPolygon, l: &LineSpec) -> f64 {
    Evaluator::new(p.vertices()).area(l.theta, l.d)
}

/// `area(P ∩ refl_L P) / area(P)`.
pub fn overlap_ratio_axial(p: &ConvexPolygon, l: &LineSpec) -> f64 {
    overlap_area_axial(p, l) / p.area()
}

/// The best mirror line with normal angle `theta`, found by golden-section
/// search over the offset to within `tol` (length units). Returns the line
/// and its overlap ratio.
pub fn best_offset_axial(p: &ConvexPolygon, theta: f64, tol: f64) -> (LineSpec, f64) {
    let (d, area) = Evaluator::new(p.vertices()).best_offset(theta, tol);
    (LineSpec::new(theta, d), area / p.area())
}

/// Reflection-overlap evaluator with reusable buffers.
pub(crate) struct Evaluator<'a> {
    verts: &'a [Point],
    mirror: Vec<Point>,
    clipper: Clipper,
    pub(crate) evals: u64,
}

impl<'a> Evaluator<'a> {
    pub(crate) fn new(verts: &'a [Point]) -> Self {
        Evaluator {
            verts,
            mirror: Vec::with_capacity(verts.len()),
            clipper: Clipper::default(),
            evals: 0,
        }
    }

    pub(crate) fn area(&mut self, theta: f64, d: f64) -> f64 {
        let n = Point::unit(theta);
        self.mirror.clear();
        self.mirror.extend(
            self.verts
                .iter()
                .rev()
                .map(|&v| v - n * (2.0 * (v.dot(n) - d))),
        );
        self.evals += 1;
        self.clipper.intersection_area(self.verts, &self.mirror)
    }

    /// Golden-section search over the offset; the slice is unimodal.
    pub(crate) fn best_offset(&mut self, theta: f64, tol: f64) -> (f64, f64) {
        let (lo, hi) = ring_support(self.verts, Point::unit(theta));
        let iters = golden_iterations(hi - lo, tol);
        golden::maximize(|d| self.area(theta, d), lo, hi, tol, iters)
    }
}

pub(crate) fn golden_iterations(range: f64, tol: f64) -> usize {
    if range <= tol {
        return 1;
    }
    ((range / tol).ln() / 1.618_033_988_749_895_f64.ln()).ceil() as usize + 4
}

/// Line-normal angles in `[0, π)` at which one edge's direction mirrors
/// onto another's. Thin polygons often attain axiality exactly there, at
/// angles a uniform grid only approximates.
pub(crate) fn edge_bisector_angles(verts: &[Point]) -> Vec<f64> {
    let n = verts.len();
    let dirs: Vec<f64> = (0..n)
        .map(|i| {
            let e = verts[(i + 1) % n] - verts[i];
            e.y.atan2(e.x)
        })
        .collect();
    let mut out = Vec::with_capacity(n * (n + 1));
    for i in 0..n {
        for j in i..n {
            let psi = 0.5 * (dirs[i] + dirs[j]);
            out.push(psi.rem_euclid(PI));
            out.push((psi + 0.5 * PI).rem_euclid(PI));
        }
    }
    out
}

#[derive(Debug, Clone, Copy)]
struct Sample {
    theta: f64,
    d: f64,
    area: f64,
    evals: u64,
}

/// Maximizes the reflection overlap over all lines.
pub fn axiality(p: &ConvexPolygon, opts: &MeasureOptions) -> Result<SymmetryReport> {
    opts.validate()?;
    check_measurable(p)?;
    let verts = p.vertices();
    let body_area = p.area();
    let tol = opts.offset_tolerance * p.diameter();

    let step = PI / opts.angle_samples as f64;
    let mut angles: Vec<f64> = (0..opts.angle_samples).map(|i| i as f64 * step).collect();
    angles.extend(edge_bisector_angles(verts));
    angles.sort_by(f64::total_cmp);
    angles.dedup_by(|a, b| (*a - *b).abs() < 1e-15);

    let grid: Vec<Sample> = map_ordered(
        &angles,
        || Evaluator::new(verts),
        |ev, &theta| {
            let before = ev.evals;
            let (d, area) = ev.best_offset(theta, tol);
            Sample {
                theta,
                d,
                area,
                evals: ev.evals - before,
            }
        },
    );

    let values: Vec<f64> = grid.iter().map(|s| s.area).collect();
    let peaks = top_local_maxima(&values, opts.refine_brackets);
    let m = angles.len();
    let brackets: Vec<(f64, f64)> = peaks
        .iter()
        .map(|&i| {
            let lo = if i == 0 {
                angles[m - 1] - PI
            } else {
                angles[i - 1]
            };
            let hi = if i + 1 == m {
                angles[0] + PI
            } else {
                angles[i + 1]
            };
            (lo, hi)
        })
        .collect();

    let refined: Vec<(Sample, f64, bool)> = map_ordered(
        &brackets,
        || Evaluator::new(verts),
        |ev, &(lo, hi)| {
            let before = ev.evals;
            let (theta, _) = golden::maximize(
                |theta| ev.best_offset(theta, tol).1,
                lo,
                hi,
                0.0,
                opts.refine_rounds,
            );
            // Recover the offset at the winning angle; the search is
            // deterministic, so this reproduces the winning value.
            let (d, area) = ev.best_offset(theta, tol);
            let width = (hi - lo) * 0.618_033_988_749_895_f64.powi(opts.refine_rounds as i32);
            let on_edge = theta <= lo + width || theta >= hi - width;
            let s = Sample {
                theta,
                d,
                area,
                evals: ev.evals - before,
            };
            (s, width, on_edge)
        },
    );

    let evaluations = grid.iter().map(|s| s.evals).sum::<u64>()
        + refined.iter().map(|(s, _, _)| s.evals).sum::<u64>();
    let mut best = grid[peaks[0]];
    let mut achieved = step;
    let mut limited = true;
    for &(s, width, on_edge) in &refined {
        if better(key(&s), key(&best)) {
            best = s;
            achieved = width;
            limited = on_edge;
        }
    }
    let line = LineSpec::new(best.theta, best.d).canonical();
    Ok(SymmetryReport {
        measure: MeasureKind::Axiality,
        value: best.area / body_area,
        line: Some(line),
        center: None,
        fold_side: None,
        overlap_area: best.area,
        body_area,
        evaluations,
        achieved_tolerance: achieved,
        resolution_limited: limited,
    })
}

fn key(s: &Sample) -> (f64, f64, f64) {
    (s.area, s.theta, s.d)
}
