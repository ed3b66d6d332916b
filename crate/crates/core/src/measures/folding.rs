//! Folding symmetry: the largest cap that folds back into the body.

use std::f64::consts::{PI, TAU};

use crate::geom::{
    clip_ring, ring_area, ring_contains, ring_support, ConvexPolygon, HalfPlane, LineSpec, Point,
    Side,
};
use crate::golden;
use crate::Result;

use super::{better, check_measurable, map_ordered, top_local_maxima};
use super::{MeasureKind, MeasureOptions, SymmetryReport};

/// Containment slack for fold feasibility, relative to the diameter.
pub const FOLD_TOLERANCE: f64 = 1e-12;

/// The cap `P ∩ H`, or `None` if it has no area.
pub fn fold_cap(p: &ConvexPolygon, h: &HalfPlane) -> Option<ConvexPolygon> {
    p.clip(h)
}

/// True iff the cap `P ∩ H` reflected across `∂H` lies in `P` within `tol`.
/// An empty cap folds trivially.
pub fn folding_feasible(p: &ConvexPolygon, h: &HalfPlane, tol: f64) -> bool {
    let mut cap = Vec::new();
    clip_ring(p.vertices(), h, &mut cap);
    cap.iter()
        .all(|&v| p.contains(h.line.reflect_point(v), tol))
}

struct Evaluator<'a> {
    verts: &'a [Point],
    cap: Vec<Point>,
    tol: f64,
    evals: u64,
}

impl<'a> Evaluator<'a> {
    fn new(verts: &'a [Point], tol: f64) -> Self {
        Evaluator {
            verts,
            cap: Vec::with_capacity(verts.len() + 2),
            tol,
            evals: 0,
        }
    }

    /// Cap area at `{x·n(θ) ≥ d}` if that cap folds into the body.
    fn feasible_cap(&mut self, theta: f64, d: f64) -> Option<f64> {
        let h = HalfPlane::new(LineSpec { theta, d }, Side::Positive);
        clip_ring(self.verts, &h, &mut self.cap);
        self.evals += 1;
        let ok = self
            .cap
            .iter()
            .all(|&v| ring_contains(self.verts, h.line.reflect_point(v), self.tol));
        ok.then(|| ring_area(&self.cap).max(0.0))
    }

    /// Scans offsets from the largest cap down and bisects past the first
    /// feasible sample. Returns `(d, cap_area)`.
    fn best_fold(&mut self, theta: f64, samples: usize, offset_tol: f64) -> (f64, f64) {
        let (lo, hi) = ring_support(self.verts, Point::unit(theta));
        let at = |j: usize| lo + (hi - lo) * j as f64 / samples as f64;
        for j in 1..samples {
            let d = at(j);
            if let Some(area) = self.feasible_cap(theta, d) {
                let (mut bad, mut good, mut good_area) = (at(j - 1), d, area);
                while good - bad > offset_tol {
                    let mid = 0.5 * (bad + good);
                    match self.feasible_cap(theta, mid) {
                        Some(a) => {
                            good = mid;
                            good_area = a;
                        }
                        None => bad = mid,
                    }
                }
                return (good, good_area);
            }
        }
        (hi, 0.0)
    }
}

#[derive(Debug, Clone, Copy)]
struct Sample {
    theta: f64,
    d: f64,
    area: f64,
    evals: u64,
}

/// Maximizes `2·area(P ∩ H)/area(P)` over halfplanes whose cap folds into
/// `P`.
pub fn folding(p: &ConvexPolygon, opts: &MeasureOptions) -> Result<SymmetryReport> {
    opts.validate()?;
    check_measurable(p)?;
    let verts = p.vertices();
    let body_area = p.area();
    let diam = p.diameter();
    let tol = opts.offset_tolerance * diam;
    let feas_tol = FOLD_TOLERANCE * diam;
    let samples = opts.fold_offset_samples;

    let m = opts.angle_samples;
    let step = TAU / m as f64;
    let angles: Vec<f64> = (0..m).map(|i| i as f64 * step).collect();
    let grid: Vec<Sample> = map_ordered(
        &angles,
        || Evaluator::new(verts, feas_tol),
        |ev, &theta| {
            let before = ev.evals;
            let (d, area) = ev.best_fold(theta, samples, tol);
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
    let refined: Vec<(Sample, f64, bool)> = map_ordered(
        &peaks,
        || Evaluator::new(verts, feas_tol),
        |ev, &i| {
            let before = ev.evals;
            let (lo, hi) = (angles[i] - step, angles[i] + step);
            let (theta, _) = golden::maximize(
                |t| ev.best_fold(t.rem_euclid(TAU), samples, tol).1,
                lo,
                hi,
                0.0,
                opts.refine_rounds,
            );
            let theta = theta.rem_euclid(TAU);
            let (d, area) = ev.best_fold(theta, samples, tol);
            let width = 2.0 * step * 0.618_033_988_749_895_f64.powi(opts.refine_rounds as i32);
            let on_edge =
                (theta - lo).rem_euclid(TAU) <= width || (hi - theta).rem_euclid(TAU) <= width;
            (
                Sample {
                    theta,
                    d,
                    area,
                    evals: ev.evals - before,
                },
                width,
                on_edge,
            )
        },
    );

    let evaluations = grid.iter().map(|s| s.evals).sum::<u64>()
        + refined.iter().map(|(s, _, _)| s.evals).sum::<u64>();
    let mut best = grid[peaks[0]];
    let mut achieved = step;
    let mut limited = true;
    for &(s, width, on_edge) in &refined {
        if better((s.area, s.theta, s.d), (best.area, best.theta, best.d)) {
            best = s;
            achieved = width;
            limited = on_edge;
        }
    }
    debug_assert!(best.theta >= 0.0 && best.theta < TAU + PI);
    Ok(SymmetryReport {
        measure: MeasureKind::Folding,
        value: 2.0 * best.area / body_area,
        line: Some(LineSpec::new(best.theta, best.d)),
        center: None,
        fold_side: Some(Side::Positive),
        overlap_area: best.area,
        body_area,
        evaluations,
        achieved_tolerance: achieved,
        resolution_limited: limited,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn square() -> ConvexPolygon {
        ConvexPolygon::from_xy(&[(0.0, 0.0), (1.0, 0.0), (1.0, 1.0), (0.0, 1.0)]).unwrap()
    }

    fn keep_right(x: f64) -> HalfPlane {
        HalfPlane::new(LineSpec::new(0.0, x), Side::Positive)
    }

    #[test]
    fn feasibility_examples() {
        assert!(folding_feasible(&square(), &keep_right(0.75), 1e-9));
        assert!(!folding_feasible(&square(), &keep_right(0.25), 1e-9));
        let t = ConvexPolygon::from_xy(&[(0.0, 0.0), (1.0, 0.0), (0.0, 1.0)]).unwrap();
        assert!(folding_feasible(&t, &keep_right(0.9), 1e-9));
    }

    #[test]
    fn square_folds_in_half() {
        let r = folding(&square(), &MeasureOptions::default()).unwrap();
        assert!((r.value - 1.0).abs() < 1e-9, "{}", r.value);
        let cap = r.overlap_region(&square()).unwrap();
        assert!((cap.area() - 0.5).abs() < 1e-9);
    }
}
