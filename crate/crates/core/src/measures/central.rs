//! Central symmetry: the largest overlap with a point reflection.
//!
//! `c ↦ area(P ∩ (2c − P))` has a concave square root (Brunn–Minkowski),
//! so it is unimodal along every line and has no spurious local maxima.
//! It can still have ridges, so line searches run along a rotating set of
//! directions plus the net displacement of each round.

use std::f64::consts::PI;

use crate::geom::{Clipper, ConvexPolygon, Point};
use crate::golden;
use crate::Result;

use super::axial::golden_iterations;
use super::{check_measurable, MeasureKind, MeasureOptions, SymmetryReport};

/// `area(P ∩ (2c − P)) / area(P)`.
pub fn overlap_ratio_central(p: &ConvexPolygon, c: Point) -> f64 {
    Evaluator::new(p.vertices()).area(c) / p.area()
}

struct Evaluator<'a> {
    verts: &'a [Point],
    image: Vec<Point>,
    clipper: Clipper,
    evals: u64,
}

impl<'a> Evaluator<'a> {
    fn new(verts: &'a [Point]) -> Self {
        Evaluator {
            verts,
            image: Vec::with_capacity(verts.len()),
            clipper: Clipper::default(),
            evals: 0,
        }
    }

    fn area(&mut self, c: Point) -> f64 {
        let c2 = c * 2.0;
        self.image.clear();
        self.image.extend(self.verts.iter().map(|&v| c2 - v));
        self.evals += 1;
        self.clipper.intersection_area(self.verts, &self.image)
    }
}

/// Parameter range `t` with `c + t·u` inside the polygon.
fn chord(verts: &[Point], c: Point, u: Point) -> (f64, f64) {
    let n = verts.len();
    let (mut lo, mut hi) = (f64::NEG_INFINITY, f64::INFINITY);
    for i in 0..n {
        let a = verts[i];
        let e = verts[(i + 1) % n] - a;
        let (s0, s1) = (e.cross(c - a), e.cross(u));
        if s1.abs() < 1e-300 {
            continue;
        }
        let t = -s0 / s1;
        if s1 > 0.0 {
            lo = lo.max(t);
        } else {
            hi = hi.min(t);
        }
    }
    (lo.min(0.0), hi.max(0.0))
}

/// Maximizes the point-reflection overlap over all centers.
pub fn central_symmetry(p: &ConvexPolygon, opts: &MeasureOptions) -> Result<SymmetryReport> {
    opts.validate()?;
    check_measurable(p)?;
    let verts = p.vertices();
    let body_area = p.area();
    let tol = opts.offset_tolerance * p.diameter();

    let mut dirs: Vec<Point> = [0.0, 0.25 * PI, 0.5 * PI, 0.75 * PI]
        .iter()
        .map(|&a| Point::unit(a))
        .collect();
    let n = verts.len();
    dirs.extend((0..n).map(|i| {
        let e = verts[(i + 1) % n] - verts[i];
        e * (1.0 / e.norm())
    }));

    let mut ev = Evaluator::new(verts);
    let mut c = p.centroid();
    let mut best = ev.area(c);
    let mut converged = false;
    let mut last_step = 0.0;

    let line_search = |ev: &mut Evaluator, c: Point, u: Point| -> (Point, f64) {
        let (lo, hi) = chord(verts, c, u);
        let (t, a) = golden::maximize(
            |t| ev.area(c + u * t),
            lo,
            hi,
            tol,
            golden_iterations(hi - lo, tol),
        );
        (c + u * t, a)
    };

    for _ in 0..opts.refine_rounds {
        let start = c;
        let start_val = best;
        for &u in &dirs {
            let (c2, a) = line_search(&mut ev, c, u);
            if a > best {
                c = c2;
                best = a;
            }
        }
        let shift = c - start;
        if shift.norm() > 0.0 {
            let (c2, a) = line_search(&mut ev, c, shift * (1.0 / shift.norm()));
            if a > best {
                c = c2;
                best = a;
            }
        }
        last_step = c.dist(start);
        if best - start_val <= 1e-15 * body_area && last_step <= tol {
            converged = true;
            break;
        }
    }

    Ok(SymmetryReport {
        measure: MeasureKind::Central,
        value: best / body_area,
        line: None,
        center: Some(c),
        fold_side: None,
        overlap_area: best,
        body_area,
        evaluations: ev.evals,
        achieved_tolerance: last_step.max(tol),
        resolution_limited: !converged,
    })
}
