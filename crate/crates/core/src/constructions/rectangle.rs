//! Inscribed rectangles of prescribed area in centrally symmetric polygons,
//! and the caps they leave behind.
//!
//! Centered at the origin, a centrally symmetric body `K` has radial
//! function `ρ`. The points `p = ρ(φ)u(φ)` and `q = ρ(φ−δ)u(φ−δ)` together
//! with `−p, −q` span an inscribed parallelogram of area
//! `2ρ(φ)ρ(φ−δ) sin δ`, which is a rectangle exactly when its diagonals
//! agree, i.e. when the skew `κ = ρ(φ−δ) − ρ(φ)` vanishes. For each `φ` the
//! sweep takes the first `δ` reaching the target area; turning `φ` by the
//! matching angle swaps the roles of the two diagonals and flips the sign
//! of `κ`, so a sign change exists and bisection finds the rectangle.

use std::f64::consts::PI;

use serde::Serialize;

use crate::geom::{ConvexPolygon, HalfPlane, LineSpec, Point, Side};
use crate::{Error, Result};

/// Boundary sweep resolution over `φ ∈ [0, π]`.
pub const SWEEP_SAMPLES: usize = 4096;
/// Resolution of the first-crossing scan over `δ ∈ (0, π)`.
const DELTA_SAMPLES: usize = 512;
/// Vertex-match tolerance for central symmetry, relative to the diameter.
pub const SYMMETRY_TOL: f64 = 1e-8;

/// A rectangle with its corners on the boundary of a body.
#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct RectangleInBody {
    /// Counterclockwise corners.
    pub corners: [Point; 4],
    pub area: f64,
}

impl RectangleInBody {
    /// Builds from counterclockwise corners; the area is `|AB|·|BC|`.
    pub fn from_corners(corners: [Point; 4]) -> Self {
        let area = corners[0].dist(corners[1]) * corners[1].dist(corners[2]);
        RectangleInBody { corners, area }
    }

    /// Largest violation of the rectangle conditions, relative to the
    /// diagonal length: diagonal mismatch, diagonal midpoint mismatch and
    /// corner-angle cosines.
    pub fn rectangle_defect(&self) -> f64 {
        let c = self.corners;
        let (d1, d2) = (c[0].dist(c[2]), c[1].dist(c[3]));
        let scale = d1.max(d2);
        let mid = ((c[0] + c[2]) * 0.5).dist((c[1] + c[3]) * 0.5) / scale;
        let mut worst = ((d1 - d2) / scale).abs().max(mid);
        for i in 0..4 {
            let a = c[(i + 1) % 4] - c[i];
            let b = c[(i + 3) % 4] - c[i];
            worst = worst.max((a.dot(b) / (a.norm() * b.norm())).abs());
        }
        worst
    }

    /// Largest distance of a corner from the boundary of `p`.
    pub fn boundary_defect(&self, p: &ConvexPolygon) -> f64 {
        self.corners
            .iter()
            .map(|&x| boundary_distance(p, x))
            .fold(0.0, f64::max)
    }

    /// Areas of the four caps of `p` beyond the sides of the rectangle;
    /// cap `i` lies beyond the side from corner `i` to corner `i+1`.
    pub fn caps(&self, p: &ConvexPolygon) -> [f64; 4] {
        let mut out = [0.0; 4];
        for (i, slot) in out.iter_mut().enumerate() {
            *slot = p
                .clip(&self.side_halfplane(i, 0.0))
                .map_or(0.0, |c| c.area());
        }
        out
    }

    /// The outer halfplane of side `i`, shifted outward by `offset`.
    pub fn side_halfplane(&self, i: usize, offset: f64) -> HalfPlane {
        let (a, b) = (self.corners[i], self.corners[(i + 1) % 4]);
        let e = b - a;
        let theta = (-e.x).atan2(e.y);
        let line = LineSpec::through(a, theta);
        HalfPlane::new(LineSpec::new(line.theta, line.d + offset), Side::Positive)
    }
}

fn boundary_distance(p: &ConvexPolygon, x: Point) -> f64 {
    let v = p.vertices();
    let n = v.len();
    let mut best = f64::INFINITY;
    for i in 0..n {
        let (a, b) = (v[i], v[(i + 1) % n]);
        let e = b - a;
        let t = ((x - a).dot(e) / e.dot(e)).clamp(0.0, 1.0);
        best = best.min((a + e * t).dist(x));
    }
    best
}

/// True when the vertex set maps to itself under reflection through the
/// centroid, within `SYMMETRY_TOL·diameter`.
pub fn is_centrally_symmetric(p: &ConvexPolygon) -> bool {
    let tol = SYMMETRY_TOL * p.diameter();
    p.len().is_multiple_of(2) && p.same_vertex_set(&p.point_reflect(p.centroid()), tol)
}

/// Radial function of a polygon containing the origin in its interior.
struct Radial {
    normals: Vec<Point>,
    offsets: Vec<f64>,
}

impl Radial {
    fn new(verts: &[Point]) -> Self {
        let n = verts.len();
        let mut normals = Vec::with_capacity(n);
        let mut offsets = Vec::with_capacity(n);
        for i in 0..n {
            let (a, b) = (verts[i], verts[(i + 1) % n]);
            let e = b - a;
            let nrm = Point::new(e.y, -e.x) * (1.0 / e.norm());
            normals.push(nrm);
            offsets.push(nrm.dot(a));
        }
        Radial { normals, offsets }
    }

    fn rho(&self, phi: f64) -> f64 {
        let u = Point::unit(phi);
        self.normals
            .iter()
            .zip(&self.offsets)
            .filter_map(|(&n, &h)| {
                let c = u.dot(n);
                (c > 0.0).then(|| h / c)
            })
            .fold(f64::INFINITY, f64::min)
    }

    fn parallelogram_area(&self, phi: f64, delta: f64) -> f64 {
        2.0 * self.rho(phi) * self.rho(phi - delta) * delta.sin()
    }

    /// Smallest `δ ∈ (0, π)` with parallelogram area `r`.
    fn first_delta(&self, phi: f64, r: f64) -> Option<f64> {
        let step = PI / DELTA_SAMPLES as f64;
        let mut prev = 0.0;
        for j in 1..DELTA_SAMPLES {
            let delta = j as f64 * step;
            if self.parallelogram_area(phi, delta) >= r {
                let (mut lo, mut hi) = (prev, delta);
                for _ in 0..100 {
                    let mid = 0.5 * (lo + hi);
                    if mid <= lo || mid >= hi {
                        break;
                    }
                    if self.parallelogram_area(phi, mid) >= r {
                        hi = mid;
                    } else {
                        lo = mid;
                    }
                }
                return Some(hi);
            }
            prev = delta;
        }
        None
    }

    fn skew(&self, phi: f64, r: f64) -> Option<(f64, f64)> {
        let delta = self.first_delta(phi, r)?;
        Some((self.rho(phi - delta) - self.rho(phi), delta))
    }
}

/// An inscribed rectangle of absolute area `r` in a centrally symmetric
/// polygon.
pub fn inscribed_rectangle(p: &ConvexPolygon, r: f64) -> Result<RectangleInBody> {
    if !is_centrally_symmetric(p) {
        return Err(Error::NotCentrallySymmetric);
    }
    let limit = 0.5 * p.area();
    if r.is_nan() || r <= 0.0 {
        return Err(Error::BadParam(format!(
            "rectangle area {r} must be positive"
        )));
    }
    if r > limit * (1.0 + 1e-12) {
        return Err(Error::AreaTooLarge {
            requested: r,
            limit,
        });
    }
    let center = p.centroid();
    let local = p.translate(-center);
    let radial = Radial::new(local.vertices());
    let diam = p.diameter();
    let accept = 1e-9 * diam;

    let step = PI / SWEEP_SAMPLES as f64;
    let samples: Vec<Option<(f64, f64)>> = (0..=SWEEP_SAMPLES)
        .map(|i| radial.skew(i as f64 * step, r))
        .collect();

    let build = |phi: f64, delta: f64| {
        let a = Point::unit(phi) * radial.rho(phi);
        let b = Point::unit(phi - delta) * radial.rho(phi - delta);
        RectangleInBody {
            corners: [b + center, a + center, center - b, center - a],
            area: 2.0 * a.cross(b).abs(),
        }
    };

    for i in 0..SWEEP_SAMPLES {
        let (Some((k0, d0)), Some((k1, _))) = (samples[i], samples[i + 1]) else {
            continue;
        };
        let phi0 = i as f64 * step;
        if k0 == 0.0 {
            return Ok(build(phi0, d0));
        }
        if k0.signum() == k1.signum() {
            continue;
        }
        let (mut lo, mut hi, mut klo) = (phi0, phi0 + step, k0);
        let mut hit = None;
        while hi - lo > 1e-10 {
            let mid = 0.5 * (lo + hi);
            let Some((km, dm)) = radial.skew(mid, r) else {
                break;
            };
            hit = Some((mid, km, dm));
            if km == 0.0 {
                break;
            }
            if km.signum() == klo.signum() {
                lo = mid;
                klo = km;
            } else {
                hi = mid;
            }
        }
        if let Some((phi, k, delta)) = hit {
            if k.abs() <= accept {
                return Ok(build(phi, delta));
            }
        }
    }
    Err(Error::NoSignChange)
}

/// Lower bound `(√(1−2r) + 1 − r)/4` on the largest cap left by an
/// inscribed rectangle of area ratio `r` in a unit-area centrally
/// symmetric body.
pub fn largest_cap_lower_bound(r: f64) -> Result<f64> {
    if !(r > 0.0 && r <= 0.5) {
        return Err(Error::BadParam(format!("area ratio {r} outside (0, 1/2]")));
    }
    Ok(((1.0 - 2.0 * r).max(0.0).sqrt() + 1.0 - r) / 4.0)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::suite;

    fn square() -> ConvexPolygon {
        ConvexPolygon::from_xy(&[(0.0, 0.0), (1.0, 0.0), (1.0, 1.0), (0.0, 1.0)]).unwrap()
    }

    fn check(p: &ConvexPolygon, r: f64) -> RectangleInBody {
        let rect = inscribed_rectangle(p, r).unwrap();
        assert!(
            (rect.area - r).abs() <= 1e-6 * r,
            "area {} vs {r}",
            rect.area
        );
        assert!(
            rect.rectangle_defect() < 1e-8,
            "defect {}",
            rect.rectangle_defect()
        );
        assert!(rect.boundary_defect(p) < 1e-7 * p.diameter());
        let caps: f64 = rect.caps(p).iter().sum();
        assert!((caps - (p.area() - rect.area)).abs() < 1e-8);
        rect
    }

    #[test]
    fn square_and_hexagon() {
        for r in [0.1, 0.3, 0.45, 0.5] {
            check(&square(), r);
            check(&suite::unit_area_hexagon(), r);
        }
    }

    #[test]
    fn diamond_caps_are_one_eighth() {
        let m = |x, y| Point::new(x, y);
        let diamond =
            RectangleInBody::from_corners([m(0.5, 0.0), m(1.0, 0.5), m(0.5, 1.0), m(0.0, 0.5)]);
        assert!((diamond.area - 0.5).abs() < 1e-15);
        for cap in diamond.caps(&square()) {
            assert!((cap - 0.125).abs() < 1e-15);
        }
    }

    #[test]
    fn rejects_bad_input() {
        let tri = ConvexPolygon::from_xy(&[(0.0, 0.0), (1.0, 0.0), (0.0, 1.0)]).unwrap();
        assert_eq!(
            inscribed_rectangle(&tri, 0.1).unwrap_err(),
            Error::NotCentrallySymmetric
        );
        assert!(matches!(
            inscribed_rectangle(&square(), 0.6),
            Err(Error::AreaTooLarge { .. })
        ));
    }

    #[test]
    fn cap_bound_values() {
        assert!((largest_cap_lower_bound(0.5).unwrap() - 0.125).abs() < 1e-15);
        assert!((largest_cap_lower_bound(4.0 / 9.0).unwrap() - 2.0 / 9.0).abs() < 1e-15);
        assert!(largest_cap_lower_bound(0.0).is_err());
    }
}
