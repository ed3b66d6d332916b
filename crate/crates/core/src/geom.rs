//! Planar primitives: points, lines, halfplanes and convex polygons.
//!
//! Everything here is `f64`. Polygons are kept counterclockwise and
//! strictly convex; operations that can produce an empty region return
//! `Option<ConvexPolygon>` instead of a degenerate polygon.

use std::f64::consts::{PI, TAU};
use std::ops::{Add, Mul, Neg, Sub};

use serde::{Deserialize, Serialize};

use crate::{Error, Result};

/// Relative tolerance for treating two input points as the same vertex.
pub const DUPLICATE_TOL: f64 = 1e-12;
/// Triangle-area threshold (relative to diameter²) below which the middle
/// vertex of a triple is considered collinear and dropped.
pub const COLLINEAR_TOL: f64 = 1e-12;

#[derive(Debug, Clone, Copy, PartialEq, Default, Serialize, Deserialize)]
pub struct Point {
    pub x: f64,
    pub y: f64,
}

impl Point {
    pub const fn new(x: f64, y: f64) -> Self {
        Point { x, y }
    }

    /// Unit vector at angle `theta`.
    pub fn unit(theta: f64) -> Self {
        let (s, c) = theta.sin_cos();
        Point::new(c, s)
    }

    pub fn dot(self, other: Point) -> f64 {
        self.x * other.x + self.y * other.y
    }

    /// z-component of the 3D cross product.
    pub fn cross(self, other: Point) -> f64 {
        self.x * other.y - self.y * other.x
    }

    pub fn norm(self) -> f64 {
        self.x.hypot(self.y)
    }

    pub fn dist(self, other: Point) -> f64 {
        (self - other).norm()
    }

    pub fn is_finite(self) -> bool {
        self.x.is_finite() && self.y.is_finite()
    }

    /// Counterclockwise rotation about the origin.
    pub fn rotate(self, angle: f64) -> Self {
        let (s, c) = angle.sin_cos();
        Point::new(c * self.x - s * self.y, s * self.x + c * self.y)
    }
}

impl Add for Point {
    type Output = Point;
    fn add(self, o: Point) -> Point {
        Point::new(self.x + o.x, self.y + o.y)
    }
}

impl Sub for Point {
    type Output = Point;
    fn sub(self, o: Point) -> Point {
        Point::new(self.x - o.x, self.y - o.y)
    }
}

impl Mul<f64> for Point {
    type Output = Point;
    fn mul(self, k: f64) -> Point {
        Point::new(self.x * k, self.y * k)
    }
}

impl Neg for Point {
    type Output = Point;
    fn neg(self) -> Point {
        Point::new(-self.x, -self.y)
    }
}

/// The line `{x : x·n(θ) = d}` with `n(θ) = (cos θ, sin θ)`.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct LineSpec {
    pub theta: f64,
    pub d: f64,
}

impl LineSpec {
    /// Builds a line, reducing `theta` into `[0, 2π)`.
    pub fn new(theta: f64, d: f64) -> Self {
        let mut t = theta.rem_euclid(TAU);
        if t >= TAU {
            t = 0.0;
        }
        LineSpec { theta: t, d }
    }

    /// The line through `p` with unit normal at angle `theta`.
    pub fn through(p: Point, theta: f64) -> Self {
        LineSpec::new(theta, p.dot(Point::unit(theta)))
    }

    pub fn normal(&self) -> Point {
        Point::unit(self.theta)
    }

    pub fn signed_distance(&self, p: Point) -> f64 {
        p.dot(self.normal()) - self.d
    }

    pub fn reflect_point(&self, p: Point) -> Point {
        let n = self.normal();
        p - n * (2.0 * (p.dot(n) - self.d))
    }

    /// The same set of points written with `theta` in `[0, π)`.
    pub fn canonical(&self) -> Self {
        if self.theta >= PI {
            LineSpec::new(self.theta - PI, -self.d)
        } else {
            *self
        }
    }
}

/// Which side of a line a halfplane keeps.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub enum Side {
    Positive,
    Negative,
}

impl Side {
    pub fn sign(self) -> f64 {
        match self {
            Side::Positive => 1.0,
            Side::Negative => -1.0,
        }
    }
}

/// `{x : sign·(x·n(θ) − d) ≥ 0}`.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct HalfPlane {
    pub line: LineSpec,
    pub keep_side: Side,
}

impl HalfPlane {
    pub fn new(line: LineSpec, keep_side: Side) -> Self {
        HalfPlane { line, keep_side }
    }

    /// Signed depth of `p` inside the halfplane (negative outside).
    pub fn depth(&self, p: Point) -> f64 {
        self.keep_side.sign() * self.line.signed_distance(p)
    }
}

/// What [`normalize_polygon`] changed in its input.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct NormalizeReport {
    pub input_points: usize,
    pub output_vertices: usize,
    /// Input indices that are not extreme points (duplicates, collinear or
    /// interior points).
    pub dropped: Vec<usize>,
    /// True when the surviving vertices were not already listed in
    /// counterclockwise order.
    pub reordered: bool,
}

impl NormalizeReport {
    pub fn changed(&self) -> bool {
        self.reordered || !self.dropped.is_empty()
    }
}

/// A strictly convex polygon with counterclockwise vertices.
#[derive(Debug, Clone, PartialEq)]
pub struct ConvexPolygon {
    vertices: Vec<Point>,
}

/// Normalizes an arbitrary point list into the convex polygon spanned by its
/// extreme points.
pub fn normalize_polygon(points: &[Point]) -> Result<(ConvexPolygon, NormalizeReport)> {
    if points.iter().any(|p| !p.is_finite()) {
        return Err(Error::NonFinite);
    }
    if points.len() < 3 {
        return Err(Error::DegenerateInput(format!(
            "need at least 3 points, got {}",
            points.len()
        )));
    }
    let scale = raw_diameter(points);
    if scale <= 0.0 {
        return Err(Error::DegenerateInput("all points coincide".into()));
    }
    let hull = convex_hull_indices(points, scale);
    if hull.len() < 3 {
        return Err(Error::DegenerateInput(format!(
            "only {} extreme points",
            hull.len()
        )));
    }
    // Start at the earliest input point so already-normal input is unchanged.
    let start = hull
        .iter()
        .enumerate()
        .min_by_key(|(_, &idx)| idx)
        .map(|(pos, _)| pos)
        .unwrap_or(0);
    let ordered: Vec<usize> = hull[start..]
        .iter()
        .chain(&hull[..start])
        .copied()
        .collect();

    let mut kept = vec![false; points.len()];
    for &i in &ordered {
        kept[i] = true;
    }
    let dropped: Vec<usize> = (0..points.len()).filter(|&i| !kept[i]).collect();
    let reordered = ordered.windows(2).any(|w| w[0] > w[1]);
    let vertices: Vec<Point> = ordered.iter().map(|&i| points[i]).collect();
    let report = NormalizeReport {
        input_points: points.len(),
        output_vertices: vertices.len(),
        dropped,
        reordered,
    };
    Ok((ConvexPolygon { vertices }, report))
}

fn raw_diameter(points: &[Point]) -> f64 {
    let mut best: f64 = 0.0;
    for (i, &p) in points.iter().enumerate() {
        for &q in &points[i + 1..] {
            best = best.max(p.dist(q));
        }
    }
    best
}

/// Andrew's monotone chain, returning input indices of the hull in
/// counterclockwise order with near-duplicates and near-collinear vertices
/// removed.
fn convex_hull_indices(points: &[Point], scale: f64) -> Vec<usize> {
    let dup = DUPLICATE_TOL * scale;
    let flat = 2.0 * COLLINEAR_TOL * scale * scale;
    let mut idx: Vec<usize> = (0..points.len()).collect();
    idx.sort_by(|&a, &b| {
        let (p, q) = (points[a], points[b]);
        p.x.total_cmp(&q.x)
            .then(p.y.total_cmp(&q.y))
            .then(a.cmp(&b))
    });
    // Collapse near-duplicates, keeping the earliest input index.
    let mut uniq: Vec<usize> = Vec::with_capacity(idx.len());
    for i in idx {
        if let Some(j) = uniq
            .iter()
            .rev()
            .take_while(|&&j| points[i].x - points[j].x <= dup)
            .copied()
            .find(|&j| points[i].dist(points[j]) <= dup)
        {
            if i < j {
                let pos = uniq.iter().position(|&k| k == j).unwrap();
                uniq[pos] = i;
            }
            continue;
        }
        uniq.push(i);
    }
    if uniq.len() < 3 {
        return uniq;
    }
    let turn = |o: usize, a: usize, b: usize| (points[a] - points[o]).cross(points[b] - points[o]);
    let mut lower: Vec<usize> = Vec::new();
    for &i in &uniq {
        while lower.len() >= 2 && turn(lower[lower.len() - 2], lower[lower.len() - 1], i) <= flat {
            lower.pop();
        }
        lower.push(i);
    }
    let mut upper: Vec<usize> = Vec::new();
    for &i in uniq.iter().rev() {
        while upper.len() >= 2 && turn(upper[upper.len() - 2], upper[upper.len() - 1], i) <= flat {
            upper.pop();
        }
        upper.push(i);
    }
    lower.pop();
    upper.pop();
    lower.extend(upper);
    lower
}

/// Serializes as `{"vertices": [[x, y], ...]}`, the polygon file format.
impl Serialize for ConvexPolygon {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        use serde::ser::SerializeStruct;
        let verts: Vec<[f64; 2]> = self.vertices.iter().map(|v| [v.x, v.y]).collect();
        let mut st = s.serialize_struct("ConvexPolygon", 1)?;
        st.serialize_field("vertices", &verts)?;
        st.end()
    }
}

impl ConvexPolygon {
    /// Normalizes `points`; see [`normalize_polygon`].
    pub fn new(points: &[Point]) -> Result<Self> {
        normalize_polygon(points).map(|(p, _)| p)
    }

    pub fn from_xy(coords: &[(f64, f64)]) -> Result<Self> {
        let pts: Vec<Point> = coords.iter().map(|&(x, y)| Point::new(x, y)).collect();
        Self::new(&pts)
    }

    /// Wraps a ring that came out of clipping a convex polygon. Removes
    /// near-duplicate and near-collinear vertices; `None` when no area is
    /// left.
    pub(crate) fn from_convex_ring(ring: &[Point], scale: f64) -> Option<Self> {
        let cleaned = clean_ring(ring, scale);
        if cleaned.len() < 3 || ring_area(&cleaned) <= 0.0 {
            return None;
        }
        Some(ConvexPolygon { vertices: cleaned })
    }

    pub fn vertices(&self) -> &[Point] {
        &self.vertices
    }

    pub fn len(&self) -> usize {
        self.vertices.len()
    }

    pub fn is_empty(&self) -> bool {
        self.vertices.is_empty()
    }

    /// Shoelace area.
    pub fn area(&self) -> f64 {
        ring_area(&self.vertices)
    }

    /// Area centroid.
    pub fn centroid(&self) -> Point {
        let v = &self.vertices;
        let o = v[0];
        let (mut a2, mut cx, mut cy) = (0.0, 0.0, 0.0);
        for i in 1..v.len() - 1 {
            let (p, q) = (v[i] - o, v[i + 1] - o);
            let w = p.cross(q);
            a2 += w;
            cx += w * (p.x + q.x);
            cy += w * (p.y + q.y);
        }
        Point::new(o.x + cx / (3.0 * a2), o.y + cy / (3.0 * a2))
    }

    pub fn diameter(&self) -> f64 {
        raw_diameter(&self.vertices)
    }

    /// Minimum width over all directions (attained at an edge normal).
    pub fn min_width(&self) -> f64 {
        let v = &self.vertices;
        let n = v.len();
        (0..n)
            .map(|i| {
                let (a, b) = (v[i], v[(i + 1) % n]);
                let e = b - a;
                let len = e.norm();
                v.iter().map(|&p| e.cross(p - a) / len).fold(0.0, f64::max)
            })
            .fold(f64::INFINITY, f64::min)
    }

    /// Diameter divided by minimum width.
    pub fn aspect_ratio(&self) -> f64 {
        self.diameter() / self.min_width()
    }

    /// Mirror image across `line`, reoriented counterclockwise.
    pub fn reflect(&self, line: &LineSpec) -> ConvexPolygon {
        let vertices = self
            .vertices
            .iter()
            .rev()
            .map(|&p| line.reflect_point(p))
            .collect();
        ConvexPolygon { vertices }
    }

    /// Point reflection `x ↦ 2c − x`.
    pub fn point_reflect(&self, center: Point) -> ConvexPolygon {
        let c2 = center * 2.0;
        ConvexPolygon {
            vertices: self.vertices.iter().map(|&p| c2 - p).collect(),
        }
    }

    pub fn translate(&self, by: Point) -> ConvexPolygon {
        ConvexPolygon {
            vertices: self.vertices.iter().map(|&p| p + by).collect(),
        }
    }

    /// Rotation about the origin.
    pub fn rotate(&self, angle: f64) -> ConvexPolygon {
        ConvexPolygon {
            vertices: self.vertices.iter().map(|&p| p.rotate(angle)).collect(),
        }
    }

    /// Uniform scaling about the origin; `factor` must be positive.
    pub fn scale(&self, factor: f64) -> ConvexPolygon {
        assert!(factor > 0.0, "scale factor must be positive");
        ConvexPolygon {
            vertices: self.vertices.iter().map(|&p| p * factor).collect(),
        }
    }

    /// `P ∩ H`, or `None` when the intersection has no area.
    pub fn clip(&self, h: &HalfPlane) -> Option<ConvexPolygon> {
        let mut out = Vec::with_capacity(self.len() + 1);
        clip_ring(&self.vertices, h, &mut out);
        ConvexPolygon::from_convex_ring(&out, self.diameter())
    }

    /// Convex intersection by clipping against each edge of `other`.
    pub fn intersect(&self, other: &ConvexPolygon) -> Option<ConvexPolygon> {
        let mut clipper = Clipper::default();
        let ring = clipper.intersect(&self.vertices, &other.vertices);
        ConvexPolygon::from_convex_ring(ring, self.diameter().max(other.diameter()))
    }

    /// True iff `p` is inside or within `tol` of the boundary.
    pub fn contains(&self, p: Point, tol: f64) -> bool {
        ring_contains(&self.vertices, p, tol)
    }

    /// `(min, max)` of `v·n(θ)` over the vertices.
    pub fn support_interval(&self, theta: f64) -> (f64, f64) {
        ring_support(&self.vertices, Point::unit(theta))
    }

    /// Index of the vertex set in `other` matching this polygon's vertices
    /// (as sets) within `tol`.
    pub fn same_vertex_set(&self, other: &ConvexPolygon, tol: f64) -> bool {
        self.len() == other.len()
            && self
                .vertices
                .iter()
                .all(|&p| other.vertices.iter().any(|&q| p.dist(q) <= tol))
    }
}

pub(crate) fn ring_area(v: &[Point]) -> f64 {
    if v.len() < 3 {
        return 0.0;
    }
    let o = v[0];
    let mut a2 = 0.0;
    for i in 1..v.len() - 1 {
        a2 += (v[i] - o).cross(v[i + 1] - o);
    }
    0.5 * a2
}

pub(crate) fn ring_support(v: &[Point], n: Point) -> (f64, f64) {
    v.iter()
        .fold((f64::INFINITY, f64::NEG_INFINITY), |(lo, hi), p| {
            let s = p.dot(n);
            (lo.min(s), hi.max(s))
        })
}

pub(crate) fn ring_contains(v: &[Point], p: Point, tol: f64) -> bool {
    let n = v.len();
    (0..n).all(|i| {
        let (a, b) = (v[i], v[(i + 1) % n]);
        let e = b - a;
        e.cross(p - a) >= -tol * e.norm()
    })
}

/// Sutherland–Hodgman clip of a convex ring against one halfplane.
pub(crate) fn clip_ring(input: &[Point], h: &HalfPlane, out: &mut Vec<Point>) {
    let n = h.line.normal();
    let s = h.keep_side.sign();
    let (d, sx, sy) = (h.line.d, s * n.x, s * n.y);
    clip_ring_raw(input, sx, sy, s * d, out);
}

/// Keeps `{p : a·p.x + b·p.y ≥ c}`.
#[inline]
fn clip_ring_raw(input: &[Point], a: f64, b: f64, c: f64, out: &mut Vec<Point>) {
    out.clear();
    let m = input.len();
    if m == 0 {
        return;
    }
    let mut prev = input[m - 1];
    let mut fp = a * prev.x + b * prev.y - c;
    for &cur in input {
        let fc = a * cur.x + b * cur.y - c;
        if fc >= 0.0 {
            if fp < 0.0 {
                out.push(lerp_zero(prev, cur, fp, fc));
            }
            out.push(cur);
        } else if fp > 0.0 {
            out.push(lerp_zero(prev, cur, fp, fc));
        }
        prev = cur;
        fp = fc;
    }
}

#[inline]
fn lerp_zero(p: Point, q: Point, fp: f64, fq: f64) -> Point {
    let t = fp / (fp - fq);
    Point::new(p.x + t * (q.x - p.x), p.y + t * (q.y - p.y))
}

fn clean_ring(ring: &[Point], scale: f64) -> Vec<Point> {
    let dup = DUPLICATE_TOL * scale;
    let flat = 2.0 * COLLINEAR_TOL * scale * scale;
    let mut pts: Vec<Point> = Vec::with_capacity(ring.len());
    for &p in ring {
        if pts.last().is_none_or(|&q: &Point| q.dist(p) > dup) {
            pts.push(p);
        }
    }
    while pts.len() > 1 && pts[0].dist(*pts.last().unwrap()) <= dup {
        pts.pop();
    }
    // Drop flat vertices until none remain.
    let mut changed = true;
    while changed && pts.len() >= 3 {
        changed = false;
        let n = pts.len();
        for i in 0..n {
            let (a, b, c) = (pts[(i + n - 1) % n], pts[i], pts[(i + 1) % n]);
            if (b - a).cross(c - a) <= flat {
                pts.remove(i);
                changed = true;
                break;
            }
        }
    }
    pts
}

/// Reusable buffers for repeated convex intersections.
#[derive(Debug, Default, Clone)]
pub(crate) struct Clipper {
    a: Vec<Point>,
    b: Vec<Point>,
}

impl Clipper {
    /// Clips `subject` against every edge of the counterclockwise `clip`.
    pub(crate) fn intersect(&mut self, subject: &[Point], clip: &[Point]) -> &[Point] {
        self.a.clear();
        self.a.extend_from_slice(subject);
        let m = clip.len();
        for i in 0..m {
            let (p, q) = (clip[i], clip[(i + 1) % m]);
            // left of p→q: (q−p)×(x−p) ≥ 0  ⇔  −ey·x + ex·y ≥ −ey·px + ex·py
            let (ex, ey) = (q.x - p.x, q.y - p.y);
            clip_ring_raw(&self.a, -ey, ex, -ey * p.x + ex * p.y, &mut self.b);
            std::mem::swap(&mut self.a, &mut self.b);
            if self.a.len() < 3 {
                self.a.clear();
                break;
            }
        }
        &self.a
    }

    /// Area of `subject ∩ clip`.
    pub(crate) fn intersection_area(&mut self, subject: &[Point], clip: &[Point]) -> f64 {
        ring_area(self.intersect(subject, clip)).max(0.0)
    }
}
