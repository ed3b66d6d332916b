//! Seeded random polygon suites for property tests and experiments.

use std::f64::consts::{PI, TAU};

use rand::Rng;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use crate::geom::{ConvexPolygon, HalfPlane, LineSpec, Point, Side};
use crate::measures::MAX_ASPECT_RATIO;

/// Regular `n`-gon with the given circumradius, centered at the origin,
/// with a vertex on the positive x-axis.
pub fn regular_polygon(n: usize, circumradius: f64) -> ConvexPolygon {
    let pts: Vec<Point> = (0..n)
        .map(|i| Point::unit(TAU * i as f64 / n as f64) * circumradius)
        .collect();
    ConvexPolygon::new(&pts).expect("regular polygon is convex")
}

/// Regular hexagon of unit area centered at the origin.
pub fn unit_area_hexagon() -> ConvexPolygon {
    // area = (3√3/2)·R²
    let r = (2.0 / (3.0 * 3f64.sqrt())).sqrt();
    regular_polygon(6, r)
}

/// Convex hull of `k` uniform points in the unit square, redrawn until
/// it has at least three extreme points and a measurable aspect ratio.
pub fn random_hull<R: Rng>(rng: &mut R, k: usize) -> ConvexPolygon {
    let k = k.max(3);
    loop {
        let pts: Vec<Point> = (0..k)
            .map(|_| Point::new(rng.gen::<f64>(), rng.gen::<f64>()))
            .collect();
        if let Ok(p) = ConvexPolygon::new(&pts) {
            if p.aspect_ratio() <= MAX_ASPECT_RATIO {
                return p;
            }
        }
    }
}

/// Centrally symmetric polygon with `2·half` vertices, centered at the
/// origin: `half` edge vectors with sorted directions in `[0, π)` and
/// random lengths, followed by their negatives.
pub fn random_centrally_symmetric<R: Rng>(rng: &mut R, half: usize) -> ConvexPolygon {
    let half = half.max(2);
    loop {
        let mut dirs: Vec<f64> = (0..half).map(|_| rng.gen_range(0.0..PI)).collect();
        dirs.sort_by(f64::total_cmp);
        let edges: Vec<Point> = dirs
            .iter()
            .map(|&a| Point::unit(a) * rng.gen_range(0.2..1.0))
            .collect();
        let mut pts = Vec::with_capacity(2 * half);
        let mut cur = Point::default();
        for &e in edges
            .iter()
            .chain(edges.iter().map(|e| -*e).collect::<Vec<_>>().iter())
        {
            pts.push(cur);
            cur = cur + e;
        }
        let Ok(p) = ConvexPolygon::new(&pts) else {
            continue;
        };
        if p.len() == 2 * half && p.aspect_ratio() <= 1e3 {
            let c = p.centroid();
            return p.translate(-c);
        }
    }
}

/// The standard suite: polygon `i` is a hull of `3 + i mod 10` points
/// drawn from a generator seeded with `seed + i`.
pub fn random_suite(count: usize, seed: u64) -> Vec<ConvexPolygon> {
    (0..count)
        .map(|i| {
            let mut rng = ChaCha8Rng::seed_from_u64(seed.wrapping_add(i as u64));
            random_hull(&mut rng, 3 + i % 10)
        })
        .collect()
}

/// Centrally symmetric suite with 4 to 12 vertices.
pub fn centrally_symmetric_suite(count: usize, seed: u64) -> Vec<ConvexPolygon> {
    (0..count)
        .map(|i| {
            let mut rng = ChaCha8Rng::seed_from_u64(seed.wrapping_add(i as u64));
            random_centrally_symmetric(&mut rng, 2 + i % 5)
        })
        .collect()
}

/// A polygon `P` and a convex `Q ⊆ P`, obtained by cutting `P` with one or
/// two random lines that leave the centroid inside.
pub fn nested_pair<R: Rng>(rng: &mut R, k: usize) -> (ConvexPolygon, ConvexPolygon) {
    let p = random_hull(rng, k);
    loop {
        let c = p.centroid();
        let mut q = p.clone();
        let cuts = rng.gen_range(1..=2);
        let mut ok = true;
        for _ in 0..cuts {
            let theta = rng.gen_range(0.0..TAU);
            let (_, hi) = q.support_interval(theta);
            let at = c.dot(Point::unit(theta));
            let d = at + rng.gen_range(0.05..1.0) * (hi - at);
            match q.clip(&HalfPlane::new(LineSpec::new(theta, d), Side::Negative)) {
                Some(next) => q = next,
                None => ok = false,
            }
        }
        if ok && q.aspect_ratio() <= MAX_ASPECT_RATIO {
            return (p, q);
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn suites_are_deterministic() {
        assert_eq!(random_suite(5, 9), random_suite(5, 9));
        assert_ne!(random_suite(5, 9), random_suite(5, 10));
    }

    #[test]
    fn centrally_symmetric_polygons_are() {
        for p in centrally_symmetric_suite(20, 1) {
            let q = p.point_reflect(Point::default());
            assert!(p.same_vertex_set(&q, 1e-9));
            assert!(p.centroid().norm() < 1e-12);
        }
    }

    #[test]
    fn hexagon_has_unit_area() {
        assert!((unit_area_hexagon().area() - 1.0).abs() < 1e-14);
    }

    #[test]
    fn nested_pairs_nest() {
        let mut rng = ChaCha8Rng::seed_from_u64(4);
        for _ in 0..20 {
            let (p, q) = nested_pair(&mut rng, 8);
            assert!(q.vertices().iter().all(|&v| p.contains(v, 1e-12)));
            assert!(q.area() <= p.area());
        }
    }
}
