//! The thin quadrilateral family `Q(ε)` whose axiality tends to
//! `(1+√2)/3`, and the analytic overlap formulas for its reflections.
//!
//! Vertex labels: `A = (0,0)`, `B = (1,0)`, `C = (1/√2, ε)` and
//! `D = (1, (2−√2)ε)`.

use std::f64::consts::{FRAC_1_SQRT_2, PI, SQRT_2};

use serde::Serialize;

use crate::geom::{ConvexPolygon, Point};
use crate::golden;
use crate::measures::best_offset_axial;
use crate::{Error, Result};

/// The limit of `axiality(Q(ε))` as `ε → 0`.
pub const QUAD_LIMIT: f64 = (1.0 + SQRT_2) / 3.0;

/// Largest admissible `ε`.
pub const MAX_EPSILON: f64 = 0.5;

/// Offset tolerance used by the numeric oracles.
const ORACLE_TOL: f64 = 1e-13;

fn check_epsilon(eps: f64) -> Result<()> {
    if eps.is_finite() && eps > 0.0 && eps <= MAX_EPSILON {
        Ok(())
    } else {
        Err(Error::BadParam(format!(
            "epsilon {eps} outside (0, {MAX_EPSILON}]"
        )))
    }
}

/// `Q(ε)`: vertices `(0,0), (1,0), (1, √2ε/(1+√2)), (1/√2, ε)`.
pub fn quad_family(eps: f64) -> Result<ConvexPolygon> {
    check_epsilon(eps)?;
    let pts = [
        Point::new(0.0, 0.0),
        Point::new(1.0, 0.0),
        Point::new(1.0, SQRT_2 * eps / (1.0 + SQRT_2)),
        Point::new(FRAC_1_SQRT_2, eps),
    ];
    ConvexPolygon::new(&pts)
}

/// Closed-form area of `Q(ε)`.
pub fn quad_area(eps: f64) -> f64 {
    (2.0 - SQRT_2) * eps
}

/// Upper end of the small-angle case for [`case_a_ratio`].
pub fn case_a_max_angle(eps: f64) -> f64 {
    0.5 * (SQRT_2 * eps / (1.0 + SQRT_2)).atan()
}

/// Upper end of the middle-angle case for [`case_c_m`].
pub fn case_c_max_angle(eps: f64) -> f64 {
    0.5 * (SQRT_2 * eps).atan()
}

/// Best overlap ratio over translates of a near-vertical mirror line:
/// `(1+√2)/(√2ε sin α + 2cos α + 1)`. Here `α` is the rotation of the
/// mirror image, twice the tilt of the line's normal.
pub fn case_a_ratio(eps: f64, alpha: f64) -> Result<f64> {
    check_epsilon(eps)?;
    let top = case_a_max_angle(eps);
    if !(alpha >= 0.0 && alpha <= top * (1.0 + 1e-12)) {
        return Err(Error::BadParam(format!(
            "alpha {alpha} outside the small-angle case [0, {top}]"
        )));
    }
    Ok((1.0 + SQRT_2) / (SQRT_2 * eps * alpha.sin() + 2.0 * alpha.cos() + 1.0))
}

/// Numeric counterpart of [`case_a_ratio`]: the overlap engine's best
/// offset at line-normal angle `α/2`.
pub fn case_a_numeric(eps: f64, alpha: f64) -> Result<f64> {
    let q = quad_family(eps)?;
    Ok(best_offset_axial(&q, 0.5 * alpha, ORACLE_TOL).1)
}

/// Best overlap ratio over translates of a near-horizontal mirror line
/// tilted by `β`, in simplified trigonometric form with `k = √2ε`.
pub fn case_c_m(eps: f64, beta: f64) -> Result<f64> {
    check_epsilon(eps)?;
    let top = case_c_max_angle(eps);
    if !(beta >= 0.0 && beta <= top * (1.0 + 1e-12)) {
        return Err(Error::BadParam(format!(
            "beta {beta} outside the middle-angle case [0, {top}]"
        )));
    }
    let k = SQRT_2 * eps;
    let k2 = k * k;
    let (c1, c3, c5) = (beta.cos(), (3.0 * beta).cos(), (5.0 * beta).cos());
    let (s1, s3, s5) = (beta.sin(), (3.0 * beta).sin(), (5.0 * beta).sin());
    let num = c3 - c1 - k2 * (c1 + c3) - 2.0 * k * s3;
    let den = c5 - c1 - k2 * (3.0 * c1 + 2.0 * c3 + c5) - 2.0 * k * (s1 + s3 + s5);
    if den.abs() < 1e-12 {
        return Err(Error::Singularity(format!(
            "denominator {den:e} at beta {beta}"
        )));
    }
    Ok((1.0 + SQRT_2) * num / den)
}

fn meet(p: Point, u: Point, q: Point, v: Point) -> Option<Point> {
    let den = u.cross(v);
    if den.abs() < 1e-300 {
        return None;
    }
    Some(p + u * ((q - p).cross(v) / den))
}

/// Ratio to `area(Q(ε))` of twice the signed area of the middle-angle
/// quadrilateral `PQRS` for the mirror line through `(0, t)` with direction
/// `(cos β, sin β)`. `P` and `S` are where the line crosses the lines `AC`
/// and `CD`; `Q` and `R` are where the mirror images of those lines, both
/// through the image of `C`, cross the base. The area is a concave
/// quadratic in `t`. Where the line actually leaves through `BD` the
/// quadrilateral contains the true half-overlap, so its maximum is an upper
/// bound there rather than the overlap itself.
pub fn case_c_overlap(eps: f64, beta: f64, t: f64) -> Option<f64> {
    let a = Point::new(0.0, 0.0);
    let c = Point::new(FRAC_1_SQRT_2, eps);
    let d = Point::new(1.0, (2.0 - SQRT_2) * eps);
    let base = Point::new(1.0, 0.0);
    let o = Point::new(0.0, t);
    let u = Point::unit(beta);
    let n = Point::new(-u.y, u.x);
    let p = meet(o, u, a, c - a)?;
    let s = meet(o, u, c, d - c)?;
    let c_img = c - n * (2.0 * (c - o).dot(n));
    let q = meet(p, c_img - p, a, base)?;
    let r = meet(s, c_img - s, a, base)?;
    let ring = [p, q, r, s];
    let mut a2 = 0.0;
    for i in 0..4 {
        a2 += ring[i].cross(ring[(i + 1) % 4]);
    }
    let ratio = a2 / quad_area(eps);
    ratio.is_finite().then_some(ratio)
}

/// Numeric counterpart of [`case_c_m`]: golden-section maximization of
/// [`case_c_overlap`] over the translate `t`.
pub fn case_c_numeric(eps: f64, beta: f64) -> Result<f64> {
    check_epsilon(eps)?;
    let probe = |t: f64| case_c_overlap(eps, beta, t).unwrap_or(f64::NEG_INFINITY);
    let (_, best) = golden::maximize(probe, -eps, 2.0 * eps, 1e-15 * eps, 200);
    if !best.is_finite() {
        return Err(Error::Singularity(format!(
            "degenerate configuration at beta {beta}"
        )));
    }
    Ok(best)
}

/// The overlap engine's best offset at line-normal angle `π/2 + β`.
pub fn case_c_engine(eps: f64, beta: f64) -> Result<f64> {
    let q = quad_family(eps)?;
    Ok(best_offset_axial(&q, 0.5 * PI + beta, ORACLE_TOL).1)
}

/// One row of the analytic-versus-numeric comparison.
#[derive(Debug, Clone, Serialize)]
pub struct AppendixBRow {
    pub case: &'static str,
    pub epsilon: f64,
    pub angle: f64,
    pub analytic: f64,
    pub numeric: f64,
    pub oracle: &'static str,
}

impl AppendixBRow {
    pub fn abs_diff(&self) -> f64 {
        (self.analytic - self.numeric).abs()
    }
}

/// Samples both analytic formulas at `samples` angles each and pairs them
/// with their numeric oracles. Case A uses angles spread evenly over the
/// closed case range; case C uses interior midpoints and then the case
/// boundary, where the shoelace oracle is singular and the overlap engine
/// is used instead.
pub fn appendix_b_table(eps: f64, samples: usize) -> Result<Vec<AppendixBRow>> {
    check_epsilon(eps)?;
    if samples < 2 {
        return Err(Error::BadParam("need at least 2 samples per case".into()));
    }
    let mut rows = Vec::with_capacity(2 * samples + 1);
    let a_top = case_a_max_angle(eps);
    for i in 0..samples {
        let alpha = a_top * i as f64 / (samples - 1) as f64;
        rows.push(AppendixBRow {
            case: "A",
            epsilon: eps,
            angle: alpha,
            analytic: case_a_ratio(eps, alpha)?,
            numeric: case_a_numeric(eps, alpha)?,
            oracle: "overlap-engine",
        });
    }
    let c_top = case_c_max_angle(eps);
    for i in 0..samples {
        let beta = c_top * (i as f64 + 0.5) / samples as f64;
        rows.push(AppendixBRow {
            case: "C",
            epsilon: eps,
            angle: beta,
            analytic: case_c_m(eps, beta)?,
            numeric: case_c_numeric(eps, beta)?,
            oracle: "shoelace",
        });
    }
    rows.push(AppendixBRow {
        case: "C",
        epsilon: eps,
        angle: c_top,
        analytic: case_c_m(eps, c_top)?,
        numeric: case_c_engine(eps, c_top)?,
        oracle: "overlap-engine",
    });
    Ok(rows)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::measures::overlap_ratio_axial;
    use crate::LineSpec;

    #[test]
    fn vertices_and_convexity() {
        let q = quad_family(0.1).unwrap();
        assert_eq!(q.len(), 4);
        assert!(q
            .vertices()
            .iter()
            .any(|v| v.x == 1.0 && (v.y - 0.058_578_643_762_690_5).abs() < 1e-15));
        assert!(quad_family(0.0).is_err());
        assert!(quad_family(0.6).is_err());
    }

    #[test]
    fn area_closed_form() {
        for eps in [0.01, 0.1, 0.3] {
            let q = quad_family(eps).unwrap();
            assert!((q.area() - quad_area(eps)).abs() < 1e-15);
        }
        assert!((quad_area(0.1) - 0.058_578_643_762_690_5).abs() < 1e-15);
    }

    #[test]
    fn vertical_line_at_two_thirds() {
        let q = quad_family(0.1).unwrap();
        let r = overlap_ratio_axial(&q, &LineSpec::new(0.0, 2.0 / 3.0));
        assert!((r - QUAD_LIMIT).abs() < 1e-12, "{r}");
    }

    #[test]
    fn case_a_endpoints() {
        assert!((case_a_ratio(0.3, 0.0).unwrap() - QUAD_LIMIT).abs() < 1e-15);
        assert!(case_a_ratio(0.05, 0.01).unwrap() < QUAD_LIMIT);
        assert!(case_a_ratio(0.05, 1.0).is_err());
    }

    #[test]
    fn case_c_small_angle_limit() {
        let m = case_c_m(1e-4, 1e-9).unwrap();
        assert!((m - QUAD_LIMIT).abs() < 1e-3);
        assert!((case_c_m(0.05, 0.0).unwrap() - QUAD_LIMIT).abs() < 1e-12);
    }

    #[test]
    fn case_c_boundary_matches_engine() {
        let eps = 0.05;
        let top = case_c_max_angle(eps);
        let diff = case_c_m(eps, top).unwrap() - case_c_engine(eps, top).unwrap();
        assert!(diff.abs() < 1e-9, "{diff}");
    }

    #[test]
    fn case_c_matches_shoelace_and_bounds_engine() {
        for eps in [0.01, 0.05, 0.2] {
            let top = case_c_max_angle(eps);
            for k in 1..8 {
                let beta = top * k as f64 / 8.0;
                let m = case_c_m(eps, beta).unwrap();
                let shoelace = case_c_numeric(eps, beta).unwrap();
                let engine = case_c_engine(eps, beta).unwrap();
                assert!(
                    (m - shoelace).abs() < 1e-9,
                    "eps {eps} beta {beta}: {m} vs {shoelace}"
                );
                assert!(
                    engine <= m + 1e-9,
                    "eps {eps} beta {beta}: {engine} above {m}"
                );
            }
        }
    }
}
