//! Browser bindings for the demo page in `www/`.
//!
//! Each exported function returns a JSON string with the body, the measured
//! value and the geometry to draw: `line` as two far-apart points,
//! `center`, and `region`, the overlap or folded cap. The `*_value`
//! functions hold the logic and run natively in tests.

use serde_json::{json, Value};
use symmetria::constructions::{
    case_a_max_angle, case_a_ratio, folding_parallelogram_closed_form, parallelogram, quad_family,
    ParallelogramParam, PHI, QUAD_LIMIT,
};
use symmetria::measures::{axiality, best_offset_axial, central_symmetry, folding, MeasureOptions};
use symmetria::{ConvexPolygon, Error, LineSpec, Point, Result, SymmetryReport};
use wasm_bindgen::prelude::*;

fn points(p: &ConvexPolygon) -> Value {
    p.vertices().iter().map(|v| json!([v.x, v.y])).collect()
}

/// Endpoints of `l` well outside the body.
fn segment(p: &ConvexPolygon, l: &LineSpec) -> Value {
    let n = l.normal();
    let foot = n * l.d;
    let reach = 2.0 * p.diameter()
        + p.vertices()
            .iter()
            .map(|v| v.dist(foot))
            .fold(0.0, f64::max);
    let dir = Point::new(-n.y, n.x) * reach;
    let (a, b) = (foot + dir, foot - dir);
    json!([[a.x, a.y], [b.x, b.y]])
}

fn drawing(p: &ConvexPolygon, r: &SymmetryReport) -> Value {
    json!({
        "body": points(p),
        "value": r.value,
        "line": r.line.map(|l| segment(p, &l)),
        "center": r.center.map(|c| json!([c.x, c.y])),
        "region": r.overlap_region(p).map(|q| points(&q)),
    })
}

/// Hull of the flat `[x0, y0, x1, y1, ...]` list, measured with `kind`
/// (`axiality`, `central` or `folding`).
pub fn measure_value(kind: &str, coords: &[f64]) -> Result<Value> {
    if !coords.len().is_multiple_of(2) {
        return Err(Error::BadParam("odd number of coordinates".into()));
    }
    let pts: Vec<Point> = coords
        .chunks_exact(2)
        .map(|c| Point::new(c[0], c[1]))
        .collect();
    let p = ConvexPolygon::new(&pts)?;
    let opts = MeasureOptions::fast();
    let r = match kind {
        "axiality" => axiality(&p, &opts)?,
        "central" => central_symmetry(&p, &opts)?,
        "folding" => folding(&p, &opts)?,
        other => return Err(Error::BadParam(format!("unknown measure {other:?}"))),
    };
    Ok(drawing(&p, &r))
}

/// `Q(ε)` with the best mirror line whose normal has angle `alpha`, the
/// small-angle closed form where it applies, and the global axiality.
pub fn quad_value(eps: f64, alpha: f64) -> Result<Value> {
    let q = quad_family(eps)?;
    let (line, ratio) = best_offset_axial(&q, alpha, 1e-12);
    let closed = if (0.0..=case_a_max_angle(eps)).contains(&alpha) {
        Some(case_a_ratio(eps, alpha)?)
    } else {
        None
    };
    let best = axiality(&q, &MeasureOptions::fast())?;
    Ok(json!({
        "body": points(&q),
        "value": ratio,
        "line": segment(&q, &line),
        "region": q.intersect(&q.reflect(&line)).map(|r| points(&r)),
        "closed_form": closed,
        "closed_form_range": case_a_max_angle(eps),
        "axiality": best.value,
        "limit": QUAD_LIMIT,
    }))
}

/// Folding of the parallelogram `(0,0), (1,0), (1+d1,h), (d1,h)`, next to
/// its closed form.
pub fn parallelogram_value(d1: f64, h: f64) -> Result<Value> {
    let param = ParallelogramParam::new(d1, h)?;
    let p = parallelogram(param)?;
    let r = folding(&p, &MeasureOptions::fast())?;
    let mut out = drawing(&p, &r);
    out["closed_form"] = json!(folding_parallelogram_closed_form(param)?);
    out["floor"] = json!(1.0 / PHI);
    Ok(out)
}

fn export(v: Result<Value>) -> std::result::Result<String, JsError> {
    v.map(|v| v.to_string())
        .map_err(|e| JsError::new(&e.to_string()))
}

#[wasm_bindgen]
pub fn measure(kind: &str, coords: &[f64]) -> std::result::Result<String, JsError> {
    export(measure_value(kind, coords))
}

#[wasm_bindgen]
pub fn quad_explorer(eps: f64, alpha: f64) -> std::result::Result<String, JsError> {
    export(quad_value(eps, alpha))
}

#[wasm_bindgen]
pub fn parallelogram_fold(d1: f64, h: f64) -> std::result::Result<String, JsError> {
    export(parallelogram_value(d1, h))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn square_is_fully_symmetric() {
        let sq = [0.0, 0.0, 2.0, 0.0, 2.0, 2.0, 0.0, 2.0];
        for kind in ["axiality", "central", "folding"] {
            let v = measure_value(kind, &sq).unwrap();
            assert!((v["value"].as_f64().unwrap() - 1.0).abs() < 1e-6, "{kind}");
            assert_eq!(v["body"].as_array().unwrap().len(), 4);
        }
        assert!(measure_value("central", &sq).unwrap()["line"].is_null());
        assert!(measure_value("spin", &sq).is_err());
        assert!(measure_value("axiality", &sq[..5]).is_err());
    }

    #[test]
    fn quad_small_angle_matches_closed_form() {
        let v = quad_value(0.1, 0.0).unwrap();
        let closed = v["closed_form"].as_f64().unwrap();
        assert!((v["value"].as_f64().unwrap() - closed).abs() < 1e-9);
        assert!((closed - QUAD_LIMIT).abs() < 1e-12);
        assert!(quad_value(0.1, 1.0).unwrap()["closed_form"].is_null());
        assert!(quad_value(2.0, 0.0).is_err());
    }

    #[test]
    fn parallelogram_near_closed_form() {
        let v = parallelogram_value(0.3, 0.8).unwrap();
        let gap = v["value"].as_f64().unwrap() - v["closed_form"].as_f64().unwrap();
        assert!(gap.abs() < 5e-3, "{gap}");
        assert!(v["region"].is_array());
    }
}
