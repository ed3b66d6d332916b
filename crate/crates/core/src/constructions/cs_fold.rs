//! A fold of at least 4/9 in any centrally symmetric polygon, built from an
//! inscribed rectangle of area 4/9 and its largest cap.

use serde::Serialize;

use crate::geom::{ConvexPolygon, Point, Side};
use crate::measures::{folding_feasible, MeasureKind, SymmetryReport};
use crate::Result;

use super::rectangle::{inscribed_rectangle, RectangleInBody};

/// Area ratio of the inscribed rectangle.
pub const RECTANGLE_RATIO: f64 = 4.0 / 9.0;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum FoldCase {
    /// The cap is no taller than the rectangle is deep: fold along its side.
    AlongSide,
    /// Fold along a parallel line beyond the side.
    ParallelLine,
}

#[derive(Debug, Clone, Serialize)]
pub struct CsFoldReport {
    /// Folding report in the input coordinates.
    pub report: SymmetryReport,
    pub rectangle: RectangleInBody,
    pub case: FoldCase,
    /// Index of the rectangle side the largest cap sits on.
    pub side: usize,
    /// Peak height of the cap above that side, for unit area.
    pub cap_height: f64,
    /// Rectangle depth perpendicular to that side, for unit area.
    pub depth: f64,
    /// Whether the constructed fold passes [`folding_feasible`].
    pub feasible: bool,
}

/// Runs the construction on `p` rescaled to unit area and reports the fold
/// in the original coordinates.
pub fn cs_fold_construction(p: &ConvexPolygon) -> Result<CsFoldReport> {
    let body_area = p.area();
    let center = p.centroid();
    let s = body_area.sqrt();
    let unit = p.translate(-center).scale(1.0 / s);
    let rect = inscribed_rectangle(&unit, RECTANGLE_RATIO)?;

    let caps = rect.caps(&unit);
    let side = (0..4)
        .max_by(|&i, &j| caps[i].total_cmp(&caps[j]).then(j.cmp(&i)))
        .unwrap_or(0);
    let outer = rect.side_halfplane(side, 0.0);
    let cap_height = unit
        .vertices()
        .iter()
        .map(|&v| outer.depth(v))
        .fold(0.0, f64::max);
    let c = rect.corners;
    let depth = c[(side + 1) % 4].dist(c[(side + 2) % 4]);

    let (case, shift) = if cap_height <= depth {
        (FoldCase::AlongSide, 0.0)
    } else {
        // |PQ| = (1 + 2α)|BC| and the fold line sits (1 + α)|BC| below the
        // peak, so the folded cap reaches exactly the opposite side.
        let alpha = 0.5 * (cap_height / depth - 1.0);
        (FoldCase::ParallelLine, cap_height - (1.0 + alpha) * depth)
    };
    let fold = rect.side_halfplane(side, shift);
    let cap_area = unit.clip(&fold).map_or(0.0, |cap| cap.area());

    // Back to input coordinates: x = s·y + center.
    let n = fold.line.normal();
    let line = crate::LineSpec::new(fold.line.theta, s * fold.line.d + n.dot(center));
    let h = crate::HalfPlane::new(line, Side::Positive);
    let feasible = folding_feasible(p, &h, 1e-9 * p.diameter());
    let rectangle = RectangleInBody {
        corners: rect.corners.map(|x: Point| x * s + center),
        area: rect.area * body_area,
    };
    let report = SymmetryReport {
        measure: MeasureKind::Folding,
        value: 2.0 * cap_area,
        line: Some(line),
        center: None,
        fold_side: Some(Side::Positive),
        overlap_area: cap_area * body_area,
        body_area,
        evaluations: 0,
        achieved_tolerance: 0.0,
        resolution_limited: false,
    };
    Ok(CsFoldReport {
        report,
        rectangle,
        case,
        side,
        cap_height,
        depth,
        feasible,
    })
}
