//! SVG 1.1 rendering of a polygon and a symmetry report.
//!
//! Element ids and colors are fixed so that downstream tools can find
//! them:
//!
//! | id            | element    | stroke    | fill                 |
//! |---------------|------------|-----------|----------------------|
//! | `body`        | `polygon`  | `#1f3b63` | `#dce6f2`            |
//! | `overlap`     | `polygon`  | `#a0522d` | `#f4a460`, 0.6 alpha |
//! | `mirror-line` | `line`     | `#c0392b` | none, dashed         |
//! | `center`      | `circle`   | none      | `#c0392b`            |
//!
//! `overlap` is the region whose area the report measures: the overlap
//! with the mirror image, or the folded cap. Axiality and folding reports
//! draw `mirror-line`; central symmetry reports draw `center` instead.
//! The y axis points up.

use std::fmt::Write as _;

use crate::geom::{ConvexPolygon, Point};
use crate::measures::SymmetryReport;

pub const BODY_STROKE: &str = "#1f3b63";
pub const BODY_FILL: &str = "#dce6f2";
pub const OVERLAP_STROKE: &str = "#a0522d";
pub const OVERLAP_FILL: &str = "#f4a460";
pub const ACCENT: &str = "#c0392b";

/// Rendered width in pixels; the height follows the aspect ratio.
const WIDTH_PX: f64 = 600.0;

fn points_attr(p: &ConvexPolygon) -> String {
    let mut s = String::new();
    for (i, v) in p.vertices().iter().enumerate() {
        if i > 0 {
            s.push(' ');
        }
        let _ = write!(s, "{:.9},{:.9}", v.x, -v.y);
    }
    s
}

/// Renders `p`, and when given, the report's overlap region and its line
/// or center.
pub fn render(p: &ConvexPolygon, report: Option<&SymmetryReport>) -> String {
    let (mut lo, mut hi) = (
        Point::new(f64::INFINITY, f64::INFINITY),
        Point::new(f64::NEG_INFINITY, f64::NEG_INFINITY),
    );
    for v in p.vertices() {
        lo = Point::new(lo.x.min(v.x), lo.y.min(v.y));
        hi = Point::new(hi.x.max(v.x), hi.y.max(v.y));
    }
    let diag = lo.dist(hi);
    let margin = 0.08 * diag;
    let (x0, y0) = (lo.x - margin, -hi.y - margin);
    let (w, h) = (hi.x - lo.x + 2.0 * margin, hi.y - lo.y + 2.0 * margin);
    let stroke = 0.004 * diag;

    let mut s = String::new();
    s.push_str("<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n");
    let _ = writeln!(
        s,
        "<svg xmlns=\"http://www.w3.org/2000/svg\" version=\"1.1\" width=\"{WIDTH_PX:.0}\" height=\"{:.0}\" viewBox=\"{x0:.9} {y0:.9} {w:.9} {h:.9}\">",
        WIDTH_PX * h / w
    );
    let _ = writeln!(
        s,
        "  <polygon id=\"body\" points=\"{}\" fill=\"{BODY_FILL}\" stroke=\"{BODY_STROKE}\" stroke-width=\"{stroke:.9}\" stroke-linejoin=\"round\"/>",
        points_attr(p)
    );
    if let Some(r) = report {
        if let Some(region) = r.overlap_region(p) {
            let _ = writeln!(
                s,
                "  <polygon id=\"overlap\" points=\"{}\" fill=\"{OVERLAP_FILL}\" fill-opacity=\"0.6\" stroke=\"{OVERLAP_STROKE}\" stroke-width=\"{stroke:.9}\" stroke-linejoin=\"round\"/>",
                points_attr(&region)
            );
        }
        if let Some(l) = r.line {
            let n = l.normal();
            let foot = n * l.d;
            let dir = Point::new(-n.y, n.x) * (2.0 * diag + foot.dist(lo).max(foot.dist(hi)));
            let (a, b) = (foot + dir, foot - dir);
            let _ = writeln!(
                s,
                "  <line id=\"mirror-line\" x1=\"{:.9}\" y1=\"{:.9}\" x2=\"{:.9}\" y2=\"{:.9}\" stroke=\"{ACCENT}\" stroke-width=\"{stroke:.9}\" stroke-dasharray=\"{:.9} {:.9}\"/>",
                a.x, -a.y, b.x, -b.y, 4.0 * stroke, 2.0 * stroke
            );
        }
        if let Some(c) = r.center {
            let _ = writeln!(
                s,
                "  <circle id=\"center\" cx=\"{:.9}\" cy=\"{:.9}\" r=\"{:.9}\" fill=\"{ACCENT}\"/>",
                c.x,
                -c.y,
                3.0 * stroke
            );
        }
    }
    s.push_str("</svg>\n");
    s
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::measures::{axiality, central_symmetry, folding, MeasureOptions};

    fn ids(svg: &str) -> Vec<String> {
        let doc = roxmltree::Document::parse(svg).expect("well-formed xml");
        let root = doc.root_element();
        assert_eq!(root.tag_name().name(), "svg");
        assert_eq!(root.attribute("version"), Some("1.1"));
        doc.descendants()
            .filter_map(|n| n.attribute("id").map(str::to_owned))
            .collect()
    }

    #[test]
    fn element_ids_per_measure() {
        let p = ConvexPolygon::from_xy(&[(0.0, 0.0), (3.0, 0.0), (1.0, 2.0)]).unwrap();
        let o = MeasureOptions::fast();
        assert_eq!(ids(&render(&p, None)), ["body"]);
        let ax = axiality(&p, &o).unwrap();
        assert_eq!(
            ids(&render(&p, Some(&ax))),
            ["body", "overlap", "mirror-line"]
        );
        let fo = folding(&p, &o).unwrap();
        assert_eq!(
            ids(&render(&p, Some(&fo))),
            ["body", "overlap", "mirror-line"]
        );
        let ce = central_symmetry(&p, &o).unwrap();
        assert_eq!(ids(&render(&p, Some(&ce))), ["body", "overlap", "center"]);
    }
}
