//! Polygon file format: `{"vertices": [[x, y], ...]}`.

use std::path::Path;

use serde::{Deserialize, Serialize};

use crate::geom::{normalize_polygon, ConvexPolygon, NormalizeReport, Point};
use crate::{Error, Result};

#[derive(Debug, Clone, Serialize, Deserialize)]
struct PolygonFile {
    vertices: Vec<[f64; 2]>,
}

/// Parses polygon JSON and normalizes it.
pub fn parse_polygon(text: &str) -> Result<(ConvexPolygon, NormalizeReport)> {
    let file: PolygonFile = serde_json::from_str(text).map_err(|e| Error::Parse(e.to_string()))?;
    let pts: Vec<Point> = file
        .vertices
        .iter()
        .map(|&[x, y]| Point::new(x, y))
        .collect();
    normalize_polygon(&pts)
}

pub fn read_polygon(path: &Path) -> Result<(ConvexPolygon, NormalizeReport)> {
    let text =
        std::fs::read_to_string(path).map_err(|e| Error::Io(format!("{}: {e}", path.display())))?;
    parse_polygon(&text)
}

/// The polygon as a JSON value in file format.
pub fn polygon_value(p: &ConvexPolygon) -> serde_json::Value {
    let verts: Vec<[f64; 2]> = p.vertices().iter().map(|v| [v.x, v.y]).collect();
    serde_json::json!({ "vertices": verts })
}

pub fn polygon_to_json(p: &ConvexPolygon) -> String {
    let mut s = serde_json::to_string_pretty(&polygon_value(p)).expect("finite coordinates");
    s.push('\n');
    s
}

pub fn write_polygon(path: &Path, p: &ConvexPolygon) -> Result<()> {
    std::fs::write(path, polygon_to_json(p))
        .map_err(|e| Error::Io(format!("{}: {e}", path.display())))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn round_trip_is_exact() {
        let p = ConvexPolygon::from_xy(&[(0.0, 0.0), (1.0, 0.0), (0.3, 0.1 + 0.2)]).unwrap();
        let (q, rep) = parse_polygon(&polygon_to_json(&p)).unwrap();
        assert_eq!(p, q);
        assert!(!rep.changed());
    }

    #[test]
    fn parse_errors() {
        assert!(matches!(parse_polygon("{}"), Err(Error::Parse(_))));
        assert!(matches!(
            parse_polygon(r#"{"vertices": [[0, 0], [1]]}"#),
            Err(Error::Parse(_))
        ));
        assert!(matches!(
            parse_polygon(r#"{"vertices": [[0, 0], [1, 1], [2, 2]]}"#),
            Err(Error::DegenerateInput(_))
        ));
    }

    #[test]
    fn reports_reordering() {
        let (_, rep) = parse_polygon(r#"{"vertices": [[0,0],[1,1],[1,0],[0,1]]}"#).unwrap();
        assert!(rep.reordered);
    }
}
