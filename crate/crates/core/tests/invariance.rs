use symmetria::measures::{axiality, central_symmetry, folding, MeasureOptions};
use symmetria::{suite, ConvexPolygon, Point, SymmetryReport};

type Engine = fn(&ConvexPolygon, &MeasureOptions) -> symmetria::Result<SymmetryReport>;

#[test]
fn measures_are_similarity_invariant() {
    let opts = MeasureOptions::default();
    let engines: [(&str, Engine); 3] = [
        ("axiality", axiality),
        ("central", central_symmetry),
        ("folding", folding),
    ];
    for (i, p) in suite::random_suite(6, 31).into_iter().enumerate() {
        let moved = [
            p.translate(Point::new(3.5, -1.25)),
            p.rotate(0.3 + i as f64),
            p.scale(7.0),
        ];
        for (name, f) in engines {
            let base = f(&p, &opts).unwrap().value;
            for q in &moved {
                let v = f(q, &opts).unwrap().value;
                assert!(
                    (v - base).abs() <= 1e-9,
                    "{name} polygon {i}: {v} vs {base}"
                );
            }
        }
    }
}

/// Brute-force oracle: overlap with the point reflection, by polygon
/// intersection, over a grid of centers around the centroid.
#[test]
fn central_symmetry_beats_center_grid() {
    let p = symmetria::suite::regular_polygon(5, 1.0);
    let skew =
        ConvexPolygon::from_xy(&[(0.0, 0.0), (2.0, 0.1), (2.6, 1.0), (1.1, 1.9), (-0.3, 1.2)])
            .unwrap();
    for body in [p, skew] {
        let g = body.centroid();
        let span = 0.05 * body.diameter();
        let mut best: f64 = 0.0;
        for i in -40..=40 {
            for j in -40..=40 {
                let c = Point::new(g.x + span * i as f64 / 40.0, g.y + span * j as f64 / 40.0);
                let area = body
                    .intersect(&body.point_reflect(c))
                    .map_or(0.0, |q| q.area());
                best = best.max(area / body.area());
            }
        }
        let engine = central_symmetry(&body, &MeasureOptions::default())
            .unwrap()
            .value;
        assert!(engine >= best - 1e-9, "engine {engine} below grid {best}");
        assert!(
            engine - best < 1e-3,
            "engine {engine} far above grid {best}"
        );
    }
}
