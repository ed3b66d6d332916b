use proptest::prelude::*;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use symmetria::geom::{ConvexPolygon, HalfPlane, LineSpec, Side};
use symmetria::suite;

fn polygon(seed: u64, k: usize) -> ConvexPolygon {
    suite::random_hull(&mut ChaCha8Rng::seed_from_u64(seed), k)
}

fn line() -> impl Strategy<Value = LineSpec> {
    (0.0..std::f64::consts::TAU, -1.5f64..1.5).prop_map(|(t, d)| LineSpec::new(t, d))
}

fn side() -> impl Strategy<Value = Side> {
    prop_oneof![Just(Side::Positive), Just(Side::Negative)]
}

proptest! {
    #[test]
    fn reflection_is_an_involution(seed in any::<u64>(), k in 3usize..13, l in line()) {
        let p = polygon(seed, k);
        let back = p.reflect(&l).reflect(&l);
        prop_assert!(back.same_vertex_set(&p, 1e-9));
    }

    #[test]
    fn reflection_preserves_area(seed in any::<u64>(), k in 3usize..13, l in line()) {
        let p = polygon(seed, k);
        prop_assert!((p.reflect(&l).area() - p.area()).abs() <= 1e-9 * p.area());
    }

    #[test]
    fn clipping_shrinks_and_is_idempotent(
        seed in any::<u64>(), k in 3usize..13, l in line(), s in side()
    ) {
        let p = polygon(seed, k);
        let h = HalfPlane::new(l, s);
        if let Some(c) = p.clip(&h) {
            prop_assert!(c.area() <= p.area() * (1.0 + 1e-12));
            let again = c.clip(&h).expect("clip of a clip is nonempty");
            prop_assert!(again.same_vertex_set(&c, 1e-9));
        }
    }

    #[test]
    fn intersection_is_bounded_and_symmetric(a in any::<u64>(), b in any::<u64>(), k in 3usize..13) {
        let (p, q) = (polygon(a, k), polygon(b, 15 - k));
        let pq = p.intersect(&q).map_or(0.0, |x| x.area());
        let qp = q.intersect(&p).map_or(0.0, |x| x.area());
        prop_assert!(pq <= p.area().min(q.area()) * (1.0 + 1e-12));
        prop_assert!((pq - qp).abs() <= 1e-9 * pq.max(1e-300));
    }
}

#[test]
fn shoelace_agrees_with_monte_carlo() {
    let mut rng = ChaCha8Rng::seed_from_u64(2024);
    for seed in 0..5 {
        let p = polygon(seed, 8);
        let n = 1_000_000;
        let hits = (0..n)
            .filter(|_| p.contains(symmetria::Point::new(rng.gen(), rng.gen()), 0.0))
            .count();
        // Points are drawn from the unit square, which contains the hull.
        let frac = hits as f64 / n as f64;
        let se = (frac * (1.0 - frac) / n as f64).sqrt();
        assert!(
            (frac - p.area()).abs() <= 3.0 * se,
            "{} vs {frac} ± {se}",
            p.area()
        );
    }
}
