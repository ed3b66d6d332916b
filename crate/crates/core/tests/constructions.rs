//! Paired runs of the fold construction and the folding engine.

use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use symmetria::constructions::{cs_fold_construction, RECTANGLE_RATIO};
use symmetria::measures::{folding, MeasureOptions};
use symmetria::suite;

#[test]
fn twelve_gons_engine_dominates_construction() {
    let opts = MeasureOptions::default();
    for seed in 0..100 {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let p = suite::random_centrally_symmetric(&mut rng, 6);
        let out = cs_fold_construction(&p).unwrap();
        assert!(out.feasible, "seed {seed}");
        assert!(
            out.report.value >= RECTANGLE_RATIO - 1e-6,
            "seed {seed}: {}",
            out.report.value
        );
        let engine = folding(&p, &opts).unwrap().value;
        assert!(
            engine >= out.report.value - 1e-6,
            "seed {seed}: engine {engine} below construction {}",
            out.report.value
        );
    }
}
