//! Constraint evaluator and sampling search for the folding symmetry
//! program.
//!
//! `λ` is half the folding symmetry; the remaining variables describe cap
//! areas, the position `u` of the hexagon's middle diagonal, tangent slopes
//! at the top and bottom vertices, and candidate fold heights. The program
//! is nonconvex (bilinear), so the search here can only exhibit feasible
//! points. Its minimum is an upper bound on the program optimum, never a
//! proof of a lower bound.

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::{Deserialize, Serialize};

use crate::{Error, Result};

/// Cap on `t` from the axial program: `(6 − 3√2)/4`.
pub const T_CAP: f64 = (6.0 - 3.0 * std::f64::consts::SQRT_2) / 4.0;
/// Residual tolerance for feasibility.
pub const RESIDUAL_TOL: f64 = 1e-9;

/// Which tangent configuration at vertex `C` the constraints describe.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Variant {
    /// Tangent at `C` makes an acute or right angle with `DE`.
    Standard,
    /// Tangent at `C` makes an obtuse angle with `DE`.
    Obtuse,
}

/// Missing fields deserialize as zero.
#[derive(Debug, Clone, Copy, PartialEq, Default, Serialize, Deserialize)]
#[serde(default)]
pub struct FoldingProgramPoint {
    pub lambda: f64,
    pub a: f64,
    pub b: f64,
    pub c: f64,
    pub d: f64,
    pub e: f64,
    pub f: f64,
    pub t: f64,
    pub u: f64,
    pub m1: f64,
    pub m2: f64,
    pub v1: f64,
    pub v2: f64,
    pub alpha: f64,
    pub beta: f64,
    pub phi_b: f64,
    pub phi_e: f64,
    pub k1: f64,
    pub k2: f64,
    pub y1: f64,
    pub y2: f64,
}

impl FoldingProgramPoint {
    /// Sets `t`, `v1`, `v2`, `y1`, `y2` from their defining equations.
    pub fn complete(mut self, variant: Variant) -> Self {
        let x = &mut self;
        x.t = x.a + x.b + x.c + x.d + x.e + x.f;
        x.v1 = v1_def(x);
        x.v2 = v2_def(x);
        let (y1, y2) = y_defs(x, variant);
        x.y1 = y1;
        x.y2 = y2;
        self
    }

    /// The four fold lower bounds on `(1+t)λ`: right, left, top, bottom.
    pub fn fold_bounds(&self) -> [f64; 4] {
        let x = self;
        [
            0.5 - 2.0 / 3.0 * x.v1 + x.u / 3.0 + x.a + x.f,
            0.5 + 2.0 / 3.0 * x.v2 - x.u / 3.0 + x.c + x.d,
            x.b + (1.0 - x.y1) * (3.0 - x.y1) / 6.0,
            x.e + (1.0 - x.y2) * (3.0 - x.y2) / 6.0,
        ]
    }

    /// Smallest `λ` satisfying the fold constraints.
    pub fn min_lambda(&self) -> f64 {
        self.fold_bounds()
            .into_iter()
            .fold(f64::NEG_INFINITY, f64::max)
            / (1.0 + self.t)
    }
}

fn v1_def(x: &FoldingProgramPoint) -> f64 {
    ((2.0 * x.m1 + 1.0) / 4.0)
        .max((2.0 * x.m2 + 1.0) / 4.0)
        .max((2.0 * x.alpha - 1.0) / 4.0)
}

fn v2_def(x: &FoldingProgramPoint) -> f64 {
    ((2.0 * x.m1 - 1.0) / 4.0)
        .min((2.0 * x.m2 - 1.0) / 4.0)
        .min((2.0 * x.beta + 1.0) / 4.0)
}

fn y_defs(x: &FoldingProgramPoint, variant: Variant) -> (f64, f64) {
    match variant {
        Variant::Standard => (x.k1.max(0.5), x.k2.max(0.5)),
        Variant::Obtuse => (x.k1.max(x.k2).max(0.5), 0.5),
    }
}

fn excess(v: f64) -> f64 {
    v.max(0.0)
}

fn outside(x: f64, lo: f64, hi: f64) -> f64 {
    excess(lo - x).max(excess(x - hi))
}

/// Residual of every constraint, in a fixed order; zero means satisfied.
/// Inequalities `g ≥ h` report `max(0, h − g)`; equalities report `|g − h|`.
pub fn folding_program_residuals(
    x: &FoldingProgramPoint,
    variant: Variant,
) -> Vec<(&'static str, f64)> {
    let mut r = Vec::with_capacity(48);
    let half = 0.5;
    for (name, v) in [
        ("box a in [0,1/2]", x.a),
        ("box b in [0,1/2]", x.b),
        ("box c in [0,1/2]", x.c),
        ("box d in [0,1/2]", x.d),
        ("box e in [0,1/2]", x.e),
        ("box f in [0,1/2]", x.f),
        ("box u in [0,1/2]", x.u),
    ] {
        r.push((name, outside(v, 0.0, half)));
    }
    r.push((
        "box alpha in [u+1, 2u+3/2]",
        outside(x.alpha, x.u + 1.0, 2.0 * x.u + 1.5),
    ));
    r.push((
        "box beta in [2u-3/2, u-1]",
        outside(x.beta, 2.0 * x.u - 1.5, x.u - 1.0),
    ));
    for (name, v) in [
        ("box v1 in [-1/2,1/2]", x.v1),
        ("box v2 in [-1/2,1/2]", x.v2),
        ("box m1 in [-1/2,1/2]", x.m1),
        ("box m2 in [-1/2,1/2]", x.m2),
    ] {
        r.push((name, outside(v, -half, half)));
    }
    for (name, v) in [
        ("box phiB in [0,1]", x.phi_b),
        ("box phiE in [0,1]", x.phi_e),
        ("box k1 in [0,1]", x.k1),
        ("box k2 in [0,1]", x.k2),
    ] {
        r.push((name, outside(v, 0.0, 1.0)));
    }
    r.push(("box y1 in [1/2,1]", outside(x.y1, half, 1.0)));
    r.push(("box y2 in [1/2,1]", outside(x.y2, half, 1.0)));

    let sum = x.a + x.b + x.c + x.d + x.e + x.f;
    r.push(("t = a+b+c+d+e+f", (x.t - sum).abs()));
    r.push(("t <= (6-3√2)/4", excess(x.t - T_CAP)));
    r.push((
        "right side area: a+f >= (alpha-u-1)/3",
        excess((x.alpha - x.u - 1.0) / 3.0 - (x.a + x.f)),
    ));
    r.push((
        "left side area: c+d >= (-beta+u-1)/3",
        excess((-x.beta + x.u - 1.0) / 3.0 - (x.c + x.d)),
    ));
    let sq = |p: f64| (1.0 - (1.0 - p).powi(2)) / 6.0;
    r.push((
        "top cap upper: b <= (1-(1-phiB)^2)/6",
        excess(x.b - sq(x.phi_b)),
    ));
    r.push((
        "bottom cap upper: e <= (1-(1-phiE)^2)/6",
        excess(x.e - sq(x.phi_e)),
    ));
    r.push(("top cap lower: b >= phiB/6", excess(x.phi_b / 6.0 - x.b)));
    r.push(("bottom cap lower: e >= phiE/6", excess(x.phi_e / 6.0 - x.e)));
    r.push((
        "right triangle: a >= k1(2u+1)/12",
        excess(x.k1 * (2.0 * x.u + 1.0) / 12.0 - x.a),
    ));
    match variant {
        Variant::Standard => r.push((
            "lower-left triangle: d >= k2(1-2u)/12",
            excess(x.k2 * (1.0 - 2.0 * x.u) / 12.0 - x.d),
        )),
        Variant::Obtuse => r.push((
            "upper-left triangle: c >= k2(1-2u)/12",
            excess(x.k2 * (1.0 - 2.0 * x.u) / 12.0 - x.c),
        )),
    }
    let p = 1.0 + 2.0 * x.u;
    let m = 1.0 - 2.0 * x.u;
    r.push((
        "top slope right: 1-2m1 >= phiB(1+2u)",
        excess(x.phi_b * p - (1.0 - 2.0 * x.m1)),
    ));
    r.push((
        "top slope left: 2m1+1 >= phiB(1-2u)",
        excess(x.phi_b * m - (2.0 * x.m1 + 1.0)),
    ));
    r.push((
        "bottom slope right: 1-2m2 >= phiE(1+2u)",
        excess(x.phi_e * p - (1.0 - 2.0 * x.m2)),
    ));
    r.push((
        "bottom slope left: 2m2+1 >= phiE(1-2u)",
        excess(x.phi_e * m - (2.0 * x.m2 + 1.0)),
    ));
    r.push((
        "top tangent: (1-2m1)(1-k1) >= phiB(2u+1)",
        excess(x.phi_b * p - (1.0 - 2.0 * x.m1) * (1.0 - x.k1)),
    ));
    match variant {
        Variant::Standard => r.push((
            "bottom tangent: (1+2m2)(1-k2) >= phiE(1-2u)",
            excess(x.phi_e * m - (1.0 + 2.0 * x.m2) * (1.0 - x.k2)),
        )),
        Variant::Obtuse => r.push((
            "left tangent: (1+2m1)(1-k2) >= phiB(1-2u)",
            excess(x.phi_b * m - (1.0 + 2.0 * x.m1) * (1.0 - x.k2)),
        )),
    }
    r.push((
        "v1 = max{(2m1+1)/4, (2m2+1)/4, (2alpha-1)/4}",
        (x.v1 - v1_def(x)).abs(),
    ));
    r.push((
        "v2 = min{(2m1-1)/4, (2m2-1)/4, (2beta+1)/4}",
        (x.v2 - v2_def(x)).abs(),
    ));
    let (y1, y2) = y_defs(x, variant);
    match variant {
        Variant::Standard => {
            r.push(("y1 = max{k1, 1/2}", (x.y1 - y1).abs()));
            r.push(("y2 = max{k2, 1/2}", (x.y2 - y2).abs()));
        }
        Variant::Obtuse => {
            r.push(("y1 = max{k1, k2, 1/2}", (x.y1 - y1).abs()));
            r.push(("y2 = 1/2", (x.y2 - y2).abs()));
        }
    }
    let lhs = (1.0 + x.t) * x.lambda;
    let [right, left, top, bottom] = x.fold_bounds();
    r.push((
        "right fold: (1+t)λ >= 1/2 - 2v1/3 + u/3 + a + f",
        excess(right - lhs),
    ));
    r.push((
        "left fold: (1+t)λ >= 1/2 + 2v2/3 - u/3 + c + d",
        excess(left - lhs),
    ));
    r.push(("top fold: (1+t)λ >= b + (1-y1)(3-y1)/6", excess(top - lhs)));
    r.push((
        "bottom fold: (1+t)λ >= e + (1-y2)(3-y2)/6",
        excess(bottom - lhs),
    ));
    r
}

/// Largest residual.
pub fn max_residual(x: &FoldingProgramPoint, variant: Variant) -> f64 {
    folding_program_residuals(x, variant)
        .into_iter()
        .map(|(_, v)| v)
        .fold(0.0, f64::max)
}

/// Number of free coordinates in the search parametrization.
const DIM: usize = 15;

/// Maps `z ∈ [0,1]^15` to a point that satisfies every constraint except
/// possibly the area-sum cap, the side-area bounds and the `λ` rows. Each
/// variable is drawn from the interval left open by the ones before it.
fn decode(z: &[f64; DIM], variant: Variant) -> FoldingProgramPoint {
    let lerp = |lo: f64, hi: f64, s: f64| lo + (hi - lo).max(0.0) * s;
    let mut x = FoldingProgramPoint {
        u: lerp(0.0, 0.5, z[0]),
        ..Default::default()
    };
    let (p, m) = (1.0 + 2.0 * x.u, 1.0 - 2.0 * x.u);
    x.alpha = lerp(x.u + 1.0, 2.0 * x.u + 1.5, z[1]);
    x.beta = lerp(2.0 * x.u - 1.5, x.u - 1.0, z[2]);
    x.phi_b = z[3];
    x.phi_e = z[4];
    // Slope constraints bracket m1 and m2.
    x.m1 = lerp(
        ((x.phi_b * m - 1.0) / 2.0).max(-0.5),
        ((1.0 - x.phi_b * p) / 2.0).min(0.5),
        z[5],
    );
    x.m2 = lerp(
        ((x.phi_e * m - 1.0) / 2.0).max(-0.5),
        ((1.0 - x.phi_e * p) / 2.0).min(0.5),
        z[6],
    );
    let k_max = |num: f64, den: f64| {
        if den > 0.0 {
            (1.0 - num / den).clamp(0.0, 1.0)
        } else {
            0.0
        }
    };
    x.k1 = k_max(x.phi_b * p, 1.0 - 2.0 * x.m1) * z[7];
    x.k2 = match variant {
        Variant::Standard => k_max(x.phi_e * m, 1.0 + 2.0 * x.m2),
        Variant::Obtuse => k_max(x.phi_b * m, 1.0 + 2.0 * x.m1),
    } * z[8];
    let sq = |q: f64| (1.0 - (1.0 - q).powi(2)) / 6.0;
    x.b = lerp(x.phi_b / 6.0, sq(x.phi_b), z[9]);
    x.e = lerp(x.phi_e / 6.0, sq(x.phi_e), z[10]);
    let a_lo = x.k1 * p / 12.0;
    let k2_lo = x.k2 * m / 12.0;
    let (c_lo, d_lo) = match variant {
        Variant::Standard => (0.0, k2_lo),
        Variant::Obtuse => (k2_lo, 0.0),
    };
    // Areas start at their lower bounds; z scales the excess over them.
    let room = 0.5;
    x.a = lerp(a_lo, room, z[11] * z[11]);
    x.f = lerp(0.0, room, z[12] * z[12]);
    x.c = lerp(c_lo, room, z[13] * z[13]);
    x.d = lerp(d_lo, room, z[14] * z[14]);
    // Side-area bounds are met by topping up f and d when short.
    let need_af = (x.alpha - x.u - 1.0) / 3.0 - (x.a + x.f);
    if need_af > 0.0 {
        x.f += need_af;
    }
    let need_cd = (-x.beta + x.u - 1.0) / 3.0 - (x.c + x.d);
    if need_cd > 0.0 {
        x.d += need_cd;
    }
    let mut x = x.complete(variant);
    x.lambda = x.min_lambda();
    x
}

#[derive(Debug, Clone, Serialize)]
pub struct FoldingSearchResult {
    pub min_lambda: f64,
    pub variant: Variant,
    pub witness: FoldingProgramPoint,
    pub max_residual: f64,
    /// Candidate points examined.
    pub evaluations: u64,
    /// Candidates rejected as infeasible.
    pub rejected: u64,
}

struct Shard {
    best: Option<(f64, [f64; DIM], FoldingProgramPoint)>,
    evals: u64,
    rejected: u64,
}

fn run_shard(variant: Variant, budget: u64, seed: u64) -> Shard {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut shard = Shard {
        best: None,
        evals: 0,
        rejected: 0,
    };
    let try_point = |z: [f64; DIM], shard: &mut Shard| {
        shard.evals += 1;
        let x = decode(&z, variant);
        if max_residual(&x, variant) > RESIDUAL_TOL {
            shard.rejected += 1;
            return;
        }
        if shard.best.as_ref().is_none_or(|(l, _, _)| x.lambda < *l) {
            shard.best = Some((x.lambda, z, x));
        }
    };
    let explore = budget / 2;
    for _ in 0..explore {
        let z: [f64; DIM] = std::array::from_fn(|_| rng.gen::<f64>());
        try_point(z, &mut shard);
    }
    // Local descent: Gaussian steps around the incumbent, shrinking after
    // runs of failures.
    let mut sigma = 0.1;
    let mut fails = 0u32;
    for _ in explore..budget {
        let Some((lam, z0, _)) = shard.best else {
            let z: [f64; DIM] = std::array::from_fn(|_| rng.gen::<f64>());
            try_point(z, &mut shard);
            continue;
        };
        let mut z = z0;
        let coords = rng.gen_range(1..=DIM);
        for _ in 0..coords {
            let i = rng.gen_range(0..DIM);
            let g: f64 = rng.sample(rand_distr::StandardNormal);
            z[i] = (z[i] + sigma * g).clamp(0.0, 1.0);
        }
        try_point(z, &mut shard);
        if shard.best.as_ref().is_some_and(|(l, _, _)| *l < lam) {
            fails = 0;
        } else {
            fails += 1;
            if fails >= 200 {
                sigma = (sigma * 0.5).max(1e-6);
                fails = 0;
            }
        }
    }
    shard
}

/// Random sampling plus local descent over both variants, half the budget
/// each. Shards are merged by `(λ, shard index)`.
pub fn folding_program_search(budget: u64, seed: u64) -> Result<FoldingSearchResult> {
    if budget == 0 {
        return Err(Error::BadParam("search budget must be at least 1".into()));
    }
    let variants = [Variant::Standard, Variant::Obtuse];
    let per = budget.div_ceil(2);
    let shards: Vec<Shard> = variants
        .iter()
        .enumerate()
        .map(|(i, &v)| run_shard(v, per, seed.wrapping_mul(2).wrapping_add(i as u64)))
        .collect();
    let evaluations = shards.iter().map(|s| s.evals).sum();
    let rejected = shards.iter().map(|s| s.rejected).sum();
    let best = shards
        .iter()
        .zip(variants)
        .filter_map(|(s, v)| s.best.as_ref().map(|(l, _, x)| (*l, v, *x)))
        .min_by(|a, b| a.0.total_cmp(&b.0));
    let Some((min_lambda, variant, witness)) = best else {
        return Err(Error::InternalInconsistency(
            "no feasible point sampled".into(),
        ));
    };
    Ok(FoldingSearchResult {
        min_lambda,
        variant,
        max_residual: max_residual(&witness, variant),
        witness,
        evaluations,
        rejected,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn corner(lambda: f64) -> FoldingProgramPoint {
        FoldingProgramPoint {
            lambda,
            alpha: 1.0,
            beta: -1.0,
            ..Default::default()
        }
        .complete(Variant::Standard)
    }

    fn residual(x: &FoldingProgramPoint, name: &str) -> f64 {
        folding_program_residuals(x, Variant::Standard)
            .into_iter()
            .find(|(n, _)| n.starts_with(name))
            .unwrap()
            .1
    }

    #[test]
    fn corner_point_is_feasible() {
        let x = corner(0.5);
        assert_eq!((x.v1, x.v2, x.y1, x.y2), (0.25, -0.25, 0.5, 0.5));
        assert_eq!(max_residual(&x, Variant::Standard), 0.0);
        assert_eq!(x.fold_bounds()[2], 5.0 / 24.0);
    }

    #[test]
    fn corner_point_with_small_lambda() {
        let x = corner(0.1);
        assert!((residual(&x, "right fold") - 7.0 / 30.0).abs() < 1e-15);
    }

    #[test]
    fn t_cap_violation() {
        let mut x = corner(0.5);
        x.a = 0.25;
        x.f = 0.25;
        let x = x.complete(Variant::Standard);
        assert_eq!(x.t, 0.5);
        assert!((residual(&x, "t <=") - (0.5 - T_CAP)).abs() < 1e-15);
    }

    #[test]
    fn decoded_points_meet_structural_constraints() {
        let mut rng = ChaCha8Rng::seed_from_u64(5);
        for variant in [Variant::Standard, Variant::Obtuse] {
            for _ in 0..1000 {
                let z: [f64; DIM] = std::array::from_fn(|_| rng.gen::<f64>());
                let x = decode(&z, variant);
                for (name, v) in folding_program_residuals(&x, variant) {
                    if !name.starts_with("t <=") && !name.starts_with("box") {
                        assert!(v <= 1e-12, "{name}: {v}");
                    }
                }
            }
        }
    }

    #[test]
    fn budget_zero_is_rejected() {
        assert!(folding_program_search(0, 1).is_err());
    }

    #[test]
    fn small_search_is_consistent() {
        let r = folding_program_search(4000, 11).unwrap();
        assert!(r.max_residual <= RESIDUAL_TOL);
        assert!((r.witness.min_lambda() - r.min_lambda).abs() < 1e-15);
    }
}
