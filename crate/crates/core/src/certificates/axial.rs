//! The axial symmetry linear program and its duality certificate.
//!
//! The program bounds `λ`, the axiality, from below in terms of six cap
//! areas `a..f` around an inscribed axially regular hexagon of unit area,
//! with `t = a + … + f`. For fixed `t` it is linear. The certificate splits
//! on the orderings of `a, f` and `b, e`; two of the four cases reduce to a
//! sub-program whose dual has explicit feasible points.

use serde::Serialize;

use super::qsqrt2::{rat, QSqrt2};
use crate::{Error, Result};

fn q(n: i64, d: i64) -> QSqrt2 {
    QSqrt2::rational(rat(n, d))
}

/// `3√2 − 4`: the triangle-lemma constant.
pub fn triangle_constant() -> QSqrt2 {
    QSqrt2::from_fracs(-4, 1, 3, 1)
}

/// The exact lower bound `(2/41)(10 + 3√2)`.
pub fn theorem11_value() -> QSqrt2 {
    QSqrt2::from_fracs(20, 41, 6, 41)
}

/// Crossing point `(6 − 3√2)/4` of the two dual branches.
pub fn t_star() -> QSqrt2 {
    QSqrt2::from_fracs(3, 2, -3, 4)
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct AxialProgramPoint {
    pub lambda: QSqrt2,
    pub a: QSqrt2,
    pub b: QSqrt2,
    pub c: QSqrt2,
    pub d: QSqrt2,
    pub e: QSqrt2,
    pub f: QSqrt2,
    pub t: QSqrt2,
}

impl AxialProgramPoint {
    /// Builds a point with `t` set to the sum of the areas.
    pub fn with_areas(lambda: QSqrt2, areas: [QSqrt2; 6]) -> Self {
        let t = areas.iter().fold(QSqrt2::zero(), |s, x| s + x);
        let [a, b, c, d, e, f] = areas;
        AxialProgramPoint {
            lambda,
            a,
            b,
            c,
            d,
            e,
            f,
            t,
        }
    }
}

/// Names of the violated constraints; empty iff `x` is feasible.
pub fn axial_primal_feasible(x: &AxialProgramPoint) -> Vec<&'static str> {
    let mut bad = Vec::new();
    let areas = [&x.a, &x.b, &x.c, &x.d, &x.e, &x.f];
    let names = ["a >= 0", "b >= 0", "c >= 0", "d >= 0", "e >= 0", "f >= 0"];
    for (v, n) in areas.iter().zip(names) {
        if !v.is_nonnegative() {
            bad.push(n);
        }
    }
    let sum = areas.iter().fold(QSqrt2::zero(), |s, &v| s + v);
    if sum != x.t {
        bad.push("t = a+b+c+d+e+f");
    }
    let sixth = q(1, 6);
    let third = q(1, 3);
    if &x.b + &x.c > sixth {
        bad.push("b+c <= 1/6");
    }
    if &x.d + &x.e > sixth {
        bad.push("d+e <= 1/6");
    }
    if &x.a + &x.b + &x.d > third {
        bad.push("a+b+d <= 1/3");
    }
    if &x.c + &x.e + &x.f > third {
        bad.push("c+e+f <= 1/3");
    }
    let lhs = (QSqrt2::one() + &x.t) * &x.lambda;
    let mins = QSqrt2::one()
        + x.a.clone().min(x.f.clone())
        + x.b.clone().min(x.e.clone())
        + x.c.clone().min(x.d.clone());
    if lhs < mins {
        bad.push("(1+t)λ >= 1 + min{a,f} + min{b,e} + min{c,d}");
    }
    let two = QSqrt2::int(2);
    if lhs < triangle_constant() + &two * (&x.a + &x.c + &x.e) {
        bad.push("(1+t)λ >= 3√2-4 + 2(a+c+e)");
    }
    if lhs < triangle_constant() + &two * (&x.b + &x.d + &x.f) {
        bad.push("(1+t)λ >= 3√2-4 + 2(b+d+f)");
    }
    bad
}

/// Dual variables of the case `a ≥ f, b ≤ e` sub-program, one per primal
/// constraint: area sum, `d+e`, `a+b+d`, additivity, triangle.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct DualPoint(pub [QSqrt2; 5]);

impl DualPoint {
    /// `z / (1 + t)`.
    pub fn scaled(z: &[QSqrt2; 5], t: &QSqrt2) -> Self {
        let s = (QSqrt2::one() + t).recip().expect("t >= 0");
        DualPoint(z.clone().map(|v| v * &s))
    }
}

/// First certificate direction: `(0, 0, 0, 1, 0)`.
pub fn dual_direction_one() -> [QSqrt2; 5] {
    [q(0, 1), q(0, 1), q(0, 1), q(1, 1), q(0, 1)]
}

/// Second certificate direction: `(4/5, 2/5, 2/5, 4/5, 1/5)`.
pub fn dual_direction_two() -> [QSqrt2; 5] {
    [q(4, 5), q(2, 5), q(2, 5), q(4, 5), q(1, 5)]
}

/// Left-hand sides of the dual column constraints (each must be `≤ 0`),
/// labelled by primal variable. The `λ` column is handled separately.
fn dual_columns(y: &DualPoint) -> [(&'static str, QSqrt2); 6] {
    let [y1, y2, y3, y4, y5] = &y.0;
    let two = QSqrt2::int(2);
    [
        ("a: y1-y3-2y5 <= 0", y1 - y3 - &two * y5),
        ("b: y1-y3-y4 <= 0", y1 - y3 - y4),
        ("c: y1-y4-2y5 <= 0", y1 - y4 - &two * y5),
        ("d: y1-y2-y3 <= 0", y1 - y2 - y3),
        ("e: y1-y2-2y5 <= 0", y1 - y2 - &two * y5),
        ("f: y1-y4 <= 0", y1 - y4),
    ]
}

/// Names of the violated dual constraints at `t`.
pub fn dual_violations(t: &QSqrt2, y: &DualPoint) -> Vec<&'static str> {
    let mut bad = Vec::new();
    if y.0.iter().any(|v| !v.is_nonnegative()) {
        bad.push("y >= 0");
    }
    if (QSqrt2::one() + t) * (&y.0[3] + &y.0[4]) > QSqrt2::one() {
        bad.push("λ: (1+t)(y4+y5) <= 1");
    }
    for (name, v) in dual_columns(y) {
        if v.is_positive() {
            bad.push(name);
        }
    }
    bad
}

/// Exact dual feasibility at `t ≥ 0`.
pub fn dual_feasible_case3(t: &QSqrt2, y: &DualPoint) -> bool {
    dual_violations(t, y).is_empty()
}

/// `t·y1 − y2/6 − y3/3 + y4 + (3√2−4)·y5`.
pub fn dual_objective_case3(t: &QSqrt2, y: &DualPoint) -> QSqrt2 {
    let [y1, y2, y3, y4, y5] = &y.0;
    t * y1 - y2 * q(1, 6) - y3 * q(1, 3) + y4 + triangle_constant() * y5
}

/// Objective along `z/(1+t)` as `(c0 + c1·t)/(1+t)`; returns `(c0, c1)`.
fn objective_numerator(z: &[QSqrt2; 5]) -> (QSqrt2, QSqrt2) {
    let c1 = z[0].clone();
    let c0 = -(&z[1] * q(1, 6)) - &z[2] * q(1, 3) + &z[3] + triangle_constant() * &z[4];
    (c0, c1)
}

/// A feasible primal point attaining the bound at `t*`, in the case
/// `a ≥ f, b ≤ e`.
pub fn tight_primal_point() -> AxialProgramPoint {
    let lambda = QSqrt2::one() / (QSqrt2::one() + t_star());
    AxialProgramPoint::with_areas(
        lambda,
        [
            QSqrt2::from_fracs(4, 3, -3, 4),
            QSqrt2::zero(),
            QSqrt2::zero(),
            QSqrt2::from_fracs(-1, 1, 3, 4),
            QSqrt2::from_fracs(7, 6, -3, 4),
            QSqrt2::zero(),
        ],
    )
}

/// One verified statement of the certificate.
#[derive(Debug, Clone, Serialize)]
pub struct Check {
    pub claim: String,
    pub holds: bool,
}

#[derive(Debug, Clone, Serialize)]
pub struct Theorem11 {
    /// Minimum over all cases: `(2/41)(10 + 3√2)`.
    pub value: QSqrt2,
    pub t_star: QSqrt2,
    /// Case `a ≤ f, b ≥ e`, at its worst `t = 2/3`.
    pub case1: QSqrt2,
    /// Case `a ≥ f, b ≥ e`.
    pub case2: QSqrt2,
    /// Cases `a ≥ f, b ≤ e` and (by swapping) `a ≤ f, b ≤ e`.
    pub case3: QSqrt2,
    pub checks: Vec<Check>,
}

/// A constraint `(1+t)λ ≥ constant + Σ coeffs·(a..f)`.
#[derive(Debug, Clone)]
struct Lower {
    constant: QSqrt2,
    coeffs: [QSqrt2; 6],
}

impl Lower {
    fn new(constant: QSqrt2, coeffs: [i64; 6]) -> Self {
        Lower {
            constant,
            coeffs: coeffs.map(QSqrt2::int),
        }
    }

    fn combine(&self, k: &QSqrt2, other: &Lower, m: &QSqrt2) -> Lower {
        let mut coeffs = self.coeffs.clone();
        for (c, o) in coeffs.iter_mut().zip(&other.coeffs) {
            *c = &*c * k + o * m;
        }
        Lower {
            constant: &self.constant * k + &other.constant * m,
            coeffs,
        }
    }
}

/// Verifies the whole case analysis exactly and returns the bound.
pub fn theorem11_lower_bound() -> Result<Theorem11> {
    let mut checks = Vec::new();
    let mut check = |claim: String, holds: bool| checks.push(Check { claim, holds });
    let one = QSqrt2::one();
    let ts = t_star();

    // Case 3 dual certificate. Feasibility of z/(1+t) is independent of t:
    // the λ column reads z4 + z5 ≤ 1 and the other columns are homogeneous.
    let z1 = dual_direction_one();
    let z2 = dual_direction_two();
    for (label, z) in [("(0,0,0,1,0)", &z1), ("(4/5,2/5,2/5,4/5,1/5)", &z2)] {
        let nonneg = z.iter().all(QSqrt2::is_nonnegative);
        check(format!("dual point {label}/(1+t): y >= 0"), nonneg);
        check(
            format!("dual point {label}/(1+t): λ column z4+z5 <= 1"),
            &z[3] + &z[4] <= one,
        );
        for (name, v) in dual_columns(&DualPoint(z.clone())) {
            check(
                format!("dual point {label}/(1+t): column {name}"),
                !v.is_positive(),
            );
        }
        for t in [q(0, 1), q(1, 2), ts.clone(), q(2, 3), q(5, 1)] {
            let ok = dual_feasible_case3(&t, &DualPoint::scaled(z, &t));
            check(format!("dual point {label}/(1+t) feasible at t = {t}"), ok);
        }
    }

    // Objective branches: 1/(1+t) and (4t + 3√2 − 1)/(5(1+t)).
    let (a0, a1) = objective_numerator(&z1);
    let (b0, b1) = objective_numerator(&z2);
    check(
        "first branch numerator is 1".into(),
        a0 == one && a1.is_zero(),
    );
    let want_b0 = QSqrt2::from_fracs(-1, 5, 3, 5);
    check(
        "second branch numerator is (4t + 3√2 - 1)/5".into(),
        b0 == want_b0 && b1 == q(4, 5),
    );
    let half = q(1, 2);
    check(
        "first branch at t = 1/2 equals 2/3".into(),
        dual_objective_case3(&half, &DualPoint::scaled(&z1, &half)) == q(2, 3),
    );
    let zero = QSqrt2::zero();
    check(
        "second branch at t = 0 equals (3√2 - 1)/5".into(),
        dual_objective_case3(&zero, &DualPoint::scaled(&z2, &zero)) == want_b0,
    );

    // Crossing: c0 + c1·t equal for both branches.
    let crossing = (&a0 - &b0) / (&b1 - &a1);
    check(
        format!("branches cross at t* = {crossing} = (6 - 3√2)/4"),
        crossing == ts,
    );
    check("t* >= 0".into(), ts.is_nonnegative());
    check("t* <= 2/3, the largest feasible t".into(), ts <= q(2, 3));
    // (c0 + c1·t)/(1+t) is increasing iff c1 − c0 > 0.
    check(
        "first branch is nonincreasing in t".into(),
        !(&a1 - &a0).is_positive(),
    );
    check(
        "second branch is increasing in t (5 - 3√2 > 0)".into(),
        (&b1 - &b0).is_positive(),
    );
    let v1 = dual_objective_case3(&ts, &DualPoint::scaled(&z1, &ts));
    let v2 = dual_objective_case3(&ts, &DualPoint::scaled(&z2, &ts));
    check("branches agree at t*".into(), v1 == v2);
    let ten_minus = QSqrt2::from_fracs(10, 1, -3, 1);
    check(
        "value at t* equals 4/(10 - 3√2)".into(),
        v1 == QSqrt2::int(4) / &ten_minus,
    );
    check(
        "4/(10 - 3√2) equals (2/41)(10 + 3√2)".into(),
        QSqrt2::int(4) / &ten_minus == theorem11_value(),
    );
    let case3 = v1.clone();

    // The bound is attained: a primal point of the sub-program with λ = v1.
    let tight = tight_primal_point();
    check(
        "tight primal point is feasible".into(),
        axial_primal_feasible(&tight).is_empty(),
    );
    check("tight primal point has t = t*".into(), tight.t == ts);
    check(
        "tight primal point has λ = bound".into(),
        tight.lambda == case3,
    );
    check(
        "tight primal point lies in case a >= f, b <= e".into(),
        tight.a >= tight.f && tight.b <= tight.e,
    );

    // Case 1: 3·(additivity with mins a, e, c) + 3/2·(triangle b, d, f).
    let additive = Lower::new(one.clone(), [1, 0, 1, 0, 1, 0]);
    let triangle = Lower::new(triangle_constant(), [0, 2, 0, 2, 0, 2]);
    let three = QSqrt2::int(3);
    let combo = additive.combine(&three, &triangle, &q(3, 2));
    check(
        "case 1: combination has coefficient 3 on every area, i.e. 3t".into(),
        combo.coeffs.iter().all(|c| *c == three),
    );
    let weight = q(9, 2);
    let c1 = |t: &QSqrt2| (&combo.constant + &three * t) / (&weight * (&one + t));
    check(
        "case 1: bound is decreasing in t".into(),
        (&three - &combo.constant).sign() < 0,
    );
    let case1 = c1(&q(2, 3));
    check(
        "case 1: value at t = 2/3 is (9√2 - 2)/15".into(),
        case1 == QSqrt2::from_fracs(-2, 15, 9, 15),
    );
    check("case 1: (9√2 - 2)/15 > 0.715".into(), case1 > q(143, 200));

    // Case 2: λ ≥ (1+f+e+c)/(1+t) ≥ 1/(1+a+b+d) ≥ 1/(1 + 1/3).
    let case2 = &one / (&one + q(1, 3));
    check("case 2: 1/(1 + 1/3) = 3/4".into(), case2 == q(3, 4));

    // Case 4: the swap a↔f, b↔c, d↔e maps its sub-program onto case 3's.
    let case3_rows = sub_program_rows(false);
    let case4_rows = sub_program_rows(true);
    let swap = |r: &[i64; 6]| [r[5], r[2], r[1], r[4], r[3], r[0]];
    let mut mapped: Vec<[i64; 6]> = case4_rows.iter().map(swap).collect();
    let mut target = case3_rows.clone();
    mapped.sort();
    target.sort();
    check(
        "case 4: variable swap maps onto the case 3 sub-program".into(),
        mapped == target,
    );

    let value = case1.clone().min(case2.clone()).min(case3.clone());
    check(
        "minimum over cases is the case 3 value".into(),
        value == case3,
    );
    check(
        "bound equals (2/41)(10 + 3√2)".into(),
        value == theorem11_value(),
    );

    if let Some(bad) = checks.iter().find(|c| !c.holds) {
        return Err(Error::InternalInconsistency(bad.claim.clone()));
    }
    Ok(Theorem11 {
        value,
        t_star: ts,
        case1,
        case2,
        case3,
        checks,
    })
}

/// Area coefficient rows of the two tight sub-programs, without the
/// area-sum row, which the swap fixes.
fn sub_program_rows(case4: bool) -> Vec<[i64; 6]> {
    if case4 {
        vec![
            [0, 0, 0, 1, 1, 0], // d+e ≤ 1/6
            [0, 0, 1, 0, 1, 1], // c+e+f ≤ 1/3
            [1, 1, 1, 0, 0, 0], // 1+a+b+c
            [0, 2, 0, 2, 0, 2], // 3√2−4 + 2(b+d+f)
        ]
    } else {
        vec![
            [0, 0, 0, 1, 1, 0], // d+e ≤ 1/6
            [1, 1, 0, 1, 0, 0], // a+b+d ≤ 1/3
            [0, 1, 1, 0, 0, 1], // 1+f+b+c
            [2, 0, 2, 0, 2, 0], // 3√2−4 + 2(a+c+e)
        ]
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn primal_examples() {
        let z = QSqrt2::zero;
        let x = AxialProgramPoint::with_areas(QSqrt2::one(), [z(), z(), z(), z(), z(), z()]);
        assert!(axial_primal_feasible(&x).is_empty());
        let s = || q(1, 6);
        let y = AxialProgramPoint::with_areas(QSqrt2::zero(), [s(), s(), s(), s(), s(), s()]);
        let bad = axial_primal_feasible(&y);
        assert!(bad.contains(&"a+b+d <= 1/3"));
        assert!(bad.iter().filter(|n| n.starts_with("(1+t)")).count() == 3);
        assert!(axial_primal_feasible(&tight_primal_point()).is_empty());
    }

    #[test]
    fn dual_examples() {
        for t in [q(0, 1), q(1, 3), q(7, 2)] {
            assert!(dual_feasible_case3(
                &t,
                &DualPoint::scaled(&dual_direction_one(), &t)
            ));
            assert!(dual_feasible_case3(
                &t,
                &DualPoint::scaled(&dual_direction_two(), &t)
            ));
        }
        let bad = DualPoint([q(1, 1), q(0, 1), q(0, 1), q(0, 1), q(0, 1)]);
        assert!(dual_violations(&q(1, 1), &bad).contains(&"f: y1-y4 <= 0"));
    }

    #[test]
    fn objective_examples() {
        let t = t_star();
        let v = dual_objective_case3(&t, &DualPoint::scaled(&dual_direction_two(), &t));
        assert_eq!(v, theorem11_value());
        assert!((v.to_f64() - 0.694_762_96).abs() < 1e-8);
    }

    #[test]
    fn certificate_holds() {
        let cert = theorem11_lower_bound().unwrap();
        assert_eq!(cert.value, theorem11_value());
        assert_eq!(cert.case2, q(3, 4));
        assert!(cert.checks.iter().all(|c| c.holds));
    }

    use proptest::prelude::*;

    /// Smallest feasible `λ` for the given areas, if the areas are feasible.
    fn primal_with_min_lambda(areas: [QSqrt2; 6]) -> Option<AxialProgramPoint> {
        let mut x = AxialProgramPoint::with_areas(QSqrt2::zero(), areas);
        let one = QSqrt2::one();
        let two = QSqrt2::int(2);
        let need = (one.clone()
            + x.a.clone().min(x.f.clone())
            + x.b.clone().min(x.e.clone())
            + x.c.clone().min(x.d.clone()))
        .max(triangle_constant() + &two * (&x.a + &x.c + &x.e))
        .max(triangle_constant() + &two * (&x.b + &x.d + &x.f));
        x.lambda = need / (one + &x.t);
        axial_primal_feasible(&x).is_empty().then_some(x)
    }

    fn dual_at(t: &QSqrt2, mix: i64, scale: i64) -> DualPoint {
        let (one, two) = (dual_direction_one(), dual_direction_two());
        let s = q(mix, 10);
        let r = q(scale, 10);
        let z: [QSqrt2; 5] =
            std::array::from_fn(|i| (&s * &one[i] + (QSqrt2::one() - &s) * &two[i]) * &r);
        DualPoint::scaled(&z, t)
    }

    proptest! {
        #[test]
        fn weak_duality_on_case3_points(
            n in proptest::array::uniform6(0i64..12),
            mix in 0i64..=10,
            scale in 0i64..=10,
        ) {
            let areas = n.map(|k| q(k, 72));
            // Case a ≥ f, b ≤ e, c ≤ d, or its mirror under a↔f, b↔e, c↔d.
            let case3 = areas[0] >= areas[5] && areas[1] <= areas[4] && areas[2] <= areas[3];
            let case4 = areas[5] >= areas[0] && areas[4] <= areas[1] && areas[3] <= areas[2];
            prop_assume!(case3 || case4);
            let areas = if case3 {
                areas
            } else {
                let [a, b, c, d, e, f] = areas;
                [f, e, d, c, b, a]
            };
            let Some(x) = primal_with_min_lambda(areas) else { return Ok(()) };
            let y = dual_at(&x.t, mix, scale);
            prop_assert!(dual_feasible_case3(&x.t, &y));
            prop_assert!(dual_objective_case3(&x.t, &y) <= x.lambda);
        }
    }
}
