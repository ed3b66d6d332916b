//! Subcommand implementations. Each returns the JSON inputs echo, the JSON
//! result and a few lines of text for the human-readable mode.

use std::path::Path;

use serde_json::{json, Value};
use symmetria::certificates::folding_program::{max_residual, RESIDUAL_TOL};
use symmetria::certificates::{
    bounds_table, folding_program_residuals, folding_program_search, theorem11_lower_bound,
    FoldingProgramPoint, Variant,
};
use symmetria::constructions::{
    appendix_b_table, cs_fold_construction, inscribed_rectangle, largest_cap_lower_bound,
    parallelogram, quad_family, ParallelogramParam, RECTANGLE_RATIO,
};
use symmetria::io::{polygon_value, read_polygon, write_polygon};
use symmetria::measures::{axiality, central_symmetry, folding, MeasureOptions};
use symmetria::search::{anneal_seeds, best_of, AnnealConfig};
use symmetria::{suite, svg, ConvexPolygon, Error, Result, SymmetryReport};

use crate::output::num;
use crate::{
    BoundsCmd, CertifyCmd, Command, FamilyCmd, InscribeArgs, Measure, MeasureArgs, RenderArgs,
    SearchArgs, VariantArg, VerifyCmd,
};

/// Tolerance of the analytic-versus-numeric comparison.
const APPENDIX_B_TOL: f64 = 1e-5;
/// Folding-program value the search is compared against.
const FOLDING_PROGRAM_BOUND: f64 = 0.18803;

pub struct Output {
    pub command: String,
    pub inputs: Value,
    pub result: Value,
    pub text: Vec<String>,
}

fn to_value<T: serde::Serialize>(x: &T) -> Value {
    serde_json::to_value(x).expect("library types serialize")
}

fn path_str(p: &Path) -> String {
    p.display().to_string()
}

fn write_file(path: &Path, contents: &str) -> Result<()> {
    std::fs::write(path, contents).map_err(|e| Error::Io(format!("{}: {e}", path.display())))
}

pub fn run(cmd: &Command) -> Result<Output> {
    match cmd {
        Command::Measure(a) => measure(a),
        Command::Family { family } => family_cmd(family),
        Command::InscribeRect(a) => inscribe(a),
        Command::Verify { what } => match what {
            VerifyCmd::AppendixB { epsilon, samples } => verify_appendix_b(epsilon, *samples),
            VerifyCmd::CsFold {
                polygon,
                suite,
                seed,
            } => verify_cs_fold(polygon.as_deref(), *suite, *seed),
            VerifyCmd::ProgramConstraints {
                point,
                variant,
                complete,
            } => verify_program(point.as_deref(), *variant, *complete),
        },
        Command::Certify { what } => match what {
            CertifyCmd::Theorem11 => certify_theorem(),
            CertifyCmd::FoldingSearch { budget, seed } => certify_folding(*budget, *seed),
        },
        Command::Bounds {
            what: BoundsCmd::Table { n_max },
        } => bounds(*n_max),
        Command::Search(a) => search(a),
        Command::Render(a) => render(a),
    }
}

fn measure_name(m: Measure) -> &'static str {
    match m {
        Measure::Axiality => "axiality",
        Measure::Central => "central",
        Measure::Folding => "folding",
    }
}

fn run_measure(m: Measure, p: &ConvexPolygon, opts: &MeasureOptions) -> Result<SymmetryReport> {
    match m {
        Measure::Axiality => axiality(p, opts),
        Measure::Central => central_symmetry(p, opts),
        Measure::Folding => folding(p, opts),
    }
}

fn report_lines(r: &SymmetryReport) -> Vec<String> {
    let mut out = vec![format!("{}: {}", r.measure.name(), num(r.value))];
    if let Some(l) = r.line {
        out.push(format!("line: theta = {}, d = {}", num(l.theta), num(l.d)));
    }
    if let Some(c) = r.center {
        out.push(format!("center: ({}, {})", num(c.x), num(c.y)));
    }
    out.push(format!(
        "overlap area: {}, body area: {}",
        num(r.overlap_area),
        num(r.body_area)
    ));
    out.push(format!(
        "evaluations: {}, achieved tolerance: {:.3e}{}",
        r.evaluations,
        r.achieved_tolerance,
        if r.resolution_limited {
            " (resolution limited)"
        } else {
            ""
        }
    ));
    out
}

fn measure(a: &MeasureArgs) -> Result<Output> {
    let (p, norm) = read_polygon(&a.polygon)?;
    let mut opts = MeasureOptions::default();
    if let Some(n) = a.angles {
        opts.angle_samples = n;
    }
    if let Some(t) = a.tol {
        opts.offset_tolerance = t;
    }
    let report = run_measure(a.measure, &p, &opts)?;
    let mut text = report_lines(&report);
    if norm.changed() {
        text.push(format!(
            "input normalized: {} points -> {} vertices",
            norm.input_points, norm.output_vertices
        ));
    }
    if let Some(path) = &a.svg {
        write_file(path, &svg::render(&p, Some(&report)))?;
        text.push(format!("svg written to {}", path.display()));
    }
    Ok(Output {
        command: "measure".into(),
        inputs: json!({
            "measure": measure_name(a.measure),
            "polygon": path_str(&a.polygon),
            "options": to_value(&opts),
            "svg": a.svg.as_deref().map(path_str),
        }),
        result: json!({ "report": to_value(&report), "normalization": to_value(&norm) }),
        text,
    })
}

fn family_cmd(f: &FamilyCmd) -> Result<Output> {
    let (name, params, p, out) = match f {
        FamilyCmd::Quad { epsilon, out } => (
            "quad",
            json!({ "epsilon": epsilon }),
            quad_family(*epsilon)?,
            out,
        ),
        FamilyCmd::Parallelogram { d1, h, out } => (
            "parallelogram",
            json!({ "d1": d1, "h": h }),
            parallelogram(ParallelogramParam::new(*d1, *h)?)?,
            out,
        ),
        FamilyCmd::Regular {
            n,
            circumradius,
            out,
        } => {
            if *n < 3 || circumradius.is_nan() || *circumradius <= 0.0 {
                return Err(Error::BadParam(
                    "need n >= 3 and a positive circumradius".into(),
                ));
            }
            (
                "regular",
                json!({ "n": n, "circumradius": circumradius }),
                suite::regular_polygon(*n, *circumradius),
                out,
            )
        }
        FamilyCmd::Random { points, seed, out } => {
            if *points < 3 {
                return Err(Error::BadParam("need at least 3 points".into()));
            }
            let mut rng = <rand_chacha::ChaCha8Rng as rand::SeedableRng>::seed_from_u64(*seed);
            (
                "random",
                json!({ "points": points, "seed": seed }),
                suite::random_hull(&mut rng, *points),
                out,
            )
        }
        FamilyCmd::RandomCs { half, seed, out } => {
            if *half < 2 {
                return Err(Error::BadParam("need half >= 2".into()));
            }
            let mut rng = <rand_chacha::ChaCha8Rng as rand::SeedableRng>::seed_from_u64(*seed);
            (
                "random-cs",
                json!({ "half": half, "seed": seed }),
                suite::random_centrally_symmetric(&mut rng, *half),
                out,
            )
        }
    };
    let mut text = vec![format!(
        "{name}: {} vertices, area {}",
        p.len(),
        num(p.area())
    )];
    match out {
        Some(path) => {
            write_polygon(path, &p)?;
            text.push(format!("written to {}", path.display()));
        }
        None => text.push(symmetria::io::polygon_to_json(&p).trim_end().to_string()),
    }
    Ok(Output {
        command: "family".into(),
        inputs: json!({ "family": name, "params": params, "out": out.as_deref().map(path_str) }),
        result: json!({ "polygon": polygon_value(&p), "area": p.area(), "vertices": p.len() }),
        text,
    })
}

fn inscribe(a: &InscribeArgs) -> Result<Output> {
    let (p, _) = read_polygon(&a.polygon)?;
    let area = p.area();
    let rect = inscribed_rectangle(&p, a.ratio * area)?;
    let caps = rect.caps(&p);
    let largest = caps.iter().cloned().fold(0.0, f64::max);
    let bound = largest_cap_lower_bound(a.ratio)? * area;
    let text = vec![
        format!(
            "rectangle area: {} (ratio {})",
            num(rect.area),
            num(rect.area / area)
        ),
        format!(
            "corners: {}",
            rect.corners
                .iter()
                .map(|c| format!("({}, {})", num(c.x), num(c.y)))
                .collect::<Vec<_>>()
                .join(" ")
        ),
        format!("caps: {}", caps.map(num).join(", ")),
        format!("largest cap {} >= bound {}", num(largest), num(bound)),
    ];
    Ok(Output {
        command: "inscribe-rect".into(),
        inputs: json!({ "polygon": path_str(&a.polygon), "ratio": a.ratio }),
        result: json!({
            "rectangle": to_value(&rect),
            "caps": caps,
            "largest_cap": largest,
            "cap_lower_bound": bound,
            "rectangle_defect": rect.rectangle_defect(),
            "boundary_defect": rect.boundary_defect(&p),
        }),
        text,
    })
}

fn verify_appendix_b(eps: &[f64], samples: usize) -> Result<Output> {
    let mut rows = Vec::new();
    for &e in eps {
        rows.extend(appendix_b_table(e, samples)?);
    }
    let worst = rows.iter().map(|r| r.abs_diff()).fold(0.0, f64::max);
    let pass = worst <= APPENDIX_B_TOL;
    let mut text: Vec<String> = rows
        .iter()
        .map(|r| {
            format!(
                "case {} eps {} angle {:.8}: analytic {:.12} numeric {:.12} ({}) diff {:.1e}",
                r.case,
                r.epsilon,
                r.angle,
                r.analytic,
                r.numeric,
                r.oracle,
                r.abs_diff()
            )
        })
        .collect();
    text.push(format!(
        "{}: worst difference {worst:.2e} (tolerance {APPENDIX_B_TOL:.0e})",
        if pass { "PASS" } else { "FAIL" }
    ));
    Ok(Output {
        command: "verify appendix-b".into(),
        inputs: json!({ "epsilon": eps, "samples": samples }),
        result: json!({
            "rows": to_value(&rows),
            "worst_abs_diff": worst,
            "tolerance": APPENDIX_B_TOL,
            "pass": pass,
        }),
        text,
    })
}

fn verify_cs_fold(
    polygon: Option<&Path>,
    count: Option<usize>,
    seed: Option<u64>,
) -> Result<Output> {
    let bodies: Vec<ConvexPolygon> = match (polygon, count, seed) {
        (Some(path), _, _) => vec![read_polygon(path)?.0],
        (None, Some(n), Some(s)) => suite::centrally_symmetric_suite(n, s),
        _ => {
            return Err(Error::BadParam(
                "give --polygon, or --suite with --seed".into(),
            ))
        }
    };
    let mut rows = Vec::new();
    let mut text = Vec::new();
    let mut pass = true;
    for (i, p) in bodies.iter().enumerate() {
        let out = cs_fold_construction(p)?;
        let ok = out.report.value >= RECTANGLE_RATIO - 1e-6 && out.feasible;
        pass &= ok;
        text.push(format!(
            "#{i}: fold {} via {:?}, feasible {}",
            num(out.report.value),
            out.case,
            out.feasible
        ));
        rows.push(to_value(&out));
    }
    text.push(format!(
        "{}: every fold >= 4/9 - 1e-6 and feasible",
        if pass { "PASS" } else { "FAIL" }
    ));
    Ok(Output {
        command: "verify cs-fold".into(),
        inputs: json!({
            "polygon": polygon.map(path_str),
            "suite": count,
            "seed": seed,
        }),
        result: json!({ "runs": rows, "pass": pass }),
        text,
    })
}

fn variant(v: VariantArg) -> Variant {
    match v {
        VariantArg::Standard => Variant::Standard,
        VariantArg::Obtuse => Variant::Obtuse,
    }
}

fn verify_program(point: Option<&Path>, v: VariantArg, complete: bool) -> Result<Output> {
    let v = variant(v);
    let points: Vec<(String, FoldingProgramPoint)> = match point {
        Some(path) => {
            let text = std::fs::read_to_string(path)
                .map_err(|e| Error::Io(format!("{}: {e}", path.display())))?;
            let x: FoldingProgramPoint =
                serde_json::from_str(&text).map_err(|e| Error::Parse(e.to_string()))?;
            let x = if complete { x.complete(v) } else { x };
            vec![(path_str(path), x)]
        }
        None => {
            let corner = |lambda| {
                FoldingProgramPoint {
                    lambda,
                    alpha: 1.0,
                    beta: -1.0,
                    ..Default::default()
                }
                .complete(v)
            };
            let mut capped = corner(0.5);
            capped.a = 0.25;
            capped.f = 0.25;
            vec![
                ("corner, λ = 1/2".into(), corner(0.5)),
                ("corner, λ = 1/10".into(), corner(0.1)),
                ("corner with a = f = 1/4".into(), capped.complete(v)),
            ]
        }
    };
    let mut text = Vec::new();
    let mut evaluated = Vec::new();
    for (label, x) in &points {
        let res = folding_program_residuals(x, v);
        let worst = max_residual(x, v);
        text.push(format!("{label}: max residual {worst:.3e}"));
        for (name, r) in res.iter().filter(|(_, r)| *r > 0.0) {
            text.push(format!("    {name}: {r:.12}"));
        }
        evaluated.push(json!({
            "label": label,
            "point": to_value(x),
            "residuals": res.iter().map(|(n, r)| json!({"constraint": n, "residual": r})).collect::<Vec<_>>(),
            "max_residual": worst,
            "feasible": worst <= RESIDUAL_TOL,
        }));
    }
    Ok(Output {
        command: "verify program-constraints".into(),
        inputs: json!({ "point": point.map(path_str), "variant": to_value(&v), "complete": complete }),
        result: json!({ "points": evaluated, "tolerance": RESIDUAL_TOL }),
        text,
    })
}

fn certify_theorem() -> Result<Output> {
    let cert = theorem11_lower_bound()?;
    let mut text: Vec<String> = cert
        .checks
        .iter()
        .map(|c| format!("[{}] {}", if c.holds { "ok" } else { "FAILED" }, c.claim))
        .collect();
    text.push(format!(
        "case 1 (t = 2/3): {} ≈ {}",
        cert.case1,
        num(cert.case1.to_f64())
    ));
    text.push(format!("case 2: {}", cert.case2));
    text.push(format!(
        "cases 3 and 4: {} at t* = {}",
        cert.case3, cert.t_star
    ));
    text.push(format!(
        "axiality >= (2/41)(10 + 3√2) = {} ≈ {} [exact]",
        cert.value,
        num(cert.value.to_f64())
    ));
    Ok(Output {
        command: "certify theorem-1-1".into(),
        inputs: json!({}),
        result: json!({
            "status": "exact",
            "value": to_value(&cert.value),
            "value_decimal": cert.value.to_f64(),
            "t_star": to_value(&cert.t_star),
            "case1": to_value(&cert.case1),
            "case2": to_value(&cert.case2),
            "case3": to_value(&cert.case3),
            "checks": to_value(&cert.checks),
        }),
        text,
    })
}

fn certify_folding(budget: u64, seed: u64) -> Result<Output> {
    let r = folding_program_search(budget, seed)?;
    let consistent = r.min_lambda >= FOLDING_PROGRAM_BOUND - 1e-6;
    let text = vec![
        format!("smallest feasible λ found: {} ({:?} variant)", num(r.min_lambda), r.variant),
        format!(
            "{} of {} sampled points rejected; witness max residual {:.1e}",
            r.rejected, r.evaluations, r.max_residual
        ),
        format!(
            "{} with the lower bound {FOLDING_PROGRAM_BOUND} (sampling gives an upper bound on the optimum, not a proof)",
            if consistent { "consistent" } else { "INCONSISTENT" }
        ),
    ];
    Ok(Output {
        command: "certify folding-search".into(),
        inputs: json!({ "budget": budget, "seed": seed }),
        result: json!({
            "search": to_value(&r),
            "reference_lower_bound": FOLDING_PROGRAM_BOUND,
            "consistent": consistent,
            "status": "empirical",
        }),
        text,
    })
}

fn bounds(n_max: u32) -> Result<Output> {
    let rows = bounds_table(n_max)?;
    let mut text = vec![format!(
        "{:>3}  {:>16}  {:>16}  {:>16}  {:>14}  {}",
        "n", "glb(k=n-1)", "fary-redei", "1/(2n)", "pyramid", "separation"
    )];
    for r in &rows {
        text.push(format!(
            "{:>3}  {:>16}  {:>16}  {:>16}  {:>14}  {}",
            r.n,
            num(r.glb.decimal),
            num(r.fary_redei.decimal),
            num(r.axlb.decimal),
            num(r.pyramid),
            r.separation
        ));
    }
    text.push("exact fractions are in the JSON output".into());
    Ok(Output {
        command: "bounds table".into(),
        inputs: json!({ "n_max": n_max }),
        result: json!({ "rows": to_value(&rows) }),
        text,
    })
}

/// Parses `a..b` (inclusive) or `a,b,c`.
pub fn parse_seeds(s: &str) -> Result<Vec<u64>> {
    let bad = || Error::BadParam(format!("cannot parse seeds {s:?}; use a..b or a,b,c"));
    if let Some((a, b)) = s.split_once("..") {
        let a: u64 = a.trim().parse().map_err(|_| bad())?;
        let b: u64 = b.trim().parse().map_err(|_| bad())?;
        if b < a {
            return Err(bad());
        }
        return Ok((a..=b).collect());
    }
    let seeds: Vec<u64> = s
        .split(',')
        .map(|x| x.trim().parse().map_err(|_| bad()))
        .collect::<Result<_>>()?;
    if seeds.is_empty() {
        return Err(bad());
    }
    Ok(seeds)
}

fn search(a: &SearchArgs) -> Result<Output> {
    let seeds = parse_seeds(&a.seeds)?;
    let mut cfg = AnnealConfig {
        n_vertices: a.vertices,
        iterations: a.iters,
        ..Default::default()
    };
    if let Some(t) = a.temperature {
        cfg.initial_temperature = t;
    }
    if let Some(c) = a.cooling {
        cfg.cooling_rate = c;
    }
    if let Some(s) = a.step {
        cfg.step_scale = s;
    }
    let start = match &a.start {
        Some(path) => Some(read_polygon(path)?.0),
        None => None,
    };
    let results = anneal_seeds(&cfg, start.as_ref(), &seeds)?;
    let best = best_of(&results).ok_or_else(|| Error::BadParam("no seeds".into()))?;
    let mut text: Vec<String> = results
        .iter()
        .map(|r| {
            format!(
                "seed {}: {} ({} improvements)",
                r.config_echo.seed,
                num(r.best_value),
                r.trace.len() - 1
            )
        })
        .collect();
    text.push(format!(
        "best: {} from seed {}",
        num(best.best_value),
        best.config_echo.seed
    ));
    if let Some(path) = &a.out {
        write_polygon(path, &best.best_polygon)?;
        text.push(format!("best polygon written to {}", path.display()));
    }
    if let Some(path) = &a.svg {
        let report = axiality(&best.best_polygon, &MeasureOptions::default())?;
        write_file(path, &svg::render(&best.best_polygon, Some(&report)))?;
        text.push(format!("svg written to {}", path.display()));
    }
    let runs: Vec<Value> = results
        .iter()
        .map(|r| json!({ "seed": r.config_echo.seed, "best_value": r.best_value, "improvements": r.trace.len() - 1 }))
        .collect();
    Ok(Output {
        command: "search".into(),
        inputs: json!({
            "config": to_value(&cfg),
            "seeds": seeds,
            "start": a.start.as_deref().map(path_str),
            "out": a.out.as_deref().map(path_str),
            "svg": a.svg.as_deref().map(path_str),
        }),
        result: json!({ "best": to_value(best), "runs": runs }),
        text,
    })
}

fn render(a: &RenderArgs) -> Result<Output> {
    let (p, _) = read_polygon(&a.polygon)?;
    let report = match a.measure {
        Some(m) => Some(run_measure(m, &p, &MeasureOptions::default())?),
        None => None,
    };
    write_file(&a.out, &svg::render(&p, report.as_ref()))?;
    let mut text = report.as_ref().map(report_lines).unwrap_or_default();
    text.push(format!("svg written to {}", a.out.display()));
    Ok(Output {
        command: "render".into(),
        inputs: json!({
            "polygon": path_str(&a.polygon),
            "measure": a.measure.map(measure_name),
            "out": path_str(&a.out),
        }),
        result: json!({ "report": report.as_ref().map(to_value), "svg": path_str(&a.out) }),
        text,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn seed_syntax() {
        assert_eq!(parse_seeds("0..7").unwrap(), (0..8).collect::<Vec<_>>());
        assert_eq!(parse_seeds("3, 5,9").unwrap(), vec![3, 5, 9]);
        assert_eq!(parse_seeds("4").unwrap(), vec![4]);
        assert!(parse_seeds("7..3").is_err());
        assert!(parse_seeds("x").is_err());
    }
}
