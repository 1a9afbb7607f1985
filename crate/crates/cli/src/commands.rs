//! The five certification pipelines behind the subcommands.

use std::fs;
use std::io::Write as _;
use std::path::Path;

use anyhow::{Context, Result};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde_json::json;

use subdyn_core::dynamics::{
    accumulation_report, certify_noncritical, orbit_periodic_4d, radius_recursion_check,
    rotation_symmetry_check, sgd_run, verify_increase, StepSchedule, Trajectory,
};
use subdyn_core::function_zoo::{
    DampedFn, DampedPair, IncreasingOrbitFn, Point4, SaturatedPair, SaturatedPeriodicFn,
};
use subdyn_core::measure_sets::{
    dyadic_enumeration, format_rational, rat, rat_to_f64, FatCantorSet, Interval, Rational,
    Verdict,
};

use crate::config::{
    CantorParams, IncreaseParams, PeriodicParams, SgdParams, SplitVerifyParams,
};
use crate::report::{Report, Section};
use crate::svg;

/// Per-step / per-point tolerance for the floating-side trajectory checks.
const TRAJECTORY_TOL: f64 = 1e-9;

fn f17(v: f64) -> String {
    Trajectory::render_f64(v)
}

fn dyadic_grid(count: u32, den: u32) -> Vec<Rational> {
    (1..=count).map(|k| rat(k as i64, den as i64)).collect()
}

pub fn run_cantor(params: &CantorParams, out: &Path) -> Result<i32> {
    let set = FatCantorSet::new(Interval::unit(), params.alpha.clone(), params.depth)?;

    // Bracket table over every depth, plus a summation cross-check of the
    // resolved removal mass on the shallow levels (the deep levels would
    // materialize millions of intervals for no extra information).
    let mut bracket_rows = Vec::new();
    for d in 0..=params.depth {
        let b = set.total_measure(d);
        bracket_rows.push(json!({
            "depth": d,
            "lower": format_rational(b.lower()),
            "upper": format_rational(b.upper()),
            "width": format_rational(&b.width()),
        }));
    }
    let consistency_items = (0..=params.depth.min(10)).map(|d| {
        let listed: Rational = set.removals(d).iter().map(Interval::length).sum();
        let resolved = Interval::unit().length() - set.total_measure(d).upper();
        let verdict = if listed == resolved {
            Verdict::Verified
        } else {
            Verdict::Violated
        };
        (
            format!("depth {d}"),
            verdict,
            format!("listed removal mass {}", format_rational(&listed)),
        )
    });
    let measure_section = Section::from_verdicts("removal_mass_consistency", consistency_items)
        .with_detail(json!({ "total_measure_brackets": bracket_rows }));

    let grid = dyadic_grid(params.grid_den, params.grid_den);
    let verdicts = set.check_mass_floor(&params.lambda, &grid, params.depth)?;
    let floor_section = Section::from_verdicts(
        "cumulative_mass_floor",
        verdicts
            .into_iter()
            .map(|(t, v)| (format_rational(&t), v, String::new())),
    );

    let report = Report::new(
        "cantor",
        json!({
            "alpha": format_rational(&params.alpha),
            "lambda": format_rational(&params.lambda),
            "depth": params.depth,
            "grid_den": params.grid_den,
        }),
        vec![measure_section, floor_section],
    );
    report.emit(out)
}

pub fn run_split_verify(params: &SplitVerifyParams, out: &Path) -> Result<i32> {
    let set = params.set.build(params.depth)?;
    let set_path = out.join("splitting_set.json");
    fs::write(&set_path, set.to_json())
        .with_context(|| format!("cannot write {}", set_path.display()))?;

    let floor = params
        .floor
        .clone()
        .unwrap_or_else(|| set.lambda().clone());
    let grid = dyadic_grid(params.grid_count, params.grid_den);
    let split_verdicts = set.check_controlled_split_with(&floor, &grid, params.depth)?;
    let controlled = Section::from_verdicts(
        "controlled_split_floor",
        split_verdicts
            .into_iter()
            .map(|(t, v)| (format_rational(&t), v, String::new())),
    )
    .with_detail(json!({
        "floor": format_rational(&floor),
        "unit_mass_lower": format_rational(set.unit_measure(params.depth).lower()),
        "unit_mass_upper": format_rational(set.unit_measure(params.depth).upper()),
    }));

    // Materialize the witness budget once; each check then runs against
    // the already-extended set.
    let working = set.extend_to(params.budget)?;
    let mut split_items = Vec::new();
    for n in 1..=params.intervals {
        let iv = dyadic_enumeration(n)?;
        let check = working.check_splits_interval(&iv, params.depth, 0)?;
        split_items.push((
            format!("I_{n} = {iv}"),
            check.verdict,
            format!(
                "set mass >= {}, complement mass >= {}",
                format_rational(&check.set_mass_lower),
                format_rational(&check.complement_mass_lower)
            ),
        ));
    }
    let splits = Section::from_verdicts("splits_enumerated_intervals", split_items);

    let mut report = Report::new(
        "split-verify",
        json!({
            "lambda": format_rational(&params.set.lambda),
            "alpha": format_rational(&params.set.alpha),
            "theta": format_rational(&params.set.theta),
            "placements": params.set.placements,
            "floor": format_rational(&floor),
            "grid_den": params.grid_den,
            "grid_count": params.grid_count,
            "intervals": params.intervals,
            "budget": params.budget,
            "depth": params.depth,
        }),
        vec![controlled, splits],
    );
    report.add_artifact("splitting_set", &set_path);
    report.emit(out)
}

pub fn run_increase(params: &IncreaseParams, out: &Path) -> Result<i32> {
    let set = params.set.build(params.depth)?;
    let f = IncreasingOrbitFn::new(set, params.rate)?;
    let grid = dyadic_grid(params.grid_count, params.grid_den);
    let verified = verify_increase(&f, &grid, params.depth)?;

    let csv_path = out.join("increase.csv");
    let mut csv = String::from("t,x,y,increase_lower,increase_upper,floor,ok\n");
    for row in &verified.rows {
        csv.push_str(&format!(
            "{},{},{},{},{},{},{}\n",
            f17(rat_to_f64(&row.t)),
            f17(row.point.x),
            f17(row.point.y),
            f17(rat_to_f64(row.value.lower())),
            f17(rat_to_f64(row.value.upper())),
            f17(rat_to_f64(&row.floor)),
            u8::from(row.ok),
        ));
    }
    fs::write(&csv_path, csv).with_context(|| format!("cannot write {}", csv_path.display()))?;

    let items = verified.rows.iter().map(|row| {
        (
            format_rational(&row.t),
            if row.ok {
                Verdict::Verified
            } else {
                Verdict::Violated
            },
            format!(
                "increase in [{}, {}], floor {}",
                format_rational(row.value.lower()),
                format_rational(row.value.upper()),
                format_rational(&row.floor)
            ),
        )
    });
    let section = Section::from_verdicts("linear_increase_floor", items).with_detail(json!({
        "mu": f.mu(),
    }));

    let mut report = Report::new(
        "increase",
        json!({
            "lambda": format_rational(&params.set.lambda),
            "alpha": format_rational(&params.set.alpha),
            "theta": format_rational(&params.set.theta),
            "placements": params.set.placements,
            "rate": params.rate,
            "grid_den": params.grid_den,
            "grid_count": params.grid_count,
            "depth": params.depth,
        }),
        vec![section],
    );
    report.add_artifact("csv", &csv_path);
    report.emit(out)
}

pub fn run_periodic(params: &PeriodicParams, out: &Path) -> Result<i32> {
    let set = params.set.build(params.depth)?;
    let phi = SaturatedPeriodicFn::new(set, params.m, params.b)?;
    let pair = SaturatedPair::new(phi);

    let times: Vec<f64> = match params.seed {
        Some(seed) => {
            let mut rng = ChaCha8Rng::seed_from_u64(seed);
            let mut v: Vec<f64> = (0..params.samples)
                .map(|_| rng.gen::<f64>() * std::f64::consts::TAU)
                .collect();
            v.sort_by(f64::total_cmp);
            v
        }
        None => (0..params.samples)
            .map(|k| k as f64 * std::f64::consts::TAU / params.samples as f64)
            .collect(),
    };
    let certificate = certify_noncritical(&pair, &times)?;

    let csv_path = out.join("periodic.csv");
    let mut csv = String::from("t,x1,x2,x3,x4,dist_crit\n");
    for &t in &times {
        let p = orbit_periodic_4d(&pair, t);
        let dist = pair.dist_to_crit(p)?;
        csv.push_str(&format!(
            "{},{},{},{},{},{}\n",
            f17(t),
            f17(p.x),
            f17(p.y),
            f17(p.z),
            f17(p.w),
            f17(dist),
        ));
    }
    fs::write(&csv_path, csv).with_context(|| format!("cannot write {}", csv_path.display()))?;

    let svg_path = out.join("periodic.svg");
    fs::write(&svg_path, svg::periodic_figure(params.b))
        .with_context(|| format!("cannot write {}", svg_path.display()))?;

    let section = Section::from_verdicts(
        "periodic_orbit_noncritical",
        std::iter::once((
            format!("{} sampled times", certificate.samples),
            certificate.verdict.clone(),
            format!(
                "min dist {}, max residual {:.3e}",
                certificate.min_dist, certificate.max_residual
            ),
        )),
    )
    .with_detail(json!({
        "samples": certificate.samples,
        "min_dist": certificate.min_dist,
        "max_dist": certificate.max_dist,
        "max_residual": certificate.max_residual,
        "max_band_offset": certificate.max_band_offset,
        "expected_dist": params.b / 2.0,
    }));

    let mut report = Report::new(
        "periodic",
        json!({
            "m": params.m,
            "b": params.b,
            "samples": params.samples,
            "seed": params.seed,
            "depth": params.depth,
        }),
        vec![section],
    );
    report.add_artifact("csv", &csv_path);
    report.add_artifact("svg", &svg_path);
    report.emit(out)
}

pub fn run_sgd(params: &SgdParams, out: &Path) -> Result<i32> {
    let set = params.set.build(params.depth)?;
    let f = DampedFn::new(set, params.delta, params.m)?;
    let pair = DampedPair::new(f);
    let schedule = StepSchedule::harmonic(params.c, params.steps)?;
    let start = Point4::new(params.start[0], params.start[1], params.start[2], params.start[3]);
    let traj = sgd_run(&pair, start, &schedule)?;

    let radius = radius_recursion_check(&traj, pair.g_norm_cap(), TRAJECTORY_TOL);
    let rotation = rotation_symmetry_check(&traj, TRAJECTORY_TOL);
    let window = params.window.clamp(1, traj.len());
    let summary = accumulation_report(&traj, window)?;

    let cap_sq = pair.g_norm_cap() * pair.g_norm_cap();
    let budget = cap_sq * schedule.sum_squares_cap();
    let final_radii = *traj.radii.last().expect("nonempty trajectory");
    let bound_sq = [
        traj.radii[0][0] * traj.radii[0][0] + budget,
        traj.radii[0][1] * traj.radii[0][1] + budget,
    ];
    let cap_ok = final_radii[0] * final_radii[0] <= bound_sq[0] + TRAJECTORY_TOL
        && final_radii[1] * final_radii[1] <= bound_sq[1] + TRAJECTORY_TOL;
    let floor_ok = summary.min_dist_overall >= summary.dist_floor - TRAJECTORY_TOL;

    let csv_path = out.join("trajectory.csv");
    {
        let file = fs::File::create(&csv_path)
            .with_context(|| format!("cannot write {}", csv_path.display()))?;
        let mut buf = std::io::BufWriter::new(file);
        traj.write_csv(&mut buf, params.csv_stride)?;
        buf.flush()?;
    }

    let mut artifacts = vec![("csv", csv_path.clone())];
    if params.with_values {
        let values_path = out.join("values.csv");
        let mut csv = String::from("n,f_lower,f_upper\n");
        let last = traj.len() - 1;
        for (i, p) in traj.points.iter().enumerate() {
            if i % params.csv_stride != 0 && i != last {
                continue;
            }
            let bracket = pair.eval(*p, params.depth)?;
            csv.push_str(&format!(
                "{},{},{}\n",
                i + 1,
                f17(rat_to_f64(bracket.lower())),
                f17(rat_to_f64(bracket.upper())),
            ));
        }
        fs::write(&values_path, csv)
            .with_context(|| format!("cannot write {}", values_path.display()))?;
        artifacts.push(("values_csv", values_path));
    }

    let to_verdict = |ok: bool| if ok { Verdict::Verified } else { Verdict::Violated };
    let sections = vec![
        Section::from_verdicts(
            "radius_recursion",
            std::iter::once((
                format!("{} steps", traj.steps.len()),
                radius.verdict.clone(),
                radius.detail.clone(),
            )),
        ),
        Section::from_verdicts(
            "rotation_symmetry",
            std::iter::once((
                format!("{} points", traj.len()),
                rotation.verdict.clone(),
                rotation.detail.clone(),
            )),
        ),
        Section::from_verdicts(
            "radius_cap",
            std::iter::once((
                "final radii".to_string(),
                to_verdict(cap_ok),
                format!(
                    "r = ({}, {}), squared caps ({}, {})",
                    final_radii[0], final_radii[1], bound_sq[0], bound_sq[1]
                ),
            )),
        ),
        Section::from_verdicts(
            "distance_floor",
            std::iter::once((
                "all iterates".to_string(),
                to_verdict(floor_ok),
                format!(
                    "min dist {} vs floor {}",
                    summary.min_dist_overall, summary.dist_floor
                ),
            )),
        )
        .with_detail(json!({
            "window": summary.window,
            "min_dist_window": summary.min_dist_window,
            "max_dist_window": summary.max_dist_window,
            "min_dist_overall": summary.min_dist_overall,
            "final_radii": final_radii,
            "dist_floor": summary.dist_floor,
            "radius_cap_sq": bound_sq,
        })),
    ];

    let mut report = Report::new(
        "sgd",
        json!({
            "delta": params.delta,
            "m": params.m,
            "c": params.c,
            "steps": params.steps,
            "start": params.start,
            "csv_stride": params.csv_stride,
            "window": params.window,
            "with_values": params.with_values,
            "depth": params.depth,
        }),
        sections,
    );
    for (kind, path) in artifacts {
        report.add_artifact(kind, &path);
    }
    report.emit(out)
}
