//! Acceptance suite: every criterion runs standalone, prints one PASS line
//! with its runtime (visible with `--nocapture`), and enforces both the
//! stated tolerances and the stated runtime budget.

use std::time::{Duration, Instant};

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use subdyn_core::dynamics::{
    certify_noncritical, radius_recursion_check, rotation_symmetry_check, sgd_run,
    verify_increase, StepSchedule,
};
use subdyn_core::function_zoo::{
    grad_rho, DampedFn, DampedPair, IncreasingOrbitFn, Point2, Point4, SaturatedPair,
    SaturatedPeriodicFn,
};
use subdyn_core::measure_sets::{
    dyadic_enumeration, pow2, rat, FatCantorSet, Interval, Rational, SplittingSet,
};

fn default_set(placements: u64, depth: u32) -> SplittingSet {
    SplittingSet::build(rat(3, 5), rat(3, 4), rat(9, 10), placements, depth).unwrap()
}

fn finish(criterion: &str, started: Instant, budget: Duration) {
    let elapsed = started.elapsed();
    println!("ACCEPTANCE {criterion}: PASS in {elapsed:.2?} (budget {budget:?})");
    assert!(
        elapsed <= budget,
        "{criterion}: runtime {elapsed:?} exceeded budget {budget:?}"
    );
}

#[test]
fn criterion_1_fat_cantor_measure_bracket() {
    let started = Instant::now();
    let set = FatCantorSet::new(Interval::unit(), rat(3, 4), 20).unwrap();
    let bracket = set.total_measure(20);
    assert_eq!(bracket.lower(), &rat(3, 4), "lower bound must be exact");
    assert_eq!(
        bracket.upper(),
        &(rat(3, 4) + pow2(-23)),
        "upper bound must sit exactly 2^-23 above"
    );
    assert_eq!(bracket.width(), rat(1, 8) * pow2(-20));
    finish(
        "1 (fat Cantor measure bracket at depth 20)",
        started,
        Duration::from_secs(1),
    );
}

#[test]
fn criterion_2_controlled_split_floor_on_the_dyadic_grid() {
    let started = Instant::now();
    let set = default_set(8, 20);
    let grid: Vec<Rational> = (1..=10_240i64).map(|k| rat(k, 1024)).collect();
    let verdicts = set.check_controlled_split(&grid, 20).unwrap();
    let violated = verdicts.iter().filter(|(_, v)| v.is_violated()).count();
    let undecided = verdicts.iter().filter(|(_, v)| v.is_undecided()).count();
    assert_eq!(violated, 0, "no grid point may be violated");
    assert_eq!(undecided, 0, "no grid point may be undecided at depth 20");
    assert_eq!(verdicts.len(), 10_240);
    finish(
        "2 (controlled split verified on 10240 grid points)",
        started,
        Duration::from_secs(10),
    );
}

#[test]
fn criterion_3_splitting_property_on_first_200_intervals() {
    let started = Instant::now();
    // Materialize the witness budget once, then certify each interval.
    let set = default_set(200, 20);
    for n in 1..=200u64 {
        let interval = dyadic_enumeration(n).unwrap();
        let check = set.check_splits_interval(&interval, 20, 0).unwrap();
        assert!(
            check.verdict.is_verified(),
            "interval {n} = {interval}: {:?}",
            check.verdict
        );
        assert!(
            check.set_mass_lower > rat(0, 1),
            "interval {n}: set-mass margin must be strictly positive"
        );
        assert!(
            check.complement_mass_lower > rat(0, 1),
            "interval {n}: complement-mass margin must be strictly positive"
        );
    }
    finish(
        "3 (splitting property on 200 enumerated intervals)",
        started,
        Duration::from_secs(30),
    );
}

#[test]
fn criterion_4_linear_increase_along_the_orbit() {
    let started = Instant::now();
    let f = IncreasingOrbitFn::new(default_set(8, 20), 1.0).unwrap();
    assert!((f.mu() - 10f64.sqrt()).abs() < 1e-15);
    let grid: Vec<Rational> = (1..=640i64).map(|k| rat(k, 64)).collect();
    let report = verify_increase(&f, &grid, 20).unwrap();
    assert!(report.verdict.is_verified());
    for row in &report.rows {
        assert!(
            row.value.lower() >= &row.floor,
            "t = {}: certified increase lower bound {} fell below t",
            subdyn_core::measure_sets::format_rational(&row.t),
            subdyn_core::measure_sets::format_rational(row.value.lower()),
        );
    }
    finish(
        "4 (linear increase certified on 640 grid points)",
        started,
        Duration::from_secs(10),
    );
}

#[test]
fn criterion_5_periodic_orbit_membership_and_figure() {
    let started = Instant::now();
    let pair = SaturatedPair::new(
        SaturatedPeriodicFn::new(default_set(0, 12), 2.5, 1.0).unwrap(),
    );
    let times: Vec<f64> = (0..10_000)
        .map(|k| k as f64 * std::f64::consts::TAU / 10_000.0)
        .collect();
    let report = certify_noncritical(&pair, &times).unwrap();
    assert!(report.verdict.is_verified());
    assert!(report.max_residual <= 1e-12, "residual {}", report.max_residual);
    assert!((report.min_dist - 0.5).abs() <= 1e-12);
    assert!((report.max_dist - 0.5).abs() <= 1e-12);

    // The emitted figure must carry both circular orbits of radius 0.5.
    let dir = tempfile::tempdir().unwrap();
    let out = std::process::Command::new(env!("CARGO_BIN_EXE_subdyn"))
        .args(["periodic", "--samples", "10000", "--out"])
        .arg(dir.path())
        .output()
        .unwrap();
    assert_eq!(out.status.code(), Some(0));
    let svg = std::fs::read_to_string(dir.path().join("periodic.svg")).unwrap();
    assert_eq!(svg.matches(r#"r="0.5""#).count(), 2, "two orbit circles of radius 0.5");
    finish(
        "5 (periodic orbit noncritical at 10^4 times, SVG emitted)",
        started,
        Duration::from_secs(5),
    );
}

#[test]
fn criterion_6_selection_membership_margin() {
    let started = Instant::now();
    let f = DampedFn::canonical(default_set(0, 8));
    let floor = f.margin_floor();
    assert!(
        (floor - 0.071_118_057_519_646_6).abs() < 1e-12,
        "analytic floor {floor}"
    );
    assert!(floor > 0.071);
    let mut rng = ChaCha8Rng::seed_from_u64(0x5EED_2026);
    for i in 0..100_000 {
        let x = rng.gen_range(-10.0..10.0);
        let y = rng.gen_range(-10.0..10.0);
        let margin = f.membership_margin(Point2::new(x, y));
        assert!(
            margin >= 0.071,
            "point {i} at ({x}, {y}): margin {margin} below 0.071"
        );
    }
    finish(
        "6 (membership margin >= 0.071 at 10^5 random points)",
        started,
        Duration::from_secs(5),
    );
}

#[test]
fn criterion_7_discrete_non_detection_over_a_million_steps() {
    let started = Instant::now();
    let pair = DampedPair::new(DampedFn::canonical(default_set(0, 8)));
    let schedule = StepSchedule::harmonic(1.0, 1_000_000).unwrap();
    let traj = sgd_run(&pair, Point4::new(1.0, 0.0, 0.0, 1.0), &schedule).unwrap();

    // (a) + (b): strict radius growth and the per-step Pythagoras identity.
    let radius = radius_recursion_check(&traj, pair.g_norm_cap(), 1e-9);
    assert!(radius.verdict.is_verified(), "{}", radius.detail);

    // (c): the closed-form cap 1 + pi^2/(12 e).
    let cap_sq = 1.0 + std::f64::consts::PI.powi(2) / (12.0 * std::f64::consts::E) + 1e-9;
    for (n, r) in traj.radii.iter().enumerate() {
        assert!(
            r[0] * r[0] <= cap_sq && r[1] * r[1] <= cap_sq,
            "step {n}: radius {} exceeds the cap",
            r[0]
        );
    }

    // (d): the iterates never approach the critical set.
    for (n, (dist, r)) in traj.dists.iter().zip(&traj.radii).enumerate() {
        assert!(*dist >= 1.0 - 1e-9, "step {n}: dist {dist}");
        assert!(
            (dist - r[0]).abs() <= 1e-9,
            "step {n}: dist {dist} drifted from radius {}",
            r[0]
        );
    }

    // (e): rotation symmetry throughout.
    let rotation = rotation_symmetry_check(&traj, 1e-9);
    assert!(rotation.verdict.is_verified(), "{}", rotation.detail);

    // Limit radius lands in the predicted window.
    let final_r = traj.radii.last().unwrap()[0];
    assert!(final_r > 1.0 && final_r <= 1.141_301_324_207_589_3 + 1e-9);
    finish(
        "7 (10^6-step subgradient run: all invariants)",
        started,
        Duration::from_secs(30),
    );
}

#[test]
fn criterion_8_gradient_check_against_central_differences() {
    let started = Instant::now();
    let mut rng = ChaCha8Rng::seed_from_u64(0x0812);
    let h = 1e-5;
    for _ in 0..20 {
        let x = rng.gen_range(-3.0..3.0);
        let y = rng.gen_range(-3.0..3.0);
        let g = grad_rho(Point2::new(x, y));
        let rho = subdyn_core::function_zoo::eval_rho;
        let dx = (rho(Point2::new(x + h, y)) - rho(Point2::new(x - h, y))) / (2.0 * h);
        let dy = (rho(Point2::new(x, y + h)) - rho(Point2::new(x, y - h))) / (2.0 * h);
        assert!((g.x - dx).abs() < 1e-6, "({x}, {y}): d/dx {} vs {dx}", g.x);
        assert!((g.y - dy).abs() < 1e-6, "({x}, {y}): d/dy {} vs {dy}", g.y);
    }
    finish(
        "8 (gradient matches central differences at 20 points)",
        started,
        Duration::from_secs(1),
    );
}

#[test]
fn criterion_9_negative_controls() {
    let started = Instant::now();

    // Corrupting one trajectory point flips the radius recursion check.
    let pair = DampedPair::new(DampedFn::canonical(default_set(0, 6)));
    let schedule = StepSchedule::harmonic(1.0, 500).unwrap();
    let mut traj = sgd_run(&pair, Point4::new(1.0, 0.0, 0.0, 1.0), &schedule).unwrap();
    let clean = radius_recursion_check(&traj, pair.g_norm_cap(), 1e-9);
    assert!(clean.verdict.is_verified());
    traj.points[123].y += 1e-3;
    let corrupted = radius_recursion_check(&traj, pair.g_norm_cap(), 1e-9);
    assert!(corrupted.verdict.is_violated());
    assert_eq!(corrupted.first_violation, Some(122));

    // Raising the floor above alpha*theta = 27/40 flips the controlled
    // split to Violated near t = 1.
    let set = default_set(0, 20);
    let grid: Vec<Rational> = (58..=64i64).map(|k| rat(k, 64)).collect();
    let verdicts = set
        .check_controlled_split_with(&rat(7, 10), &grid, 20)
        .unwrap();
    let violated_near_one = verdicts
        .iter()
        .filter(|(t, v)| v.is_violated() && *t >= rat(9, 10))
        .count();
    assert!(
        violated_near_one > 0,
        "expected a violation near t = 1, got {verdicts:?}"
    );
    finish("9 (negative controls flip to Violated)", started, Duration::from_secs(10));
}
