//! The discrete subgradient iteration and its trajectory certificates.

use crate::error::{Error, Result};
use crate::function_zoo::{DampedPair, Point4};
use crate::measure_sets::Verdict;

use super::schedule::StepSchedule;
use super::trajectory::Trajectory;

/// Runs `X_{n+1} = X_n - t_n G(X_n)` with the smooth selection of the
/// damped pair, recording points, selections, plane radii and critical
/// distances. The iterates are provably bounded by
/// `r² <= r_1² + (δ²/2e) Σ t_n²` per plane; exceeding that cap (plus a
/// small float allowance) is reported as an internal error rather than
/// silently continuing.
pub fn sgd_run(pair: &DampedPair, start: Point4, schedule: &StepSchedule) -> Result<Trajectory> {
    if !start.is_finite() {
        return Err(Error::ParameterOutOfRange {
            name: "start",
            detail: format!("initial point must be finite, got {start}"),
        });
    }
    let n = schedule.len();
    let mut points = Vec::with_capacity(n + 1);
    let mut selections = Vec::with_capacity(n + 1);
    let mut radii = Vec::with_capacity(n + 1);
    let mut dists = Vec::with_capacity(n + 1);
    let mut steps = Vec::with_capacity(n);

    let cap_sq = pair.g_norm_cap() * pair.g_norm_cap();
    let budget = cap_sq * schedule.sum_squares_cap();
    let (p1, p2) = start.split();
    let bounds_sq = [
        p1.norm() * p1.norm() + budget + 1e-9,
        p2.norm() * p2.norm() + budget + 1e-9,
    ];

    let mut x = start;
    record(pair, x, &mut points, &mut selections, &mut radii, &mut dists);
    for k in 0..n {
        let t = schedule.step(k);
        let g = selections[k];
        x = Point4::new(x.x - t * g.x, x.y - t * g.y, x.z - t * g.z, x.w - t * g.w);
        record(pair, x, &mut points, &mut selections, &mut radii, &mut dists);
        steps.push(t);
        let r = radii[k + 1];
        for (plane, bound_sq) in r.iter().zip(bounds_sq) {
            if plane * plane > bound_sq {
                return Err(Error::RunawayRadius {
                    step: k + 1,
                    radius: *plane,
                    bound: bound_sq.sqrt(),
                });
            }
        }
    }
    Ok(Trajectory {
        points,
        selections,
        radii,
        dists,
        steps,
        schedule: schedule.clone(),
    })
}

fn record(
    pair: &DampedPair,
    x: Point4,
    points: &mut Vec<Point4>,
    selections: &mut Vec<Point4>,
    radii: &mut Vec<[f64; 2]>,
    dists: &mut Vec<f64>,
) {
    let (p1, p2) = x.split();
    points.push(x);
    selections.push(pair.selection(x));
    radii.push([p1.norm(), p2.norm()]);
    dists.push(pair.dist_to_crit(x));
}

/// Outcome of a trajectory certificate.
#[derive(Debug, Clone)]
pub struct CheckReport {
    pub verdict: Verdict,
    /// 0-based index of the first offending step, when violated.
    pub first_violation: Option<usize>,
    pub detail: String,
}

impl CheckReport {
    fn verified(detail: String) -> Self {
        Self {
            verdict: Verdict::Verified,
            first_violation: None,
            detail,
        }
    }

    fn violated(index: usize, detail: String) -> Self {
        Self {
            verdict: Verdict::Violated,
            first_violation: Some(index),
            detail,
        }
    }
}

/// Verifies, step by step and per plane, the exact-orthogonality radius
/// recursion `r_{n+1}² = r_n² + t_n² ||g_n||²` within `tol`, the strict
/// growth of the radii, and the selection-norm cap
/// `||g_n|| <= g_norm_cap + tol`. Radii are recomputed from the stored
/// points, so a tampered record fails here.
pub fn radius_recursion_check(traj: &Trajectory, g_norm_cap: f64, tol: f64) -> CheckReport {
    if traj.len() < 2 {
        return CheckReport::verified("trajectory too short to violate anything".into());
    }
    let mut max_residual: f64 = 0.0;
    for k in 0..traj.steps.len() {
        let (a1, a2) = traj.points[k].split();
        let (b1, b2) = traj.points[k + 1].split();
        let (g1, g2) = traj.selections[k].split();
        let t = traj.steps[k];
        for (plane, (before, after, g)) in
            [(1usize, (a1, b1, g1)), (2usize, (a2, b2, g2))]
        {
            let gn = g.norm();
            if gn > g_norm_cap + tol {
                return CheckReport::violated(
                    k,
                    format!("step {k}: plane {plane} selection norm {gn} exceeds cap {g_norm_cap}"),
                );
            }
            let r0 = before.norm();
            let r1 = after.norm();
            let residual = (r1 * r1 - r0 * r0 - t * t * gn * gn).abs();
            max_residual = max_residual.max(residual);
            if residual > tol {
                return CheckReport::violated(
                    k,
                    format!("step {k}: plane {plane} radius recursion residual {residual}"),
                );
            }
            if r1 <= r0 {
                return CheckReport::violated(
                    k,
                    format!("step {k}: plane {plane} radius failed to increase ({r0} -> {r1})"),
                );
            }
        }
    }
    CheckReport::verified(format!(
        "radius recursion holds over {} steps (max residual {max_residual:.3e})",
        traj.steps.len()
    ))
}

/// Verifies the quarter-turn symmetry `(z_n, w_n) = (-y_n, x_n)` that the
/// doubled initial condition propagates exactly.
pub fn rotation_symmetry_check(traj: &Trajectory, tol: f64) -> CheckReport {
    let mut max_defect: f64 = 0.0;
    for (k, p) in traj.points.iter().enumerate() {
        let defect = (p.z + p.y).abs().max((p.w - p.x).abs());
        max_defect = max_defect.max(defect);
        if defect > tol {
            return CheckReport::violated(
                k,
                format!("point {k}: rotation symmetry defect {defect}"),
            );
        }
    }
    CheckReport::verified(format!(
        "rotation symmetry holds over {} points (max defect {max_defect:.3e})",
        traj.len()
    ))
}

/// Trailing-window summary of how far the iterates stay from the critical
/// set, plus the limiting-radius estimate.
#[derive(Debug, Clone)]
pub struct AccumulationSummary {
    pub window: usize,
    pub min_dist_window: f64,
    pub max_dist_window: f64,
    pub min_dist_overall: f64,
    pub final_radii: [f64; 2],
    /// The certified floor: distances never drop below the initial radius.
    pub dist_floor: f64,
}

pub fn accumulation_report(traj: &Trajectory, window: usize) -> Result<AccumulationSummary> {
    if window == 0 || window > traj.len() {
        return Err(Error::ParameterOutOfRange {
            name: "window",
            detail: format!("window must lie in 1..={}, got {window}", traj.len()),
        });
    }
    let tail = &traj.dists[traj.len() - window..];
    let min_dist_window = tail.iter().copied().fold(f64::INFINITY, f64::min);
    let max_dist_window = tail.iter().copied().fold(f64::NEG_INFINITY, f64::max);
    let min_dist_overall = traj.dists.iter().copied().fold(f64::INFINITY, f64::min);
    Ok(AccumulationSummary {
        window,
        min_dist_window,
        max_dist_window,
        min_dist_overall,
        final_radii: *traj.radii.last().expect("trajectory is nonempty"),
        dist_floor: traj.radii[0][0].min(traj.radii[0][1]),
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::function_zoo::DampedFn;
    use crate::measure_sets::{rat, SplittingSet};

    fn pair() -> DampedPair {
        let set = SplittingSet::build(rat(3, 5), rat(3, 4), rat(9, 10), 0, 8).unwrap();
        DampedPair::new(DampedFn::canonical(set))
    }

    fn default_start() -> Point4 {
        Point4::new(1.0, 0.0, 0.0, 1.0)
    }

    #[test]
    fn first_step_matches_hand_arithmetic() {
        // t_1 = 1 from (1,0): g = e^{-1}(0,-1), so the new plane point is
        // (1, e^{-1}) and r² = 1 + e^{-2}.
        let pair = pair();
        let schedule = StepSchedule::explicit(vec![1.0]).unwrap();
        let traj = sgd_run(&pair, default_start(), &schedule).unwrap();
        let r = traj.radii[1][0];
        let expected_sq = 1.0 + (-2.0f64).exp();
        assert!((r * r - expected_sq).abs() < 1e-15, "r² = {}", r * r);
        assert!((traj.points[1].x - 1.0).abs() < 1e-16);
        assert!((traj.points[1].y - (-1.0f64).exp()).abs() < 1e-16);
    }

    #[test]
    fn short_run_passes_all_checks() {
        let pair = pair();
        let schedule = StepSchedule::harmonic(1.0, 5_000).unwrap();
        let traj = sgd_run(&pair, default_start(), &schedule).unwrap();
        assert!(radius_recursion_check(&traj, pair.g_norm_cap(), 1e-9)
            .verdict
            .is_verified());
        assert!(rotation_symmetry_check(&traj, 1e-9).verdict.is_verified());
        let summary = accumulation_report(&traj, 1000).unwrap();
        assert!(summary.min_dist_overall >= 1.0 - 1e-9);
        assert!(summary.final_radii[0] > 1.0);
        assert!(summary.final_radii[0] <= 1.1413013242075893);
    }

    #[test]
    fn rotation_symmetry_is_exact_for_the_doubled_start() {
        let pair = pair();
        let schedule = StepSchedule::harmonic(1.0, 2_000).unwrap();
        let traj = sgd_run(&pair, default_start(), &schedule).unwrap();
        let report = rotation_symmetry_check(&traj, 0.0);
        assert!(report.verdict.is_verified(), "{}", report.detail);
    }

    #[test]
    fn corrupted_point_is_caught_at_its_index() {
        let pair = pair();
        let schedule = StepSchedule::harmonic(1.0, 100).unwrap();
        let mut traj = sgd_run(&pair, default_start(), &schedule).unwrap();
        traj.points[40].x += 1e-3;
        let report = radius_recursion_check(&traj, pair.g_norm_cap(), 1e-9);
        assert!(report.verdict.is_violated());
        assert_eq!(report.first_violation, Some(39));
    }

    #[test]
    fn asymmetric_start_fails_rotation_check() {
        let pair = pair();
        let schedule = StepSchedule::harmonic(1.0, 10).unwrap();
        let traj = sgd_run(&pair, Point4::new(1.0, 0.0, 0.5, 0.9), &schedule).unwrap();
        let report = rotation_symmetry_check(&traj, 1e-9);
        assert!(report.verdict.is_violated());
        assert_eq!(report.first_violation, Some(0));
    }

    #[test]
    fn accumulation_window_validation() {
        let pair = pair();
        let schedule = StepSchedule::harmonic(1.0, 10).unwrap();
        let traj = sgd_run(&pair, default_start(), &schedule).unwrap();
        assert!(accumulation_report(&traj, 0).is_err());
        assert!(accumulation_report(&traj, 12).is_err());
        assert!(accumulation_report(&traj, 11).is_ok());
    }
}
