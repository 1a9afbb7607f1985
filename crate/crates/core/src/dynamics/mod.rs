//! Continuous-time orbits, the discrete subgradient iteration, and the
//! trajectory invariants that certify both.
//!
//! Continuous orbits are analytic (closed forms, no ODE solver is a source
//! of truth); the membership checks verify that the negated velocity lies
//! in the hard-coded subdifferential at every sampled time. The discrete
//! side iterates `X_{n+1} = X_n - t_n G(X_n)` with the smooth selection,
//! then re-derives every recorded invariant — radius recursion, strict
//! radius growth, rotation symmetry, distance floors — from the stored
//! points, so a corrupted record is caught by the checks.

mod orbits;
mod schedule;
mod sgd;
mod trajectory;

pub use orbits::{
    certify_noncritical, orbit_increasing, orbit_periodic_2d, orbit_periodic_4d,
    residual_membership_2d, verify_increase, IncreaseReport, IncreaseRow, NoncriticalReport,
    PeriodicSample,
};
pub use schedule::StepSchedule;
pub use sgd::{
    accumulation_report, radius_recursion_check, rotation_symmetry_check, sgd_run,
    AccumulationSummary, CheckReport,
};
pub use trajectory::Trajectory;
