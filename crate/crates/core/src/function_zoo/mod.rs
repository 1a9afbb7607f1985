//! The counterexample Lipschitz functions and their closed-form Clarke
//! subdifferentials.
//!
//! All three families share the same skeleton: a smooth part evaluated in
//! floating point plus a saturated primitive `∫_0^y (χ_A - χ_{A^c})`
//! evaluated as an exact measure bracket over a [`SplittingSet`]. Their
//! subdifferentials are hard-coded point × interval products — no
//! subdifferential calculus is performed — and each family exposes the
//! specific smooth selection its dynamics use.
//!
//! [`SplittingSet`]: crate::measure_sets::SplittingSet

mod damped;
mod geometry;
mod increasing;
mod quad;
mod saturated;

pub use damped::{DampedFn, DampedPair};
pub use geometry::{Point2, Point4, SubdiffCoord, SubdiffRect};
pub use increasing::IncreasingOrbitFn;
pub use quad::{eval_rho, gauss_integral, grad_rho, GAUSS_TOL};
pub use saturated::{SaturatedPair, SaturatedPeriodicFn};
