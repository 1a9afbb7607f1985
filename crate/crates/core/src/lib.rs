//! Certified constructions of interval-splitting sets and the
//! subgradient dynamics they generate.
//!
//! The crate is organized in three layers:
//!
//! * [`measure_sets`] — exact-rational fat Cantor sets, the controlled
//!   splitting set over `[0,1]` (extended `ℤ`-periodically), and certified
//!   measure brackets for every set query. Nothing in this layer ever
//!   rounds: endpoints, masses and verdict thresholds are `BigRational`s.
//! * [`function_zoo`] — the Lipschitz functions built from a splitting set,
//!   their closed-form Clarke subdifferentials as point × interval products,
//!   and the smooth subgradient selections used by the dynamics.
//! * [`dynamics`] — analytic continuous-time orbits with membership
//!   certification, the discrete subgradient iteration, and the trajectory
//!   invariant checks (radius recursion, rotation symmetry, accumulation
//!   floors).
//!
//! Set queries return [`measure_sets::MeasureBounds`], a certified
//! `[lower, upper]` bracket; decision procedures return a tri-state
//! [`measure_sets::Verdict`] so that insufficient refinement depth is
//! reported as `Undecided` rather than silently guessed.

pub mod dynamics;
pub mod error;
pub mod function_zoo;
pub mod measure_sets;

pub use error::{Error, Result};
