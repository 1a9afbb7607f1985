//! Exact set constructions and certified measure queries.
//!
//! Everything here works over arbitrary-precision rationals. A fat Cantor
//! set is represented lazily: only its base interval, removal fraction and
//! refinement depth are stored, and the dyadic tree of removed middle
//! intervals is walked on demand. Because all construction parameters are
//! rational, every removed endpoint is rational and every query at a finite
//! depth is exact; the only uncertainty is the unresolved tail of removals
//! below the refinement depth, which has the closed-form mass
//! `delta0 * 2^-depth`. Measure queries therefore return a certified
//! [`MeasureBounds`] bracket instead of a point value, and decision
//! procedures return a tri-state [`Verdict`].

mod bounds;
mod cantor;
mod enumeration;
mod interval;
mod rational;
mod splitting;

pub use bounds::{MeasureBounds, Verdict};
pub use cantor::FatCantorSet;
pub use enumeration::{dyadic_enumeration, level_count};
pub use interval::Interval;
pub use rational::{
    format_rational, half, one, parse_rational, pow2, rat, rat_from_f64, rat_int, rat_to_f64, zero,
    Rational,
};
pub use splitting::{find_gap, Placement, SplitCheck, SplittingSet};
