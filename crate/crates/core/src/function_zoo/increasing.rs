//! The planar function whose subgradient orbit increases linearly.
//!
//! `f(x, y) = -x + mu * ∫_0^y (χ_A - χ_{A^c})` over a controlled splitting
//! set `A` with cumulative floor `lambda`. With
//! `mu = sqrt((rate + 1) / (2 lambda - 1))` the straight orbit
//! `t ↦ (t, mu t)` is a subgradient orbit along which the value grows at
//! least like `rate * t`, even though the orbit starts at a noncritical
//! point (the subdifferential is `{-1} × [-mu, mu]` everywhere, so there
//! are no critical points at all).

use crate::error::{Error, Result};
use crate::measure_sets::{rat_from_f64, MeasureBounds, Rational, SplittingSet};

use super::geometry::{Point2, SubdiffCoord, SubdiffRect};

#[derive(Debug, Clone)]
pub struct IncreasingOrbitFn {
    set: SplittingSet,
    rate: f64,
    mu: f64,
}

impl IncreasingOrbitFn {
    /// `rate` is the guaranteed linear growth coefficient along the orbit.
    pub fn new(set: SplittingSet, rate: f64) -> Result<Self> {
        if !(rate > 0.0 && rate.is_finite()) {
            return Err(Error::ParameterOutOfRange {
                name: "rate",
                detail: format!("growth rate must be positive and finite, got {rate}"),
            });
        }
        let lambda = crate::measure_sets::rat_to_f64(set.lambda());
        let mu = ((rate + 1.0) / (2.0 * lambda - 1.0)).sqrt();
        Ok(Self { set, rate, mu })
    }

    pub fn set(&self) -> &SplittingSet {
        &self.set
    }

    pub fn rate(&self) -> f64 {
        self.rate
    }

    pub fn mu(&self) -> f64 {
        self.mu
    }

    /// Certified value bracket at a floating point: the smooth part `-x`
    /// enters exactly (every `f64` is rational), the saturated primitive
    /// contributes its measure bracket scaled by `mu`.
    pub fn eval(&self, p: Point2, depth: u32) -> Result<MeasureBounds> {
        let y = rat_from_f64(p.y)?;
        self.eval_exact(&rat_from_f64(p.x)?, &y, depth)
    }

    /// Same bracket with exact rational inputs.
    pub fn eval_exact(&self, x: &Rational, y: &Rational, depth: u32) -> Result<MeasureBounds> {
        let primitive = self.set.indicator_integral(y, depth)?;
        Ok(primitive.affine(&-x.clone(), &rat_from_f64(self.mu)?))
    }

    /// `∂f = {-1} × [-mu, mu]` at every point.
    pub fn subdiff(&self, _p: Point2) -> SubdiffRect {
        SubdiffRect::new(vec![
            SubdiffCoord::Single(-1.0),
            SubdiffCoord::Range {
                lo: -self.mu,
                hi: self.mu,
            },
        ])
    }
}
