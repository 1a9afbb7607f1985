//! The exponentially damped family:
//! `φ(x, y) = δ y ρ(x, y) + M ∫_0^y (χ_A - χ_{A^c})` and its doubled sum.
//!
//! Its subdifferential is
//! `∂φ(x, y) = {δ y e^{-(x²+y²)}} × (c(x, y) + [-M, M])` with
//! `c(x, y) = δ (1 - 2y²) e^{-y²} ∫_0^x e^{-τ²}`, so the critical set is
//! exactly the axis `{y = 0}`. The smooth selection
//! `g(x, y) = δ e^{-(x²+y²)} (y, -x)` stays inside the subdifferential
//! with a uniform margin of at least `M - δ(√π/2 + 1/√(2e))`, and its
//! integral curves are the concentric circles — which is what defeats the
//! discrete subgradient method.

use std::f64::consts::PI;

use crate::error::{Error, Result};
use crate::measure_sets::{rat_from_f64, MeasureBounds, SplittingSet};

use super::geometry::{Point2, Point4, SubdiffCoord, SubdiffRect};
use super::quad::{eval_rho, gauss_integral, GAUSS_TOL};

#[derive(Debug, Clone)]
pub struct DampedFn {
    set: SplittingSet,
    delta: f64,
    m_lip: f64,
}

impl DampedFn {
    /// Requires `M >= (δ/2)(√π + 1)`, which is what makes the smooth
    /// selection a genuine subgradient selection everywhere.
    pub fn new(set: SplittingSet, delta: f64, m_lip: f64) -> Result<Self> {
        if !(delta > 0.0 && delta.is_finite()) {
            return Err(Error::ParameterOutOfRange {
                name: "delta",
                detail: format!("damping coefficient must be positive and finite, got {delta}"),
            });
        }
        let floor = delta / 2.0 * (PI.sqrt() + 1.0);
        if !(m_lip.is_finite() && m_lip >= floor) {
            return Err(Error::ParameterOutOfRange {
                name: "m_lip",
                detail: format!(
                    "saturation level must be at least (δ/2)(√π + 1) = {floor}, got {m_lip}"
                ),
            });
        }
        Ok(Self { set, delta, m_lip })
    }

    /// The canonical instance: `δ = 1`, `M = (√π + 1)/2` (the smallest
    /// admissible saturation level).
    pub fn canonical(set: SplittingSet) -> Self {
        let m = (PI.sqrt() + 1.0) / 2.0;
        Self::new(set, 1.0, m).expect("canonical parameters are admissible")
    }

    pub fn set(&self) -> &SplittingSet {
        &self.set
    }

    pub fn delta(&self) -> f64 {
        self.delta
    }

    pub fn m_lip(&self) -> f64 {
        self.m_lip
    }

    pub fn eval(&self, p: Point2, depth: u32) -> Result<MeasureBounds> {
        let smooth = self.delta * p.y * eval_rho(p);
        let primitive = self
            .set
            .indicator_integral(&rat_from_f64(p.y)?, depth)?;
        Ok(primitive.affine(&rat_from_f64(smooth)?, &rat_from_f64(self.m_lip)?))
    }

    /// Center of the band coordinate of the subdifferential.
    fn band_center(&self, p: Point2) -> f64 {
        self.delta
            * (1.0 - 2.0 * p.y * p.y)
            * (-p.y * p.y).exp()
            * gauss_integral(p.x, GAUSS_TOL)
    }

    /// `∂φ(x, y) = {δ y e^{-(x²+y²)}} × [c - M, c + M]`.
    pub fn subdiff(&self, p: Point2) -> SubdiffRect {
        let pinned = self.delta * p.y * (-(p.x * p.x + p.y * p.y)).exp();
        let c = self.band_center(p);
        SubdiffRect::new(vec![
            SubdiffCoord::Single(pinned),
            SubdiffCoord::Range {
                lo: c - self.m_lip,
                hi: c + self.m_lip,
            },
        ])
    }

    /// The smooth selection `g(x, y) = δ e^{-(x²+y²)} (y, -x)`.
    pub fn selection(&self, p: Point2) -> Point2 {
        let scale = self.delta * (-(p.x * p.x + p.y * p.y)).exp();
        Point2::new(scale * p.y, -(scale * p.x))
    }

    /// Slack of the selection inside the band coordinate:
    /// `M - |g_2(x, y) - c(x, y)|`. Nonnegative everywhere, with the
    /// uniform floor [`DampedFn::margin_floor`]; the pinned coordinate
    /// matches by construction.
    pub fn membership_margin(&self, p: Point2) -> f64 {
        let g2 = self.selection(p).y;
        self.m_lip - (g2 - self.band_center(p)).abs()
    }

    /// Closed-form lower bound for the margin over the whole plane:
    /// `M - δ(√π/2 + 1/√(2e))`, using `sup e^{-y²}|1-2y²| = 1` and
    /// `sup |x| e^{-x²} = 1/√(2e)`.
    pub fn margin_floor(&self) -> f64 {
        self.m_lip - self.delta * (PI.sqrt() / 2.0 + 1.0 / (2.0 * std::f64::consts::E).sqrt())
    }

    /// `sup ||g|| = δ sup r e^{-r²} = δ/√(2e)`.
    pub fn g_norm_cap(&self) -> f64 {
        self.delta / (2.0 * std::f64::consts::E).sqrt()
    }
}

/// `f(x, y, z, w) = φ(x, y) + φ(z, w)` on all of 4-space, whose critical
/// set is `ℝ × {0} × ℝ × {0}`.
#[derive(Debug, Clone)]
pub struct DampedPair {
    part: DampedFn,
}

impl DampedPair {
    pub fn new(part: DampedFn) -> Self {
        Self { part }
    }

    pub fn part(&self) -> &DampedFn {
        &self.part
    }

    pub fn delta(&self) -> f64 {
        self.part.delta
    }

    pub fn g_norm_cap(&self) -> f64 {
        self.part.g_norm_cap()
    }

    pub fn eval(&self, p: Point4, depth: u32) -> Result<MeasureBounds> {
        let (first, second) = p.split();
        Ok(self.part.eval(first, depth)?.add(&self.part.eval(second, depth)?))
    }

    pub fn subdiff(&self, p: Point4) -> SubdiffRect {
        let (first, second) = p.split();
        self.part.subdiff(first).product(self.part.subdiff(second))
    }

    /// The plane-wise selection `G(x, y, z, w) = (g(x, y), g(z, w))`.
    pub fn selection(&self, p: Point4) -> Point4 {
        let (first, second) = p.split();
        Point4::from_planes(self.part.selection(first), self.part.selection(second))
    }

    /// Euclidean distance to `ℝ × {0} × ℝ × {0}`.
    pub fn dist_to_crit(&self, p: Point4) -> f64 {
        p.y.hypot(p.w)
    }
}
