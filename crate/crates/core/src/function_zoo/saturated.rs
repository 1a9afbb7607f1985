//! The saturated periodic family: `Φ(x, y) = xy + M ∫_0^y (χ_A - χ_{A^c})`
//! and its dimension-doubled sum.
//!
//! `∂Φ(x, y) = {y} × [x - M, x + M]` everywhere, so inside the box
//! `b·B_∞` (with `b < M/2`) the critical points are exactly the segment
//! `[-b, b] × {0}`, while every circle of radius `r < b` is a subgradient
//! orbit through the selection `(-y, x)`. Doubling the dimension with a
//! quarter-turn phase shift keeps the orbit while pushing it off the
//! critical set entirely.

use crate::error::{Error, Result};
use crate::measure_sets::{rat_from_f64, MeasureBounds, SplittingSet};

use super::geometry::{Point2, Point4, SubdiffCoord, SubdiffRect};

#[derive(Debug, Clone)]
pub struct SaturatedPeriodicFn {
    set: SplittingSet,
    m_lip: f64,
    b: f64,
}

impl SaturatedPeriodicFn {
    pub fn new(set: SplittingSet, m_lip: f64, b: f64) -> Result<Self> {
        if !(m_lip > 0.0 && m_lip.is_finite()) {
            return Err(Error::ParameterOutOfRange {
                name: "m_lip",
                detail: format!("saturation level must be positive and finite, got {m_lip}"),
            });
        }
        if !(b > 0.0 && b < m_lip / 2.0) {
            return Err(Error::ParameterOutOfRange {
                name: "b",
                detail: format!("box radius must satisfy 0 < b < M/2, got b = {b}, M = {m_lip}"),
            });
        }
        Ok(Self { set, m_lip, b })
    }

    pub fn set(&self) -> &SplittingSet {
        &self.set
    }

    pub fn m_lip(&self) -> f64 {
        self.m_lip
    }

    pub fn b(&self) -> f64 {
        self.b
    }

    /// Certified value bracket: `xy` enters as an exact rational product
    /// of the (dyadic-rational) coordinates.
    pub fn eval(&self, p: Point2, depth: u32) -> Result<MeasureBounds> {
        let xy = rat_from_f64(p.x)? * rat_from_f64(p.y)?;
        let primitive = self
            .set
            .indicator_integral(&rat_from_f64(p.y)?, depth)?;
        Ok(primitive.affine(&xy, &rat_from_f64(self.m_lip)?))
    }

    /// `∂Φ(x, y) = {y} × [x - M, x + M]`.
    pub fn subdiff(&self, p: Point2) -> SubdiffRect {
        SubdiffRect::new(vec![
            SubdiffCoord::Single(p.y),
            SubdiffCoord::Range {
                lo: p.x - self.m_lip,
                hi: p.x + self.m_lip,
            },
        ])
    }
}

/// `f(x1, x2, x3, x4) = Φ(x1, x2) + Φ(x3, x4)` on the open box
/// `b·B_∞ × b·B_∞`, whose critical set is `{(x1, 0, x3, 0)}`.
#[derive(Debug, Clone)]
pub struct SaturatedPair {
    part: SaturatedPeriodicFn,
}

impl SaturatedPair {
    pub fn new(part: SaturatedPeriodicFn) -> Self {
        Self { part }
    }

    pub fn part(&self) -> &SaturatedPeriodicFn {
        &self.part
    }

    pub fn b(&self) -> f64 {
        self.part.b
    }

    pub fn in_domain(&self, p: Point4) -> bool {
        p.is_finite() && p.coords().iter().all(|c| c.abs() < self.part.b)
    }

    pub fn eval(&self, p: Point4, depth: u32) -> Result<MeasureBounds> {
        let (first, second) = p.split();
        Ok(self.part.eval(first, depth)?.add(&self.part.eval(second, depth)?))
    }

    pub fn subdiff(&self, p: Point4) -> SubdiffRect {
        let (first, second) = p.split();
        self.part.subdiff(first).product(self.part.subdiff(second))
    }

    /// Euclidean distance to the critical slice `{x2 = x4 = 0}`, defined
    /// on the open box only.
    pub fn dist_to_crit(&self, p: Point4) -> Result<f64> {
        if !self.in_domain(p) {
            return Err(Error::OutOfDomain(format!(
                "{p} lies outside the open box of radius {}",
                self.part.b
            )));
        }
        Ok(p.y.hypot(p.w))
    }
}
