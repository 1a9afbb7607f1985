//! Step-size schedules for the discrete iteration: positive steps whose
//! sum diverges and whose squares sum converges.

use std::f64::consts::PI;

use crate::error::{Error, Result};

/// A step schedule `t_1, t_2, ...`. The harmonic family `t_n = c/n` is the
/// canonical member (divergent partial sums, square-summable); explicit
/// lists are accepted for experiments as long as every step is positive.
#[derive(Debug, Clone, PartialEq)]
pub enum StepSchedule {
    Harmonic { c: f64, n_steps: usize },
    Explicit { steps: Vec<f64> },
}

impl StepSchedule {
    pub fn harmonic(c: f64, n_steps: usize) -> Result<Self> {
        if !(c > 0.0 && c.is_finite()) {
            return Err(Error::InvalidSchedule(format!(
                "harmonic coefficient must be positive and finite, got {c}"
            )));
        }
        if n_steps == 0 {
            return Err(Error::InvalidSchedule("schedule needs at least one step".into()));
        }
        Ok(Self::Harmonic { c, n_steps })
    }

    pub fn explicit(steps: Vec<f64>) -> Result<Self> {
        if steps.is_empty() {
            return Err(Error::InvalidSchedule("schedule needs at least one step".into()));
        }
        if let Some(bad) = steps.iter().find(|t| !(**t > 0.0 && t.is_finite())) {
            return Err(Error::InvalidSchedule(format!(
                "steps must be positive and finite, got {bad}"
            )));
        }
        Ok(Self::Explicit { steps })
    }

    pub fn len(&self) -> usize {
        match self {
            Self::Harmonic { n_steps, .. } => *n_steps,
            Self::Explicit { steps } => steps.len(),
        }
    }

    pub fn is_empty(&self) -> bool {
        self.len() == 0
    }

    /// `t_{k+1}` for 0-based `k`.
    pub fn step(&self, k: usize) -> f64 {
        match self {
            Self::Harmonic { c, .. } => c / (k + 1) as f64,
            Self::Explicit { steps } => steps[k],
        }
    }

    /// Upper bound for `Σ t_n²` over the whole (even infinite) schedule:
    /// `c² π²/6` for the harmonic family, the exact finite sum otherwise.
    pub fn sum_squares_cap(&self) -> f64 {
        match self {
            Self::Harmonic { c, .. } => c * c * PI * PI / 6.0,
            Self::Explicit { steps } => steps.iter().map(|t| t * t).sum(),
        }
    }
}
