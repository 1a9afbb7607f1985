use std::fmt;

use super::rational::Rational;
use crate::error::{Error, Result};

/// A nonempty closed interval `[lo, hi]` with exact rational endpoints.
///
/// Emptiness is never encoded as `lo >= hi`; operations that may produce an
/// empty result (intersection) return `Option<Interval>` instead.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Interval {
    lo: Rational,
    hi: Rational,
}

impl Interval {
    pub fn new(lo: Rational, hi: Rational) -> Result<Self> {
        if lo < hi {
            Ok(Self { lo, hi })
        } else {
            Err(Error::EmptyInterval {
                lo: super::format_rational(&lo),
                hi: super::format_rational(&hi),
            })
        }
    }

    /// `[0, 1]`.
    pub fn unit() -> Self {
        Self {
            lo: super::zero(),
            hi: super::one(),
        }
    }

    pub fn lo(&self) -> &Rational {
        &self.lo
    }

    pub fn hi(&self) -> &Rational {
        &self.hi
    }

    pub fn length(&self) -> Rational {
        &self.hi - &self.lo
    }

    pub fn midpoint(&self) -> Rational {
        (&self.lo + &self.hi) / super::rat_int(2)
    }

    pub fn contains(&self, x: &Rational) -> bool {
        *x >= self.lo && *x <= self.hi
    }

    pub fn contains_interval(&self, other: &Interval) -> bool {
        other.lo >= self.lo && other.hi <= self.hi
    }

    /// Closed intersection; `None` when the overlap is empty or a single
    /// point (a degenerate interval carries no measure and no gap).
    pub fn intersect(&self, other: &Interval) -> Option<Interval> {
        let lo = if self.lo >= other.lo { &self.lo } else { &other.lo };
        let hi = if self.hi <= other.hi { &self.hi } else { &other.hi };
        if lo < hi {
            Some(Interval {
                lo: lo.clone(),
                hi: hi.clone(),
            })
        } else {
            None
        }
    }

    /// True when the interiors overlap (shared endpoints do not count).
    pub fn overlaps_interior(&self, other: &Interval) -> bool {
        self.lo < other.hi && other.lo < self.hi
    }

    pub fn translate(&self, offset: &Rational) -> Interval {
        Interval {
            lo: &self.lo + offset,
            hi: &self.hi + offset,
        }
    }
}

impl fmt::Display for Interval {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "[{}, {}]",
            super::format_rational(&self.lo),
            super::format_rational(&self.hi)
        )
    }
}
