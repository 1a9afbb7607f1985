use std::fmt;

use num_bigint::BigInt;
use num_traits::Signed;

use super::rational::{format_rational, Rational};
use crate::error::{Error, Result};

/// A certified bracket `[lower, upper]` guaranteed to contain an exact
/// quantity at the queried refinement depth.
///
/// Measure queries always produce nonnegative brackets; function-value
/// brackets reuse the type and may be negative, so only the ordering
/// `lower <= upper` is enforced structurally.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct MeasureBounds {
    lower: Rational,
    upper: Rational,
}

impl MeasureBounds {
    pub fn new(lower: Rational, upper: Rational) -> Result<Self> {
        if lower <= upper {
            Ok(Self { lower, upper })
        } else {
            Err(Error::InvertedBracket {
                lower: format_rational(&lower),
                upper: format_rational(&upper),
            })
        }
    }

    /// Internal constructor for brackets whose ordering is guaranteed by
    /// the surrounding arithmetic; an inversion here is a bug, not input.
    pub(crate) fn bracket(lower: Rational, upper: Rational) -> Self {
        assert!(
            lower <= upper,
            "bracket inverted: [{}, {}]",
            format_rational(&lower),
            format_rational(&upper),
        );
        Self { lower, upper }
    }

    pub fn exact(value: Rational) -> Self {
        Self {
            lower: value.clone(),
            upper: value,
        }
    }

    pub fn zero() -> Self {
        Self::exact(super::zero())
    }

    pub fn lower(&self) -> &Rational {
        &self.lower
    }

    pub fn upper(&self) -> &Rational {
        &self.upper
    }

    pub fn width(&self) -> Rational {
        &self.upper - &self.lower
    }

    pub fn contains(&self, value: &Rational) -> bool {
        *value >= self.lower && *value <= self.upper
    }

    pub fn is_within(&self, outer: &MeasureBounds) -> bool {
        self.lower >= outer.lower && self.upper <= outer.upper
    }

    pub fn add(&self, other: &MeasureBounds) -> MeasureBounds {
        Self::bracket(&self.lower + &other.lower, &self.upper + &other.upper)
    }

    /// Bracket of `self - other`; endpoints cross over.
    pub fn sub(&self, other: &MeasureBounds) -> MeasureBounds {
        Self::bracket(&self.lower - &other.upper, &self.upper - &other.lower)
    }

    /// Bracket of `offset + coeff * self`, with the endpoint swap for
    /// negative coefficients.
    pub fn affine(&self, offset: &Rational, coeff: &Rational) -> MeasureBounds {
        let a = offset + coeff * &self.lower;
        let b = offset + coeff * &self.upper;
        if coeff.is_negative() {
            Self::bracket(b, a)
        } else {
            Self::bracket(a, b)
        }
    }

    pub fn scale_int(&self, n: &BigInt) -> MeasureBounds {
        let k = Rational::from_integer(n.clone());
        debug_assert!(!k.is_negative());
        Self::bracket(&self.lower * &k, &self.upper * &k)
    }

    /// Clamps the lower endpoint up to zero (measure queries only produce
    /// nonnegative quantities, but tail subtraction can undershoot).
    pub fn clamp_nonnegative(self) -> MeasureBounds {
        if self.lower.is_negative() {
            let upper = if self.upper.is_negative() {
                super::zero()
            } else {
                self.upper
            };
            Self {
                lower: super::zero(),
                upper,
            }
        } else {
            self
        }
    }

    /// Certified comparison against `threshold <= quantity`:
    /// `Verified` when even the lower endpoint clears the threshold,
    /// `Violated` when even the upper endpoint misses it, `Undecided`
    /// (carrying the bracket width) when the bracket straddles it.
    pub fn versus_floor(&self, threshold: &Rational) -> Verdict {
        if self.lower >= *threshold {
            Verdict::Verified
        } else if self.upper < *threshold {
            Verdict::Violated
        } else {
            Verdict::Undecided {
                width: self.width(),
            }
        }
    }
}

impl fmt::Display for MeasureBounds {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "[{}, {}]",
            format_rational(&self.lower),
            format_rational(&self.upper)
        )
    }
}

/// Outcome of a certified check. `Undecided` is returned only when the
/// bracket straddles the decision threshold, i.e. the refinement depth was
/// too shallow to decide either way.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Verdict {
    Verified,
    Violated,
    Undecided { width: Rational },
}

impl Verdict {
    pub fn is_verified(&self) -> bool {
        matches!(self, Verdict::Verified)
    }

    pub fn is_violated(&self) -> bool {
        matches!(self, Verdict::Violated)
    }

    pub fn is_undecided(&self) -> bool {
        matches!(self, Verdict::Undecided { .. })
    }

    pub fn label(&self) -> &'static str {
        match self {
            Verdict::Verified => "verified",
            Verdict::Violated => "violated",
            Verdict::Undecided { .. } => "undecided",
        }
    }
}

impl fmt::Display for Verdict {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Verdict::Undecided { width } => {
                write!(f, "undecided (bracket width {})", format_rational(width))
            }
            other => f.write_str(other.label()),
        }
    }
}
