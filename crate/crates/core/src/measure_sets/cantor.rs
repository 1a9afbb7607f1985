//! Fat Cantor sets as lazily walked dyadic removal trees.
//!
//! `F_alpha([a,b])` is built by removing, level by level, the open middle
//! interval of every surviving piece. Level 0 removes a single interval of
//! length `delta0 = ((1-alpha)/2) * (b-a)` centered at the midpoint; level
//! `n` removes `2^n` intervals of length `delta0 / 4^n`, each centered at
//! the midpoint of its parent piece. The survivor has exact total measure
//! `alpha * (b-a)`, and the removals resolved through depth `d` have exact
//! total mass `delta0 * (2 - 2^-d)`, leaving the closed-form unresolved
//! tail `delta0 * 2^-d` that certifies every bracket below.
//!
//! Nothing is materialized: queries descend the tree geometry on demand, so
//! a depth-20 cumulative query costs a 20-level walk, not 2^21 intervals.

use num_traits::Signed;

use super::bounds::{MeasureBounds, Verdict};
use super::interval::Interval;
use super::rational::{pow2, rat_int, Rational};
use crate::error::{Error, Result};

/// An `alpha`-fat Cantor set on a rational base interval, refined to a
/// default depth. Values are immutable; `refine` returns a new value.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FatCantorSet {
    base: Interval,
    alpha: Rational,
    delta0: Rational,
    depth: u32,
}

impl FatCantorSet {
    pub fn new(base: Interval, alpha: Rational, depth: u32) -> Result<Self> {
        if alpha <= super::zero() || alpha >= super::one() {
            return Err(Error::ParameterOutOfRange {
                name: "alpha",
                detail: format!(
                    "fat Cantor fraction must lie in (0,1), got {}",
                    super::format_rational(&alpha)
                ),
            });
        }
        let delta0 = (super::one() - &alpha) / rat_int(2) * base.length();
        Ok(Self {
            base,
            alpha,
            delta0,
            depth,
        })
    }

    pub fn base(&self) -> &Interval {
        &self.base
    }

    pub fn alpha(&self) -> &Rational {
        &self.alpha
    }

    pub fn delta0(&self) -> &Rational {
        &self.delta0
    }

    pub fn depth(&self) -> u32 {
        self.depth
    }

    /// Same set, refined to a new default depth.
    pub fn refine(&self, depth: u32) -> Self {
        Self {
            depth,
            ..self.clone()
        }
    }

    /// Unresolved removal mass below `depth`: `delta0 * 2^-depth`.
    pub fn tail_bound(&self, depth: u32) -> Rational {
        &self.delta0 * pow2(-(depth as i64))
    }

    /// All removed middle intervals through tree level `depth`, listed
    /// level by level, left to right within each level.
    pub fn removals(&self, depth: u32) -> Vec<Interval> {
        let mut out = Vec::with_capacity((1usize << (depth + 1)) - 1);
        let mut level: Vec<Interval> = vec![self.base.clone()];
        let mut delta = self.delta0.clone();
        for _ in 0..=depth {
            let mut next = Vec::with_capacity(level.len() * 2);
            for piece in &level {
                let (gap, left, right) = split_piece(piece, &delta);
                out.push(gap);
                next.push(left);
                next.push(right);
            }
            level = next;
            delta /= rat_int(4);
        }
        out
    }

    /// Certified bracket of the total measure at the given depth:
    /// lower endpoint is exactly `alpha * m(base)` (all removals will
    /// eventually go), upper endpoint trusts only the removals resolved so
    /// far. Width is exactly `delta0 * 2^-depth`.
    pub fn total_measure(&self, depth: u32) -> MeasureBounds {
        let len = self.base.length();
        let lower = &len - rat_int(2) * &self.delta0;
        let upper = &len - resolved_total(&self.delta0, depth);
        MeasureBounds::bracket(lower, upper)
    }

    /// Certified bracket of `m(F ∩ [a, t])` where `a` is the left endpoint
    /// of the base. `t` below the base is a domain error; `t` beyond the
    /// base clamps (the set carries no mass outside it).
    pub fn cumulative_measure(&self, t: &Rational, depth: u32) -> Result<MeasureBounds> {
        if t < self.base.lo() {
            return Err(Error::OutOfDomain(format!(
                "t = {} lies left of the base {}",
                super::format_rational(t),
                self.base
            )));
        }
        Ok(self.window_measure(self.base.lo(), t, depth))
    }

    /// Certified bracket of `m(F ∩ [u, v])` for any rational window.
    pub fn window_measure(&self, u: &Rational, v: &Rational, depth: u32) -> MeasureBounds {
        let wl = if u >= self.base.lo() { u } else { self.base.lo() };
        let wh = if v <= self.base.hi() { v } else { self.base.hi() };
        if wl >= wh {
            return MeasureBounds::zero();
        }
        let resolved = removed_in_window(
            self.base.lo(),
            self.base.hi(),
            &self.delta0,
            depth + 1,
            wl,
            wh,
        );
        let upper = wh - wl - resolved;
        let lower = &upper - self.tail_bound(depth);
        MeasureBounds::bracket(lower, upper).clamp_nonnegative()
    }

    /// Exact mass of the removals resolved through `depth` inside `[u, v]`.
    pub fn resolved_removed_in(&self, u: &Rational, v: &Rational, depth: u32) -> Rational {
        let wl = if u >= self.base.lo() { u } else { self.base.lo() };
        let wh = if v <= self.base.hi() { v } else { self.base.hi() };
        if wl >= wh {
            return super::zero();
        }
        removed_in_window(
            self.base.lo(),
            self.base.hi(),
            &self.delta0,
            depth + 1,
            wl,
            wh,
        )
    }

    /// Checks the cumulative mass floor `m(F ∩ [a, x]) >= lambda * (x - a)`
    /// on a grid of query points. Guaranteed to verify (at sufficient
    /// depth) whenever `alpha > 3*lambda / (2 + lambda)`.
    pub fn check_mass_floor(
        &self,
        lambda: &Rational,
        grid: &[Rational],
        depth: u32,
    ) -> Result<Vec<(Rational, Verdict)>> {
        let mut out = Vec::with_capacity(grid.len());
        for x in grid {
            let bracket = self.cumulative_measure(x, depth)?;
            let threshold = lambda * (x - self.base.lo());
            out.push((x.clone(), bracket.versus_floor(&threshold)));
        }
        Ok(out)
    }
}

/// Removes the middle `delta` from `piece`, returning (gap, left, right).
fn split_piece(piece: &Interval, delta: &Rational) -> (Interval, Interval, Interval) {
    let mid = piece.midpoint();
    let half_delta = delta / rat_int(2);
    let gap_lo = &mid - &half_delta;
    let gap_hi = &mid + &half_delta;
    (
        Interval::new(gap_lo.clone(), gap_hi.clone()).expect("gap is nonempty"),
        Interval::new(piece.lo().clone(), gap_lo).expect("left piece is nonempty"),
        Interval::new(gap_hi, piece.hi().clone()).expect("right piece is nonempty"),
    )
}

/// Total resolved removal mass of a subtree whose top-level removal has
/// length `delta`, through level `depth`: `sum_{n=0}^{depth} delta/2^n`
/// (2^n removals of length `delta/4^n` per level).
fn resolved_total(delta: &Rational, depth: u32) -> Rational {
    delta * (rat_int(2) - pow2(-(depth as i64)))
}

fn overlap_len(a: &Rational, b: &Rational, u: &Rational, v: &Rational) -> Rational {
    let lo = if a >= u { a } else { u };
    let hi = if b <= v { b } else { v };
    let d = hi - lo;
    if d.is_positive() {
        d
    } else {
        super::zero()
    }
}

/// Exact resolved removal mass inside window `[u, v]` for the subtree on
/// `[lo, hi]` whose top removal has length `delta`, with `levels` removal
/// levels remaining. The window is clipped at each node, so only the two
/// boundary paths of the window descend the full tree.
fn removed_in_window(
    lo: &Rational,
    hi: &Rational,
    delta: &Rational,
    levels: u32,
    u: &Rational,
    v: &Rational,
) -> Rational {
    if levels == 0 {
        return super::zero();
    }
    let wl = if u >= lo { u } else { lo };
    let wh = if v <= hi { v } else { hi };
    if wl >= wh {
        return super::zero();
    }
    if wl == lo && wh == hi {
        // depth = levels - 1 resolved levels within this subtree
        return resolved_total(delta, levels - 1);
    }
    let mid = (lo + hi) / rat_int(2);
    let half_delta = delta / rat_int(2);
    let gap_lo = &mid - &half_delta;
    let gap_hi = &mid + &half_delta;
    let child_delta = delta / rat_int(4);
    let mut acc = overlap_len(&gap_lo, &gap_hi, wl, wh);
    acc += removed_in_window(lo, &gap_lo, &child_delta, levels - 1, wl, wh);
    acc += removed_in_window(&gap_hi, hi, &child_delta, levels - 1, wl, wh);
    acc
}
