//! The controlled splitting set over `[0,1]`, extended `ℤ`-periodically.
//!
//! A [`SplittingSet`] is a finite, deterministic stage of the classical
//! construction: placement 0 installs a kept fat Cantor set `T_0` on the
//! left `theta`-fraction of `[0,1]` and a removed one `N_0` on the right
//! remainder; placement `n >= 1` takes the `n`-th interval `I_n` of the
//! dyadic enumeration, locates a resolved gap inside it that is disjoint
//! from everything installed so far, and installs a scaled copy of the same
//! kept/removed pair there. The represented set is
//! `A_0 = [0,1] \ (N_0 ∪ N_1 ∪ ...)` over the materialized placements,
//! extended by integer translation.
//!
//! Admissibility of the parameters —
//! `1/2 < lambda < 1`, `alpha * theta > lambda`, and
//! `alpha > 3*lambda / (2 + lambda)` —
//! is exactly what makes the kept mass alone certify the cumulative floor
//! `m(A ∩ [0,t]) >= lambda * t`, which is how
//! [`SplittingSet::check_controlled_split`] decides its verdicts.

use std::collections::BTreeMap;

use num_traits::{Signed, Zero};
use serde::{Deserialize, Serialize};

use super::bounds::{MeasureBounds, Verdict};
use super::cantor::FatCantorSet;
use super::enumeration::dyadic_enumeration;
use super::interval::Interval;
use super::rational::{
    ceil_dyadic, floor_dyadic, format_rational, half, one, pow2, rat_int, split_whole_frac, zero,
    Rational,
};
use crate::error::{Error, Result};

/// One installed kept/removed pair.
///
/// `kept` is `F_alpha` on the left `theta`-fraction of the host, `removed`
/// is `F_1/2` on the right remainder, so the pair has exact limiting masses
/// `alpha*theta*m(host)` and `(1/2)*(1-theta)*m(host)`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Placement {
    host: Interval,
    kept: FatCantorSet,
    removed: FatCantorSet,
}

impl Placement {
    fn build(host: Interval, alpha: &Rational, theta: &Rational, depth: u32) -> Result<Self> {
        let split = host.lo() + theta * host.length();
        let kept = FatCantorSet::new(
            Interval::new(host.lo().clone(), split.clone())?,
            alpha.clone(),
            depth,
        )?;
        let removed = FatCantorSet::new(
            Interval::new(split, host.hi().clone())?,
            half(),
            depth,
        )?;
        Ok(Self {
            host,
            kept,
            removed,
        })
    }

    pub fn host(&self) -> &Interval {
        &self.host
    }

    pub fn kept(&self) -> &FatCantorSet {
        &self.kept
    }

    pub fn removed(&self) -> &FatCantorSet {
        &self.removed
    }
}

/// A deterministic finite stage of the splitting-set construction.
/// Immutable; [`SplittingSet::extend_to`] returns a new value with more
/// placements, replaying the same deterministic rules.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SplittingSet {
    lambda: Rational,
    alpha: Rational,
    theta: Rational,
    depth: u32,
    placements: Vec<Placement>,
}

/// Validates the construction hypotheses tying the parameters together.
fn check_params(lambda: &Rational, alpha: &Rational, theta: &Rational) -> Result<()> {
    let err = |msg: String| Err(Error::HypothesisViolated(msg));
    if *lambda <= half() || *lambda >= one() {
        return err(format!(
            "lambda = {} must lie in (1/2, 1)",
            format_rational(lambda)
        ));
    }
    if *alpha <= zero() || *alpha >= one() {
        return err(format!(
            "alpha = {} must lie in (0, 1)",
            format_rational(alpha)
        ));
    }
    if *theta <= zero() || *theta >= one() {
        return err(format!(
            "theta = {} must lie in (0, 1)",
            format_rational(theta)
        ));
    }
    if alpha * theta <= *lambda {
        return err(format!(
            "alpha*theta = {} must exceed lambda = {}",
            format_rational(&(alpha * theta)),
            format_rational(lambda)
        ));
    }
    let floor = rat_int(3) * lambda / (rat_int(2) + lambda);
    if *alpha <= floor {
        return err(format!(
            "alpha = {} must exceed 3*lambda/(2+lambda) = {}",
            format_rational(alpha),
            format_rational(&floor)
        ));
    }
    Ok(())
}

impl SplittingSet {
    /// Builds placements `0..=n_placements`. Placement 0 always hosts
    /// `[0,1]`; placement `n` hosts a gap located inside the `n`-th
    /// enumerated dyadic interval.
    pub fn build(
        lambda: Rational,
        alpha: Rational,
        theta: Rational,
        n_placements: u64,
        depth: u32,
    ) -> Result<Self> {
        check_params(&lambda, &alpha, &theta)?;
        let placement0 = Placement::build(Interval::unit(), &alpha, &theta, depth)?;
        let mut set = Self {
            lambda,
            alpha,
            theta,
            depth,
            placements: vec![placement0],
        };
        set.extend_in_place(n_placements)?;
        Ok(set)
    }

    /// Same set with placements materialized through index `n_placements`
    /// (no-op when already that deep).
    pub fn extend_to(&self, n_placements: u64) -> Result<Self> {
        let mut out = self.clone();
        out.extend_in_place(n_placements)?;
        Ok(out)
    }

    fn extend_in_place(&mut self, n_placements: u64) -> Result<()> {
        while (self.placements.len() as u64) <= n_placements {
            let index = self.placements.len() as u64;
            let target = dyadic_enumeration(index)?;
            let host = self.locate_host(&target)?;
            self.placements
                .push(Placement::build(host, &self.alpha, &self.theta, self.depth)?);
        }
        Ok(())
    }

    /// Deterministic gap search with bounded depth escalation: the build
    /// depth first, then four successively deeper retries.
    fn locate_host(&self, target: &Interval) -> Result<Interval> {
        let mut search_depth = self.depth;
        for _ in 0..5 {
            match find_gap(&self.placements, target, search_depth) {
                Ok(gap) => return Ok(gap),
                Err(Error::GapNotResolved { .. }) => search_depth += 16,
                Err(other) => return Err(other),
            }
        }
        Err(Error::GapNotResolved {
            interval: target.to_string(),
            depth: search_depth,
        })
    }

    pub fn lambda(&self) -> &Rational {
        &self.lambda
    }

    pub fn alpha(&self) -> &Rational {
        &self.alpha
    }

    pub fn theta(&self) -> &Rational {
        &self.theta
    }

    pub fn depth(&self) -> u32 {
        self.depth
    }

    pub fn placements(&self) -> &[Placement] {
        &self.placements
    }

    /// Certified bracket of the removed mass `m(N ∩ [u,v])` inside one
    /// period window, summed over the pairwise disjoint removed sets.
    pub fn removed_mass_in(&self, u: &Rational, v: &Rational, depth: u32) -> MeasureBounds {
        let mut acc = MeasureBounds::zero();
        for p in &self.placements {
            let base = p.removed.base();
            if u < base.hi() && base.lo() < v {
                acc = acc.add(&p.removed.window_measure(u, v, depth));
            }
        }
        acc
    }

    /// Certified bracket of the kept mass `m((T_0 ∪ T_1 ∪ ...) ∩ [u,v])`.
    pub fn kept_mass_in(&self, u: &Rational, v: &Rational, depth: u32) -> MeasureBounds {
        let mut acc = MeasureBounds::zero();
        for p in &self.placements {
            let base = p.kept.base();
            if u < base.hi() && base.lo() < v {
                acc = acc.add(&p.kept.window_measure(u, v, depth));
            }
        }
        acc
    }

    /// Certified bracket of `m(A_0)`, the mass of one period.
    pub fn unit_measure(&self, depth: u32) -> MeasureBounds {
        MeasureBounds::exact(one()).sub(&self.removed_mass_in(&zero(), &one(), depth))
    }

    /// Certified bracket of `m(A ∩ [0, t])` for `t >= 0`, using the
    /// periodic extension: whole periods contribute the `m(A_0)` bracket,
    /// the fractional remainder is measured directly.
    pub fn cumulative_measure(&self, t: &Rational, depth: u32) -> Result<MeasureBounds> {
        if t.is_negative() {
            return Err(Error::OutOfDomain(format!(
                "cumulative query needs t >= 0, got {}",
                format_rational(t)
            )));
        }
        let (whole, frac) = split_whole_frac(t);
        let mut acc = self.unit_measure(depth).scale_int(&whole);
        if !frac.is_zero() {
            let frac_mass =
                MeasureBounds::exact(frac.clone()).sub(&self.removed_mass_in(&zero(), &frac, depth));
            acc = acc.add(&frac_mass);
        }
        Ok(acc)
    }

    /// Certified bracket of `m(A ∩ [u, v])` for any rational window,
    /// shifting by whole periods to land in `[0, ∞)`.
    pub fn window_measure(&self, u: &Rational, v: &Rational, depth: u32) -> Result<MeasureBounds> {
        if u >= v {
            return Ok(MeasureBounds::zero());
        }
        let (mut lo, mut hi) = (u.clone(), v.clone());
        if lo.is_negative() {
            let shift = Rational::from_integer((-lo.clone()).ceil().to_integer());
            lo += &shift;
            hi += &shift;
        }
        let upper_cum = self.cumulative_measure(&hi, depth)?;
        let lower_cum = self.cumulative_measure(&lo, depth)?;
        Ok(upper_cum.sub(&lower_cum).clamp_nonnegative())
    }

    /// Certified bracket of the saturated primitive
    /// `F(t) = ∫_0^t (χ_A - χ_{A^c})` = `2 m(A ∩ [0,t]) - t` for `t >= 0`,
    /// with the orientation flip for negative `t`. Exact affine transform
    /// of the cumulative bracket; no additional error enters.
    pub fn indicator_integral(&self, t: &Rational, depth: u32) -> Result<MeasureBounds> {
        if t.is_negative() {
            let mass = self.window_measure(t, &zero(), depth)?;
            // F(t) = -(2 m(A ∩ [t,0]) - |t|) = -t - 2 m(A ∩ [t,0])
            Ok(mass.affine(&-t.clone(), &rat_int(-2)))
        } else {
            let mass = self.cumulative_measure(t, depth)?;
            Ok(mass.affine(&-t.clone(), &rat_int(2)))
        }
    }

    /// Certified bracket of the kept-mass certificate
    /// `S(t) = m((T_0 ∪ T_1 ∪ ...) ∩ [0, t])`, periodically extended.
    /// Since every kept set is contained in `A`, `S(t)` is a lower bound
    /// for `m(A ∩ [0,t])`.
    pub fn kept_cumulative(&self, t: &Rational, depth: u32) -> Result<MeasureBounds> {
        if t.is_negative() {
            return Err(Error::OutOfDomain(format!(
                "kept-mass query needs t >= 0, got {}",
                format_rational(t)
            )));
        }
        let (whole, frac) = split_whole_frac(t);
        let mut acc = self.kept_mass_in(&zero(), &one(), depth).scale_int(&whole);
        if !frac.is_zero() {
            acc = acc.add(&self.kept_mass_in(&zero(), &frac, depth));
        }
        Ok(acc)
    }

    /// Checks the controlled-split floor `m(A ∩ [0,t]) >= lambda * t` on a
    /// grid of positive query points, using the set's own `lambda`.
    pub fn check_controlled_split(
        &self,
        grid: &[Rational],
        depth: u32,
    ) -> Result<Vec<(Rational, Verdict)>> {
        self.check_controlled_split_with(&self.lambda.clone(), grid, depth)
    }

    /// Same check against an arbitrary floor coefficient.
    ///
    /// The certificate quantity is the kept mass `S(t)`: `Verified` means
    /// even the certified lower endpoint of `S(t)` clears `lambda * t`
    /// (hence so does `m(A ∩ [0,t]) >= S(t)`); `Violated` means even the
    /// fully resolved kept mass cannot reach the floor, i.e. the
    /// certificate conclusively fails, which happens exactly when the floor
    /// coefficient is pushed above what the construction installs.
    pub fn check_controlled_split_with(
        &self,
        lambda: &Rational,
        grid: &[Rational],
        depth: u32,
    ) -> Result<Vec<(Rational, Verdict)>> {
        let unit_kept = self.kept_mass_in(&zero(), &one(), depth);
        let mut frac_cache: BTreeMap<Rational, MeasureBounds> = BTreeMap::new();
        let mut out = Vec::with_capacity(grid.len());
        for t in grid {
            if !t.is_positive() {
                return Err(Error::OutOfDomain(format!(
                    "controlled-split grid points must be positive, got {}",
                    format_rational(t)
                )));
            }
            let (whole, frac) = split_whole_frac(t);
            let mut s = unit_kept.scale_int(&whole);
            if !frac.is_zero() {
                let frac_mass = frac_cache
                    .entry(frac.clone())
                    .or_insert_with(|| self.kept_mass_in(&zero(), &frac, depth))
                    .clone();
                s = s.add(&frac_mass);
            }
            out.push((t.clone(), s.versus_floor(&(lambda * t))));
        }
        Ok(out)
    }

    /// Certifies the splitting property `0 < m(A ∩ I) < m(I)` for one
    /// interval `I ⊆ [0,1]`.
    ///
    /// The complement witness is removed mass inside `I`; the set witness
    /// is the larger of the kept mass inside `I` and `m(I)` minus the
    /// removed mass. When the current placements provide no removed mass
    /// inside `I`, the enumeration is continued (up to placement index
    /// `budget`) until one lands there; a budget too small to reach `I`
    /// yields `Undecided`.
    pub fn check_splits_interval(
        &self,
        interval: &Interval,
        depth: u32,
        budget: u64,
    ) -> Result<SplitCheck> {
        if !Interval::unit().contains_interval(interval) {
            return Err(Error::OutOfDomain(format!(
                "splitting checks are limited to subintervals of [0,1], got {interval}"
            )));
        }
        let extended;
        let set = if budget as usize >= self.placements.len() {
            extended = self.extend_to(budget)?;
            &extended
        } else {
            self
        };
        let removed = set.removed_mass_in(interval.lo(), interval.hi(), depth);
        let kept = set.kept_mass_in(interval.lo(), interval.hi(), depth);
        let via_complement = {
            let slack = interval.length() - removed.upper();
            if slack.is_negative() {
                zero()
            } else {
                slack
            }
        };
        let set_mass_lower = via_complement.max(kept.lower().clone());
        let complement_mass_lower = removed.lower().clone();
        let verdict = if set_mass_lower.is_positive() && complement_mass_lower.is_positive() {
            Verdict::Verified
        } else {
            let mut width = zero();
            if !set_mass_lower.is_positive() {
                width += kept.width() + removed.width();
            }
            if !complement_mass_lower.is_positive() {
                width += removed.width();
            }
            Verdict::Undecided { width }
        };
        Ok(SplitCheck {
            interval: interval.clone(),
            set_mass_lower,
            complement_mass_lower,
            verdict,
        })
    }

    pub fn to_doc(&self) -> SplittingSetDoc {
        SplittingSetDoc {
            schema: 1,
            lambda: rational_doc(&self.lambda),
            alpha: rational_doc(&self.alpha),
            theta: rational_doc(&self.theta),
            depth: self.depth,
            placements: self
                .placements
                .iter()
                .map(|p| PlacementDoc {
                    host: interval_doc(&p.host),
                    kept: cantor_doc(&p.kept),
                    removed: cantor_doc(&p.removed),
                })
                .collect(),
        }
    }

    pub fn from_doc(doc: &SplittingSetDoc) -> Result<Self> {
        if doc.schema != 1 {
            return Err(Error::InvalidDocument(format!(
                "unsupported schema {}",
                doc.schema
            )));
        }
        let lambda = rational_from_doc(&doc.lambda)?;
        let alpha = rational_from_doc(&doc.alpha)?;
        let theta = rational_from_doc(&doc.theta)?;
        check_params(&lambda, &alpha, &theta)?;
        if doc.placements.is_empty() {
            return Err(Error::InvalidDocument(
                "document carries no placements".into(),
            ));
        }
        let mut placements = Vec::with_capacity(doc.placements.len());
        for (i, pd) in doc.placements.iter().enumerate() {
            let host = interval_from_doc(&pd.host)?;
            if i == 0 && host != Interval::unit() {
                return Err(Error::InvalidDocument(
                    "placement 0 must host [0,1]".into(),
                ));
            }
            let rebuilt = Placement::build(host, &alpha, &theta, doc.depth)?;
            let kept = cantor_from_doc(&pd.kept, doc.depth)?;
            let removed = cantor_from_doc(&pd.removed, doc.depth)?;
            if kept != *rebuilt.kept() || removed != *rebuilt.removed() {
                return Err(Error::InvalidDocument(format!(
                    "placement {i} is inconsistent with its host and the set parameters"
                )));
            }
            placements.push(rebuilt);
        }
        Ok(Self {
            lambda,
            alpha,
            theta,
            depth: doc.depth,
            placements,
        })
    }

    /// Canonical JSON rendering; round-trips bit-exactly.
    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(&self.to_doc()).expect("document serialization is infallible")
    }

    pub fn from_json(text: &str) -> Result<Self> {
        let doc: SplittingSetDoc = serde_json::from_str(text)?;
        Self::from_doc(&doc)
    }
}

/// Result of a splitting-property check: certified positive lower bounds
/// for the set and complement masses inside the interval.
#[derive(Debug, Clone)]
pub struct SplitCheck {
    pub interval: Interval,
    pub set_mass_lower: Rational,
    pub complement_mass_lower: Rational,
    pub verdict: Verdict,
}

/// Deterministic gap search: among the removed middle intervals of every
/// existing placement (both trees, resolved through `depth`), intersected
/// with `within` and with later hosts carved out, picks the piece of
/// maximal length (ties: leftmost) and returns the middle third of that
/// piece, shrunk inward to dyadic endpoints.
pub fn find_gap(placements: &[Placement], within: &Interval, depth: u32) -> Result<Interval> {
    let mut best: Option<Interval> = None;
    for (owner, p) in placements.iter().enumerate() {
        // A gap of this placement's trees is its own free space; only the
        // *other* nested hosts are occupied territory inside it.
        let nested_hosts: Vec<&Interval> = placements
            .iter()
            .enumerate()
            .filter(|(k, _)| *k >= 1 && *k != owner)
            .map(|(_, q)| q.host())
            .collect();
        for tree in [&p.kept, &p.removed] {
            if tree.base().overlaps_interior(within) {
                descend_for_gap(
                    tree.base().lo(),
                    tree.base().hi(),
                    tree.delta0(),
                    depth + 1,
                    within,
                    &nested_hosts,
                    &mut best,
                );
            }
        }
    }
    let best = best.ok_or_else(|| Error::GapNotResolved {
        interval: within.to_string(),
        depth,
    })?;
    Ok(middle_third_dyadic(&best))
}

fn better_candidate(candidate: &Interval, best: &Option<Interval>) -> bool {
    match best {
        None => true,
        Some(b) => {
            let (cl, bl) = (candidate.length(), b.length());
            cl > bl || (cl == bl && candidate.lo() < b.lo())
        }
    }
}

fn descend_for_gap(
    lo: &Rational,
    hi: &Rational,
    delta: &Rational,
    levels: u32,
    within: &Interval,
    hosts: &[&Interval],
    best: &mut Option<Interval>,
) {
    if levels == 0 || lo >= within.hi() || hi <= within.lo() {
        return;
    }
    // Candidates in this subtree are no longer than this node's removal,
    // so the subtree cannot improve on a strictly longer incumbent.
    if let Some(b) = best {
        if *delta < b.length() {
            return;
        }
    }
    let mid = (lo + hi) / rat_int(2);
    let half_delta = delta / rat_int(2);
    let gap_lo = &mid - &half_delta;
    let gap_hi = &mid + &half_delta;
    if let Ok(gap) = Interval::new(gap_lo.clone(), gap_hi.clone()) {
        if let Some(piece) = gap.intersect(within) {
            for fragment in subtract_hosts(piece, hosts) {
                if better_candidate(&fragment, best) {
                    *best = Some(fragment);
                }
            }
        }
    }
    let child_delta = delta / rat_int(4);
    descend_for_gap(lo, &gap_lo, &child_delta, levels - 1, within, hosts, best);
    descend_for_gap(&gap_hi, hi, &child_delta, levels - 1, within, hosts, best);
}

/// Removes every host interval from `piece`, returning the leftover
/// fragments (possibly none).
fn subtract_hosts(piece: Interval, hosts: &[&Interval]) -> Vec<Interval> {
    let mut fragments = vec![piece];
    for host in hosts {
        let mut next = Vec::with_capacity(fragments.len());
        for frag in fragments {
            if !frag.overlaps_interior(host) {
                next.push(frag);
                continue;
            }
            if frag.lo() < host.lo() {
                next.push(
                    Interval::new(frag.lo().clone(), host.lo().clone())
                        .expect("left fragment is nonempty"),
                );
            }
            if host.hi() < frag.hi() {
                next.push(
                    Interval::new(host.hi().clone(), frag.hi().clone())
                        .expect("right fragment is nonempty"),
                );
            }
        }
        fragments = next;
        if fragments.is_empty() {
            break;
        }
    }
    fragments
}

/// Middle third of `piece`, with both endpoints rounded inward to the
/// coarsest dyadic grid `2^-k` finer than a quarter of the third's length;
/// the result keeps at least half of the third.
fn middle_third_dyadic(piece: &Interval) -> Interval {
    let third = piece.length() / rat_int(3);
    let m1 = piece.lo() + &third;
    let m2 = piece.hi() - &third;
    let quarter = (&m2 - &m1) / rat_int(4);
    let mut k = 0u32;
    while pow2(-(k as i64)) > quarter {
        k += 1;
    }
    let lo = ceil_dyadic(&m1, k);
    let hi = floor_dyadic(&m2, k);
    Interval::new(lo, hi).expect("dyadic middle third keeps positive length")
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct RationalDoc {
    pub num: String,
    pub den: String,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct IntervalDoc {
    pub lo: RationalDoc,
    pub hi: RationalDoc,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct CantorDoc {
    pub base: IntervalDoc,
    pub alpha: RationalDoc,
    pub depth: u32,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct PlacementDoc {
    pub host: IntervalDoc,
    pub kept: CantorDoc,
    pub removed: CantorDoc,
}

/// Canonical serialized form of a [`SplittingSet`].
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct SplittingSetDoc {
    pub schema: u32,
    pub lambda: RationalDoc,
    pub alpha: RationalDoc,
    pub theta: RationalDoc,
    pub depth: u32,
    pub placements: Vec<PlacementDoc>,
}

fn rational_doc(x: &Rational) -> RationalDoc {
    RationalDoc {
        num: x.numer().to_string(),
        den: x.denom().to_string(),
    }
}

fn rational_from_doc(doc: &RationalDoc) -> Result<Rational> {
    let num = doc
        .num
        .parse()
        .map_err(|_| Error::InvalidDocument(format!("bad numerator `{}`", doc.num)))?;
    let den: num_bigint::BigInt = doc
        .den
        .parse()
        .map_err(|_| Error::InvalidDocument(format!("bad denominator `{}`", doc.den)))?;
    if den.is_zero() {
        return Err(Error::InvalidDocument("zero denominator".into()));
    }
    Ok(Rational::new(num, den))
}

fn interval_doc(iv: &Interval) -> IntervalDoc {
    IntervalDoc {
        lo: rational_doc(iv.lo()),
        hi: rational_doc(iv.hi()),
    }
}

fn interval_from_doc(doc: &IntervalDoc) -> Result<Interval> {
    Interval::new(rational_from_doc(&doc.lo)?, rational_from_doc(&doc.hi)?)
}

fn cantor_doc(set: &FatCantorSet) -> CantorDoc {
    CantorDoc {
        base: interval_doc(set.base()),
        alpha: rational_doc(set.alpha()),
        depth: set.depth(),
    }
}

fn cantor_from_doc(doc: &CantorDoc, expected_depth: u32) -> Result<FatCantorSet> {
    if doc.depth != expected_depth {
        return Err(Error::InvalidDocument(format!(
            "tree depth {} disagrees with set depth {expected_depth}",
            doc.depth
        )));
    }
    FatCantorSet::new(
        interval_from_doc(&doc.base)?,
        rational_from_doc(&doc.alpha)?,
        doc.depth,
    )
}
