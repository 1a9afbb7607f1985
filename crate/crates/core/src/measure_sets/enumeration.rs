//! Deterministic enumeration of the strict dyadic subintervals of `[0,1]`.
//!
//! Level `k >= 1` lists every `[p/2^k, q/2^k]` with `0 <= p < q <= 2^k`,
//! excluding the full interval `(p,q) = (0, 2^k)`, ordered by `k` and then
//! lexicographically by `(p, q)`. Every dyadic subinterval appears at some
//! finite index (with duplicates across levels, which is harmless for the
//! construction that consumes it).

use num_bigint::BigInt;

use super::interval::Interval;
use super::rational::Rational;
use crate::error::{Error, Result};

/// Number of intervals listed at level `k`: `C(2^k + 1, 2) - 1`.
pub fn level_count(k: u32) -> u128 {
    let m = 1u128 << k;
    m * (m + 1) / 2 - 1
}

/// The `n`-th interval of the enumeration, `n >= 1`.
pub fn dyadic_enumeration(n: u64) -> Result<Interval> {
    if n == 0 {
        return Err(Error::EnumerationIndex(n));
    }
    let mut rem = n as u128 - 1;
    let mut k = 1u32;
    loop {
        let c = level_count(k);
        if rem < c {
            break;
        }
        rem -= c;
        k += 1;
    }
    let m = 1u128 << k; // 2^k
    // Lexicographic within the level: p = 0 contributes m - 1 pairs (the
    // full interval is excluded), every later p contributes m - p.
    let mut p = 0u128;
    loop {
        let count_here = if p == 0 { m - 1 } else { m - p };
        if rem < count_here {
            break;
        }
        rem -= count_here;
        p += 1;
    }
    let q = p + 1 + rem;
    let den = BigInt::from(1u8) << k as usize;
    Interval::new(
        Rational::new(BigInt::from(p), den.clone()),
        Rational::new(BigInt::from(q), den),
    )
}
