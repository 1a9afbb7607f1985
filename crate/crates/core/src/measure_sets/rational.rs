//! Exact scalar arithmetic: arbitrary-precision rationals plus the handful
//! of helpers the set constructions lean on (dyadic rounding, `p/q`
//! parsing for configs, exact conversion from `f64`).

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};

use crate::error::{Error, Result};

/// The exact scalar used for every endpoint, mass and threshold in
/// `measure_sets`. Arithmetic never rounds.
pub type Rational = BigRational;

pub fn rat(num: i64, den: i64) -> Rational {
    Rational::new(BigInt::from(num), BigInt::from(den))
}

pub fn rat_int(n: i64) -> Rational {
    Rational::from_integer(BigInt::from(n))
}

pub fn zero() -> Rational {
    Rational::zero()
}

pub fn one() -> Rational {
    Rational::one()
}

pub fn half() -> Rational {
    rat(1, 2)
}

/// `2^k` for any integer `k` (negative exponents give dyadic fractions).
pub fn pow2(k: i64) -> Rational {
    let mag = BigInt::one() << k.unsigned_abs() as usize;
    if k >= 0 {
        Rational::from_integer(mag)
    } else {
        Rational::new(BigInt::one(), mag)
    }
}

/// Exact conversion from a double. Every finite `f64` is a dyadic rational,
/// so nothing is lost; the conversion fails only on NaN/infinity.
pub fn rat_from_f64(x: f64) -> Result<Rational> {
    Rational::from_float(x).ok_or_else(|| Error::ParameterOutOfRange {
        name: "float",
        detail: format!("{x} is not finite"),
    })
}

/// Nearest-double rendering of a rational, for reports only; the exact
/// value never flows through this.
pub fn rat_to_f64(x: &Rational) -> f64 {
    x.to_f64().unwrap_or(f64::NAN)
}

/// Canonical `p/q` rendering (plain `p` when the denominator is 1).
pub fn format_rational(x: &Rational) -> String {
    if x.denom().is_one() {
        x.numer().to_string()
    } else {
        format!("{}/{}", x.numer(), x.denom())
    }
}

/// Parses `p/q`, a plain integer, or a finite decimal such as `0.25`.
pub fn parse_rational(s: &str) -> Result<Rational> {
    let bad = |detail: String| Error::ParameterOutOfRange {
        name: "rational",
        detail,
    };
    let s = s.trim();
    if let Some((p, q)) = s.split_once('/') {
        let num: BigInt = p
            .trim()
            .parse()
            .map_err(|_| bad(format!("bad numerator in `{s}`")))?;
        let den: BigInt = q
            .trim()
            .parse()
            .map_err(|_| bad(format!("bad denominator in `{s}`")))?;
        if den.is_zero() {
            return Err(bad(format!("zero denominator in `{s}`")));
        }
        Ok(Rational::new(num, den))
    } else if let Some((int, frac)) = s.split_once('.') {
        let digits = format!("{}{}", if int.is_empty() { "0" } else { int }, frac);
        let num: BigInt = digits
            .parse()
            .map_err(|_| bad(format!("bad decimal `{s}`")))?;
        let den = BigInt::from(10u8).pow(frac.len() as u32);
        Ok(Rational::new(num, den))
    } else {
        let num: BigInt = s.parse().map_err(|_| bad(format!("bad rational `{s}`")))?;
        Ok(Rational::from_integer(num))
    }
}

/// Smallest dyadic `m/2^k` with `m/2^k >= x`.
pub fn ceil_dyadic(x: &Rational, k: u32) -> Rational {
    let scaled = x * pow2(k as i64);
    Rational::new(scaled.ceil().to_integer(), BigInt::one() << k as usize)
}

/// Largest dyadic `m/2^k` with `m/2^k <= x`.
pub fn floor_dyadic(x: &Rational, k: u32) -> Rational {
    let scaled = x * pow2(k as i64);
    Rational::new(scaled.floor().to_integer(), BigInt::one() << k as usize)
}

/// Splits a nonnegative rational into whole part and fractional part.
pub fn split_whole_frac(x: &Rational) -> (BigInt, Rational) {
    debug_assert!(!x.is_negative());
    let whole = x.floor().to_integer();
    let frac = x - Rational::from_integer(whole.clone());
    (whole, frac)
}
