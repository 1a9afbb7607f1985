//! Per-command configuration: JSON documents and inline flags share the
//! same optional-field structs; explicit flags override config fields, and
//! resolution applies defaults and validates everything with the offending
//! field named in the error.

use std::f64::consts::PI;
use std::fmt;
use std::path::PathBuf;

use anyhow::{Context, Result};
use clap::Args;
use serde::Deserialize;

use subdyn_core::measure_sets::{parse_rational, rat, Rational, SplittingSet};

pub const EXIT_USAGE: u8 = 64;
pub const EXIT_SOFTWARE: u8 = 70;

pub const DEPTH_ENV: &str = "SUBDYN_DEPTH";
pub const DEFAULT_DEPTH: u32 = 20;

/// A configuration problem; always maps to the usage exit code.
#[derive(Debug)]
pub struct ConfigError(pub String);

impl fmt::Display for ConfigError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.0)
    }
}

impl std::error::Error for ConfigError {}

fn bad_field(field: &str, detail: impl fmt::Display) -> anyhow::Error {
    ConfigError(format!("field `{field}`: {detail}")).into()
}

pub fn is_usage_error(err: &anyhow::Error) -> bool {
    for cause in err.chain() {
        if cause.downcast_ref::<ConfigError>().is_some() {
            return true;
        }
        if cause.downcast_ref::<serde_json::Error>().is_some() {
            return true;
        }
        if let Some(core) = cause.downcast_ref::<subdyn_core::Error>() {
            use subdyn_core::Error::*;
            return matches!(
                core,
                EmptyInterval { .. }
                    | InvertedBracket { .. }
                    | ParameterOutOfRange { .. }
                    | HypothesisViolated(_)
                    | OutOfDomain(_)
                    | EnumerationIndex(_)
                    | InvalidSchedule(_)
                    | InvalidDocument(_)
            );
        }
    }
    false
}

pub fn resolve_depth(flag: Option<u32>) -> Result<u32> {
    if let Some(d) = flag {
        return Ok(d);
    }
    match std::env::var(DEPTH_ENV) {
        Ok(text) => text
            .parse::<u32>()
            .map_err(|_| bad_field(DEPTH_ENV, format!("not a depth: `{text}`"))),
        Err(_) => Ok(DEFAULT_DEPTH),
    }
}

/// Loads the JSON config (when given) and overlays every explicitly set
/// flag on top of it.
pub fn merge<T>(config: &Option<PathBuf>, flags: &T) -> Result<T>
where
    T: Overlay + Clone + Default + for<'de> Deserialize<'de>,
{
    let base = match config {
        Some(path) => {
            let text = std::fs::read_to_string(path)
                .with_context(|| format!("cannot read config {}", path.display()))?;
            serde_json::from_str::<T>(&text)
                .with_context(|| format!("invalid config {}", path.display()))?
        }
        None => T::default(),
    };
    Ok(base.overlay(flags))
}

pub trait Overlay {
    fn overlay(self, flags: &Self) -> Self;
}

macro_rules! overlay_options {
    ($base:ident, $flags:ident, [$($field:ident),* $(,)?]) => {
        $( if $flags.$field.is_some() { $base.$field = $flags.$field.clone(); } )*
    };
}

fn parse_rational_field(field: &str, text: &str) -> Result<Rational> {
    parse_rational(text).map_err(|e| bad_field(field, e))
}

fn positive_finite(field: &str, v: f64) -> Result<f64> {
    if v > 0.0 && v.is_finite() {
        Ok(v)
    } else {
        Err(bad_field(field, format!("must be positive and finite, got {v}")))
    }
}

/// Resolved splitting-set parameters shared by several commands.
#[derive(Debug)]
pub struct SetParams {
    pub lambda: Rational,
    pub alpha: Rational,
    pub theta: Rational,
    pub placements: u64,
}

impl SetParams {
    fn resolve(
        lambda: Option<&str>,
        alpha: Option<&str>,
        theta: Option<&str>,
        placements: Option<u64>,
        default_placements: u64,
    ) -> Result<Self> {
        Ok(Self {
            lambda: parse_rational_field("lambda", lambda.unwrap_or("3/5"))?,
            alpha: parse_rational_field("alpha", alpha.unwrap_or("3/4"))?,
            theta: parse_rational_field("theta", theta.unwrap_or("9/10"))?,
            placements: placements.unwrap_or(default_placements),
        })
    }

    pub fn build(&self, depth: u32) -> Result<SplittingSet> {
        SplittingSet::build(
            self.lambda.clone(),
            self.alpha.clone(),
            self.theta.clone(),
            self.placements,
            depth,
        )
        .map_err(Into::into)
    }
}

// ---------------------------------------------------------------------
// cantor
// ---------------------------------------------------------------------

#[derive(Args, Deserialize, Clone, Default, Debug)]
#[serde(deny_unknown_fields, default)]
pub struct CantorConfig {
    /// Fat Cantor fraction alpha as a rational `p/q` [default: 3/4].
    #[arg(long)]
    pub alpha: Option<String>,
    /// Cumulative-mass floor coefficient `p/q` in (1/2, 1) [default: 3/5].
    #[arg(long)]
    pub lambda: Option<String>,
    /// Denominator of the dyadic check grid `{k/den}` [default: 1024].
    #[arg(long)]
    pub grid_den: Option<u32>,
    /// Config-file alternative to the global --depth flag.
    #[arg(skip)]
    pub depth: Option<u32>,
}

impl Overlay for CantorConfig {
    fn overlay(mut self, flags: &Self) -> Self {
        overlay_options!(self, flags, [alpha, lambda, grid_den, depth]);
        self
    }
}

#[derive(Debug)]
pub struct CantorParams {
    pub alpha: Rational,
    pub lambda: Rational,
    pub grid_den: u32,
    pub depth: u32,
}

impl CantorConfig {
    pub fn resolve(&self, default_depth: u32) -> Result<CantorParams> {
        let alpha = parse_rational_field("alpha", self.alpha.as_deref().unwrap_or("3/4"))?;
        let lambda = parse_rational_field("lambda", self.lambda.as_deref().unwrap_or("3/5"))?;
        if alpha <= rat(0, 1) || alpha >= rat(1, 1) {
            return Err(bad_field("alpha", "must lie in (0, 1)"));
        }
        if lambda <= rat(1, 2) || lambda >= rat(1, 1) {
            return Err(bad_field("lambda", "must lie in (1/2, 1)"));
        }
        let floor = rat(3, 1) * &lambda / (rat(2, 1) + &lambda);
        if alpha <= floor {
            return Err(bad_field(
                "alpha",
                format!(
                    "must exceed 3*lambda/(2+lambda) for the mass floor to be certifiable; \
                     the threshold here is {}",
                    subdyn_core::measure_sets::format_rational(&floor)
                ),
            ));
        }
        let grid_den = self.grid_den.unwrap_or(1024);
        if grid_den == 0 {
            return Err(bad_field("grid_den", "must be positive"));
        }
        Ok(CantorParams {
            alpha,
            lambda,
            grid_den,
            depth: self.depth.unwrap_or(default_depth),
        })
    }
}

// ---------------------------------------------------------------------
// split-verify
// ---------------------------------------------------------------------

#[derive(Args, Deserialize, Clone, Default, Debug)]
#[serde(deny_unknown_fields, default)]
pub struct SplitVerifyConfig {
    /// Controlled-split coefficient lambda as `p/q` [default: 3/5].
    #[arg(long)]
    pub lambda: Option<String>,
    /// Fat Cantor fraction alpha as `p/q` [default: 3/4].
    #[arg(long)]
    pub alpha: Option<String>,
    /// Kept-fraction split point theta as `p/q` [default: 9/10].
    #[arg(long)]
    pub theta: Option<String>,
    /// Placements to materialize beyond placement 0 [default: 8].
    #[arg(long)]
    pub placements: Option<u64>,
    /// Override floor coefficient for the controlled-split check
    /// [default: the set's lambda].
    #[arg(long)]
    pub floor: Option<String>,
    /// Denominator of the dyadic time grid [default: 1024].
    #[arg(long)]
    pub grid_den: Option<u32>,
    /// Number of grid points `k/grid_den`, k = 1.. [default: 10*grid_den].
    #[arg(long)]
    pub grid_count: Option<u32>,
    /// How many enumerated intervals get a splitting check [default: 50].
    #[arg(long)]
    pub intervals: Option<u64>,
    /// Highest enumeration index materialized while hunting witnesses
    /// [default: max(placements, intervals)].
    #[arg(long)]
    pub budget: Option<u64>,
    #[arg(skip)]
    pub depth: Option<u32>,
}

impl Overlay for SplitVerifyConfig {
    fn overlay(mut self, flags: &Self) -> Self {
        overlay_options!(
            self,
            flags,
            [lambda, alpha, theta, placements, floor, grid_den, grid_count, intervals, budget, depth]
        );
        self
    }
}

#[derive(Debug)]
pub struct SplitVerifyParams {
    pub set: SetParams,
    pub floor: Option<Rational>,
    pub grid_den: u32,
    pub grid_count: u32,
    pub intervals: u64,
    pub budget: u64,
    pub depth: u32,
}

impl SplitVerifyConfig {
    pub fn resolve(&self, default_depth: u32) -> Result<SplitVerifyParams> {
        let set = SetParams::resolve(
            self.lambda.as_deref(),
            self.alpha.as_deref(),
            self.theta.as_deref(),
            self.placements,
            8,
        )?;
        let floor = self
            .floor
            .as_deref()
            .map(|s| parse_rational_field("floor", s))
            .transpose()?;
        let grid_den = self.grid_den.unwrap_or(1024);
        let grid_count = self.grid_count.unwrap_or(10 * grid_den);
        if grid_den == 0 || grid_count == 0 {
            return Err(bad_field("grid_den/grid_count", "must be positive"));
        }
        let intervals = self.intervals.unwrap_or(50);
        let budget = self.budget.unwrap_or(set.placements.max(intervals));
        Ok(SplitVerifyParams {
            set,
            floor,
            grid_den,
            grid_count,
            intervals,
            budget,
            depth: self.depth.unwrap_or(default_depth),
        })
    }
}

// ---------------------------------------------------------------------
// increase
// ---------------------------------------------------------------------

#[derive(Args, Deserialize, Clone, Default, Debug)]
#[serde(deny_unknown_fields, default)]
pub struct IncreaseConfig {
    /// Controlled-split coefficient lambda as `p/q` [default: 3/5].
    #[arg(long)]
    pub lambda: Option<String>,
    /// Fat Cantor fraction alpha as `p/q` [default: 3/4].
    #[arg(long)]
    pub alpha: Option<String>,
    /// Kept-fraction split point theta as `p/q` [default: 9/10].
    #[arg(long)]
    pub theta: Option<String>,
    /// Placements to materialize beyond placement 0 [default: 8].
    #[arg(long)]
    pub placements: Option<u64>,
    /// Guaranteed linear growth rate along the orbit [default: 1.0].
    #[arg(long)]
    pub rate: Option<f64>,
    /// Denominator of the time grid [default: 64].
    #[arg(long)]
    pub grid_den: Option<u32>,
    /// Number of grid points `k/grid_den`, k = 1.. [default: 10*grid_den].
    #[arg(long)]
    pub grid_count: Option<u32>,
    #[arg(skip)]
    pub depth: Option<u32>,
}

impl Overlay for IncreaseConfig {
    fn overlay(mut self, flags: &Self) -> Self {
        overlay_options!(
            self,
            flags,
            [lambda, alpha, theta, placements, rate, grid_den, grid_count, depth]
        );
        self
    }
}

#[derive(Debug)]
pub struct IncreaseParams {
    pub set: SetParams,
    pub rate: f64,
    pub grid_den: u32,
    pub grid_count: u32,
    pub depth: u32,
}

impl IncreaseConfig {
    pub fn resolve(&self, default_depth: u32) -> Result<IncreaseParams> {
        let rate = positive_finite("rate", self.rate.unwrap_or(1.0))?;
        let grid_den = self.grid_den.unwrap_or(64);
        let grid_count = self.grid_count.unwrap_or(10 * grid_den);
        if grid_den == 0 || grid_count == 0 {
            return Err(bad_field("grid_den/grid_count", "must be positive"));
        }
        Ok(IncreaseParams {
            set: SetParams::resolve(
                self.lambda.as_deref(),
                self.alpha.as_deref(),
                self.theta.as_deref(),
                self.placements,
                8,
            )?,
            rate,
            grid_den,
            grid_count,
            depth: self.depth.unwrap_or(default_depth),
        })
    }
}

// ---------------------------------------------------------------------
// periodic
// ---------------------------------------------------------------------

#[derive(Args, Deserialize, Clone, Default, Debug)]
#[serde(deny_unknown_fields, default)]
pub struct PeriodicConfig {
    /// Controlled-split coefficient lambda as `p/q` [default: 3/5].
    #[arg(long)]
    pub lambda: Option<String>,
    /// Fat Cantor fraction alpha as `p/q` [default: 3/4].
    #[arg(long)]
    pub alpha: Option<String>,
    /// Kept-fraction split point theta as `p/q` [default: 9/10].
    #[arg(long)]
    pub theta: Option<String>,
    /// Placements to materialize beyond placement 0 [default: 0].
    #[arg(long)]
    pub placements: Option<u64>,
    /// Saturation level M [default: 2.5].
    #[arg(long)]
    pub m: Option<f64>,
    /// Box radius b, 0 < b < M/2 [default: 1.0].
    #[arg(long)]
    pub b: Option<f64>,
    /// Number of sampled times [default: 10000].
    #[arg(long)]
    pub samples: Option<u32>,
    /// Sample times uniformly at random from [0, 2π) with this seed
    /// instead of the uniform grid.
    #[arg(long)]
    pub seed: Option<u64>,
    #[arg(skip)]
    pub depth: Option<u32>,
}

impl Overlay for PeriodicConfig {
    fn overlay(mut self, flags: &Self) -> Self {
        overlay_options!(
            self,
            flags,
            [lambda, alpha, theta, placements, m, b, samples, seed, depth]
        );
        self
    }
}

#[derive(Debug)]
pub struct PeriodicParams {
    pub set: SetParams,
    pub m: f64,
    pub b: f64,
    pub samples: u32,
    pub seed: Option<u64>,
    pub depth: u32,
}

impl PeriodicConfig {
    pub fn resolve(&self, default_depth: u32) -> Result<PeriodicParams> {
        let m = positive_finite("m", self.m.unwrap_or(2.5))?;
        let b = positive_finite("b", self.b.unwrap_or(1.0))?;
        if b >= m / 2.0 {
            return Err(bad_field("b", format!("must satisfy b < M/2 = {}", m / 2.0)));
        }
        let samples = self.samples.unwrap_or(10_000);
        if samples == 0 {
            return Err(bad_field("samples", "must be positive"));
        }
        Ok(PeriodicParams {
            set: SetParams::resolve(
                self.lambda.as_deref(),
                self.alpha.as_deref(),
                self.theta.as_deref(),
                self.placements,
                0,
            )?,
            m,
            b,
            samples,
            seed: self.seed,
            depth: self.depth.unwrap_or(default_depth),
        })
    }
}

// ---------------------------------------------------------------------
// sgd
// ---------------------------------------------------------------------

#[derive(Args, Deserialize, Clone, Default, Debug)]
#[serde(deny_unknown_fields, default)]
pub struct SgdConfig {
    /// Controlled-split coefficient lambda as `p/q` [default: 3/5].
    #[arg(long)]
    pub lambda: Option<String>,
    /// Fat Cantor fraction alpha as `p/q` [default: 3/4].
    #[arg(long)]
    pub alpha: Option<String>,
    /// Kept-fraction split point theta as `p/q` [default: 9/10].
    #[arg(long)]
    pub theta: Option<String>,
    /// Placements to materialize beyond placement 0 [default: 0].
    #[arg(long)]
    pub placements: Option<u64>,
    /// Damping coefficient delta [default: 1.0].
    #[arg(long)]
    pub delta: Option<f64>,
    /// Saturation level M [default: (√π + 1)/2 · delta, the smallest
    /// admissible].
    #[arg(long)]
    pub m: Option<f64>,
    /// Harmonic step coefficient: t_n = c/n [default: 1.0].
    #[arg(long)]
    pub c: Option<f64>,
    /// Number of iteration steps [default: 1000000].
    #[arg(long)]
    pub steps: Option<usize>,
    /// Initial point as `x,y,z,w` [default: 1,0,0,1].
    #[arg(long)]
    pub start: Option<String>,
    /// Keep every stride-th CSV row [default: 1000].
    #[arg(long)]
    pub csv_stride: Option<usize>,
    /// Trailing window for the accumulation summary [default: 1000].
    #[arg(long)]
    pub window: Option<usize>,
    /// Also emit certified function-value brackets along the kept CSV rows.
    #[arg(long, action = clap::ArgAction::SetTrue)]
    #[serde(default)]
    pub with_values: bool,
    #[arg(skip)]
    pub depth: Option<u32>,
}

impl Overlay for SgdConfig {
    fn overlay(mut self, flags: &Self) -> Self {
        overlay_options!(
            self,
            flags,
            [lambda, alpha, theta, placements, delta, m, c, steps, start, csv_stride, window, depth]
        );
        if flags.with_values {
            self.with_values = true;
        }
        self
    }
}

#[derive(Debug)]
pub struct SgdParams {
    pub set: SetParams,
    pub delta: f64,
    pub m: f64,
    pub c: f64,
    pub steps: usize,
    pub start: [f64; 4],
    pub csv_stride: usize,
    pub window: usize,
    pub with_values: bool,
    pub depth: u32,
}

impl SgdConfig {
    pub fn resolve(&self, default_depth: u32) -> Result<SgdParams> {
        let delta = positive_finite("delta", self.delta.unwrap_or(1.0))?;
        let m = match self.m {
            Some(v) => positive_finite("m", v)?,
            None => delta * (PI.sqrt() + 1.0) / 2.0,
        };
        let c = positive_finite("c", self.c.unwrap_or(1.0))?;
        let steps = self.steps.unwrap_or(1_000_000);
        if steps == 0 {
            return Err(bad_field("steps", "must be positive"));
        }
        let start = parse_start(self.start.as_deref().unwrap_or("1,0,0,1"))?;
        Ok(SgdParams {
            set: SetParams::resolve(
                self.lambda.as_deref(),
                self.alpha.as_deref(),
                self.theta.as_deref(),
                self.placements,
                0,
            )?,
            delta,
            m,
            c,
            steps,
            start,
            csv_stride: self.csv_stride.unwrap_or(1000).max(1),
            window: self.window.unwrap_or(1000),
            with_values: self.with_values,
            depth: self.depth.unwrap_or(default_depth),
        })
    }
}

fn parse_start(text: &str) -> Result<[f64; 4]> {
    let parts: Vec<&str> = text.split(',').map(str::trim).collect();
    if parts.len() != 4 {
        return Err(bad_field(
            "start",
            format!("need 4 comma-separated coordinates, got `{text}`"),
        ));
    }
    let mut out = [0.0f64; 4];
    for (slot, part) in out.iter_mut().zip(&parts) {
        *slot = part
            .parse::<f64>()
            .map_err(|_| bad_field("start", format!("bad coordinate `{part}`")))?;
        if !slot.is_finite() {
            return Err(bad_field("start", format!("coordinate `{part}` is not finite")));
        }
    }
    Ok(out)
}
