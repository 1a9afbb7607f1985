use thiserror::Error;

/// Crate-wide error type.
#[derive(Debug, Error)]
pub enum Error {
    /// An interval constructor received `lo >= hi`.
    #[error("empty interval: lo = {lo} must be strictly below hi = {hi}")]
    EmptyInterval { lo: String, hi: String },

    /// A bracket constructor received `lower > upper`.
    #[error("inverted bracket: lower = {lower} exceeds upper = {upper}")]
    InvertedBracket { lower: String, upper: String },

    /// A parameter fell outside its admissible range.
    #[error("parameter `{name}` out of range: {detail}")]
    ParameterOutOfRange { name: &'static str, detail: String },

    /// A construction hypothesis (the admissibility conditions tying
    /// lambda, alpha and theta together) failed.
    #[error("construction hypothesis violated: {0}")]
    HypothesisViolated(String),

    /// A query point or interval lies outside the represented domain.
    #[error("query outside the represented domain: {0}")]
    OutOfDomain(String),

    /// Enumeration indices start at 1.
    #[error("enumeration index must be >= 1, got {0}")]
    EnumerationIndex(u64),

    /// No free gap is resolved inside the requested interval at the given
    /// depth; the caller must refine deeper.
    #[error("no gap resolved inside {interval} at depth {depth}")]
    GapNotResolved { interval: String, depth: u32 },

    /// A step schedule contained a nonpositive step.
    #[error("invalid step schedule: {0}")]
    InvalidSchedule(String),

    /// The discrete iteration exceeded its closed-form radius cap. The
    /// iterates are provably bounded, so this signals an implementation bug.
    #[error("internal error: radius {radius} exceeded closed-form bound {bound} at step {step}")]
    RunawayRadius { step: usize, radius: f64, bound: f64 },

    /// A serialized document failed validation.
    #[error("invalid document: {0}")]
    InvalidDocument(String),

    #[error(transparent)]
    Json(#[from] serde_json::Error),
}

pub type Result<T> = std::result::Result<T, Error>;
