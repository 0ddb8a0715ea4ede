use thiserror::Error;

/// Every failure the library can report.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("invalid base M_{{{g},{n}}}: {reason}")]
    InvalidBase { g: u32, n: u32, reason: &'static str },

    #[error("invalid boundary index ({i}, {set:?}) on M_{{{g},{n}}}")]
    InvalidBoundary { g: u32, n: u32, i: i64, set: Vec<u32> },

    #[error("base mismatch: M_{{{0},{1}}} vs M_{{{2},{3}}}")]
    BaseMismatch(u32, u32, u32, u32),

    #[error("genus-2 normalization requested on genus {0}")]
    NotGenus2(u32),

    #[error("unknown test curve `{0}`")]
    UnknownCurve(String),

    #[error("parameter out of range: {0}")]
    ParamOutOfRange(String),

    #[error("invalid map: {0}")]
    InvalidMap(String),

    #[error("zero profile too long: genus {g} with {rho} entries")]
    ProfileTooLong { g: u32, rho: usize },

    #[error("expected {expected} entries, got {got}")]
    ArityMismatch { expected: usize, got: usize },

    #[error("residue polynomial parameters out of range: j={j}, k={k}, m={m}")]
    OutOfRange { j: i64, k: i64, m: i64 },

    #[error("the zero polynomial has no finite root count")]
    ZeroPolynomial,

    #[error("genus {g} too small, need at least {min}")]
    GenusTooSmall { g: u32, min: u32 },

    #[error("bad weights: {0}")]
    BadWeights(String),

    #[error("unsupported weights: {0}")]
    UnsupportedWeights(String),

    #[error("unsupported pole profile: {0}")]
    UnsupportedPole(String),

    #[error("spin parity unavailable: {0}")]
    ParityUnavailable(String),

    #[error("unknown relation `{0}`")]
    UnknownRelation(String),

    #[error("unknown class `{0}`")]
    UnknownClass(String),

    #[error("boundary tiling failed for {ctor} at δ_{{{i}:{set:?}}}: {matches} regimes matched")]
    Tiling { ctor: &'static str, i: u32, set: Vec<u32>, matches: usize },

    #[error("parse error: {0}")]
    Parse(String),
}

pub type Result<T> = std::result::Result<T, Error>;
