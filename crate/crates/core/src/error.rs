use thiserror::Error;

#[derive(Debug, Error)]
pub enum Error {
    #[error("argument {arg} = {value} is outside the domain {domain}")]
    OutOfDomain {
        arg: &'static str,
        value: f64,
        domain: String,
    },

    #[error("value {value} is outside the range of the function ({range})")]
    OutOfRange { value: f64, range: String },

    #[error("bracket [{lo}, {hi}] does not straddle target {target} (g(lo) = {g_lo}, g(hi) = {g_hi})")]
    BracketDoesNotStraddle {
        lo: f64,
        hi: f64,
        g_lo: f64,
        g_hi: f64,
        target: f64,
    },

    #[error("non-finite evaluation at {at}")]
    NonFinite { at: f64 },

    #[error("quadrature did not converge after {levels} refinement levels on [{lo}, {hi}]")]
    NonConvergence { lo: f64, hi: f64, levels: u32 },

    #[error("head integral does not converge at log2 t = {log2_t} (truncated ratio {partial} after {span} binary decades)")]
    Divergent {
        log2_t: f64,
        partial: f64,
        span: f64,
    },

    #[error("empty grid")]
    EmptyGrid,

    #[error("derivative unavailable at u = {u}: {reason}")]
    DerivativeUnavailable { u: f64, reason: String },

    #[error("truncation K = {k} is insufficient: {needed}")]
    TruncationInsufficient { k: u32, needed: String },

    #[error("negative measure {0}")]
    NegativeMeasure(f64),

    #[error("non-positive value {value} at log2 t = {log2_t}")]
    NonPositive { log2_t: f64, value: f64 },

    #[error("no valid bracket: {0}")]
    DomainViolation(String),

    #[error("invalid input: {0}")]
    Invalid(String),

    #[error(transparent)]
    Io(#[from] std::io::Error),

    #[error(transparent)]
    Csv(#[from] csv::Error),

    #[error(transparent)]
    Json(#[from] serde_json::Error),
}

pub type Result<T, E = Error> = std::result::Result<T, E>;

pub(crate) fn invalid(msg: impl Into<String>) -> Error {
    Error::Invalid(msg.into())
}
