use alloc::string::String;

/// Errors raised by constructors and operators.
#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum Error {
    #[error("invalid rational literal `{0}`")]
    ParseRational(String),
    #[error("decimal literal `{0}` is not accepted; write it as a fraction such as `3/2`")]
    DecimalLiteral(String),
    #[error("zero denominator in `{0}`")]
    ZeroDenominator(String),
    #[error("invalid extended real `{0}`")]
    ParseExtReal(String),
    #[error("malformed piece: {0}")]
    MalformedPiece(String),
    #[error("invalid interval: lower bound {lo} exceeds upper bound {hi}")]
    InvalidInterval { lo: String, hi: String },
    #[error("negative null element parameter {0}")]
    NegativeOmega(String),
    #[error("box radius range must lie in [0, inf): {0}")]
    NegativeRadius(String),
    #[error("null decomposition requires 0 <= k <= radius (k = {k}, radius = {radius})")]
    DecompositionOutOfRange { k: String, radius: String },
    #[error("no self-decomposition: k0 = {k0} exceeds k = {k}")]
    NoSelfDecomposition { k: String, k0: String },
    #[error("ball radius must be positive, got {0}")]
    NonPositiveEpsilon(String),
    #[error("sphere radius must be non-negative, got {0}")]
    NegativeEpsilon(String),
    #[error("grid mismatch: {0}")]
    GridMismatch(String),
    #[error("law {law} expects {expected}, got {got}")]
    Arity { law: &'static str, expected: String, got: String },
    #[error("law {law}: {reason}")]
    LawPrecondition { law: &'static str, reason: String },
    #[error("scalar sequence must be non-empty")]
    EmptyScalars,
    #[error("unknown {what} `{value}`")]
    Unknown { what: &'static str, value: String },
}
