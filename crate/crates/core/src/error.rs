use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

/// Every failure the library reports.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("non-invertible series")]
    NonInvertible,

    #[error("{}", no_root_message(*.index))]
    NoRationalRoot { index: u64 },

    #[error("insufficient precision: q^{exponent} requested but the series is only known modulo q^{truncation}")]
    InsufficientPrecision { exponent: String, truncation: String },

    #[error("divergent product: start {start} and step {step} must both be positive")]
    DivergentProduct { start: String, step: String },

    #[error("index {index} out of range 1..={max} for level {level}")]
    IndexOutOfRange { index: i64, max: i64, level: i64 },

    #[error("pole in bilateral sum: residue {residue} modulo {period}")]
    PoleInBilateralSum { residue: i64, period: i64 },

    #[error("invalid argument: {0}")]
    InvalidArgument(String),

    #[error("unknown symbol `{0}`")]
    UnknownSymbol(String),

    #[error("cross-check failed: {0}")]
    CrossCheck(String),

    #[error("{divisor} does not divide the level {level}")]
    NotADivisor { divisor: i64, level: i64 },

    #[error("no relation at this degree bound")]
    NoRelation,

    #[error("insufficient truncation: expansions must be known through q^{required}")]
    InsufficientTruncation { required: i64 },

    #[error("pole orders {m} and {n} are not coprime")]
    NotCoprime { m: i64, n: i64 },

    #[error("unassigned variable {0}")]
    UnassignedVariable(String),

    #[error("not divisible: remainder has leading monomial {0}")]
    NotDivisible(String),

    #[error("polynomial has degree 0 in {0}")]
    DegreeZero(String),

    #[error("factorization inconsistent with series")]
    FactorizationInconsistent,

    #[error("point outside domain: {0}")]
    OutsideDomain(String),

    #[error("matrix {0} is not in Gamma0({1})")]
    NotInGamma0(String, i64),

    #[error("syntax error at {line}:{column}: expected {expected}, found {found}")]
    Syntax {
        line: usize,
        column: usize,
        expected: String,
        found: String,
    },

    #[error("while evaluating `{expr}`: {source}")]
    Eval { expr: String, source: Box<Error> },
}

fn no_root_message(index: u64) -> String {
    match index {
        2 => "no rational square root".to_string(),
        k => format!("no rational {k}-th root"),
    }
}
