use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("lambda must be nonzero")]
    ZeroLambda,

    #[error("companion array needs b1 = d*a1 - c, but b1 = {b1} and d*a1 - c = {expected}")]
    Compatibility { b1: String, expected: String },

    #[error("polynomial of degree {degree} cannot be lifted at order {n}")]
    DegreeTooHigh { degree: usize, n: usize },

    #[error("series {op} needs constant term {required}, found {found}")]
    SeriesConstantTerm {
        op: &'static str,
        required: &'static str,
        found: String,
    },

    #[error("row {n} requested but triangle only has rows 0..={depth}")]
    RowOutOfRange { n: usize, depth: usize },

    #[error("parameter {0} must be nonzero")]
    ZeroParameter(&'static str),

    #[error("{0}")]
    Hypothesis(String),

    #[error("sigma must be -1, 0 or 1, got {0}")]
    InvalidSigma(i64),

    #[error("zero polynomial has no root structure")]
    ZeroPolynomial,

    #[error("polynomial {0} does not have only real zeros")]
    NotRealRooted(String),

    #[error("unknown preset {0:?}")]
    UnknownPreset(String),

    #[error("unknown target {0:?}")]
    UnknownTarget(String),

    #[error("target {target} cannot run on scope {scope}: {reason}")]
    Incompatible {
        target: String,
        scope: String,
        reason: String,
    },

    #[error("{what} accepts n in {min}..={max}, got {n}")]
    OracleRange {
        what: &'static str,
        n: usize,
        min: usize,
        max: usize,
    },

    #[error("preset {0} has no enumeration oracle")]
    NoOracle(String),

    #[error("parse error: {0}")]
    Parse(String),
}

pub type Result<T> = std::result::Result<T, Error>;
