use thiserror::Error;

/// Crate-wide error type. Variants are grouped by how a caller should
/// classify them: construction errors (bad parameters), validation errors
/// (data violates a structural invariant), and parse errors (malformed
/// textual input).
#[derive(Debug, Error)]
pub enum Error {
    #[error("{0} is not prime")]
    NotPrime(u32),

    #[error("extension degree {0} outside supported range 1..=4")]
    DegreeOutOfRange(usize),

    #[error("field order p^n = {0} exceeds 256")]
    FieldTooLarge(u64),

    #[error("rank r = {0} outside supported range 1..=4")]
    RankOutOfRange(usize),

    #[error("cannot invert zero")]
    DivisionByZero,

    #[error("scalar coefficient {value} not reduced modulo {p}")]
    ScalarNotReduced { value: u32, p: u32 },

    #[error("generator matrices {i} and {j} do not commute")]
    NonCommuting { i: usize, j: usize },

    #[error("generator matrix {i} is not p-nilpotent")]
    NotNilpotent { i: usize },

    #[error("expected {expected} generator matrices, got {got}")]
    WrongGeneratorCount { expected: usize, got: usize },

    #[error("generator matrix {i} is {rows}x{cols}, expected {dim}x{dim}")]
    WrongGeneratorShape {
        i: usize,
        rows: usize,
        cols: usize,
        dim: usize,
    },

    #[error("matrix does not commute with the action of generator {0}")]
    NotLinear(usize),

    #[error("matrix shape does not match the modules it connects")]
    MapShapeMismatch,

    #[error("field contexts differ")]
    FieldMismatch,

    #[error("algebra contexts differ")]
    AlgebraMismatch,

    #[error("zero class has no degree: {0}")]
    ZeroClass(&'static str),

    #[error("class mixes cohomological degrees {0} and {1}")]
    MixedDegree(usize, usize),

    #[error("class degree must be at least 1")]
    DegreeZeroClass,

    #[error("parse error at byte {pos}: {msg}")]
    Parse { pos: usize, msg: String },

    #[error("invalid module file: {0}")]
    InvalidModuleFile(String),

    #[error("projective point must be nonzero")]
    ZeroPoint,

    #[error("{0}")]
    Unsupported(String),
}

impl Error {
    pub fn parse(pos: usize, msg: impl Into<String>) -> Self {
        Error::Parse {
            pos,
            msg: msg.into(),
        }
    }

    /// Process exit code class for command line front ends: 3 for parse
    /// errors, 4 for structural invariant violations in otherwise
    /// well-formed input, 2 for everything else (failed mathematical
    /// preconditions).
    pub fn exit_code(&self) -> i32 {
        match self {
            Error::Parse { .. } | Error::InvalidModuleFile(..) => 3,
            Error::NonCommuting { .. }
            | Error::NotNilpotent { .. }
            | Error::WrongGeneratorCount { .. }
            | Error::WrongGeneratorShape { .. }
            | Error::NotLinear(..)
            | Error::ScalarNotReduced { .. } => 4,
            _ => 2,
        }
    }
}

pub type Result<T> = std::result::Result<T, Error>;
