use thiserror::Error;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Error)]
pub enum Error {
    #[error("matrix is {rows}x{cols}, expected a square matrix")]
    NonSquare { rows: usize, cols: usize },

    #[error("shape mismatch: {0}")]
    Shape(String),

    #[error("index {index} out of range for dimension {len}")]
    IndexOutOfRange { index: usize, len: usize },

    #[error("no value assigned to variable `{0}`")]
    MissingVariable(&'static str),

    #[error("unknown variable `{0}`")]
    UnknownVariable(String),

    #[error("division is not exact")]
    InexactDivision,

    #[error("division by zero")]
    DivisionByZero,

    #[error("invalid ASM: {0}")]
    InvalidAsm(String),

    #[error("invalid DPP: {0}")]
    InvalidDpp(String),

    #[error("invalid six-vertex configuration: {0}")]
    InvalidSvConfig(String),

    #[error("invalid path family: {0}")]
    InvalidPathFamily(String),

    #[error("degenerate parameters: {0}")]
    Degenerate(String),

    #[error("{what}: n = {n} exceeds the configured cap {cap}")]
    CapExceeded { what: &'static str, n: usize, cap: usize },

    #[error("invalid argument: {0}")]
    InvalidArgument(String),

    #[error("malformed input: {0}")]
    Parse(String),

    #[error(transparent)]
    Json(#[from] serde_json::Error),
}
