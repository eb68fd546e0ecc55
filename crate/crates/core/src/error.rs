use thiserror::Error;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("unsupported vertex length {0} (must be 1..=24)")]
    UnsupportedLength(usize),
    #[error("bits {bits:#x} do not fit in length {length}")]
    BitsOutOfRange { length: usize, bits: u32 },
    #[error("length mismatch: expected {expected}, found {found}")]
    LengthMismatch { expected: usize, found: usize },
    #[error("coordinate {coord} out of range 1..={length}")]
    CoordinateOutOfRange { coord: usize, length: usize },
    #[error("radius {radius} out of range 0..={length}")]
    RadiusOutOfRange { radius: usize, length: usize },
    #[error("Krawtchouk arguments out of range: m={m}, k={k}, x={x}")]
    KrawtchoukArgs { m: usize, k: usize, x: usize },
    #[error("parse error: {0}")]
    Parse(String),
    #[error("empty code")]
    EmptyCode,
    #[error("no Golay codeword meets J* in {{{i}, 8}}")]
    MissingCosetRepresentative { i: usize },
    #[error("input is not a [24,12,8] Golay code: {0}")]
    NotGolay(String),
    #[error("invalid projection: {0}")]
    InvalidProjection(String),
    #[error("design words have mixed weights {0} and {1}")]
    MixedWeights(usize, usize),
    #[error("design strength {t} exceeds block weight {k}")]
    DesignStrength { t: usize, k: usize },
    #[error("invalid design parameters: {0}")]
    DesignParams(String),
    #[error("minimum distance {delta} must exceed strength {t}")]
    BoundArgs { delta: usize, t: usize },
    #[error("invalid distribution template: {0}")]
    Template(String),
    #[error("unknown {0} is not bounded above by any constraint row")]
    Unbounded(String),
    #[error("search space of {0} points is too large to enumerate")]
    SearchSpaceTooLarge(String),
    #[error("permutation does not stabilize the projection coordinates")]
    MovesProjection,
    #[error("invalid permutation: {0}")]
    InvalidPermutation(String),
    #[error("backtrack node budget of {0} exceeded")]
    BudgetExceeded(u64),
    #[error("generator {index} does not stabilize the code")]
    NotStabilizing { index: usize },
    #[error("unknown code name {0:?}")]
    UnknownCode(String),
    #[error("i/o error: {0}")]
    Io(String),
}

impl From<std::io::Error> for Error {
    fn from(e: std::io::Error) -> Self {
        Error::Io(e.to_string())
    }
}
