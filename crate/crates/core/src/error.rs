use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("matrix is {rows}x{cols}, expected a square matrix")]
    NonSquare { rows: usize, cols: usize },

    #[error("dimension mismatch: {0}")]
    DimensionMismatch(String),

    #[error("ragged matrix: row {row} has {found} entries, expected {expected}")]
    RaggedRows { row: usize, found: usize, expected: usize },

    #[error("braid letter {letter} is out of range for {strands} strands")]
    LetterOutOfRange { letter: i64, strands: usize },

    #[error("braid must have at least one strand")]
    NoStrands,

    #[error("operation requires a {expected}-strand braid, got {found} strands")]
    WrongStrandCount { expected: usize, found: usize },

    #[error("monodromy-level analysis supports at most 3 strands, got {0}")]
    UnsupportedStrands(usize),

    #[error("invalid page: genus {genus}, {boundary} boundary components")]
    InvalidPage { genus: u32, boundary: u32 },

    #[error("monodromy does not match page {0}")]
    MonodromyMismatch(String),

    #[error("operation requires a connected binding, page has {0} boundary components")]
    DisconnectedBinding(u32),

    #[error("exponent r{index} is zero; the monodromy does not give a Seifert fibration")]
    ZeroExponent { index: usize },

    #[error("parse error: {0}")]
    Parse(String),
}

pub type Result<T> = std::result::Result<T, Error>;
