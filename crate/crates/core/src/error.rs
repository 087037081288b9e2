use thiserror::Error;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("sequences must have at least one entry")]
    EmptySequence,

    #[error("length mismatch: {left} vs {right}")]
    LengthMismatch { left: usize, right: usize },

    #[error("expected an even length, got {0}")]
    OddLength(usize),

    #[error("expected an odd length, got {0}")]
    EvenLength(usize),

    #[error("entry {index} is not +1 or -1")]
    NotPlusMinus { index: usize },

    #[error("doubled coordinates {0:?} do not describe a Hurwitz quaternion")]
    NotHurwitz([i64; 4]),

    #[error("shift {shift} is outside 0..={max}")]
    ShiftOutOfRange { shift: i64, max: usize },

    #[error("a sequence set must not be empty")]
    EmptySet,

    #[error("bad dimensions: {0}")]
    Dimension(String),

    #[error("lengths {left} and {right} are not coprime")]
    NotCoprime { left: usize, right: usize },

    #[error("{construction}: input fails `{predicate}`")]
    Precondition {
        construction: &'static str,
        predicate: String,
    },

    #[error("{construction}: output failed re-verification of `{predicate}`")]
    VerificationFailed {
        construction: &'static str,
        predicate: String,
    },

    #[error("entry {index} lies outside the {alphabet} alphabet")]
    OutsideAlphabet {
        index: usize,
        alphabet: &'static str,
    },

    #[error("parse error at column {column}: {message}")]
    Parse { column: usize, message: String },

    #[error("search refused: {0}")]
    SearchBounds(String),
}
