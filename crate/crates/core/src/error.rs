use thiserror::Error;

/// Errors raised by the partition, rewriting, group and tied-word layers.
#[derive(Error, Debug, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("ground size {n} is out of range ({reason})")]
    GroundSize { n: usize, reason: &'static str },
    #[error("element {0} is not in the ground set")]
    ElementOutOfRange(i32),
    #[error("operands live on different ground sets")]
    GroundMismatch,
    #[error("invalid set partition: {0}")]
    InvalidPartition(String),
    #[error("{op} requires {required}")]
    WrongClass {
        op: &'static str,
        required: &'static str,
    },
    #[error("words are over different alphabets")]
    AlphabetMismatch,
    #[error("{0} does not divide the word")]
    NotDivisible(String),
    #[error("rewrite system is not reduced: {0}")]
    NotReduced(String),
    #[error("rewrite system lacks a squaring rule for {0}; irreducible set would be infinite")]
    MissingSquaringRule(String),
    #[error("generator index {index} out of range for {family}")]
    GeneratorIndex { family: String, index: i32 },
    #[error("group elements belong to different groups")]
    GroupMismatch,
    #[error("invalid permutation: {0}")]
    InvalidPermutation(String),
    #[error("letter {letter} is not legal in {family}")]
    IllegalLetter { letter: String, family: String },
    #[error("tied elements belong to different families")]
    FamilyMismatch,
    #[error("parse error at token {position}: {message}")]
    Parse { position: usize, message: String },
    #[error("size cap of {cap} elements exceeded")]
    SizeCap { cap: usize },
    #[error("{0}")]
    Usage(String),
}

pub type Result<T> = std::result::Result<T, Error>;

pub(crate) fn parse_err(position: usize, message: impl Into<String>) -> Error {
    Error::Parse {
        position,
        message: message.into(),
    }
}
