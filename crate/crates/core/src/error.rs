use thiserror::Error;

/// What went wrong while reading a word.
#[derive(Clone, Debug, PartialEq, Eq, Error)]
pub enum ParseErrorKind {
    #[error("unexpected character")]
    UnexpectedChar,
    #[error("unexpected end of input")]
    UnexpectedEnd,
    #[error("malformed exponent")]
    BadExponent,
    #[error("letter does not belong to case {expected}")]
    WrongLetter { expected: &'static str },
    #[error("letters of both cases are mixed")]
    MixedLetters,
    #[error("vanishing syllable")]
    VanishingSyllable,
    #[error("trivial word")]
    TrivialWord,
    #[error("word reduces to a single syllable and is not a relator")]
    SingleSyllable,
    #[error("expanded word is too long")]
    TooLong,
    #[error("unbalanced parentheses")]
    Unbalanced,
}

/// A malformed word, with the byte offset and token where reading stopped.
#[derive(Clone, Debug, PartialEq, Eq, Error)]
#[error("{kind} at position {position} (token {token:?})")]
pub struct ParseError {
    pub position: usize,
    pub token: String,
    pub kind: ParseErrorKind,
}

#[derive(Debug, Error)]
pub enum Error {
    #[error(transparent)]
    Parse(#[from] ParseError),
    #[error("unsupported factor orders ({p},{q}); only (2,3) and (3,3) are supported")]
    UnsupportedSpec { p: u32, q: u32 },
    #[error("exponent {exp} out of range for a factor of order {order}")]
    BadExponent { exp: u32, order: u8 },
    #[error("syllables do not alternate between the two factors")]
    NotAlternating,
    #[error("word is not cyclically reduced")]
    NotCyclicallyReduced,
    #[error("word must start with a (xy)-run and end with a (xy^2)-run; rotate it first")]
    NotRotationNormal,
    #[error("pair list entries must be positive and of even length")]
    BadPairList,
    #[error("word has a first-factor syllable with exponent 2; no pair list exists")]
    NoPairList,
    #[error("lift needs an even number of syllable pairs, got {0}")]
    OddPairLength(usize),
    #[error("expected a word over {expected}, got {got}")]
    WrongCase { expected: &'static str, got: &'static str },
    #[error("{0} is not a subword of the relator")]
    NotASubword(String),
    #[error("invalid target form: {0}")]
    BadTargetForm(String),
    #[error("invalid subdivision: {0}")]
    BadSubdivision(String),
    #[error("certificate failure: {0}")]
    Certificate(String),
    #[error("checkpoint: {0}")]
    Checkpoint(String),
    #[error(transparent)]
    Io(#[from] std::io::Error),
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
