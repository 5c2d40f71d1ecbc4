use thiserror::Error;

/// Errors raised by the library.
///
/// Parse errors carry a 1-based line and column pointing into the input text.
#[derive(Error, Debug, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("alphabet mismatch: {0}")]
    AlphabetMismatch(String),

    #[error("invalid generator name {0:?}")]
    InvalidGeneratorName(String),

    #[error("letter refers to generator index {index}, but the alphabet has rank {rank}")]
    GeneratorOutOfRange { index: usize, rank: usize },

    #[error("expected {expected} image words, got {found}")]
    ImageCount { expected: usize, found: usize },

    #[error("{line}:{column}: {kind}")]
    Parse {
        line: usize,
        column: usize,
        kind: ParseErrorKind,
    },

    #[error("epsilon {epsilon} is outside the admissible range (0, {bound})")]
    EpsilonOutOfRange { epsilon: String, bound: String },

    #[error("integer overflow in {0}")]
    Overflow(&'static str),
}

#[derive(Error, Debug, Clone, PartialEq, Eq)]
pub enum ParseErrorKind {
    #[error("unknown generator {0:?}")]
    UnknownGenerator(String),
    #[error("duplicate generator {0:?}")]
    DuplicateGenerator(String),
    #[error("invalid generator name {0:?}")]
    InvalidGeneratorName(String),
    #[error("missing image for generator {0:?} in {1}")]
    MissingImage(String, &'static str),
    #[error("image for generator {0:?} given twice in {1}")]
    DuplicateImage(String, &'static str),
    #[error("malformed exponent: {0}")]
    MalformedExponent(String),
    #[error("missing `generators:` line")]
    MissingGenerators,
    #[error("`generators:` given twice")]
    DuplicateGeneratorsLine,
    #[error("expected {0}")]
    Expected(&'static str),
    #[error("empty word (write `1` for the identity)")]
    EmptyWord,
}

impl Error {
    pub(crate) fn parse(line: usize, column: usize, kind: ParseErrorKind) -> Self {
        Error::Parse { line, column, kind }
    }
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
