use crate::alphabet::Word;

/// Errors shared by every layer of the toolkit.
#[derive(Debug, Clone, thiserror::Error)]
pub enum Error {
    #[error("syntax error at position {pos}: {msg}")]
    Syntax { pos: usize, msg: String },
    #[error("symbol '{symbol}' is not in the alphabet")]
    UnknownSymbol { symbol: char },
    #[error("invalid alphabet: {0}")]
    InvalidAlphabet(String),
    #[error("operands are over different alphabets")]
    AlphabetMismatch,
    #[error("language is empty")]
    EmptyLanguage,
    #[error("language contains the empty word")]
    EpsilonInCode,
    #[error("input is not a code")]
    NotACode { witness: Option<Word> },
    #[error("language is not finite (or too large to enumerate)")]
    NotFinite,
    #[error("input is not a prefix code")]
    NotPrefixCode,
    #[error("input is not a suffix code")]
    NotSuffixCode,
    #[error("input is not a bifix code")]
    NotBifixCode,
    #[error("input is not thin")]
    NotThin,
    #[error("automaton state budget of {limit} states exceeded")]
    StateBudgetExceeded { limit: usize },
    #[error("search budget of {limit} nodes exceeded")]
    SearchBudgetExceeded { limit: u64 },
    #[error("no completion found within the given bound")]
    NotFoundWithinBound,
    #[error("class violation: {0}")]
    ClassViolation(String),
    #[error("invalid witness: {0}")]
    InvalidWitness(String),
    #[error("input too large: {0}")]
    TooLarge(String),
    #[error("spec error: {0}")]
    Spec(String),
}

pub type Result<T> = std::result::Result<T, Error>;
