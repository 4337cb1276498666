//! Error type shared by the whole crate.
//!
//! Every variant carries a stable machine-readable code (see [`Error::code`])
//! so that CLI consumers can dispatch on errors without parsing messages.

use thiserror::Error;

use crate::analysis::GcpWitness;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    /// Tried to decompose `0` or a single-letter tree.
    #[error("decomposition is undefined for the empty tree and for letters")]
    DecompositionUndefined,

    /// A word set violates prefix-freeness or contains a malformed word.
    #[error("invalid word set: {reason} (word `{word}`)")]
    InvalidWordSet { word: String, reason: String },

    /// A letter outside the ambient alphabet, or one of the reserved
    /// characters `0`/`1`.
    #[error("invalid letter `{0}`")]
    InvalidLetter(char),

    /// Alphabet construction failed (empty, duplicate letters, reserved chars).
    #[error("invalid alphabet: {0}")]
    InvalidAlphabet(String),

    /// An operation that relies on the affine-completeness machinery was
    /// called with fewer than the required number of letters.
    #[error("alphabet has {got} letters but the operation requires at least {required}")]
    AlphabetTooSmall { required: usize, got: usize },

    /// Argument count does not match the polynomial arity.
    #[error("arity mismatch: expected {expected} arguments, got {got}")]
    ArityMismatch { expected: usize, got: usize },

    /// The function table failed the grafting-based congruence check.
    #[error("table is not congruence preserving (witness at {witness})")]
    NotWcp { witness: GcpWitness },

    /// Table values do not share a common shape, so synthesis cannot
    /// decompose them in lockstep.
    #[error("table values do not share a common skeleton")]
    SkeletonMismatch,

    /// Magma table or zero element violates the structural invariants.
    #[error("invalid magma: {0}")]
    InvalidMagma(String),

    /// Function table is not a total map on the letter tuples.
    #[error("invalid function table: {0}")]
    InvalidTable(String),

    /// Polynomial body refers to a variable index outside `1..=arity`.
    #[error("variable x{index} exceeds the declared arity {arity}")]
    VariableOutOfRange { index: usize, arity: usize },

    /// `verify` was asked for a proposition this crate does not know.
    #[error("unknown proposition `{0}`")]
    UnknownProposition(String),

    /// A verification run would exceed the instance budget; pass `force`
    /// to run it anyway.
    #[error("verification would check {instances} instances, above the limit of {limit}; use force to override")]
    BoundsTooLarge { instances: u64, limit: u64 },
}

impl Error {
    /// Stable error code for machine consumption.
    pub fn code(&self) -> &'static str {
        match self {
            Error::DecompositionUndefined => "DECOMPOSITION_UNDEFINED",
            Error::InvalidWordSet { .. } => "INVALID_WORD_SET",
            Error::InvalidLetter(_) => "INVALID_LETTER",
            Error::InvalidAlphabet(_) => "INVALID_ALPHABET",
            Error::AlphabetTooSmall { .. } => "ALPHABET_TOO_SMALL",
            Error::ArityMismatch { .. } => "ARITY_MISMATCH",
            Error::NotWcp { .. } => "NOT_WCP",
            Error::SkeletonMismatch => "SKELETON_MISMATCH",
            Error::InvalidMagma(_) => "INVALID_MAGMA",
            Error::InvalidTable(_) => "INVALID_TABLE",
            Error::VariableOutOfRange { .. } => "VARIABLE_OUT_OF_RANGE",
            Error::UnknownProposition(_) => "UNKNOWN_PROPOSITION",
            Error::BoundsTooLarge { .. } => "BOUNDS_TOO_LARGE",
        }
    }
}

pub type Result<T> = std::result::Result<T, Error>;
