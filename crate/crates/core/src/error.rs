use thiserror::Error;

use crate::derivation::Rejection;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("operands live over different universes")]
    UniverseMismatch,
    #[error("duplicate label `{0}` in universe")]
    DuplicateLabel(String),
    #[error("unknown element `{0}`")]
    UnknownLabel(String),
    #[error("{what}: size {size} exceeds the bound {bound}")]
    TooLarge {
        what: &'static str,
        size: usize,
        bound: usize,
    },
    #[error("matrix orders differ ({left} vs {right})")]
    ShapeMismatch { left: usize, right: usize },
    #[error("derivation rejected: {0}")]
    InvalidDerivation(Rejection),
    #[error("family is not closed under intersection")]
    NotMooreFamily,
    #[error("map is not monotone: iteration step {step} is not an increase")]
    NotMonotone { step: usize },
    #[error("star iteration did not stabilise within {steps} steps")]
    StarDiverged { steps: usize },
    #[error("languages use different alphabets or length bounds")]
    AlphabetMismatch,
    #[error("invalid alphabet: {0}")]
    InvalidAlphabet(String),
    #[error("word `{word}` is not over the alphabet or exceeds length {max_len}")]
    InvalidWord { word: String, max_len: usize },
    #[error("certificate parse error at byte {offset}: {message}")]
    CertificateSyntax { offset: usize, message: String },
}
