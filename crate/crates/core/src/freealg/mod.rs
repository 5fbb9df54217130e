//! Words over an ordered alphabet, the deg-lex monomial order, and
//! polynomials of the free associative algebra over `Q(q)`.

mod poly;
mod word;

use thiserror::Error;

pub use poly::Poly;
pub use word::{is_valid_name, Alphabet, Letter, Word};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum FreeAlgError {
    #[error("words or polynomials belong to different alphabets")]
    AlphabetMismatch,
    #[error("the zero polynomial has no leading word")]
    ZeroPolynomial,
    #[error("no image given for generator index {0}")]
    MissingImage(Letter),
    #[error("unknown generator `{0}`")]
    UnknownGenerator(String),
    #[error("generator `{0}` declared twice")]
    DuplicateGenerator(String),
    #[error("invalid generator name `{0}`")]
    InvalidName(String),
    #[error("generator `{0}` must have a positive weight")]
    NonPositiveWeight(String),
    #[error("expected {expected} weights, found {found}")]
    WeightCount { expected: usize, found: usize },
}
