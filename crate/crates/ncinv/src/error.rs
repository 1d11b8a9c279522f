use thiserror::Error;

use crate::Rational;

#[derive(Debug, Error)]
pub enum Error {
    #[error("invalid partition: {0}")]
    InvalidPartition(String),

    #[error("ground set sizes differ: {0} and {1}")]
    SizeMismatch(usize, usize),

    #[error("ground set size {n} is not divisible by interval size {d}")]
    NotDivisible { n: usize, d: usize },

    #[error("first partition is not a refinement of the second")]
    NotRefinement,

    #[error("partition is not noncrossing")]
    Crossing,

    #[error("partition is not {m}-partite for interval size {d}")]
    NotMPartite { m: usize, d: usize },

    #[error("interval size must be even, got {0}")]
    OddDegree(usize),

    #[error("partition has a singleton block")]
    Singleton,

    #[error("vanishing bracket: slots {0} and {1} belong to the same symbol")]
    VanishingBracket(usize, usize),

    #[error("not a perfect matching: {0}")]
    NotPerfectMatching(String),

    #[error("expressions have different shapes: (m, d) = {0:?} vs {1:?}")]
    ShapeMismatch((usize, usize), (usize, usize)),

    #[error("the zero polynomial has no leading term")]
    ZeroPolynomial,

    #[error("letter a{letter} is out of range for degree {d}")]
    LetterOutOfRange { letter: usize, d: usize },

    #[error("word length {got} does not match degree {expected}")]
    WordLength { expected: usize, got: usize },

    #[error("group element has determinant {0}, expected 1")]
    Determinant(Rational),

    #[error("first free cumulant must vanish, got {0}")]
    NotCentered(Rational),

    #[error("moment of order {0} is not available")]
    MomentOutOfRange(usize),

    #[error("moment sequence must start with 1")]
    MomentNormalization,

    #[error("parse error: {0}")]
    Parse(String),

    #[error(transparent)]
    Json(#[from] serde_json::Error),

    #[error(transparent)]
    Io(#[from] std::io::Error),
}

pub type Result<T> = std::result::Result<T, Error>;
