use thiserror::Error;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("not a permutation of [1..{n}]: {images:?}")]
    InvalidPermutation { n: usize, images: Vec<usize> },

    #[error("window {window:?} is not an affine permutation (values collide mod {n})")]
    InvalidWindow { n: usize, window: Vec<i64> },

    #[error("window sum shift {shift} is not divisible by n = {n}")]
    NonIntegralAverage { n: usize, shift: i64 },

    #[error("reflection index pair ({i}, {j}) invalid for n = {n}")]
    InvalidReflection { i: usize, j: usize, n: usize },

    #[error("{0}")]
    InvalidSubset(String),

    #[error("invalid parameters: {0}")]
    InvalidParameters(String),

    #[error("{u} is not below {v} in the {k}-Bruhat order")]
    NotKBruhatBelow { u: String, v: String, k: usize },

    #[error("variable count mismatch: {0} vs {1}")]
    NvarsMismatch(usize, usize),

    #[error("{what} = {value} exceeds cap {cap}")]
    CapExceeded { what: &'static str, value: usize, cap: usize },

    #[error("internal consistency failure: {0}")]
    Inconsistent(String),

    #[error("extracted coefficient {0} is not an integer")]
    NonIntegral(String),

    #[error("series is not invertible: {0}")]
    NotInvertible(String),

    #[error("parse error: {0}")]
    Parse(String),
}
