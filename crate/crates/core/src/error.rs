use thiserror::Error;

use crate::pipedream::DroopError;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("parse error: {0}")]
    Parse(String),
    #[error("invalid permutation: {0}")]
    InvalidPermutation(String),
    #[error("invalid partition: {0}")]
    InvalidPartition(String),
    #[error("invalid word: {0}")]
    InvalidWord(String),
    #[error("invalid tableau: {0}")]
    InvalidTableau(String),
    #[error("invalid pipedream: {0}")]
    InvalidPipedream(String),
    #[error("index {index} out of range 1..={bound}")]
    IndexOutOfRange { index: usize, bound: usize },
    #[error("transposition needs 1 <= i < j <= n, got i={i}, j={j}")]
    BadTransposition { i: usize, j: usize },
    #[error("word {0} is not reduced")]
    NotReduced(String),
    #[error("{0} is not dominant")]
    NotDominant(String),
    #[error("{0} is dominant")]
    Dominant(String),
    #[error("the identity has no maximal transition")]
    Identity,
    #[error("little map: {0}")]
    LittleMap(String),
    #[error("droop: {0}")]
    Droop(#[from] DroopError),
    #[error("polynomial is not symmetric in x1..x{0}")]
    NotSymmetric(usize),
    #[error("polynomial is not homogeneous")]
    NotHomogeneous,
    #[error("polynomial involves variables outside x1..x{0}")]
    ForeignVariables(usize),
    #[error("negative coefficient {coeff} for shape {shape} while expanding")]
    NegativeLeftover { shape: String, coeff: String },
    #[error("tableau is not a reduced word tableau for {0}")]
    NotReducedWordTableau(String),
    #[error("pipedream is not an EG-pipedream")]
    NotEgPipedream,
    #[error("node {0} is not a leaf")]
    NotLeaf(usize),
    #[error("internal invariant violated: {0}")]
    Internal(String),
}

pub type Result<T> = std::result::Result<T, Error>;
