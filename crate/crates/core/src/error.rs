use thiserror::Error;

use crate::shapes::Partition;

#[derive(Debug, Error)]
pub enum Error {
    #[error("invalid partition: {0}")]
    InvalidPartition(String),

    #[error("{inner} is not contained in {outer}")]
    NotContained { inner: Partition, outer: Partition },

    #[error("entry {value} exceeds the number of variables {num_vars}")]
    EntryOutOfRange { value: u32, num_vars: usize },

    #[error("polynomials in {left} and {right} variables cannot be combined")]
    VarsMismatch { left: usize, right: usize },

    #[error("integer overflow in polynomial arithmetic")]
    Overflow,

    #[error("invalid tableau: {0}")]
    InvalidTableau(String),

    #[error("invalid tableau tuple: {0}")]
    InvalidTuple(String),

    #[error("tuple is not a fixed point of the involution")]
    NotFixed,

    #[error("filling is not a row-strict plane partition")]
    NotRspp,

    #[error(transparent)]
    Json(#[from] serde_json::Error),
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
