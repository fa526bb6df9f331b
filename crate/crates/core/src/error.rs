use std::path::PathBuf;

use crate::set::Element;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, thiserror::Error)]
pub enum Error {
    #[error("element {element} is outside the ground set of size {ground_size}")]
    ElementOutOfRange {
        element: Element,
        ground_size: usize,
    },

    #[error("element {0} is already a member of the set")]
    ElementPresent(Element),

    #[error("set is not independent in the matroid")]
    NotIndependent,

    #[error("processing order is not a permutation of the ground set: {0}")]
    InvalidOrder(String),

    #[error("invalid parameter: {0}")]
    InvalidParameter(String),

    #[error("ground set of size {n} exceeds the brute-force limit of {max}")]
    TooLarge { n: usize, max: usize },

    #[error("contract violation: {0}")]
    Contract(String),

    #[error("{path}:{line}: {message}")]
    Parse {
        path: PathBuf,
        line: usize,
        message: String,
    },

    #[error("unknown algorithm `{0}`")]
    UnknownAlgorithm(String),

    #[error(transparent)]
    Io(#[from] std::io::Error),

    #[error(transparent)]
    Csv(#[from] csv::Error),
}
