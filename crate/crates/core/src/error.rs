use thiserror::Error;

#[derive(Debug, Error)]
pub enum Error {
    #[error("invalid input: {0}")]
    InvalidInput(String),

    #[error("duplicate sample point: index {second} repeats index {first}")]
    DuplicatePoint { first: usize, second: usize },

    #[error("non-finite value at index {0}")]
    NonFinite(usize),

    #[error("linear algebra failure: {0}")]
    LinAlg(String),

    /// The error curve hits the origin exactly, so its winding number is undefined.
    #[error("error curve passes through zero at index {0}")]
    ZeroOnCurve(usize),

    #[error("error curve undersampled between indices {0} and {1}")]
    Undersampled(usize, usize),

    #[error("degenerate boundary segment starting at vertex {0}")]
    DegenerateSegment(usize),

    #[error("least-squares basis is empty: no exterior poles and no polynomial part")]
    EmptyBasis,
}

impl From<ndarray_linalg::error::LinalgError> for Error {
    fn from(e: ndarray_linalg::error::LinalgError) -> Self {
        Error::LinAlg(e.to_string())
    }
}

pub type Result<T> = std::result::Result<T, Error>;
