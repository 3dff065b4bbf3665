use core::fmt;

pub type Result<T, E = Error> = core::result::Result<T, E>;

/// Errors raised by the core algorithms.
#[derive(Debug, Clone, PartialEq)]
#[non_exhaustive]
pub enum Error {
    /// An argument is outside its documented domain.
    InvalidParameter(&'static str),
    /// A covariance matrix is not positive definite.
    Singular,
    /// A vector length does not match the matrix/model dimension.
    DimensionMismatch { expected: usize, found: usize },
    /// Tail collapsing left fewer than two categories.
    DegenerateBinning { categories: usize },
    /// A reference CDF value hit 0 or 1 where a logarithm or a division needs it strictly inside.
    NumericOverflow,
    /// The dependent-degree model requires the vector dimension to equal the graph size.
    Convention { n: usize, dim: usize },
    /// An iterative special-function evaluation did not converge.
    NoConvergence(&'static str),
}

impl fmt::Display for Error {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Error::InvalidParameter(what) => write!(f, "invalid parameter: {what}"),
            Error::Singular => f.write_str("covariance matrix is not positive definite"),
            Error::DimensionMismatch { expected, found } => {
                write!(f, "dimension mismatch: expected {expected}, found {found}")
            }
            Error::DegenerateBinning { categories } => {
                write!(f, "degenerate binning: {categories} categories after collapsing")
            }
            Error::NumericOverflow => {
                f.write_str("reference CDF value is 0 or 1; logarithm or weight overflows")
            }
            Error::Convention { n, dim } => write!(
                f,
                "dependent-degree model requires dimension == graph size (n = {n}, dim = {dim})"
            ),
            Error::NoConvergence(what) => write!(f, "{what} did not converge"),
        }
    }
}

impl core::error::Error for Error {}
