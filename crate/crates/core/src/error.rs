use thiserror::Error;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Error)]
pub enum Error {
    /// A computation would produce objects beyond the configured degree cap.
    #[error("degree {degree} exceeds the configured cap of {cap}")]
    DegreeCap { degree: usize, cap: usize },

    /// A group-algebra or oracle computation was asked for more boxes than allowed.
    #[error("{what} of size {size} exceeds the guard of {guard}")]
    SizeGuard {
        what: &'static str,
        size: usize,
        guard: usize,
    },

    #[error("parse error at position {position}: {message} (token `{token}`)")]
    Parse {
        token: String,
        position: usize,
        message: String,
    },

    #[error("invalid partition {0:?}: parts must be weakly decreasing")]
    InvalidPartition(Vec<u32>),

    #[error("morphism flavor `{flavor}` does not apply to index {index}: {reason}")]
    Inapplicable {
        flavor: &'static str,
        index: String,
        reason: &'static str,
    },

    #[error("polynomial is not symmetric under permutation of its variables")]
    NotSymmetric,

    #[error("N = {n} is below the stable range (need N >= {required})")]
    Unstable { n: usize, required: usize },

    #[error("invalid argument: {0}")]
    InvalidArgument(String),

    #[error("cache error: {0}")]
    Cache(String),

    #[error(transparent)]
    Io(#[from] std::io::Error),
}

impl Error {
    /// True for refusals caused by the degree cap or a size guard, as opposed to bad input.
    pub fn is_limit(&self) -> bool {
        matches!(self, Error::DegreeCap { .. } | Error::SizeGuard { .. } | Error::Unstable { .. })
    }
}
