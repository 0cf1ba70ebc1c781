use thiserror::Error;

/// Errors reported by constructors and evaluators in this crate.
#[derive(Debug, Clone, PartialEq, Error)]
pub enum Error {
    /// A semigroup generator was below 2. Generator 1 makes every positive
    /// integer representable and the gap structure degenerates.
    #[error("generator {0} is too small; both generators must be at least 2")]
    GeneratorTooSmall(u64),

    /// The generators share a common factor, so the complement of the
    /// semigroup is infinite and none of the finite invariants exist.
    #[error("generators {d1} and {d2} are not coprime")]
    NotCoprime { d1: u64, d2: u64 },

    /// An argument was outside the domain of the requested evaluation,
    /// e.g. an exponent where a series diverges or a point outside the
    /// disc of convergence.
    #[error("domain error: {0}")]
    Domain(String),
}

impl Error {
    pub(crate) fn domain(msg: impl Into<String>) -> Self {
        Error::Domain(msg.into())
    }
}

pub type Result<T> = std::result::Result<T, Error>;
