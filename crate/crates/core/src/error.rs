use thiserror::Error;

/// Errors raised by the core library.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("negative part {0} in partition")]
    NegativePart(i64),

    #[error("cannot parse partition from {0:?}")]
    Parse(String),

    #[error("partitions have different sizes: {0}")]
    SizeMismatch(String),

    #[error("shape mismatch: {0}")]
    ShapeMismatch(String),

    /// A closed form was asked for outside the hypotheses it is proven under.
    /// Callers treat this as "try another symmetry variant or use the oracle".
    #[error("closed-form hypothesis not met: {0}")]
    HypothesisNotMet(String),

    #[error("no closed form applies to ({0})")]
    NoClosedFormApplicable(String),

    #[error("n! does not divide the class sum for ({0})")]
    IntegralityViolation(String),

    #[error("alphabet value repeated at positions {0} and {1}")]
    RepeatedValue(usize, usize),

    /// The bialternant needs an ordinary alphabet (every entry positive-signed).
    #[error("alphabet entry {0} is negated; the bialternant needs an ordinary alphabet")]
    SignedEntry(usize),

    #[error("sample point is singular: {0}")]
    SingularPoint(String),

    #[error("could not start worker threads: {0}")]
    ThreadPool(String),
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
