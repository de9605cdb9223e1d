use thiserror::Error;

/// Errors for group construction, digraph analysis, and extremal searches.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    /// A group spec contained a factor of zero or could not be parsed.
    #[error("invalid group spec: {0}")]
    InvalidSpec(String),

    /// An element does not belong to the group it was used with.
    #[error("invalid element: {0}")]
    InvalidElement(String),

    /// Order passed to group enumeration was not positive.
    #[error("invalid order: {0}")]
    InvalidOrder(String),

    /// Mismatched or malformed operation inputs.
    #[error("invalid input: {0}")]
    InvalidInput(String),

    /// The connection set does not generate the group, so the digraph is
    /// not strongly connected.
    #[error("not strongly connected: {0}")]
    NotStronglyConnected(String),

    /// The target element is unreachable, so no distance certificate exists.
    #[error("no certificate: {0}")]
    NoCertificate(String),

    /// Average distance is undefined for the one-element group.
    #[error("average distance undefined: {0}")]
    UndefinedAverage(String),

    /// Argument outside the domain of a formula or construction.
    #[error("out of domain: {0}")]
    OutOfDomain(String),

    /// No k-element subset of non-identity elements exists at this order.
    #[error("no valid generating set: {0}")]
    NoValidSet(String),

    /// Counterexample certification requested at a diameter where no gap
    /// between the cyclic and Abelian extremal orders is expected.
    #[error("no gap expected: {0}")]
    NoGapExpected(String),

    /// Exhaustive searches disagreed with the claimed extremal values.
    #[error("certification failure: {0}")]
    CertificationFailure(String),

    /// Literal could not be parsed.
    #[error("parse error: {0}")]
    Parse(String),

    /// Invariant violation that should be unreachable.
    #[error("internal error: {0}")]
    Internal(String),
}

pub type Result<T> = std::result::Result<T, Error>;
