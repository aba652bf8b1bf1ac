//! Error type shared by every module of the crate.

use thiserror::Error;

/// Errors reported by graph, polynomial, engine and arrangement operations.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    /// Polynomial long division left a nonzero remainder.
    #[error("polynomial division leaves a nonzero remainder")]
    NonDivisible,

    /// Division by the zero polynomial.
    #[error("division by the zero polynomial")]
    DivisionByZero,

    /// The named edge is not present in the graph.
    #[error("edge {{{0}, {1}}} is not in the graph")]
    EdgeAbsent(usize, usize),

    /// The edge is a loop, a duplicate, or otherwise not a valid new edge.
    #[error("invalid edge {{{0}, {1}}}")]
    InvalidEdge(usize, usize),

    /// A vertex index is outside the 0..n range of the graph.
    #[error("vertex {0} out of range for a graph on {1} vertices")]
    VertexOutOfRange(usize, usize),

    /// A value is outside the domain of the operation.
    #[error("domain error: {0}")]
    Domain(String),

    /// The supplied vertex correspondence is not a subgraph isomorphism.
    #[error("vertex correspondence is not a subgraph isomorphism")]
    NotIsomorphicUnderMap,

    /// A theorem hypothesis required by the operation does not hold.
    #[error("hypothesis violated: {0}")]
    HypothesisViolated(String),

    /// An exact integer multiplier failed its divisibility check.
    #[error("chamber multiplier does not divide exactly")]
    NonIntegral,

    /// The input exceeds a brute-force size limit.
    #[error("input too large: {0}")]
    TooLarge(String),

    /// The modulus passed to a finite-field count is not prime.
    #[error("{0} is not prime")]
    NotPrime(u64),

    /// The line is already present in the arrangement.
    #[error("line already present in the arrangement")]
    LineAlreadyPresent,

    /// The arrangement has no lines.
    #[error("empty arrangement")]
    EmptyArrangement,
}

pub type Result<T> = std::result::Result<T, Error>;
