use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("empty collection of subspaces")]
    EmptyCollection,
    #[error("subspaces live in different ambient spaces")]
    AmbientMismatch,
    #[error("malformed word: {0}")]
    MalformedWord(String),
    #[error("words use different values of d ({0} vs {1})")]
    DimensionMismatch(usize, usize),
    #[error("invalid generator: {0}")]
    InvalidGenerator(String),
    #[error("morphisms are not composable: {0}")]
    EndpointMismatch(String),
    #[error("set is not saturated: {0} is missing")]
    NotSaturated(String),
    #[error("algebra is not certified: {0}")]
    NotCertified(String),
    #[error("subspace inclusion fails: {0}")]
    NotContained(String),
    #[error("matrix is singular")]
    Singular,
    #[error("unknown builtin algebra: {0}")]
    UnknownBuiltin(String),
    #[error("degenerate parameters: {0}")]
    DegenerateParameters(String),
    #[error("format error: {0}")]
    Format(String),
}
