use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Error, Clone, PartialEq)]
pub enum Error {
    #[error("edge ({u}, {v}) has an endpoint outside 1..={n}")]
    VertexOutOfRange { u: usize, v: usize, n: usize },

    #[error("edge ({u}, {v}) is a self-loop")]
    SelfLoop { u: usize, v: usize },

    #[error("graph6: {0}")]
    Graph6(String),

    #[error("edge list: {0}")]
    EdgeList(String),

    #[error("irrational weight sequence has {available} terms but {required} are needed")]
    InsufficientIrr { required: usize, available: usize },

    #[error("invalid weight set: {0}")]
    InvalidWeights(String),

    #[error("{what} budget of {budget} exceeded{detail}")]
    BudgetExceeded {
        what: &'static str,
        budget: u64,
        detail: String,
    },

    #[error("graphs have different vertex counts ({0} vs {1})")]
    SizeMismatch(usize, usize),

    #[error("no {kind} registered under the name {name:?} (known: {known})")]
    UnknownStrategy {
        kind: &'static str,
        name: String,
        known: String,
    },

    #[error("isomorphism checker {0:?} returned a witness that does not preserve edges")]
    InvalidWitness(String),
}

impl Error {
    pub fn budget(what: &'static str, budget: u64, detail: impl Into<String>) -> Self {
        Error::BudgetExceeded {
            what,
            budget,
            detail: detail.into(),
        }
    }

    /// Resource errors are reported differently from malformed input.
    pub fn is_resource(&self) -> bool {
        matches!(self, Error::BudgetExceeded { .. })
    }
}
