use thiserror::Error;

use crate::dow::Letter;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("empty word")]
    Empty,

    #[error("bad token {0:?}: letters must be positive integers")]
    BadToken(String),

    #[error("letter {letter} occurs {count} time(s); every letter must occur exactly twice")]
    NotDoubleOccurrence { letter: Letter, count: usize },

    #[error("the letter set must be non-empty")]
    SigmaEmpty,

    #[error("edge e_{edge} is not incident to vertex {vertex}")]
    NotIncident { vertex: Letter, edge: usize },

    #[error("invalid Hamiltonian set: {0}")]
    InvalidHamiltonianSet(String),

    #[error("edge subset selects consecutive transversal edges e_{0} and e_{next}", next = .0 + 1)]
    ConsecutiveEdges(usize),

    #[error("edge subset selects e_{index} but the graph has only {edge_count} edges")]
    EdgeOutOfRange { index: usize, edge_count: usize },

    #[error("n = {n} exceeds the limit of {limit}")]
    TooLarge { n: usize, limit: usize },

    #[error("precondition violated: {0}")]
    PreconditionViolated(String),

    #[error("invalid argument: {0}")]
    InvalidArgument(String),

    #[error("cross-check failed for {word}: {detail}")]
    CrossCheck { word: String, detail: String },
}

impl Error {
    /// Errors that originate from bad user input, as opposed to internal
    /// consistency failures.
    pub fn is_input_error(&self) -> bool {
        !matches!(self, Error::CrossCheck { .. })
    }
}
