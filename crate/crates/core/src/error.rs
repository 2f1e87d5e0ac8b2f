use thiserror::Error;

use crate::constructive::SweepState;

#[derive(Debug, Clone, PartialEq, Error)]
pub enum Error {
    #[error("self-loop at vertex {0}")]
    SelfLoop(usize),
    #[error("duplicate edge {0}-{1}")]
    DuplicateEdge(usize, usize),
    #[error("vertex {0} out of range")]
    VertexOutOfRange(usize),
    #[error("graph is disconnected")]
    Disconnected,
    #[error("coloring is not total and proper")]
    ImproperInput,
    #[error("expected a 3-coloring, got k = {0}")]
    WrongK(usize),
    #[error("vertex {0} is unassigned")]
    Unassigned(usize),
    #[error("node budget exceeded (best bound so far: {best:?})")]
    BudgetExceeded { best: Option<usize> },
    #[error("vertex {0} is isolated")]
    IsolatedVertex(usize),
    #[error("graph is not bipartite")]
    NotBipartite,
    #[error("graph too small: n = {0}, need at least 3")]
    TooSmall(usize),
    #[error("graph too large for exact search: n = {0}, limit is 128")]
    TooLarge(usize),
    #[error("edge {0}-{1} is not bad")]
    NotBadEdge(usize, usize),
    #[error("graph is not 3-colorable")]
    Not3Colorable,
    #[error("rotation sweep stalled after {} sweeps: {reason}", trace.len())]
    AlgorithmStalled {
        reason: String,
        trace: Vec<SweepState>,
    },
    #[error("sweep invariant violated: {0}")]
    InvariantViolated(String),
    #[error("bound violated: {0}")]
    BoundViolated(String),
    #[error("bad parameter: {0}")]
    BadParameter(String),
    #[error("could not generate a connected instance after {0} attempts")]
    RetriesExhausted(usize),
    #[error("line {line}: {msg}")]
    Parse { line: usize, msg: String },
}

pub type Result<T> = std::result::Result<T, Error>;
