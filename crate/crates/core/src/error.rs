use thiserror::Error;

#[derive(Debug, Error)]
pub enum Error {
    #[error("graph order must be at least 1")]
    EmptyOrder,
    #[error("{what} needs at least {min} vertices, got {n}")]
    TooSmall { what: &'static str, n: usize, min: usize },
    #[error("vertex {vertex} out of range for graph of order {order}")]
    VertexOutOfRange { vertex: usize, order: usize },
    #[error("self-loop at vertex {0}")]
    SelfLoop(usize),
    #[error("duplicate edge {{{0}, {1}}}")]
    DuplicateEdge(usize, usize),
    #[error("vertex set of arity {set} used against graph of order {graph}")]
    ArityMismatch { set: usize, graph: usize },
    #[error("star-like tree needs at least 3 arms, got {0}")]
    TooFewArms(usize),
    #[error("arm lengths must be positive")]
    EmptyArm,
    #[error("k must be at least {min}, got {k}")]
    InvalidK { k: usize, min: usize },
    #[error("graph must be connected")]
    Disconnected,
    #[error("guardrail exceeded: {what} is {actual}, limit {limit}")]
    Guardrail {
        what: &'static str,
        actual: usize,
        limit: usize,
    },
    #[error("invalid set-cover instance: {0}")]
    InvalidInstance(String),
    #[error("not a valid [1,{k}]-triple cover: {reason}")]
    InvalidCover { k: usize, reason: String },
    #[error("not a total [1,{k}]-dominating set of the gadget (vertex {vertex} violated)")]
    InvalidWitness { k: usize, vertex: usize },
    #[error("line {line}: {msg}")]
    Parse { line: usize, msg: String },
    #[error(transparent)]
    Json(#[from] serde_json::Error),
    #[error(transparent)]
    Io(#[from] std::io::Error),
}

pub type Result<T> = std::result::Result<T, Error>;
