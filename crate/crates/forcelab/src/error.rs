use thiserror::Error;

/// Errors shared by every module in the crate.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("vertex {vertex} out of range for a graph on {n} vertices")]
    VertexOutOfRange { vertex: usize, n: usize },

    #[error("ambient size mismatch: {left} vs {right}")]
    AmbientMismatch { left: usize, right: usize },

    #[error("edge {u}-{v} is a self-loop")]
    SelfLoop { u: usize, v: usize },

    #[error("edge {u}-{v} appears more than once")]
    DuplicateEdge { u: usize, v: usize },

    #[error("invalid parameter {name}={value}: requires {bound}")]
    InvalidParameter {
        name: &'static str,
        value: usize,
        bound: &'static str,
    },

    #[error("{operation} supports at most {cap} vertices, got {n}")]
    CapExceeded {
        operation: &'static str,
        n: usize,
        cap: usize,
    },

    #[error("empty vertex set where a nonempty one is required")]
    EmptySet,

    #[error("index {name}={value} out of range 1..={max}")]
    IndexOutOfRange {
        name: &'static str,
        value: usize,
        max: usize,
    },

    #[error("chronology invalid at step {step}: {message}")]
    InvalidChronology { step: usize, message: String },

    #[error("chronology does not force the whole graph")]
    IncompleteChronology,

    #[error("precondition violated: {0}")]
    Precondition(String),

    #[error("parameters (m={m}, r={r}) fall outside this construction's regime: requires {regime}")]
    RegimeMismatch {
        m: usize,
        r: usize,
        regime: &'static str,
    },

    #[error("parse error at line {line}: {message}")]
    Parse { line: usize, message: String },
}

pub type Result<T> = std::result::Result<T, Error>;
