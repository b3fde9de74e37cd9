use thiserror::Error;

use crate::graph::NodeId;

/// Errors produced by graph construction, parsing and analysis.
#[derive(Debug, Error)]
pub enum Error {
    #[error("edge list contains no usable edges")]
    EmptyGraph,

    #[error("node {node} is out of range for a graph with {node_count} nodes")]
    InvalidNode { node: NodeId, node_count: usize },

    #[error("line {line}: {message}")]
    Parse { line: usize, message: String },

    #[error(transparent)]
    Io(#[from] std::io::Error),

    #[error("degenerate input: {0}")]
    Degenerate(String),

    #[error("insufficient data: {0}")]
    InsufficientData(String),

    #[error("kmin {kmin} is invalid (maximum observed degree is {max_degree})")]
    InvalidKmin { kmin: usize, max_degree: usize },

    #[error("assortativity is undefined: every edge endpoint has the same degree")]
    UndefinedMixing,

    #[error("graph is disconnected")]
    DisconnectedGraph,

    #[error("invalid club selector: {0}")]
    InvalidSelector(String),

    #[error("club has no members")]
    EmptyClub,

    #[error("fewer than two peripheral (non-club) nodes")]
    NoPeripheralPairs,

    #[error("invalid generator spec: {0}")]
    InvalidSpec(String),

    #[error("invalid removal plan: {0}")]
    InvalidPlan(String),
}

pub type Result<T> = std::result::Result<T, Error>;
