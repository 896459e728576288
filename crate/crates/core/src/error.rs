use thiserror::Error;

use crate::graph::{EdgeId, VertexId};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum GraphError {
    #[error("duplicate edge {0}-{1}")]
    DuplicateEdge(String, String),
    #[error("self-loop on vertex {0}")]
    SelfLoop(String),
    #[error("edge {0} is not alive")]
    EdgeNotAlive(EdgeId),
    #[error("vertex {0} is not alive")]
    VertexNotAlive(VertexId),
    #[error("unknown edge {0}")]
    UnknownEdge(EdgeId),
    #[error("undo mark is stale")]
    StaleMark,
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum NeighborhoodError {
    #[error("pivot {0} is not alive")]
    VertexNotAlive(VertexId),
    #[error("pivot {0} has degree zero")]
    ZeroDegreePivot(VertexId),
    #[error("edge {0} is not incident to the pivot")]
    EdgeNotInD01(EdgeId),
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum EnumError {
    #[error("graph has {edges} edges; the brute-force oracle accepts at most {limit}")]
    TooLargeForOracle { edges: usize, limit: usize },
    #[error("graph is not C4-free: {0}")]
    NotC4Free(String),
    #[error("solution count overflowed 64 bits")]
    CountOverflow,
    #[error("recursion depth limit {0} exceeded")]
    DepthLimitExceeded(usize),
    #[error(transparent)]
    Graph(#[from] GraphError),
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum GenError {
    #[error("infeasible generator spec: {0}")]
    InfeasibleSpec(String),
}

#[derive(Debug, Error)]
pub enum ParseError {
    #[error("line {line}: {msg}")]
    Syntax { line: usize, msg: String },
    #[error(transparent)]
    Graph(#[from] GraphError),
    #[error(transparent)]
    Io(#[from] std::io::Error),
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum BenchError {
    #[error(transparent)]
    Gen(#[from] GenError),
    #[error(transparent)]
    Enum(#[from] EnumError),
}
