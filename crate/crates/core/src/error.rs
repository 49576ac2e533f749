use crate::graph::{EdgeId, VertexId};

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum Error {
    #[error("unknown vertex {0}")]
    UnknownVertex(VertexId),
    #[error("unknown edge {0}")]
    UnknownEdge(EdgeId),
    #[error("loop at vertex {0}: graphs are loopless")]
    Loop(VertexId),
    #[error("invalid shore: {0}")]
    InvalidShore(&'static str),
    #[error("degree mismatch: {left} != {right}")]
    DegreeMismatch { left: usize, right: usize },
    #[error("edge map is not a bijection between the incidence sets: {0}")]
    InvalidBijection(String),
    #[error("graph has {order} vertices, cap is {cap}")]
    CapExceeded { order: usize, cap: usize },
    #[error("graph has no perfect matching")]
    NoPerfectMatching,
    #[error("graph is not matching covered")]
    NotMatchingCovered,
    #[error("graph is not a brick")]
    NotBrick,
    #[error("graph is not a simple brick")]
    NotSimpleBrick,
    #[error("pattern is not a cubic brick")]
    NotCubicBrick,
    #[error("edge {edge} would receive {count} inserted vertices; counts must be even")]
    OddSubdivision { edge: EdgeId, count: usize },
    #[error("vertex {vertex} has degree {degree}, expected 2 with distinct neighbours")]
    NotBiContractible { vertex: VertexId, degree: usize },
    #[error("graph has order {0}, at least 4 required")]
    OrderTooSmall(usize),
    #[error("graph is an even cycle")]
    EvenCycle,
    #[error("invalid bi-split: {0}")]
    InvalidSplit(&'static str),
    #[error("cut is trivial")]
    TrivialCut,
    #[error("cut is not separating")]
    NotSeparating,
    #[error("cut is tight: no perfect matching meets it in three or more edges")]
    CutIsTight,
    #[error("not a subgraph of the host graph")]
    NotSubgraph,
    #[error("parse error on line {line}: {msg}")]
    Parse { line: usize, msg: String },
    #[error("illegal parameter {param} for family {family}")]
    IllegalParameter { family: &'static str, param: usize },
    #[error("unknown family {0}")]
    UnknownFamily(String),
    #[error("brick of order {order} outside the terminal set has no {kind} edge")]
    NoThinEdge { order: usize, kind: &'static str },
    #[error("ear search got stuck at a graph with {0} vertices")]
    EarSearchStuck(usize),
}
