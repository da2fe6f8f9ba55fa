use thiserror::Error;

use crate::graph::Color;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("code length {0} is not a positive multiple of 3")]
    BadLength(usize),
    #[error("bad character {ch:?} at position {pos}")]
    BadChar { pos: usize, ch: char },
    #[error("block {block} of the code is not a permutation")]
    NotInvolution { block: usize },
    #[error("color {color} is not a fixed-point-free involution at vertex {vertex}")]
    InvalidInvolution { color: Color, vertex: usize },
    #[error("graph is not bipartite")]
    NotBipartite,
    #[error("graph is not connected")]
    NotConnected,
    #[error("invalid labeling: {0}")]
    LabelingInvalid(String),
    #[error("color {color} adjacency of vertex {vertex} is not preserved by the covering map")]
    NotAdjacencyPreserving { vertex: usize, color: Color },
    #[error("covering map fibers are not of uniform size")]
    NonUniformFiber,
    #[error("invalid voltage assignment: {0}")]
    InvalidVoltage(String),
    #[error("no admissible connected {0}-fold cyclic covering exists")]
    NoAdmissibleCovering(u32),
    #[error("order {order} exceeds the exhaustive enumeration cap {cap}")]
    CapExceeded { order: usize, cap: usize },
    #[error("census order must be a positive even integer, got {0}")]
    BadOrder(usize),
}

pub type Result<T> = std::result::Result<T, Error>;
