use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("part sizes must contain at least one nonzero entry")]
    NoVertices,

    #[error("part sizes must all be at least 1, got {0:?}")]
    EmptyPart(Vec<usize>),

    #[error("total vertex count overflows a machine word")]
    TooManyVertices,

    #[error("block tuple {blocks:?} is outside the lattice of part sizes {parts:?}")]
    OutOfLattice {
        blocks: Vec<usize>,
        parts: Vec<usize>,
    },

    #[error("lattice needs {cells} cells but the memory budget is {budget}")]
    Capacity { cells: u128, budget: usize },

    #[error("part index {index} is out of range 1..={parts}")]
    PartIndex { index: usize, parts: usize },

    #[error("part {index} has {size} vertex, need at least 2 to add an inner edge")]
    PartTooSmall { index: usize, size: usize },

    #[error("invalid graph: {0}")]
    InvalidGraph(String),

    #[error("{what} is {value}, above the oracle cap of {cap}")]
    OracleCap {
        what: &'static str,
        value: usize,
        cap: usize,
    },
}
