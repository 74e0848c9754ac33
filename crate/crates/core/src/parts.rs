use std::fmt;

use crate::{Error, Result};

/// Part sizes `(n_1, ..., n_k)` of a complete k-partite graph. Every part is
/// non-empty and the total vertex count fits in a `usize`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct PartSizes(Vec<usize>);

impl PartSizes {
    pub fn new(parts: Vec<usize>) -> Result<Self> {
        if parts.is_empty() {
            return Err(Error::NoVertices);
        }
        if parts.contains(&0) {
            return Err(Error::EmptyPart(parts));
        }
        parts
            .iter()
            .try_fold(0usize, |acc, &p| acc.checked_add(p))
            .ok_or(Error::TooManyVertices)?;
        Ok(PartSizes(parts))
    }

    pub fn as_slice(&self) -> &[usize] {
        &self.0
    }

    pub fn into_vec(self) -> Vec<usize> {
        self.0
    }

    /// Number of parts `k`.
    pub fn k(&self) -> usize {
        self.0.len()
    }

    /// Total number of vertices `n`.
    pub fn total(&self) -> usize {
        self.0.iter().sum()
    }

    pub fn max_part(&self) -> usize {
        self.0.iter().copied().max().unwrap_or(0)
    }

    /// Size of the block-tuple lattice, `prod n_i`, or `None` on `u128` overflow.
    pub fn lattice_cells(&self) -> Option<u128> {
        self.0
            .iter()
            .try_fold(1u128, |acc, &p| acc.checked_mul(p as u128))
    }

    pub fn contains(&self, m: &BlockTuple) -> bool {
        m.k() == self.k() && m.0.iter().zip(&self.0).all(|(&mi, &ni)| mi <= ni)
    }

    /// Removes one vertex from part `index` (0-based), dropping the part if it
    /// becomes empty. Returns `None` if nothing would be left.
    pub fn without_vertex(&self, index: usize) -> Option<PartSizes> {
        let mut raw = self.0.clone();
        raw[index] -= 1;
        normalize_part_sizes(&raw).ok()
    }
}

impl fmt::Display for PartSizes {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write_tuple(f, &self.0)
    }
}

/// Block counts `(m_1, ..., m_k)`, one per part, each at least 1.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct BlockTuple(Vec<usize>);

impl BlockTuple {
    pub fn new(blocks: Vec<usize>) -> Result<Self> {
        if blocks.is_empty() {
            return Err(Error::NoVertices);
        }
        if blocks.contains(&0) {
            return Err(Error::EmptyPart(blocks));
        }
        Ok(BlockTuple(blocks))
    }

    /// The all-ones tuple of arity `k`.
    pub fn ones(k: usize) -> Self {
        BlockTuple(vec![1; k])
    }

    pub fn as_slice(&self) -> &[usize] {
        &self.0
    }

    pub fn k(&self) -> usize {
        self.0.len()
    }

    pub fn plus_one(&self, i: usize) -> Self {
        let mut v = self.0.clone();
        v[i] += 1;
        BlockTuple(v)
    }

    /// Subtracts one at coordinate `i`; `None` if that would leave a zero.
    pub fn minus_one(&self, i: usize) -> Option<Self> {
        (self.0[i] >= 2).then(|| {
            let mut v = self.0.clone();
            v[i] -= 1;
            BlockTuple(v)
        })
    }
}

impl From<PartSizes> for BlockTuple {
    fn from(n: PartSizes) -> Self {
        BlockTuple(n.0)
    }
}

impl From<BlockTuple> for PartSizes {
    fn from(m: BlockTuple) -> Self {
        PartSizes(m.0)
    }
}

impl fmt::Display for BlockTuple {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write_tuple(f, &self.0)
    }
}

fn write_tuple(f: &mut fmt::Formatter<'_>, xs: &[usize]) -> fmt::Result {
    f.write_str("(")?;
    for (i, x) in xs.iter().enumerate() {
        if i > 0 {
            f.write_str(",")?;
        }
        write!(f, "{x}")?;
    }
    f.write_str(")")
}

/// Drops empty parts. An empty part adds no vertices and no edges, so the
/// graph is unchanged.
pub fn normalize_part_sizes(raw: &[usize]) -> Result<PartSizes> {
    let parts: Vec<usize> = raw.iter().copied().filter(|&p| p > 0).collect();
    if parts.is_empty() {
        return Err(Error::NoVertices);
    }
    PartSizes::new(parts)
}
