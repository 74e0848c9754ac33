use super::{check_cap, OracleCaps};
use crate::{BigCount, PartSizes, Result};

/// All set partitions of `{0, ..., size-1}`, each as a list of blocks.
///
/// Built from restricted growth strings: element `e` joins an existing block
/// or opens the next new one.
pub fn set_partitions(size: usize) -> Vec<Vec<Vec<usize>>> {
    let mut out = Vec::new();
    let mut current: Vec<Vec<usize>> = Vec::new();
    grow(0, size, &mut current, &mut out);
    out
}

fn grow(e: usize, size: usize, current: &mut Vec<Vec<usize>>, out: &mut Vec<Vec<Vec<usize>>>) {
    if e == size {
        out.push(current.clone());
        return;
    }
    for b in 0..current.len() {
        current[b].push(e);
        grow(e + 1, size, current, out);
        current[b].pop();
    }
    current.push(vec![e]);
    grow(e + 1, size, current, out);
    current.pop();
}

/// A choice of set partition for every part: `(part, vertices)` pairs, where
/// vertices are indices local to the part.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BlockCollection {
    pub blocks: Vec<(usize, Vec<usize>)>,
}

impl BlockCollection {
    /// Every block collection of `G_n`.
    pub fn all(n: &PartSizes) -> Vec<BlockCollection> {
        let mut collections = vec![BlockCollection { blocks: Vec::new() }];
        for (part, &size) in n.as_slice().iter().enumerate() {
            let options = set_partitions(size);
            collections = collections
                .into_iter()
                .flat_map(|c| {
                    options.iter().map(move |partition| {
                        let mut c = c.clone();
                        c.blocks
                            .extend(partition.iter().map(|block| (part, block.clone())));
                        c
                    })
                })
                .collect();
        }
        collections
    }

    pub fn block_counts(&self, k: usize) -> Vec<usize> {
        let mut counts = vec![0; k];
        for (part, _) in &self.blocks {
            counts[*part] += 1;
        }
        counts
    }

    /// Number of orderings of the blocks in which neighbouring blocks come
    /// from different parts.
    pub fn count_alternating_orders(&self) -> u64 {
        let labels: Vec<usize> = self.blocks.iter().map(|(p, _)| *p).collect();
        let mut used = vec![false; labels.len()];
        orders(&labels, &mut used, None, 0)
    }
}

fn orders(labels: &[usize], used: &mut [bool], last: Option<usize>, placed: usize) -> u64 {
    if placed == labels.len() {
        return 1;
    }
    let mut total = 0;
    for b in 0..labels.len() {
        if used[b] || last == Some(labels[b]) {
            continue;
        }
        used[b] = true;
        total += orders(labels, used, Some(labels[b]), placed + 1);
        used[b] = false;
    }
    total
}

/// Sums, over every block collection `F`, the number of block orders with no
/// two neighbouring blocks from the same part.
pub fn count_phi_brute(n: &PartSizes, caps: &OracleCaps) -> Result<BigCount> {
    check_cap("vertex count", n.total(), caps.phi_vertices)?;
    let total: u64 = BlockCollection::all(n)
        .iter()
        .map(BlockCollection::count_alternating_orders)
        .sum();
    Ok(total.into())
}
