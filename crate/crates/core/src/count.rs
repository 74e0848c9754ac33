use num_traits::{One, Zero};

use crate::hp::{HpTable, Pivot, DEFAULT_MEMORY_CELLS};
use crate::{BigCount, BlockTuple, Error, PartSizes, Result, StirlingTable};

/// Number of Hamiltonian paths, as vertex sequences, of the complete
/// multipartite graph with part sizes `m`. `m` must lie in the lattice of `n`.
pub fn hp_count(n: &PartSizes, m: &BlockTuple) -> Result<BigCount> {
    if !n.contains(m) {
        return Err(Error::OutOfLattice {
            blocks: m.as_slice().to_vec(),
            parts: n.as_slice().to_vec(),
        });
    }
    // Only the sub-lattice below m is needed.
    let shape = PartSizes::from(m.clone());
    let table = HpTable::build(&shape, Pivot::First, DEFAULT_MEMORY_CELLS)?;
    Ok(table.get(m).cloned().unwrap_or_default())
}

/// Number of acyclic orientations of the complete k-partite graph `G_n`.
pub fn ao_count(n: &PartSizes) -> Result<BigCount> {
    ao_count_with_budget(n, DEFAULT_MEMORY_CELLS)
}

/// [`ao_count`] with an explicit cap on the number of lattice cells.
///
/// Sums `s_m * prod_i S(n_i, m_i)` over all block tuples `m`: each term counts
/// the orientations whose block structure cuts part `i` into `m_i` blocks.
pub fn ao_count_with_budget(n: &PartSizes, max_cells: usize) -> Result<BigCount> {
    let table = HpTable::build(n, Pivot::First, max_cells)?;
    let stirling = StirlingTable::build(n.max_part());
    let parts = n.as_slice();
    let mut total = BigCount::zero();
    for (m, s) in table.iter() {
        if s.is_zero() {
            continue;
        }
        let mut term = s.clone();
        for (&ni, &mi) in parts.iter().zip(&m) {
            term *= stirling.get(ni, mi);
        }
        total += term;
    }
    Ok(total)
}

/// Closed form for the complete bipartite graph `K_{n1,n2}`:
/// `sum_i ((i-1)!)^2 S(n1+1, i) S(n2+1, i)` for `i = 1..=min(n1, n2) + 1`.
pub fn ao_count_bipartite_closed_form(n1: usize, n2: usize) -> BigCount {
    let stirling = StirlingTable::build(n1.max(n2) + 1);
    let mut factorial = BigCount::one();
    let mut total = BigCount::zero();
    for i in 1..=n1.min(n2) + 1 {
        if i > 1 {
            factorial *= i - 1;
        }
        total += &factorial * &factorial * stirling.get(n1 + 1, i) * stirling.get(n2 + 1, i);
    }
    total
}

/// Acyclic orientations of `G_n` plus one edge joining two vertices of part
/// `part_index` (1-based). Deleting the edge gives `G_n`; contracting it gives
/// `G_n` with that part one vertex smaller.
pub fn ao_count_plus_inner_edge(n: &PartSizes, part_index: usize) -> Result<BigCount> {
    ao_count_plus_inner_edge_with_budget(n, part_index, DEFAULT_MEMORY_CELLS)
}

pub fn ao_count_plus_inner_edge_with_budget(
    n: &PartSizes,
    part_index: usize,
    max_cells: usize,
) -> Result<BigCount> {
    if part_index == 0 || part_index > n.k() {
        return Err(Error::PartIndex {
            index: part_index,
            parts: n.k(),
        });
    }
    let i = part_index - 1;
    let size = n.as_slice()[i];
    if size < 2 {
        return Err(Error::PartTooSmall {
            index: part_index,
            size,
        });
    }
    let contracted = n
        .without_vertex(i)
        .expect("part of size >= 2 survives losing one vertex");
    Ok(ao_count_with_budget(n, max_cells)? + ao_count_with_budget(&contracted, max_cells)?)
}
