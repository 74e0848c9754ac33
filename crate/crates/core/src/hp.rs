use num_traits::{One, Zero};

use crate::{BigCount, BlockTuple, Error, PartSizes, Result};

/// Default cap on the number of lattice cells an [`HpTable`] may allocate.
pub const DEFAULT_MEMORY_CELLS: usize = 1 << 31;

/// Which coordinate the recurrence steps down from when several are `>= 2`.
/// Every choice gives the same table.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum Pivot {
    #[default]
    First,
    Last,
}

/// Whether the complete multipartite graph with part sizes `m` has a
/// Hamiltonian path: no part may hold more than one vertex beyond the rest.
pub fn hp_feasible(m: &[usize]) -> bool {
    let total: usize = m.iter().sum();
    let max = m.iter().copied().max().unwrap_or(0);
    2 * max <= total + 1
}

/// Hamiltonian-path counts `s_m` for every block tuple `1 <= m <= n`, stored
/// densely in row-major order (last coordinate fastest).
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct HpTable {
    shape: PartSizes,
    strides: Vec<usize>,
    values: Vec<BigCount>,
}

/// Builds the table with the default pivot and memory budget.
pub fn build_hp_table(n: &PartSizes) -> Result<HpTable> {
    HpTable::build(n, Pivot::First, DEFAULT_MEMORY_CELLS)
}

impl HpTable {
    pub fn build(n: &PartSizes, pivot: Pivot, max_cells: usize) -> Result<Self> {
        let cells = n.lattice_cells().unwrap_or(u128::MAX);
        if cells > max_cells as u128 {
            return Err(Error::Capacity {
                cells,
                budget: max_cells,
            });
        }
        let cells = cells as usize;
        let dims = n.as_slice();
        let k = dims.len();

        let mut strides = vec![1usize; k];
        for i in (0..k.saturating_sub(1)).rev() {
            strides[i] = strides[i + 1] * dims[i + 1];
        }

        // Every recurrence dependency has a smaller coordinate sum, so
        // visiting cells bucketed by sum is a valid schedule.
        let max_sum = n.total() - k;
        let mut by_sum: Vec<Vec<usize>> = vec![Vec::new(); max_sum + 1];
        let mut m = vec![1usize; k];
        for idx in 0..cells {
            by_sum[m.iter().sum::<usize>() - k].push(idx);
            advance(&mut m, dims);
        }

        let k_factorial = (1..=k).fold(BigCount::one(), |acc, j| acc * j);
        let mut values = vec![BigCount::zero(); cells];
        let mut m = vec![0usize; k];
        for idx in by_sum.into_iter().flatten() {
            decode(idx, &strides, &mut m);
            values[idx] = cell_value(&m, idx, &strides, &values, pivot, &k_factorial);
        }

        Ok(HpTable {
            shape: n.clone(),
            strides,
            values,
        })
    }

    pub fn shape(&self) -> &PartSizes {
        &self.shape
    }

    pub fn len(&self) -> usize {
        self.values.len()
    }

    pub fn is_empty(&self) -> bool {
        self.values.is_empty()
    }

    /// `s_m`, or `None` if `m` lies outside the lattice.
    pub fn get(&self, m: &BlockTuple) -> Option<&BigCount> {
        self.shape
            .contains(m)
            .then(|| &self.values[self.index_of(m.as_slice())])
    }

    /// All cells as `(m, s_m)` in row-major order.
    pub fn iter(&self) -> impl Iterator<Item = (Vec<usize>, &BigCount)> + '_ {
        let mut m = vec![0usize; self.shape.k()];
        self.values.iter().enumerate().map(move |(idx, v)| {
            decode(idx, &self.strides, &mut m);
            (m.clone(), v)
        })
    }

    fn index_of(&self, m: &[usize]) -> usize {
        m.iter()
            .zip(&self.strides)
            .map(|(&mi, &s)| (mi - 1) * s)
            .sum()
    }
}

fn cell_value(
    m: &[usize],
    idx: usize,
    strides: &[usize],
    values: &[BigCount],
    pivot: Pivot,
    k_factorial: &BigCount,
) -> BigCount {
    if !hp_feasible(m) {
        return BigCount::zero();
    }
    let eligible = |&i: &usize| m[i] >= 2;
    let i = match pivot {
        Pivot::First => (0..m.len()).find(eligible),
        Pivot::Last => (0..m.len()).rev().find(eligible),
    };
    let Some(i) = i else {
        // m = (1, ..., 1): the complete graph K_k.
        return k_factorial.clone();
    };

    // m = p + 1_i. Insert the new vertex of part i into a path of G_p at a
    // slot not touching part i, or between two vertices of another part j.
    let p_idx = idx - strides[i];
    let p_i = m[i] - 1;
    let others: usize = m.iter().sum::<usize>() - m[i];
    // Feasibility of m gives others >= p_i.
    let slots = 1 + others - p_i;
    let mut s = &values[p_idx] * slots;
    for (j, &p_j) in m.iter().enumerate() {
        if j != i && p_j >= 2 {
            s += &values[p_idx - strides[j]] * (p_j * (p_j - 1));
        }
    }
    s
}

/// Steps `m` to the next tuple in row-major order over `1..=dims[i]`.
fn advance(m: &mut [usize], dims: &[usize]) {
    for i in (0..m.len()).rev() {
        if m[i] < dims[i] {
            m[i] += 1;
            return;
        }
        m[i] = 1;
    }
}

fn decode(mut idx: usize, strides: &[usize], m: &mut [usize]) {
    for (mi, &s) in m.iter_mut().zip(strides) {
        *mi = idx / s + 1;
        idx %= s;
    }
}
