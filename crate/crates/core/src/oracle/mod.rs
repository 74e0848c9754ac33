//! Brute-force counters that share no code with the lattice recurrence.
//!
//! Each oracle is exponential and guarded by a cap from [`OracleCaps`];
//! exceeding a cap is an [`Error::OracleCap`](crate::Error::OracleCap), never a
//! silently truncated count.

mod chromatic;
mod graph;
mod hamiltonian;
mod orientations;
mod partitions;

pub use chromatic::{acyclic_orientations_via_chromatic, chromatic_polynomial_at};
pub use graph::{make_complete_multipartite, SmallGraph};
pub use hamiltonian::count_hamiltonian_paths_brute;
pub use orientations::count_acyclic_orientations_brute;
pub use partitions::{count_phi_brute, set_partitions, BlockCollection};

use crate::{Error, PartSizes, Result};

/// Size limits for the brute-force oracles.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct OracleCaps {
    /// Vertices in a generated complete multipartite graph.
    pub multipartite_vertices: usize,
    /// Edges for orientation enumeration.
    pub orientation_edges: usize,
    /// Edges for deletion-contraction.
    pub chromatic_edges: usize,
    /// Vertices for Hamiltonian-path backtracking.
    pub hamiltonian_vertices: usize,
    /// Vertices for block-permutation enumeration.
    pub phi_vertices: usize,
}

impl Default for OracleCaps {
    fn default() -> Self {
        OracleCaps {
            multipartite_vertices: 12,
            orientation_edges: 24,
            chromatic_edges: 24,
            hamiltonian_vertices: 10,
            phi_vertices: 8,
        }
    }
}

pub(crate) fn check_cap(what: &'static str, value: usize, cap: usize) -> Result<()> {
    if value > cap {
        Err(Error::OracleCap { what, value, cap })
    } else {
        Ok(())
    }
}

/// Every part-size tuple (order matters) with at most `max_parts` parts and at
/// most `max_total` vertices, by increasing total.
pub fn part_sizes_up_to(max_total: usize, max_parts: usize) -> Vec<PartSizes> {
    fn compositions(
        rest: usize,
        parts_left: usize,
        prefix: &mut Vec<usize>,
        out: &mut Vec<Vec<usize>>,
    ) {
        if rest == 0 {
            out.push(prefix.clone());
            return;
        }
        if parts_left == 0 {
            return;
        }
        for first in 1..=rest {
            prefix.push(first);
            compositions(rest - first, parts_left - 1, prefix, out);
            prefix.pop();
        }
    }
    let mut out = Vec::new();
    for total in 1..=max_total {
        compositions(total, max_parts, &mut Vec::new(), &mut out);
    }
    out.into_iter()
        .map(|parts| PartSizes::new(parts).expect("compositions have positive parts"))
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn composition_counts() {
        // Compositions of t into at most 2 parts: 1 + (t - 1).
        assert_eq!(part_sizes_up_to(4, 2).len(), 1 + 2 + 3 + 4);
        assert_eq!(part_sizes_up_to(8, 4).len(), 162);
        assert!(part_sizes_up_to(3, 3)
            .iter()
            .any(|n| n.as_slice() == [1, 1, 1]));
        assert!(part_sizes_up_to(0, 3).is_empty());
    }
}
