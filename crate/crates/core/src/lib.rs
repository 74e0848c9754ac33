//! Exact counting of acyclic orientations of complete k-partite graphs.
//!
//! The number of acyclic orientations of `G_n` is assembled from two tables:
//! the Stirling numbers of the second kind, which count the ways of cutting
//! every part into blocks, and the Hamiltonian-path counts `s_m` of the
//! complete multipartite graphs whose part sizes are the block counts `m`.
//! The path counts are filled by a recurrence over the lattice of block
//! tuples, so the whole computation takes `n^O(k)` big-integer steps.
//!
//! ```
//! use kpartite_ao::{ao_count, PartSizes};
//!
//! let square = PartSizes::new(vec![2, 2]).unwrap();
//! assert_eq!(ao_count(&square).unwrap(), 14u32.into());
//! ```
//!
//! The [`oracle`] module holds slow, independent brute-force counters used to
//! check the fast path.

mod count;
mod error;
mod hp;
mod parts;
mod stirling;

pub mod oracle;

pub use count::{
    ao_count, ao_count_bipartite_closed_form, ao_count_plus_inner_edge,
    ao_count_plus_inner_edge_with_budget, ao_count_with_budget, hp_count,
};
pub use error::Error;
pub use hp::{build_hp_table, hp_feasible, HpTable, Pivot, DEFAULT_MEMORY_CELLS};
pub use parts::{normalize_part_sizes, BlockTuple, PartSizes};
pub use stirling::StirlingTable;

/// Arbitrary-precision nonnegative count.
pub type BigCount = num_bigint::BigUint;

pub type Result<T, E = Error> = std::result::Result<T, E>;
