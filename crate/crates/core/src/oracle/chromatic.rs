use std::collections::HashMap;

use num_bigint::BigInt;

use super::{check_cap, OracleCaps, SmallGraph};
use crate::{BigCount, Result};

/// Evaluates the chromatic polynomial `chi(g; x)` by deletion-contraction,
/// `chi(G) = chi(G - e) - chi(G / e)`, down to edgeless graphs where
/// `chi = x^v`. Contraction keeps the graph simple.
pub fn chromatic_polynomial_at(g: &SmallGraph, x: i64, caps: &OracleCaps) -> Result<BigInt> {
    check_cap("edge count", g.edge_count(), caps.chromatic_edges)?;
    check_cap("vertex count", g.vertex_count(), 64)?;
    let mut memo = HashMap::new();
    Ok(eval(g.adjacency_masks(), &BigInt::from(x), &mut memo))
}

/// `(-1)^|V| chi(g; -1)`, the number of acyclic orientations of `g`.
pub fn acyclic_orientations_via_chromatic(g: &SmallGraph, caps: &OracleCaps) -> Result<BigCount> {
    let chi = chromatic_polynomial_at(g, -1, caps)?;
    let signed = if g.vertex_count().is_multiple_of(2) {
        chi
    } else {
        -chi
    };
    Ok(signed
        .to_biguint()
        .expect("(-1)^|V| chi(G; -1) is nonnegative"))
}

fn eval(adj: Vec<u64>, x: &BigInt, memo: &mut HashMap<Vec<u64>, BigInt>) -> BigInt {
    let Some(u) = adj.iter().position(|&m| m != 0) else {
        return x.pow(adj.len() as u32);
    };
    if let Some(v) = memo.get(&adj) {
        return v.clone();
    }
    let w = adj[u].trailing_zeros() as usize;

    let mut deleted = adj.clone();
    deleted[u] &= !(1 << w);
    deleted[w] &= !(1 << u);

    // Merge w into u, then drop w and close the gap in the labels.
    let mut merged = deleted.clone();
    let w_nbrs = merged[w];
    merged[u] |= w_nbrs;
    for (z, m) in merged.iter_mut().enumerate() {
        if w_nbrs >> z & 1 == 1 {
            *m = (*m & !(1 << w)) | 1 << u;
        }
    }
    merged.remove(w);
    for m in merged.iter_mut() {
        *m = remove_bit(*m, w);
    }

    let value = eval(deleted, x, memo) - eval(merged, x, memo);
    memo.insert(adj, value.clone());
    value
}

fn remove_bit(mask: u64, bit: usize) -> u64 {
    let low = mask & ((1u64 << bit) - 1);
    let high = if bit == 63 {
        0
    } else {
        (mask >> (bit + 1)) << bit
    };
    low | high
}
