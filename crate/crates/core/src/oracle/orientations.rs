use super::{check_cap, OracleCaps, SmallGraph};
use crate::{BigCount, Result};

/// Counts acyclic orientations by trying all `2^|E|` orientations.
///
/// Orientations are visited in Gray-code order so each step reverses a single
/// edge; every visited orientation gets a full cycle check.
pub fn count_acyclic_orientations_brute(g: &SmallGraph, caps: &OracleCaps) -> Result<BigCount> {
    let edge_count = g.edge_count();
    check_cap("edge count", edge_count, caps.orientation_edges)?;
    check_cap("vertex count", g.vertex_count(), 64)?;

    let edges = g.edges();
    let mut out = vec![0u64; g.vertex_count()];
    for &(a, b) in edges {
        out[a] |= 1 << b;
    }
    let mut stack = Vec::with_capacity(g.vertex_count());
    let mut acyclic: u64 = is_acyclic(&out, &mut stack) as u64;
    for step in 1u64..1 << edge_count {
        let (a, b) = edges[step.trailing_zeros() as usize];
        out[a] ^= 1 << b;
        out[b] ^= 1 << a;
        acyclic += is_acyclic(&out, &mut stack) as u64;
    }
    Ok(acyclic.into())
}

/// Depth-first search with white / on-path / finished marking. `stack` holds
/// `(vertex, successors not yet explored)`.
fn is_acyclic(out: &[u64], stack: &mut Vec<(usize, u64)>) -> bool {
    let mut finished = 0u64;
    for root in 0..out.len() {
        if finished >> root & 1 == 1 {
            continue;
        }
        let mut on_path = 1u64 << root;
        stack.clear();
        stack.push((root, out[root]));
        while let Some((v, pending)) = stack.last_mut() {
            if *pending == 0 {
                on_path &= !(1 << *v);
                finished |= 1 << *v;
                stack.pop();
                continue;
            }
            let w = pending.trailing_zeros() as usize;
            *pending &= *pending - 1;
            if on_path >> w & 1 == 1 {
                return false;
            }
            if finished >> w & 1 == 0 {
                on_path |= 1 << w;
                stack.push((w, out[w]));
            }
        }
    }
    true
}
