use super::{check_cap, OracleCaps};
use crate::{BigCount, PartSizes, Result};

/// Counts vertex sequences of `G_n` that visit every vertex once and never
/// put two vertices of the same part next to each other. A path and its
/// reversal are different sequences.
pub fn count_hamiltonian_paths_brute(n: &PartSizes, caps: &OracleCaps) -> Result<BigCount> {
    check_cap("vertex count", n.total(), caps.hamiltonian_vertices)?;
    let label: Vec<usize> = n
        .as_slice()
        .iter()
        .enumerate()
        .flat_map(|(i, &size)| std::iter::repeat_n(i, size))
        .collect();
    let mut used = vec![false; label.len()];
    Ok(extend(&label, &mut used, None, 0).into())
}

fn extend(label: &[usize], used: &mut [bool], last: Option<usize>, placed: usize) -> u64 {
    if placed == label.len() {
        return 1;
    }
    let mut total = 0;
    for v in 0..label.len() {
        if used[v] || last.is_some_and(|u| label[u] == label[v]) {
            continue;
        }
        used[v] = true;
        total += extend(label, used, Some(v), placed + 1);
        used[v] = false;
    }
    total
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::Error;

    fn hp(n: &[usize]) -> u64 {
        let n = PartSizes::new(n.to_vec()).unwrap();
        u64::try_from(count_hamiltonian_paths_brute(&n, &OracleCaps::default()).unwrap()).unwrap()
    }

    #[test]
    fn small_values() {
        assert_eq!(hp(&[1, 1]), 2);
        assert_eq!(hp(&[2, 2]), 8);
        assert_eq!(hp(&[3, 1]), 0);
        assert_eq!(hp(&[2, 1]), 2);
        assert_eq!(hp(&[1]), 1);
        assert_eq!(hp(&[2]), 0);
        assert_eq!(hp(&[1, 1, 1, 1]), 24);
    }

    #[test]
    fn cap() {
        let n = PartSizes::new(vec![6, 5]).unwrap();
        assert!(matches!(
            count_hamiltonian_paths_brute(&n, &OracleCaps::default()),
            Err(Error::OracleCap { value: 11, .. })
        ));
    }
}
