use num_traits::{One, Zero};

use crate::BigCount;

/// Stirling numbers of the second kind `S(a, b)` for `0 <= b <= a <= max_a`,
/// stored row by row in a triangle.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct StirlingTable {
    max_a: usize,
    rows: Vec<Vec<BigCount>>,
}

impl StirlingTable {
    /// Fills the triangle with `S(a, b) = b S(a-1, b) + S(a-1, b-1)`.
    pub fn build(max_a: usize) -> Self {
        let mut rows: Vec<Vec<BigCount>> = Vec::with_capacity(max_a + 1);
        rows.push(vec![BigCount::one()]);
        for a in 1..=max_a {
            let prev = &rows[a - 1];
            let mut row = Vec::with_capacity(a + 1);
            row.push(BigCount::zero());
            for b in 1..=a {
                let mut v = if b < a {
                    &prev[b] * b
                } else {
                    BigCount::zero()
                };
                v += &prev[b - 1];
                row.push(v);
            }
            rows.push(row);
        }
        StirlingTable { max_a, rows }
    }

    pub fn max_a(&self) -> usize {
        self.max_a
    }

    /// `S(a, b)`; zero when `b > a`.
    ///
    /// Panics if `a > max_a`.
    pub fn get(&self, a: usize, b: usize) -> &BigCount {
        static ZERO: BigCount = BigCount::ZERO;
        assert!(
            a <= self.max_a,
            "S({a}, _) is beyond table size {}",
            self.max_a
        );
        self.rows[a].get(b).unwrap_or(&ZERO)
    }

    /// Row `a`: `S(a, 0), ..., S(a, a)`.
    pub fn row(&self, a: usize) -> &[BigCount] {
        &self.rows[a]
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn u(x: u64) -> BigCount {
        BigCount::from(x)
    }

    #[test]
    fn small_rows() {
        let t = StirlingTable::build(2);
        assert_eq!(t.get(0, 0), &u(1));
        assert_eq!(t.get(2, 1), &u(1));
        assert_eq!(t.get(2, 2), &u(1));
        assert_eq!(t.get(2, 0), &u(0));
        assert_eq!(t.get(1, 2), &u(0));
    }

    #[test]
    fn known_values() {
        let t = StirlingTable::build(8);
        assert_eq!(t.get(5, 3), &u(25));
        assert_eq!(t.get(6, 2), &u(31));
        assert_eq!(t.get(8, 2), &u(127));
        assert_eq!(t.row(5), &[u(0), u(1), u(15), u(25), u(10), u(1)]);
    }

    #[test]
    #[should_panic]
    fn beyond_table_panics() {
        StirlingTable::build(3).get(4, 1);
    }
}
