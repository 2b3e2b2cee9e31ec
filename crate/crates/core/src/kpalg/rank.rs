//! Exact rank of sparse rational matrices by incremental row reduction.

use std::collections::{BTreeMap, HashMap};

use num_traits::{One, Zero};

use super::scalar::Scalar;

/// A sparse row: column index to nonzero entry.
pub type SparseRow = BTreeMap<usize, Scalar>;

/// Row space builder. Each stored row is monic at its leading column and no
/// two stored rows share a leading column.
#[derive(Debug, Default)]
pub struct RowReducer {
    pivots: HashMap<usize, SparseRow>,
}

impl RowReducer {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn rank(&self) -> usize {
        self.pivots.len()
    }

    /// Reduces `row` against the stored rows; returns true if it was
    /// independent (and is now stored).
    pub fn insert(&mut self, mut row: SparseRow) -> bool {
        row.retain(|_, v| !v.is_zero());
        loop {
            let Some((&lead, lead_value)) = row.iter().next() else {
                return false;
            };
            match self.pivots.get(&lead) {
                Some(pivot) => {
                    let factor = lead_value.clone();
                    for (col, v) in pivot {
                        let entry = row.entry(*col).or_insert_with(Scalar::zero);
                        *entry -= &factor * v;
                        if entry.is_zero() {
                            row.remove(col);
                        }
                    }
                }
                None => {
                    let inv = Scalar::one() / lead_value;
                    for v in row.values_mut() {
                        *v *= &inv;
                    }
                    self.pivots.insert(lead, row);
                    return true;
                }
            }
        }
    }
}

pub fn rank(rows: impl IntoIterator<Item = SparseRow>) -> usize {
    let mut reducer = RowReducer::new();
    for row in rows {
        reducer.insert(row);
    }
    reducer.rank()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::kpalg::scalar::int;

    fn row(entries: &[(usize, i64)]) -> SparseRow {
        entries.iter().map(|&(c, v)| (c, int(v))).collect()
    }

    #[test]
    fn dependent_rows_do_not_add_rank() {
        let rows = vec![
            row(&[(0, 1), (1, 2)]),
            row(&[(0, 2), (1, 4)]),
            row(&[(1, 1), (2, 1)]),
            row(&[(0, 1), (1, 3), (2, 1)]),
        ];
        assert_eq!(rank(rows), 2);
        assert_eq!(rank(vec![row(&[]), row(&[(3, 0)])]), 0);
    }

    #[test]
    fn identity_has_full_rank() {
        assert_eq!(rank((0..5).map(|i| row(&[(i, 7)]))), 5);
    }
}
