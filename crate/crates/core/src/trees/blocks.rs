//! Derived-consecutive blocks of matrix lines.

use serde::{Deserialize, Serialize};

use crate::su_diagonal::SparseIntMatrix;

/// A column or a row of a matrix.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "kind", content = "index", rename_all = "lowercase")]
pub enum Line {
    Column(usize),
    Row(usize),
}

/// Splits the entries of `line` (ascending) into maximal runs in which
/// every integer strictly between two neighbours already sits in an
/// earlier line: a column further left, or a row further down.
pub fn derived_consecutive_blocks(m: &SparseIntMatrix, line: Line) -> Vec<Vec<u32>> {
    let (entries, earlier): (Vec<u32>, Box<dyn Fn(u32) -> bool>) = match line {
        Line::Column(j) => (m.column(j), Box::new(move |v| m.col_of(v) < j)),
        Line::Row(i) => (m.row(i), Box::new(move |v| m.row_of(v) > i)),
    };
    let mut entries = entries;
    entries.sort_unstable();
    let mut blocks: Vec<Vec<u32>> = Vec::new();
    for g in entries {
        match blocks.last_mut() {
            Some(b) if (*b.last().unwrap() + 1..g).all(&earlier) => b.push(g),
            _ => blocks.push(vec![g]),
        }
    }
    blocks
}

/// Every row and every column is a single derived-consecutive block.
/// Equivalent to both Tonks images of the matrix's pairing being non-zero.
pub fn is_nondegenerate_matrix(m: &SparseIntMatrix) -> bool {
    if m.size() < 128 {
        return nondegenerate_bits(m.raw_cells(), m.rows(), m.cols());
    }
    (0..m.cols()).all(|j| derived_consecutive_blocks(m, Line::Column(j)).len() == 1)
        && (0..m.rows()).all(|i| derived_consecutive_blocks(m, Line::Row(i)).len() == 1)
}

/// Bitmask version over raw cells, `N < 128`.
pub(crate) fn nondegenerate_bits(cells: &[(u8, u8)], rows: usize, cols: usize) -> bool {
    let mut col_mask = vec![0u128; cols];
    let mut row_mask = vec![0u128; rows];
    for (i, &(r, c)) in cells.iter().enumerate() {
        col_mask[c as usize] |= 1 << (i + 1);
        row_mask[r as usize] |= 1 << (i + 1);
    }
    let single_block = |line: u128, before: u128| {
        // Between the smallest and largest entries, every gap is earlier.
        let lo = line.trailing_zeros();
        let hi = 127 - line.leading_zeros();
        let span = if hi == 127 { u128::MAX } else { (1u128 << (hi + 1)) - 1 } & !((1u128 << lo) - 1);
        span & !line & !before == 0
    };
    let mut before = 0u128;
    for &mask in &col_mask {
        if !single_block(mask, before) {
            return false;
        }
        before |= mask;
    }
    before = 0;
    for &mask in row_mask.iter().rev() {
        if !single_block(mask, before) {
            return false;
        }
        before |= mask;
    }
    true
}

#[cfg(test)]
mod tests {
    use super::*;

    fn m(rows: &[&[u32]]) -> SparseIntMatrix {
        SparseIntMatrix::from_dense(&rows.iter().map(|r| r.to_vec()).collect::<Vec<_>>()).unwrap()
    }

    #[test]
    fn single_entry_line() {
        let g = m(&[&[1, 2], &[3, 0]]);
        assert_eq!(derived_consecutive_blocks(&g, Line::Column(1)), vec![vec![2]]);
    }

    #[test]
    fn single_row_is_one_block() {
        let g = m(&[&[1, 2, 3, 4, 5]]);
        assert_eq!(derived_consecutive_blocks(&g, Line::Row(0)), vec![vec![1, 2, 3, 4, 5]]);
        assert!(is_nondegenerate_matrix(&g));
    }

    #[test]
    fn gap_filled_later_splits() {
        // Column 0 holds 1 and 3; 2 sits in column 1, to the right.
        let g = m(&[&[1, 2], &[3, 0]]);
        assert_eq!(derived_consecutive_blocks(&g, Line::Column(0)), vec![vec![1], vec![3]]);
        assert!(!is_nondegenerate_matrix(&g));
        // Row 0 holds 1 and 3; 2 sits lower down, so the gap is filled.
        let g = m(&[&[1, 3], &[2, 0]]);
        assert_eq!(derived_consecutive_blocks(&g, Line::Row(0)), vec![vec![1, 3]]);
    }

    #[test]
    fn bit_and_block_versions_agree() {
        for n in 1..=5 {
            for g in crate::su_diagonal::derived_matrices(n).unwrap().matrices() {
                let slow = (0..g.cols()).all(|j| derived_consecutive_blocks(g, Line::Column(j)).len() == 1)
                    && (0..g.rows()).all(|i| derived_consecutive_blocks(g, Line::Row(i)).len() == 1);
                assert_eq!(slow, is_nondegenerate_matrix(g), "{g}");
            }
        }
    }
}
