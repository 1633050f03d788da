//! Right and down shifts of matrix entries.

use serde::{Deserialize, Serialize};

use super::matrix::SparseIntMatrix;
use crate::error::{contract, Result};

/// One recorded move. `index` is the source column (right shift) or
/// source row (down shift); `subset` lists the moved values.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "lowercase")]
pub enum Shift {
    Right { index: usize, subset: Vec<u32> },
    Down { index: usize, subset: Vec<u32> },
}

#[derive(Clone, Copy, PartialEq, Eq)]
pub(crate) enum Axis {
    /// Entries move from column `j` to column `j + 1`.
    Right,
    /// Entries move from row `i` to row `i + 1`.
    Down,
}

impl Axis {
    /// (line coordinate, cross coordinate) of a cell.
    #[inline]
    fn split(self, cell: (u8, u8)) -> (u8, u8) {
        match self {
            Axis::Right => (cell.1, cell.0),
            Axis::Down => (cell.0, cell.1),
        }
    }

    fn extent(self, rows: usize, cols: usize) -> (usize, usize) {
        match self {
            Axis::Right => (cols, rows),
            Axis::Down => (rows, cols),
        }
    }
}

/// Admissibility of moving `subset` (values sitting on `line`) one step
/// along `axis`. `subset` must be non-empty and sorted ascending.
///
/// A move off the last line is never admissible: shifts act inside the
/// fixed `rows x cols` frame.
#[inline]
pub(crate) fn admissible(cells: &[(u8, u8)], rows: usize, cols: usize, axis: Axis, line: usize, subset: &[u32]) -> bool {
    let (lines, cross) = axis.extent(rows, cols);
    if line + 1 >= lines {
        return false;
    }
    let target = (line + 1) as u8;
    let min = subset[0];
    let mut max_next = 0u32;
    let mut occupied = 0u64;
    for (i, &cell) in cells.iter().enumerate() {
        let (l, c) = axis.split(cell);
        if l == target {
            max_next = max_next.max(i as u32 + 1);
            occupied |= 1 << c;
        }
    }
    if min <= max_next {
        return false;
    }
    // No entry of the target line at or beyond min's cross coordinate.
    let start = axis.split(cells[min as usize - 1]).1 as usize;
    let beyond = if cross >= 64 { u64::MAX } else { (1u64 << cross) - 1 } & !((1u64 << start) - 1);
    occupied & beyond == 0
}

#[inline]
pub(crate) fn apply_unchecked(cells: &mut [(u8, u8)], axis: Axis, subset: &[u32]) {
    for &v in subset {
        let cell = &mut cells[v as usize - 1];
        match axis {
            Axis::Right => cell.1 += 1,
            Axis::Down => cell.0 += 1,
        }
    }
}

impl SparseIntMatrix {
    fn checked_subset(&self, axis: Axis, line: usize, subset: &[u32]) -> Result<Vec<u32>> {
        if subset.is_empty() {
            return contract("shift subset must be non-empty");
        }
        let mut sorted = subset.to_vec();
        sorted.sort_unstable();
        sorted.dedup();
        for &v in &sorted {
            let on_line = v >= 1
                && (v as usize) <= self.size()
                && match axis {
                    Axis::Right => self.col_of(v) == line,
                    Axis::Down => self.row_of(v) == line,
                };
            if !on_line {
                let what = if axis == Axis::Right { "column" } else { "row" };
                return contract(format!("{v} is not an entry of {what} {line}"));
            }
        }
        Ok(sorted)
    }

    fn shifted(&self, axis: Axis, line: usize, subset: &[u32]) -> Result<SparseIntMatrix> {
        let subset = self.checked_subset(axis, line, subset)?;
        if !admissible(self.raw_cells(), self.rows(), self.cols(), axis, line, &subset) {
            return Ok(self.clone());
        }
        let mut cells = self.raw_cells().to_vec();
        apply_unchecked(&mut cells, axis, &subset);
        Ok(SparseIntMatrix::retightened(self.rows(), self.cols(), cells))
    }

    pub fn right_shift_admissible(&self, col: usize, subset: &[u32]) -> Result<bool> {
        let subset = self.checked_subset(Axis::Right, col, subset)?;
        Ok(admissible(self.raw_cells(), self.rows(), self.cols(), Axis::Right, col, &subset))
    }

    pub fn down_shift_admissible(&self, row: usize, subset: &[u32]) -> Result<bool> {
        let subset = self.checked_subset(Axis::Down, row, subset)?;
        Ok(admissible(self.raw_cells(), self.rows(), self.cols(), Axis::Down, row, &subset))
    }

    /// `R_M G`: moves the entries `subset` of column `col` one column right
    /// when `min subset` exceeds every entry of column `col + 1` and the
    /// cells of column `col + 1` from the row of `min subset` down are
    /// empty. Returns the matrix unchanged otherwise. Columns left empty are
    /// removed.
    pub fn right_shift(&self, col: usize, subset: &[u32]) -> Result<SparseIntMatrix> {
        self.shifted(Axis::Right, col, subset)
    }

    /// `D_N G`, the transpose dual of [`right_shift`](Self::right_shift).
    pub fn down_shift(&self, row: usize, subset: &[u32]) -> Result<SparseIntMatrix> {
        self.shifted(Axis::Down, row, subset)
    }

    pub fn apply_shift(&self, shift: &Shift) -> Result<SparseIntMatrix> {
        match shift {
            Shift::Right { index, subset } => self.right_shift(*index, subset),
            Shift::Down { index, subset } => self.down_shift(*index, subset),
        }
    }
}
