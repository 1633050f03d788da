//! Sparse integer matrices holding each of `1..=N` exactly once.
//!
//! Rows and columns are indexed from zero. Row `0` is the top row.

use std::cmp::Ordering;
use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// An `rows x cols` grid with the values `1..=N` placed injectively.
///
/// Every row and every column holds at least one entry. Equality, hashing
/// and ordering all follow the canonical form: the row-major list of
/// `(row, col, value)` triples together with the shape.
#[derive(Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(try_from = "Vec<Vec<u32>>", into = "Vec<Vec<u32>>")]
pub struct SparseIntMatrix {
    rows: usize,
    cols: usize,
    /// `cells[v - 1]` is the position of value `v`.
    cells: Vec<(u8, u8)>,
}

impl SparseIntMatrix {
    /// Builds a matrix from the position of each value, `positions[v - 1] = (row, col)`.
    pub fn from_positions(rows: usize, cols: usize, positions: &[(usize, usize)]) -> Result<Self> {
        if rows == 0 || cols == 0 {
            return Err(Error::InvalidMatrix("empty shape".into()));
        }
        if rows > u8::MAX as usize || cols > u8::MAX as usize {
            return Err(Error::InvalidMatrix("shape too large".into()));
        }
        let mut seen = vec![false; rows * cols];
        let mut row_used = vec![false; rows];
        let mut col_used = vec![false; cols];
        for (i, &(r, c)) in positions.iter().enumerate() {
            if r >= rows || c >= cols {
                return Err(Error::InvalidMatrix(format!(
                    "value {} at ({r}, {c}) outside {rows}x{cols}",
                    i + 1
                )));
            }
            if std::mem::replace(&mut seen[r * cols + c], true) {
                return Err(Error::InvalidMatrix(format!("cell ({r}, {c}) used twice")));
            }
            row_used[r] = true;
            col_used[c] = true;
        }
        if let Some(r) = row_used.iter().position(|u| !u) {
            return Err(Error::InvalidMatrix(format!("row {r} is empty")));
        }
        if let Some(c) = col_used.iter().position(|u| !u) {
            return Err(Error::InvalidMatrix(format!("column {c} is empty")));
        }
        Ok(Self {
            rows,
            cols,
            cells: positions.iter().map(|&(r, c)| (r as u8, c as u8)).collect(),
        })
    }

    /// Builds a matrix from dense rows, `0` marking an absent cell.
    pub fn from_dense(rows: &[Vec<u32>]) -> Result<Self> {
        let height = rows.len();
        let width = rows.first().map_or(0, Vec::len);
        if rows.iter().any(|r| r.len() != width) {
            return Err(Error::InvalidMatrix("ragged rows".into()));
        }
        let n = rows.iter().flatten().filter(|&&v| v != 0).count();
        let mut positions = vec![None; n];
        for (r, row) in rows.iter().enumerate() {
            for (c, &v) in row.iter().enumerate() {
                if v == 0 {
                    continue;
                }
                let slot = positions
                    .get_mut(v as usize - 1)
                    .ok_or_else(|| Error::InvalidMatrix(format!("value {v} exceeds entry count {n}")))?;
                if slot.replace((r, c)).is_some() {
                    return Err(Error::InvalidMatrix(format!("value {v} occurs twice")));
                }
            }
        }
        let positions: Vec<(usize, usize)> = positions.into_iter().map(|p| p.expect("counted")).collect();
        Self::from_positions(height, width, &positions)
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    /// Number of entries `N`.
    pub fn size(&self) -> usize {
        self.cells.len()
    }

    pub fn position(&self, value: u32) -> (usize, usize) {
        let (r, c) = self.cells[value as usize - 1];
        (r as usize, c as usize)
    }

    pub fn row_of(&self, value: u32) -> usize {
        self.cells[value as usize - 1].0 as usize
    }

    pub fn col_of(&self, value: u32) -> usize {
        self.cells[value as usize - 1].1 as usize
    }

    pub fn get(&self, row: usize, col: usize) -> Option<u32> {
        self.cells
            .iter()
            .position(|&(r, c)| r as usize == row && c as usize == col)
            .map(|i| i as u32 + 1)
    }

    /// Entries of a column, top to bottom.
    pub fn column(&self, col: usize) -> Vec<u32> {
        let mut out: Vec<(u8, u32)> = self
            .values()
            .filter(|&v| self.col_of(v) == col)
            .map(|v| (self.cells[v as usize - 1].0, v))
            .collect();
        out.sort_unstable();
        out.into_iter().map(|(_, v)| v).collect()
    }

    /// Entries of a row, left to right.
    pub fn row(&self, row: usize) -> Vec<u32> {
        let mut out: Vec<(u8, u32)> = self
            .values()
            .filter(|&v| self.row_of(v) == row)
            .map(|v| (self.cells[v as usize - 1].1, v))
            .collect();
        out.sort_unstable();
        out.into_iter().map(|(_, v)| v).collect()
    }

    pub fn values(&self) -> impl Iterator<Item = u32> + '_ {
        1..=self.cells.len() as u32
    }

    pub fn positions(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        self.cells.iter().map(|&(r, c)| (r as usize, c as usize))
    }

    pub fn transpose(&self) -> Self {
        Self {
            rows: self.cols,
            cols: self.rows,
            cells: self.cells.iter().map(|&(r, c)| (c, r)).collect(),
        }
    }

    /// Row-major `(row, col, value)` listing.
    pub fn canonical_triples(&self) -> Vec<(usize, usize, u32)> {
        let mut t: Vec<(usize, usize, u32)> = self
            .cells
            .iter()
            .enumerate()
            .map(|(i, &(r, c))| (r as usize, c as usize, i as u32 + 1))
            .collect();
        t.sort_unstable();
        t
    }

    pub fn to_dense(&self) -> Vec<Vec<u32>> {
        let mut out = vec![vec![0; self.cols]; self.rows];
        for (i, &(r, c)) in self.cells.iter().enumerate() {
            out[r as usize][c as usize] = i as u32 + 1;
        }
        out
    }

    /// Drops empty rows and columns, keeping relative order.
    pub(crate) fn retightened(rows: usize, cols: usize, mut cells: Vec<(u8, u8)>) -> Self {
        let mut row_map = vec![None; rows];
        let mut col_map = vec![None; cols];
        for &(r, c) in &cells {
            row_map[r as usize] = Some(0u8);
            col_map[c as usize] = Some(0u8);
        }
        let mut next = 0u8;
        for slot in row_map.iter_mut().flatten() {
            *slot = next;
            next += 1;
        }
        let new_rows = next as usize;
        next = 0;
        for slot in col_map.iter_mut().flatten() {
            *slot = next;
            next += 1;
        }
        let new_cols = next as usize;
        for cell in &mut cells {
            *cell = (row_map[cell.0 as usize].unwrap(), col_map[cell.1 as usize].unwrap());
        }
        Self {
            rows: new_rows,
            cols: new_cols,
            cells,
        }
    }

    pub(crate) fn raw_cells(&self) -> &[(u8, u8)] {
        &self.cells
    }

    pub(crate) fn from_raw(rows: usize, cols: usize, cells: Vec<(u8, u8)>) -> Self {
        Self { rows, cols, cells }
    }

    /// The four step-matrix conditions: each value once, contiguous rows
    /// and columns, strictly increasing rightwards and downwards, and one
    /// entry on every diagonal `col - row` of the full grid.
    pub fn is_step_matrix(&self) -> bool {
        let (r, s) = (self.rows, self.cols);
        if self.size() != r + s - 1 {
            return false;
        }
        let mut diagonal = vec![0usize; r + s - 1];
        for (row, col) in self.positions() {
            diagonal[col + r - 1 - row] += 1;
        }
        if diagonal.iter().any(|&d| d != 1) {
            return false;
        }
        let contiguous_increasing = |line: &[(usize, u32)]| {
            line.windows(2).all(|w| w[1].0 == w[0].0 + 1 && w[1].1 > w[0].1)
        };
        (0..r).all(|i| {
            let line: Vec<(usize, u32)> = self.row(i).into_iter().map(|v| (self.col_of(v), v)).collect();
            contiguous_increasing(&line)
        }) && (0..s).all(|j| {
            let line: Vec<(usize, u32)> = self.column(j).into_iter().map(|v| (self.row_of(v), v)).collect();
            contiguous_increasing(&line)
        })
    }
}

impl Ord for SparseIntMatrix {
    fn cmp(&self, other: &Self) -> Ordering {
        (self.rows, self.cols)
            .cmp(&(other.rows, other.cols))
            .then_with(|| self.canonical_triples().cmp(&other.canonical_triples()))
    }
}

impl PartialOrd for SparseIntMatrix {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl TryFrom<Vec<Vec<u32>>> for SparseIntMatrix {
    type Error = Error;
    fn try_from(rows: Vec<Vec<u32>>) -> Result<Self> {
        Self::from_dense(&rows)
    }
}

impl From<SparseIntMatrix> for Vec<Vec<u32>> {
    fn from(m: SparseIntMatrix) -> Self {
        m.to_dense()
    }
}

/// Rows on lines, entries separated by single spaces, absent cells as `0`.
impl fmt::Display for SparseIntMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (i, row) in self.to_dense().iter().enumerate() {
            if i > 0 {
                writeln!(f)?;
            }
            let line: Vec<String> = row.iter().map(u32::to_string).collect();
            write!(f, "{}", line.join(" "))?;
        }
        Ok(())
    }
}

impl fmt::Debug for SparseIntMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let rows: Vec<String> = self
            .to_dense()
            .iter()
            .map(|r| r.iter().map(u32::to_string).collect::<Vec<_>>().join(" "))
            .collect();
        write!(f, "[{}]", rows.join(" / "))
    }
}

impl FromStr for SparseIntMatrix {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        let rows = s
            .lines()
            .map(str::trim)
            .filter(|l| !l.is_empty())
            .map(|l| {
                l.split_whitespace()
                    .map(|t| {
                        t.parse::<u32>().map_err(|e| Error::Parse {
                            token: t.to_string(),
                            reason: e.to_string(),
                        })
                    })
                    .collect::<Result<Vec<u32>>>()
            })
            .collect::<Result<Vec<_>>>()?;
        Self::from_dense(&rows)
    }
}
