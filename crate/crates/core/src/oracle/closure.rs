//! Step matrices by brute force and the closure under arbitrary shifts.

use std::collections::{BTreeSet, HashSet, VecDeque};

use crate::error::{Error, Result};
use crate::su_diagonal::SparseIntMatrix;

pub const ORACLE_MAX_N: usize = 6;

pub(super) fn check_size(what: &'static str, n: usize, cap: usize) -> Result<()> {
    if n > cap {
        return Err(Error::ResourceLimit {
            what,
            requested: n,
            cap,
        });
    }
    if n == 0 {
        return Err(Error::Contract(format!("{what} needs a positive size")));
    }
    Ok(())
}

/// Dense grid, `0` for an empty cell.
#[derive(Clone, PartialEq, Eq, Hash)]
struct Grid {
    rows: usize,
    cols: usize,
    cells: Vec<u32>,
}

impl Grid {
    fn at(&self, r: usize, c: usize) -> u32 {
        self.cells[r * self.cols + c]
    }

    fn set(&mut self, r: usize, c: usize, v: u32) {
        self.cells[r * self.cols + c] = v;
    }

    fn to_matrix(&self) -> SparseIntMatrix {
        let dense: Vec<Vec<u32>> = self.cells.chunks(self.cols).map(<[u32]>::to_vec).collect();
        SparseIntMatrix::from_dense(&dense).expect("oracle grids are tight")
    }

    fn from_matrix(m: &SparseIntMatrix) -> Self {
        Grid {
            rows: m.rows(),
            cols: m.cols(),
            cells: m.to_dense().concat(),
        }
    }

    fn transposed(&self) -> Self {
        let mut t = Grid {
            rows: self.cols,
            cols: self.rows,
            cells: vec![0; self.cells.len()],
        };
        for r in 0..self.rows {
            for c in 0..self.cols {
                t.set(c, r, self.at(r, c));
            }
        }
        t
    }

    /// The four defining conditions, checked literally.
    fn is_step(&self, n: usize) -> bool {
        let mut seen = vec![false; n + 1];
        for &v in &self.cells {
            if v != 0 {
                if v as usize > n || seen[v as usize] {
                    return false;
                }
                seen[v as usize] = true;
            }
        }
        if seen[1..].iter().any(|s| !s) {
            return false;
        }
        let lines_ok = |g: &Grid| {
            (0..g.rows).all(|r| {
                let filled: Vec<usize> = (0..g.cols).filter(|&c| g.at(r, c) != 0).collect();
                !filled.is_empty()
                    && filled.windows(2).all(|w| w[1] == w[0] + 1 && g.at(r, w[0]) < g.at(r, w[1]))
            })
        };
        if !lines_ok(self) || !lines_ok(&self.transposed()) {
            return false;
        }
        // One entry on each diagonal c - r.
        let mut per_diagonal = vec![0; self.rows + self.cols - 1];
        for r in 0..self.rows {
            for c in 0..self.cols {
                if self.at(r, c) != 0 {
                    per_diagonal[c + self.rows - 1 - r] += 1;
                }
            }
        }
        per_diagonal.iter().all(|&k| k == 1)
    }

    /// Moves `subset` from column `j` to `j + 1`, when admissible and when
    /// no line is left empty.
    fn right_shift(&self, j: usize, subset: &[u32]) -> Option<Grid> {
        if j + 1 >= self.cols {
            return None;
        }
        let min = *subset.iter().min()?;
        let next_max = (0..self.rows).map(|r| self.at(r, j + 1)).max().unwrap_or(0);
        if min <= next_max {
            return None;
        }
        let min_row = (0..self.rows).find(|&r| self.at(r, j) == min)?;
        if (min_row..self.rows).any(|r| self.at(r, j + 1) != 0) {
            return None;
        }
        let mut out = self.clone();
        for r in 0..self.rows {
            let v = self.at(r, j);
            if v != 0 && subset.contains(&v) {
                if out.at(r, j + 1) != 0 {
                    return None;
                }
                out.set(r, j + 1, v);
                out.set(r, j, 0);
            }
        }
        if (0..out.rows).all(|r| out.at(r, j) == 0) {
            return None;
        }
        Some(out)
    }

    fn down_shift(&self, i: usize, subset: &[u32]) -> Option<Grid> {
        Some(self.transposed().right_shift(i, subset)?.transposed())
    }

    /// Every grid one admissible shift away.
    fn neighbours(&self) -> Vec<Grid> {
        let mut out = Vec::new();
        for j in 0..self.cols {
            let column: Vec<u32> = (0..self.rows).map(|r| self.at(r, j)).filter(|&v| v != 0).collect();
            for subset in subsets(&column) {
                out.extend(self.right_shift(j, &subset));
            }
        }
        for i in 0..self.rows {
            let row: Vec<u32> = (0..self.cols).map(|c| self.at(i, c)).filter(|&v| v != 0).collect();
            for subset in subsets(&row) {
                out.extend(self.down_shift(i, &subset));
            }
        }
        out
    }
}

fn subsets(items: &[u32]) -> Vec<Vec<u32>> {
    (1u32..1 << items.len())
        .map(|mask| items.iter().enumerate().filter(|(b, _)| mask >> b & 1 == 1).map(|(_, &v)| v).collect())
        .collect()
}

/// One cell per diagonal of every `r x s` grid with `r + s = n + 1`, then
/// every labelling, kept when the step conditions hold.
pub fn brute_step_matrices(n: usize) -> Result<Vec<SparseIntMatrix>> {
    check_size("oracle step matrix size", n, ORACLE_MAX_N)?;
    let mut out = Vec::new();
    let perms = permutations(n);
    for rows in 1..=n {
        let cols = n + 1 - rows;
        // Cells on diagonal d = c - r + rows - 1.
        let diagonals: Vec<Vec<(usize, usize)>> = (0..n)
            .map(|d| {
                (0..rows)
                    .flat_map(|r| (0..cols).map(move |c| (r, c)))
                    .filter(|&(r, c)| c + rows - 1 - r == d)
                    .collect()
            })
            .collect();
        let mut choice = vec![0usize; n];
        loop {
            let cells: Vec<(usize, usize)> = choice.iter().enumerate().map(|(d, &i)| diagonals[d][i]).collect();
            for perm in &perms {
                let mut g = Grid {
                    rows,
                    cols,
                    cells: vec![0; rows * cols],
                };
                for (&(r, c), &v) in cells.iter().zip(perm) {
                    g.set(r, c, v);
                }
                if g.is_step(n) {
                    out.push(g.to_matrix());
                }
            }
            // Odometer over the per-diagonal choices.
            let mut d = 0;
            while d < n {
                choice[d] += 1;
                if choice[d] < diagonals[d].len() {
                    break;
                }
                choice[d] = 0;
                d += 1;
            }
            if d == n {
                break;
            }
        }
    }
    Ok(out)
}

fn permutations(n: usize) -> Vec<Vec<u32>> {
    if n == 0 {
        return vec![Vec::new()];
    }
    let mut out = Vec::new();
    for p in permutations(n - 1) {
        for at in 0..=p.len() {
            let mut q = p.clone();
            q.insert(at, n as u32);
            out.push(q);
        }
    }
    out
}

/// All matrices reachable from a step matrix by admissible right or down
/// shifts of any subsets, in any order. Moves that would empty a row or
/// column are not taken.
pub fn unrestricted_closure(n: usize) -> Result<BTreeSet<SparseIntMatrix>> {
    let seeds = brute_step_matrices(n)?;
    let mut seen: HashSet<Grid> = HashSet::new();
    let mut queue: VecDeque<Grid> = VecDeque::new();
    for s in &seeds {
        let g = Grid::from_matrix(s);
        if seen.insert(g.clone()) {
            queue.push_back(g);
        }
    }
    while let Some(g) = queue.pop_front() {
        for h in g.neighbours() {
            if seen.insert(h.clone()) {
                queue.push_back(h);
            }
        }
    }
    Ok(seen.iter().map(Grid::to_matrix).collect())
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn factorial_counts() {
        let counts: Vec<usize> = (1..=5).map(|n| brute_step_matrices(n).unwrap().len()).collect();
        assert_eq!(counts, vec![1, 2, 6, 24, 120]);
    }

    #[test]
    fn closure_contains_the_step_matrices() {
        let c = unrestricted_closure(4).unwrap();
        assert!(brute_step_matrices(4).unwrap().iter().all(|m| c.contains(m)));
    }

    #[test]
    fn closure_is_transpose_closed() {
        for n in 1..=4 {
            let c = unrestricted_closure(n).unwrap();
            assert!(c.iter().all(|m| c.contains(&m.transpose())), "n = {n}");
        }
    }

    #[test]
    fn blocked_moves_leave_nothing_new() {
        let g = Grid::from_matrix(&"1 2 3".parse().unwrap());
        assert!(g.neighbours().is_empty());
    }

    #[test]
    fn size_cap() {
        assert!(unrestricted_closure(7).is_err());
        assert!(brute_step_matrices(0).is_err());
    }
}
