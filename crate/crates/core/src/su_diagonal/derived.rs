//! Derived matrices, complementary pairings and the top-cell diagonal on
//! the permutahedron.

use std::collections::BTreeMap;

use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use super::matrix::SparseIntMatrix;
use super::partition::OrderedPartition;
use super::shift::{admissible, apply_unchecked, Axis, Shift};
use super::step::{check_cap, enumerate_step_matrices_capped, DEFAULT_MAX_N};
use crate::error::{Error, Result};
use crate::field::Scalar;

/// How a derived matrix was reached: a step matrix and the shifts applied to it.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct DerivedWitness {
    pub seed: SparseIntMatrix,
    pub moves: Vec<Shift>,
}

impl DerivedWitness {
    /// Re-applies every move, failing if one of them is not admissible.
    pub fn replay(&self) -> Result<SparseIntMatrix> {
        let mut current = self.seed.clone();
        for mv in &self.moves {
            let ok = match mv {
                Shift::Right { index, subset } => current.right_shift_admissible(*index, subset)?,
                Shift::Down { index, subset } => current.down_shift_admissible(*index, subset)?,
            };
            if !ok {
                return Err(Error::Contract(format!("recorded move {mv:?} is not admissible")));
            }
            current = current.apply_shift(mv)?;
        }
        Ok(current)
    }
}

/// Every derived matrix on `[n]` with one witness path each.
#[derive(Debug, Clone)]
pub struct DerivedSet {
    n: usize,
    members: BTreeMap<SparseIntMatrix, DerivedWitness>,
}

impl DerivedSet {
    pub fn n(&self) -> usize {
        self.n
    }

    pub fn len(&self) -> usize {
        self.members.len()
    }

    pub fn is_empty(&self) -> bool {
        self.members.is_empty()
    }

    pub fn contains(&self, m: &SparseIntMatrix) -> bool {
        self.members.contains_key(m)
    }

    pub fn witness(&self, m: &SparseIntMatrix) -> Option<&DerivedWitness> {
        self.members.get(m)
    }

    /// Matrices in canonical order.
    pub fn matrices(&self) -> impl Iterator<Item = &SparseIntMatrix> {
        self.members.keys()
    }

    pub fn iter(&self) -> impl Iterator<Item = (&SparseIntMatrix, &DerivedWitness)> {
        self.members.iter()
    }
}

/// Walks every move sequence `D_{N_{r-1}} ... D_{N_1} R_{M_{s-1}} ... R_{M_1}`
/// out of one step matrix: columns left to right, then rows top to bottom,
/// one (possibly empty) subset per line. A subset may include entries moved
/// onto the line earlier in the same pass.
pub(crate) fn walk_from_seed(seed: &SparseIntMatrix, visit: &mut impl FnMut(&SparseIntMatrix, &[Shift])) {
    let mut cells = seed.raw_cells().to_vec();
    let mut moves = Vec::new();
    step(&mut cells, seed.rows(), seed.cols(), 0, &mut moves, visit);
}

fn step(
    cells: &mut Vec<(u8, u8)>,
    rows: usize,
    cols: usize,
    stage: usize,
    moves: &mut Vec<Shift>,
    visit: &mut impl FnMut(&SparseIntMatrix, &[Shift]),
) {
    let right_stages = cols - 1;
    if stage == right_stages + rows - 1 {
        let m = SparseIntMatrix::from_raw(rows, cols, cells.clone());
        visit(&m, moves);
        return;
    }
    let (axis, line) = if stage < right_stages {
        (Axis::Right, stage)
    } else {
        (Axis::Down, stage - right_stages)
    };
    step(cells, rows, cols, stage + 1, moves, visit);

    let on = |cell: (u8, u8), l: usize| match axis {
        Axis::Right => cell.1 as usize == l,
        Axis::Down => cell.0 as usize == l,
    };
    let mut max_next = 0u32;
    let mut candidates = Vec::new();
    for (i, &cell) in cells.iter().enumerate() {
        let v = i as u32 + 1;
        if on(cell, line + 1) {
            max_next = max_next.max(v);
        }
    }
    for (i, &cell) in cells.iter().enumerate() {
        let v = i as u32 + 1;
        if on(cell, line) && v > max_next {
            candidates.push(v);
        }
    }
    let mut subset = Vec::with_capacity(candidates.len());
    for mask in 1u32..(1 << candidates.len()) {
        subset.clear();
        subset.extend(
            candidates
                .iter()
                .enumerate()
                .filter(|(b, _)| mask >> b & 1 == 1)
                .map(|(_, &v)| v),
        );
        if !admissible(cells, rows, cols, axis, line, &subset) {
            continue;
        }
        let saved = cells.clone();
        apply_unchecked(cells, axis, &subset);
        moves.push(match axis {
            Axis::Right => Shift::Right {
                index: line,
                subset: subset.clone(),
            },
            Axis::Down => Shift::Down {
                index: line,
                subset: subset.clone(),
            },
        });
        step(cells, rows, cols, stage + 1, moves, visit);
        moves.pop();
        *cells = saved;
    }
}

/// All derived matrices on `[n]`, deduplicated by canonical form.
pub fn derived_matrices(n: usize) -> Result<DerivedSet> {
    derived_matrices_capped(n, DEFAULT_MAX_N)
}

pub fn derived_matrices_capped(n: usize, cap: usize) -> Result<DerivedSet> {
    check_cap("derived matrix size", n, cap)?;
    let seeds = enumerate_step_matrices_capped(n, cap)?;
    let per_seed: Vec<Vec<(SparseIntMatrix, DerivedWitness)>> = seeds
        .par_iter()
        .map(|seed| {
            let mut out = Vec::new();
            walk_from_seed(seed, &mut |m, moves| {
                out.push((
                    m.clone(),
                    DerivedWitness {
                        seed: seed.clone(),
                        moves: moves.to_vec(),
                    },
                ))
            });
            out
        })
        .collect();
    let mut members = BTreeMap::new();
    // Seeds are in canonical order, so the first witness kept is deterministic.
    for (m, w) in per_seed.into_iter().flatten() {
        members.entry(m).or_insert(w);
    }
    Ok(DerivedSet { n, members })
}

/// One term `u ⊗ v` of the permutahedral diagonal.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct DiagonalTermP {
    pub left: OrderedPartition,
    pub right: OrderedPartition,
    pub coeff: Scalar,
}

impl DiagonalTermP {
    /// Rebuilds the matrix with column blocks `left` and bottom-up row blocks `right`.
    pub fn matrix(&self) -> Result<SparseIntMatrix> {
        SparseIntMatrix::from_pairing(&self.left, &self.right)
    }
}

impl SparseIntMatrix {
    /// `(λ_A, λ_B)`: the columns left to right, and the rows read bottom-up.
    pub fn complementary_pairing(&self) -> (OrderedPartition, OrderedPartition) {
        let cols = (0..self.cols()).map(|j| self.column(j)).collect();
        let rows = (0..self.rows()).rev().map(|i| self.row(i)).collect();
        (
            OrderedPartition::new(cols).expect("columns of a tight matrix partition [N]"),
            OrderedPartition::new(rows).expect("rows of a tight matrix partition [N]"),
        )
    }

    /// Inverse of [`complementary_pairing`](Self::complementary_pairing):
    /// value `g` lands in the column of its `left` block and the row of its
    /// `right` block, counting rows from the bottom.
    pub fn from_pairing(left: &OrderedPartition, right: &OrderedPartition) -> Result<Self> {
        if left.ground() != right.ground() {
            return Err(Error::InvalidPartition("ground sets differ".into()));
        }
        let rows = right.block_count();
        let cols = left.block_count();
        let col_of = left.levels();
        let row_of = right.levels();
        let positions: Vec<(usize, usize)> = (0..left.ground()).map(|i| (rows - 1 - row_of[i], col_of[i])).collect();
        Self::from_positions(rows, cols, &positions)
    }
}

/// One pairing per derived matrix, coefficient one in `F_2`.
pub fn complementary_pairings(n: usize) -> Result<Vec<DiagonalTermP>> {
    Ok(derived_matrices(n)?
        .matrices()
        .map(|m| {
            let (left, right) = m.complementary_pairing();
            DiagonalTermP {
                left,
                right,
                coeff: Scalar::one(2),
            }
        })
        .collect())
}

/// `Δ_P` of the top cell on the ground set `[n]`; `n = 0` gives `e⁰ ⊗ e⁰`.
pub fn delta_p_top(n: usize) -> Result<Vec<DiagonalTermP>> {
    if n == 0 {
        return Ok(vec![DiagonalTermP {
            left: OrderedPartition::empty(),
            right: OrderedPartition::empty(),
            coeff: Scalar::one(2),
        }]);
    }
    complementary_pairings(n)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::su_diagonal::enumerate_step_matrices;

    fn m(rows: &[&[u32]]) -> SparseIntMatrix {
        SparseIntMatrix::from_dense(&rows.iter().map(|r| r.to_vec()).collect::<Vec<_>>()).unwrap()
    }

    #[test]
    fn n1_is_the_unit_matrix() {
        let d = derived_matrices(1).unwrap();
        assert_eq!(d.matrices().cloned().collect::<Vec<_>>(), vec![m(&[&[1]])]);
    }

    #[test]
    fn n2_has_row_and_column() {
        let terms = complementary_pairings(2).unwrap();
        let shown: Vec<String> = terms.iter().map(|t| format!("{} ⊗ {}", t.left, t.right)).collect();
        // The 2x1 column and the 1x2 row.
        assert_eq!(shown, vec!["1|2 ⊗ 12", "12 ⊗ 2|1"]);
    }

    #[test]
    fn counts_follow_two_times_n_plus_one_power() {
        // 2 (n + 1)^(n - 2): the cell count of the permutahedral diagonal.
        let expected = [1usize, 2, 8, 50, 432, 4802];
        for (i, &e) in expected.iter().enumerate() {
            assert_eq!(derived_matrices(i + 1).unwrap().len(), e);
        }
    }

    #[test]
    fn step_matrices_are_derived_and_witnesses_replay() {
        for n in 1..=5 {
            let d = derived_matrices(n).unwrap();
            for s in enumerate_step_matrices(n).unwrap() {
                assert!(d.contains(&s));
            }
            for (matrix, w) in d.iter() {
                assert!(w.seed.is_step_matrix());
                assert_eq!(&w.replay().unwrap(), matrix);
            }
        }
    }

    #[test]
    fn single_pass_visits_each_matrix_once() {
        for n in 1..=6 {
            let mut visits = 0usize;
            for seed in enumerate_step_matrices(n).unwrap() {
                walk_from_seed(&seed, &mut |_, _| visits += 1);
            }
            assert_eq!(visits, derived_matrices(n).unwrap().len());
        }
    }

    #[test]
    fn pairing_reconstructs_matrix() {
        for n in 1..=5 {
            for term in delta_p_top(n).unwrap() {
                assert_eq!(term.left.block_count() + term.right.block_count(), n + 1);
                let matrix = term.matrix().unwrap();
                assert_eq!(matrix.complementary_pairing(), (term.left.clone(), term.right.clone()));
            }
        }
    }

    #[test]
    fn base_case_is_e0_tensor_e0() {
        let terms = delta_p_top(0).unwrap();
        assert_eq!(terms.len(), 1);
        assert_eq!(terms[0].left.ground(), 0);
        assert_eq!(terms[0].right.block_count(), 0);
    }
}
