//! Step matrices: the seeds of the permutahedral diagonal.

use super::matrix::SparseIntMatrix;
use crate::error::{Error, Result};

/// Default cap on the ground-set size for exhaustive enumeration.
pub const DEFAULT_MAX_N: usize = 8;

pub(crate) fn check_cap(what: &'static str, n: usize, cap: usize) -> Result<()> {
    if n > cap {
        Err(Error::ResourceLimit {
            what,
            requested: n,
            cap,
        })
    } else {
        Ok(())
    }
}

/// All step matrices with entries `1..=n`, sorted by canonical form.
///
/// A step matrix occupies a lattice path running up and right from its
/// bottom-left to its top-right corner, so there is one shape per word in
/// `{up, right}^(n-1)`. Each shape is filled with every labelling that
/// increases along rows and down columns. There are `n!` in total.
pub fn enumerate_step_matrices(n: usize) -> Result<Vec<SparseIntMatrix>> {
    enumerate_step_matrices_capped(n, DEFAULT_MAX_N)
}

pub fn enumerate_step_matrices_capped(n: usize, cap: usize) -> Result<Vec<SparseIntMatrix>> {
    if n == 0 {
        return Err(Error::Contract("step matrices need n >= 1".into()));
    }
    check_cap("step matrix size", n, cap)?;
    let mut out = Vec::new();
    for word in 0u32..(1 << (n - 1)) {
        let ups = (0..n - 1).filter(|b| word >> b & 1 == 0).count();
        let rows = ups + 1;
        let cols = n - ups;
        let mut path = Vec::with_capacity(n);
        let (mut r, mut c) = (rows - 1, 0usize);
        path.push((r, c));
        for b in 0..n - 1 {
            if word >> b & 1 == 0 {
                r -= 1;
            } else {
                c += 1;
            }
            path.push((r, c));
        }
        // A cell is ready once its left and upper neighbours are filled.
        let preds: Vec<Vec<usize>> = path
            .iter()
            .map(|&(r, c)| {
                path.iter()
                    .enumerate()
                    .filter(|(_, &(r2, c2))| (r2 == r && c2 + 1 == c) || (c2 == c && r2 + 1 == r))
                    .map(|(i, _)| i)
                    .collect()
            })
            .collect();
        let mut label = vec![0u32; n];
        fill(&path, &preds, &mut label, 1, &mut |label| {
            let mut positions = vec![(0, 0); n];
            for (i, &v) in label.iter().enumerate() {
                positions[v as usize - 1] = path[i];
            }
            out.push(SparseIntMatrix::from_positions(rows, cols, &positions).expect("path shape is tight"));
        });
    }
    out.sort();
    Ok(out)
}

fn fill(path: &[(usize, usize)], preds: &[Vec<usize>], label: &mut [u32], next: u32, emit: &mut impl FnMut(&[u32])) {
    if next as usize > path.len() {
        emit(label);
        return;
    }
    for i in 0..path.len() {
        if label[i] == 0 && preds[i].iter().all(|&p| label[p] != 0) {
            label[i] = next;
            fill(path, preds, label, next + 1, emit);
            label[i] = 0;
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn counts_are_factorials() {
        let mut fact = 1;
        for n in 1..=6 {
            fact *= n;
            let all = enumerate_step_matrices(n).unwrap();
            assert_eq!(all.len(), fact, "n = {n}");
            assert!(all.iter().all(SparseIntMatrix::is_step_matrix));
            assert!(all.windows(2).all(|w| w[0] < w[1]));
        }
    }

    #[test]
    fn n1_is_the_unit_matrix() {
        let all = enumerate_step_matrices(1).unwrap();
        assert_eq!(all, vec![SparseIntMatrix::from_dense(&[vec![1]]).unwrap()]);
    }

    #[test]
    fn respects_cap() {
        assert!(matches!(
            enumerate_step_matrices_capped(5, 4),
            Err(Error::ResourceLimit { .. })
        ));
        assert!(enumerate_step_matrices(0).is_err());
    }
}
