//! The associahedral diagonal on the top cell, as pairs of planar trees.

use std::collections::HashMap;
use std::fmt;
use std::sync::{Arc, OnceLock};

use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use super::blocks::nondegenerate_bits;
use super::leveled::tonks;
use super::planar::PlanarTree;
use crate::error::{Error, Result};
use crate::field::Scalar;
use crate::su_diagonal::{check_cap, enumerate_step_matrices_capped, walk_from_seed};

/// Largest arity computed by default (ground set of size 8).
pub const DEFAULT_MAX_ARITY: usize = 9;

/// One term `left ⊗ right` of `Δ_K` in arity `k`, with the number of
/// derived matrices that project onto it.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct DiagonalTermK {
    pub left: PlanarTree,
    pub right: PlanarTree,
    pub multiplicity: u64,
}

impl DiagonalTermK {
    pub fn arity(&self) -> usize {
        self.left.leaves()
    }

    /// The multiplicity read in `F_p`.
    pub fn coeff(&self, p: u32) -> Scalar {
        Scalar::new(self.multiplicity as i64, p)
    }
}

impl fmt::Display for DiagonalTermK {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.multiplicity != 1 {
            write!(f, "{} ", self.multiplicity)?;
        }
        write!(f, "{} ⊗ {}", self.left, self.right)
    }
}

/// All terms of `Δ_K` in arity `k`, sorted, multiplicities kept.
pub fn delta_k(k: usize) -> Result<Vec<DiagonalTermK>> {
    delta_k_capped(k, DEFAULT_MAX_ARITY)
}

pub fn delta_k_capped(k: usize, cap: usize) -> Result<Vec<DiagonalTermK>> {
    if k < 2 {
        return Err(Error::Contract(format!("Δ_K needs arity at least 2, got {k}")));
    }
    check_cap("Δ_K arity", k, cap)?;
    let n = k - 1;
    let seeds = enumerate_step_matrices_capped(n, usize::MAX)?;
    let counts = seeds
        .par_iter()
        .fold(HashMap::new, |mut acc: HashMap<(PlanarTree, PlanarTree), u64>, seed| {
            walk_from_seed(seed, &mut |m, _| {
                let fast = nondegenerate_bits(m.raw_cells(), m.rows(), m.cols());
                if !fast {
                    debug_assert!({
                        let (a, b) = m.complementary_pairing();
                        tonks(&a).is_none() || tonks(&b).is_none()
                    });
                    return;
                }
                let (a, b) = m.complementary_pairing();
                let left = tonks(&a).expect("block filter and leveled tree disagree");
                let right = tonks(&b).expect("block filter and leveled tree disagree");
                *acc.entry((left, right)).or_insert(0) += 1;
            });
            acc
        })
        .reduce(HashMap::new, |mut a, b| {
            for (key, c) in b {
                *a.entry(key).or_insert(0) += c;
            }
            a
        });
    let mut terms: Vec<DiagonalTermK> = counts
        .into_iter()
        .map(|((left, right), multiplicity)| DiagonalTermK {
            left,
            right,
            multiplicity,
        })
        .collect();
    terms.sort();
    Ok(terms)
}

/// `Δ_K(k)` computed once per process and shared.
pub fn delta_k_shared(k: usize) -> Result<Arc<[DiagonalTermK]>> {
    static CACHE: [OnceLock<Arc<[DiagonalTermK]>>; DEFAULT_MAX_ARITY + 1] = [const { OnceLock::new() }; DEFAULT_MAX_ARITY + 1];
    if !(2..=DEFAULT_MAX_ARITY).contains(&k) {
        return delta_k(k).map(Arc::from);
    }
    if let Some(t) = CACHE[k].get() {
        return Ok(t.clone());
    }
    let terms: Arc<[DiagonalTermK]> = delta_k(k)?.into();
    Ok(CACHE[k].get_or_init(|| terms).clone())
}

/// Terms surviving in characteristic two.
pub fn f2_terms(terms: &[DiagonalTermK]) -> Vec<DiagonalTermK> {
    terms.iter().filter(|t| t.multiplicity % 2 == 1).cloned().collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use std::collections::HashSet;

    #[test]
    fn arity_two_is_m2_tensor_m2() {
        let t = delta_k(2).unwrap();
        assert_eq!(t.len(), 1);
        assert_eq!(t[0].to_string(), "(1 2) ⊗ (1 2)");
    }

    #[test]
    fn arity_three_is_comb_and_corolla() {
        let shown: HashSet<String> = delta_k(3).unwrap().iter().map(|t| t.to_string()).collect();
        let expected: HashSet<String> = ["((1 2) 3) ⊗ (1 2 3)", "(1 2 3) ⊗ (1 (2 3))"].iter().map(|s| s.to_string()).collect();
        assert_eq!(shown, expected);
    }

    #[test]
    fn term_counts() {
        let expected = [1usize, 2, 6, 22, 91, 408];
        for (i, &e) in expected.iter().enumerate() {
            let terms = delta_k(i + 2).unwrap();
            assert_eq!(terms.len(), e);
            assert!(terms.iter().all(|t| t.multiplicity == 1));
        }
    }

    #[test]
    fn dimensions_are_complementary() {
        for k in 2..=7 {
            for t in delta_k(k).unwrap() {
                assert_eq!(t.left.leaves(), k);
                assert_eq!(t.right.leaves(), k);
                assert_eq!(t.left.deficiency() + t.right.deficiency(), k - 2, "{t}");
            }
        }
    }

    #[test]
    fn mirror_swap_symmetry() {
        for k in 2..=6 {
            let terms: HashSet<_> = delta_k(k).unwrap().into_iter().map(|t| (t.left, t.right)).collect();
            let dual: HashSet<_> = terms.iter().map(|(l, r)| (r.mirror(), l.mirror())).collect();
            assert_eq!(terms, dual);
        }
    }

    #[test]
    fn cap_is_enforced() {
        assert!(matches!(delta_k_capped(6, 5), Err(Error::ResourceLimit { .. })));
        assert!(delta_k(1).is_err());
    }

    #[test]
    fn shared_matches_fresh() {
        assert_eq!(&*delta_k_shared(5).unwrap(), delta_k(5).unwrap().as_slice());
    }
}
