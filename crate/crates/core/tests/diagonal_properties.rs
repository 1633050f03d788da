use std::collections::BTreeMap;

use proptest::prelude::*;
use sudiag::trees::{is_nondegenerate_matrix, PlanarTree};
use sudiag::{delta_k, derived_matrices, enumerate_step_matrices, tonks, SparseIntMatrix};

type Chain = BTreeMap<(PlanarTree, PlanarTree), u32>;

fn add(c: &mut Chain, l: PlanarTree, r: PlanarTree) {
    *c.entry((l, r)).or_default() ^= 1;
}

fn reduced(c: Chain) -> Chain {
    c.into_iter().filter(|(_, v)| *v == 1).collect()
}

fn diagonal(k: usize) -> Chain {
    let mut c = Chain::new();
    for t in delta_k(k).unwrap() {
        if t.multiplicity % 2 == 1 {
            add(&mut c, t.left, t.right);
        }
    }
    c
}

/// The diagonal commutes with the cellular boundary over `F_2`: the
/// boundary of `Δ(m_k)` equals `Δ` applied to every codimension-one face
/// `m_a ∘_i m_b`, extended through grafting.
#[test]
fn diagonal_is_a_chain_map() {
    let diagonals: Vec<Chain> = (0..=7).map(|k| if k < 2 { Chain::new() } else { diagonal(k) }).collect();
    for k in 3..=7 {
        let mut lhs = Chain::new();
        for (l, r) in diagonals[k].keys() {
            for f in l.boundary_faces() {
                add(&mut lhs, f, r.clone());
            }
            for f in r.boundary_faces() {
                add(&mut lhs, l.clone(), f);
            }
        }
        let mut rhs = Chain::new();
        for b in 2..k {
            let a = k - b + 1;
            for i in 0..a {
                for (l1, r1) in diagonals[a].keys() {
                    for (l2, r2) in diagonals[b].keys() {
                        add(&mut rhs, l1.graft(i, l2).unwrap(), r1.graft(i, r2).unwrap());
                    }
                }
            }
        }
        assert_eq!(reduced(lhs), reduced(rhs), "arity {k}");
    }
}

#[test]
fn nondegeneracy_filter_matches_projection() {
    for n in 1..=5 {
        for m in derived_matrices(n).unwrap().matrices() {
            let (a, b) = m.complementary_pairing();
            assert_eq!(is_nondegenerate_matrix(m), tonks(&a).is_some() && tonks(&b).is_some(), "\n{m}");
        }
    }
}

#[test]
fn transposition_mirrors_the_term_list() {
    for k in 2..=6 {
        let terms = delta_k(k).unwrap();
        let mut forward: Vec<_> = terms.iter().map(|t| (t.left.clone(), t.right.clone(), t.multiplicity)).collect();
        let mut mirrored: Vec<_> = terms
            .iter()
            .map(|t| (t.right.mirror(), t.left.mirror(), t.multiplicity))
            .collect();
        forward.sort();
        mirrored.sort();
        assert_eq!(forward, mirrored, "arity {k}");
    }
}

#[test]
fn complementarity_and_reconstruction() {
    for n in 1..=5 {
        for m in derived_matrices(n).unwrap().matrices() {
            let (a, b) = m.complementary_pairing();
            assert_eq!(a.block_count() + b.block_count(), n + 1);
            assert_eq!(&SparseIntMatrix::from_pairing(&a, &b).unwrap(), m);
        }
    }
}

#[test]
fn witnesses_replay() {
    let set = derived_matrices(5).unwrap();
    for (m, w) in set.iter() {
        assert!(w.seed.is_step_matrix());
        assert_eq!(&w.replay().unwrap(), m);
    }
}

/// A corolla of arity `a` on the left reads a whole column of `a - 1`
/// entries, one of arity `b` on the right a whole row of `b - 1`; they
/// share at most one entry.
#[test]
fn mixed_corollas_need_enough_entries() {
    for k in 2..=8 {
        for t in delta_k(k).unwrap() {
            for a in t.left.arities() {
                for b in t.right.arities() {
                    assert!(a + b <= k + 2, "{t}");
                }
            }
        }
    }
}

fn step_matrix() -> impl Strategy<Value = SparseIntMatrix> {
    (1usize..=6).prop_flat_map(|n| {
        let all = enumerate_step_matrices(n).unwrap();
        (0..all.len()).prop_map(move |i| all[i].clone())
    })
}

fn tight_and_complete(m: &SparseIntMatrix, n: usize) -> bool {
    let mut values: Vec<u32> = m.values().collect();
    values.sort_unstable();
    values == (1..=n as u32).collect::<Vec<_>>()
        && (0..m.rows()).all(|r| !m.row(r).is_empty())
        && (0..m.cols()).all(|c| !m.column(c).is_empty())
}

proptest! {
    #[test]
    fn shifts_preserve_the_matrix_invariants(m in step_matrix(), line in 0usize..6, mask in 1u32..64, down in any::<bool>()) {
        let n = m.size();
        let (count, entries) = if down { (m.rows(), m.row(line % m.rows())) } else { (m.cols(), m.column(line % m.cols())) };
        let line = line % count;
        let subset: Vec<u32> = entries.iter().enumerate().filter(|(b, _)| mask >> b & 1 == 1).map(|(_, &v)| v).collect();
        prop_assume!(!subset.is_empty());
        let (ok, out) = if down {
            (m.down_shift_admissible(line, &subset).unwrap(), m.down_shift(line, &subset).unwrap())
        } else {
            (m.right_shift_admissible(line, &subset).unwrap(), m.right_shift(line, &subset).unwrap())
        };
        prop_assert!(tight_and_complete(&out, n));
        if !ok {
            prop_assert_eq!(out, m);
        }
    }

    #[test]
    fn shifts_are_transpose_dual(m in step_matrix(), line in 0usize..6, mask in 1u32..64) {
        let line = line % m.cols();
        let subset: Vec<u32> = m.column(line).iter().enumerate().filter(|(b, _)| mask >> b & 1 == 1).map(|(_, &v)| v).collect();
        prop_assume!(!subset.is_empty());
        let right = m.right_shift(line, &subset).unwrap();
        let down = m.transpose().down_shift(line, &subset).unwrap();
        prop_assert_eq!(right.transpose(), down);
    }
}
