//! The diagonal, the projection and the tensor operation, computed the
//! long way round.

use std::collections::{BTreeMap, BTreeSet};

use super::closure::{check_size, unrestricted_closure, ORACLE_MAX_N};
use crate::ainf::{Element, FactorMonomial, Monomial};
use crate::error::{Error, Result};
use crate::field::Scalar;
use crate::su_diagonal::{DiagonalTermP, OrderedPartition, SparseIntMatrix};
use crate::trees::PlanarTree;

pub const ORACLE_MAX_ARITY: usize = 6;

/// Ordered partitions of `[n]` into exactly `s` blocks, as block lists.
fn ordered_partitions(n: usize, s: usize) -> Vec<OrderedPartition> {
    let mut out = Vec::new();
    let total = s.pow(n as u32);
    for code in 0..total {
        let mut blocks = vec![Vec::new(); s];
        let mut c = code;
        for v in 1..=n as u32 {
            blocks[c % s].push(v);
            c /= s;
        }
        if blocks.iter().all(|b| !b.is_empty()) {
            out.push(OrderedPartition::new(blocks).expect("surjective assignment"));
        }
    }
    out
}

/// Every pair `(λ_A, λ_B)` with `s + r = n + 1` whose matrix (element `g`
/// in the column of its `λ_A` block and the row of its `λ_B` block,
/// counted from the bottom) is injective and lies in the unrestricted
/// closure.
pub fn naive_delta_p(n: usize) -> Result<Vec<DiagonalTermP>> {
    check_size("oracle diagonal size", n, ORACLE_MAX_N)?;
    let closure = unrestricted_closure(n)?;
    let mut out = Vec::new();
    for s in 1..=n {
        let r = n + 1 - s;
        let lefts = ordered_partitions(n, s);
        let rights = ordered_partitions(n, r);
        for a in &lefts {
            for b in &rights {
                let mut grid = vec![vec![0u32; s]; r];
                let mut clash = false;
                for g in 1..=n as u32 {
                    let col = a.block_of(g).unwrap();
                    let row = r - 1 - b.block_of(g).unwrap();
                    clash |= std::mem::replace(&mut grid[row][col], g) != 0;
                }
                if clash {
                    continue;
                }
                let m = SparseIntMatrix::from_dense(&grid)?;
                if closure.contains(&m) {
                    out.push(DiagonalTermP {
                        left: a.clone(),
                        right: b.clone(),
                        coeff: Scalar::one(2),
                    });
                }
            }
        }
    }
    Ok(out)
}

/// The planar tree of a leveled tree, or `None` when some level carries two
/// or more nodes. Gap `j` sits between leaves `j` and `j + 1` at the level
/// of its block; an interval of leaves has its root at the highest gap
/// level inside it.
pub fn naive_tonks(p: &OrderedPartition) -> Option<PlanarTree> {
    let level: Vec<usize> = (1..=p.ground() as u32).map(|g| p.block_of(g).unwrap()).collect();
    let mut nodes_per_level = vec![0usize; p.block_count()];
    // Leaves `lo..=hi`, zero-based; gap `j` (one-based) separates leaf
    // `j - 1` from leaf `j`.
    fn build(lo: usize, hi: usize, level: &[usize], nodes: &mut [usize]) -> PlanarTree {
        if lo == hi {
            return PlanarTree::Leaf;
        }
        let top = (lo + 1..=hi).map(|j| level[j - 1]).max().unwrap();
        nodes[top] += 1;
        let mut children = Vec::new();
        let mut start = lo;
        for j in lo + 1..=hi {
            if level[j - 1] == top {
                children.push(build(start, j - 1, level, nodes));
                start = j;
            }
        }
        children.push(build(start, hi, level, nodes));
        PlanarTree::Node(children)
    }
    let t = build(0, p.ground(), &level, &mut nodes_per_level);
    nodes_per_level.iter().all(|&k| k <= 1).then_some(t)
}

/// An `F_2` combination of `x^eps y^i` in one cyclic factor.
type Value = BTreeSet<(u8, u16)>;

fn toggle(v: &mut Value, m: (u8, u16)) {
    if !v.remove(&m) {
        v.insert(m);
    }
}

/// The cyclic factor's operation on basis inputs.
fn cyclic_op(n: usize, ycap: u16, inputs: &[(u8, u16)]) -> Option<(u8, u16)> {
    let y: u32 = inputs.iter().map(|i| i.1 as u32).sum();
    let out = if inputs.len() == 2 && inputs[0].0 + inputs[1].0 <= 1 {
        (inputs[0].0 + inputs[1].0, y)
    } else if inputs.len() == n && inputs.iter().all(|i| i.0 == 1) {
        (0, y + 1)
    } else {
        return None;
    };
    (out.1 <= ycap as u32).then_some((out.0, out.1 as u16))
}

fn eval(t: &PlanarTree, n: usize, ycap: u16, args: &mut impl Iterator<Item = (u8, u16)>) -> Value {
    match t {
        PlanarTree::Leaf => std::iter::once(args.next().expect("one argument per leaf")).collect(),
        PlanarTree::Node(children) => {
            let values: Vec<Vec<(u8, u16)>> = children.iter().map(|c| eval(c, n, ycap, args).into_iter().collect()).collect();
            let mut out = Value::new();
            let mut pick = vec![0usize; values.len()];
            if values.iter().any(Vec::is_empty) {
                return out;
            }
            loop {
                let inputs: Vec<(u8, u16)> = pick.iter().zip(&values).map(|(&i, v)| v[i]).collect();
                if let Some(m) = cyclic_op(n, ycap, &inputs) {
                    toggle(&mut out, m);
                }
                let mut d = 0;
                while d < pick.len() {
                    pick[d] += 1;
                    if pick[d] < values[d].len() {
                        break;
                    }
                    pick[d] = 0;
                    d += 1;
                }
                if d == pick.len() {
                    return out;
                }
            }
        }
    }
}

/// `m_k` on `H*(C_n) ⊗ H*(C_m)` over `F_2`, from the naive diagonal, the
/// naive projection and a direct evaluation of each tree pair.
pub fn naive_tensor_op(n: usize, m: usize, k: usize, tuple: &[Monomial], ycap: u16) -> Result<Element> {
    if !(2..=ORACLE_MAX_ARITY).contains(&k) {
        return Err(Error::ResourceLimit {
            what: "oracle tensor arity",
            requested: k,
            cap: ORACLE_MAX_ARITY,
        });
    }
    if tuple.len() != k || tuple.iter().any(|t| t.factor_count() != 2) {
        return Err(Error::Contract(format!("need {k} two-factor arguments")));
    }
    let mut pairs: BTreeMap<(PlanarTree, PlanarTree), u32> = BTreeMap::new();
    for term in naive_delta_p(k - 1)? {
        if let (Some(l), Some(r)) = (naive_tonks(&term.left), naive_tonks(&term.right)) {
            *pairs.entry((l, r)).or_default() += 1;
        }
    }
    let mut out = Element::zero(2, 2);
    for ((l, r), mult) in pairs {
        if mult % 2 == 0 {
            continue;
        }
        let a = eval(&l, n, ycap, &mut tuple.iter().map(|t| (t.parts()[0].eps, t.parts()[0].y)));
        let b = eval(&r, m, ycap, &mut tuple.iter().map(|t| (t.parts()[1].eps, t.parts()[1].y)));
        for &(ea, ya) in &a {
            for &(eb, yb) in &b {
                out.add_term(Monomial::new([FactorMonomial::new(ea, ya), FactorMonomial::new(eb, yb)]), 1);
            }
        }
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn args(s: &str) -> Vec<Monomial> {
        s.split(',').map(|t| Monomial::parse(t, 2).unwrap()).collect()
    }

    #[test]
    fn fubini_counts() {
        let total: usize = (1..=4).map(|s| ordered_partitions(4, s).len()).sum();
        assert_eq!(total, 75);
    }

    #[test]
    fn small_diagonals() {
        assert_eq!(naive_delta_p(1).unwrap().len(), 1);
        assert_eq!(naive_delta_p(2).unwrap().len(), 2);
    }

    #[test]
    fn projection_of_small_partitions() {
        let t = |s: &str| naive_tonks(&s.parse().unwrap()).map(|t| t.to_string());
        assert_eq!(t("12").as_deref(), Some("(1 2 3)"));
        assert_eq!(t("1|2").as_deref(), Some("((1 2) 3)"));
        assert_eq!(t("2|1").as_deref(), Some("(1 (2 3))"));
        assert_eq!(t("1|3|2").as_deref(), Some("((1 2) (3 4))"));
        assert_eq!(t("13|2"), None);
    }

    #[test]
    fn m2_is_the_ring_product() {
        let v = naive_tensor_op(4, 4, 2, &args("x1*y2,x2*y1"), 4).unwrap();
        assert_eq!(v.to_string(), "x1*x2*y1*y2");
        assert!(naive_tensor_op(4, 4, 2, &args("x1,x1"), 4).unwrap().is_zero());
    }

    #[test]
    fn first_m4_identity() {
        assert_eq!(naive_tensor_op(4, 4, 4, &args("x1,x1,x1,x1"), 4).unwrap().to_string(), "y1");
    }

    #[test]
    fn arity_cap() {
        assert!(naive_tensor_op(4, 4, 7, &args("x1,x1,x1,x1,x1,x1,x1"), 4).is_err());
    }
}
