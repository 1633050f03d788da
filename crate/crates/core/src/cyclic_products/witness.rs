//! Arguments on which a snake term is the only surviving diagonal term.

use std::sync::Arc;

use serde::{Deserialize, Serialize};

use super::snake::{snake_trees, SnakeSpec};
use crate::ainf::{evaluate_tree_basis, AInfinity, CyclicFactor, Element, FactorMonomial, Monomial, TensorProduct};
use crate::error::{Error, Result};
use crate::trees::{PlanarTree, DEFAULT_MAX_ARITY};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum WitnessMode {
    /// `m_k` summed over all of `Δ_K(k)`.
    FullDiagonal,
    /// Only the tree pair of the snake matrix.
    SnakeOnly,
}

/// Which leaves carry `x` so that the tree evaluates to a non-zero value
/// in a factor whose only operations are `m₂` and `m_arity`. A large
/// corolla needs `x` in every input and returns an even class; a binary node
/// returns an odd class when exactly one input is odd, preferring the right
/// one. The root is even when possible.
fn odd_leaves(t: &PlanarTree, arity: usize) -> Option<Vec<bool>> {
    fn go(t: &PlanarTree, odd: bool, arity: usize, out: &mut Vec<bool>) -> bool {
        match t {
            PlanarTree::Leaf => {
                out.push(odd);
                true
            }
            PlanarTree::Node(c) if c.len() == 2 => {
                let mark = out.len();
                let options: &[(bool, bool)] = if odd { &[(false, true), (true, false)] } else { &[(false, false)] };
                for &(l, r) in options {
                    if go(&c[0], l, arity, out) && go(&c[1], r, arity, out) {
                        return true;
                    }
                    out.truncate(mark);
                }
                false
            }
            PlanarTree::Node(c) if c.len() == arity && !odd => c.iter().all(|child| go(child, true, arity, out)),
            PlanarTree::Node(_) => false,
        }
    }
    [false, true].into_iter().find_map(|root_odd| {
        let mut out = Vec::new();
        go(t, root_odd, arity, &mut out).then_some(out)
    })
}

/// The argument list `a₁⊗b₁, …, a_k⊗b_k` in `H*(C_n × C_m; F_2)`, each
/// slot one of `x⊗1`, `1⊗x`, `x⊗x`: slot `i` carries `x` on a side when
/// leaf `i` of that side's snake tree needs an odd input.
pub fn witness_argument(spec: &SnakeSpec) -> Result<Vec<Monomial>> {
    let (left, right) = snake_trees(spec)?;
    let missing = || Error::SnakeReplay(format!("{spec}: no argument makes the snake trees non-zero"));
    let a = odd_leaves(&left, spec.n).ok_or_else(missing)?;
    let b = odd_leaves(&right, spec.m).ok_or_else(missing)?;
    Ok(a.into_iter()
        .zip(b)
        .map(|(a, b)| Monomial::new([FactorMonomial::new(a as u8, 0), FactorMonomial::new(b as u8, 0)]))
        .collect())
}

/// A `y` cap large enough that no witness evaluation truncates.
fn witness_ycap(spec: &SnakeSpec) -> u16 {
    spec.arity() as u16
}

fn factors(spec: &SnakeSpec) -> Result<(Arc<CyclicFactor>, Arc<CyclicFactor>)> {
    let ycap = witness_ycap(spec);
    Ok((
        Arc::new(CyclicFactor::madsen_shaped(spec.n, 2, ycap)?),
        Arc::new(CyclicFactor::madsen_shaped(spec.m, 2, ycap)?),
    ))
}

/// `m_k` on `args` in the chosen mode, over `F_2`.
pub fn evaluate_on(spec: &SnakeSpec, args: &[Monomial], mode: WitnessMode) -> Result<Element> {
    let k = spec.arity();
    if args.len() != k {
        return Err(Error::Contract(format!("{} arguments for arity {k}", args.len())));
    }
    let (a, b) = factors(spec)?;
    match mode {
        WitnessMode::FullDiagonal => {
            if k > DEFAULT_MAX_ARITY {
                return Err(Error::ResourceLimit {
                    what: "full-diagonal witness arity",
                    requested: k,
                    cap: DEFAULT_MAX_ARITY,
                });
            }
            TensorProduct::new(a, b, k.max(2))?.op_basis(args)
        }
        WitnessMode::SnakeOnly => {
            let (left, right) = snake_trees(spec)?;
            let (a_args, b_args): (Vec<Monomial>, Vec<Monomial>) = args.iter().map(|m| m.split_at(1)).unzip();
            let l = evaluate_tree_basis(&left, &*a, &a_args)?;
            let r = evaluate_tree_basis(&right, &*b, &b_args)?;
            debug_assert_eq!(a.truncations() + b.truncations(), 0);
            Ok(l.tensor(&r))
        }
    }
}

/// The operation value on [`witness_argument`].
pub fn evaluate_witness(spec: &SnakeSpec, mode: WitnessMode) -> Result<Element> {
    evaluate_on(spec, &witness_argument(spec)?, mode)
}
