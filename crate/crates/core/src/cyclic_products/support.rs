//! Which arities carry non-zero operations on `H*(C_n × C_m; F_2)`.
//!
//! Both factors commute with multiplication by `y`, so `m_k` vanishes on
//! every decoration of an exterior pattern exactly when it vanishes on the
//! bare pattern (or the bare value already exceeds the cap). Scanning the
//! `4^k` bare patterns is therefore exhaustive. The scan factors through
//! the trees: each tree of `Δ_K(k)` is evaluated once on each of the `2^k`
//! exterior masks of its own factor.

use std::collections::{BTreeMap, BTreeSet, HashMap};
use std::sync::Arc;

use rayon::prelude::*;
use serde::Serialize;

use crate::ainf::{evaluate_tree_basis, AInfinity, CyclicFactor, Element, FactorMonomial, Monomial, TensorProduct};
use crate::error::{Error, Result};
use crate::trees::{delta_k_shared, PlanarTree, DEFAULT_MAX_ARITY};

/// A bare exterior pattern and the operation's value on it.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct PatternValue {
    pub args: Vec<String>,
    pub value: Element,
}

#[derive(Debug, Clone, Serialize)]
pub struct AritySupportReport {
    pub n: usize,
    pub m: usize,
    pub p: u32,
    pub ycap: u16,
    pub max_arity: usize,
    /// Arities with some non-zero value.
    pub support: Vec<usize>,
    /// `{2, n, m, n + m - 2}` within the scanned range.
    pub expected: Vec<usize>,
    /// One witness per supported arity, re-evaluated through the tensor
    /// structure.
    pub witnesses: Vec<ArityWitness>,
    /// Every arity was scanned over all exterior patterns.
    pub exhaustive: bool,
    pub truncation_count: u64,
}

#[derive(Debug, Clone, Serialize)]
pub struct ArityWitness {
    pub arity: usize,
    pub args: Vec<String>,
    pub value: Element,
}

impl AritySupportReport {
    pub fn matches_expected(&self) -> bool {
        self.support == self.expected
    }
}

/// Non-zero masks of one tree over one factor: bit `i` of the mask is the
/// `x` exponent of leaf `i`.
fn tree_table(t: &PlanarTree, factor: &CyclicFactor) -> Result<Vec<(u32, Element)>> {
    let k = t.leaves();
    let mut out = Vec::new();
    for mask in 0u32..(1 << k) {
        let args: Vec<Monomial> = (0..k).map(|i| Monomial::single((mask >> i & 1) as u8, 0)).collect();
        let v = evaluate_tree_basis(t, factor, &args)?;
        if !v.is_zero() {
            out.push((mask, v));
        }
    }
    Ok(out)
}

fn pattern_args(k: usize, a: u32, b: u32) -> Vec<Monomial> {
    (0..k)
        .map(|i| Monomial::new([FactorMonomial::new((a >> i & 1) as u8, 0), FactorMonomial::new((b >> i & 1) as u8, 0)]))
        .collect()
}

/// All bare patterns of arity `k` with a non-zero value, in canonical
/// argument order, together with the truncations seen.
pub fn nonzero_patterns(n: usize, m: usize, k: usize, ycap: u16) -> Result<(Vec<PatternValue>, u64)> {
    if k > DEFAULT_MAX_ARITY {
        return Err(Error::ResourceLimit {
            what: "pattern scan arity",
            requested: k,
            cap: DEFAULT_MAX_ARITY,
        });
    }
    if k < 2 {
        return Ok((Vec::new(), 0));
    }
    let a = CyclicFactor::madsen_shaped(n, 2, ycap)?;
    let b = CyclicFactor::madsen_shaped(m, 2, ycap)?;
    let terms = delta_k_shared(k)?;
    let lefts: BTreeSet<&PlanarTree> = terms.iter().map(|t| &t.left).collect();
    let rights: BTreeSet<&PlanarTree> = terms.iter().map(|t| &t.right).collect();
    let build = |trees: BTreeSet<&PlanarTree>, f: &CyclicFactor| -> Result<HashMap<PlanarTree, Vec<(u32, Element)>>> {
        trees
            .into_par_iter()
            .map(|t| Ok((t.clone(), tree_table(t, f)?)))
            .collect()
    };
    let left_tables = build(lefts, &a)?;
    let right_tables = build(rights, &b)?;
    let mut sums: HashMap<(u32, u32), Element> = HashMap::new();
    for term in terms.iter().filter(|t| t.multiplicity % 2 == 1) {
        let lt = &left_tables[&term.left];
        if lt.is_empty() {
            continue;
        }
        for (mb, vb) in &right_tables[&term.right] {
            for (ma, va) in lt {
                sums.entry((*ma, *mb)).or_insert_with(|| Element::zero(2, 2)).add_scaled(&va.tensor(vb), 1);
            }
        }
    }
    let mut out: Vec<(Vec<Monomial>, Element)> = sums
        .into_iter()
        .filter(|(_, v)| !v.is_zero())
        .map(|((ma, mb), v)| (pattern_args(k, ma, mb), v))
        .collect();
    out.sort_by(|x, y| x.0.cmp(&y.0));
    let patterns = out
        .into_iter()
        .map(|(args, value)| PatternValue {
            args: args.iter().map(Monomial::to_string).collect(),
            value,
        })
        .collect();
    Ok((patterns, a.truncations() + b.truncations()))
}

/// Exhaustive arity scan for `2 ≤ k ≤ max_arity`, with one re-checked
/// witness per supported arity.
pub fn arity_support(n: usize, m: usize, max_arity: usize, ycap: u16) -> Result<AritySupportReport> {
    if n < 3 || m < 3 {
        return Err(Error::Contract("cyclic factors need n, m ≥ 3".into()));
    }
    let mut support = Vec::new();
    let mut witnesses = Vec::new();
    let mut truncations = 0;
    let a = Arc::new(CyclicFactor::madsen_shaped(n, 2, ycap)?);
    let b = Arc::new(CyclicFactor::madsen_shaped(m, 2, ycap)?);
    let tensor = TensorProduct::new(a, b, max_arity.max(2))?;
    for k in 2..=max_arity {
        let (patterns, t) = nonzero_patterns(n, m, k, ycap)?;
        truncations += t;
        if let Some(first) = patterns.first() {
            let args: Vec<Monomial> = first.args.iter().map(|s| Monomial::parse(s, 2)).collect::<Result<_>>()?;
            let value = tensor.op_basis(&args)?;
            if value != first.value {
                return Err(Error::Contract(format!("pattern scan and tensor structure disagree on {:?}", first.args)));
            }
            support.push(k);
            witnesses.push(ArityWitness {
                arity: k,
                args: first.args.clone(),
                value,
            });
        }
    }
    let expected: BTreeSet<usize> = [2, n, m, n + m - 2].into_iter().filter(|&k| k <= max_arity).collect();
    Ok(AritySupportReport {
        n,
        m,
        p: 2,
        ycap,
        max_arity,
        support,
        expected: expected.into_iter().collect(),
        witnesses,
        exhaustive: true,
        truncation_count: truncations + tensor.truncations(),
    })
}

/// Number of non-zero bare patterns per arity, for summaries.
pub fn pattern_counts(n: usize, m: usize, max_arity: usize, ycap: u16) -> Result<BTreeMap<usize, usize>> {
    (2..=max_arity).map(|k| Ok((k, nonzero_patterns(n, m, k, ycap)?.0.len()))).collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    /// Direct evaluation of every bare pattern through the tensor structure.
    fn brute(n: usize, m: usize, k: usize) -> Vec<PatternValue> {
        let a = Arc::new(CyclicFactor::madsen_shaped(n, 2, 4).unwrap());
        let b = Arc::new(CyclicFactor::madsen_shaped(m, 2, 4).unwrap());
        let t = TensorProduct::new(a, b, k).unwrap();
        let mut out = Vec::new();
        for ma in 0u32..(1 << k) {
            for mb in 0u32..(1 << k) {
                let args = pattern_args(k, ma, mb);
                let v = t.op_basis(&args).unwrap();
                if !v.is_zero() {
                    out.push((args, v));
                }
            }
        }
        out.sort_by(|x, y| x.0.cmp(&y.0));
        out.into_iter()
            .map(|(args, value)| PatternValue {
                args: args.iter().map(Monomial::to_string).collect(),
                value,
            })
            .collect()
    }

    #[test]
    fn factorized_scan_matches_direct_evaluation() {
        for k in 2..=5 {
            assert_eq!(nonzero_patterns(4, 4, k, 4).unwrap().0, brute(4, 4, k), "arity {k}");
            assert_eq!(nonzero_patterns(5, 4, k, 4).unwrap().0, brute(5, 4, k), "arity {k}");
        }
    }

    #[test]
    fn c4_c4_low_arities() {
        let counts = pattern_counts(4, 4, 5, 4).unwrap();
        assert_eq!(counts[&3], 0);
        assert_eq!(counts[&4], 10);
        assert_eq!(counts[&5], 0);
    }
}
