//! Checking the Stasheff identities on basis tuples.

use rayon::prelude::*;
use serde::Serialize;

use super::element::Element;
use super::monomial::Monomial;
use super::structure::{basis_up_to_degree, op, AInfinity};
use crate::error::{contract, Result};

/// Which tuples to test.
#[derive(Debug, Clone)]
pub enum TupleSource {
    /// Every basis tuple whose degrees sum to at most the bound.
    Exhaustive { max_total_degree: u32 },
    Given(Vec<Vec<Monomial>>),
}

#[derive(Debug, Clone, Serialize)]
pub struct Violation {
    pub args: Vec<String>,
    pub value: Element,
}

#[derive(Debug, Clone, Serialize)]
pub struct StasheffReport {
    pub arity: usize,
    pub tuples_checked: u64,
    pub violation_count: u64,
    /// The first violations in canonical tuple order.
    pub violations: Vec<Violation>,
    pub truncations: u64,
}

impl StasheffReport {
    pub fn passed(&self) -> bool {
        self.violation_count == 0
    }
}

const KEPT_VIOLATIONS: usize = 20;

/// `Σ_{r+s+t=N} ± m_{r+1+t}(a₁, …, a_r, m_s(a_{r+1}, …, a_{r+s}), …, a_N)`,
/// `2 ≤ s < N` since `m₁ = 0`. The sign `(-1)^{r+st}` only matters off `F_2`.
pub fn stasheff_sum<A: AInfinity + ?Sized>(a: &A, args: &[Monomial]) -> Result<Element> {
    let n = args.len();
    let p = a.characteristic();
    let mut total = Element::zero(p, a.factor_count());
    for s in 2..n {
        for r in 0..=n - s {
            let t = n - r - s;
            let inner = a.op_basis(&args[r..r + s])?;
            if inner.is_zero() {
                continue;
            }
            let mut outer_args: Vec<Element> = Vec::with_capacity(r + 1 + t);
            outer_args.extend(args[..r].iter().map(|m| Element::monomial(p, m.clone())));
            outer_args.push(inner);
            outer_args.extend(args[r + s..].iter().map(|m| Element::monomial(p, m.clone())));
            let v = op(a, &outer_args)?;
            let negative = (r + s * t) % 2 == 1;
            total.add_scaled(&v, if negative { p - 1 } else { 1 });
        }
    }
    Ok(total)
}

/// Evaluates `St_N` on every selected tuple and reports those with a
/// non-zero sum.
pub fn stasheff_check<A: AInfinity + ?Sized>(a: &A, n: usize, tuples: &TupleSource) -> Result<StasheffReport> {
    if n < 2 {
        return contract("Stasheff identities start at arity 2");
    }
    if n > a.max_arity() {
        return contract(format!("St_{n} needs operations up to arity {n}, structure stops at {}", a.max_arity()));
    }
    let before = a.truncations();
    let (checked, mut found) = match tuples {
        TupleSource::Given(list) => {
            let mut found = Vec::new();
            for t in list {
                if t.len() != n {
                    return contract(format!("tuple of length {} for St_{n}", t.len()));
                }
                let v = stasheff_sum(a, t)?;
                if !v.is_zero() {
                    found.push((t.clone(), v));
                }
            }
            (list.len() as u64, found)
        }
        TupleSource::Exhaustive { max_total_degree } => exhaustive(a, n, *max_total_degree)?,
    };
    found.sort_by(|x, y| x.0.cmp(&y.0));
    let violation_count = found.len() as u64;
    let violations = found
        .into_iter()
        .take(KEPT_VIOLATIONS)
        .map(|(args, value)| Violation {
            args: args.iter().map(Monomial::to_string).collect(),
            value,
        })
        .collect();
    Ok(StasheffReport {
        arity: n,
        tuples_checked: checked,
        violation_count,
        violations,
        truncations: a.truncations() - before,
    })
}

type Found = Vec<(Vec<Monomial>, Element)>;

fn exhaustive<A: AInfinity + ?Sized>(a: &A, n: usize, max_degree: u32) -> Result<(u64, Found)> {
    let basis = basis_up_to_degree(&a.y_caps(), max_degree);
    // Split the work on the first two slots.
    let prefixes: Vec<(usize, usize)> = (0..basis.len())
        .flat_map(|i| (0..basis.len()).map(move |j| (i, j)))
        .filter(|&(i, j)| basis[i].degree() + basis[j].degree() <= max_degree)
        .collect();
    let results: Vec<Result<(u64, Found)>> = prefixes
        .par_iter()
        .map(|&(i, j)| {
            let mut tuple = vec![basis[i].clone(), basis[j].clone()];
            let used = basis[i].degree() + basis[j].degree();
            let mut acc = (0u64, Vec::new());
            extend(a, &basis, n, max_degree - used, &mut tuple, &mut acc)?;
            Ok(acc)
        })
        .collect();
    let mut checked = 0;
    let mut found = Vec::new();
    for r in results {
        let (c, f) = r?;
        checked += c;
        found.extend(f);
    }
    Ok((checked, found))
}

fn extend<A: AInfinity + ?Sized>(
    a: &A,
    basis: &[Monomial],
    n: usize,
    budget: u32,
    tuple: &mut Vec<Monomial>,
    acc: &mut (u64, Found),
) -> Result<()> {
    if tuple.len() == n {
        acc.0 += 1;
        let v = stasheff_sum(a, tuple)?;
        if !v.is_zero() {
            acc.1.push((tuple.clone(), v));
        }
        return Ok(());
    }
    for m in basis {
        let d = m.degree();
        if d > budget {
            continue;
        }
        tuple.push(m.clone());
        extend(a, basis, n, budget - d, tuple, acc)?;
        tuple.pop();
    }
    Ok(())
}

/// Wraps a structure and replaces its value on one basis tuple.
pub struct Corrupted<A> {
    inner: A,
    target: Vec<Monomial>,
    replacement: Element,
}

impl<A: AInfinity> Corrupted<A> {
    pub fn new(inner: A, target: Vec<Monomial>, replacement: Element) -> Self {
        Self {
            inner,
            target,
            replacement,
        }
    }
}

impl<A: AInfinity> AInfinity for Corrupted<A> {
    fn characteristic(&self) -> u32 {
        self.inner.characteristic()
    }

    fn factor_count(&self) -> usize {
        self.inner.factor_count()
    }

    fn is_supported(&self, k: usize) -> bool {
        self.inner.is_supported(k) || k == self.target.len()
    }

    fn max_arity(&self) -> usize {
        self.inner.max_arity()
    }

    fn op_basis(&self, args: &[Monomial]) -> Result<Element> {
        if args == self.target.as_slice() {
            return Ok(self.replacement.clone());
        }
        self.inner.op_basis(args)
    }

    fn y_caps(&self) -> Vec<u16> {
        self.inner.y_caps()
    }

    fn truncations(&self) -> u64 {
        self.inner.truncations()
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::ainf::madsen::CyclicFactor;
    use crate::ainf::tensor::TensorProduct;
    use std::sync::Arc;

    #[test]
    fn madsen_factor_satisfies_identities() {
        let c4 = CyclicFactor::madsen(4, 2, 8).unwrap();
        // The factor has operations in every arity, so cap the check by hand.
        for n in 2..=6 {
            let r = stasheff_check(&c4, n, &TupleSource::Exhaustive { max_total_degree: 8 }).unwrap();
            assert!(r.passed(), "St_{n}: {:?}", r.violations.first());
        }
    }

    #[test]
    fn tensor_product_low_arity() {
        let c4 = Arc::new(CyclicFactor::madsen(4, 2, 6).unwrap());
        let t = TensorProduct::new(c4.clone(), c4, 5).unwrap();
        for n in 2..=5 {
            let r = stasheff_check(&t, n, &TupleSource::Exhaustive { max_total_degree: 7 }).unwrap();
            assert!(r.passed(), "St_{n}: {:?}", r.violations.first());
            assert!(r.tuples_checked > 0);
        }
    }

    #[test]
    fn corruption_is_detected() {
        let c4 = Arc::new(CyclicFactor::madsen(4, 2, 6).unwrap());
        let t = TensorProduct::new(c4.clone(), c4, 5).unwrap();
        let x1 = Monomial::parse("x1", 2).unwrap();
        let bad = Corrupted::new(t, vec![x1; 4], Element::zero(2, 2));
        let r = stasheff_check(&bad, 5, &TupleSource::Exhaustive { max_total_degree: 6 }).unwrap();
        assert!(!r.passed());
    }

    #[test]
    fn given_tuples_must_match_arity() {
        let c4 = CyclicFactor::madsen(4, 2, 6).unwrap();
        let x = Monomial::parse("x", 1).unwrap();
        assert!(stasheff_check(&c4, 3, &TupleSource::Given(vec![vec![x; 2]])).is_err());
    }
}
