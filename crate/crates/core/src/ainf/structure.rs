//! The operation interface shared by factor and tensor structures, and
//! evaluation of planar trees.

use super::element::Element;
use super::monomial::{FactorMonomial, Monomial};
use crate::error::{contract, Result};
use crate::trees::PlanarTree;

/// An A∞-structure on a graded ring with a monomial basis, given on basis
/// tuples.
pub trait AInfinity: Send + Sync {
    fn characteristic(&self) -> u32;

    /// Number of cyclic factors in the basis monomials.
    fn factor_count(&self) -> usize;

    /// Whether `m_k` may be non-zero. Unsupported arities vanish.
    fn is_supported(&self, k: usize) -> bool;

    /// Largest arity this structure can evaluate.
    fn max_arity(&self) -> usize;

    /// `m_k` on a tuple of basis monomials, `k = args.len()`.
    fn op_basis(&self, args: &[Monomial]) -> Result<Element>;

    /// `y` exponent cap per factor; outputs above it are dropped.
    fn y_caps(&self) -> Vec<u16>;

    /// Number of outputs dropped by the caps so far.
    fn truncations(&self) -> u64 {
        0
    }

    /// `m_k` commutes with multiplication by every `y_f` in every slot, up
    /// to the caps. Lets callers evaluate on bare exterior patterns.
    fn y_equivariant(&self) -> bool {
        false
    }
}

/// `m_k` on general elements, by multilinear expansion over basis tuples.
pub fn op<A: AInfinity + ?Sized>(a: &A, args: &[Element]) -> Result<Element> {
    let p = a.characteristic();
    let mut out = Element::zero(p, a.factor_count());
    if args.iter().any(Element::is_zero) {
        return Ok(out);
    }
    let lists: Vec<Vec<(&Monomial, u32)>> = args
        .iter()
        .map(|e| e.terms().map(|(m, c)| (m, c.value())).collect())
        .collect();
    let mut idx = vec![0usize; args.len()];
    let mut tuple: Vec<Monomial> = Vec::with_capacity(args.len());
    loop {
        tuple.clear();
        let mut c = 1u64;
        for (l, &i) in lists.iter().zip(&idx) {
            tuple.push(l[i].0.clone());
            c = c * l[i].1 as u64 % p as u64;
        }
        let v = a.op_basis(&tuple)?;
        out.add_scaled(&v, c as u32);
        // Odometer over the term lists.
        let mut pos = args.len();
        loop {
            if pos == 0 {
                return Ok(out);
            }
            pos -= 1;
            idx[pos] += 1;
            if idx[pos] < lists[pos].len() {
                break;
            }
            idx[pos] = 0;
        }
    }
}

/// Reads `t` as a composite operation: a node of arity `j` applies `m_j` to
/// the values of its children; leaves take `args` in planar order.
pub fn evaluate_tree<A: AInfinity + ?Sized>(t: &PlanarTree, a: &A, args: &[Element]) -> Result<Element> {
    if t.leaves() != args.len() {
        return contract(format!("tree has {} leaves but {} arguments were given", t.leaves(), args.len()));
    }
    fn go<A: AInfinity + ?Sized>(t: &PlanarTree, a: &A, args: &[Element], next: &mut usize) -> Result<Element> {
        match t {
            PlanarTree::Leaf => {
                *next += 1;
                Ok(args[*next - 1].clone())
            }
            PlanarTree::Node(children) => {
                if !a.is_supported(children.len()) {
                    *next += children.iter().map(PlanarTree::leaves).sum::<usize>();
                    return Ok(Element::zero(a.characteristic(), a.factor_count()));
                }
                let mut vals = Vec::with_capacity(children.len());
                for c in children {
                    vals.push(go(c, a, args, next)?);
                }
                op(a, &vals)
            }
        }
    }
    go(t, a, args, &mut 0)
}

/// [`evaluate_tree`] on basis monomials.
pub fn evaluate_tree_basis<A: AInfinity + ?Sized>(t: &PlanarTree, a: &A, args: &[Monomial]) -> Result<Element> {
    let p = a.characteristic();
    let elems: Vec<Element> = args.iter().map(|m| Element::monomial(p, m.clone())).collect();
    evaluate_tree(t, a, &elems)
}

/// All basis monomials with every `y_f ≤ caps[f]` and degree at most
/// `max_degree`, in canonical order.
pub fn basis_up_to_degree(caps: &[u16], max_degree: u32) -> Vec<Monomial> {
    let mut out = vec![Monomial::new([])];
    for &cap in caps {
        let mut next = Vec::new();
        for m in &out {
            for eps in 0..=1u8 {
                for y in 0..=cap {
                    let part = FactorMonomial::new(eps, y);
                    if m.degree() + part.degree() <= max_degree {
                        next.push(m.tensor(&Monomial::new([part])));
                    }
                }
            }
        }
        out = next;
    }
    out.sort();
    out
}
