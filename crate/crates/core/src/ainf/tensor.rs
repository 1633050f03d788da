//! The A∞-structure on `A ⊗ B` induced by `Δ_K`.

use std::sync::atomic::{AtomicU64, Ordering};
use std::sync::Arc;

use dashmap::DashMap;
use smallvec::SmallVec;

use super::element::Element;
use super::monomial::Monomial;
use super::structure::{evaluate_tree_basis, AInfinity};
use crate::error::{Error, Result};
use crate::trees::{delta_k_shared, DiagonalTermK, DEFAULT_MAX_ARITY};

/// How `a₁⊗b₁ ⊗ … ⊗ a_k⊗b_k` is reordered to `(a₁…a_k) ⊗ (b₁…b_k)`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum SignRule {
    /// No signs; only valid over `F_2`.
    Char2,
    /// `(-1)^{Σ_{j<i} |b_j||a_i|}`, with `Δ_K` terms taken with sign `+1`.
    /// Unverified.
    ExperimentalKoszul,
}

type PatternKey = SmallVec<[u8; 16]>;

pub struct TensorProduct {
    a: Arc<dyn AInfinity>,
    b: Arc<dyn AInfinity>,
    max_arity: usize,
    signs: SignRule,
    /// Values on bare exterior patterns, when both sides are equivariant.
    memo: Option<DashMap<PatternKey, Element>>,
    truncations: AtomicU64,
}

impl TensorProduct {
    /// Characteristic two only.
    pub fn new(a: Arc<dyn AInfinity>, b: Arc<dyn AInfinity>, max_arity: usize) -> Result<Self> {
        Self::with_sign_rule(a, b, max_arity, SignRule::Char2)
    }

    pub fn with_sign_rule(a: Arc<dyn AInfinity>, b: Arc<dyn AInfinity>, max_arity: usize, signs: SignRule) -> Result<Self> {
        let p = a.characteristic();
        if b.characteristic() != p {
            return Err(Error::CharacteristicMismatch(p, b.characteristic()));
        }
        if p != 2 && signs == SignRule::Char2 {
            return Err(Error::UnsupportedSigns(p));
        }
        if max_arity > DEFAULT_MAX_ARITY {
            return Err(Error::ResourceLimit {
                what: "tensor product arity",
                requested: max_arity,
                cap: DEFAULT_MAX_ARITY,
            });
        }
        let memo = (a.y_equivariant() && b.y_equivariant()).then(DashMap::new);
        Ok(Self {
            a,
            b,
            max_arity,
            signs,
            memo,
            truncations: AtomicU64::new(0),
        })
    }

    pub fn left(&self) -> &Arc<dyn AInfinity> {
        &self.a
    }

    pub fn right(&self) -> &Arc<dyn AInfinity> {
        &self.b
    }

    pub fn sign_rule(&self) -> SignRule {
        self.signs
    }

    /// The diagonal terms used in arity `k`.
    pub fn delta(&self, k: usize) -> Result<Arc<[DiagonalTermK]>> {
        delta_k_shared(k)
    }

    /// Sum over the `Δ_K(k)` terms, no memo.
    fn compute(&self, args: &[Monomial]) -> Result<Element> {
        let p = self.characteristic();
        let fa = self.a.factor_count();
        let (a_args, b_args): (Vec<Monomial>, Vec<Monomial>) = args.iter().map(|m| m.split_at(fa)).unzip();
        let sign = match self.signs {
            SignRule::Char2 => 1,
            SignRule::ExperimentalKoszul => {
                let mut odd_b = 0u32;
                let mut exponent = 0u32;
                for (a, b) in a_args.iter().zip(&b_args) {
                    if a.is_odd() {
                        exponent += odd_b;
                    }
                    odd_b += b.is_odd() as u32;
                }
                if exponent % 2 == 1 {
                    p - 1
                } else {
                    1
                }
            }
        };
        let mut out = Element::zero(p, self.factor_count());
        for term in self.delta(args.len())?.iter() {
            let coeff = (term.multiplicity % p as u64) as u32;
            if coeff == 0 {
                continue;
            }
            let left = evaluate_tree_basis(&term.left, &*self.a, &a_args)?;
            if left.is_zero() {
                continue;
            }
            let right = evaluate_tree_basis(&term.right, &*self.b, &b_args)?;
            if right.is_zero() {
                continue;
            }
            out.add_scaled(&left.tensor(&right), coeff * sign % p);
        }
        Ok(out)
    }
}

impl AInfinity for TensorProduct {
    fn characteristic(&self) -> u32 {
        self.a.characteristic()
    }

    fn factor_count(&self) -> usize {
        self.a.factor_count() + self.b.factor_count()
    }

    fn is_supported(&self, k: usize) -> bool {
        (2..=self.max_arity).contains(&k)
    }

    fn max_arity(&self) -> usize {
        self.max_arity
    }

    fn op_basis(&self, args: &[Monomial]) -> Result<Element> {
        let k = args.len();
        if k > self.max_arity {
            return Err(Error::ResourceLimit {
                what: "tensor product arity",
                requested: k,
                cap: self.max_arity,
            });
        }
        let f = self.factor_count();
        if args.iter().any(|m| m.factor_count() != f) {
            return Err(Error::Contract(format!("arguments must have {f} factors")));
        }
        if k < 2 {
            return Ok(Element::zero(self.characteristic(), f));
        }
        let Some(memo) = &self.memo else {
            return self.compute(args);
        };
        let key: PatternKey = args.iter().map(Monomial::eps_bits).collect();
        let bare = match memo.get(&key) {
            Some(v) => v.clone(),
            None => {
                let bare_args: Vec<Monomial> = args.iter().map(Monomial::bare).collect();
                let v = self.compute(&bare_args)?;
                memo.entry(key).or_insert(v).clone()
            }
        };
        let mut shift = vec![0u32; f];
        for m in args {
            for (s, part) in shift.iter_mut().zip(m.parts()) {
                *s += part.y as u32;
            }
        }
        let caps = self.y_caps();
        let mut out = Element::zero(self.characteristic(), f);
        for (m, c) in bare.terms() {
            match m.shift_y(&shift) {
                Some(s) if s.parts().iter().zip(&caps).all(|(part, &cap)| part.y <= cap) => out.add_term(s, c.value()),
                _ => {
                    self.truncations.fetch_add(1, Ordering::Relaxed);
                }
            }
        }
        Ok(out)
    }

    fn y_caps(&self) -> Vec<u16> {
        let mut caps = self.a.y_caps();
        caps.extend(self.b.y_caps());
        caps
    }

    fn truncations(&self) -> u64 {
        self.truncations.load(Ordering::Relaxed) + self.a.truncations() + self.b.truncations()
    }

    fn y_equivariant(&self) -> bool {
        self.memo.is_some()
    }
}
