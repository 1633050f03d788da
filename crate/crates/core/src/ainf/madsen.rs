//! The A∞-structure on `H*(C_n; F_p) = Λ(x) ⊗ k[y]`.

use std::sync::atomic::{AtomicU64, Ordering};

use super::element::Element;
use super::monomial::{FactorMonomial, Monomial};
use super::structure::AInfinity;
use crate::error::{contract, Result};
use crate::field::check_prime;

/// Default cap on the `y` exponent.
pub const DEFAULT_YCAP: u16 = 6;

/// `m₂` is the cup product, `m_n(xy^{i₁}, …, xy^{i_n}) = y^{i₁+…+i_n+1}`,
/// every other operation vanishes.
#[derive(Debug)]
pub struct CyclicFactor {
    n: usize,
    p: u32,
    ycap: u16,
    truncations: AtomicU64,
}

impl CyclicFactor {
    /// The structure on the cohomology of `C_n` over `F_p`; needs `p | n`.
    pub fn madsen(n: usize, p: u32, ycap: u16) -> Result<Self> {
        check_prime(p)?;
        if !n.is_multiple_of(p as usize) {
            return contract(format!("{p} does not divide {n}"));
        }
        Self::madsen_shaped(n, p, ycap)
    }

    /// The same operations without the divisibility requirement. Only the
    /// shape of the structure (which arities are non-zero and on which
    /// inputs) matters for support questions.
    pub fn madsen_shaped(n: usize, p: u32, ycap: u16) -> Result<Self> {
        check_prime(p)?;
        if n < 3 {
            return contract(format!("the cyclic factor needs n ≥ 3, got {n}"));
        }
        Ok(Self {
            n,
            p,
            ycap,
            truncations: AtomicU64::new(0),
        })
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn ycap(&self) -> u16 {
        self.ycap
    }

    fn capped(&self, eps: u8, y: u32) -> Element {
        if y > self.ycap as u32 {
            self.truncations.fetch_add(1, Ordering::Relaxed);
            return Element::zero(self.p, 1);
        }
        Element::monomial(self.p, Monomial::new([FactorMonomial::new(eps, y as u16)]))
    }
}

impl AInfinity for CyclicFactor {
    fn characteristic(&self) -> u32 {
        self.p
    }

    fn factor_count(&self) -> usize {
        1
    }

    fn is_supported(&self, k: usize) -> bool {
        k == 2 || k == self.n
    }

    fn max_arity(&self) -> usize {
        usize::MAX
    }

    fn op_basis(&self, args: &[Monomial]) -> Result<Element> {
        if args.iter().any(|m| m.factor_count() != 1) {
            return contract("cyclic factor arguments have one factor");
        }
        let parts: Vec<FactorMonomial> = args.iter().map(|m| m.parts()[0]).collect();
        let y: u32 = parts.iter().map(|p| p.y as u32).sum();
        let out = match parts.len() {
            2 if parts[0].eps + parts[1].eps <= 1 => self.capped(parts[0].eps + parts[1].eps, y),
            k if k == self.n && parts.iter().all(|p| p.eps == 1) => self.capped(0, y + 1),
            _ => Element::zero(self.p, 1),
        };
        debug_assert!(out.is_homogeneous_of(
            args.iter().map(|m| m.degree() as i64).sum::<i64>() + 2 - args.len() as i64
        ));
        Ok(out)
    }

    fn y_caps(&self) -> Vec<u16> {
        vec![self.ycap]
    }

    fn truncations(&self) -> u64 {
        self.truncations.load(Ordering::Relaxed)
    }

    fn y_equivariant(&self) -> bool {
        true
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::ainf::structure::op;

    fn m(s: &str) -> Monomial {
        Monomial::parse(s, 1).unwrap()
    }

    #[test]
    fn x_squares_to_zero() {
        let c4 = CyclicFactor::madsen(4, 2, 6).unwrap();
        assert!(c4.op_basis(&[m("x"), m("x")]).unwrap().is_zero());
        assert_eq!(c4.op_basis(&[m("x*y"), m("y^2")]).unwrap().to_string(), "x*y^3");
    }

    #[test]
    fn higher_product() {
        let c4 = CyclicFactor::madsen(4, 2, 6).unwrap();
        assert_eq!(c4.op_basis(&vec![m("x"); 4]).unwrap().to_string(), "y");
        assert_eq!(c4.op_basis(&[m("x*y"), m("x"), m("x"), m("x")]).unwrap().to_string(), "y^2");
        assert!(c4.op_basis(&[m("x"), m("x"), m("1"), m("x")]).unwrap().is_zero());
        assert!(c4.op_basis(&vec![m("x"); 3]).unwrap().is_zero());
        assert!(!c4.is_supported(3));
    }

    #[test]
    fn truncation_is_counted() {
        let c4 = CyclicFactor::madsen(4, 2, 2).unwrap();
        assert!(c4.op_basis(&[m("x*y"), m("x"), m("x*y"), m("x")]).unwrap().is_zero());
        assert_eq!(c4.truncations(), 1);
    }

    #[test]
    fn divisibility_is_required() {
        assert!(CyclicFactor::madsen(5, 2, 4).is_err());
        assert!(CyclicFactor::madsen(4, 4, 4).is_err());
        assert!(CyclicFactor::madsen_shaped(5, 2, 4).is_ok());
        assert!(CyclicFactor::madsen(6, 3, 4).is_ok());
    }

    #[test]
    fn product_is_associative() {
        let c = CyclicFactor::madsen(6, 3, 8).unwrap();
        let basis: Vec<Monomial> = crate::ainf::basis_up_to_degree(&[2], 5);
        for a in &basis {
            for b in &basis {
                for d in &basis {
                    let e = |m: &Monomial| Element::monomial(3, m.clone());
                    let ab = op(&c, &[e(a), e(b)]).unwrap();
                    let bd = op(&c, &[e(b), e(d)]).unwrap();
                    assert_eq!(op(&c, &[ab, e(d)]).unwrap(), op(&c, &[e(a), bd]).unwrap());
                }
            }
        }
    }
}
