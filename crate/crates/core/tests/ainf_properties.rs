use std::sync::Arc;

use proptest::prelude::*;
use sudiag::ainf::{op, AInfinity, CyclicFactor, Element, FactorMonomial, Monomial, TensorProduct};

fn tensor(n: usize, m: usize, ycap: u16, max_arity: usize) -> TensorProduct {
    let a = Arc::new(CyclicFactor::madsen_shaped(n, 2, ycap).unwrap());
    let b = Arc::new(CyclicFactor::madsen_shaped(m, 2, ycap).unwrap());
    TensorProduct::new(a, b, max_arity).unwrap()
}

fn monomial(ycap: u16) -> impl Strategy<Value = Monomial> {
    (0u8..2, 0..=ycap, 0u8..2, 0..=ycap).prop_map(|(e1, y1, e2, y2)| Monomial::new([FactorMonomial::new(e1, y1), FactorMonomial::new(e2, y2)]))
}

fn tuple(k: usize, ycap: u16) -> impl Strategy<Value = Vec<Monomial>> {
    prop::collection::vec(monomial(ycap), k)
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(128))]

    #[test]
    fn operations_are_multilinear(k in 2usize..=6, args in tuple(6, 2), extra in monomial(2), slot in 0usize..6) {
        let t = tensor(4, 4, 6, 6);
        let args = &args[..k];
        let slot = slot % k;
        let mut sum_args: Vec<Element> = args.iter().map(|m| Element::monomial(2, m.clone())).collect();
        sum_args[slot].add_term(extra.clone(), 1);
        let mut other = args.to_vec();
        other[slot] = extra;
        let mut expected = t.op_basis(args).unwrap();
        expected.add_scaled(&t.op_basis(&other).unwrap(), 1);
        prop_assert_eq!(op(&t, &sum_args).unwrap(), expected);
    }

    #[test]
    fn operations_have_degree_two_minus_k(k in 2usize..=6, args in tuple(6, 3)) {
        let t = tensor(4, 5, 8, 6);
        let args = &args[..k];
        let d: i64 = args.iter().map(|m| m.degree() as i64).sum::<i64>() + 2 - k as i64;
        prop_assert!(t.op_basis(args).unwrap().is_homogeneous_of(d));
    }

    #[test]
    fn m2_is_the_ring_product(a in monomial(3), b in monomial(3)) {
        let t = tensor(4, 4, 6, 2);
        let got = t.op_basis(&[a.clone(), b.clone()]).unwrap();
        let zero = a.parts().iter().zip(b.parts()).any(|(p, q)| p.eps + q.eps > 1);
        if zero {
            prop_assert!(got.is_zero());
        } else {
            let parts = a.parts().iter().zip(b.parts()).map(|(p, q)| FactorMonomial::new(p.eps + q.eps, p.y + q.y));
            prop_assert_eq!(got, Element::monomial(2, Monomial::new(parts)));
        }
    }

    /// Raising the cap keeps every value that was inside the old cap.
    #[test]
    fn raising_the_cap_is_monotone(k in 2usize..=6, args in tuple(6, 2)) {
        let args = &args[..k];
        let low = tensor(4, 4, 4, 6).op_basis(args).unwrap();
        let high = tensor(4, 4, 8, 6).op_basis(args).unwrap();
        for (m, c) in low.terms() {
            prop_assert_eq!(high.coeff(m), c);
        }
        for (m, c) in high.terms() {
            if m.parts().iter().all(|p| p.y <= 4) {
                prop_assert_eq!(low.coeff(m), c);
            }
        }
    }

    /// Multiplying one argument by `y` multiplies the value by `y`.
    #[test]
    fn operations_commute_with_y(k in 2usize..=6, args in tuple(6, 1), slot in 0usize..6, factor in 0usize..2) {
        let t = tensor(4, 4, 10, 6);
        let args = &args[..k];
        let slot = slot % k;
        let mut shift = vec![0u32; 2];
        shift[factor] = 1;
        let mut moved = args.to_vec();
        moved[slot] = moved[slot].shift_y(&shift).unwrap();
        let before = t.op_basis(args).unwrap();
        let mut expected = Element::zero(2, 2);
        for (m, c) in before.terms() {
            expected.add_term(m.shift_y(&shift).unwrap(), c.value());
        }
        prop_assert_eq!(t.op_basis(&moved).unwrap(), expected);
    }
}

#[test]
fn cyclic_product_is_associative() {
    let c = CyclicFactor::madsen(4, 2, 6).unwrap();
    let basis: Vec<Monomial> = (0..2).flat_map(|e| (0..3).map(move |y| Monomial::single(e, y))).collect();
    for a in &basis {
        for b in &basis {
            for d in &basis {
                let e = |m: &Monomial| Element::monomial(2, m.clone());
                let ab = c.op_basis(&[a.clone(), b.clone()]).unwrap();
                let bd = c.op_basis(&[b.clone(), d.clone()]).unwrap();
                assert_eq!(op(&c, &[ab, e(d)]).unwrap(), op(&c, &[e(a), bd]).unwrap());
            }
        }
    }
}
