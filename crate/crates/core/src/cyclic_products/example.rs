//! The worked example on `H*(C₄ × C₄; F_2)`.

use std::fmt::Write as _;
use std::sync::Arc;

use rayon::prelude::*;
use serde::Serialize;

use super::support::{nonzero_patterns, PatternValue};
use crate::ainf::{AInfinity, CyclicFactor, Element, FactorMonomial, Monomial, TensorProduct};
use crate::error::Result;

/// The ten non-zero `m₄` values on exterior patterns, before decoration.
pub const M4_TABLE: [(&str, &str); 10] = [
    ("x1,x1,x1,x1", "y1"),
    ("x2,x2,x2,x2", "y2"),
    ("x1*x2,x1,x1,x1", "x2*y1"),
    ("x1*x2,x2,x2,x2", "x1*y2"),
    ("x1,x1*x2,x1,x1", "x2*y1"),
    ("x2,x1*x2,x2,x2", "x1*y2"),
    ("x1,x1,x1*x2,x1", "x2*y1"),
    ("x2,x2,x1*x2,x2", "x1*y2"),
    ("x1,x1,x1,x1*x2", "x2*y1"),
    ("x2,x2,x2,x1*x2", "x1*y2"),
];

pub const M6_WITNESS: &str = "x2,x2,x1*x2,x1*x2,x1,x1";
pub const M6_WITNESS_VALUE: &str = "y1*y2";
/// The count of non-zero `m₆` input configurations claimed for this example.
pub const M6_CLAIMED_COUNT: usize = 102;

#[derive(Debug, Clone, Serialize)]
pub struct IdentityCheck {
    pub args: String,
    pub value: String,
    /// Decorations `a_i ∈ {1, y1, y2, y1*y2}` tried.
    pub decorations: usize,
    pub failures: Vec<String>,
}

#[derive(Debug, Clone, Serialize)]
pub struct M4Report {
    pub ycap: u16,
    pub identities: Vec<IdentityCheck>,
    pub nonzero_patterns: Vec<PatternValue>,
    /// `m₄` is zero on every bare pattern outside the table.
    pub vanishes_elsewhere: bool,
}

impl M4Report {
    pub fn passed(&self) -> bool {
        self.vanishes_elsewhere && self.identities.iter().all(|c| c.failures.is_empty())
    }

    /// One line per non-zero pattern, `m4(x1, x1, x1, x1) = y1`.
    pub fn table_text(&self) -> String {
        let mut s = String::new();
        for p in &self.nonzero_patterns {
            writeln!(s, "m4({}) = {}", p.args.join(", "), p.value).unwrap();
        }
        s
    }
}

#[derive(Debug, Clone, Serialize)]
pub struct M6Report {
    pub ycap: u16,
    pub witness_args: String,
    pub witness_value: Element,
    pub witness_ok: bool,
    /// Patterns non-zero for at least one decoration with `y` exponents in
    /// `{0, 1}` per factor and slot.
    pub count_some_decoration: usize,
    /// Patterns non-zero for every such decoration that keeps the product
    /// inside the cap.
    pub count_all_decorations: usize,
    pub claimed_count: usize,
    pub patterns: Vec<PatternValue>,
}

impl M6Report {
    pub fn count_matches_claim(&self) -> bool {
        self.count_some_decoration == self.claimed_count || self.count_all_decorations == self.claimed_count
    }

    pub fn passed(&self) -> bool {
        self.witness_ok && self.count_matches_claim()
    }
}

#[derive(Debug, Clone, Serialize)]
pub struct C4C4Report {
    pub m4: M4Report,
    pub m6: M6Report,
}

impl C4C4Report {
    pub fn passed(&self) -> bool {
        self.m4.passed() && self.m6.passed()
    }
}

fn c4c4(ycap: u16, max_arity: usize) -> Result<TensorProduct> {
    let c4 = Arc::new(CyclicFactor::madsen(4, 2, ycap)?);
    TensorProduct::new(c4.clone(), c4, max_arity)
}

fn parse_args(s: &str) -> Result<Vec<Monomial>> {
    s.split(',').map(|t| Monomial::parse(t, 2)).collect()
}

fn decorate(m: &Monomial, d: &Monomial) -> Monomial {
    Monomial::new(
        m.parts()
            .iter()
            .zip(d.parts())
            .map(|(a, b)| FactorMonomial::new(a.eps, a.y + b.y)),
    )
}

/// `(d_1, …, d_k)` with each `d_i ∈ {1, y1, y2, y1*y2}`, by index.
fn decoration(k: usize, index: usize) -> Vec<Monomial> {
    (0..k)
        .map(|i| {
            let bits = index >> (2 * i) & 3;
            Monomial::new([FactorMonomial::new(0, (bits & 1) as u16), FactorMonomial::new(0, (bits >> 1) as u16)])
        })
        .collect()
}

fn product_y(ds: &[Monomial]) -> Vec<u32> {
    let mut out = vec![0u32; 2];
    for d in ds {
        for (o, p) in out.iter_mut().zip(d.parts()) {
            *o += p.y as u32;
        }
    }
    out
}

fn shifted_within(value: &Element, shift: &[u32], ycap: u16) -> Element {
    let mut out = Element::zero(2, 2);
    for (m, c) in value.terms() {
        if let Some(s) = m.shift_y(shift) {
            if s.parts().iter().all(|p| p.y <= ycap) {
                out.add_term(s, c.value());
            }
        }
    }
    out
}

/// The ten `m₄` identities on every decoration, and vanishing on all other
/// exterior patterns.
pub fn check_m4_table(ycap: u16) -> Result<M4Report> {
    let t = c4c4(ycap, 4)?;
    let mut identities = Vec::new();
    for (args, value) in M4_TABLE {
        let bare = parse_args(args)?;
        let expected_bare = Element::parse(value, 2, 2)?;
        let mut failures = Vec::new();
        for index in 0..256 {
            let ds = decoration(4, index);
            let decorated: Vec<Monomial> = bare.iter().zip(&ds).map(|(m, d)| decorate(m, d)).collect();
            let got = t.op_basis(&decorated)?;
            let expected = shifted_within(&expected_bare, &product_y(&ds), ycap);
            if got != expected {
                let shown: Vec<String> = decorated.iter().map(Monomial::to_string).collect();
                failures.push(format!("m4({}) = {got}, expected {expected}", shown.join(", ")));
            }
        }
        identities.push(IdentityCheck {
            args: args.to_string(),
            value: value.to_string(),
            decorations: 256,
            failures,
        });
    }
    // Every bare pattern, straight through the tensor structure.
    let mut vanishes_elsewhere = true;
    for ma in 0u32..16 {
        for mb in 0u32..16 {
            let args: Vec<Monomial> = (0..4)
                .map(|i| Monomial::new([FactorMonomial::new((ma >> i & 1) as u8, 0), FactorMonomial::new((mb >> i & 1) as u8, 0)]))
                .collect();
            let shown = args.iter().map(Monomial::to_string).collect::<Vec<_>>().join(",");
            let in_table = M4_TABLE.iter().any(|(a, _)| *a == shown);
            if !in_table && !t.op_basis(&args)?.is_zero() {
                vanishes_elsewhere = false;
            }
        }
    }
    let (nonzero_patterns, _) = nonzero_patterns(4, 4, 4, ycap)?;
    Ok(M4Report {
        ycap,
        identities,
        nonzero_patterns,
        vanishes_elsewhere,
    })
}

/// The `m₆` witness value and the two pattern counts.
pub fn check_m6(ycap: u16) -> Result<M6Report> {
    let t = c4c4(ycap, 6)?;
    let witness_value = t.op_basis(&parse_args(M6_WITNESS)?)?;
    let witness_ok = witness_value == Element::parse(M6_WITNESS_VALUE, 2, 2)?;
    let decorations = 1usize << 12;
    let per_pattern: Vec<Result<(bool, bool)>> = (0u32..1 << 12)
        .into_par_iter()
        .map(|pattern| {
            let (ma, mb) = (pattern & 63, pattern >> 6);
            let bare: Vec<Monomial> = (0..6)
                .map(|i| Monomial::new([FactorMonomial::new((ma >> i & 1) as u8, 0), FactorMonomial::new((mb >> i & 1) as u8, 0)]))
                .collect();
            let bare_value = t.op_basis(&bare)?;
            let mut some = false;
            let mut all = !bare_value.is_zero();
            for index in 0..decorations {
                let ds = decoration(6, index);
                let decorated: Vec<Monomial> = bare.iter().zip(&ds).map(|(m, d)| decorate(m, d)).collect();
                let v = t.op_basis(&decorated)?;
                if !v.is_zero() {
                    some = true;
                } else if !shifted_within(&bare_value, &product_y(&ds), ycap).is_zero() {
                    all = false;
                }
            }
            Ok((some, all))
        })
        .collect();
    let mut count_some = 0;
    let mut count_all = 0;
    for r in per_pattern {
        let (s, a) = r?;
        count_some += s as usize;
        count_all += a as usize;
    }
    let (patterns, _) = nonzero_patterns(4, 4, 6, ycap)?;
    Ok(M6Report {
        ycap,
        witness_args: M6_WITNESS.to_string(),
        witness_value,
        witness_ok,
        count_some_decoration: count_some,
        count_all_decorations: count_all,
        claimed_count: M6_CLAIMED_COUNT,
        patterns,
    })
}

pub fn c4c4_example(ycap: u16) -> Result<C4C4Report> {
    Ok(C4C4Report {
        m4: check_m4_table(ycap)?,
        m6: check_m6(ycap)?,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn m4_table_holds() {
        let r = check_m4_table(4).unwrap();
        assert!(r.passed(), "{:?}", r.identities.iter().flat_map(|c| c.failures.iter()).next());
        assert_eq!(r.nonzero_patterns.len(), 10);
    }

    #[test]
    fn decorations_enumerate_all_choices() {
        let all: std::collections::BTreeSet<Vec<Monomial>> = (0..256).map(|i| decoration(4, i)).collect();
        assert_eq!(all.len(), 256);
    }
}
