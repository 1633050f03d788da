//! Finite `F_p`-linear combinations of basis monomials.

use std::collections::BTreeMap;
use std::fmt;

use serde::{Deserialize, Serialize, Serializer};

use super::monomial::Monomial;
use crate::error::{Error, Result};
use crate::field::{check_prime, Scalar};

#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Element {
    p: u32,
    factors: usize,
    terms: BTreeMap<Monomial, u32>,
}

/// One `{monomial, coeff}` entry of the JSON form.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ElementTerm {
    pub monomial: String,
    pub coeff: u32,
}

impl Element {
    pub fn zero(p: u32, factors: usize) -> Self {
        Self {
            p,
            factors,
            terms: BTreeMap::new(),
        }
    }

    pub fn monomial(p: u32, m: Monomial) -> Self {
        let mut e = Self::zero(p, m.factor_count());
        e.add_term(m, 1);
        e
    }

    pub fn characteristic(&self) -> u32 {
        self.p
    }

    pub fn factor_count(&self) -> usize {
        self.factors
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    /// Terms in canonical monomial order, coefficients non-zero.
    pub fn terms(&self) -> impl Iterator<Item = (&Monomial, Scalar)> + '_ {
        self.terms.iter().map(|(m, &c)| (m, Scalar::new(c as i64, self.p)))
    }

    pub fn coeff(&self, m: &Monomial) -> Scalar {
        Scalar::new(self.terms.get(m).copied().unwrap_or(0) as i64, self.p)
    }

    pub fn add_term(&mut self, m: Monomial, c: u32) {
        debug_assert_eq!(m.factor_count(), self.factors);
        let c = c % self.p;
        if c == 0 {
            return;
        }
        let entry = self.terms.entry(m);
        match entry {
            std::collections::btree_map::Entry::Vacant(v) => {
                v.insert(c);
            }
            std::collections::btree_map::Entry::Occupied(mut o) => {
                let sum = (*o.get() + c) % self.p;
                if sum == 0 {
                    o.remove();
                } else {
                    *o.get_mut() = sum;
                }
            }
        }
    }

    /// `self += c · other`.
    pub fn add_scaled(&mut self, other: &Element, c: u32) {
        assert_eq!(self.p, other.p, "elements from different fields");
        let c = c % self.p;
        for (m, &v) in &other.terms {
            self.add_term(m.clone(), ((v as u64 * c as u64) % self.p as u64) as u32);
        }
    }

    pub fn scaled(&self, c: u32) -> Element {
        let mut out = Element::zero(self.p, self.factors);
        out.add_scaled(self, c);
        out
    }

    /// `self ⊗ other` on concatenated factors.
    pub fn tensor(&self, other: &Element) -> Element {
        assert_eq!(self.p, other.p, "elements from different fields");
        let mut out = Element::zero(self.p, self.factors + other.factors);
        for (a, &ca) in &self.terms {
            for (b, &cb) in &other.terms {
                out.add_term(a.tensor(b), ((ca as u64 * cb as u64) % self.p as u64) as u32);
            }
        }
        out
    }

    /// Every monomial has degree `d`.
    pub fn is_homogeneous_of(&self, d: i64) -> bool {
        self.terms.keys().all(|m| m.degree() as i64 == d)
    }

    /// Parses `y1*y2 + x1*y1`, `2*x*y`, `0`.
    pub fn parse(s: &str, p: u32, factors: usize) -> Result<Self> {
        check_prime(p)?;
        let mut out = Element::zero(p, factors);
        let s = s.trim();
        if s == "0" {
            return Ok(out);
        }
        for term in s.split('+') {
            let term = term.trim();
            let (coeff, mono) = match term.split_once('*') {
                Some((c, rest)) if c.trim().chars().all(|ch| ch.is_ascii_digit()) && !c.trim().is_empty() => {
                    (c.trim(), rest)
                }
                _ if !term.is_empty() && term.chars().all(|ch| ch.is_ascii_digit()) => (term, "1"),
                _ => ("1", term),
            };
            let c: u64 = coeff.parse().map_err(|_| Error::Parse {
                token: coeff.to_string(),
                reason: "bad coefficient".into(),
            })?;
            out.add_term(Monomial::parse(mono, factors)?, (c % p as u64) as u32);
        }
        Ok(out)
    }

    pub fn to_terms(&self) -> Vec<ElementTerm> {
        self.terms
            .iter()
            .map(|(m, &c)| ElementTerm {
                monomial: m.to_string(),
                coeff: c,
            })
            .collect()
    }

    pub fn from_terms(p: u32, factors: usize, terms: &[ElementTerm]) -> Result<Self> {
        check_prime(p)?;
        let mut out = Element::zero(p, factors);
        for t in terms {
            out.add_term(Monomial::parse(&t.monomial, factors)?, t.coeff % p);
        }
        Ok(out)
    }
}

impl fmt::Display for Element {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return f.write_str("0");
        }
        for (i, (m, &c)) in self.terms.iter().enumerate() {
            if i > 0 {
                f.write_str(" + ")?;
            }
            if c != 1 {
                write!(f, "{c}*")?;
            }
            write!(f, "{m}")?;
        }
        Ok(())
    }
}

impl Serialize for Element {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        self.to_terms().serialize(s)
    }
}
