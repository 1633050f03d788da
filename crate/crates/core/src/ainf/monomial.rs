//! Basis monomials of `Λ(x₁, …, x_f) ⊗ k[y₁, …, y_f]`.

use std::fmt;

use smallvec::SmallVec;

use crate::error::{Error, Result};

/// `x^eps y^y` in one cyclic factor.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Default)]
pub struct FactorMonomial {
    pub eps: u8,
    pub y: u16,
}

impl FactorMonomial {
    pub const UNIT: FactorMonomial = FactorMonomial { eps: 0, y: 0 };
    pub const X: FactorMonomial = FactorMonomial { eps: 1, y: 0 };

    pub fn new(eps: u8, y: u16) -> Self {
        assert!(eps <= 1, "x squares to zero");
        Self { eps, y }
    }

    pub fn degree(self) -> u32 {
        self.eps as u32 + 2 * self.y as u32
    }
}

/// A tensor of factor monomials, one per cyclic factor.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Monomial {
    parts: SmallVec<[FactorMonomial; 2]>,
}

impl Monomial {
    pub fn new(parts: impl IntoIterator<Item = FactorMonomial>) -> Self {
        Self {
            parts: parts.into_iter().collect(),
        }
    }

    pub fn unit(factors: usize) -> Self {
        Self::new(std::iter::repeat_n(FactorMonomial::UNIT, factors))
    }

    pub fn single(eps: u8, y: u16) -> Self {
        Self::new([FactorMonomial::new(eps, y)])
    }

    pub fn parts(&self) -> &[FactorMonomial] {
        &self.parts
    }

    pub fn factor_count(&self) -> usize {
        self.parts.len()
    }

    pub fn degree(&self) -> u32 {
        self.parts.iter().map(|p| p.degree()).sum()
    }

    /// Parity of the degree: the number of `x` factors mod 2.
    pub fn is_odd(&self) -> bool {
        self.parts.iter().map(|p| p.eps as u32).sum::<u32>() % 2 == 1
    }

    /// Bit `f` is the `x` exponent in factor `f`.
    pub fn eps_bits(&self) -> u8 {
        self.parts.iter().enumerate().fold(0, |acc, (i, p)| acc | (p.eps << i))
    }

    /// The same exterior part with every `y` exponent set to zero.
    pub fn bare(&self) -> Self {
        Self::new(self.parts.iter().map(|p| FactorMonomial { eps: p.eps, y: 0 }))
    }

    /// Concatenation: `self ⊗ other`.
    pub fn tensor(&self, other: &Monomial) -> Self {
        Self::new(self.parts.iter().chain(other.parts.iter()).copied())
    }

    pub fn split_at(&self, at: usize) -> (Monomial, Monomial) {
        (Self::new(self.parts[..at].iter().copied()), Self::new(self.parts[at..].iter().copied()))
    }

    /// Multiplies by `y_f^{shift[f]}` in every factor.
    pub fn shift_y(&self, shift: &[u32]) -> Option<Self> {
        let mut parts = self.parts.clone();
        for (p, &s) in parts.iter_mut().zip(shift) {
            p.y = u16::try_from(p.y as u32 + s).ok()?;
        }
        Some(Self { parts })
    }

    /// Parses `x1*x2*y1^2*y2`, `x*y^3` or `1`. With two factors the letters
    /// `x, z` (exterior) and `y, w` (polynomial) are accepted as aliases.
    pub fn parse(s: &str, factors: usize) -> Result<Self> {
        let mut parts = vec![FactorMonomial::UNIT; factors];
        let s = s.trim();
        if s == "1" {
            return Ok(Self::new(parts));
        }
        for raw in s.split('*') {
            let token = raw.trim();
            let err = |reason: &str| Error::Parse {
                token: token.to_string(),
                reason: reason.to_string(),
            };
            let (base, exp) = match token.split_once('^') {
                Some((b, e)) => (b, e.parse::<u16>().map_err(|_| err("bad exponent"))?),
                None => (token, 1),
            };
            let mut chars = base.chars();
            let letter = chars.next().ok_or_else(|| err("empty factor"))?;
            let index = chars.as_str();
            let (is_x, factor) = match (letter, index) {
                ('x', "") => (true, 0),
                ('y', "") => (false, 0),
                ('z', "") if factors == 2 => (true, 1),
                ('w', "") if factors == 2 => (false, 1),
                ('x' | 'y', idx) => {
                    let i: usize = idx.parse().map_err(|_| err("bad factor index"))?;
                    if i == 0 {
                        return Err(err("factors are numbered from 1"));
                    }
                    (letter == 'x', i - 1)
                }
                _ => return Err(err("unknown generator")),
            };
            if factor >= factors {
                return Err(err("factor index out of range"));
            }
            let part = &mut parts[factor];
            if is_x {
                if exp != 1 || part.eps == 1 {
                    return Err(err("x squares to zero"));
                }
                part.eps = 1;
            } else {
                part.y = part.y.checked_add(exp).ok_or_else(|| err("exponent overflow"))?;
            }
        }
        Ok(Self::new(parts))
    }
}

impl fmt::Display for Monomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let single = self.parts.len() == 1;
        let name = |letter: char, i: usize| {
            if single {
                letter.to_string()
            } else {
                format!("{letter}{}", i + 1)
            }
        };
        let mut tokens = Vec::new();
        for (i, p) in self.parts.iter().enumerate() {
            if p.eps == 1 {
                tokens.push(name('x', i));
            }
        }
        for (i, p) in self.parts.iter().enumerate() {
            match p.y {
                0 => {}
                1 => tokens.push(name('y', i)),
                e => tokens.push(format!("{}^{e}", name('y', i))),
            }
        }
        if tokens.is_empty() {
            f.write_str("1")
        } else {
            f.write_str(&tokens.join("*"))
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn text_round_trip() {
        for (s, f) in [("x1*x2*y1^2*y2", 2), ("x*y^2", 1), ("1", 2), ("y2", 2), ("x", 1)] {
            assert_eq!(Monomial::parse(s, f).unwrap().to_string(), s);
        }
    }

    #[test]
    fn aliases_and_order() {
        let m = Monomial::parse("w*y*z", 2).unwrap();
        assert_eq!(m.to_string(), "x2*y1*y2");
        assert_eq!(m.degree(), 5);
        assert_eq!(m.eps_bits(), 0b10);
        assert!(m.is_odd());
    }

    #[test]
    fn rejects() {
        for bad in ["x1*x1", "x3", "q", "y^a", "x0", "x^2", ""] {
            assert!(Monomial::parse(bad, 2).is_err(), "{bad}");
        }
    }

    #[test]
    fn shift_and_split() {
        let m = Monomial::parse("x1*y2", 2).unwrap();
        assert_eq!(m.shift_y(&[2, 1]).unwrap().to_string(), "x1*y1^2*y2^2");
        let (a, b) = m.split_at(1);
        assert_eq!((a.to_string(), b.to_string()), ("x".to_string(), "y".to_string()));
        assert_eq!(a.tensor(&b), m);
        assert_eq!(m.bare().to_string(), "x1");
    }
}
