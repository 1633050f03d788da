//! Prime field scalars.

use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

pub fn is_prime(p: u32) -> bool {
    if p < 2 {
        return false;
    }
    let mut d = 2u32;
    while d.saturating_mul(d) <= p {
        if p.is_multiple_of(d) {
            return false;
        }
        d += 1;
    }
    true
}

pub(crate) fn check_prime(p: u32) -> Result<()> {
    if is_prime(p) {
        Ok(())
    } else {
        Err(Error::Contract(format!("{p} is not prime")))
    }
}

/// An element of `F_p`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct Scalar {
    value: u32,
    p: u32,
}

impl Scalar {
    pub fn new(value: i64, p: u32) -> Self {
        debug_assert!(is_prime(p));
        let value = value.rem_euclid(p as i64) as u32;
        Self { value, p }
    }

    pub fn zero(p: u32) -> Self {
        Self { value: 0, p }
    }

    pub fn one(p: u32) -> Self {
        Self { value: 1 % p, p }
    }

    pub fn value(self) -> u32 {
        self.value
    }

    pub fn characteristic(self) -> u32 {
        self.p
    }

    pub fn is_zero(self) -> bool {
        self.value == 0
    }

    fn same_field(self, other: Self) {
        assert_eq!(self.p, other.p, "scalars from different fields");
    }
}

impl Add for Scalar {
    type Output = Scalar;
    fn add(self, rhs: Scalar) -> Scalar {
        self.same_field(rhs);
        Scalar {
            value: (self.value + rhs.value) % self.p,
            p: self.p,
        }
    }
}

impl Sub for Scalar {
    type Output = Scalar;
    fn sub(self, rhs: Scalar) -> Scalar {
        self + (-rhs)
    }
}

impl Neg for Scalar {
    type Output = Scalar;
    fn neg(self) -> Scalar {
        Scalar {
            value: (self.p - self.value) % self.p,
            p: self.p,
        }
    }
}

impl Mul for Scalar {
    type Output = Scalar;
    fn mul(self, rhs: Scalar) -> Scalar {
        self.same_field(rhs);
        Scalar {
            value: ((self.value as u64 * rhs.value as u64) % self.p as u64) as u32,
            p: self.p,
        }
    }
}

impl fmt::Display for Scalar {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.value)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn primes() {
        let ps: Vec<u32> = (0..30).filter(|&p| is_prime(p)).collect();
        assert_eq!(ps, vec![2, 3, 5, 7, 11, 13, 17, 19, 23, 29]);
    }

    #[test]
    fn arithmetic_mod_p() {
        let a = Scalar::new(4, 5);
        let b = Scalar::new(3, 5);
        assert_eq!((a + b).value(), 2);
        assert_eq!((a * b).value(), 2);
        assert_eq!((b - a).value(), 4);
        assert_eq!(Scalar::new(-1, 2), Scalar::one(2));
    }
}
