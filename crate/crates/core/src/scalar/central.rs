use std::fmt;
use std::ops::{Add, Neg, Sub};

use serde::{Deserialize, Serialize};

/// Exponents `(a, b)` of the central monomial `q^{a c/2} q^{b c'/2}`.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub struct CentralExponent {
    pub c: i64,
    pub c_prime: i64,
}

impl CentralExponent {
    pub const ZERO: CentralExponent = CentralExponent { c: 0, c_prime: 0 };

    pub fn new(c: i64, c_prime: i64) -> Self {
        CentralExponent { c, c_prime }
    }

    pub fn is_zero(&self) -> bool {
        self.c == 0 && self.c_prime == 0
    }

    /// Identify `q^{c/2}` with `q^{c'/2}`, folding everything onto `c`.
    pub fn identified(&self) -> Self {
        CentralExponent { c: self.c + self.c_prime, c_prime: 0 }
    }
}

impl Add for CentralExponent {
    type Output = CentralExponent;
    fn add(self, rhs: Self) -> Self {
        CentralExponent { c: self.c + rhs.c, c_prime: self.c_prime + rhs.c_prime }
    }
}

impl Sub for CentralExponent {
    type Output = CentralExponent;
    fn sub(self, rhs: Self) -> Self {
        self + (-rhs)
    }
}

impl Neg for CentralExponent {
    type Output = CentralExponent;
    fn neg(self) -> Self {
        CentralExponent { c: -self.c, c_prime: -self.c_prime }
    }
}

impl fmt::Display for CentralExponent {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut parts = Vec::new();
        if self.c != 0 {
            parts.push(format!("K({})", self.c));
        }
        if self.c_prime != 0 {
            parts.push(format!("Kp({})", self.c_prime));
        }
        write!(f, "{}", parts.join(" "))
    }
}
