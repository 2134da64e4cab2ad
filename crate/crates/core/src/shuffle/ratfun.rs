use std::collections::BTreeMap;
use std::fmt;

use crate::scalar::Scalar;

/// The linear form `z_u − q^k z_v` with `u < v` (variables are 1-based).
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Factor {
    pub u: usize,
    pub v: usize,
    pub k: i64,
}

/// Factors with their exponents.
pub type FactorPowers = Vec<(Factor, i32)>;

/// Rational function `c(q) · Π z_a^{m_a} · Π Factor^{e}` kept in factored form.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct FactoredRational {
    pub coeff: Scalar,
    /// Exponents of the variables `z_1, z_2, …` (index 0 is `z_1`).
    pub zpow: Vec<i32>,
    pub factors: BTreeMap<Factor, i32>,
}

impl FactoredRational {
    pub fn constant(c: Scalar) -> Self {
        FactoredRational { coeff: c, zpow: Vec::new(), factors: BTreeMap::new() }
    }

    pub fn one() -> Self {
        FactoredRational::constant(Scalar::one())
    }

    pub fn is_zero(&self) -> bool {
        self.coeff.is_zero()
    }

    /// `q^a z_u − q^b z_v`.
    pub fn linear(a: i64, u: usize, b: i64, v: usize) -> Self {
        assert!(u != v && u > 0 && v > 0, "linear form needs two distinct variables");
        let mut f = FactoredRational::one();
        f.mul_linear(a, u, b, v, 1);
        f
    }

    /// `z_u^m`.
    pub fn z_power(u: usize, m: i32) -> Self {
        let mut f = FactoredRational::one();
        f.mul_z(u, m);
        f
    }

    /// Kernel of the braiding, `(q^e z_u − z_v)/(z_u − q^e z_v)`.
    pub fn kernel(e: i64, u: usize, v: usize) -> Self {
        let mut f = FactoredRational::linear(e, u, 0, v);
        f.mul_linear(0, u, e, v, -1);
        f
    }

    pub fn mul_z(&mut self, u: usize, m: i32) {
        if self.zpow.len() < u {
            self.zpow.resize(u, 0);
        }
        self.zpow[u - 1] += m;
        while self.zpow.last() == Some(&0) {
            self.zpow.pop();
        }
    }

    /// Multiplies by `(q^a z_u − q^b z_v)^e`.
    pub fn mul_linear(&mut self, a: i64, u: usize, b: i64, v: usize, e: i32) {
        // q^a z_u − q^b z_v = q^a (z_u − q^{b−a} z_v) = −q^b (z_v − q^{a−b} z_u)
        let (factor, unit) = if u < v {
            (Factor { u, v, k: b - a }, Scalar::q_pow(a))
        } else {
            (Factor { u: v, v: u, k: a - b }, -Scalar::q_pow(b))
        };
        self.coeff *= &unit.pow(e as i64).expect("unit is invertible");
        self.bump(factor, e);
    }

    fn bump(&mut self, f: Factor, e: i32) {
        let slot = self.factors.entry(f).or_insert(0);
        *slot += e;
        if *slot == 0 {
            self.factors.remove(&f);
        }
    }

    pub fn scale(&mut self, c: &Scalar) {
        self.coeff *= c;
    }

    pub fn mul(&self, other: &FactoredRational) -> FactoredRational {
        let mut out = self.clone();
        out.coeff *= &other.coeff;
        for (u, &m) in other.zpow.iter().enumerate() {
            out.mul_z(u + 1, m);
        }
        for (&f, &e) in &other.factors {
            out.bump(f, e);
        }
        out
    }

    /// Substitutes `z_a → z_{perm(a)}`, where `perm` maps old 1-based variables to new ones.
    pub fn rename(&self, perm: impl Fn(usize) -> usize) -> FactoredRational {
        let mut out = FactoredRational::constant(self.coeff.clone());
        for (u, &m) in self.zpow.iter().enumerate() {
            out.mul_z(perm(u + 1), m);
        }
        for (&f, &e) in &self.factors {
            out.mul_linear(0, perm(f.u), f.k, perm(f.v), e);
        }
        out
    }

    /// Factored form of the reduction to a common denominator: splits into
    /// numerator factors and denominator factors.
    pub fn numerator_denominator(&self) -> (FactorPowers, FactorPowers) {
        let num = self.factors.iter().filter(|(_, &e)| e > 0).map(|(&f, &e)| (f, e)).collect();
        let den = self.factors.iter().filter(|(_, &e)| e < 0).map(|(&f, &e)| (f, -e)).collect();
        (num, den)
    }

    /// Largest variable index occurring.
    pub fn max_var(&self) -> usize {
        let z = self.zpow.len();
        self.factors.keys().map(|f| f.v).max().unwrap_or(0).max(z)
    }
}

impl fmt::Display for Factor {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self.k {
            0 => write!(f, "(z{} - z{})", self.u, self.v),
            1 => write!(f, "(z{} - q*z{})", self.u, self.v),
            k => write!(f, "(z{} - q^{}*z{})", self.u, k, self.v),
        }
    }
}

impl fmt::Display for FactoredRational {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut num = Vec::new();
        let mut den = Vec::new();
        for (u, &m) in self.zpow.iter().enumerate() {
            let s = if m.abs() == 1 { format!("z{}", u + 1) } else { format!("z{}^{}", u + 1, m.abs()) };
            if m > 0 {
                num.push(s);
            } else if m < 0 {
                den.push(s);
            }
        }
        for (fac, &e) in &self.factors {
            let s = if e.abs() == 1 { fac.to_string() } else { format!("{fac}^{}", e.abs()) };
            if e > 0 {
                num.push(s);
            } else {
                den.push(s);
            }
        }
        let c = self.coeff.to_string();
        let c = if c.contains(['+', '/']) || (c.contains('-') && !c.starts_with('-')) { format!("({c})") } else { c };
        let head = if num.is_empty() {
            c
        } else if c == "1" {
            num.join("*")
        } else if c == "-1" {
            format!("-{}", num.join("*"))
        } else {
            format!("{c}*{}", num.join("*"))
        };
        if den.is_empty() {
            write!(f, "{head}")
        } else {
            if den.len() == 1 {
                write!(f, "{head}/{}", den[0])
            } else {
                write!(f, "{head}/({})", den.join("*"))
            }
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn linear_forms_are_canonical() {
        let a = FactoredRational::linear(1, 2, 0, 1);
        // q z_2 − z_1 = −(z_1 − q z_2)
        assert_eq!(a.coeff, -Scalar::one());
        assert_eq!(a.factors.keys().next(), Some(&Factor { u: 1, v: 2, k: 1 }));
    }

    #[test]
    fn kernel_display() {
        let g = FactoredRational::kernel(2, 1, 2);
        assert_eq!(g.to_string(), "q^2*(z1 - q^-2*z2)/(z1 - q^2*z2)");
    }

    #[test]
    fn rename_swaps_orientation() {
        let g = FactoredRational::kernel(1, 1, 2);
        let back = g.rename(|a| 3 - a).rename(|a| 3 - a);
        assert_eq!(g, back);
    }
}
