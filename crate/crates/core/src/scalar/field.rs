//! The ground field Q(q).

use std::cmp::Ordering;
use std::fmt;
use std::ops::{Add, AddAssign, Mul, MulAssign, Neg, Sub, SubAssign};

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};

use super::poly::Poly;
use crate::error::{Error, Result};

/// Exact rational function `num / den` in `q`.
///
/// Always stored in canonical form: `gcd(num, den) = 1`, `den` monic, and
/// zero is `0 / 1`. Structural equality is therefore field equality.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Scalar {
    num: Poly,
    den: Poly,
}

impl Scalar {
    pub fn zero() -> Self {
        Scalar { num: Poly::zero(), den: Poly::one() }
    }

    pub fn one() -> Self {
        Scalar::from_int(1)
    }

    pub fn from_int(n: i64) -> Self {
        Scalar::from_rational(BigRational::from_integer(BigInt::from(n)))
    }

    pub fn from_rational(c: BigRational) -> Self {
        Scalar { num: Poly::constant(c), den: Poly::one() }
    }

    /// `q^k` for any integer `k`.
    pub fn q_pow(k: i64) -> Self {
        Scalar::monomial(BigRational::one(), k)
    }

    /// `c q^k`.
    pub fn monomial(c: BigRational, k: i64) -> Self {
        if c.is_zero() {
            return Scalar::zero();
        }
        if k >= 0 {
            Scalar { num: Poly::monomial(c, k as usize), den: Poly::one() }
        } else {
            Scalar { num: Poly::constant(c), den: Poly::monomial(BigRational::one(), (-k) as usize) }
        }
    }

    /// Laurent polynomial from `(exponent, integer coefficient)` pairs.
    pub fn laurent(terms: &[(i64, i64)]) -> Self {
        terms.iter().fold(Scalar::zero(), |acc, &(e, c)| acc + Scalar::monomial(BigRational::from_integer(c.into()), e))
    }

    /// Build from arbitrary numerator and denominator, normalizing.
    pub fn from_parts(num: Poly, den: Poly) -> Result<Self> {
        if den.is_zero() {
            return Err(Error::DivisionByZero);
        }
        Ok(Scalar::normalize_parts(num, den))
    }

    fn normalize_parts(num: Poly, den: Poly) -> Self {
        if num.is_zero() {
            return Scalar::zero();
        }
        if den.is_monomial() {
            // gcd with q^k is the q-power dividing num
            let k = den.degree().unwrap();
            let v = num.valuation().unwrap().min(k);
            let lead = den.leading().unwrap().recip();
            return Scalar { num: num.unshift(v).scale(&lead), den: Poly::monomial(BigRational::one(), k - v) };
        }
        let g = Poly::gcd(&num, &den);
        let (n, _) = num.div_rem(&g);
        let (d, _) = den.div_rem(&g);
        let lead = d.leading().unwrap().recip();
        Scalar { num: n.scale(&lead), den: d.scale(&lead) }
    }

    pub fn numerator(&self) -> &Poly {
        &self.num
    }

    pub fn denominator(&self) -> &Poly {
        &self.den
    }

    pub fn is_zero(&self) -> bool {
        self.num.is_zero()
    }

    pub fn is_one(&self) -> bool {
        self.den == Poly::one() && self.num == Poly::one()
    }

    /// True when the value is a Laurent polynomial in `q`.
    pub fn is_laurent(&self) -> bool {
        self.den.is_monomial()
    }

    /// Laurent coefficients as `(exponent, coefficient)`, if this is a Laurent polynomial.
    pub fn laurent_terms(&self) -> Option<Vec<(i64, BigRational)>> {
        if !self.is_laurent() {
            return None;
        }
        let shift = self.den.degree().unwrap() as i64;
        Some(
            self.num
                .coeffs()
                .iter()
                .enumerate()
                .filter(|(_, c)| !c.is_zero())
                .map(|(k, c)| (k as i64 - shift, c.clone()))
                .collect(),
        )
    }

    pub fn inv(&self) -> Result<Scalar> {
        if self.is_zero() {
            return Err(Error::DivisionByZero);
        }
        Ok(Scalar::normalize_parts(self.den.clone(), self.num.clone()))
    }

    pub fn checked_div(&self, rhs: &Scalar) -> Result<Scalar> {
        Ok(self * &rhs.inv()?)
    }

    pub fn pow(&self, e: i64) -> Result<Scalar> {
        let base = if e < 0 { self.inv()? } else { self.clone() };
        let mut acc = Scalar::one();
        for _ in 0..e.unsigned_abs() {
            acc = &acc * &base;
        }
        Ok(acc)
    }

    /// Substitute `q -> q^{-1}`.
    pub fn bar(&self) -> Scalar {
        let flip = |p: &Poly| -> (Poly, usize) {
            let d = p.degree().unwrap_or(0);
            let mut c = p.coeffs().to_vec();
            c.reverse();
            (Poly::from_coeffs(c), d)
        };
        let (n, dn) = flip(&self.num);
        let (d, dd) = flip(&self.den);
        // num(1/q)/den(1/q) = q^{dd-dn} * n(q)/d(q)
        let (n, d) = if dd >= dn { (n.shift(dd - dn), d) } else { (n, d.shift(dn - dd)) };
        Scalar::normalize_parts(n, d)
    }

    /// Evaluate at a rational point (None on a pole).
    pub fn eval(&self, x: &BigRational) -> Option<BigRational> {
        let d = self.den.eval(x);
        if d.is_zero() {
            None
        } else {
            Some(self.num.eval(x) / d)
        }
    }
}

impl Default for Scalar {
    fn default() -> Self {
        Scalar::zero()
    }
}

impl PartialOrd for Scalar {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

/// Arbitrary but total order on canonical forms; used only for deterministic containers.
impl Ord for Scalar {
    fn cmp(&self, other: &Self) -> Ordering {
        let key = |s: &Scalar| (s.den.coeffs().len(), s.num.coeffs().len());
        key(self)
            .cmp(&key(other))
            .then_with(|| self.den.coeffs().cmp(other.den.coeffs()))
            .then_with(|| self.num.coeffs().cmp(other.num.coeffs()))
    }
}

impl fmt::Display for Scalar {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_laurent() {
            let shift = self.den.degree().unwrap() as i64;
            return self.num.fmt_with_offset(f, -shift);
        }
        let simple = |p: &Poly| p.coeffs().iter().filter(|c| !c.is_zero()).count() == 1;
        if simple(&self.num) {
            write!(f, "{}", self.num)?;
        } else {
            write!(f, "({})", self.num)?;
        }
        write!(f, "/({})", self.den)
    }
}

impl fmt::Debug for Scalar {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Scalar({})", self)
    }
}

impl Add for &Scalar {
    type Output = Scalar;
    fn add(self, rhs: &Scalar) -> Scalar {
        if self.is_zero() {
            return rhs.clone();
        }
        if rhs.is_zero() {
            return self.clone();
        }
        if self.den == rhs.den {
            return Scalar::normalize_parts(&self.num + &rhs.num, self.den.clone());
        }
        if self.is_laurent() && rhs.is_laurent() {
            let (a, b) = (self.den.degree().unwrap(), rhs.den.degree().unwrap());
            let m = a.max(b);
            let num = &self.num.shift(m - a) + &rhs.num.shift(m - b);
            return Scalar::normalize_parts(num, Poly::monomial(BigRational::one(), m));
        }
        let num = &(&self.num * &rhs.den) + &(&rhs.num * &self.den);
        Scalar::normalize_parts(num, &self.den * &rhs.den)
    }
}

impl Sub for &Scalar {
    type Output = Scalar;
    fn sub(self, rhs: &Scalar) -> Scalar {
        self + &(-rhs)
    }
}

impl Neg for &Scalar {
    type Output = Scalar;
    fn neg(self) -> Scalar {
        Scalar { num: -&self.num, den: self.den.clone() }
    }
}

impl Mul for &Scalar {
    type Output = Scalar;
    fn mul(self, rhs: &Scalar) -> Scalar {
        if self.is_zero() || rhs.is_zero() {
            return Scalar::zero();
        }
        if self.is_laurent() && rhs.is_laurent() {
            let d = self.den.degree().unwrap() + rhs.den.degree().unwrap();
            return Scalar::normalize_parts(&self.num * &rhs.num, Poly::monomial(BigRational::one(), d));
        }
        Scalar::normalize_parts(&self.num * &rhs.num, &self.den * &rhs.den)
    }
}

macro_rules! forward_owned {
    ($tr:ident, $m:ident) => {
        impl $tr for Scalar {
            type Output = Scalar;
            fn $m(self, rhs: Scalar) -> Scalar {
                (&self).$m(&rhs)
            }
        }
        impl $tr<&Scalar> for Scalar {
            type Output = Scalar;
            fn $m(self, rhs: &Scalar) -> Scalar {
                (&self).$m(rhs)
            }
        }
    };
}
forward_owned!(Add, add);
forward_owned!(Sub, sub);
forward_owned!(Mul, mul);

impl Neg for Scalar {
    type Output = Scalar;
    fn neg(self) -> Scalar {
        -&self
    }
}

impl AddAssign<&Scalar> for Scalar {
    fn add_assign(&mut self, rhs: &Scalar) {
        *self = &*self + rhs;
    }
}

impl SubAssign<&Scalar> for Scalar {
    fn sub_assign(&mut self, rhs: &Scalar) {
        *self = &*self - rhs;
    }
}

impl MulAssign<&Scalar> for Scalar {
    fn mul_assign(&mut self, rhs: &Scalar) {
        *self = &*self * rhs;
    }
}

impl Zero for Scalar {
    fn zero() -> Self {
        Scalar::zero()
    }
    fn is_zero(&self) -> bool {
        Scalar::is_zero(self)
    }
}

impl One for Scalar {
    fn one() -> Self {
        Scalar::one()
    }
}

impl std::iter::Sum for Scalar {
    fn sum<I: Iterator<Item = Scalar>>(iter: I) -> Scalar {
        iter.fold(Scalar::zero(), |a, b| a + b)
    }
}

impl std::iter::Product for Scalar {
    fn product<I: Iterator<Item = Scalar>>(iter: I) -> Scalar {
        iter.fold(Scalar::one(), |a, b| a * b)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn q() -> Scalar {
        Scalar::q_pow(1)
    }

    #[test]
    fn inverse_pair_multiplies_to_one() {
        assert!((q() * Scalar::q_pow(-1)).is_one());
    }

    #[test]
    fn self_division() {
        let x = q() - Scalar::q_pow(-1);
        assert!(x.checked_div(&x).unwrap().is_one());
    }

    #[test]
    fn division_by_zero_is_an_error() {
        assert!(matches!(q().checked_div(&Scalar::zero()), Err(Error::DivisionByZero)));
        assert!(Scalar::from_parts(Poly::one(), Poly::zero()).is_err());
    }

    #[test]
    fn normalize_cancels_common_factor() {
        // (q^2 - 1)/(q + 1) = q - 1, checked by cross multiplication
        let x = Scalar::from_parts(Poly::from_i64s(&[-1, 0, 1]), Poly::from_i64s(&[1, 1])).unwrap();
        let y = q() - Scalar::one();
        assert_eq!(x.numerator() * y.denominator(), y.numerator() * x.denominator());
        assert_eq!(x, y);
        let again = Scalar::from_parts(x.numerator().clone(), x.denominator().clone()).unwrap();
        assert_eq!(again, x);
    }

    #[test]
    fn display_forms() {
        assert_eq!((q() + Scalar::q_pow(-1)).to_string(), "q + q^-1");
        let c = Scalar::from_int(-1).checked_div(&(q() + Scalar::q_pow(-1))).unwrap();
        assert_eq!(c.to_string(), "-q/(q^2 + 1)");
        assert_eq!(Scalar::zero().to_string(), "0");
        assert_eq!(Scalar::laurent(&[(2, 3), (0, -1)]).to_string(), "3*q^2 - 1");
    }

    #[test]
    fn bar_inverts_q() {
        let x = Scalar::laurent(&[(2, 1), (-1, 3)]);
        assert_eq!(x.bar(), Scalar::laurent(&[(-2, 1), (1, 3)]));
        let y = Scalar::one().checked_div(&(q() + Scalar::one())).unwrap();
        assert_eq!(y.bar().bar(), y);
    }
}
