use std::collections::{BTreeMap, HashMap};

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, ToPrimitive, Zero};

use super::ratfun::{Factor, FactoredRational};
use crate::scalar::Poly;

const Q_OFFSET: u128 = 1 << 31;
const Z_BITS: u32 = 8;
const MAX_VARS: usize = 12;

/// Exact test whether a sum of factored rational functions vanishes.
///
/// Terms with identical factor structure are merged, everything is brought over the
/// least common factored denominator and the numerator is expanded as a polynomial in
/// `q, z_1, …, z_n`. Coefficients are `i128` with a `BigInt` fallback on overflow.
pub fn sum_is_zero(terms: &[FactoredRational]) -> bool {
    let merged = merge(terms);
    if merged.is_empty() {
        return true;
    }
    let numerators = common_numerators(&merged);
    match expand::<i128>(&numerators) {
        Some(zero) => zero,
        None => expand::<BigInt>(&numerators).expect("big integers do not overflow"),
    }
}

fn merge(terms: &[FactoredRational]) -> Vec<FactoredRational> {
    let mut map: BTreeMap<(Vec<i32>, BTreeMap<Factor, i32>), crate::scalar::Scalar> = BTreeMap::new();
    for t in terms {
        if t.is_zero() {
            continue;
        }
        let slot = map.entry((t.zpow.clone(), t.factors.clone())).or_default();
        *slot += &t.coeff;
    }
    map.into_iter()
        .filter(|(_, c)| !c.is_zero())
        .map(|((zpow, factors), coeff)| FactoredRational { coeff, zpow, factors })
        .collect()
}

/// One numerator over the common denominator: integer `q`-coefficients (lowest power first),
/// a `q` shift, a `z` monomial and the linear factors to multiply out.
struct Numerator {
    qpoly: Vec<BigInt>,
    qshift: i64,
    zshift: Vec<u32>,
    factors: Vec<Factor>,
}

fn common_numerators(terms: &[FactoredRational]) -> Vec<Numerator> {
    let nvars = terms.iter().map(FactoredRational::max_var).max().unwrap_or(0);
    assert!(nvars <= MAX_VARS, "at most {MAX_VARS} variables are supported");
    let mut den: BTreeMap<Factor, i32> = BTreeMap::new();
    let mut zmin = vec![0i32; nvars];
    for t in terms {
        for (&f, &e) in &t.factors {
            if e < 0 {
                let slot = den.entry(f).or_insert(0);
                *slot = (*slot).max(-e);
            }
        }
        for (a, &m) in t.zpow.iter().enumerate() {
            zmin[a] = zmin[a].min(m);
        }
    }
    let lcm = terms.iter().fold(Poly::one(), |acc, t| {
        let d = t.coeff.denominator();
        let g = Poly::gcd(&acc, d);
        (&acc * d).div_rem(&g).0
    });
    let polys: Vec<Poly> = terms.iter().map(|t| t.coeff.numerator() * &lcm.div_rem(t.coeff.denominator()).0).collect();
    let scale = polys.iter().fold(BigInt::one(), |acc, p| acc.lcm(&p.denominator_lcm()));
    let scale = num_rational::BigRational::from_integer(scale);
    terms
        .iter()
        .zip(polys)
        .map(|(t, p)| {
            let qpoly = p.coeffs().iter().map(|c| (c * &scale).to_integer()).collect();
            let mut factors = Vec::new();
            for (&f, &d) in &den {
                let own = t.factors.get(&f).copied().unwrap_or(0);
                // numerator exponent after multiplying by the missing denominator part
                let e = own + d;
                factors.extend(std::iter::repeat_n(f, e as usize));
            }
            for (&f, &e) in &t.factors {
                if e > 0 && !den.contains_key(&f) {
                    factors.extend(std::iter::repeat_n(f, e as usize));
                }
            }
            let qshift = factors.iter().filter(|f| f.k < 0).map(|f| f.k).sum();
            let zshift = (0..nvars).map(|a| (t.zpow.get(a).copied().unwrap_or(0) - zmin[a]) as u32).collect();
            Numerator { qpoly, qshift, zshift, factors }
        })
        .collect()
}

trait Coef: Clone + Sized {
    fn from_big(c: &BigInt) -> Option<Self>;
    fn add_to(&mut self, c: &Self) -> bool;
    fn neg(&self) -> Option<Self>;
    fn is_zero(&self) -> bool;
}

impl Coef for i128 {
    fn from_big(c: &BigInt) -> Option<Self> {
        c.to_i128()
    }
    fn add_to(&mut self, c: &Self) -> bool {
        match self.checked_add(*c) {
            Some(s) => {
                *self = s;
                true
            }
            None => false,
        }
    }
    fn neg(&self) -> Option<Self> {
        self.checked_neg()
    }
    fn is_zero(&self) -> bool {
        *self == 0
    }
}

impl Coef for BigInt {
    fn from_big(c: &BigInt) -> Option<Self> {
        Some(c.clone())
    }
    fn add_to(&mut self, c: &Self) -> bool {
        *self += c;
        true
    }
    fn neg(&self) -> Option<Self> {
        Some(-self)
    }
    fn is_zero(&self) -> bool {
        Zero::is_zero(self)
    }
}

fn z_shift(a: usize, m: u32) -> u128 {
    (m as u128) << (32 + Z_BITS * (a as u32 - 1))
}

/// Returns `Some(is_zero)`, or `None` when a coefficient overflowed.
fn expand<C: Coef>(numerators: &[Numerator]) -> Option<bool> {
    let mut total: HashMap<u128, C> = HashMap::new();
    for n in numerators {
        let mut base: u128 = 0;
        for (a, &m) in n.zshift.iter().enumerate() {
            base += z_shift(a + 1, m);
        }
        let mut poly: HashMap<u128, C> = HashMap::new();
        for (e, c) in n.qpoly.iter().enumerate() {
            if !Zero::is_zero(c) {
                let q = (Q_OFFSET as i128 + e as i128 + n.qshift as i128) as u128;
                poly.insert(base + q, C::from_big(c)?);
            }
        }
        let mut degree = [0u32; MAX_VARS + 1];
        for (a, &m) in n.zshift.iter().enumerate() {
            degree[a + 1] = m;
        }
        for f in &n.factors {
            degree[f.u] += 1;
            degree[f.v] += 1;
            assert!(degree[f.u] < 255 && degree[f.v] < 255, "numerator degree too large for packing");
            // z_u − q^k z_v, or q^{-k} z_u − z_v when k < 0
            let (du, dv) = if f.k >= 0 {
                (z_shift(f.u, 1), z_shift(f.v, 1) + f.k as u128)
            } else {
                (z_shift(f.u, 1) + (-f.k) as u128, z_shift(f.v, 1))
            };
            let mut next: HashMap<u128, C> = HashMap::with_capacity(poly.len() * 2);
            for (k, c) in &poly {
                if !next.entry(k + du).or_insert_with(|| C::from_big(&BigInt::zero()).unwrap()).add_to(c) {
                    return None;
                }
                let neg = c.neg()?;
                if !next.entry(k + dv).or_insert_with(|| C::from_big(&BigInt::zero()).unwrap()).add_to(&neg) {
                    return None;
                }
            }
            next.retain(|_, c| !c.is_zero());
            poly = next;
        }
        for (k, c) in poly {
            if !total.entry(k).or_insert_with(|| C::from_big(&BigInt::zero()).unwrap()).add_to(&c) {
                return None;
            }
        }
    }
    Some(total.values().all(Coef::is_zero))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::scalar::Scalar;

    #[test]
    fn kernel_identity_vanishes() {
        // (z_1 − q z_2) g(z_1/z_2) − (q z_1 − z_2) = 0
        let mut lhs = FactoredRational::kernel(1, 1, 2);
        lhs.mul_linear(0, 1, 1, 2, 1);
        let mut rhs = FactoredRational::linear(1, 1, 0, 2);
        rhs.scale(&-Scalar::one());
        assert!(sum_is_zero(&[lhs.clone(), rhs]));
        assert!(!sum_is_zero(&[lhs]));
    }

    #[test]
    fn partial_fractions_vanish() {
        // 1/((z1−z2)(z1−q z2)) − [1/(z1−q z2) − 1/(z1−z2)] / ((q−1) z2) = 0
        let mut a = FactoredRational::one();
        a.mul_linear(0, 1, 0, 2, -1);
        a.mul_linear(0, 1, 1, 2, -1);
        let c = Scalar::laurent(&[(1, 1), (0, -1)]).inv().unwrap();
        let mut b = FactoredRational::z_power(2, -1);
        b.mul_linear(0, 1, 1, 2, -1);
        b.scale(&-c.clone());
        let mut d = FactoredRational::z_power(2, -1);
        d.mul_linear(0, 1, 0, 2, -1);
        d.scale(&c);
        assert!(sum_is_zero(&[a, b, d]));
    }
}
