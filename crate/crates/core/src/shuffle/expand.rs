use std::collections::BTreeMap;

use num_bigint::BigInt;
use num_rational::BigRational;

use super::ratfun::FactoredRational;
use super::tensor::{CurrentTensor, ShuffleElement};
use crate::error::{Error, Result};
use crate::modes::{Generator, ModeWord, Tensor};
use crate::scalar::Scalar;

/// Truncated Laurent series in `z_1, …, z_n`: exponent vector ↦ coefficient, each term
/// tagged with the series order it came from.
type Series = BTreeMap<Vec<i64>, Scalar>;

fn binomial(n: i64, k: i64) -> Scalar {
    let mut c = BigInt::from(1);
    for t in 0..k {
        c = c * BigInt::from(n - t) / BigInt::from(t + 1);
    }
    Scalar::from_rational(BigRational::from_integer(c))
}

/// Laurent expansion of a positional rational function in the region `|z_1| ≫ … ≫ |z_n|`,
/// keeping terms whose total shift towards later variables is at most `order`.
fn expand_rational(f: &FactoredRational, n: usize, order: usize) -> Result<BTreeMap<(Vec<i64>, usize), Scalar>> {
    if f.max_var() > n {
        return Err(Error::NotExpandable(format!("{f} involves more than {n} variables")));
    }
    let mut start = vec![0i64; n];
    for (a, &m) in f.zpow.iter().enumerate() {
        start[a] = m as i64;
    }
    let mut acc: BTreeMap<(Vec<i64>, usize), Scalar> = BTreeMap::new();
    acc.insert((start, 0), f.coeff.clone());
    for (fac, &e) in &f.factors {
        let (u, v) = (fac.u - 1, fac.v - 1);
        // (z_u − q^k z_v)^e = z_u^e Σ_s c_s (−q^k z_v / z_u)^s
        let terms: Vec<(usize, Scalar)> = if e > 0 {
            (0..=e as usize).map(|s| (s, binomial(e as i64, s as i64))).collect()
        } else {
            let m = -e as i64;
            (0..=order)
                .map(|s| (s, binomial(m + s as i64 - 1, s as i64) * Scalar::from_int(if s % 2 == 0 { 1 } else { -1 })))
                .collect()
        };
        let mut next: BTreeMap<(Vec<i64>, usize), Scalar> = BTreeMap::new();
        for ((exp, ord), c) in &acc {
            for (s, b) in &terms {
                let new_ord = ord + s;
                if new_ord > order {
                    continue;
                }
                let mut x = exp.clone();
                x[u] += e as i64 - *s as i64;
                x[v] += *s as i64;
                let sign = if s % 2 == 0 { Scalar::one() } else { -Scalar::one() };
                let coeff = &(&(c * b) * &Scalar::q_pow(fac.k * *s as i64)) * &sign;
                let slot = next.entry((x, new_ord)).or_default();
                *slot += &coeff;
            }
        }
        next.retain(|_, c| !c.is_zero());
        acc = next;
    }
    Ok(acc)
}

/// Coefficient of `z_1^{-M_1} ⋯ z_n^{-M_n}` in the positional form of `t`, as a tensor of
/// modes `x^+_{i_k, ·}`, keeping series orders up to `order`.
pub fn mode_expand(t: &CurrentTensor, modes: &[i64], order: usize) -> Result<Tensor> {
    if modes.len() != t.len() {
        return Err(Error::OutOfRange("one target mode per tensor slot is required".into()));
    }
    let (weight, f) = t.positional();
    let mut series: Series = BTreeMap::new();
    for ((exp, _), c) in expand_rational(&f, t.len(), order)? {
        let slot = series.entry(exp).or_default();
        *slot += &c;
    }
    let mut out = Tensor::zero();
    for (alpha, c) in series {
        // z^α x_i(z) contributes x_{i, M + α} to the coefficient of z^{-M}
        let words = weight
            .iter()
            .zip(modes)
            .zip(&alpha)
            .map(|((&i, &m), &a)| ModeWord::letter(Generator::xp(i, m + a)))
            .collect();
        out.add_term(c, words);
    }
    Ok(out)
}

/// [`mode_expand`] summed over the tensors of an element.
pub fn mode_expand_element(e: &ShuffleElement, modes: &[i64], order: usize) -> Result<Tensor> {
    let mut out = Tensor::zero();
    for t in e.tensors() {
        for (w, c) in mode_expand(&t, modes, order)?.terms() {
            out.add_term(c.clone(), w.clone());
        }
    }
    Ok(out)
}
