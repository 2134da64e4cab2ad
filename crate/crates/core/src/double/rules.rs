use super::element::DoubleElement;
use crate::cartan::{CartanData, Node};
use crate::modes::{GenKind, Generator, ModeWord};
use crate::pairing::PairingConvention;
use crate::scalar::{CentralExponent, Scalar};

/// One summand of an exchange rule: `c · pos ⊗ neg · K^a Kp^b`.
type Exchange = (Scalar, Option<Generator>, Option<Generator>, CentralExponent);

/// Coefficients of `h_{ij}(t) = g_{ij}(t K Kp) g_{ij}(t (K Kp)^{-1})^{-1}` up to `t^n`.
/// Each coefficient is a combination of central monomials.
pub fn h_coeffs(cartan: &CartanData, i: Node, j: Node, n: usize) -> Vec<Vec<(CentralExponent, Scalar)>> {
    (0..=n)
        .map(|k| {
            let mut out: Vec<(CentralExponent, Scalar)> = Vec::new();
            for u in 0..=k {
                let w = k - u;
                let e = w as i64 - u as i64;
                let c = &cartan.g_inv(i, j, u) * &cartan.g(i, j, w);
                let e = CentralExponent::new(e, e);
                match out.iter_mut().find(|(f, _)| *f == e) {
                    Some((_, d)) => *d += &c,
                    None => out.push((e, c)),
                }
            }
            out.retain(|(_, c)| !c.is_zero());
            out
        })
        .collect()
}

/// Moves the positive letter `a` to the left of the negative letter `b`:
/// `(1 ⊗ b)(a ⊗ 1) = Σ c · a' ⊗ b'`.
fn exchange(cartan: &CartanData, conv: PairingConvention, b: Generator, a: Generator) -> Vec<Exchange> {
    let (i, j) = (a.node, b.node);
    let z = CentralExponent::ZERO;
    let swap = |c: Scalar| vec![(c, Some(a), Some(b), z)];
    use GenKind::*;
    match (b.kind, a.kind) {
        (Psi, Phi) => {
            let mut out = Vec::new();
            for k in 0..=(-a.mode).min(b.mode) {
                for (e, c) in &h_coeffs(cartan, i, j, k as usize)[k as usize] {
                    out.push((c.clone(), Some(Generator::phi(i, a.mode + k)), Some(Generator::psi(j, b.mode - k)), *e));
                }
            }
            out
        }
        (PsiZeroInv, Phi) | (Psi, PhiZeroInv) | (PsiZeroInv, PhiZeroInv) => swap(Scalar::one()),
        (XMinus, Phi) => (0..=-a.mode)
            .map(|k| {
                let c = cartan.g(i, j, k as usize);
                (c, Some(Generator::phi(i, a.mode + k)), Some(Generator::xm(j, b.mode - k)), CentralExponent::new(k, 0))
            })
            .collect(),
        (XMinus, PhiZeroInv) => swap(cartan.g_inv(i, j, 0)),
        (Psi, XPlus) => (0..=b.mode)
            .map(|u| {
                let c = cartan.g_inv(i, j, u as usize);
                (
                    c,
                    Some(Generator::xp(i, a.mode + u)),
                    Some(Generator::psi(j, b.mode - u)),
                    CentralExponent::new(0, -u),
                )
            })
            .collect(),
        (PsiZeroInv, XPlus) => swap(cartan.g(i, j, 0)),
        (XMinus, XPlus) => {
            let mut out = swap(Scalar::one());
            if i == j {
                let (n, m) = (a.mode, b.mode);
                let c = conv.x_constant();
                if n + m >= 0 {
                    out.push((-c.clone(), None, Some(Generator::psi(j, n + m)), CentralExponent::new(0, n - m)));
                }
                if n + m <= 0 {
                    out.push((c, Some(Generator::phi(i, n + m)), None, CentralExponent::new(m - n, 0)));
                }
            }
            out
        }
        _ => unreachable!("exchange needs a negative and a positive letter"),
    }
}

/// Computes `(1 ⊗ b)(a ⊗ 1)` for words by repeated exchange.
pub fn cross_product_rules(cartan: &CartanData, conv: PairingConvention, b: &ModeWord, a: &ModeWord) -> DoubleElement {
    let mut out = DoubleElement::zero();
    for ((p, n, e), c) in cross(cartan, conv, &b.letters, &a.letters).terms() {
        out.add_term(c.clone(), p.clone(), n.clone(), *e + a.central + b.central);
    }
    out
}

pub(crate) fn cross(cartan: &CartanData, conv: PairingConvention, b: &[Generator], a: &[Generator]) -> DoubleElement {
    if a.is_empty() || b.is_empty() {
        return DoubleElement::term(Scalar::one(), a.to_vec(), b.to_vec(), CentralExponent::ZERO);
    }
    let mut out = DoubleElement::zero();
    for ((p, n, e), c) in pass_letter(cartan, conv, b, a[0]).terms() {
        for ((p2, n2, e2), c2) in cross(cartan, conv, n, &a[1..]).terms() {
            let pos = p.iter().chain(p2).copied().collect();
            out.add_term(c * c2, pos, n2.clone(), *e + *e2);
        }
    }
    out
}

/// `(1 ⊗ b)(x ⊗ 1)` for a single positive letter `x`.
fn pass_letter(cartan: &CartanData, conv: PairingConvention, b: &[Generator], x: Generator) -> DoubleElement {
    let Some((&last, rest)) = b.split_last() else {
        return DoubleElement::term(Scalar::one(), vec![x], Vec::new(), CentralExponent::ZERO);
    };
    let mut out = DoubleElement::zero();
    for (c, pos, neg, e) in exchange(cartan, conv, last, x) {
        let inner = match pos {
            Some(p) => pass_letter(cartan, conv, rest, p),
            None => DoubleElement::term(Scalar::one(), Vec::new(), rest.to_vec(), CentralExponent::ZERO),
        };
        for ((p2, n2, e2), c2) in inner.terms() {
            let mut neg_word = n2.clone();
            neg_word.extend(neg);
            out.add_term(&c * c2, p2.clone(), neg_word, e + *e2);
        }
    }
    out
}

impl DoubleElement {
    /// Product in the double, `(a ⊗ b)(a' ⊗ b') = a (1 ⊗ b)(a' ⊗ 1) b'`.
    pub fn mul(&self, other: &DoubleElement, cartan: &CartanData, conv: PairingConvention) -> DoubleElement {
        let mut out = DoubleElement::zero();
        for ((p1, n1, e1), c1) in self.terms() {
            for ((p2, n2, e2), c2) in other.terms() {
                let c12 = c1 * c2;
                for ((p, n, e), c) in cross(cartan, conv, n1, p2).terms() {
                    let pos = p1.iter().chain(p).copied().collect();
                    let neg = n.iter().chain(n2).copied().collect();
                    out.add_term(&c12 * c, pos, neg, *e1 + *e2 + *e);
                }
            }
        }
        out
    }
}
