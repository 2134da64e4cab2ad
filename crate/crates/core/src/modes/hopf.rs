use serde::{Deserialize, Serialize};

use super::element::{ModeElement, Tensor};
use super::generator::{GenKind, Generator};
use super::word::ModeWord;
use crate::cartan::CartanData;
use crate::report::VerificationReport;
use crate::scalar::{CentralExponent, Scalar};

/// Cutoffs replacing the completions: `n_tail` bounds the completion degree kept in
/// infinite tails, `w_mode` is the half-width of the x-mode window used for enumeration.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct TruncationPolicy {
    pub n_tail: u64,
    pub w_mode: i64,
}

impl TruncationPolicy {
    pub fn new(n_tail: u64, w_mode: i64) -> Self {
        TruncationPolicy { n_tail, w_mode }
    }
}

impl Default for TruncationPolicy {
    fn default() -> Self {
        TruncationPolicy { n_tail: 6, w_mode: 1 }
    }
}

fn pair(a: ModeWord, b: ModeWord) -> Vec<ModeWord> {
    vec![a, b]
}

fn lw(g: Generator, c: i64, cp: i64) -> ModeWord {
    ModeWord::new(vec![g], CentralExponent::new(c, cp))
}

/// Coproduct of one generator, tails cut at total completion degree `n`.
pub fn coproduct_letter(g: Generator, n: u64) -> Tensor {
    let mut t = Tensor::zero();
    let one = Scalar::one;
    let i = g.node;
    let n = n as i64;
    match g.kind {
        GenKind::Phi => {
            for r in g.mode..=0 {
                let s = g.mode - r;
                t.add_term(one(), pair(lw(Generator::phi(i, r), -s, 0), lw(Generator::phi(i, s), r, 0)));
            }
        }
        GenKind::Psi => {
            for u in 0..=g.mode {
                let v = g.mode - u;
                t.add_term(one(), pair(lw(Generator::psi(i, u), 0, v), lw(Generator::psi(i, v), 0, -u)));
            }
        }
        GenKind::PhiZeroInv | GenKind::PsiZeroInv => {
            t.add_term(one(), pair(ModeWord::letter(g), ModeWord::letter(g)));
        }
        GenKind::XPlus => {
            t.add_term(one(), pair(ModeWord::letter(g), ModeWord::one()));
            for k in (-n..=0).rev() {
                t.add_term(
                    one(),
                    pair(lw(Generator::phi(i, k), k - 2 * g.mode, 0), ModeWord::letter(Generator::xp(i, g.mode - k))),
                );
            }
        }
        GenKind::XMinus => {
            t.add_term(one(), pair(ModeWord::one(), ModeWord::letter(g)));
            for l in 0..=n {
                t.add_term(
                    one(),
                    pair(ModeWord::letter(Generator::xm(i, g.mode - l)), lw(Generator::psi(i, l), 0, l - 2 * g.mode)),
                );
            }
        }
    }
    t
}

/// Coproduct of a word: product of the letter coproducts with the central part group-like.
pub fn coproduct_word(w: &ModeWord, n: u64) -> Tensor {
    let central = ModeWord::central(w.central);
    let mut acc = Tensor::pure(vec![central.clone(), central]);
    for &g in &w.letters {
        acc = acc.mul_truncated(&coproduct_letter(g, n), n);
    }
    acc
}

/// Truncated coproduct, extended linearly.
pub fn coproduct(e: &ModeElement, policy: &TruncationPolicy) -> Tensor {
    let mut out = Tensor::zero();
    for (w, c) in e.terms() {
        out.add_scaled(c, &coproduct_word(w, policy.n_tail));
    }
    out
}

/// Applies the coproduct to factor `pos` of a tensor.
pub fn coproduct_at(t: &Tensor, pos: usize, n: u64) -> Tensor {
    t.map_factor(pos, |w| coproduct_word(w, n)).truncate(n)
}

/// Second iterated coproduct `(Δ ⊗ id)Δ`.
pub fn coproduct2(e: &ModeElement, policy: &TruncationPolicy) -> Tensor {
    coproduct_at(&coproduct(e, policy), 0, policy.n_tail)
}

pub fn counit_word(w: &ModeWord) -> Scalar {
    for g in &w.letters {
        match g.kind {
            GenKind::XPlus | GenKind::XMinus => return Scalar::zero(),
            GenKind::Phi | GenKind::Psi if g.mode != 0 => return Scalar::zero(),
            _ => {}
        }
    }
    Scalar::one()
}

pub fn counit(e: &ModeElement) -> Scalar {
    e.terms().map(|(w, c)| c * &counit_word(w)).sum()
}

/// `S(φ_{i,k})` or `S(ψ_{i,k})` from the series inversion recursion.
fn cartan_antipode(g: Generator) -> ModeElement {
    let inv = match g.kind {
        GenKind::Phi => Generator::phi0inv(g.node),
        GenKind::Psi => Generator::psi0inv(g.node),
        _ => unreachable!(),
    };
    let depth = g.mode.unsigned_abs() as i64;
    let sign = if g.kind == GenKind::Phi { -1 } else { 1 };
    let mut s: Vec<ModeElement> = vec![ModeElement::letter(inv)];
    for k in 1..=depth {
        let mut acc = ModeElement::zero();
        for r in 1..=k {
            let letter = Generator { kind: g.kind, node: g.node, mode: sign * r };
            acc = &acc + &(&ModeElement::letter(letter) * &s[(k - r) as usize]);
        }
        s.push(-&(&ModeElement::letter(inv) * &acc));
    }
    s.pop().unwrap()
}

fn central_elem(c: i64, cp: i64) -> ModeElement {
    ModeElement::central(CentralExponent::new(c, cp))
}

fn antipode_letter(g: Generator, n: u64, inverse: bool) -> ModeElement {
    let i = g.node;
    let n = n as i64;
    match g.kind {
        GenKind::Phi | GenKind::Psi if g.mode == 0 => ModeElement::letter(match g.kind {
            GenKind::Phi => Generator::phi0inv(i),
            _ => Generator::psi0inv(i),
        }),
        GenKind::Phi | GenKind::Psi => cartan_antipode(g),
        GenKind::PhiZeroInv => ModeElement::letter(Generator::phi(i, 0)),
        GenKind::PsiZeroInv => ModeElement::letter(Generator::psi(i, 0)),
        GenKind::XPlus => {
            let mut out = ModeElement::zero();
            for k in -n..=0 {
                let sphi = antipode_letter(Generator::phi(i, k), n as u64, inverse);
                let x = ModeElement::letter(Generator::xp(i, g.mode - k));
                let term = if inverse { &x * &sphi } else { &sphi * &x };
                out = &out - &(&term * &central_elem(2 * g.mode - k, 0));
            }
            out
        }
        GenKind::XMinus => {
            let mut out = ModeElement::zero();
            for l in 0..=n {
                let spsi = antipode_letter(Generator::psi(i, l), n as u64, inverse);
                let x = ModeElement::letter(Generator::xm(i, g.mode - l));
                let term = if inverse { &spsi * &x } else { &x * &spsi };
                out = &out - &(&term * &central_elem(0, 2 * g.mode - l));
            }
            out
        }
    }
}

fn antipode_word(w: &ModeWord, n: u64, inverse: bool) -> ModeElement {
    let mut acc = ModeElement::central(CentralExponent::ZERO - w.central);
    for &g in w.letters.iter().rev() {
        acc = (&acc * &antipode_letter(g, n, inverse)).truncate(n);
    }
    acc
}

/// Truncated antipode, an anti-homomorphism.
pub fn antipode(e: &ModeElement, policy: &TruncationPolicy) -> ModeElement {
    e.map_words(|w| antipode_word(w, policy.n_tail, false))
}

/// Truncated inverse antipode.
pub fn antipode_inverse(e: &ModeElement, policy: &TruncationPolicy) -> ModeElement {
    e.map_words(|w| antipode_word(w, policy.n_tail, true))
}

/// Sorts every maximal run of adjacent Cartan letters and cancels zero-mode inverse
/// pairs inside it. Only the commutativity of the Cartan part is used.
pub fn cartan_runs_normal_form(e: &ModeElement) -> ModeElement {
    e.map_words(|w| {
        let mut letters: Vec<Generator> = Vec::with_capacity(w.letters.len());
        let mut run: Vec<Generator> = Vec::new();
        let flush = |run: &mut Vec<Generator>, out: &mut Vec<Generator>| {
            run.sort_by_key(Generator::cartan_key);
            loop {
                let hit = run.iter().enumerate().find_map(|(a, g)| {
                    let partner = match g.kind {
                        GenKind::PhiZeroInv => Generator::phi(g.node, 0),
                        GenKind::PsiZeroInv => Generator::psi(g.node, 0),
                        _ => return None,
                    };
                    run.iter().position(|h| *h == partner).map(|b| (a.max(b), a.min(b)))
                });
                match hit {
                    Some((hi, lo)) => {
                        run.remove(hi);
                        run.remove(lo);
                    }
                    None => break,
                }
            }
            out.append(run);
        };
        for &g in &w.letters {
            if g.is_cartan() {
                run.push(g);
            } else {
                flush(&mut run, &mut letters);
                letters.push(g);
            }
        }
        flush(&mut run, &mut letters);
        ModeElement::from_word(ModeWord::new(letters, w.central))
    })
}

fn tensor_report(name: &str, g: Generator, n: u64, lhs: &Tensor, rhs: &Tensor) -> VerificationReport {
    let mut r = VerificationReport::new(name).param("generator", g).param("n_tail", n);
    let diff = lhs.truncate(n).sub(&rhs.truncate(n));
    if !diff.is_zero() {
        r.fail(format!("difference {diff}"));
    }
    r
}

fn element_report(name: &str, g: Generator, n: u64, lhs: &ModeElement, rhs: &ModeElement) -> VerificationReport {
    let mut r = VerificationReport::new(name).param("generator", g).param("n_tail", n);
    let diff = cartan_runs_normal_form(&(lhs - rhs)).truncate(n);
    if !diff.is_zero() {
        r.fail(format!("difference {diff}"));
    }
    r
}

/// `(Δ⊗id)Δ(g) = (id⊗Δ)Δ(g)` modulo completion degree above `n_tail`.
pub fn check_coassociativity(g: Generator, policy: &TruncationPolicy) -> VerificationReport {
    let n = policy.n_tail;
    let d = coproduct_word(&ModeWord::letter(g), n);
    tensor_report("coassociativity", g, n, &coproduct_at(&d, 0, n), &coproduct_at(&d, 1, n))
}

/// `(ε⊗id)Δ(g) = g = (id⊗ε)Δ(g)`, central units evaluated to 1 by the counit.
pub fn check_counit(g: Generator, policy: &TruncationPolicy) -> VerificationReport {
    let n = policy.n_tail;
    let d = coproduct_word(&ModeWord::letter(g), n);
    let mut left = ModeElement::zero();
    let mut right = ModeElement::zero();
    for (f, c) in d.terms() {
        left.add_term(c * &counit_word(&f[0]), f[1].clone().with_central(f[0].central));
        right.add_term(c * &counit_word(&f[1]), f[0].clone().with_central(f[1].central));
    }
    let strip = |e: &ModeElement| e.map_words(|w| ModeElement::from_word(ModeWord::from_letters(w.letters.clone())));
    let target = ModeElement::letter(g);
    let mut r = VerificationReport::new("counit").param("generator", g).param("n_tail", n);
    for (side, e) in [("left", strip(&left)), ("right", strip(&right))] {
        let diff = &e - &target;
        if !diff.is_zero() {
            r.fail(format!("{side} counit difference {diff}"));
        }
    }
    r
}

/// `m(S⊗id)Δ(g) = ε(g)1 = m(id⊗S)Δ(g)` modulo completion degree above `n_tail`.
pub fn check_antipode(g: Generator, policy: &TruncationPolicy) -> VerificationReport {
    let n = policy.n_tail;
    let d = coproduct_word(&ModeWord::letter(g), n);
    let apply = |left: bool| {
        d.map_factors_to_element(|k, w| {
            if (k == 0) == left {
                antipode_word(w, n, false)
            } else {
                ModeElement::from_word(w.clone())
            }
        })
    };
    let unit = ModeElement::scalar(counit_word(&ModeWord::letter(g)));
    let mut r = element_report("antipode", g, n, &apply(true), &unit);
    let other = element_report("antipode", g, n, &apply(false), &unit);
    if let Some(w) = other.witness {
        r.fail(w);
    }
    r
}

/// `S(S^{-1}(g)) = g` modulo the truncation.
pub fn check_antipode_inverse(g: Generator, policy: &TruncationPolicy) -> VerificationReport {
    let e = ModeElement::letter(g);
    let ss = antipode(&antipode_inverse(&e, policy), policy);
    element_report("antipode-inverse", g, policy.n_tail, &ss, &e)
}

/// Every generator of the configured Cartan data with x modes in `[-w_mode, w_mode]`
/// and Cartan modes down to `-w_mode` (or up to `w_mode`).
pub fn generator_window(cartan: &CartanData, w_mode: i64) -> Vec<Generator> {
    let mut out = Vec::new();
    for i in cartan.nodes() {
        for m in -w_mode..=w_mode {
            out.push(Generator::xp(i, m));
            out.push(Generator::xm(i, m));
        }
        for k in 0..=w_mode {
            out.push(Generator::phi(i, -k));
            out.push(Generator::psi(i, k));
        }
        out.push(Generator::phi0inv(i));
        out.push(Generator::psi0inv(i));
    }
    out
}

/// Coassociativity, counit and antipode axioms on every generator of the window.
pub fn coalgebra_axiom_suite(cartan: &CartanData, policy: &TruncationPolicy) -> Vec<VerificationReport> {
    let mut out = Vec::new();
    for g in generator_window(cartan, policy.w_mode) {
        out.push(check_coassociativity(g, policy));
        out.push(check_counit(g, policy));
        out.push(check_antipode(g, policy));
        out.push(check_antipode_inverse(g, policy));
    }
    out
}

/// Fails unless every word of the element has mode sum `m`.
pub fn preserves_mode_sum(t: &Tensor, m: i64) -> bool {
    t.terms().all(|(f, _)| f.iter().map(ModeWord::mode_sum).sum::<i64>() == m)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn pol(n: u64) -> TruncationPolicy {
        TruncationPolicy::new(n, 2)
    }

    #[test]
    fn phi_zero_is_grouplike() {
        let t = coproduct_letter(Generator::phi(1, 0), 4);
        assert_eq!(
            t,
            Tensor::pure(vec![ModeWord::letter(Generator::phi(1, 0)), ModeWord::letter(Generator::phi(1, 0))])
        );
    }

    #[test]
    fn xplus_at_zero_tail() {
        let t = coproduct_letter(Generator::xp(1, 2), 0);
        assert_eq!(t.len(), 2);
        assert_eq!(t.coeff(&[ModeWord::letter(Generator::xp(1, 2)), ModeWord::one()]), Scalar::one());
        assert_eq!(t.coeff(&[lw(Generator::phi(1, 0), -4, 0), ModeWord::letter(Generator::xp(1, 2))]), Scalar::one());
    }

    #[test]
    fn psi_one_coproduct() {
        let t = coproduct_letter(Generator::psi(1, 1), 3);
        let mut e = Tensor::zero();
        e.add_term(Scalar::one(), vec![ModeWord::letter(Generator::psi(1, 1)), lw(Generator::psi(1, 0), 0, -1)]);
        e.add_term(Scalar::one(), vec![lw(Generator::psi(1, 0), 0, 1), ModeWord::letter(Generator::psi(1, 1))]);
        assert_eq!(t, e);
    }

    #[test]
    fn antipode_phi_minus_one() {
        let s = antipode(&ModeElement::letter(Generator::phi(1, -1)), &pol(3));
        let expected = -&ModeElement::from_word(ModeWord::from_letters(vec![
            Generator::phi0inv(1),
            Generator::phi(1, -1),
            Generator::phi0inv(1),
        ]));
        assert_eq!(s, expected);
    }

    #[test]
    fn coproducts_preserve_mode_sum() {
        for g in [Generator::xp(1, 2), Generator::xm(2, -1), Generator::phi(1, -3), Generator::psi(2, 2)] {
            assert!(preserves_mode_sum(&coproduct_letter(g, 5), g.mode));
        }
    }

    #[test]
    fn axioms_on_a2_window() {
        let c = CartanData::preset("A2").unwrap();
        for r in coalgebra_axiom_suite(&c, &TruncationPolicy::new(4, 2)) {
            assert!(r.passed(), "{r}");
        }
    }
}
