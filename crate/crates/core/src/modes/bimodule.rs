//! The Hopf bimodule `M = V ⊗ H` over the positive Cartan algebra `H`, with `V`
//! spanned by the `x^+_{j,p}`. Elements of `M` are stored as mode words made of one
//! x letter followed by Cartan letters.

use super::element::{ModeElement, Tensor};
use super::generator::{GenKind, Generator};
use super::hopf::{cartan_runs_normal_form, coproduct_word, TruncationPolicy};
use super::word::ModeWord;
use crate::cartan::CartanData;
use crate::error::{Error, Result};
use crate::report::VerificationReport;
use crate::scalar::CentralExponent;

/// The basis vector `x^+_{j,p} ⊗ h`.
pub fn m_vector(x: Generator, h: &ModeWord) -> ModeWord {
    let mut letters = vec![x];
    letters.extend_from_slice(&h.letters);
    ModeWord::new(letters, h.central)
}

fn split_m(w: &ModeWord) -> Result<(Generator, ModeWord)> {
    match w.letters.split_first() {
        Some((&x, rest)) if x.kind == GenKind::XPlus && rest.iter().all(|g| g.is_cartan()) => {
            Ok((x, ModeWord::new(rest.to_vec(), w.central)))
        }
        _ => Err(Error::InvalidGenerator(format!("{w} is not of the form x^+ ⊗ h"))),
    }
}

fn check_h_letter(g: Generator) -> Result<()> {
    match g.kind {
        GenKind::Phi | GenKind::PhiZeroInv => Ok(()),
        _ => Err(Error::InvalidGenerator(format!("{g} does not lie in the positive Cartan algebra"))),
    }
}

/// Left action of a single Cartan letter on a basis vector of `M`.
fn act_letter(cartan: &CartanData, g: Generator, m: &ModeWord) -> Result<ModeElement> {
    check_h_letter(g)?;
    let (x, h) = split_m(m)?;
    let (i, j) = (g.node, x.node);
    let mut out = ModeElement::zero();
    match g.kind {
        GenKind::Phi => {
            for k in 0..=-g.mode {
                let mut hl = vec![Generator::phi(i, g.mode + k)];
                hl.extend_from_slice(&h.letters);
                let hw = ModeWord::new(hl, h.central + CentralExponent::new(-k, 0));
                out.add_term(cartan.g(i, j, k as usize), m_vector(Generator::xp(j, x.mode - k), &hw));
            }
        }
        _ => {
            let mut hl = vec![g];
            hl.extend_from_slice(&h.letters);
            out.add_term(cartan.g_inv(i, j, 0), m_vector(x, &ModeWord::new(hl, h.central)));
        }
    }
    Ok(out)
}

/// Left action `h · m`, letters applied right to left.
pub fn bimodule_action(cartan: &CartanData, h: &ModeElement, m: &ModeElement) -> Result<ModeElement> {
    let mut out = ModeElement::zero();
    for (hw, c) in h.terms() {
        let mut acc = m.map_words(|w| ModeElement::from_word(w.clone().with_central(hw.central)));
        for &g in hw.letters.iter().rev() {
            acc = acc.try_map_words(|w| act_letter(cartan, g, w))?;
        }
        out.add_scaled(c, &acc);
    }
    Ok(cartan_runs_normal_form(&out))
}

/// Trivial right action `(x ⊗ h) · h' = x ⊗ h h'`.
pub fn right_action(m: &ModeElement, h: &ModeElement) -> Result<ModeElement> {
    for (w, _) in h.terms() {
        w.letters.iter().try_for_each(|&g| check_h_letter(g))?;
    }
    Ok(cartan_runs_normal_form(&(m * h)))
}

fn exact_coproduct(h: &ModeWord) -> Tensor {
    coproduct_word(h, h.completion_degree())
}

/// Left coaction `δ_L(x ⊗ h) = x_{(-1)} h_{(1)} ⊗ x_{(0)} ⊗ h_{(2)}`, tail of `δ_L(x)` cut at `n_tail`.
pub fn delta_left(m: &ModeElement, n_tail: u64) -> Result<Tensor> {
    let mut out = Tensor::zero();
    for (w, c) in m.terms() {
        let (x, h) = split_m(w)?;
        let dh = exact_coproduct(&h);
        for k in (-(n_tail as i64))..=0 {
            let left = ModeWord::new(vec![Generator::phi(x.node, k)], CentralExponent::new(k - 2 * x.mode, 0));
            let xr = Generator::xp(x.node, x.mode - k);
            for (f, d) in dh.terms() {
                out.add_term(c * d, vec![left.concat(&f[0]), m_vector(xr, &f[1])]);
            }
        }
    }
    Ok(out)
}

/// Right coaction `δ_R(x ⊗ h) = (x ⊗ h_{(1)}) ⊗ h_{(2)}`.
pub fn delta_right(m: &ModeElement) -> Result<Tensor> {
    let mut out = Tensor::zero();
    for (w, c) in m.terms() {
        let (x, h) = split_m(w)?;
        for (f, d) in exact_coproduct(&h).terms() {
            out.add_term(c * d, vec![m_vector(x, &f[0]), f[1].clone()]);
        }
    }
    Ok(out)
}

fn normalize(t: &Tensor) -> Tensor {
    t.map_factorwise(|_, w| cartan_runs_normal_form(&ModeElement::from_word(w.clone())))
}

fn single(w: ModeWord) -> ModeElement {
    ModeElement::from_word(w)
}

/// Diagonal action of `Δ(g)` on a tensor whose factor `m_pos` lies in `M` and the other in `H`.
fn diagonal_action(cartan: &CartanData, g: Generator, t: &Tensor, m_pos: usize) -> Result<Tensor> {
    let dg = exact_coproduct(&ModeWord::letter(g));
    let mut out = Tensor::zero();
    for (f, c) in t.terms() {
        for (d, e) in dg.terms() {
            let mut images = Vec::with_capacity(2);
            for k in 0..2 {
                if k == m_pos {
                    images.push(bimodule_action(cartan, &single(d[k].clone()), &single(f[k].clone()))?);
                } else {
                    images.push(single(d[k].concat(&f[k])));
                }
            }
            let expanded = Tensor::pure(f.clone()).map_factorwise(|k, _| images[k].clone());
            out.add_scaled(&(c * e), &expanded);
        }
    }
    Ok(normalize(&out))
}

/// Basis vectors `x^+_{j,p} ⊗ h` for the bimodule checks.
pub fn m_window(cartan: &CartanData, w_mode: i64) -> Vec<ModeWord> {
    let mut out = Vec::new();
    for j in cartan.nodes() {
        for p in -w_mode..=w_mode {
            out.push(m_vector(Generator::xp(j, p), &ModeWord::one()));
            out.push(m_vector(Generator::xp(j, p), &ModeWord::letter(Generator::phi(j, -1))));
        }
    }
    out
}

/// Positive Cartan letters with modes in `[-w_mode, 0]` plus the zero-mode inverses.
pub fn h_window(cartan: &CartanData, w_mode: i64) -> Vec<Generator> {
    let mut out = Vec::new();
    for i in cartan.nodes() {
        for k in 0..=w_mode {
            out.push(Generator::phi(i, -k));
        }
        out.push(Generator::phi0inv(i));
    }
    out
}

/// The left action respects the commutativity of `H` and the inverse relation.
pub fn check_action(cartan: &CartanData, policy: &TruncationPolicy) -> Result<VerificationReport> {
    let mut r = VerificationReport::new("bimodule-left-action").param("window", policy.w_mode);
    let hs = h_window(cartan, policy.w_mode);
    for m in m_window(cartan, policy.w_mode) {
        let me = single(m.clone());
        if bimodule_action(cartan, &ModeElement::one(), &me)? != me {
            r.fail(format!("unit acts nontrivially on {m}"));
        }
        for i in cartan.nodes() {
            let inv = single(ModeWord::letter(Generator::phi0inv(i)));
            let zero = single(ModeWord::letter(Generator::phi(i, 0)));
            let back = bimodule_action(cartan, &zero, &bimodule_action(cartan, &inv, &me)?)?;
            if back != me {
                r.fail(format!("φ_{{{i},0}} φ_{{{i},0}}^-1 acts nontrivially on {m}"));
            }
        }
        for &a in &hs {
            for &b in &hs {
                let ea = single(ModeWord::letter(a));
                let eb = single(ModeWord::letter(b));
                let ab = bimodule_action(cartan, &ea, &bimodule_action(cartan, &eb, &me)?)?;
                let ba = bimodule_action(cartan, &eb, &bimodule_action(cartan, &ea, &me)?)?;
                if ab != ba {
                    r.fail(format!("{a} and {b} do not commute on {m}: {}", &ab - &ba));
                }
                let prod = bimodule_action(cartan, &(&ea * &eb), &me)?;
                if prod != ab {
                    r.fail(format!("({a} {b})·m ≠ {a}·({b}·m) on {m}"));
                }
                let h = single(ModeWord::letter(b));
                let left = right_action(&bimodule_action(cartan, &ea, &me)?, &h)?;
                let right = bimodule_action(cartan, &ea, &right_action(&me, &h)?)?;
                if left != right {
                    r.fail(format!("left and right actions of {a}, {b} do not commute on {m}"));
                }
            }
        }
    }
    Ok(r)
}

/// `(δ_L ⊗ id)δ_R = (id ⊗ δ_R)δ_L` on the window.
pub fn check_coactions_commute(cartan: &CartanData, policy: &TruncationPolicy) -> Result<VerificationReport> {
    let mut r = VerificationReport::new("bimodule-coactions-commute")
        .param("window", policy.w_mode)
        .param("n_tail", policy.n_tail);
    for m in m_window(cartan, policy.w_mode) {
        let me = single(m.clone());
        let dr = delta_right(&me)?;
        let mut lhs = Tensor::zero();
        for (f, c) in dr.terms() {
            let dl = delta_left(&single(f[0].clone()), policy.n_tail)?;
            for (g, d) in dl.terms() {
                lhs.add_term(c * d, vec![g[0].clone(), g[1].clone(), f[1].clone()]);
            }
        }
        let dl = delta_left(&me, policy.n_tail)?;
        let mut rhs = Tensor::zero();
        for (f, c) in dl.terms() {
            let dr = delta_right(&single(f[1].clone()))?;
            for (g, d) in dr.terms() {
                rhs.add_term(c * d, vec![f[0].clone(), g[0].clone(), g[1].clone()]);
            }
        }
        let diff = normalize(&lhs).sub(&normalize(&rhs));
        if !diff.is_zero() {
            r.fail(format!("on {m}: {diff}"));
        }
    }
    Ok(r)
}

/// `δ_L(h·m) = Δ(h)·δ_L(m)` and `δ_R(h·m) = Δ(h)·δ_R(m)` on the window.
pub fn check_coaction_morphisms(cartan: &CartanData, policy: &TruncationPolicy) -> Result<VerificationReport> {
    let mut r = VerificationReport::new("bimodule-coaction-morphisms")
        .param("window", policy.w_mode)
        .param("n_tail", policy.n_tail);
    for m in m_window(cartan, policy.w_mode) {
        let me = single(m.clone());
        for g in h_window(cartan, policy.w_mode) {
            let hm = bimodule_action(cartan, &single(ModeWord::letter(g)), &me)?;
            let lhs = normalize(&delta_left(&hm, policy.n_tail)?);
            let rhs = diagonal_action(cartan, g, &delta_left(&me, policy.n_tail)?, 1)?;
            let diff = lhs.sub(&rhs);
            if !diff.is_zero() {
                r.fail(format!("δ_L({g}·{m}): {diff}"));
            }
            let lhs = normalize(&delta_right(&hm)?);
            let rhs = diagonal_action(cartan, g, &delta_right(&me)?, 0)?;
            let diff = lhs.sub(&rhs);
            if !diff.is_zero() {
                r.fail(format!("δ_R({g}·{m}): {diff}"));
            }
        }
    }
    Ok(r)
}

pub fn bimodule_axiom_suite(cartan: &CartanData, policy: &TruncationPolicy) -> Result<Vec<VerificationReport>> {
    Ok(vec![
        check_action(cartan, policy)?,
        check_coactions_commute(cartan, policy)?,
        check_coaction_morphisms(cartan, policy)?,
    ])
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn phi_zero_acts_by_g0() {
        let c = CartanData::preset("A2").unwrap();
        let m = single(m_vector(Generator::xp(2, 3), &ModeWord::one()));
        let out = bimodule_action(&c, &single(ModeWord::letter(Generator::phi(1, 0))), &m).unwrap();
        let expected =
            ModeElement::term(c.g(1, 2, 0), m_vector(Generator::xp(2, 3), &ModeWord::letter(Generator::phi(1, 0))));
        assert_eq!(out, expected);
    }

    #[test]
    fn non_cartan_is_rejected() {
        let c = CartanData::preset("A2").unwrap();
        let m = single(m_vector(Generator::xp(2, 3), &ModeWord::one()));
        assert!(bimodule_action(&c, &single(ModeWord::letter(Generator::xp(1, 0))), &m).is_err());
    }

    #[test]
    fn axioms_small_window() {
        let c = CartanData::preset("A2").unwrap();
        for r in bimodule_axiom_suite(&c, &TruncationPolicy::new(3, 1)).unwrap() {
            assert!(r.passed(), "{r}");
        }
    }
}
