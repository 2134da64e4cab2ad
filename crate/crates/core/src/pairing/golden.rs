//! Base values of the pairing against closed forms of the structure series.

use super::base::pair_letters;
use super::convention::PairingConvention;
use super::fast::pair;
use crate::cartan::{CartanData, Node};
use crate::error::Result;
use crate::modes::{GenKind, Generator, ModeElement};
use crate::report::VerificationReport;
use crate::scalar::{CentralExponent, Scalar};

/// `g^{(ij)}_k` in closed form: `q_ij^{-1}` at `k = 0`, else `(q_ij^{-1} - q_ij) q_ij^{-k}`.
pub fn g_closed(cartan: &CartanData, i: Node, j: Node, k: usize) -> Scalar {
    let e = cartan.form(i, j);
    if k == 0 {
        return Scalar::q_pow(-e);
    }
    (Scalar::q_pow(-e) - Scalar::q_pow(e)) * Scalar::q_pow(-e * k as i64)
}

/// Coefficients of `g^{(ij)}(t)^{-1}`: `q_ij` at `k = 0`, else `(q_ij - q_ij^{-1}) q_ij^{k}`.
pub fn g_inv_closed(cartan: &CartanData, i: Node, j: Node, k: usize) -> Scalar {
    let e = cartan.form(i, j);
    if k == 0 {
        return Scalar::q_pow(e);
    }
    (Scalar::q_pow(e) - Scalar::q_pow(-e)) * Scalar::q_pow(e * k as i64)
}

fn expected(cartan: &CartanData, conv: PairingConvention, a: Generator, b: Generator) -> Scalar {
    let (i, j) = (a.node, b.node);
    match (a.kind, b.kind) {
        (GenKind::XPlus, GenKind::XMinus) if i == j && a.mode + b.mode == 0 => conv.x_constant(),
        (GenKind::Phi, GenKind::Psi) if a.mode + b.mode == 0 => g_closed(cartan, i, j, b.mode as usize),
        (GenKind::PhiZeroInv, GenKind::Psi) | (GenKind::Phi, GenKind::PsiZeroInv) if a.mode + b.mode == 0 => {
            g_inv_closed(cartan, i, j, 0)
        }
        (GenKind::PhiZeroInv, GenKind::PsiZeroInv) => g_closed(cartan, i, j, 0),
        _ => Scalar::zero(),
    }
}

fn counit(g: Generator) -> Scalar {
    match g.kind {
        GenKind::XPlus | GenKind::XMinus => Scalar::zero(),
        _ if g.mode == 0 => Scalar::one(),
        _ => Scalar::zero(),
    }
}

/// Every letter pairing with modes in `|n| <= window`, through both the letter
/// table and the general evaluator, plus the central units against all letters.
pub fn check_base_values(cartan: &CartanData, conv: PairingConvention, window: i64) -> Result<VerificationReport> {
    let mut report = VerificationReport::new("pairing-base-values")
        .param("cartan", cartan.name())
        .param("convention", conv)
        .param("window", window);
    let mut plus = Vec::new();
    let mut minus = Vec::new();
    for i in cartan.nodes() {
        for n in -window..=window {
            plus.push(Generator::xp(i, n));
            minus.push(Generator::xm(i, n));
        }
        for k in 0..=window {
            plus.push(Generator::phi(i, -k));
            minus.push(Generator::psi(i, k));
        }
        plus.push(Generator::phi0inv(i));
        minus.push(Generator::psi0inv(i));
    }
    let mut count = 0usize;
    for &a in &plus {
        for &b in &minus {
            let want = expected(cartan, conv, a, b);
            let table = pair_letters(cartan, conv, a, b);
            let general = pair(cartan, conv, &ModeElement::letter(a), &ModeElement::letter(b))?;
            if table != want {
                report.fail(format!("<{a}, {b}> table gives {table}, expected {want}"));
            }
            if general != want {
                report.fail(format!("<{a}, {b}> evaluator gives {general}, expected {want}"));
            }
            count += 1;
        }
    }
    let units = [-1, 1];
    for &s in &units {
        let k = ModeElement::central(CentralExponent::new(s, 0));
        let kp = ModeElement::central(CentralExponent::new(0, s));
        for &t in &units {
            let v = pair(cartan, conv, &k, &ModeElement::central(CentralExponent::new(0, t)))?;
            if !v.is_one() {
                report.fail(format!("central units pair to {v}"));
            }
        }
        for &b in &minus {
            let v = pair(cartan, conv, &k, &ModeElement::letter(b))?;
            if v != counit(b) {
                report.fail(format!("<K^{s}, {b}> gives {v}, expected {}", counit(b)));
            }
        }
        for &a in &plus {
            let v = pair(cartan, conv, &ModeElement::letter(a), &kp)?;
            if v != counit(a) {
                report.fail(format!("<{a}, Kp^{s}> gives {v}, expected {}", counit(a)));
            }
        }
    }
    report.note(format!("{count} letter pairs"));
    Ok(report)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn closed_forms_match_series_division() {
        for name in ["A2", "B2", "G2"] {
            let c = CartanData::preset(name).unwrap();
            for i in c.nodes() {
                for j in c.nodes() {
                    for k in 0..8 {
                        assert_eq!(c.g(i, j, k), g_closed(&c, i, j, k), "{name} g({i},{j},{k})");
                        assert_eq!(c.g_inv(i, j, k), g_inv_closed(&c, i, j, k), "{name} g_inv({i},{j},{k})");
                    }
                }
            }
        }
    }

    #[test]
    fn base_values_hold_in_both_conventions() {
        let c = CartanData::preset("A2").unwrap();
        for conv in [PairingConvention::QPlus, PairingConvention::QMinus] {
            let r = check_base_values(&c, conv, 2).unwrap();
            assert!(r.passed(), "{r}");
        }
    }

    #[test]
    fn wrong_constant_is_detected() {
        let c = CartanData::preset("A2").unwrap();
        let a = Generator::xp(1, 2);
        let b = Generator::xm(1, -2);
        assert_ne!(expected(&c, PairingConvention::QMinus, a, b), pair_letters(&c, PairingConvention::QPlus, a, b));
    }
}
