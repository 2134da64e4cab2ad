use super::element::DoubleElement;
use super::oracle::cross_product_oracle;
use super::rules::{cross_product_rules, h_coeffs};
use crate::cartan::CartanData;
use crate::error::Result;
use crate::modes::{Generator, ModeWord};
use crate::pairing::PairingConvention;
use crate::report::VerificationReport;
use crate::scalar::{CentralExponent, Scalar};

/// Positive words of the generator window: x^+ modes in `[-w, w]`, φ modes in `[-w, 0]`,
/// the inverse `φ_{i,0}^{-1}` and `K^{±1}`.
pub fn positive_generators(cartan: &CartanData, w: i64) -> Vec<ModeWord> {
    let mut out = Vec::new();
    for i in cartan.nodes() {
        out.extend((-w..=w).map(|n| ModeWord::letter(Generator::xp(i, n))));
        out.extend((-w..=0).map(|n| ModeWord::letter(Generator::phi(i, n))));
        out.push(ModeWord::letter(Generator::phi0inv(i)));
    }
    out.push(ModeWord::central(CentralExponent::new(1, 0)));
    out.push(ModeWord::central(CentralExponent::new(-1, 0)));
    out
}

/// Negative counterpart of [`positive_generators`].
pub fn negative_generators(cartan: &CartanData, w: i64) -> Vec<ModeWord> {
    let mut out = Vec::new();
    for j in cartan.nodes() {
        out.extend((-w..=w).map(|m| ModeWord::letter(Generator::xm(j, m))));
        out.extend((0..=w).map(|m| ModeWord::letter(Generator::psi(j, m))));
        out.push(ModeWord::letter(Generator::psi0inv(j)));
    }
    out.push(ModeWord::central(CentralExponent::new(0, 1)));
    out.push(ModeWord::central(CentralExponent::new(0, -1)));
    out
}

fn finish(e: DoubleElement, quotient: bool) -> DoubleElement {
    if quotient {
        e.quotient()
    } else {
        e
    }
}

/// Compares the exchange rules with the oracle route on every pair of window generators.
pub fn compare_rules_oracle(
    cartan: &CartanData,
    conv: PairingConvention,
    window: i64,
    n_tail: u64,
    quotient: bool,
) -> Result<VerificationReport> {
    let mut report = VerificationReport::new("double-rules-vs-oracle")
        .param("cartan", cartan.name())
        .param("convention", conv)
        .param("window", window)
        .param("n_tail", n_tail)
        .param("central_quotient", quotient);
    let mut count = 0;
    for b in negative_generators(cartan, window) {
        for a in positive_generators(cartan, window) {
            let rules = finish(cross_product_rules(cartan, conv, &b, &a).normalized(cartan)?, quotient);
            let oracle = finish(cross_product_oracle(cartan, conv, &b, &a, n_tail)?, quotient);
            count += 1;
            if rules != oracle {
                report.fail(format!("(1⊗{b})({a}⊗1): rules {rules}, oracle {oracle}"));
                return Ok(report);
            }
        }
    }
    report.note(format!("{count} generator pairs agree"));
    Ok(report)
}

/// `K` and `Kp` commute with every generator of the other factor, by both routes.
pub fn check_centrality(
    cartan: &CartanData,
    conv: PairingConvention,
    window: i64,
    n_tail: u64,
) -> Result<VerificationReport> {
    let mut report = VerificationReport::new("double-centrality")
        .param("cartan", cartan.name())
        .param("window", window)
        .param("n_tail", n_tail);
    let k = [CentralExponent::new(1, 0), CentralExponent::new(-1, 0)];
    let kp = [CentralExponent::new(0, 1), CentralExponent::new(0, -1)];
    let mut cases = Vec::new();
    for b in negative_generators(cartan, window) {
        for e in k {
            cases.push((b.clone(), ModeWord::central(e)));
        }
    }
    for a in positive_generators(cartan, window) {
        for e in kp {
            cases.push((ModeWord::central(e), a.clone()));
        }
    }
    for (b, a) in &cases {
        let expected = DoubleElement::term(Scalar::one(), a.letters.clone(), b.letters.clone(), a.central + b.central);
        let rules = cross_product_rules(cartan, conv, b, a);
        let oracle = cross_product_oracle(cartan, conv, b, a, n_tail)?;
        if rules != expected || oracle != expected {
            report.fail(format!("(1⊗{b})({a}⊗1): rules {rules}, oracle {oracle}, expected {expected}"));
            return Ok(report);
        }
    }
    report.note(format!("{} central exchanges checked", cases.len()));
    Ok(report)
}

/// Associativity of the product on all triples of single window generators,
/// compared after straightening both factors.
pub fn check_associativity(cartan: &CartanData, conv: PairingConvention, window: i64) -> Result<VerificationReport> {
    let mut report =
        VerificationReport::new("double-associativity").param("cartan", cartan.name()).param("window", window);
    let mut gens: Vec<DoubleElement> =
        positive_generators(cartan, window).iter().map(DoubleElement::positive).collect();
    gens.extend(negative_generators(cartan, window).iter().map(DoubleElement::negative));
    let mut count = 0;
    for x in &gens {
        for y in &gens {
            let xy = x.mul(y, cartan, conv);
            for z in &gens {
                let left = xy.mul(z, cartan, conv).normalized(cartan)?;
                let right = x.mul(&y.mul(z, cartan, conv), cartan, conv).normalized(cartan)?;
                count += 1;
                if left != right {
                    report.fail(format!("({x})({y})({z}): {left} vs {right}"));
                    return Ok(report);
                }
            }
        }
    }
    report.note(format!("{count} triples"));
    Ok(report)
}

/// Positive and negative factors embed: products within one factor never create
/// letters of the other.
pub fn check_embeddings(cartan: &CartanData, conv: PairingConvention, window: i64) -> Result<VerificationReport> {
    let mut report =
        VerificationReport::new("double-embeddings").param("cartan", cartan.name()).param("window", window);
    let pos = positive_generators(cartan, window);
    let neg = negative_generators(cartan, window);
    for (words, positive) in [(&pos, true), (&neg, false)] {
        for u in words.iter() {
            for v in words.iter() {
                let lift = |w: &ModeWord| {
                    if positive {
                        DoubleElement::positive(w)
                    } else {
                        DoubleElement::negative(w)
                    }
                };
                let got = lift(u).mul(&lift(v), cartan, conv);
                let want = lift(&u.concat(v));
                if got != want {
                    report.fail(format!("{u} · {v}: {got} vs {want}"));
                    return Ok(report);
                }
            }
        }
    }
    Ok(report)
}

/// In the central quotient the mixed exchange reproduces
/// `x^+_n x^-_m − x^-_m x^+_n = κ (ψ_{n+m} K^{n−m} − φ_{n+m} K^{m−n})` with `κ` the pairing constant.
pub fn check_commutator_shape(cartan: &CartanData, conv: PairingConvention, window: i64) -> VerificationReport {
    let mut report = VerificationReport::new("double-commutator-shape")
        .param("cartan", cartan.name())
        .param("convention", conv)
        .param("window", window);
    let kappa = conv.x_constant();
    for i in cartan.nodes() {
        for n in -window..=window {
            for m in -window..=window {
                let a = DoubleElement::positive(&ModeWord::letter(Generator::xp(i, n)));
                let b = DoubleElement::negative(&ModeWord::letter(Generator::xm(i, m)));
                let commutator = a.mul(&b, cartan, conv).sub(&b.mul(&a, cartan, conv)).quotient();
                let mut want = DoubleElement::zero();
                if n + m >= 0 {
                    want.add_term(
                        kappa.clone(),
                        vec![],
                        vec![Generator::psi(i, n + m)],
                        CentralExponent::new(n - m, 0),
                    );
                }
                if n + m <= 0 {
                    want.add_term(
                        -kappa.clone(),
                        vec![Generator::phi(i, n + m)],
                        vec![],
                        CentralExponent::new(m - n, 0),
                    );
                }
                let want = want.quotient();
                if commutator != want {
                    report.fail(format!("[xp({i},{n}), xm({i},{m})] = {commutator}, expected {want}"));
                    return report;
                }
            }
        }
    }
    report.note(format!("constant κ = {kappa}; Def.-style 1/(q − q^-1) differs by this convention"));
    report
}

/// In the central quotient `h_{ij}(t) g_{ij}(t q^{-c}) = g_{ij}(t q^{c})`, coefficientwise in `t`,
/// and `h_0 = 1`.
pub fn check_h_series(cartan: &CartanData, n: usize) -> VerificationReport {
    let mut report = VerificationReport::new("double-h-series").param("cartan", cartan.name()).param("order", n);
    for i in cartan.nodes() {
        for j in cartan.nodes() {
            let h = h_coeffs(cartan, i, j, n);
            if h[0] != vec![(CentralExponent::ZERO, Scalar::one())] {
                report.fail(format!("h_0 for ({i},{j}) is not 1"));
                return report;
            }
            for k in 0..=n {
                let mut lhs: std::collections::BTreeMap<i64, Scalar> = Default::default();
                for (r, hr) in h.iter().enumerate().take(k + 1) {
                    for (e, c) in hr {
                        // (K Kp)^e becomes q^{c e}, g(t q^{-c}) contributes q^{-c(k−r)}
                        let shift = e.identified().c - 2 * (k - r) as i64;
                        *lhs.entry(shift).or_insert_with(Scalar::zero) += &(c * &cartan.g(i, j, k - r));
                    }
                }
                lhs.retain(|_, c| !c.is_zero());
                let mut rhs = std::collections::BTreeMap::new();
                rhs.insert(2 * k as i64, cartan.g(i, j, k));
                rhs.retain(|_, c: &mut Scalar| !c.is_zero());
                if lhs != rhs {
                    report.fail(format!("coefficient t^{k} for ({i},{j}) differs"));
                    return report;
                }
            }
        }
    }
    report
}

#[cfg(test)]
mod tests {
    use super::*;

    fn a2() -> CartanData {
        CartanData::preset("A2").unwrap()
    }

    #[test]
    fn rules_match_oracle_on_small_window() {
        let r = compare_rules_oracle(&a2(), PairingConvention::QPlus, 1, 4, false).unwrap();
        assert!(r.passed(), "{r:?}");
    }

    #[test]
    fn rules_match_oracle_in_quotient_with_other_constant() {
        let c = CartanData::preset("B2").unwrap();
        let r = compare_rules_oracle(&c, PairingConvention::QMinus, 1, 4, true).unwrap();
        assert!(r.passed(), "{r:?}");
    }

    #[test]
    fn central_letters_commute() {
        assert!(check_centrality(&a2(), PairingConvention::QPlus, 1, 4).unwrap().passed());
    }

    #[test]
    fn product_is_associative_and_factors_embed() {
        let c = CartanData::preset("A1").unwrap();
        assert!(check_associativity(&c, PairingConvention::QPlus, 1).unwrap().passed());
        assert!(check_embeddings(&a2(), PairingConvention::QPlus, 1).unwrap().passed());
    }

    #[test]
    fn commutator_has_relation_shape() {
        for conv in [PairingConvention::QPlus, PairingConvention::QMinus] {
            assert!(check_commutator_shape(&a2(), conv, 2).passed());
        }
    }

    #[test]
    fn h_series_identity() {
        assert!(check_h_series(&CartanData::preset("G2").unwrap(), 5).passed());
    }

    #[test]
    fn rules_match_oracle_on_window_three() {
        for (name, quotient) in [("A2", false), ("G2", true)] {
            let c = CartanData::preset(name).unwrap();
            let r = compare_rules_oracle(&c, PairingConvention::QPlus, 3, 8, quotient).unwrap();
            assert!(r.passed(), "{r:?}");
        }
    }

    #[test]
    fn broken_rule_is_detected() {
        let c = a2();
        let b = ModeWord::letter(Generator::xm(1, 1));
        let a = ModeWord::letter(Generator::xp(1, -1));
        let oracle = cross_product_oracle(&c, PairingConvention::QPlus, &b, &a, 4).unwrap();
        let wrong = cross_product_rules(&c, PairingConvention::QMinus, &b, &a).normalized(&c).unwrap();
        assert_ne!(oracle, wrong);
    }

    #[test]
    fn unstable_truncation_is_reported() {
        let c = a2();
        let b = ModeWord::letter(Generator::xm(1, -3));
        let a = ModeWord::letter(Generator::xp(1, -3));
        assert!(cross_product_oracle(&c, PairingConvention::QPlus, &b, &a, 4).is_err());
    }
}
