use super::annihilator::Evaluator;
use super::convention::PairingConvention;
use crate::cartan::CartanData;
use crate::error::Result;
use crate::modes::{
    antipode, antipode_inverse, coproduct_word, counit_word, generator_window, straighten, ModeElement, ModeWord, Side,
    TruncationPolicy,
};
use crate::report::VerificationReport;
use crate::scalar::{CentralExponent, Scalar};

fn el(w: &ModeWord) -> ModeElement {
    ModeElement::from_word(w.clone())
}

fn pair_el(ev: &mut Evaluator<'_>, cartan: &CartanData, u: &ModeElement, v: &ModeElement) -> Result<Scalar> {
    ev.pair(&straighten(cartan, u)?, &straighten(cartan, v)?)
}

/// Tail length that captures every coproduct term able to pair nontrivially.
fn tail_for(a: &ModeWord, b: &ModeWord) -> u64 {
    let spread: i64 = a.letters.iter().chain(&b.letters).map(|g| g.mode.abs()).sum();
    spread as u64 + 1
}

/// `⟨a, bb'⟩ = Σ⟨a_(1), b⟩⟨a_(2), b'⟩` with both sides evaluated on straightened words.
pub fn check_axiom1(
    ev: &mut Evaluator<'_>,
    cartan: &CartanData,
    a: &ModeWord,
    b: &ModeWord,
    b2: &ModeWord,
) -> Result<Option<String>> {
    let lhs = pair_el(ev, cartan, &el(a), &el(&b.concat(b2)))?;
    let mut rhs = Scalar::zero();
    for (f, c) in coproduct_word(a, tail_for(a, &b.concat(b2))).terms() {
        let x = pair_el(ev, cartan, &el(&f[0]), &el(b))?;
        if x.is_zero() {
            continue;
        }
        let y = pair_el(ev, cartan, &el(&f[1]), &el(b2))?;
        rhs += &(&(c * &x) * &y);
    }
    Ok((lhs != rhs).then(|| format!("⟨{a}, {b} {b2}⟩ = {lhs} but the coproduct side gives {rhs}")))
}

/// `⟨aa', b⟩ = Σ⟨a, b_(2)⟩⟨a', b_(1)⟩`.
pub fn check_axiom2(
    ev: &mut Evaluator<'_>,
    cartan: &CartanData,
    a: &ModeWord,
    a2: &ModeWord,
    b: &ModeWord,
) -> Result<Option<String>> {
    let lhs = pair_el(ev, cartan, &el(&a.concat(a2)), &el(b))?;
    let mut rhs = Scalar::zero();
    for (f, c) in coproduct_word(b, tail_for(&a.concat(a2), b)).terms() {
        let x = pair_el(ev, cartan, &el(a), &el(&f[1]))?;
        if x.is_zero() {
            continue;
        }
        let y = pair_el(ev, cartan, &el(a2), &el(&f[0]))?;
        rhs += &(&(c * &x) * &y);
    }
    Ok((lhs != rhs).then(|| format!("⟨{a} {a2}, {b}⟩ = {lhs} but the coproduct side gives {rhs}")))
}

fn letters(cartan: &CartanData, w: i64, side: Side) -> Vec<ModeWord> {
    generator_window(cartan, w).into_iter().filter(|g| g.side() == side).map(ModeWord::letter).collect()
}

/// Axioms 1 to 3 on all products of two window generators, axiom 4 on generator pairs,
/// and invariance under central units.
pub fn pairing_axiom_suite(
    cartan: &CartanData,
    conv: PairingConvention,
    policy: &TruncationPolicy,
) -> Result<Vec<VerificationReport>> {
    let mut ev = Evaluator::new(cartan, conv);
    let w = policy.w_mode;
    let plus = letters(cartan, w, Side::Plus);
    let minus = letters(cartan, w, Side::Minus);
    let params = |name: &str| {
        VerificationReport::new(name).param("cartan", cartan.name()).param("convention", conv).param("window", w)
    };

    let mut ax1 = params("pairing-axiom-1");
    let mut ax2 = params("pairing-axiom-2");
    let mut checked = 0usize;
    for a in &plus {
        for b in &minus {
            for b2 in &minus {
                checked += 1;
                if let Some(wit) = check_axiom1(&mut ev, cartan, a, b, b2)? {
                    ax1.fail(wit);
                }
            }
        }
    }
    ax1.note(format!("{checked} triples"));
    checked = 0;
    for a in &plus {
        for a2 in &plus {
            for b in &minus {
                checked += 1;
                if let Some(wit) = check_axiom2(&mut ev, cartan, a, a2, b)? {
                    ax2.fail(wit);
                }
            }
        }
    }
    ax2.note(format!("{checked} triples"));

    let mut ax3 = params("pairing-axiom-3");
    for a in plus.iter().chain(&minus) {
        let (u, v) =
            if a.side()? == Some(Side::Plus) { (el(a), ModeElement::one()) } else { (ModeElement::one(), el(a)) };
        let value = ev.pair(&u, &v)?;
        if value != counit_word(a) {
            ax3.fail(format!("pairing {a} with 1 gives {value}"));
        }
    }

    let mut ax4 = params("pairing-axiom-4").param("n_tail", policy.n_tail);
    for a in &plus {
        for b in &minus {
            let sa = antipode(&el(a), policy);
            let sb = antipode_inverse(&el(b), policy);
            let lhs = pair_el(&mut ev, cartan, &sa, &el(b))?;
            let rhs = pair_el(&mut ev, cartan, &el(a), &sb)?;
            if lhs != rhs {
                ax4.fail(format!("⟨S({a}), {b}⟩ = {lhs} but ⟨{a}, S^-1({b})⟩ = {rhs}"));
            }
        }
    }
    ax4.note("on x generators both sides are partial sums of an infinite series, compared at the same truncation");

    let mut central = params("pairing-central-invariance");
    let k = ModeWord::central(CentralExponent::new(1, -2));
    for a in &plus {
        for b in &minus {
            let base = pair_el(&mut ev, cartan, &el(a), &el(b))?;
            let shifted = pair_el(&mut ev, cartan, &el(&a.concat(&k)), &el(&k.concat(b)))?;
            if base != shifted {
                central.fail(format!("central units change ⟨{a}, {b}⟩"));
            }
        }
    }
    Ok(vec![ax1, ax2, ax3, ax4, central])
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn suite_passes_on_a2() {
        let c = CartanData::preset("A2").unwrap();
        for r in pairing_axiom_suite(&c, PairingConvention::QPlus, &TruncationPolicy::new(4, 1)).unwrap() {
            assert!(r.passed(), "{r}");
        }
    }
}
