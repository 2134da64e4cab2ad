use std::collections::HashMap;

use super::element::DoubleElement;
use crate::cartan::CartanData;
use crate::error::{Error, Result};
use crate::modes::{antipode, coproduct2, ModeElement, ModeWord, TruncationPolicy};
use crate::pairing::oracle::graded_match;
use crate::pairing::{PairingConvention, PairingOracle};
use crate::scalar::Scalar;

/// `(1 ⊗ b)(a ⊗ 1) = Σ ⟨a_(1), S(b_(1))⟩ ⟨a_(3), b_(3)⟩ a_(2) ⊗ b_(2)` with every
/// coproduct and antipode tail cut at completion degree `n_tail`. The pairing is
/// evaluated from its axioms on unstraightened words.
pub fn cross_product_at(
    cartan: &CartanData,
    conv: PairingConvention,
    b: &ModeWord,
    a: &ModeWord,
    n_tail: u64,
) -> DoubleElement {
    let policy = TruncationPolicy::new(n_tail, 0);
    let ta = coproduct2(&ModeElement::from_word(a.clone()), &policy);
    let tb = coproduct2(&ModeElement::from_word(b.clone()), &policy);
    let mut oracle = PairingOracle::new(cartan, conv);
    let mut antipodes: HashMap<ModeWord, ModeElement> = HashMap::new();
    let mut out = DoubleElement::zero();
    for (bw, cb) in tb.terms() {
        let (b1, b2, b3) = (&bw[0], &bw[1], &bw[2]);
        for (aw, ca) in ta.terms() {
            let (a1, a2, a3) = (&aw[0], &aw[1], &aw[2]);
            // the antipode preserves both gradings, so mismatched pairs vanish
            if !graded_match(cartan.rank(), &a1.letters, &b1.letters) {
                continue;
            }
            let p3 = oracle.pair_words(&a3.letters, &b3.letters);
            if p3.is_zero() {
                continue;
            }
            let sb1 =
                antipodes.entry(b1.clone()).or_insert_with(|| antipode(&ModeElement::from_word(b1.clone()), &policy));
            let mut p1 = Scalar::zero();
            for (s, cs) in sb1.terms() {
                let p = oracle.pair_words(&a1.letters, &s.letters);
                if !p.is_zero() {
                    p1 += &(cs * &p);
                }
            }
            if p1.is_zero() {
                continue;
            }
            let c = &(&(ca * cb) * &p1) * &p3;
            out.add_term(c, a2.letters.clone(), b2.letters.clone(), a2.central + b2.central);
        }
    }
    out
}

/// The oracle route, accepted only when the normalized result is unchanged
/// between `n_tail` and `n_tail + 2`.
pub fn cross_product_oracle(
    cartan: &CartanData,
    conv: PairingConvention,
    b: &ModeWord,
    a: &ModeWord,
    n_tail: u64,
) -> Result<DoubleElement> {
    let low = cross_product_at(cartan, conv, b, a, n_tail).normalized(cartan)?;
    let high = cross_product_at(cartan, conv, b, a, n_tail + 2).normalized(cartan)?;
    if low != high {
        return Err(Error::NotStabilized { low: n_tail as usize, high: n_tail as usize + 2 });
    }
    Ok(low)
}
