use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use super::expand::mode_expand_element;
use super::ops::{apply_word, permutations, reduced_words, relation13_image, serre_element, shuffle_product};
use super::ratfun::FactoredRational;
use super::tensor::{CurrentTensor, ShuffleElement};
use crate::cartan::{CartanData, Node};
use crate::error::Result;
use crate::modes::{Generator, ModeWord, Tensor};
use crate::report::VerificationReport;
use crate::scalar::Scalar;

/// All weight words of length `len` over the nodes.
pub fn weight_words(cartan: &CartanData, len: usize) -> Vec<Vec<Node>> {
    let mut out = vec![Vec::new()];
    for _ in 0..len {
        out = out.into_iter().flat_map(|w| cartan.nodes().map(move |i| [w.clone(), vec![i]].concat())).collect();
    }
    out
}

fn same(a: &CurrentTensor, b: &CurrentTensor) -> bool {
    ShuffleElement::from_tensor(a.clone()).equals(&ShuffleElement::from_tensor(b.clone()))
}

/// `σ_1 σ_2 σ_1 = σ_2 σ_1 σ_2` on every weight word of length 3.
pub fn check_braid_equation(cartan: &CartanData) -> Result<VerificationReport> {
    let mut report = VerificationReport::new("braid-equation").param("cartan", cartan.name());
    for w in weight_words(cartan, 3) {
        let t = CurrentTensor::new(&w);
        let a = apply_word(cartan, &t, &[1, 2, 1])?;
        let b = apply_word(cartan, &t, &[2, 1, 2])?;
        if !same(&a, &b) {
            report.fail(format!("weight {w:?}: {a} vs {b}"));
            return Ok(report);
        }
    }
    Ok(report)
}

/// For every permutation of at most `max_len` slots, every reduced word gives the same lift.
pub fn check_reduced_words(cartan: &CartanData, max_len: usize) -> Result<VerificationReport> {
    let mut report =
        VerificationReport::new("braid-lift-reduced-words").param("cartan", cartan.name()).param("max_len", max_len);
    let mut count = 0;
    for len in 1..=max_len {
        for w in weight_words(cartan, len) {
            let t = CurrentTensor::new(&w);
            for perm in permutations(len) {
                let words = reduced_words(&perm);
                let first = apply_word(cartan, &t, &words[0])?;
                for word in &words[1..] {
                    count += 1;
                    let other = apply_word(cartan, &t, word)?;
                    if !same(&first, &other) {
                        report.fail(format!("weight {w:?}, words {:?} and {word:?} differ", words[0]));
                        return Ok(report);
                    }
                }
            }
        }
    }
    report.note(format!("{count} reduced-word comparisons"));
    Ok(report)
}

fn random_tensor(cartan: &CartanData, rng: &mut ChaCha8Rng, len: usize) -> ShuffleElement {
    let nodes: Vec<Node> = cartan.nodes().collect();
    let w: Vec<Node> = (0..len).map(|_| *nodes.choose(rng).unwrap()).collect();
    let mut f = FactoredRational::constant(Scalar::laurent(&[(rng.gen_range(-2..=2), rng.gen_range(1..=3))]));
    if len >= 2 && rng.gen_bool(0.5) {
        let (u, v) = (1, len);
        f.mul_linear(0, u, rng.gen_range(-2..=2), v, if rng.gen_bool(0.5) { 1 } else { -1 });
    }
    ShuffleElement::from_tensor(CurrentTensor::new(&w).with_f(f))
}

/// `(s ⋆ t) ⋆ u = s ⋆ (t ⋆ u)` on random pure tensors of total length at most `max_total`.
pub fn check_associativity(
    cartan: &CartanData,
    samples: usize,
    max_total: usize,
    seed: u64,
) -> Result<VerificationReport> {
    let mut report = VerificationReport::new("shuffle-associativity")
        .param("cartan", cartan.name())
        .param("samples", samples)
        .param("max_total", max_total)
        .param("seed", seed);
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut by_total = std::collections::BTreeMap::new();
    let mut compared = 0usize;
    for _ in 0..samples {
        let total = rng.gen_range(3..=max_total.max(3));
        *by_total.entry(total).or_insert(0usize) += 1;
        let a = rng.gen_range(1..=total - 2);
        let b = rng.gen_range(1..=total - a - 1);
        let c = total - a - b;
        let (s, t, u) = (
            random_tensor(cartan, &mut rng, a),
            random_tensor(cartan, &mut rng, b),
            random_tensor(cartan, &mut rng, c),
        );
        let left = shuffle_product(cartan, &shuffle_product(cartan, &s, &t)?, &u)?;
        let right = shuffle_product(cartan, &s, &shuffle_product(cartan, &t, &u)?)?;
        if !left.equals(&right) {
            report.fail(format!("({s}) ⋆ ({t}) ⋆ ({u}) is not associative"));
            return Ok(report);
        }
        compared += left.num_tensors();
    }
    let lengths: Vec<String> = by_total.iter().map(|(t, n)| format!("{n}x{t}")).collect();
    report.note(format!("triples by total length: {}; {compared} tensors compared", lengths.join(" ")));
    Ok(report)
}

/// The Serre element vanishes for every ordered pair of distinct nodes.
pub fn check_serre(cartan: &CartanData) -> Result<VerificationReport> {
    let mut report = VerificationReport::new("serre-vanishing").param("cartan", cartan.name()).param("sym", "sum");
    for i in cartan.nodes() {
        for j in cartan.nodes().filter(|&j| j != i) {
            let e = serre_element(cartan, i, j)?;
            report.note(format!("({i},{j}) a_ij={} tensors={}", cartan.a(i, j), e.num_tensors()));
            if let Some(w) = e.nonzero_witness() {
                report.fail(format!("Serre element for ({i},{j}) is nonzero on weight {w:?}"));
                return Ok(report);
            }
        }
    }
    Ok(report)
}

/// The image of the quadratic exchange relation vanishes for every node pair.
pub fn check_relation13(cartan: &CartanData) -> Result<VerificationReport> {
    let mut report = VerificationReport::new("relation13-vanishing").param("cartan", cartan.name());
    for i in cartan.nodes() {
        for j in cartan.nodes() {
            if let Some(w) = relation13_image(cartan, i, j)?.nonzero_witness() {
                report.fail(format!("relation image for ({i},{j}) is nonzero on weight {w:?}"));
                return Ok(report);
            }
        }
    }
    Ok(report)
}

fn xp_pair(i: Node, n: i64, j: Node, m: i64) -> Vec<ModeWord> {
    vec![ModeWord::letter(Generator::xp(i, n)), ModeWord::letter(Generator::xp(j, m))]
}

/// Mode expansions of `σ(x_i ⊗ x_j)` and of `x_i ⋆ x_j` agree with the mode formulas
/// `σ(x_{i,n} ⊗ x_{j,m}) = Σ_k g_k x_{j,m−k} ⊗ x_{i,n+k}` built from the `g`-series,
/// for target modes in `[-w, w]` and series orders up to `order`.
pub fn check_mode_consistency(cartan: &CartanData, w: i64, order: usize) -> Result<VerificationReport> {
    let mut report = VerificationReport::new("mode-current-consistency")
        .param("cartan", cartan.name())
        .param("window", w)
        .param("order", order);
    for i in cartan.nodes() {
        for j in cartan.nodes() {
            let braided = ShuffleElement::from_tensor(super::ops::sigma(cartan, &CurrentTensor::new(&[i, j]), 1)?);
            let product = shuffle_product(cartan, &ShuffleElement::letter(i, 1), &ShuffleElement::letter(j, 1))?;
            for m1 in -w..=w {
                for m2 in -w..=w {
                    // slot 1 carries x_j at mode m1, slot 2 carries x_i at mode m2
                    let mut sigma_modes = Tensor::zero();
                    for k in 0..=order as i64 {
                        sigma_modes.add_term(cartan.g(i, j, k as usize), xp_pair(j, m1 - k, i, m2 + k));
                    }
                    let mut product_modes = sigma_modes.clone();
                    product_modes.add_term(Scalar::one(), xp_pair(i, m1, j, m2));
                    let got_sigma = mode_expand_element(&braided, &[m1, m2], order)?;
                    let got_product = mode_expand_element(&product, &[m1, m2], order)?;
                    if got_sigma != sigma_modes {
                        report.fail(format!("sigma on ({i},{j}) at modes ({m1},{m2}): {got_sigma} vs {sigma_modes}"));
                        return Ok(report);
                    }
                    if got_product != product_modes {
                        report.fail(format!("x{i} ⋆ x{j} at modes ({m1},{m2}): {got_product} vs {product_modes}"));
                        return Ok(report);
                    }
                }
            }
        }
    }
    Ok(report)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn a2() -> CartanData {
        CartanData::preset("A2").unwrap()
    }

    #[test]
    fn braid_and_reduced_words() {
        assert!(check_braid_equation(&CartanData::preset("G2").unwrap()).unwrap().passed());
        assert!(check_reduced_words(&a2(), 3).unwrap().passed());
    }

    #[test]
    fn associativity_on_random_triples() {
        let r = check_associativity(&a2(), 10, 4, 7).unwrap();
        assert!(r.passed(), "{r:?}");
    }

    #[test]
    fn modes_match_currents() {
        let r = check_mode_consistency(&CartanData::preset("B2").unwrap(), 2, 5).unwrap();
        assert!(r.passed(), "{r:?}");
    }

    #[test]
    fn serre_and_relation13_reports() {
        assert!(check_serre(&a2()).unwrap().passed());
        assert!(check_relation13(&a2()).unwrap().passed());
    }
}
