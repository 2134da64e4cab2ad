use super::element::ModeElement;
use super::generator::{GenKind, Generator, Side};
use super::word::ModeWord;
use crate::cartan::CartanData;
use crate::error::{Error, Result};
use crate::scalar::{CentralExponent, Scalar};

/// Moves every x letter to the left of every Cartan letter in the positive algebra.
pub fn straighten_plus(cartan: &CartanData, e: &ModeElement) -> Result<ModeElement> {
    e.check_side(Side::Plus)?;
    straighten_side(cartan, e)
}

/// Moves every x letter to the left of every Cartan letter in the negative algebra.
pub fn straighten_minus(cartan: &CartanData, e: &ModeElement) -> Result<ModeElement> {
    e.check_side(Side::Minus)?;
    straighten_side(cartan, e)
}

/// Straightens an element of either half, picking the side from its letters.
pub fn straighten(cartan: &CartanData, e: &ModeElement) -> Result<ModeElement> {
    e.side()?;
    straighten_side(cartan, e)
}

pub fn straighten_word(cartan: &CartanData, w: &ModeWord) -> Result<ModeElement> {
    w.side()?;
    for g in &w.letters {
        cartan.check_node(g.node)?;
    }
    let mut acc: Vec<(Scalar, Vec<Generator>, Vec<Generator>, CentralExponent)> =
        vec![(Scalar::one(), Vec::new(), Vec::new(), w.central)];
    for &g in &w.letters {
        if g.is_cartan() {
            for (_, _, block, _) in acc.iter_mut() {
                block.push(g);
            }
            continue;
        }
        let mut next = Vec::new();
        for (c, xs, block, central) in acc {
            for (d, x, new_block, shift) in pass_through(cartan, &block, g) {
                let mut xs = xs.clone();
                xs.push(x);
                next.push((&c * &d, xs, new_block, central + shift));
            }
        }
        acc = next;
    }
    let mut out = ModeElement::zero();
    for (c, mut xs, mut block, central) in acc {
        block.sort_by_key(Generator::cartan_key);
        xs.extend(block);
        out.add_term(c, ModeWord::new(xs, central));
    }
    Ok(out)
}

fn straighten_side(cartan: &CartanData, e: &ModeElement) -> Result<ModeElement> {
    e.try_map_words(|w| straighten_word(cartan, w))
}

type Passed = (Scalar, Generator, Vec<Generator>, CentralExponent);

/// Rewrites `block · x` as a sum of `x' · block'` with central corrections.
fn pass_through(cartan: &CartanData, block: &[Generator], x: Generator) -> Vec<Passed> {
    let mut states: Vec<Passed> = vec![(Scalar::one(), x, Vec::new(), CentralExponent::ZERO)];
    for &h in block.iter().rev() {
        let mut next = Vec::new();
        for (c, x, tail, central) in states {
            for (d, x2, h2, shift) in exchange(cartan, h, x) {
                let mut t = Vec::with_capacity(tail.len() + 1);
                t.push(h2);
                t.extend_from_slice(&tail);
                next.push((&c * &d, x2, t, central + shift));
            }
        }
        states = next;
    }
    states
}

/// One exchange `h · x = Σ coeff · x' · h'` of a Cartan letter past an x letter.
fn exchange(cartan: &CartanData, h: Generator, x: Generator) -> Vec<(Scalar, Generator, Generator, CentralExponent)> {
    let (i, j) = (h.node, x.node);
    match (h.kind, x.kind) {
        (GenKind::Phi, GenKind::XPlus) => (0..=-h.mode)
            .map(|o| {
                (
                    cartan.g(i, j, o as usize),
                    Generator::xp(j, x.mode - o),
                    Generator::phi(i, h.mode + o),
                    CentralExponent::new(-o, 0),
                )
            })
            .collect(),
        (GenKind::Psi, GenKind::XMinus) => (0..=h.mode)
            .map(|o| {
                (
                    cartan.g(i, j, o as usize),
                    Generator::xm(j, x.mode + o),
                    Generator::psi(i, h.mode - o),
                    CentralExponent::new(0, o),
                )
            })
            .collect(),
        (GenKind::PhiZeroInv, GenKind::XPlus) | (GenKind::PsiZeroInv, GenKind::XMinus) => {
            vec![(cartan.g_inv(i, j, 0), x, h, CentralExponent::ZERO)]
        }
        _ => unreachable!("side was checked before straightening"),
    }
}

/// Cancels `φ_{i,0} φ_{i,0}^{-1}` and `ψ_{i,0} ψ_{i,0}^{-1}` pairs inside straightened Cartan blocks.
pub fn cancel_inverses(e: &ModeElement) -> Result<ModeElement> {
    e.try_map_words(|w| {
        let (xs, block) = w.split_blocks()?;
        let mut block = block.to_vec();
        loop {
            let hit = block.iter().enumerate().find_map(|(a, g)| {
                let partner = match g.kind {
                    GenKind::PhiZeroInv => Generator::phi(g.node, 0),
                    GenKind::PsiZeroInv => Generator::psi(g.node, 0),
                    _ => return None,
                };
                block.iter().position(|h| *h == partner).map(|b| (a, b))
            });
            match hit {
                Some((a, b)) => {
                    let (hi, lo) = if a > b { (a, b) } else { (b, a) };
                    block.remove(hi);
                    block.remove(lo);
                }
                None => break,
            }
        }
        let mut letters = xs.to_vec();
        letters.extend(block);
        Ok(ModeElement::from_word(ModeWord::new(letters, w.central)))
    })
}

/// Straightening followed by inverse cancellation.
pub fn normal_form(cartan: &CartanData, e: &ModeElement) -> Result<ModeElement> {
    cancel_inverses(&straighten(cartan, e)?)
}

pub(crate) fn require_straightened(e: &ModeElement) -> Result<()> {
    match e.terms().find(|(w, _)| !w.is_straightened()) {
        Some((w, _)) => Err(Error::NotStraightened(w.to_string())),
        None => Ok(()),
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn a2() -> CartanData {
        CartanData::preset("A2").unwrap()
    }

    fn word(letters: Vec<Generator>) -> ModeElement {
        ModeElement::from_word(ModeWord::from_letters(letters))
    }

    #[test]
    fn phi_zero_single_term() {
        let c = a2();
        let s = straighten_plus(&c, &word(vec![Generator::phi(1, 0), Generator::xp(2, 5)])).unwrap();
        let expected = ModeElement::term(
            c.q_ij(1, 2).inv().unwrap(),
            ModeWord::from_letters(vec![Generator::xp(2, 5), Generator::phi(1, 0)]),
        );
        assert_eq!(s, expected);
    }

    #[test]
    fn already_straight_is_fixed() {
        let c = a2();
        let e = word(vec![Generator::xp(2, 1), Generator::phi(1, -3)]);
        assert_eq!(straighten_plus(&c, &e).unwrap(), e);
    }

    #[test]
    fn phi_minus_one_two_terms() {
        let c = a2();
        let s = straighten_plus(&c, &word(vec![Generator::phi(1, -1), Generator::xp(2, 0)])).unwrap();
        let mut expected = ModeElement::zero();
        expected.add_term(c.g(1, 2, 0), ModeWord::from_letters(vec![Generator::xp(2, 0), Generator::phi(1, -1)]));
        expected.add_term(
            c.g(1, 2, 1),
            ModeWord::new(vec![Generator::xp(2, -1), Generator::phi(1, 0)], CentralExponent::new(-1, 0)),
        );
        assert_eq!(s, expected);
    }

    #[test]
    fn psi_one_two_terms() {
        let c = a2();
        let s = straighten_minus(&c, &word(vec![Generator::psi(1, 1), Generator::xm(2, 0)])).unwrap();
        let mut expected = ModeElement::zero();
        expected.add_term(c.g(1, 2, 0), ModeWord::from_letters(vec![Generator::xm(2, 0), Generator::psi(1, 1)]));
        expected.add_term(
            c.g(1, 2, 1),
            ModeWord::new(vec![Generator::xm(2, 1), Generator::psi(1, 0)], CentralExponent::new(0, 1)),
        );
        assert_eq!(s, expected);
    }

    #[test]
    fn mixed_input_is_rejected() {
        let c = a2();
        assert!(straighten_plus(&c, &word(vec![Generator::psi(1, 1)])).is_err());
        assert!(straighten(&c, &word(vec![Generator::phi(1, 0), Generator::xm(1, 0)])).is_err());
    }

    #[test]
    fn inverses_cancel() {
        let c = a2();
        let e = word(vec![Generator::phi(1, 0), Generator::phi0inv(1), Generator::xp(1, 2)]);
        let n = normal_form(&c, &e).unwrap();
        assert_eq!(n, word(vec![Generator::xp(1, 2)]));
    }
}
