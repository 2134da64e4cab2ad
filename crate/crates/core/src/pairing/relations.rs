//! Mode instances of the relations whose membership in the annihilator is checked.

use crate::cartan::{CartanData, Node};
use crate::error::Result;
use crate::modes::{Generator, ModeElement, ModeWord};
use crate::scalar::{qbinomial, CentralExponent, Scalar};

/// A named relation instance.
#[derive(Clone, Debug)]
pub struct Relation {
    pub name: String,
    pub element: ModeElement,
}

fn word(letters: Vec<Generator>) -> ModeWord {
    ModeWord::from_letters(letters)
}

fn elem(letters: Vec<Generator>) -> ModeElement {
    ModeElement::from_word(word(letters))
}

/// `φ_{i,0}φ_{i,0}^{-1} - 1`, `φ_{i,0}^{-1}φ_{i,0} - 1` and the negative mirrors.
pub fn r1_instances(cartan: &CartanData) -> Vec<Relation> {
    let mut out = Vec::new();
    for i in cartan.nodes() {
        for (a, b) in [
            (Generator::phi(i, 0), Generator::phi0inv(i)),
            (Generator::phi0inv(i), Generator::phi(i, 0)),
            (Generator::psi(i, 0), Generator::psi0inv(i)),
            (Generator::psi0inv(i), Generator::psi(i, 0)),
        ] {
            out.push(Relation { name: format!("r1[{a} {b}]"), element: &elem(vec![a, b]) - &ModeElement::one() });
        }
    }
    out
}

/// Commutators of Cartan letters with modes in the window, both sides.
pub fn r2_instances(cartan: &CartanData, window: i64) -> Vec<Relation> {
    let mut plus = Vec::new();
    let mut minus = Vec::new();
    for i in cartan.nodes() {
        for k in 0..=window {
            plus.push(Generator::phi(i, -k));
            minus.push(Generator::psi(i, k));
        }
        plus.push(Generator::phi0inv(i));
        minus.push(Generator::psi0inv(i));
    }
    let mut out = Vec::new();
    for letters in [plus, minus] {
        for (x, &a) in letters.iter().enumerate() {
            for &b in &letters[x + 1..] {
                out.push(Relation { name: format!("r2[{a}, {b}]"), element: &elem(vec![a, b]) - &elem(vec![b, a]) });
            }
        }
    }
    out
}

/// `φ_{i,n}x^+_{j,m} - Σ g_o K^{-o} x^+_{j,m-o}φ_{i,n+o}` and its negative mirror.
pub fn r3_instances(cartan: &CartanData, window: i64) -> Vec<Relation> {
    let mut out = Vec::new();
    for i in cartan.nodes() {
        for j in cartan.nodes() {
            for n in 0..=window {
                for m in -window..=window {
                    let mut e = elem(vec![Generator::phi(i, -n), Generator::xp(j, m)]);
                    for o in 0..=n {
                        e.add_term(
                            -cartan.g(i, j, o as usize),
                            ModeWord::new(
                                vec![Generator::xp(j, m - o), Generator::phi(i, -n + o)],
                                CentralExponent::new(-o, 0),
                            ),
                        );
                    }
                    out.push(Relation { name: format!("r3[phi({i},{}) xp({j},{m})]", -n), element: e });
                    let mut e = elem(vec![Generator::psi(i, n), Generator::xm(j, m)]);
                    for o in 0..=n {
                        e.add_term(
                            -cartan.g(i, j, o as usize),
                            ModeWord::new(
                                vec![Generator::xm(j, m + o), Generator::psi(i, n - o)],
                                CentralExponent::new(0, o),
                            ),
                        );
                    }
                    out.push(Relation { name: format!("r3[psi({i},{n}) xm({j},{m})]"), element: e });
                }
            }
        }
    }
    out
}

/// Mode coefficient of `(z - q_ij w) x_i^+(z) x_j^+(w) - (q_ij z - w) x_j^+(w) x_i^+(z)`:
/// `x_{i,n+1}x_{j,m} - q_ij x_{i,n}x_{j,m+1} - q_ij x_{j,m}x_{i,n+1} + x_{j,m+1}x_{i,n}`.
pub fn rel13(cartan: &CartanData, i: Node, j: Node, n: i64, m: i64) -> ModeElement {
    let qij = cartan.q_ij(i, j);
    let mut e = ModeElement::zero();
    e.add_term(Scalar::one(), word(vec![Generator::xp(i, n + 1), Generator::xp(j, m)]));
    e.add_term(-&qij, word(vec![Generator::xp(i, n), Generator::xp(j, m + 1)]));
    e.add_term(-&qij, word(vec![Generator::xp(j, m), Generator::xp(i, n + 1)]));
    e.add_term(Scalar::one(), word(vec![Generator::xp(j, m + 1), Generator::xp(i, n)]));
    e
}

/// Instances of [`rel13`] whose letters all have modes in the window.
pub fn rel13_instances(cartan: &CartanData, window: i64) -> Vec<Relation> {
    let mut out = Vec::new();
    for i in cartan.nodes() {
        for j in cartan.nodes() {
            for n in -window..window {
                for m in -window..window {
                    out.push(Relation { name: format!("rel13[{i},{j};{n},{m}]"), element: rel13(cartan, i, j, n, m) });
                }
            }
        }
    }
    out
}

/// Mode coefficient of the Serre relation: for `N = 1 - a_ij`,
/// `Σ_τ Σ_r (-1)^r [N choose r]_{q_i} x_{i,n_τ1}⋯x_{i,n_τr} x_{j,m} x_{i,n_τ(r+1)}⋯x_{i,n_τN}`.
pub fn serre_modes(cartan: &CartanData, i: Node, j: Node, ns: &[i64], m: i64) -> Result<ModeElement> {
    let big_n = 1 - cartan.a(i, j);
    assert_eq!(ns.len() as i64, big_n);
    let mut e = ModeElement::zero();
    let perms = permutations(ns.len());
    for r in 0..=big_n {
        let mut coeff = qbinomial(big_n, r, cartan.d(i))?;
        if r % 2 == 1 {
            coeff = -coeff;
        }
        for tau in &perms {
            let mut letters: Vec<Generator> = tau.iter().map(|&k| Generator::xp(i, ns[k])).collect();
            letters.insert(r as usize, Generator::xp(j, m));
            e.add_term(coeff.clone(), word(letters));
        }
    }
    Ok(e)
}

pub(crate) fn permutations(n: usize) -> Vec<Vec<usize>> {
    let mut out = Vec::new();
    let mut cur: Vec<usize> = Vec::new();
    let mut used = vec![false; n];
    fn go(n: usize, cur: &mut Vec<usize>, used: &mut Vec<bool>, out: &mut Vec<Vec<usize>>) {
        if cur.len() == n {
            out.push(cur.clone());
            return;
        }
        for k in 0..n {
            if !used[k] {
                used[k] = true;
                cur.push(k);
                go(n, cur, used, out);
                cur.pop();
                used[k] = false;
            }
        }
    }
    go(n, &mut cur, &mut used, &mut out);
    out
}

/// Serre mode coefficients for the ordered pair `(i, j)` with all modes in the window,
/// one per multiset of `i` modes.
pub fn serre_instances(cartan: &CartanData, i: Node, j: Node, window: i64) -> Result<Vec<Relation>> {
    let big_n = (1 - cartan.a(i, j)) as usize;
    let mut out = Vec::new();
    let mut ns = Vec::new();
    fn multisets(len: usize, lo: i64, hi: i64, cur: &mut Vec<i64>, out: &mut Vec<Vec<i64>>) {
        if cur.len() == len {
            out.push(cur.clone());
            return;
        }
        let start = cur.last().copied().unwrap_or(lo);
        for v in start..=hi {
            cur.push(v);
            multisets(len, lo, hi, cur, out);
            cur.pop();
        }
    }
    multisets(big_n, -window, window, &mut Vec::new(), &mut ns);
    for tuple in ns {
        for m in -window..=window {
            let e = serre_modes(cartan, i, j, &tuple, m)?;
            out.push(Relation { name: format!("serre[{i},{j};{tuple:?},{m}]"), element: e });
        }
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn rel13_is_homogeneous() {
        let c = CartanData::preset("A2").unwrap();
        let e = rel13(&c, 1, 2, 0, -1);
        assert_eq!(e.mode_sum(), Some(0));
        assert_eq!(e.len(), 4);
    }

    #[test]
    fn serre_term_count() {
        let c = CartanData::preset("A2").unwrap();
        let e = serre_modes(&c, 1, 2, &[0, 1], 0).unwrap();
        assert_eq!(e.len(), 6);
    }
}
