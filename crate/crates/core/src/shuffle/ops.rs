use super::ratfun::FactoredRational;
use super::tensor::{braid_exponent, CurrentTensor, ShuffleElement};
use crate::cartan::{CartanData, Node};
use crate::error::{Error, Result};
use crate::scalar::{qbinomial, Scalar};

/// The braiding on slots `a, a+1` (1-based):
/// `x_i(z_u) ⊗ x_j(z_v) ↦ g_ij(z_u/z_v) x_j(z_v) ⊗ x_i(z_u)`.
pub fn sigma(cartan: &CartanData, t: &CurrentTensor, a: usize) -> Result<CurrentTensor> {
    if a == 0 || a >= t.len() {
        return Err(Error::OutOfRange(format!("sigma position {a} for a tensor of length {}", t.len())));
    }
    let ((i, u), (j, v)) = (t.letters[a - 1], t.letters[a]);
    let mut letters = t.letters.clone();
    letters.swap(a - 1, a);
    let f = t.f.mul(&FactoredRational::kernel(braid_exponent(cartan, i, j), u, v));
    Ok(CurrentTensor { letters, f })
}

/// Applies `σ` at the given positions, first entry first.
pub fn apply_word(cartan: &CartanData, t: &CurrentTensor, word: &[usize]) -> Result<CurrentTensor> {
    word.iter().try_fold(t.clone(), |acc, &a| sigma(cartan, &acc, a))
}

/// A reduced word moving slot `k` to position `target[k]` (0-based), found by bubble sort.
pub fn reduced_word(target: &[usize]) -> Vec<usize> {
    let mut keys = target.to_vec();
    let mut word = Vec::new();
    let mut swapped = true;
    while swapped {
        swapped = false;
        for a in 0..keys.len().saturating_sub(1) {
            if keys[a] > keys[a + 1] {
                keys.swap(a, a + 1);
                word.push(a + 1);
                swapped = true;
            }
        }
    }
    word
}

/// Every reduced word of the permutation `target`.
pub fn reduced_words(target: &[usize]) -> Vec<Vec<usize>> {
    let descents: Vec<usize> = (0..target.len().saturating_sub(1)).filter(|&a| target[a] > target[a + 1]).collect();
    if descents.is_empty() {
        return vec![Vec::new()];
    }
    let mut out = Vec::new();
    for a in descents {
        let mut next = target.to_vec();
        next.swap(a, a + 1);
        for mut w in reduced_words(&next) {
            w.insert(0, a + 1);
            out.push(w);
        }
    }
    out
}

/// The lift `T_w`, evaluated along one reduced word of `w`.
pub fn braid_lift(cartan: &CartanData, target: &[usize], t: &CurrentTensor) -> Result<CurrentTensor> {
    if target.len() != t.len() {
        return Err(Error::OutOfRange("permutation and tensor lengths differ".into()));
    }
    apply_word(cartan, t, &reduced_word(target))
}

/// All `(p, r)`-shuffles as target positions of the concatenated slots.
pub fn shuffles(p: usize, r: usize) -> Vec<Vec<usize>> {
    fn go(p: usize, r: usize, left: &mut Vec<usize>, right: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        let pos = left.len() + right.len();
        if left.len() == p && right.len() == r {
            out.push(left.iter().chain(right.iter()).copied().collect());
            return;
        }
        if left.len() < p {
            left.push(pos);
            go(p, r, left, right, out);
            left.pop();
        }
        if right.len() < r {
            right.push(pos);
            go(p, r, left, right, out);
            right.pop();
        }
    }
    let mut out = Vec::new();
    go(p, r, &mut Vec::new(), &mut Vec::new(), &mut out);
    out
}

/// Shuffle product of elements with disjoint variables, summing braid lifts over shuffles.
pub fn shuffle_disjoint(cartan: &CartanData, s: &ShuffleElement, t: &ShuffleElement) -> Result<ShuffleElement> {
    let mut out = ShuffleElement::zero();
    for a in s.tensors() {
        for b in t.tensors() {
            let letters = a.letters.iter().chain(&b.letters).copied().collect();
            let joined = CurrentTensor { letters, f: a.f.mul(&b.f) };
            for w in shuffles(a.len(), b.len()) {
                out.push(braid_lift(cartan, &w, &joined)?);
            }
        }
    }
    Ok(out)
}

/// The quantum shuffle product. The right factor's variables are shifted past the left's.
pub fn shuffle_product(cartan: &CartanData, s: &ShuffleElement, t: &ShuffleElement) -> Result<ShuffleElement> {
    let shift = s.tensors().map(|x| x.max_var().max(x.f.max_var())).max().unwrap_or(0);
    shuffle_disjoint(cartan, s, &t.rename(|v| v + shift))
}

/// All permutations of `0..n` in lexicographic order.
pub fn permutations(n: usize) -> Vec<Vec<usize>> {
    if n == 0 {
        return vec![Vec::new()];
    }
    let mut out = Vec::new();
    for p in permutations(n - 1) {
        for k in 0..=p.len() {
            let mut q = p.clone();
            q.insert(k, n - 1);
            out.push(q);
        }
    }
    out.sort();
    out
}

/// `Σ_r (−1)^r [N, r]_{q_i} Sym(x_i^{⋆r} ⋆ x_j ⋆ x_i^{⋆(N−r)})` with `N = 1 − a_ij`. The
/// `x_i` letters carry `z_1, …, z_N`, the `x_j` letter `z_{N+1}`; `Sym` is the plain sum
/// over permutations of `z_1, …, z_N`.
pub fn serre_element(cartan: &CartanData, i: Node, j: Node) -> Result<ShuffleElement> {
    serre_element_with_base(cartan, i, j, cartan.d(i))
}

/// [`serre_element`] with the binomial base `q^base_exp` in place of `q_i`.
pub fn serre_element_with_base(cartan: &CartanData, i: Node, j: Node, base_exp: i64) -> Result<ShuffleElement> {
    cartan.check_node(i)?;
    cartan.check_node(j)?;
    if i == j {
        return Err(Error::OutOfRange("the Serre element needs two distinct nodes".into()));
    }
    let n = (1 - cartan.a(i, j)) as usize;
    let mut total = ShuffleElement::zero();
    for r in 0..=n {
        let mut prod = ShuffleElement::one();
        for v in 1..=r {
            prod = shuffle_disjoint(cartan, &prod, &ShuffleElement::letter(i, v))?;
        }
        prod = shuffle_disjoint(cartan, &prod, &ShuffleElement::letter(j, n + 1))?;
        for v in r + 1..=n {
            prod = shuffle_disjoint(cartan, &prod, &ShuffleElement::letter(i, v))?;
        }
        let sign = if r % 2 == 0 { Scalar::one() } else { -Scalar::one() };
        let c = &sign * &qbinomial(n as i64, r as i64, base_exp)?;
        total.extend(&prod.scaled(&c));
    }
    let mut sym = ShuffleElement::zero();
    for p in permutations(n) {
        sym.extend(&total.rename(|v| if v <= n { p[v - 1] + 1 } else { v }));
    }
    Ok(sym)
}

/// `(z_1 − q_ij z_2)(x_i(z_1) ⋆ x_j(z_2)) − (q_ij z_1 − z_2)(x_j(z_2) ⋆ x_i(z_1))`.
pub fn relation13_image(cartan: &CartanData, i: Node, j: Node) -> Result<ShuffleElement> {
    cartan.check_node(i)?;
    cartan.check_node(j)?;
    let e = braid_exponent(cartan, i, j);
    let (xi, xj) = (ShuffleElement::letter(i, 1), ShuffleElement::letter(j, 2));
    let ij = shuffle_disjoint(cartan, &xi, &xj)?.times(&FactoredRational::linear(0, 1, e, 2));
    let ji = shuffle_disjoint(cartan, &xj, &xi)?.times(&FactoredRational::linear(e, 1, 0, 2));
    Ok(ij.sub(&ji))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn preset(name: &str) -> CartanData {
        CartanData::preset(name).unwrap()
    }

    #[test]
    fn sigma_on_two_letters() {
        let c = preset("A2");
        let t = sigma(&c, &CurrentTensor::new(&[1, 2]), 1).unwrap();
        assert_eq!(t.letters, vec![(2, 2), (1, 1)]);
        assert_eq!(t.f, FactoredRational::kernel(-1, 1, 2));
        assert!(sigma(&c, &t, 2).is_err());
    }

    #[test]
    fn shuffle_counts() {
        assert_eq!(shuffles(2, 2).len(), 6);
        assert_eq!(shuffles(0, 3), vec![vec![0, 1, 2]]);
        assert_eq!(reduced_words(&[2, 1, 0]).len(), 2);
        assert_eq!(reduced_words(&[3, 2, 1, 0]).len(), 16);
    }

    #[test]
    fn serre_vanishes_on_a2() {
        let c = preset("A2");
        for (i, j) in [(1, 2), (2, 1)] {
            assert!(serre_element(&c, i, j).unwrap().is_zero());
        }
    }

    #[test]
    fn serre_vanishes_on_b2() {
        let c = preset("B2");
        for (i, j) in [(1, 2), (2, 1)] {
            assert!(serre_element(&c, i, j).unwrap().is_zero());
        }
    }

    #[test]
    fn wrong_binomial_base_is_detected() {
        let c = preset("B2");
        assert!(!serre_element_with_base(&c, 1, 2, 2).unwrap().is_zero());
        assert!(!serre_element_with_base(&c, 2, 1, 1).unwrap().is_zero());
    }

    #[test]
    fn relation13_vanishes() {
        for name in ["A1", "A2", "B2", "G2"] {
            let c = preset(name);
            for i in c.nodes() {
                for j in c.nodes() {
                    assert!(relation13_image(&c, i, j).unwrap().is_zero(), "{name} ({i},{j})");
                }
            }
        }
    }
}

#[cfg(test)]
mod g2 {
    use super::*;

    #[test]
    fn serre_vanishes_on_g2() {
        let c = CartanData::preset("G2").unwrap();
        for (i, j) in [(1, 2), (2, 1)] {
            assert!(serre_element(&c, i, j).unwrap().is_zero(), "({i},{j})");
        }
    }
}
