use super::convention::PairingConvention;
use super::oracle::graded_match;
use crate::cartan::CartanData;
use crate::error::Result;
use crate::modes::{require_straightened, straighten, GenKind, Generator, ModeElement, ModeWord, Side};
use crate::scalar::Scalar;

/// Pairing of straightened elements via `⟨XΦ, YΨ⟩ = ⟨X, Y⟩⟨Φ, Ψ⟩`. Central units are ignored.
pub fn pair(cartan: &CartanData, conv: PairingConvention, u: &ModeElement, v: &ModeElement) -> Result<Scalar> {
    u.check_side(Side::Plus)?;
    v.check_side(Side::Minus)?;
    require_straightened(u)?;
    require_straightened(v)?;
    let mut total = Scalar::zero();
    for (a, c) in u.terms() {
        for (b, d) in v.terms() {
            let p = pair_words(cartan, conv, a, b)?;
            if !p.is_zero() {
                total += &(&(c * d) * &p);
            }
        }
    }
    Ok(total)
}

/// Straightens both arguments, then pairs them.
pub fn pair_any(cartan: &CartanData, conv: PairingConvention, u: &ModeElement, v: &ModeElement) -> Result<Scalar> {
    u.check_side(Side::Plus)?;
    v.check_side(Side::Minus)?;
    pair(cartan, conv, &straighten(cartan, u)?, &straighten(cartan, v)?)
}

pub fn pair_words(cartan: &CartanData, conv: PairingConvention, a: &ModeWord, b: &ModeWord) -> Result<Scalar> {
    if !graded_match(cartan.rank(), &a.letters, &b.letters) {
        return Ok(Scalar::zero());
    }
    let (xs, phis) = a.split_blocks()?;
    let (ys, psis) = b.split_blocks()?;
    let x = pair_x_blocks(cartan, conv, xs, ys);
    if x.is_zero() {
        return Ok(x);
    }
    Ok(&x * &pair_cartan_blocks(cartan, phis, psis))
}

/// `⟨x^+ ⋯ x^+, x^- ⋯ x^-⟩` by matching letters to coproduct slots.
pub fn pair_x_blocks(cartan: &CartanData, conv: PairingConvention, xs: &[Generator], ys: &[Generator]) -> Scalar {
    let k = xs.len();
    if k != ys.len() {
        return Scalar::zero();
    }
    if k == 0 {
        return Scalar::one();
    }
    let c = conv.x_constant();
    let mut total = Scalar::zero();
    let mut lam = Vec::with_capacity(k);
    let mut used = vec![false; k];
    for_each_matching(xs, ys, 0, &mut lam, &mut used, &mut |lam| {
        let mut slot_of = vec![0usize; k];
        for (p, &l) in lam.iter().enumerate() {
            slot_of[l] = p;
        }
        let mut r = vec![vec![0i64; k]; k];
        let s = solve_slots(cartan, xs, ys, lam, &slot_of, k, &mut r);
        if !s.is_zero() {
            total += &s;
        }
    });
    if total.is_zero() {
        return total;
    }
    &total * &c.pow(k as i64).expect("nonzero constant")
}

fn for_each_matching(
    xs: &[Generator],
    ys: &[Generator],
    p: usize,
    lam: &mut Vec<usize>,
    used: &mut [bool],
    f: &mut impl FnMut(&[usize]),
) {
    if p == ys.len() {
        f(lam);
        return;
    }
    for l in 0..xs.len() {
        if !used[l] && xs[l].node == ys[p].node {
            used[l] = true;
            lam.push(l);
            for_each_matching(xs, ys, p + 1, lam, used, f);
            lam.pop();
            used[l] = false;
        }
    }
}

/// Processes slots from the last to the first. `r[l][p]` is the (nonpositive) mode of
/// the φ that letter `l` leaves in slot `p` before landing in its own slot.
fn solve_slots(
    cartan: &CartanData,
    xs: &[Generator],
    ys: &[Generator],
    lam: &[usize],
    slot_of: &[usize],
    p: usize,
    r: &mut Vec<Vec<i64>>,
) -> Scalar {
    if p == 0 {
        return Scalar::one();
    }
    let p = p - 1;
    let l0 = lam[p];
    let y = ys[p];
    let mut factor = Scalar::one();
    let mut incoming = 0i64;
    for l in 0..l0 {
        if slot_of[l] > p {
            incoming += r[l][p];
            factor = &factor * &cartan.g(xs[l].node, y.node, (-r[l][p]) as usize);
            if factor.is_zero() {
                return factor;
            }
        }
    }
    let t = xs[l0].mode + y.mode + incoming;
    if t > 0 {
        return Scalar::zero();
    }
    let eligible: Vec<usize> = (0..p).filter(|&p2| lam[p2] > l0).collect();
    let mut total = Scalar::zero();
    distribute(-t, &eligible, 0, &mut |parts| {
        for (idx, &p2) in eligible.iter().enumerate() {
            r[l0][p2] = -parts[idx];
        }
        let rest = solve_slots(cartan, xs, ys, lam, slot_of, p, r);
        if !rest.is_zero() {
            total += &rest;
        }
        for &p2 in &eligible {
            r[l0][p2] = 0;
        }
    });
    &total * &factor
}

/// Calls `f` on every composition of `n` into `slots.len()` nonnegative parts.
fn distribute(n: i64, slots: &[usize], k: usize, f: &mut impl FnMut(&[i64])) {
    fn go(n: i64, len: usize, parts: &mut Vec<i64>, f: &mut impl FnMut(&[i64])) {
        if parts.len() + 1 == len {
            parts.push(n);
            f(parts);
            parts.pop();
            return;
        }
        for a in 0..=n {
            parts.push(a);
            go(n - a, len, parts, f);
            parts.pop();
        }
    }
    debug_assert_eq!(k, 0);
    if slots.is_empty() {
        if n == 0 {
            f(&[]);
        }
        return;
    }
    go(n, slots.len(), &mut Vec::with_capacity(slots.len()), f);
}

/// `⟨Φ, Ψ⟩` as a sum over contingency tables of mode transfers.
pub fn pair_cartan_blocks(cartan: &CartanData, phis: &[Generator], psis: &[Generator]) -> Scalar {
    let rows: Vec<i64> = phis.iter().map(|g| -g.mode).collect();
    let mut cols: Vec<i64> = psis.iter().map(|g| g.mode).collect();
    if rows.iter().sum::<i64>() != cols.iter().sum::<i64>() {
        return Scalar::zero();
    }
    table(cartan, phis, psis, 0, &rows, &mut cols)
}

fn entry(cartan: &CartanData, a: Generator, b: Generator, e: i64) -> Scalar {
    let ainv = a.kind == GenKind::PhiZeroInv;
    let binv = b.kind == GenKind::PsiZeroInv;
    match (ainv, binv) {
        (false, false) => cartan.g(a.node, b.node, e as usize),
        (true, true) => cartan.g(a.node, b.node, 0),
        _ if e == 0 => cartan.g_inv(a.node, b.node, 0),
        _ => Scalar::zero(),
    }
}

fn table(
    cartan: &CartanData,
    phis: &[Generator],
    psis: &[Generator],
    s: usize,
    rows: &[i64],
    cols: &mut Vec<i64>,
) -> Scalar {
    if s == phis.len() {
        return if cols.iter().all(|&c| c == 0) { Scalar::one() } else { Scalar::zero() };
    }
    let mut total = Scalar::zero();
    let mut row = Vec::with_capacity(psis.len());
    fill_row(cartan, phis, psis, s, rows, cols, 0, rows[s], Scalar::one(), &mut row, &mut total);
    total
}

#[allow(clippy::too_many_arguments)]
fn fill_row(
    cartan: &CartanData,
    phis: &[Generator],
    psis: &[Generator],
    s: usize,
    rows: &[i64],
    cols: &mut Vec<i64>,
    t: usize,
    left: i64,
    acc: Scalar,
    row: &mut Vec<i64>,
    total: &mut Scalar,
) {
    if t == psis.len() {
        if left == 0 {
            let rest = table(cartan, phis, psis, s + 1, rows, cols);
            if !rest.is_zero() {
                *total += &(&acc * &rest);
            }
        }
        return;
    }
    for e in 0..=left.min(cols[t]) {
        let v = entry(cartan, phis[s], psis[t], e);
        if v.is_zero() {
            continue;
        }
        cols[t] -= e;
        row.push(e);
        fill_row(cartan, phis, psis, s, rows, cols, t + 1, left - e, &acc * &v, row, total);
        row.pop();
        cols[t] += e;
    }
}

#[cfg(test)]
mod tests {
    use super::super::oracle::PairingOracle;
    use super::*;

    fn w(letters: Vec<Generator>) -> ModeWord {
        ModeWord::from_letters(letters)
    }

    #[test]
    fn base_value_through_fast_route() {
        let c = CartanData::preset("A2").unwrap();
        let v = pair_words(&c, PairingConvention::QPlus, &w(vec![Generator::xp(1, 3)]), &w(vec![Generator::xm(1, -3)]))
            .unwrap();
        assert_eq!(v, PairingConvention::QPlus.x_constant());
    }

    #[test]
    fn agrees_with_oracle_on_samples() {
        let c = CartanData::preset("A2").unwrap();
        let conv = PairingConvention::QPlus;
        let mut o = PairingOracle::new(&c, conv);
        let cases = vec![
            (vec![Generator::xp(1, 1), Generator::xp(1, 0)], vec![Generator::xm(1, 0), Generator::xm(1, -1)]),
            (vec![Generator::xp(1, 1), Generator::xp(2, -1)], vec![Generator::xm(2, 0), Generator::xm(1, 0)]),
            (vec![Generator::xp(1, 0), Generator::phi(2, -1)], vec![Generator::xm(1, 1), Generator::psi(1, 0)]),
            (
                vec![Generator::xp(2, 1), Generator::xp(1, -1), Generator::xp(2, 0)],
                vec![Generator::xm(1, 1), Generator::xm(2, 0), Generator::xm(2, -1)],
            ),
            (vec![Generator::phi(1, -1), Generator::phi0inv(2)], vec![Generator::psi(1, 1), Generator::psi0inv(2)]),
        ];
        for (a, b) in cases {
            let fast = pair_words(&c, conv, &w(a.clone()), &w(b.clone())).unwrap();
            let slow = o.pair_words(&a, &b);
            assert_eq!(fast, slow, "{a:?} vs {b:?}");
        }
    }
}
