use crate::cartan::RootDegree;
use crate::modes::{Generator, ModeWord, Side};

/// Distinct orderings of the node multiset described by `degree`.
pub fn node_sequences(degree: &RootDegree) -> Vec<Vec<usize>> {
    let mut counts: Vec<i64> = degree.0.iter().map(|c| c.abs()).collect();
    let len: i64 = counts.iter().sum();
    let mut out = Vec::new();
    let mut cur = Vec::new();
    fn go(counts: &mut [i64], len: usize, cur: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if cur.len() == len {
            out.push(cur.clone());
            return;
        }
        for i in 0..counts.len() {
            if counts[i] > 0 {
                counts[i] -= 1;
                cur.push(i + 1);
                go(counts, len, cur, out);
                cur.pop();
                counts[i] += 1;
            }
        }
    }
    go(&mut counts, len as usize, &mut cur, &mut out);
    out
}

/// Integer sequences of length `len` with entries in `[lo, hi]` summing to `sum`.
pub fn mode_sequences(len: usize, lo: i64, hi: i64, sum: i64) -> Vec<Vec<i64>> {
    let mut out = Vec::new();
    let mut cur = Vec::with_capacity(len);
    fn go(len: usize, lo: i64, hi: i64, sum: i64, cur: &mut Vec<i64>, out: &mut Vec<Vec<i64>>) {
        let left = (len - cur.len()) as i64;
        if left == 0 {
            if sum == 0 {
                out.push(cur.clone());
            }
            return;
        }
        if sum < lo * left || sum > hi * left {
            return;
        }
        for m in lo..=hi {
            cur.push(m);
            go(len, lo, hi, sum - m, cur, out);
            cur.pop();
        }
    }
    go(len, lo, hi, sum, &mut cur, &mut out);
    out
}

/// Pure x words of the given side, Q-degree `±degree`, mode sum and window.
pub fn x_words(degree: &RootDegree, modesum: i64, window: i64, side: Side) -> Vec<ModeWord> {
    let mut out = Vec::new();
    for nodes in node_sequences(degree) {
        for modes in mode_sequences(nodes.len(), -window, window, modesum) {
            let letters = nodes
                .iter()
                .zip(&modes)
                .map(|(&i, &m)| match side {
                    Side::Plus => Generator::xp(i, m),
                    Side::Minus => Generator::xm(i, m),
                })
                .collect();
            out.push(ModeWord::from_letters(letters));
        }
    }
    out
}

/// Sorted Cartan blocks with at most `max_letters` letters, modes within the window and the given mode sum.
pub fn cartan_blocks(rank: usize, side: Side, max_letters: usize, window: i64, modesum: i64) -> Vec<Vec<Generator>> {
    let mut alphabet = Vec::new();
    for i in 1..=rank {
        match side {
            Side::Plus => {
                alphabet.extend((0..=window).map(|k| Generator::phi(i, -k)));
                alphabet.push(Generator::phi0inv(i));
            }
            Side::Minus => {
                alphabet.extend((0..=window).map(|k| Generator::psi(i, k)));
                alphabet.push(Generator::psi0inv(i));
            }
        }
    }
    alphabet.sort_by_key(|g| (g.node, g.kind, g.mode));
    let mut out = Vec::new();
    let mut cur = Vec::new();
    fn go(
        alpha: &[Generator],
        start: usize,
        max: usize,
        sum: i64,
        cur: &mut Vec<Generator>,
        out: &mut Vec<Vec<Generator>>,
    ) {
        if sum == 0 {
            out.push(cur.clone());
        }
        if cur.len() == max {
            return;
        }
        for k in start..alpha.len() {
            cur.push(alpha[k]);
            go(alpha, k, max, sum - alpha[k].mode, cur, out);
            cur.pop();
        }
    }
    go(&alphabet, 0, max_letters, modesum, &mut cur, &mut out);
    out
}

/// Straightened monomials: an x word followed by a sorted Cartan block of at most `max_cartan` letters.
pub fn monomials(
    rank: usize,
    side: Side,
    degree: &RootDegree,
    modesum: i64,
    window: i64,
    max_cartan: usize,
) -> Vec<ModeWord> {
    let x_len: i64 = degree.0.iter().map(|c| c.abs()).sum();
    let mut out = Vec::new();
    let span = window * (max_cartan as i64);
    for cartan_sum in -span..=span {
        let xs_sum = modesum - cartan_sum;
        if xs_sum.abs() > window * x_len {
            continue;
        }
        let blocks = cartan_blocks(rank, side, max_cartan, window, cartan_sum);
        if blocks.is_empty() {
            continue;
        }
        for xw in x_words(degree, xs_sum, window, side) {
            for b in &blocks {
                let mut letters = xw.letters.clone();
                letters.extend_from_slice(b);
                out.push(ModeWord::from_letters(letters));
            }
        }
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn counts() {
        let d = RootDegree(vec![1, 1]);
        assert_eq!(x_words(&d, 0, 1, Side::Plus).len(), 6);
        assert_eq!(node_sequences(&RootDegree(vec![2, 1])).len(), 3);
        let blocks = cartan_blocks(1, Side::Plus, 2, 1, -1);
        assert!(blocks.iter().all(|b| b.iter().map(|g| g.mode).sum::<i64>() == -1));
    }
}
