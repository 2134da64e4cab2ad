use super::basis::x_words;
use super::convention::PairingConvention;
use super::fast::pair_words;
use super::relations::{rel13_instances, serre_instances};
use crate::cartan::{CartanData, RootDegree};
use crate::error::Result;
use crate::linalg::{determinant, rank};
use crate::modes::{ModeElement, ModeWord, Side};
use crate::report::VerificationReport;
use crate::scalar::Scalar;

/// Gram matrix of the pairing on pure x words of a fixed degree and mode sum.
#[derive(Clone, Debug)]
pub struct Gram {
    pub rows: Vec<ModeWord>,
    pub cols: Vec<ModeWord>,
    pub matrix: Vec<Vec<Scalar>>,
    pub rank: usize,
    pub determinant: Option<Scalar>,
    /// Dimension of the span of in-window relation multiples among the row words.
    pub relation_span: usize,
}

impl Gram {
    pub fn expected_rank(&self) -> usize {
        self.rows.len() - self.relation_span
    }
}

pub fn gram_matrix(
    cartan: &CartanData,
    conv: PairingConvention,
    degree: &RootDegree,
    modesum: i64,
    window: i64,
) -> Result<Gram> {
    let rows = x_words(degree, modesum, window, Side::Plus);
    let cols = x_words(degree, -modesum, window, Side::Minus);
    let mut matrix = Vec::with_capacity(rows.len());
    for a in &rows {
        let mut row = Vec::with_capacity(cols.len());
        for b in &cols {
            row.push(pair_words(cartan, conv, a, b)?);
        }
        matrix.push(row);
    }
    let r = rank(&matrix);
    let det = (rows.len() == cols.len() && !rows.is_empty()).then(|| determinant(&matrix));
    let relation_span = relation_span(cartan, degree, modesum, window, &rows)?;
    Ok(Gram { rows, cols, matrix, rank: r, determinant: det, relation_span })
}

/// Dimension of the span of `u · r · v` for relation instances `r` (the quadratic exchange relation for
/// every node pair, Serre relations) and x words `u`, `v`, all words inside the window.
fn relation_span(
    cartan: &CartanData,
    degree: &RootDegree,
    modesum: i64,
    window: i64,
    rows: &[ModeWord],
) -> Result<usize> {
    let mut rels: Vec<ModeElement> = rel13_instances(cartan, window).into_iter().map(|r| r.element).collect();
    for i in cartan.nodes() {
        for j in cartan.nodes() {
            if i != j && 1 - cartan.a(i, j) < degree.height() {
                rels.extend(serre_instances(cartan, i, j, window)?.into_iter().map(|r| r.element));
            }
        }
    }
    let index: std::collections::HashMap<&ModeWord, usize> = rows.iter().enumerate().map(|(k, w)| (w, k)).collect();
    let mut vectors = Vec::new();
    for rel in rels {
        let (Some(d), Some(s)) = (rel.q_degree(cartan.rank()), rel.mode_sum()) else { continue };
        let rest = degree - &d;
        if !rest.is_positive() {
            continue;
        }
        for (dl, dr) in splits(&rest) {
            let span = window * rest.height();
            for sl in -span..=span {
                let sr = modesum - s - sl;
                let lefts = if dl.is_zero() {
                    if sl == 0 {
                        vec![ModeWord::one()]
                    } else {
                        vec![]
                    }
                } else {
                    x_words(&dl, sl, window, Side::Plus)
                };
                if lefts.is_empty() {
                    continue;
                }
                let rights = if dr.is_zero() {
                    if sr == 0 {
                        vec![ModeWord::one()]
                    } else {
                        vec![]
                    }
                } else {
                    x_words(&dr, sr, window, Side::Plus)
                };
                for u in &lefts {
                    for v in &rights {
                        let e = &(&ModeElement::from_word(u.clone()) * &rel) * &ModeElement::from_word(v.clone());
                        let mut vec = vec![Scalar::zero(); rows.len()];
                        let mut inside = true;
                        for (w, c) in e.terms() {
                            match index.get(w) {
                                Some(&k) => vec[k] = c.clone(),
                                None => inside = false,
                            }
                        }
                        if inside && !e.is_zero() {
                            vectors.push(vec);
                        }
                    }
                }
            }
        }
    }
    Ok(if vectors.is_empty() { 0 } else { rank(&vectors) })
}

fn splits(d: &RootDegree) -> Vec<(RootDegree, RootDegree)> {
    let mut out = vec![(RootDegree(Vec::new()), RootDegree(Vec::new()))];
    for &c in &d.0 {
        let mut next = Vec::new();
        for (l, r) in &out {
            for a in 0..=c {
                let mut l2 = l.clone();
                let mut r2 = r.clone();
                l2.0.push(a);
                r2.0.push(c - a);
                next.push((l2, r2));
            }
        }
        out = next;
    }
    out
}

/// Full-rank probe: passes iff the rank equals the number of row words minus the
/// dimension of the in-window relation span.
pub fn gram_report(
    cartan: &CartanData,
    conv: PairingConvention,
    degree: &RootDegree,
    modesum: i64,
    window: i64,
) -> Result<(Gram, VerificationReport)> {
    let g = gram_matrix(cartan, conv, degree, modesum, window)?;
    let mut r = VerificationReport::new("gram")
        .param("cartan", cartan.name())
        .param("convention", conv)
        .param("degree", degree)
        .param("modesum", modesum)
        .param("window", window);
    r.note(format!("{} x {} matrix, rank {}", g.rows.len(), g.cols.len(), g.rank));
    r.note(format!("relation span {}, expected rank {}", g.relation_span, g.expected_rank()));
    if let Some(d) = &g.determinant {
        r.note(format!("determinant {d}"));
    }
    if g.rows.is_empty() {
        r.note("empty basis");
    } else if g.rank != g.expected_rank() {
        r.fail(format!("rank {} but expected {}", g.rank, g.expected_rank()));
    }
    Ok((g, r))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn single_letter() {
        let c = CartanData::preset("A2").unwrap();
        let (g, r) = gram_report(&c, PairingConvention::QPlus, &RootDegree(vec![1, 0]), 0, 0).unwrap();
        assert!(r.passed());
        assert_eq!(g.matrix, vec![vec![PairingConvention::QPlus.x_constant()]]);
    }

    #[test]
    fn mixed_degree_window_one() {
        let c = CartanData::preset("A2").unwrap();
        for s in -1..=1 {
            let (g, r) = gram_report(&c, PairingConvention::QPlus, &RootDegree(vec![1, 1]), s, 1).unwrap();
            assert!(r.passed(), "{r}");
            if s == 0 {
                assert_eq!(g.rows.len(), 6);
                assert_eq!(g.rank, 4);
            }
        }
    }
}
