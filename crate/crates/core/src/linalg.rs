//! Exact Gaussian elimination over ℚ(q).

use crate::scalar::Scalar;

/// Row echelon form; returns the reduced rows and the pivot columns.
pub fn echelon(rows: &[Vec<Scalar>]) -> (Vec<Vec<Scalar>>, Vec<usize>) {
    let mut m: Vec<Vec<Scalar>> = rows.to_vec();
    let ncols = m.first().map_or(0, Vec::len);
    let mut pivots = Vec::new();
    let mut r = 0;
    for c in 0..ncols {
        let Some(p) = (r..m.len()).find(|&i| !m[i][c].is_zero()) else { continue };
        m.swap(r, p);
        let inv = m[r][c].inv().expect("pivot is nonzero");
        for x in m[r].iter_mut() {
            *x = &*x * &inv;
        }
        let pivot = m[r].clone();
        for (i, row) in m.iter_mut().enumerate() {
            if i != r && !row[c].is_zero() {
                let f = row[c].clone();
                for (x, p) in row[c..ncols].iter_mut().zip(&pivot[c..ncols]) {
                    *x -= &(&f * p);
                }
            }
        }
        pivots.push(c);
        r += 1;
        if r == m.len() {
            break;
        }
    }
    m.truncate(r);
    (m, pivots)
}

pub fn rank(rows: &[Vec<Scalar>]) -> usize {
    echelon(rows).1.len()
}

/// Determinant of a square matrix.
pub fn determinant(rows: &[Vec<Scalar>]) -> Scalar {
    let n = rows.len();
    let mut m = rows.to_vec();
    let mut det = Scalar::one();
    for c in 0..n {
        let Some(p) = (c..n).find(|&i| !m[i][c].is_zero()) else { return Scalar::zero() };
        if p != c {
            m.swap(p, c);
            det = -det;
        }
        det = &det * &m[c][c];
        let inv = m[c][c].inv().expect("pivot is nonzero");
        for i in c + 1..n {
            if m[i][c].is_zero() {
                continue;
            }
            let f = &m[i][c] * &inv;
            let pivot = m[c].clone();
            for (x, p) in m[i][c..n].iter_mut().zip(&pivot[c..n]) {
                *x -= &(&f * p);
            }
        }
    }
    det
}

#[cfg(test)]
mod tests {
    use super::*;

    fn s(k: i64) -> Scalar {
        Scalar::from_int(k)
    }

    #[test]
    fn rank_and_det() {
        let q = Scalar::q_pow(1);
        let m = vec![vec![s(1), q.clone()], vec![q.clone(), &q * &q]];
        assert_eq!(rank(&m), 1);
        assert!(determinant(&m).is_zero());
        let m = vec![vec![s(1), q.clone()], vec![s(0), s(2)]];
        assert_eq!(rank(&m), 2);
        assert_eq!(determinant(&m), s(2));
    }
}
