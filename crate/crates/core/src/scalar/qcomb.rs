//! Quantum integers and quantum binomial coefficients.

use super::field::Scalar;
use crate::error::{Error, Result};

/// Quantum integer `[n]_b = (b^n - b^{-n}) / (b - b^{-1})` for a base `b = q^d`, `d != 0`.
///
/// Evaluated in closed form as `b^{n-1} + b^{n-3} + ... + b^{1-n}`.
pub fn qint(n: i64, base_exp: i64) -> Scalar {
    assert!(base_exp != 0, "quantum integers need a non-trivial base");
    if n < 0 {
        return -qint(-n, base_exp);
    }
    let terms: Vec<(i64, i64)> = (0..n).map(|k| ((n - 1 - 2 * k) * base_exp, 1)).collect();
    Scalar::laurent(&terms)
}

/// `[n]_b!`.
pub fn qfactorial(n: i64, base_exp: i64) -> Scalar {
    (1..=n).map(|k| qint(k, base_exp)).product()
}

/// Quantum binomial `[n choose p]_b`, via the q-Pascal recurrence so the result
/// is built as a Laurent polynomial without division.
pub fn qbinomial(n: i64, p: i64, base_exp: i64) -> Result<Scalar> {
    if n < 0 || p < 0 || p > n {
        return Err(Error::OutOfRange(format!("quantum binomial needs 0 <= p <= n, got n = {n}, p = {p}")));
    }
    // row[k] = [m choose k]
    let mut row = vec![Scalar::one()];
    for m in 1..=n {
        let mut next = Vec::with_capacity(m as usize + 1);
        for k in 0..=m {
            let mut v = Scalar::zero();
            if k < m {
                v += &(Scalar::q_pow(k * base_exp) * &row[k as usize]);
            }
            if k > 0 {
                v += &(Scalar::q_pow(-(m - k) * base_exp) * &row[k as usize - 1]);
            }
            next.push(v);
        }
        row = next;
    }
    Ok(row.swap_remove(p as usize))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn defining_formula(n: i64, d: i64) -> Scalar {
        let b = Scalar::q_pow(d);
        let bi = Scalar::q_pow(-d);
        (b.pow(n).unwrap() - bi.pow(n).unwrap()).checked_div(&(b - bi)).unwrap()
    }

    #[test]
    fn small_quantum_integers() {
        assert!(qint(1, 1).is_one());
        assert_eq!(qint(2, 1), Scalar::laurent(&[(1, 1), (-1, 1)]));
        assert_eq!(qint(3, 1), Scalar::laurent(&[(2, 1), (0, 1), (-2, 1)]));
        assert!(qint(0, 1).is_zero());
    }

    #[test]
    fn closed_form_matches_defining_quotient() {
        for d in 1..=3 {
            for n in 0..=8 {
                assert_eq!(qint(n, d), defining_formula(n, d), "n={n} d={d}");
            }
        }
    }

    #[test]
    fn binomial_matches_factorial_oracle() {
        for d in 1..=2 {
            for n in 0..=8 {
                for p in 0..=n {
                    let oracle = qfactorial(n, d).checked_div(&(qfactorial(p, d) * qfactorial(n - p, d))).unwrap();
                    let got = qbinomial(n, p, d).unwrap();
                    assert_eq!(got, oracle, "n={n} p={p} d={d}");
                    assert!(got.is_laurent());
                    assert_eq!(got, qbinomial(n, n - p, d).unwrap());
                    assert_eq!(got, got.bar());
                }
            }
        }
    }

    #[test]
    fn binomial_edge_values() {
        assert!(qbinomial(5, 0, 1).unwrap().is_one());
        assert_eq!(qbinomial(2, 1, 1).unwrap(), qint(2, 1));
        // [4 choose 2] = q^4 + q^2 + 2 + q^-2 + q^-4
        assert_eq!(qbinomial(4, 2, 1).unwrap(), Scalar::laurent(&[(4, 1), (2, 1), (0, 2), (-2, 1), (-4, 1)]));
        assert!(qbinomial(3, 4, 1).is_err());
        assert!(qbinomial(3, -1, 1).is_err());
    }

    #[test]
    fn integers_are_bar_invariant() {
        for n in 0..=8 {
            assert_eq!(qint(n, 1), qint(n, 1).bar());
            assert_eq!(qint(n, 1), qint(n, -1));
        }
    }
}
