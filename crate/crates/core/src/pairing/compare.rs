use super::basis::monomials;
use super::convention::PairingConvention;
use super::fast::pair_words;
use super::oracle::PairingOracle;
use crate::cartan::{CartanData, RootDegree};
use crate::error::Result;
use crate::modes::Side;
use crate::report::VerificationReport;

/// Positive Q-degrees of height `1..=max_height`.
pub fn degrees_up_to(rank: usize, max_height: i64) -> Vec<RootDegree> {
    let mut out = Vec::new();
    let mut cur = vec![0i64; rank];
    fn go(k: usize, left: i64, cur: &mut Vec<i64>, out: &mut Vec<RootDegree>) {
        if k == cur.len() {
            if cur.iter().sum::<i64>() > 0 {
                out.push(RootDegree(cur.clone()));
            }
            return;
        }
        for c in 0..=left {
            cur[k] = c;
            go(k + 1, left - c, cur, out);
        }
        cur[k] = 0;
    }
    go(0, max_height, &mut cur, &mut out);
    out
}

/// Compares the fast evaluator with the axiom oracle on every pair of straightened
/// monomials with at most `max_x` x letters and `max_cartan` Cartan letters per side.
pub fn compare_with_oracle(
    cartan: &CartanData,
    conv: PairingConvention,
    max_x: i64,
    window: i64,
    max_cartan: usize,
) -> Result<VerificationReport> {
    let mut report = VerificationReport::new("pairing-vs-oracle")
        .param("cartan", cartan.name())
        .param("convention", conv)
        .param("max_x_letters", max_x)
        .param("window", window)
        .param("max_cartan_letters", max_cartan);
    let mut oracle = PairingOracle::new(cartan, conv);
    let mut pairs = 0u64;
    let mut nonzero = 0u64;
    let mut degrees = vec![RootDegree::zero(cartan.rank())];
    degrees.extend(degrees_up_to(cartan.rank(), max_x));
    let span = window * (max_x + max_cartan as i64);
    for d in &degrees {
        for s in -span..=span {
            let plus = monomials(cartan.rank(), Side::Plus, d, s, window, max_cartan);
            if plus.is_empty() {
                continue;
            }
            let minus = monomials(cartan.rank(), Side::Minus, d, -s, window, max_cartan);
            for a in &plus {
                for b in &minus {
                    pairs += 1;
                    let slow = oracle.pair_words(&a.letters, &b.letters);
                    let fast = pair_words(cartan, conv, a, b)?;
                    if !fast.is_zero() {
                        nonzero += 1;
                    }
                    if fast != slow {
                        report.fail(format!("⟨{a}, {b}⟩: evaluator {fast}, oracle {slow}"));
                    }
                }
            }
        }
    }
    report.note(format!("{pairs} pairs compared, {nonzero} nonzero"));
    report.note(format!(
        "oracle expanded {} summands in total; every expansion is a finite enumeration",
        oracle.summands()
    ));
    Ok(report)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn small_sweep() {
        let c = CartanData::preset("A2").unwrap();
        let r = compare_with_oracle(&c, PairingConvention::QPlus, 2, 1, 1).unwrap();
        assert!(r.passed(), "{r}");
    }
}
