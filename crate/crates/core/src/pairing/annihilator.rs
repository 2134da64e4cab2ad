use super::basis::monomials;
use super::convention::PairingConvention;
use super::fast::pair_words;
use super::oracle::PairingOracle;
use super::relations::Relation;
use crate::cartan::{CartanData, RootDegree};
use crate::error::{Error, Result};
use crate::modes::{ModeElement, ModeWord, Side};
use crate::report::VerificationReport;
use crate::scalar::Scalar;

/// Evaluates pairings word by word: straightened words use the fast evaluator, all
/// other words the axiom oracle.
pub struct Evaluator<'a> {
    cartan: &'a CartanData,
    conv: PairingConvention,
    oracle: PairingOracle<'a>,
}

impl<'a> Evaluator<'a> {
    pub fn new(cartan: &'a CartanData, conv: PairingConvention) -> Self {
        Evaluator { cartan, conv, oracle: PairingOracle::new(cartan, conv) }
    }

    pub fn pair_words(&mut self, a: &ModeWord, b: &ModeWord) -> Result<Scalar> {
        if a.is_straightened() && b.is_straightened() {
            pair_words(self.cartan, self.conv, a, b)
        } else {
            Ok(self.oracle.pair_words(&a.letters, &b.letters))
        }
    }

    pub fn pair(&mut self, u: &ModeElement, v: &ModeElement) -> Result<Scalar> {
        u.check_side(Side::Plus)?;
        v.check_side(Side::Minus)?;
        let mut total = Scalar::zero();
        for (a, c) in u.terms() {
            for (b, d) in v.terms() {
                let p = self.pair_words(a, b)?;
                if !p.is_zero() {
                    total += &(&(c * d) * &p);
                }
            }
        }
        Ok(total)
    }
}

/// Pairs a homogeneous relation against every opposite straightened monomial of
/// matching degree whose modes lie in the window and which carries at most
/// `max_cartan` Cartan letters. Passes iff every value is zero.
pub fn annihilator_check(
    eval: &mut Evaluator<'_>,
    rel: &Relation,
    window: i64,
    max_cartan: usize,
) -> Result<VerificationReport> {
    let cartan = eval.cartan;
    let mut report = VerificationReport::new("annihilator")
        .param("relation", &rel.name)
        .param("window", window)
        .param("max_cartan_letters", max_cartan);
    let e = &rel.element;
    if e.is_zero() {
        report.note("relation is identically zero in the free algebra");
        return Ok(report);
    }
    let side = e.side()?.unwrap_or(Side::Plus);
    let degree =
        e.q_degree(cartan.rank()).ok_or_else(|| Error::OutOfRange(format!("{} is not Q-homogeneous", rel.name)))?;
    let modesum = e.mode_sum().ok_or_else(|| Error::OutOfRange(format!("{} is not mode-homogeneous", rel.name)))?;
    let abs = RootDegree(degree.0.iter().map(|c| c.abs()).collect());
    let opponents = monomials(cartan.rank(), side.opposite(), &abs, -modesum, window, max_cartan);
    let mut nonzero = 0usize;
    for opp in &opponents {
        let o = ModeElement::from_word(opp.clone());
        let v = match side {
            Side::Plus => eval.pair(e, &o)?,
            Side::Minus => eval.pair(&o, e)?,
        };
        if !v.is_zero() {
            nonzero += 1;
            report.fail(format!("pairing with {opp} gives {v}"));
        }
    }
    report.note(format!("{} opponents, {nonzero} nonzero", opponents.len()));
    Ok(report)
}
