use std::fmt;
use std::ops::Mul;

use serde::{Deserialize, Serialize};

use super::generator::{GenKind, Generator, Side};
use crate::cartan::RootDegree;
use crate::error::{Error, Result};
use crate::scalar::CentralExponent;

/// A noncommutative word in mode generators times a central monomial.
#[derive(Clone, Debug, Default, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub struct ModeWord {
    pub letters: Vec<Generator>,
    pub central: CentralExponent,
}

impl ModeWord {
    pub fn one() -> Self {
        ModeWord::default()
    }

    pub fn new(letters: Vec<Generator>, central: CentralExponent) -> Self {
        ModeWord { letters, central }
    }

    pub fn from_letters(letters: Vec<Generator>) -> Self {
        ModeWord { letters, central: CentralExponent::ZERO }
    }

    pub fn letter(g: Generator) -> Self {
        ModeWord::from_letters(vec![g])
    }

    pub fn central(central: CentralExponent) -> Self {
        ModeWord { letters: Vec::new(), central }
    }

    pub fn with_central(mut self, extra: CentralExponent) -> Self {
        self.central = self.central + extra;
        self
    }

    pub fn is_one(&self) -> bool {
        self.letters.is_empty() && self.central.is_zero()
    }

    pub fn len(&self) -> usize {
        self.letters.len()
    }

    pub fn is_empty(&self) -> bool {
        self.letters.is_empty()
    }

    pub fn concat(&self, other: &ModeWord) -> ModeWord {
        let mut letters = Vec::with_capacity(self.letters.len() + other.letters.len());
        letters.extend_from_slice(&self.letters);
        letters.extend_from_slice(&other.letters);
        ModeWord { letters, central: self.central + other.central }
    }

    pub fn q_degree(&self, rank: usize) -> RootDegree {
        let mut d = RootDegree::zero(rank);
        for g in &self.letters {
            if g.is_x() {
                d.0[g.node - 1] += g.q_sign();
            }
        }
        d
    }

    pub fn mode_sum(&self) -> i64 {
        self.letters.iter().map(|g| g.mode).sum()
    }

    pub fn completion_degree(&self) -> u64 {
        self.letters.iter().map(Generator::completion_degree).sum()
    }

    pub fn x_count(&self) -> usize {
        self.letters.iter().filter(|g| g.is_x()).count()
    }

    /// The side of the word, `None` for a word with no letters. Mixed words are an error.
    pub fn side(&self) -> Result<Option<Side>> {
        let mut side = None;
        for g in &self.letters {
            match side {
                None => side = Some(g.side()),
                Some(s) if s != g.side() => {
                    return Err(Error::WrongSide(format!("word {self} mixes positive and negative letters")))
                }
                _ => {}
            }
        }
        Ok(side)
    }

    pub fn check_side(&self, side: Side) -> Result<()> {
        match self.side()? {
            Some(s) if s != side => Err(Error::WrongSide(format!("word {self} does not lie on the {side} side"))),
            _ => Ok(()),
        }
    }

    /// True when every x letter precedes every Cartan letter and the Cartan block is sorted.
    pub fn is_straightened(&self) -> bool {
        let split = self.letters.iter().position(Generator::is_cartan).unwrap_or(self.letters.len());
        let (xs, cartan) = self.letters.split_at(split);
        debug_assert!(xs.iter().all(Generator::is_x));
        cartan.iter().all(Generator::is_cartan) && cartan.windows(2).all(|w| w[0].cartan_key() <= w[1].cartan_key())
    }

    /// Splits a straightened word into its x block and Cartan block.
    pub fn split_blocks(&self) -> Result<(&[Generator], &[Generator])> {
        if !self.is_straightened() {
            return Err(Error::NotStraightened(self.to_string()));
        }
        let split = self.letters.iter().position(Generator::is_cartan).unwrap_or(self.letters.len());
        Ok(self.letters.split_at(split))
    }

    pub fn count_kind(&self, kind: GenKind) -> usize {
        self.letters.iter().filter(|g| g.kind == kind).count()
    }
}

impl Mul for &ModeWord {
    type Output = ModeWord;
    fn mul(self, rhs: &ModeWord) -> ModeWord {
        self.concat(rhs)
    }
}

impl fmt::Display for ModeWord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut parts: Vec<String> = self.letters.iter().map(Generator::to_string).collect();
        if self.central.c != 0 {
            parts.push(format!("K({})", self.central.c));
        }
        if self.central.c_prime != 0 {
            parts.push(format!("Kp({})", self.central.c_prime));
        }
        if parts.is_empty() {
            f.write_str("1")
        } else {
            f.write_str(&parts.join(" "))
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn gradings_are_additive() {
        let a = ModeWord::from_letters(vec![Generator::xp(1, 2), Generator::phi(2, -1)]);
        let b = ModeWord::from_letters(vec![Generator::xp(2, -3)]);
        let ab = a.concat(&b);
        assert_eq!(ab.mode_sum(), a.mode_sum() + b.mode_sum());
        assert_eq!(ab.q_degree(2), &a.q_degree(2) + &b.q_degree(2));
    }

    #[test]
    fn straightened_shape() {
        let w = ModeWord::from_letters(vec![Generator::xp(1, 0), Generator::phi(1, -1), Generator::phi(2, 0)]);
        assert!(w.is_straightened());
        let w = ModeWord::from_letters(vec![Generator::phi(1, 0), Generator::xp(1, 0)]);
        assert!(!w.is_straightened());
    }

    #[test]
    fn mixed_side_is_rejected() {
        let w = ModeWord::from_letters(vec![Generator::xp(1, 0), Generator::xm(1, 0)]);
        assert!(w.side().is_err());
    }

    #[test]
    fn display_with_central() {
        let w = ModeWord::new(vec![Generator::xp(1, 0)], CentralExponent::new(-1, 2));
        assert_eq!(w.to_string(), "xp(1,0) K(-1) Kp(2)");
        assert_eq!(ModeWord::one().to_string(), "1");
    }
}
