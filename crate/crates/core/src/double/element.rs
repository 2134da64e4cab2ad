use std::collections::BTreeMap;
use std::fmt;

use crate::cartan::CartanData;
use crate::error::Result;
use crate::modes::{straighten_word, GenKind, Generator, ModeWord};
use crate::scalar::{CentralExponent, Scalar};

pub type DoubleKey = (Vec<Generator>, Vec<Generator>, CentralExponent);

/// Finite sum of `c · (positive word) ⊗ (negative word) · K^a Kp^b`.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct DoubleElement {
    terms: BTreeMap<DoubleKey, Scalar>,
}

impl DoubleElement {
    pub fn zero() -> Self {
        DoubleElement::default()
    }

    pub fn one() -> Self {
        DoubleElement::term(Scalar::one(), Vec::new(), Vec::new(), CentralExponent::ZERO)
    }

    pub fn term(c: Scalar, pos: Vec<Generator>, neg: Vec<Generator>, central: CentralExponent) -> Self {
        let mut e = DoubleElement::zero();
        e.add_term(c, pos, neg, central);
        e
    }

    /// `a ⊗ 1` for a positive word.
    pub fn positive(a: &ModeWord) -> Self {
        DoubleElement::term(Scalar::one(), a.letters.clone(), Vec::new(), a.central)
    }

    /// `1 ⊗ b` for a negative word.
    pub fn negative(b: &ModeWord) -> Self {
        DoubleElement::term(Scalar::one(), Vec::new(), b.letters.clone(), b.central)
    }

    pub fn add_term(&mut self, c: Scalar, pos: Vec<Generator>, neg: Vec<Generator>, central: CentralExponent) {
        if c.is_zero() {
            return;
        }
        let key = (pos, neg, central);
        match self.terms.get_mut(&key) {
            Some(old) => {
                *old += &c;
                if old.is_zero() {
                    self.terms.remove(&key);
                }
            }
            None => {
                self.terms.insert(key, c);
            }
        }
    }

    pub fn add_scaled(&mut self, c: &Scalar, other: &DoubleElement) {
        for ((p, n, e), d) in &other.terms {
            self.add_term(c * d, p.clone(), n.clone(), *e);
        }
    }

    pub fn terms(&self) -> impl Iterator<Item = (&DoubleKey, &Scalar)> {
        self.terms.iter()
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn sub(&self, other: &DoubleElement) -> DoubleElement {
        let mut out = self.clone();
        out.add_scaled(&-Scalar::one(), other);
        out
    }

    /// Straightens the positive and the negative word of every term separately.
    pub fn normalized(&self, cartan: &CartanData) -> Result<DoubleElement> {
        let mut out = DoubleElement::zero();
        for ((p, n, e), c) in &self.terms {
            let sp = straighten_word(cartan, &ModeWord::from_letters(p.clone()))?;
            let sn = straighten_word(cartan, &ModeWord::from_letters(n.clone()))?;
            for (wp, cp) in sp.terms() {
                for (wn, cn) in sn.terms() {
                    out.add_term(&(c * cp) * cn, wp.letters.clone(), wn.letters.clone(), *e + wp.central + wn.central);
                }
            }
        }
        Ok(out)
    }

    /// Normalization modulo the ideal identifying `K` with `Kp` and `φ_{i,0} ⊗ ψ_{i,0}` with 1.
    pub fn quotient(&self) -> DoubleElement {
        let mut out = DoubleElement::zero();
        for ((p, n, e), c) in &self.terms {
            let mut p = p.clone();
            let mut n = n.clone();
            loop {
                let hit = p.iter().enumerate().find_map(|(a, g)| {
                    let partner = match g.kind {
                        GenKind::Phi if g.mode == 0 => Generator::psi(g.node, 0),
                        GenKind::PhiZeroInv => Generator::psi0inv(g.node),
                        _ => return None,
                    };
                    n.iter().position(|h| *h == partner).map(|b| (a, b))
                });
                match hit {
                    Some((a, b)) => {
                        p.remove(a);
                        n.remove(b);
                    }
                    None => break,
                }
            }
            out.add_term(c.clone(), p, n, e.identified());
        }
        out
    }
}

impl fmt::Display for DoubleElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return f.write_str("0");
        }
        for (k, ((p, n, e), c)) in self.terms.iter().enumerate() {
            let side = |w: &[Generator]| {
                if w.is_empty() {
                    "1".to_string()
                } else {
                    w.iter().map(Generator::to_string).collect::<Vec<_>>().join(" ")
                }
            };
            let mut body = format!("[{} ⊗ {}]", side(p), side(n));
            if e.c != 0 {
                body.push_str(&format!(" K({})", e.c));
            }
            if e.c_prime != 0 {
                body.push_str(&format!(" Kp({})", e.c_prime));
            }
            crate::modes::write_term(f, k == 0, c, &body)?;
        }
        Ok(())
    }
}
