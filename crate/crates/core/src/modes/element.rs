use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use super::generator::{Generator, Side};
use super::word::ModeWord;
use crate::cartan::RootDegree;
use crate::error::Result;
use crate::scalar::{CentralExponent, Scalar};

/// Finite linear combination of mode words with coefficients in ℚ(q).
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct ModeElement {
    terms: BTreeMap<ModeWord, Scalar>,
}

impl ModeElement {
    pub fn zero() -> Self {
        ModeElement::default()
    }

    pub fn one() -> Self {
        ModeElement::from_word(ModeWord::one())
    }

    pub fn from_word(w: ModeWord) -> Self {
        ModeElement::term(Scalar::one(), w)
    }

    pub fn letter(g: Generator) -> Self {
        ModeElement::from_word(ModeWord::letter(g))
    }

    pub fn scalar(c: Scalar) -> Self {
        ModeElement::term(c, ModeWord::one())
    }

    pub fn central(e: CentralExponent) -> Self {
        ModeElement::from_word(ModeWord::central(e))
    }

    pub fn term(c: Scalar, w: ModeWord) -> Self {
        let mut e = ModeElement::zero();
        e.add_term(c, w);
        e
    }

    pub fn from_terms(terms: impl IntoIterator<Item = (Scalar, ModeWord)>) -> Self {
        let mut e = ModeElement::zero();
        for (c, w) in terms {
            e.add_term(c, w);
        }
        e
    }

    pub fn add_term(&mut self, c: Scalar, w: ModeWord) {
        if c.is_zero() {
            return;
        }
        match self.terms.get_mut(&w) {
            Some(old) => {
                *old += &c;
                if old.is_zero() {
                    self.terms.remove(&w);
                }
            }
            None => {
                self.terms.insert(w, c);
            }
        }
    }

    pub fn add_scaled(&mut self, c: &Scalar, other: &ModeElement) {
        for (w, d) in &other.terms {
            self.add_term(c * d, w.clone());
        }
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

    pub fn terms(&self) -> impl Iterator<Item = (&ModeWord, &Scalar)> {
        self.terms.iter()
    }

    pub fn coeff(&self, w: &ModeWord) -> Scalar {
        self.terms.get(w).cloned().unwrap_or_else(Scalar::zero)
    }

    #[must_use]
    pub fn scale(&self, c: &Scalar) -> ModeElement {
        ModeElement::from_terms(self.terms.iter().map(|(w, d)| (c * d, w.clone())))
    }

    /// Applies a linear map defined on words.
    pub fn map_words(&self, mut f: impl FnMut(&ModeWord) -> ModeElement) -> ModeElement {
        let mut out = ModeElement::zero();
        for (w, c) in &self.terms {
            out.add_scaled(c, &f(w));
        }
        out
    }

    pub fn try_map_words(&self, mut f: impl FnMut(&ModeWord) -> Result<ModeElement>) -> Result<ModeElement> {
        let mut out = ModeElement::zero();
        for (w, c) in &self.terms {
            out.add_scaled(c, &f(w)?);
        }
        Ok(out)
    }

    /// The common side of all words, `None` if only scalars and central units appear.
    pub fn side(&self) -> Result<Option<Side>> {
        let mut side = None;
        for w in self.terms.keys() {
            if let Some(s) = w.side()? {
                if let Some(prev) = side {
                    if prev != s {
                        return Err(crate::Error::WrongSide(format!("element {self} mixes sides")));
                    }
                }
                side = Some(s);
            }
        }
        Ok(side)
    }

    pub fn check_side(&self, side: Side) -> Result<()> {
        self.terms.keys().try_for_each(|w| w.check_side(side))
    }

    /// Q-degree if the element is homogeneous.
    pub fn q_degree(&self, rank: usize) -> Option<RootDegree> {
        let mut it = self.terms.keys().map(|w| w.q_degree(rank));
        let first = it.next()?;
        it.all(|d| d == first).then_some(first)
    }

    /// Mode-sum if the element is homogeneous.
    pub fn mode_sum(&self) -> Option<i64> {
        let mut it = self.terms.keys().map(ModeWord::mode_sum);
        let first = it.next()?;
        it.all(|d| d == first).then_some(first)
    }

    pub fn max_completion_degree(&self) -> u64 {
        self.terms.keys().map(ModeWord::completion_degree).max().unwrap_or(0)
    }

    /// Drops words whose completion degree exceeds `n`.
    pub fn truncate(&self, n: u64) -> ModeElement {
        ModeElement {
            terms: self
                .terms
                .iter()
                .filter(|(w, _)| w.completion_degree() <= n)
                .map(|(w, c)| (w.clone(), c.clone()))
                .collect(),
        }
    }

    /// Identifies `K` with `Kp` in every word.
    pub fn identify_central(&self) -> ModeElement {
        ModeElement::from_terms(
            self.terms.iter().map(|(w, c)| (c.clone(), ModeWord::new(w.letters.clone(), w.central.identified()))),
        )
    }
}

impl Add for &ModeElement {
    type Output = ModeElement;
    fn add(self, rhs: &ModeElement) -> ModeElement {
        let mut out = self.clone();
        out.add_scaled(&Scalar::one(), rhs);
        out
    }
}

impl Sub for &ModeElement {
    type Output = ModeElement;
    fn sub(self, rhs: &ModeElement) -> ModeElement {
        let mut out = self.clone();
        out.add_scaled(&-Scalar::one(), rhs);
        out
    }
}

impl Neg for &ModeElement {
    type Output = ModeElement;
    fn neg(self) -> ModeElement {
        self.scale(&-Scalar::one())
    }
}

/// Concatenation product in the free algebra.
impl Mul for &ModeElement {
    type Output = ModeElement;
    fn mul(self, rhs: &ModeElement) -> ModeElement {
        let mut out = ModeElement::zero();
        for (a, c) in &self.terms {
            for (b, d) in &rhs.terms {
                out.add_term(c * d, a.concat(b));
            }
        }
        out
    }
}

impl From<Generator> for ModeElement {
    fn from(g: Generator) -> Self {
        ModeElement::letter(g)
    }
}

impl From<ModeWord> for ModeElement {
    fn from(w: ModeWord) -> Self {
        ModeElement::from_word(w)
    }
}

pub fn write_term(f: &mut fmt::Formatter<'_>, first: bool, c: &Scalar, body: &str) -> fmt::Result {
    let text = c.to_string();
    let (neg, mag) = match text.strip_prefix('-') {
        Some(rest) if (-c).to_string() == rest => (true, rest.to_string()),
        _ => (false, text.clone()),
    };
    if first {
        if neg {
            f.write_str("-")?;
        }
    } else {
        f.write_str(if neg { " - " } else { " + " })?;
    }
    let is_unit = mag == "1";
    let atomic = !mag.contains([' ', '/']);
    match (body == "1", is_unit, atomic) {
        (true, _, _) => f.write_str(&mag),
        (false, true, _) => f.write_str(body),
        (false, false, true) => write!(f, "{mag} {body}"),
        (false, false, false) => write!(f, "({mag}) {body}"),
    }
}

impl fmt::Display for ModeElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return f.write_str("0");
        }
        for (k, (w, c)) in self.terms.iter().enumerate() {
            write_term(f, k == 0, c, &w.to_string())?;
        }
        Ok(())
    }
}

/// Element of an n-fold tensor power of the free mode algebra.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct Tensor {
    terms: BTreeMap<Vec<ModeWord>, Scalar>,
}

impl Tensor {
    pub fn zero() -> Self {
        Tensor::default()
    }

    pub fn pure(factors: Vec<ModeWord>) -> Self {
        let mut t = Tensor::zero();
        t.add_term(Scalar::one(), factors);
        t
    }

    pub fn add_term(&mut self, c: Scalar, factors: Vec<ModeWord>) {
        if c.is_zero() {
            return;
        }
        match self.terms.get_mut(&factors) {
            Some(old) => {
                *old += &c;
                if old.is_zero() {
                    self.terms.remove(&factors);
                }
            }
            None => {
                self.terms.insert(factors, c);
            }
        }
    }

    pub fn add_scaled(&mut self, c: &Scalar, other: &Tensor) {
        for (w, d) in &other.terms {
            self.add_term(c * d, w.clone());
        }
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

    pub fn terms(&self) -> impl Iterator<Item = (&Vec<ModeWord>, &Scalar)> {
        self.terms.iter()
    }

    pub fn coeff(&self, factors: &[ModeWord]) -> Scalar {
        self.terms.get(factors).cloned().unwrap_or_else(Scalar::zero)
    }

    /// Total completion degree of a tensor term.
    pub fn term_degree(factors: &[ModeWord]) -> u64 {
        factors.iter().map(ModeWord::completion_degree).sum()
    }

    pub fn truncate(&self, n: u64) -> Tensor {
        Tensor {
            terms: self
                .terms
                .iter()
                .filter(|(w, _)| Tensor::term_degree(w) <= n)
                .map(|(w, c)| (w.clone(), c.clone()))
                .collect(),
        }
    }

    /// Factorwise product, each factor concatenated.
    pub fn mul(&self, rhs: &Tensor) -> Tensor {
        let mut out = Tensor::zero();
        for (a, c) in &self.terms {
            for (b, d) in &rhs.terms {
                debug_assert_eq!(a.len(), b.len());
                let f = a.iter().zip(b).map(|(x, y)| x.concat(y)).collect();
                out.add_term(c * d, f);
            }
        }
        out
    }

    /// Factorwise product with terms of total completion degree above `n` dropped.
    pub fn mul_truncated(&self, rhs: &Tensor, n: u64) -> Tensor {
        let mut out = Tensor::zero();
        for (a, c) in &self.terms {
            let da = Tensor::term_degree(a);
            for (b, d) in &rhs.terms {
                if da + Tensor::term_degree(b) > n {
                    continue;
                }
                let f = a.iter().zip(b).map(|(x, y)| x.concat(y)).collect();
                out.add_term(c * d, f);
            }
        }
        out
    }

    /// Applies a linear map to the factor at `pos`, replacing it by a tensor of factors.
    pub fn map_factor(&self, pos: usize, mut f: impl FnMut(&ModeWord) -> Tensor) -> Tensor {
        let mut out = Tensor::zero();
        for (w, c) in &self.terms {
            let image = f(&w[pos]);
            for (v, d) in &image.terms {
                let mut factors = Vec::with_capacity(w.len() + v.len() - 1);
                factors.extend_from_slice(&w[..pos]);
                factors.extend(v.iter().cloned());
                factors.extend_from_slice(&w[pos + 1..]);
                out.add_term(c * d, factors);
            }
        }
        out
    }

    /// Applies linear maps to every factor and multiplies the results together.
    pub fn map_factors_to_element(&self, mut f: impl FnMut(usize, &ModeWord) -> ModeElement) -> ModeElement {
        let mut out = ModeElement::zero();
        for (w, c) in &self.terms {
            let mut acc = ModeElement::scalar(c.clone());
            for (k, x) in w.iter().enumerate() {
                acc = &acc * &f(k, x);
                if acc.is_zero() {
                    break;
                }
            }
            out.add_scaled(&Scalar::one(), &acc);
        }
        out
    }

    /// Applies a linear map to each factor separately and expands the tensor product.
    pub fn map_factorwise(&self, mut f: impl FnMut(usize, &ModeWord) -> ModeElement) -> Tensor {
        let mut out = Tensor::zero();
        for (w, c) in &self.terms {
            let mut acc: Vec<(Scalar, Vec<ModeWord>)> = vec![(c.clone(), Vec::new())];
            for (k, x) in w.iter().enumerate() {
                let image = f(k, x);
                let mut next = Vec::new();
                for (a, fs) in &acc {
                    for (y, d) in image.terms() {
                        let mut fs = fs.clone();
                        fs.push(y.clone());
                        next.push((a * d, fs));
                    }
                }
                acc = next;
            }
            for (a, fs) in acc {
                out.add_term(a, fs);
            }
        }
        out
    }

    pub fn map_words(&self, mut f: impl FnMut(&[ModeWord]) -> Vec<ModeWord>) -> Tensor {
        let mut out = Tensor::zero();
        for (w, c) in &self.terms {
            out.add_term(c.clone(), f(w));
        }
        out
    }

    pub fn sub(&self, rhs: &Tensor) -> Tensor {
        let mut out = self.clone();
        out.add_scaled(&-Scalar::one(), rhs);
        out
    }

    pub fn from_elements(a: &ModeElement, b: &ModeElement) -> Tensor {
        let mut out = Tensor::zero();
        for (x, c) in a.terms() {
            for (y, d) in b.terms() {
                out.add_term(c * d, vec![x.clone(), y.clone()]);
            }
        }
        out
    }
}

impl fmt::Display for Tensor {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return f.write_str("0");
        }
        for (k, (w, c)) in self.terms.iter().enumerate() {
            let body: Vec<String> = w.iter().map(|x| x.to_string()).collect();
            write_term(f, k == 0, c, &format!("[{}]", body.join(" ⊗ ")))?;
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn cancellation_drops_terms() {
        let a = ModeElement::letter(Generator::xp(1, 0));
        assert!((&a - &a).is_zero());
    }

    #[test]
    fn product_concatenates() {
        let a = ModeElement::letter(Generator::xp(1, 0));
        let b = ModeElement::letter(Generator::xp(2, 1));
        let ab = &a * &b;
        assert_eq!(ab.to_string(), "xp(1,0) xp(2,1)");
        assert_eq!(ab.mode_sum(), Some(1));
    }

    #[test]
    fn display_signs() {
        let mut e = ModeElement::term(-Scalar::one(), ModeWord::letter(Generator::xp(1, 0)));
        e.add_term(Scalar::q_pow(1) + Scalar::one(), ModeWord::letter(Generator::xp(1, 1)));
        assert_eq!(e.to_string(), "-xp(1,0) + (q + 1) xp(1,1)");
    }
}
