use std::collections::BTreeMap;
use std::fmt;

use super::ratfun::FactoredRational;
use super::zero::sum_is_zero;
use crate::cartan::{CartanData, Node};
use crate::error::{Error, Result};
use crate::scalar::Scalar;

/// `F(q, z) · x^+_{i_1}(z_{v_1}) ⊗ … ⊗ x^+_{i_n}(z_{v_n})`. Each tensor slot carries its
/// node and the variable its current is evaluated at; variables travel with their letters.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct CurrentTensor {
    pub letters: Vec<(Node, usize)>,
    pub f: FactoredRational,
}

impl CurrentTensor {
    /// Weight word with variables `z_1, …, z_n` in order and `F = 1`.
    pub fn new(nodes: &[Node]) -> Self {
        CurrentTensor {
            letters: nodes.iter().enumerate().map(|(k, &i)| (i, k + 1)).collect(),
            f: FactoredRational::one(),
        }
    }

    pub fn with_f(mut self, f: FactoredRational) -> Self {
        self.f = f;
        self
    }

    pub fn len(&self) -> usize {
        self.letters.len()
    }

    pub fn is_empty(&self) -> bool {
        self.letters.is_empty()
    }

    pub fn weight(&self) -> Vec<Node> {
        self.letters.iter().map(|l| l.0).collect()
    }

    /// Largest variable index carried by a letter.
    pub fn max_var(&self) -> usize {
        self.letters.iter().map(|l| l.1).max().unwrap_or(0)
    }

    /// Substitutes variables everywhere, in the letters and in `F`.
    pub fn rename(&self, perm: impl Fn(usize) -> usize + Copy) -> CurrentTensor {
        CurrentTensor { letters: self.letters.iter().map(|&(i, v)| (i, perm(v))).collect(), f: self.f.rename(perm) }
    }

    /// Relabels so that slot `k` carries `z_k`.
    pub fn positional(&self) -> (Vec<Node>, FactoredRational) {
        let mut map = vec![0usize; self.max_var().max(self.f.max_var()) + 1];
        for (k, &(_, v)) in self.letters.iter().enumerate() {
            map[v] = k + 1;
        }
        (self.weight(), self.f.rename(|v| map[v]))
    }
}

impl fmt::Display for CurrentTensor {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let slots: Vec<String> = self.letters.iter().map(|(i, v)| format!("x{i}(z{v})")).collect();
        let body = if slots.is_empty() { "1".to_string() } else { slots.join(" ⊗ ") };
        write!(f, "[{}] {body}", self.f)
    }
}

/// Finite sum of current tensors of equal length. Summands with the same letters are
/// grouped; their rational functions are added only when a zero test needs it.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct ShuffleElement {
    terms: BTreeMap<Vec<(Node, usize)>, Vec<FactoredRational>>,
}

impl ShuffleElement {
    pub fn zero() -> Self {
        ShuffleElement::default()
    }

    /// The unit, the empty tensor.
    pub fn one() -> Self {
        ShuffleElement::from_tensor(CurrentTensor::new(&[]))
    }

    pub fn from_tensor(t: CurrentTensor) -> Self {
        let mut e = ShuffleElement::zero();
        e.push(t);
        e
    }

    /// The current `x^+_i(z_v)`.
    pub fn letter(i: Node, v: usize) -> Self {
        ShuffleElement::from_tensor(CurrentTensor { letters: vec![(i, v)], f: FactoredRational::one() })
    }

    pub fn push(&mut self, t: CurrentTensor) {
        if t.f.is_zero() {
            return;
        }
        let slot = self.terms.entry(t.letters).or_default();
        match slot.iter_mut().find(|g| g.zpow == t.f.zpow && g.factors == t.f.factors) {
            Some(g) => {
                g.coeff += &t.f.coeff;
                if g.coeff.is_zero() {
                    slot.retain(|g| !g.coeff.is_zero());
                }
            }
            None => slot.push(t.f),
        }
    }

    pub fn extend(&mut self, other: &ShuffleElement) {
        for t in other.tensors() {
            self.push(t);
        }
    }

    pub fn scaled(&self, c: &Scalar) -> ShuffleElement {
        let mut out = ShuffleElement::zero();
        for mut t in self.tensors() {
            t.f.scale(c);
            out.push(t);
        }
        out
    }

    /// Multiplies every rational function by `g`.
    pub fn times(&self, g: &FactoredRational) -> ShuffleElement {
        let mut out = ShuffleElement::zero();
        for t in self.tensors() {
            let f = t.f.mul(g);
            out.push(CurrentTensor { letters: t.letters, f });
        }
        out
    }

    pub fn sub(&self, other: &ShuffleElement) -> ShuffleElement {
        let mut out = self.clone();
        out.extend(&other.scaled(&-Scalar::one()));
        out
    }

    pub fn rename(&self, perm: impl Fn(usize) -> usize + Copy) -> ShuffleElement {
        let mut out = ShuffleElement::zero();
        for t in self.tensors() {
            out.push(t.rename(perm));
        }
        out
    }

    pub fn tensors(&self) -> impl Iterator<Item = CurrentTensor> + '_ {
        self.terms.iter().flat_map(|(l, fs)| fs.iter().map(move |f| CurrentTensor { letters: l.clone(), f: f.clone() }))
    }

    pub fn num_tensors(&self) -> usize {
        self.terms.values().map(Vec::len).sum()
    }

    /// Tensor length, or an error when summands of different lengths were mixed.
    pub fn length(&self) -> Result<Option<usize>> {
        let mut lens = self.terms.keys().map(Vec::len);
        let first = lens.next();
        if lens.any(|l| Some(l) != first) {
            return Err(Error::OutOfRange("shuffle element mixes tensor lengths".into()));
        }
        Ok(first)
    }

    /// Positional form grouped by weight word.
    pub fn positional_groups(&self) -> BTreeMap<Vec<Node>, Vec<FactoredRational>> {
        let mut out: BTreeMap<Vec<Node>, Vec<FactoredRational>> = BTreeMap::new();
        for t in self.tensors() {
            let (w, f) = t.positional();
            out.entry(w).or_default().push(f);
        }
        out
    }

    /// Exact zero test: every weight word's rational function vanishes identically.
    pub fn is_zero(&self) -> bool {
        self.positional_groups().values().all(|fs| sum_is_zero(fs))
    }

    /// First weight word whose coefficient does not vanish.
    pub fn nonzero_witness(&self) -> Option<Vec<Node>> {
        self.positional_groups().into_iter().find(|(_, fs)| !sum_is_zero(fs)).map(|(w, _)| w)
    }

    pub fn equals(&self, other: &ShuffleElement) -> bool {
        self.sub(other).is_zero()
    }
}

impl fmt::Display for ShuffleElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.tensors().map(|t| t.to_string()).collect();
        if parts.is_empty() {
            write!(f, "0")
        } else {
            write!(f, "{}", parts.join(" + "))
        }
    }
}

/// `q_ij` exponent used by the braiding between nodes `i` and `j`.
pub(crate) fn braid_exponent(cartan: &CartanData, i: Node, j: Node) -> i64 {
    cartan.form(i, j)
}
