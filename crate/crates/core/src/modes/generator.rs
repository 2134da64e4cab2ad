use std::fmt;

use serde::{Deserialize, Serialize};

use crate::cartan::Node;
use crate::error::{Error, Result};

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub enum Side {
    Plus,
    Minus,
}

impl Side {
    pub fn opposite(self) -> Side {
        match self {
            Side::Plus => Side::Minus,
            Side::Minus => Side::Plus,
        }
    }
}

impl fmt::Display for Side {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Side::Plus => "plus",
            Side::Minus => "minus",
        })
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub enum GenKind {
    XPlus,
    XMinus,
    Phi,
    Psi,
    PhiZeroInv,
    PsiZeroInv,
}

impl GenKind {
    pub fn side(self) -> Side {
        match self {
            GenKind::XPlus | GenKind::Phi | GenKind::PhiZeroInv => Side::Plus,
            GenKind::XMinus | GenKind::Psi | GenKind::PsiZeroInv => Side::Minus,
        }
    }

    pub fn is_cartan(self) -> bool {
        !matches!(self, GenKind::XPlus | GenKind::XMinus)
    }
}

/// A single mode generator. Zero-mode inverses always carry mode 0.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub struct Generator {
    pub kind: GenKind,
    pub node: Node,
    pub mode: i64,
}

impl Generator {
    pub fn new(kind: GenKind, node: Node, mode: i64) -> Result<Self> {
        if node == 0 {
            return Err(Error::InvalidGenerator("node indices start at 1".into()));
        }
        match kind {
            GenKind::Phi if mode > 0 => {
                Err(Error::InvalidGenerator(format!("φ modes must be ≤ 0 (got phi({node},{mode}))")))
            }
            GenKind::Psi if mode < 0 => {
                Err(Error::InvalidGenerator(format!("ψ modes must be ≥ 0 (got psi({node},{mode}))")))
            }
            GenKind::PhiZeroInv | GenKind::PsiZeroInv if mode != 0 => {
                Err(Error::InvalidGenerator("zero-mode inverses carry mode 0".into()))
            }
            _ => Ok(Generator { kind, node, mode }),
        }
    }

    pub fn xp(node: Node, mode: i64) -> Self {
        Generator { kind: GenKind::XPlus, node, mode }
    }

    pub fn xm(node: Node, mode: i64) -> Self {
        Generator { kind: GenKind::XMinus, node, mode }
    }

    pub fn phi(node: Node, mode: i64) -> Self {
        debug_assert!(mode <= 0);
        Generator { kind: GenKind::Phi, node, mode }
    }

    pub fn psi(node: Node, mode: i64) -> Self {
        debug_assert!(mode >= 0);
        Generator { kind: GenKind::Psi, node, mode }
    }

    pub fn phi0inv(node: Node) -> Self {
        Generator { kind: GenKind::PhiZeroInv, node, mode: 0 }
    }

    pub fn psi0inv(node: Node) -> Self {
        Generator { kind: GenKind::PsiZeroInv, node, mode: 0 }
    }

    pub fn side(&self) -> Side {
        self.kind.side()
    }

    pub fn is_cartan(&self) -> bool {
        self.kind.is_cartan()
    }

    pub fn is_x(&self) -> bool {
        !self.is_cartan()
    }

    /// Contribution to the Q-degree: `+1`, `-1` or `0` on the generator's node.
    pub fn q_sign(&self) -> i64 {
        match self.kind {
            GenKind::XPlus => 1,
            GenKind::XMinus => -1,
            _ => 0,
        }
    }

    /// Degree in the completion filtration: `φ_{i,-k}` and `ψ_{i,k}` have degree `k`.
    pub fn completion_degree(&self) -> u64 {
        match self.kind {
            GenKind::Phi | GenKind::Psi => self.mode.unsigned_abs(),
            _ => 0,
        }
    }

    /// Order used inside the commutative Cartan block.
    pub(crate) fn cartan_key(&self) -> (Node, GenKind, i64) {
        (self.node, self.kind, self.mode)
    }
}

impl fmt::Display for Generator {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self.kind {
            GenKind::XPlus => write!(f, "xp({},{})", self.node, self.mode),
            GenKind::XMinus => write!(f, "xm({},{})", self.node, self.mode),
            GenKind::Phi => write!(f, "phi({},{})", self.node, self.mode),
            GenKind::Psi => write!(f, "psi({},{})", self.node, self.mode),
            GenKind::PhiZeroInv => write!(f, "phi0inv({})", self.node),
            GenKind::PsiZeroInv => write!(f, "psi0inv({})", self.node),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn mode_ranges_are_enforced() {
        assert!(Generator::new(GenKind::Phi, 1, 1).is_err());
        assert!(Generator::new(GenKind::Psi, 1, -1).is_err());
        assert!(Generator::new(GenKind::PhiZeroInv, 1, 2).is_err());
        assert!(Generator::new(GenKind::XPlus, 1, -7).is_ok());
        assert!(Generator::new(GenKind::XMinus, 0, 0).is_err());
    }

    #[test]
    fn display() {
        assert_eq!(Generator::xp(1, -2).to_string(), "xp(1,-2)");
        assert_eq!(Generator::phi0inv(2).to_string(), "phi0inv(2)");
    }
}
