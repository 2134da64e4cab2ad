use super::convention::PairingConvention;
use crate::cartan::CartanData;
use crate::modes::{GenKind, Generator};
use crate::scalar::Scalar;

/// Pairing of one positive letter with one negative letter.
pub fn pair_letters(cartan: &CartanData, conv: PairingConvention, a: Generator, b: Generator) -> Scalar {
    let (i, j) = (a.node, b.node);
    match (a.kind, b.kind) {
        (GenKind::XPlus, GenKind::XMinus) if i == j && a.mode == -b.mode => conv.x_constant(),
        (GenKind::Phi, GenKind::Psi) if a.mode == -b.mode => cartan.g(i, j, b.mode as usize),
        (GenKind::PhiZeroInv, GenKind::Psi) if b.mode == 0 => cartan.g_inv(i, j, 0),
        (GenKind::Phi, GenKind::PsiZeroInv) if a.mode == 0 => cartan.g_inv(i, j, 0),
        (GenKind::PhiZeroInv, GenKind::PsiZeroInv) => cartan.g(i, j, 0),
        _ => Scalar::zero(),
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn base_values() {
        let c = CartanData::preset("A2").unwrap();
        let v = PairingConvention::QPlus;
        assert_eq!(pair_letters(&c, v, Generator::phi(1, -1), Generator::psi(2, 1)), c.g(1, 2, 1));
        assert_eq!(pair_letters(&c, v, Generator::xp(1, 3), Generator::xm(1, -3)), v.x_constant());
        assert!(pair_letters(&c, v, Generator::xp(1, 0), Generator::xm(2, 0)).is_zero());
        assert!(pair_letters(&c, v, Generator::phi(1, -1), Generator::psi(2, 2)).is_zero());
    }
}
