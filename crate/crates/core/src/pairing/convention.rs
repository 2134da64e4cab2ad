use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::scalar::Scalar;

/// Which constant `⟨x^+_{i,n}, x^-_{i,-n}⟩` takes.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum PairingConvention {
    /// `-1/(q + q^{-1})`
    #[default]
    QPlus,
    /// `-1/(q - q^{-1})`
    QMinus,
}

impl PairingConvention {
    pub fn x_constant(&self) -> Scalar {
        let q = Scalar::q_pow(1);
        let qi = Scalar::q_pow(-1);
        let den = match self {
            PairingConvention::QPlus => &q + &qi,
            PairingConvention::QMinus => &q - &qi,
        };
        -den.inv().expect("nonzero")
    }

    pub fn name(&self) -> &'static str {
        match self {
            PairingConvention::QPlus => "qplus",
            PairingConvention::QMinus => "qminus",
        }
    }
}

impl fmt::Display for PairingConvention {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for PairingConvention {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        match s {
            "qplus" => Ok(PairingConvention::QPlus),
            "qminus" => Ok(PairingConvention::QMinus),
            _ => Err(Error::OutOfRange(format!("unknown pairing convention `{s}` (expected qplus or qminus)"))),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn constants() {
        assert_eq!(PairingConvention::QPlus.x_constant().to_string(), "-q/(q^2 + 1)");
        assert_eq!("qminus".parse::<PairingConvention>().unwrap(), PairingConvention::QMinus);
    }
}
