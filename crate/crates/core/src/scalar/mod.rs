//! Exact arithmetic in Q(q), q-combinatorics and central-charge bookkeeping.

mod central;
mod field;
mod poly;
mod qcomb;

pub use central::CentralExponent;
pub use field::Scalar;
pub use poly::Poly;
pub use qcomb::{qbinomial, qfactorial, qint};
