//! Exact symbolic computation in the mode presentation of a quantum Borel
//! subalgebra, its weak Hopf pairing, the weak quantum double and the
//! braided shuffle algebra.

pub mod cartan;
pub mod double;
pub mod error;
pub mod linalg;
pub mod modes;
pub mod pairing;
pub mod parse;
pub mod report;
pub mod scalar;
pub mod shuffle;
pub mod suite;

pub use cartan::{CartanData, GSeries, Node, RootDegree};
pub use error::{Error, Result};
pub use report::{Verdict, VerificationReport};
pub use scalar::{CentralExponent, Scalar};
