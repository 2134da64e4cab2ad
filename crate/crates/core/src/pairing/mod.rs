//! The weak Hopf pairing between the positive and negative Borel halves.

mod annihilator;
mod axioms;
mod base;
mod basis;
mod compare;
mod convention;
mod fast;
mod golden;
mod gram;
pub(crate) mod oracle;
mod relations;

pub use annihilator::{annihilator_check, Evaluator};
pub use axioms::{check_axiom1, check_axiom2, pairing_axiom_suite};
pub use base::pair_letters;
pub use basis::{cartan_blocks, mode_sequences, monomials, node_sequences, x_words};
pub use compare::{compare_with_oracle, degrees_up_to};
pub use convention::PairingConvention;
pub use fast::{pair, pair_any, pair_cartan_blocks, pair_words, pair_x_blocks};
pub use golden::{check_base_values, g_closed, g_inv_closed};
pub use gram::{gram_matrix, gram_report, Gram};
pub use oracle::PairingOracle;
pub use relations::{
    r1_instances, r2_instances, r3_instances, rel13, rel13_instances, serre_instances, serre_modes, Relation,
};
