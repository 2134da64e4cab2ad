//! The weak quantum double of the positive and negative Borel mode algebras:
//! exchange rules, an independent route through the pairing, and checks.

mod checks;
mod element;
mod oracle;
mod rules;

pub use checks::{
    check_associativity, check_centrality, check_commutator_shape, check_embeddings, check_h_series,
    compare_rules_oracle, negative_generators, positive_generators,
};
pub use element::{DoubleElement, DoubleKey};
pub use oracle::{cross_product_at, cross_product_oracle};
pub use rules::{cross_product_rules, h_coeffs};
