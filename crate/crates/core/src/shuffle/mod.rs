//! The braided quantum shuffle algebra at the level of generating currents.

mod checks;
mod expand;
mod ops;
mod ratfun;
mod tensor;
mod zero;

pub use checks::{
    check_associativity, check_braid_equation, check_mode_consistency, check_reduced_words, check_relation13,
    check_serre, weight_words,
};
pub use expand::{mode_expand, mode_expand_element};
pub use ops::{
    apply_word, braid_lift, permutations, reduced_word, reduced_words, relation13_image, serre_element,
    serre_element_with_base, shuffle_disjoint, shuffle_product, shuffles, sigma,
};
pub use ratfun::{Factor, FactoredRational};
pub use tensor::{CurrentTensor, ShuffleElement};
pub use zero::sum_is_zero;
