//! Mode presentation of the two Borel halves: generators, words, straightening,
//! truncated Hopf structure and the Hopf bimodule built on the Cartan part.

mod bimodule;
mod element;
mod generator;
mod hopf;
mod straighten;
mod word;

pub use bimodule::{
    bimodule_action, bimodule_axiom_suite, check_action, check_coaction_morphisms, check_coactions_commute, delta_left,
    delta_right, h_window, m_vector, m_window, right_action,
};
pub use element::{write_term, ModeElement, Tensor};
pub use generator::{GenKind, Generator, Side};
pub use hopf::{
    antipode, antipode_inverse, cartan_runs_normal_form, check_antipode, check_antipode_inverse, check_coassociativity,
    check_counit, coalgebra_axiom_suite, coproduct, coproduct2, coproduct_at, coproduct_letter, coproduct_word, counit,
    counit_word, generator_window, preserves_mode_sum, TruncationPolicy,
};
pub(crate) use straighten::require_straightened;
pub use straighten::{cancel_inverses, normal_form, straighten, straighten_minus, straighten_plus, straighten_word};
pub use word::ModeWord;
