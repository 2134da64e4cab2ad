use qshuffle::double::*;
use qshuffle::modes::ModeWord;
use qshuffle::pairing::PairingConvention;
use qshuffle::parse::parse_word;
use qshuffle::{CartanData, Error};

const CONV: PairingConvention = PairingConvention::QPlus;

fn word(text: &str) -> ModeWord {
    parse_word(text).unwrap()
}

fn agree(c: &CartanData, b: &str, a: &str, n_tail: u64) {
    let (b, a) = (word(b), word(a));
    let oracle = cross_product_oracle(c, CONV, &b, &a, n_tail).unwrap();
    let rules = cross_product_rules(c, CONV, &b, &a).normalized(c).unwrap();
    assert_eq!(rules, oracle, "({b}) past ({a})");
}

#[test]
fn three_term_commutator_matches_oracle() {
    let c = CartanData::preset("B2").unwrap();
    for (m, n) in [(-1, 1), (1, 1), (-2, 0), (0, 2)] {
        agree(&c, &format!("xm(1,{m})"), &format!("xp(1,{n})"), 6);
    }
}

#[test]
fn h_series_exchange_matches_oracle() {
    let c = CartanData::preset("A2").unwrap();
    agree(&c, "psi(1,2)", "phi(2,-1)", 6);
    agree(&c, "psi(2,1)", "phi(2,-2)", 6);
    assert!(check_h_series(&c, 6).passed());
}

#[test]
fn mixed_exchanges_match_oracle() {
    let c = CartanData::preset("G2").unwrap();
    agree(&c, "xm(2,1)", "phi(1,-1)", 6);
    agree(&c, "psi(1,1)", "xp(2,-1)", 6);
    agree(&c, "psi0inv(2)", "xp(1,0)", 6);
}

#[test]
fn commutator_shape_and_centrality() {
    let c = CartanData::preset("A2").unwrap();
    assert!(check_commutator_shape(&c, CONV, 1).passed());
    assert!(check_centrality(&c, CONV, 1, 6).unwrap().passed());
}

#[test]
fn short_truncation_is_refused() {
    let c = CartanData::preset("A2").unwrap();
    let r = cross_product_oracle(&c, CONV, &word("xm(1,-3)"), &word("xp(1,-3)"), 4);
    assert!(matches!(r, Err(Error::NotStabilized { low: 4, high: 6 })), "{r:?}");
}

#[test]
fn multiplication_is_associative_on_small_window() {
    let c = CartanData::preset("A2").unwrap();
    assert!(check_associativity(&c, CONV, 1).unwrap().passed());
}
