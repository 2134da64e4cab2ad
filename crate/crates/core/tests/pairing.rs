use qshuffle::pairing::*;
use qshuffle::parse::{parse_element, parse_scalar};
use qshuffle::{CartanData, RootDegree};

fn a2() -> CartanData {
    CartanData::preset("A2").unwrap()
}

#[test]
fn oracle_and_fast_evaluator_agree_on_two_letter_words() {
    let c = a2();
    let conv = PairingConvention::QPlus;
    let u = parse_element("xp(1,1) xp(1,0)").unwrap();
    let v = parse_element("xm(1,0) xm(1,-1)").unwrap();
    let mut oracle = PairingOracle::new(&c, conv);
    let want = oracle.pair(&u, &v).unwrap();
    assert!(oracle.summands() > 0);
    assert_eq!(pair_any(&c, conv, &u, &v).unwrap(), want);
    // the denominator divides (q + q^-1)^2
    let cleared = &want * &parse_scalar("(q + q^-1)^2").unwrap();
    assert!(cleared.is_laurent(), "{cleared}");
}

#[test]
fn phi_psi_values_come_from_the_structure_series() {
    let c = CartanData::preset("B2").unwrap();
    let conv = PairingConvention::QPlus;
    for k in 0..4 {
        let u = parse_element(&format!("phi(1,{})", -k)).unwrap();
        let v = parse_element(&format!("psi(2,{k})")).unwrap();
        assert_eq!(pair(&c, conv, &u, &v).unwrap(), g_closed(&c, 1, 2, k as usize));
    }
}

#[test]
fn cartan_block_pairs_through_the_coproduct() {
    let c = a2();
    let conv = PairingConvention::QPlus;
    let u = parse_element("phi(1,0) phi(2,-1)").unwrap();
    let v = parse_element("psi(1,1)").unwrap();
    let mut oracle = PairingOracle::new(&c, conv);
    assert_eq!(pair(&c, conv, &u, &v).unwrap(), oracle.pair(&u, &v).unwrap());
}

#[test]
fn gram_at_a_simple_root_is_the_pairing_constant() {
    let c = a2();
    let conv = PairingConvention::QPlus;
    let (gram, report) = gram_report(&c, conv, &RootDegree(vec![1, 0]), 0, 0).unwrap();
    assert!(report.passed(), "{report}");
    assert_eq!(gram.rank, 1);
    assert_eq!(gram.determinant, Some(conv.x_constant()));
}

#[test]
fn relations_annihilate_and_non_relations_do_not() {
    let c = a2();
    let mut ev = Evaluator::new(&c, PairingConvention::QPlus);
    for rel in rel13_instances(&c, 1).iter().chain(serre_instances(&c, 2, 1, 1).unwrap().iter()) {
        let r = annihilator_check(&mut ev, rel, 1, 1).unwrap();
        assert!(r.passed(), "{r}");
    }
    let bogus =
        Relation { name: "commutator".into(), element: parse_element("xp(1,0) xp(1,1) - xp(1,1) xp(1,0)").unwrap() };
    assert!(!annihilator_check(&mut ev, &bogus, 1, 1).unwrap().passed());
}

#[test]
fn evaluator_matches_oracle_on_a_small_sweep() {
    let c = CartanData::preset("B2").unwrap();
    let r = compare_with_oracle(&c, PairingConvention::QMinus, 2, 1, 1).unwrap();
    assert!(r.passed(), "{r}");
}

#[test]
fn base_values_hold_for_every_preset() {
    for name in ["A1", "A2", "B2", "G2"] {
        let c = CartanData::preset(name).unwrap();
        let r = check_base_values(&c, PairingConvention::QPlus, 2).unwrap();
        assert!(r.passed(), "{r}");
    }
}
