use qshuffle::cartan::{check_clearing_identity, g_coeffs};
use qshuffle::parse::{parse_element, parse_scalar, parse_word};
use qshuffle::{CartanData, Error, Scalar};

#[test]
fn displays_parse_back() {
    for text in ["xp(1,0) phi(2,-1) - (q + q^-1) K(2)", "xm(1,2) psi(1,0) Kp(-1)", "phi0inv(1) + 3/2 psi0inv(2)"] {
        let e = parse_element(text).unwrap();
        assert_eq!(parse_element(&e.to_string()).unwrap(), e, "{text}");
    }
    let s = parse_scalar("-q/(q^2 + 1)").unwrap();
    assert_eq!(parse_scalar(&s.to_string()).unwrap(), s);
}

#[test]
fn scalar_syntax_agrees_with_arithmetic() {
    let q = Scalar::q_pow(1);
    let qi = Scalar::q_pow(-1);
    assert_eq!(parse_scalar("(q + q^-1)^2").unwrap(), &(&q + &qi) * &(&q + &qi));
    assert_eq!(parse_scalar("1/(q - q^-1)").unwrap(), (&q - &qi).inv().unwrap());
}

#[test]
fn malformed_input_reports_a_position() {
    assert!(matches!(parse_element("xp(1,3"), Err(Error::Parse { pos: 6, .. })));
    assert!(matches!(parse_element("xp(1,0) +"), Err(Error::Parse { .. })));
    assert!(parse_word("2 xp(1,0)").is_err());
    assert!(parse_scalar("xp(1,0)").is_err());
}

#[test]
fn custom_cartan_data_from_json() {
    let c = CartanData::from_json(r#"{"matrix": [[2, -3], [-1, 2]], "symmetrizer": [1, 3]}"#).unwrap();
    assert_eq!(c.form(1, 2), -3);
    assert_eq!(c.form(2, 2), 6);
    assert!(CartanData::from_json(r#"{"matrix": [[2, -2], [-1, 2]], "symmetrizer": [1, 1]}"#).is_err());
    assert!(CartanData::from_json(r#"{"matrix": [[2]]}"#).is_err());
}

#[test]
fn structure_series_clear_their_denominator() {
    for name in ["A2", "B2", "G2"] {
        let c = CartanData::preset(name).unwrap();
        for i in c.nodes() {
            for j in c.nodes() {
                let g = g_coeffs(&c, i, j, 10).unwrap();
                assert!(check_clearing_identity(&g, 10).passed(), "{name} ({i},{j})");
            }
        }
    }
}

#[test]
fn nodes_are_one_based() {
    let c = CartanData::preset("A2").unwrap();
    assert!(g_coeffs(&c, 0, 1, 3).is_err());
    assert!(g_coeffs(&c, 3, 1, 3).is_err());
}
