//! Property-based invariants over random inputs.

use proptest::prelude::*;
use qshuffle::modes::{normal_form, straighten, Generator, ModeElement, ModeWord};
use qshuffle::pairing::{pair_any, PairingConvention};
use qshuffle::shuffle::{sigma, sum_is_zero, CurrentTensor, FactoredRational, ShuffleElement};
use qshuffle::{CartanData, Scalar};

fn a2() -> CartanData {
    CartanData::preset("A2").unwrap()
}

/// Laurent polynomial `Σ c_k q^k` with small coefficients and exponents.
fn laurent() -> impl Strategy<Value = Scalar> {
    prop::collection::vec((-3i64..=3, -3i64..=3), 0..4)
        .prop_map(|terms| terms.into_iter().map(|(c, k)| Scalar::from_int(c) * Scalar::q_pow(k)).sum::<Scalar>())
}

fn scalar() -> impl Strategy<Value = Scalar> {
    (laurent(), laurent()).prop_map(|(n, d)| if d.is_zero() { n } else { n.checked_div(&d).unwrap() })
}

fn plus_letter() -> impl Strategy<Value = Generator> {
    prop_oneof![
        (1usize..=2, -2i64..=2).prop_map(|(i, n)| Generator::xp(i, n)),
        (1usize..=2, 0i64..=2).prop_map(|(i, k)| Generator::phi(i, -k)),
        (1usize..=2).prop_map(Generator::phi0inv),
    ]
}

fn minus_letter() -> impl Strategy<Value = Generator> {
    prop_oneof![
        (1usize..=2, -2i64..=2).prop_map(|(i, n)| Generator::xm(i, n)),
        (1usize..=2, 0i64..=2).prop_map(|(i, k)| Generator::psi(i, k)),
        (1usize..=2).prop_map(Generator::psi0inv),
    ]
}

fn plus_word(max: usize) -> impl Strategy<Value = ModeElement> {
    prop::collection::vec(plus_letter(), 0..=max).prop_map(|l| ModeElement::from_word(ModeWord::from_letters(l)))
}

fn minus_word(max: usize) -> impl Strategy<Value = ModeElement> {
    prop::collection::vec(minus_letter(), 0..=max).prop_map(|l| ModeElement::from_word(ModeWord::from_letters(l)))
}

/// A nonzero factored rational function in `z_1..z_3`.
fn factored() -> impl Strategy<Value = FactoredRational> {
    let factor = (-2i64..=2, 1usize..=3, -2i64..=2, 1usize..=3, -2i32..=2);
    (prop::collection::vec(factor, 0..4), -2i32..=2, 1usize..=3).prop_map(|(fs, m, u)| {
        let mut f = FactoredRational::z_power(u, m);
        for (a, u, b, v, e) in fs {
            // skip factors that vanish identically
            if u != v && e != 0 {
                f.mul_linear(a, u, b, v, e);
            }
        }
        f
    })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn field_axioms(a in scalar(), b in scalar(), c in scalar()) {
        prop_assert_eq!(&(&a + &b) + &c, &a + &(&b + &c));
        prop_assert_eq!(&(&a * &b) * &c, &a * &(&b * &c));
        prop_assert_eq!(&a * &(&b + &c), &(&a * &b) + &(&a * &c));
        prop_assert_eq!(&a + &b, &b + &a);
        prop_assert_eq!(&a * &b, &b * &a);
        prop_assert!((&a - &a).is_zero());
        if !a.is_zero() {
            prop_assert!((&a * &a.inv().unwrap()).is_one());
        }
    }

    #[test]
    fn straightening_is_confluent(u in plus_word(2), v in plus_word(2), w in plus_word(2)) {
        let c = a2();
        let whole = normal_form(&c, &(&(&u * &v) * &w)).unwrap();
        let left = normal_form(&c, &(&normal_form(&c, &(&u * &v)).unwrap() * &w)).unwrap();
        let right = normal_form(&c, &(&u * &normal_form(&c, &(&v * &w)).unwrap())).unwrap();
        prop_assert_eq!(&whole, &left);
        prop_assert_eq!(&whole, &right);
    }

    #[test]
    fn straightening_preserves_gradings(u in minus_word(4)) {
        let c = a2();
        let s = straighten(&c, &u).unwrap();
        prop_assert!(s.terms().all(|(w, _)| w.is_straightened()));
        if !s.is_zero() {
            prop_assert_eq!(s.q_degree(c.rank()), u.q_degree(c.rank()));
            prop_assert_eq!(s.mode_sum(), u.mode_sum());
        }
    }

    #[test]
    fn pairing_is_graded(u in plus_word(3), v in minus_word(3)) {
        let c = a2();
        let degree_match = u.q_degree(c.rank()).map(|d| d.0.iter().map(|x| -x).collect::<Vec<_>>())
            == v.q_degree(c.rank()).map(|d| d.0);
        let mode_match = u.mode_sum().zip(v.mode_sum()).is_some_and(|(a, b)| a + b == 0);
        if !(degree_match && mode_match) {
            let p = pair_any(&c, PairingConvention::QPlus, &u, &v).unwrap();
            prop_assert!(p.is_zero(), "{} against {} gives {}", u, v, p);
        }
    }

    #[test]
    fn factored_functions_form_a_domain(f in factored(), g in factored(), h in factored()) {
        let p = f.mul(&g).mul(&h);
        prop_assert!(!sum_is_zero(&[p]));
    }

    #[test]
    fn braiding_permutes_letters(word in prop::collection::vec(1usize..=2, 2..=4), slot in 1usize..4) {
        let c = a2();
        let slot = 1 + (slot - 1) % (word.len() - 1);
        let t = CurrentTensor::new(&word);
        let s = ShuffleElement::from_tensor(sigma(&c, &t, slot).unwrap());
        let mut swapped = word.clone();
        swapped.swap(slot - 1, slot);
        for t in s.tensors() {
            let nodes: Vec<usize> = t.letters.iter().map(|&(n, _)| n).collect();
            prop_assert_eq!(&nodes, &swapped);
        }
    }
}
