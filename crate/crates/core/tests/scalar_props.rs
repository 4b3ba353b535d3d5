use proptest::prelude::*;
use qlie_core::scalar::{parse_scalar, Scalar};

fn laurent() -> impl Strategy<Value = Scalar> {
    prop::collection::vec((-3i64..=3, -4i32..=4), 1..4)
        .prop_map(|terms| terms.into_iter().fold(Scalar::zero(), |acc, (c, e)| &acc + &(&Scalar::from_int(c) * &Scalar::v_pow(e))))
}

fn scalar() -> impl Strategy<Value = Scalar> {
    (laurent(), laurent()).prop_map(|(n, d)| if d.is_zero() { n } else { &n / &d })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(200))]

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
    fn qconj_is_an_involutive_automorphism(a in scalar(), b in scalar()) {
        prop_assert_eq!(a.qconj().qconj(), a.clone());
        prop_assert_eq!((&a * &b).qconj(), &a.qconj() * &b.qconj());
        prop_assert_eq!((&a + &b).qconj(), &a.qconj() + &b.qconj());
    }

    #[test]
    fn classical_limit_is_a_homomorphism(a in laurent(), b in laurent()) {
        let la = a.classical_limit().unwrap();
        let lb = b.classical_limit().unwrap();
        prop_assert_eq!((&a * &b).classical_limit().unwrap(), &la * &lb);
        prop_assert_eq!((&a + &b).classical_limit().unwrap(), &la + &lb);
    }

    #[test]
    fn text_round_trip(a in scalar()) {
        let s = a.to_string();
        prop_assert_eq!(parse_scalar(&s).unwrap(), a);
        prop_assert_eq!(parse_scalar(&s).unwrap().to_string(), s);
    }
}
