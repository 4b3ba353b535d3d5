mod common;

use common::{lemma_failures, random_element, rng};
use proptest::prelude::*;
use qlie_core::uq::{AlgebraKind, Uq};

fn check(kind: AlgebraKind, seed: u64) -> Vec<&'static str> {
    let uq = Uq::new(kind);
    let mut r = rng(seed);
    let a = random_element(&uq, &mut r, 2);
    let b = random_element(&uq, &mut r, 1);
    lemma_failures(&uq, &a, &b)
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(100))]

    #[test]
    fn sl2_identities(seed in any::<u64>()) {
        let bad = check(AlgebraKind::Sl2, seed);
        prop_assert!(bad.is_empty(), "{:?}", bad);
    }

    #[test]
    fn a2_identities(seed in any::<u64>()) {
        let bad = check(AlgebraKind::A2, seed);
        prop_assert!(bad.is_empty(), "{:?}", bad);
    }

    #[test]
    fn c2_identities(seed in any::<u64>()) {
        let bad = check(AlgebraKind::C2, seed);
        prop_assert!(bad.is_empty(), "{:?}", bad);
    }
}
