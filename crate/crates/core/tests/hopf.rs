mod common;

use common::{random_element, rng};
use qlie_core::scalar::Scalar;
use qlie_core::uq::{AlgebraKind, Element, Uq, Weight};

fn algebras() -> Vec<Uq> {
    AlgebraKind::ALL.iter().map(|k| Uq::new(*k)).collect()
}

#[test]
fn multiplication_is_associative() {
    for uq in algebras() {
        let mut r = rng(1);
        for _ in 0..15 {
            let a = random_element(&uq, &mut r, 1);
            let b = random_element(&uq, &mut r, 1);
            let c = random_element(&uq, &mut r, 1);
            let left = uq.mul(&uq.mul(&a, &b).unwrap(), &c).unwrap();
            let right = uq.mul(&a, &uq.mul(&b, &c).unwrap()).unwrap();
            assert_eq!(left, right, "{}", uq.cartan().kind);
        }
    }
}

#[test]
fn counit_and_antipode_axioms() {
    for uq in algebras() {
        let mut r = rng(2);
        for _ in 0..10 {
            let a = random_element(&uq, &mut r, 1);
            let d = uq.coproduct(&a).unwrap();
            assert_eq!(d.counit_left(&uq), a);
            assert_eq!(d.counit_right(&uq), a);
            let s_id = d.contract(&uq, |x| uq.antipode(x), |x| Ok(x.clone())).unwrap();
            let id_s = d.contract(&uq, |x| Ok(x.clone()), |x| uq.antipode(x)).unwrap();
            let eps = Element::one().scale(&uq.counit(&a));
            assert_eq!(s_id, eps);
            assert_eq!(id_s, eps);
        }
    }
}

#[test]
fn coproduct_is_multiplicative() {
    for uq in algebras() {
        let mut r = rng(3);
        for _ in 0..5 {
            let a = random_element(&uq, &mut r, 1);
            let b = random_element(&uq, &mut r, 1);
            let lhs = uq.coproduct(&uq.mul(&a, &b).unwrap()).unwrap();
            let rhs = uq.coproduct(&a).unwrap().mul(&uq, &uq.coproduct(&b).unwrap()).unwrap();
            assert_eq!(lhs, rhs);
        }
    }
}

#[test]
fn antipode_inverse_and_square() {
    for uq in algebras() {
        let mut r = rng(4);
        let u = uq.u();
        let u_inv = uq.k(-uq.u().terms().next().unwrap().0.k);
        for _ in 0..20 {
            let a = random_element(&uq, &mut r, 2);
            assert_eq!(uq.antipode_inv(&uq.antipode(&a).unwrap()).unwrap(), a);
            let s2 = uq.antipode(&uq.antipode(&a).unwrap()).unwrap();
            assert_eq!(s2, uq.mul_all(&[&u, &a, &u_inv]).unwrap());
        }
    }
}

#[test]
fn adjoint_actions_agree_with_coproduct_formulas() {
    for uq in algebras() {
        let mut r = rng(5);
        for _ in 0..8 {
            let x = random_element(&uq, &mut r, 1);
            let y = random_element(&uq, &mut r, 1);
            assert_eq!(uq.adjoint(&x, &y).unwrap(), uq.adjoint_via_coproduct(&x, &y).unwrap());
            assert_eq!(uq.adjoint_bullet(&x, &y).unwrap(), uq.bullet_via_coproduct(&x, &y).unwrap());
        }
    }
}

#[test]
fn adjoint_is_an_action() {
    for uq in algebras() {
        let mut r = rng(6);
        for _ in 0..8 {
            let x = random_element(&uq, &mut r, 1);
            let x2 = random_element(&uq, &mut r, 1);
            let y = random_element(&uq, &mut r, 1);
            let lhs = uq.adjoint(&uq.mul(&x, &x2).unwrap(), &y).unwrap();
            let rhs = uq.adjoint(&x, &uq.adjoint(&x2, &y).unwrap()).unwrap();
            assert_eq!(lhs, rhs);
            assert_eq!(uq.adjoint(&Element::one(), &y).unwrap(), y);
        }
    }
}

#[test]
fn involutions() {
    for uq in algebras() {
        let mut r = rng(7);
        for _ in 0..10 {
            let a = random_element(&uq, &mut r, 2);
            let b = random_element(&uq, &mut r, 1);
            assert_eq!(uq.qconj_u(&uq.qconj_u(&a)), a);
            assert_eq!(uq.theta(&uq.theta(&a).unwrap()).unwrap(), a);
            assert_eq!(uq.theta_tilde(&uq.theta_tilde(&a).unwrap()).unwrap(), a);
            assert_eq!(uq.tau(&uq.tau(&a).unwrap()).unwrap(), a);
            // q-conjugation and theta are (q-)automorphisms, S an anti-automorphism
            let ab = uq.mul(&a, &b).unwrap();
            assert_eq!(uq.qconj_u(&ab), uq.mul(&uq.qconj_u(&a), &uq.qconj_u(&b)).unwrap());
            assert_eq!(uq.theta(&ab).unwrap(), uq.mul(&uq.theta(&a).unwrap(), &uq.theta(&b).unwrap()).unwrap());
            assert_eq!(uq.antipode(&ab).unwrap(), uq.mul(&uq.antipode(&b).unwrap(), &uq.antipode(&a).unwrap()).unwrap());
            assert_eq!(uq.tau(&ab).unwrap(), uq.mul(&uq.tau(&a).unwrap(), &uq.tau(&b).unwrap()).unwrap());
        }
    }
}

#[test]
fn generator_conventions() {
    let uq = Uq::new(AlgebraKind::Sl2);
    let q = uq.q_int(1);
    assert_eq!(uq.antipode(&uq.e(0)).unwrap(), uq.e(0).scale(&-&q));
    assert_eq!(uq.antipode(&uq.f(0)).unwrap(), uq.f(0).scale(&-&q.inv().unwrap()));
    let k = uq.k(Weight::simple(0));
    assert_eq!(uq.s_tilde(&k).unwrap(), k);
    assert_eq!(uq.theta(&uq.e(0)).unwrap(), uq.f(0));
    assert_eq!(uq.qconj_u(&k), uq.k(-Weight::simple(0)));
    let a = uq.k(Weight::simple(0)).add(&uq.e(0).scale(&Scalar::from_int(3)));
    assert_eq!(uq.counit(&a), Scalar::one());
    assert!(uq.counit(&uq.mul(&uq.e(0), &uq.f(0)).unwrap()).is_zero());
}
