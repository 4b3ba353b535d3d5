#![allow(dead_code)]

use num_rational::Rational64;
use qlie_core::scalar::Scalar;
use qlie_core::uq::{Element, Tensor, Uq, Weight};
use rand::Rng;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

pub fn rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

pub fn random_scalar(rng: &mut ChaCha8Rng) -> Scalar {
    let mut s = Scalar::zero();
    for _ in 0..rng.gen_range(1..=2) {
        let c = rng.gen_range(-3i64..=3);
        let e = rng.gen_range(-3i32..=3);
        s = &s + &(&Scalar::from_int(c) * &Scalar::v_pow(e));
    }
    if s.is_zero() {
        Scalar::one()
    } else {
        s
    }
}

fn random_word(uq: &Uq, rng: &mut ChaCha8Rng, max_len: usize) -> Vec<u8> {
    let len = rng.gen_range(0..=max_len);
    (0..len).map(|_| rng.gen_range(0..uq.cartan().rank) as u8).collect()
}

fn random_torus(uq: &Uq, rng: &mut ChaCha8Rng) -> Weight {
    let mut w = Weight::zero();
    for i in 0..uq.cartan().rank {
        w.0[i] = Rational64::new(rng.gen_range(-2i64..=2), 2);
    }
    w
}

/// A random element whose E- and F-words have length at most `max_len`.
pub fn random_element(uq: &Uq, rng: &mut ChaCha8Rng, max_len: usize) -> Element {
    let mut out = Element::zero();
    for _ in 0..rng.gen_range(1..=2) {
        let f = random_word(uq, rng, max_len);
        let e = random_word(uq, rng, max_len);
        let k = random_torus(uq, rng);
        let c = random_scalar(rng);
        out.add_scaled(&uq.normal_monomial(&f, k, &e).unwrap(), &c);
    }
    out
}

/// Identities of q-conjugation, θ~ and S~ on one pair; returns the names of
/// those that fail.
pub fn lemma_failures(uq: &Uq, a: &Element, b: &Element) -> Vec<&'static str> {
    let mut bad = Vec::new();
    let t = |x: &Element| uq.qconj_u(x);
    if uq.counit(&t(a)) != uq.counit(a).qconj() {
        bad.push("counit");
    }
    let mut flipped = Tensor::zero();
    for (m1, m2, c) in uq.coproduct(a).unwrap().terms() {
        let left = t(&Element::monomial(m2.clone(), c.clone()));
        let right = t(&Element::monomial(m1.clone(), Scalar::one()));
        flipped = flipped.add(&Tensor::pure(&left, &right));
    }
    if uq.coproduct(&t(a)).unwrap() != flipped {
        bad.push("coproduct");
    }
    if uq.antipode(&t(a)).unwrap() != t(&uq.antipode_inv(a).unwrap()) {
        bad.push("antipode");
    }
    if uq.adjoint_bullet(&t(a), &t(b)).unwrap() != t(&uq.adjoint(a, b).unwrap()) {
        bad.push("bwr");
    }
    let th = |x: &Element| uq.theta_tilde(x).unwrap();
    if uq.adjoint(&th(a), &th(b)).unwrap() != th(&uq.adjoint(a, b).unwrap()) {
        bad.push("tiso");
    }
    let st = |x: &Element| uq.s_tilde(x).unwrap();
    if uq.adjoint(&st(a), &st(b)).unwrap() != st(&uq.adjoint(&uq.antipode_inv(a).unwrap(), b).unwrap()) {
        bad.push("swb");
    }
    let u = uq.u();
    let u_inv = uq.k(-u.terms().next().unwrap().0.k);
    if uq.antipode(&uq.antipode(a).unwrap()).unwrap() != uq.mul_all(&[&u, a, &u_inv]).unwrap() {
        bad.push("defu");
    }
    bad
}
