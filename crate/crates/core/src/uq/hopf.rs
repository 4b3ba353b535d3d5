//! Hopf structure, involutions and the two adjoint actions.

use std::collections::BTreeMap;

use num_rational::Rational64;

use crate::scalar::Scalar;

use super::element::{Element, Monomial};
use super::weight::Weight;
use super::{Uq, UqError};

/// An element of `U ⊗ U` as a combination of pairs of normal monomials.
#[derive(Clone, PartialEq, Eq, Default, Debug)]
pub struct Tensor {
    terms: BTreeMap<(Monomial, Monomial), Scalar>,
}

impl Tensor {
    pub fn zero() -> Self {
        Tensor::default()
    }

    pub fn pure(a: &Element, b: &Element) -> Self {
        let mut t = Tensor::zero();
        for (m1, c1) in a.terms() {
            for (m2, c2) in b.terms() {
                t.add_term(m1.clone(), m2.clone(), c1 * c2);
            }
        }
        t
    }

    pub fn add_term(&mut self, a: Monomial, b: Monomial, c: Scalar) {
        if c.is_zero() {
            return;
        }
        let key = (a, b);
        let s = match self.terms.get(&key) {
            Some(x) => x + &c,
            None => c,
        };
        if s.is_zero() {
            self.terms.remove(&key);
        } else {
            self.terms.insert(key, s);
        }
    }

    pub fn add(&self, other: &Tensor) -> Tensor {
        let mut out = self.clone();
        for ((a, b), c) in &other.terms {
            out.add_term(a.clone(), b.clone(), c.clone());
        }
        out
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Monomial, &Monomial, &Scalar)> {
        self.terms.iter().map(|((a, b), c)| (a, b, c))
    }

    pub fn mul(&self, uq: &Uq, other: &Tensor) -> Result<Tensor, UqError> {
        let mut out = Tensor::zero();
        for ((a1, b1), c1) in &self.terms {
            for ((a2, b2), c2) in &other.terms {
                let left = uq.mul_monomials(a1, a2)?;
                let right = uq.mul_monomials(b1, b2)?;
                let c = c1 * c2;
                for (ma, ca) in left.terms() {
                    for (mb, cb) in right.terms() {
                        out.add_term(ma.clone(), mb.clone(), &(&c * ca) * cb);
                    }
                }
            }
        }
        Ok(out)
    }

    /// `(f ⊗ g)` followed by multiplication.
    pub fn contract(
        &self,
        uq: &Uq,
        f: impl Fn(&Element) -> Result<Element, UqError>,
        g: impl Fn(&Element) -> Result<Element, UqError>,
    ) -> Result<Element, UqError> {
        let mut out = Element::zero();
        for ((a, b), c) in &self.terms {
            let fa = f(&Element::monomial(a.clone(), Scalar::one()))?;
            let gb = g(&Element::monomial(b.clone(), Scalar::one()))?;
            out.add_scaled(&uq.mul(&fa, &gb)?, c);
        }
        Ok(out)
    }

    pub fn counit_left(&self, uq: &Uq) -> Element {
        let mut out = Element::zero();
        for ((a, b), c) in &self.terms {
            let e = uq.counit(&Element::monomial(a.clone(), c.clone()));
            out.add_term(b.clone(), e);
        }
        out
    }

    pub fn counit_right(&self, uq: &Uq) -> Element {
        let mut out = Element::zero();
        for ((a, b), c) in &self.terms {
            let e = uq.counit(&Element::monomial(b.clone(), c.clone()));
            out.add_term(a.clone(), e);
        }
        out
    }
}

impl Uq {
    fn half(&self, i: usize, s: i64) -> Weight {
        Weight::simple(i).scale(Rational64::new(s, 2))
    }

    fn delta_e(&self, i: usize) -> Tensor {
        // x ⊗ k^{1/2} + k^{-1/2} ⊗ x
        let x = self.e(i);
        Tensor::pure(&x, &self.k(self.half(i, 1))).add(&Tensor::pure(&self.k(self.half(i, -1)), &x))
    }

    fn delta_f(&self, i: usize) -> Tensor {
        let x = self.f(i);
        Tensor::pure(&x, &self.k(self.half(i, 1))).add(&Tensor::pure(&self.k(self.half(i, -1)), &x))
    }

    pub fn coproduct(&self, a: &Element) -> Result<Tensor, UqError> {
        let mut out = Tensor::zero();
        for (m, c) in a.terms() {
            let mut t = Tensor::pure(&Element::one(), &Element::one());
            for &l in &m.f {
                t = t.mul(self, &self.delta_f(l as usize))?;
            }
            t = t.mul(self, &Tensor::pure(&self.k(m.k), &self.k(m.k)))?;
            for &l in &m.e {
                t = t.mul(self, &self.delta_e(l as usize))?;
            }
            for (x, y, s) in t.terms() {
                out.add_term(x.clone(), y.clone(), s * c);
            }
        }
        Ok(out)
    }

    pub fn counit(&self, a: &Element) -> Scalar {
        let mut acc = Scalar::zero();
        for (m, c) in a.terms() {
            if m.e.is_empty() && m.f.is_empty() {
                acc = &acc + c;
            }
        }
        acc
    }

    /// `S` or `S^{-1}` (`inverse = true`) on one monomial.
    fn antipode_monomial(&self, m: &Monomial, inverse: bool) -> Result<Element, UqError> {
        let sign = if inverse { -1 } else { 1 };
        // S(e_i) = -q_i e_i, S(f_i) = -q_i^{-1} f_i; S^{-1} inverts the powers
        let mut c = Scalar::one();
        for &l in &m.e {
            c = &c * &-self.qi_pow(l as usize, sign);
        }
        for &l in &m.f {
            c = &c * &-self.qi_pow(l as usize, -sign);
        }
        let rev_e: Vec<u8> = m.e.iter().rev().copied().collect();
        let rev_f: Vec<u8> = m.f.iter().rev().copied().collect();
        // S(F k E) = S(E) k_{-lambda} S(F)
        let e_part = self.normal_monomial(&[], Weight::zero(), &rev_e)?;
        let f_part = self.normal_monomial(&rev_f, Weight::zero(), &[])?;
        Ok(self.mul_all(&[&e_part, &self.k(-m.k), &f_part])?.scale(&c))
    }

    fn linear(&self, a: &Element, f: impl Fn(&Monomial) -> Result<Element, UqError>) -> Result<Element, UqError> {
        let mut out = Element::zero();
        for (m, c) in a.terms() {
            out.add_scaled(&f(m)?, c);
        }
        Ok(out)
    }

    pub fn antipode(&self, a: &Element) -> Result<Element, UqError> {
        self.linear(a, |m| self.antipode_monomial(m, false))
    }

    pub fn antipode_inv(&self, a: &Element) -> Result<Element, UqError> {
        self.linear(a, |m| self.antipode_monomial(m, true))
    }

    /// q-conjugation: coefficients `v -> v^{-1}`, generators fixed,
    /// `k_lambda -> k_{-lambda}`. The Serre relations are invariant, so
    /// standard words stay standard.
    pub fn qconj_u(&self, a: &Element) -> Element {
        let mut out = Element::zero();
        for (m, c) in a.terms() {
            out.add_term(Monomial::new(m.f.clone(), -m.k, m.e.clone()), c.qconj());
        }
        out
    }

    /// Cartan involution: `x_i^± -> x_i^∓`, `k_lambda -> k_{-lambda}`.
    pub fn theta(&self, a: &Element) -> Result<Element, UqError> {
        self.linear(a, |m| {
            let e_part = self.normal_monomial(&[], Weight::zero(), &m.f)?;
            let f_part = self.normal_monomial(&m.e, Weight::zero(), &[])?;
            self.mul_all(&[&e_part, &self.k(-m.k), &f_part])
        })
    }

    pub fn theta_tilde(&self, a: &Element) -> Result<Element, UqError> {
        Ok(self.qconj_u(&self.theta(a)?))
    }

    pub fn s_tilde(&self, a: &Element) -> Result<Element, UqError> {
        Ok(self.qconj_u(&self.antipode(a)?))
    }

    /// Diagram automorphism; the identity when the diagram has no symmetry.
    pub fn tau(&self, a: &Element) -> Result<Element, UqError> {
        let t = &self.cartan().tau;
        self.linear(a, |m| {
            let f: Vec<u8> = m.f.iter().map(|l| t[*l as usize] as u8).collect();
            let e: Vec<u8> = m.e.iter().map(|l| t[*l as usize] as u8).collect();
            self.normal_monomial(&f, self.cartan().apply_tau(&m.k), &e)
        })
    }

    /// `k_lambda a k_{-lambda}`.
    pub fn conjugate_by_torus(&self, lambda: &Weight, a: &Element) -> Result<Element, UqError> {
        let mut out = Element::zero();
        for (m, c) in a.terms() {
            out.add_term(m.clone(), c * &self.q_pairing(lambda, &m.weight())?);
        }
        Ok(out)
    }

    /// `g a k^{s/2} - c k^{s/2} a g` for a generator `g`.
    fn twisted_commutator(&self, g: &Element, i: usize, s: i64, c: &Scalar, a: &Element) -> Result<Element, UqError> {
        let k = self.k(self.half(i, s));
        let first = self.mul(&self.mul(g, a)?, &k)?;
        let second = self.mul(&self.mul(&k, a)?, g)?;
        Ok(first.sub(&second.scale(c)))
    }

    /// `e_i ∘ a = e_i a k_i^{-1/2} - q_i k_i^{-1/2} a e_i`.
    pub fn act_e(&self, i: usize, a: &Element) -> Result<Element, UqError> {
        self.twisted_commutator(&self.e(i), i, -1, &self.qi(i), a)
    }

    /// `f_i ∘ a = f_i a k_i^{-1/2} - q_i^{-1} k_i^{-1/2} a f_i`.
    pub fn act_f(&self, i: usize, a: &Element) -> Result<Element, UqError> {
        self.twisted_commutator(&self.f(i), i, -1, &self.qi_pow(i, -1), a)
    }

    /// `e_i • a = e_i a k_i^{1/2} - q_i^{-1} k_i^{1/2} a e_i`.
    pub fn bullet_e(&self, i: usize, a: &Element) -> Result<Element, UqError> {
        self.twisted_commutator(&self.e(i), i, 1, &self.qi_pow(i, -1), a)
    }

    /// `f_i • a = f_i a k_i^{1/2} - q_i k_i^{1/2} a f_i`.
    pub fn bullet_f(&self, i: usize, a: &Element) -> Result<Element, UqError> {
        self.twisted_commutator(&self.f(i), i, 1, &self.qi(i), a)
    }

    /// The adjoint action `x ∘ y`, computed generator by generator.
    pub fn adjoint(&self, x: &Element, y: &Element) -> Result<Element, UqError> {
        self.generic_action(x, y, false)
    }

    /// The second adjoint action `x • y`.
    pub fn adjoint_bullet(&self, x: &Element, y: &Element) -> Result<Element, UqError> {
        self.generic_action(x, y, true)
    }

    fn generic_action(&self, x: &Element, y: &Element, bullet: bool) -> Result<Element, UqError> {
        let mut out = Element::zero();
        for (m, c) in x.terms() {
            let mut acc = y.clone();
            for &l in m.e.iter().rev() {
                acc = if bullet { self.bullet_e(l as usize, &acc)? } else { self.act_e(l as usize, &acc)? };
            }
            acc = self.conjugate_by_torus(&m.k, &acc)?;
            for &l in m.f.iter().rev() {
                acc = if bullet { self.bullet_f(l as usize, &acc)? } else { self.act_f(l as usize, &acc)? };
            }
            out.add_scaled(&acc, c);
        }
        Ok(out)
    }

    /// `x ∘ y = Σ x(1) y S(x(2))` straight from the coproduct.
    pub fn adjoint_via_coproduct(&self, x: &Element, y: &Element) -> Result<Element, UqError> {
        let mut out = Element::zero();
        for (a, b, c) in self.coproduct(x)?.terms() {
            let sb = self.antipode(&Element::monomial(b.clone(), Scalar::one()))?;
            let ay = self.mul(&Element::monomial(a.clone(), c.clone()), y)?;
            out = out.add(&self.mul(&ay, &sb)?);
        }
        Ok(out)
    }

    /// `x • y = Σ x(2) y S^{-1}(x(1))` straight from the coproduct.
    pub fn bullet_via_coproduct(&self, x: &Element, y: &Element) -> Result<Element, UqError> {
        let mut out = Element::zero();
        for (a, b, c) in self.coproduct(x)?.terms() {
            let sa = self.antipode_inv(&Element::monomial(a.clone(), Scalar::one()))?;
            let by = self.mul(&Element::monomial(b.clone(), c.clone()), y)?;
            out = out.add(&self.mul(&by, &sa)?);
        }
        Ok(out)
    }
}
