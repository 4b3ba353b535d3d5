//! The quantized enveloping algebra `U_h(g)` in PBW normal form.

mod cartan;
mod element;
mod hopf;
mod serre;
mod weight;

pub use cartan::{AlgebraKind, CartanData};
pub use element::{word_weight, Element, Monomial, Word};
pub use hopf::Tensor;
pub use serre::{q_binomial, q_number, SerreTable};
pub use weight::{Weight, MAX_RANK};

use std::collections::HashMap;
use std::sync::{Arc, Mutex};

use num_rational::Rational64;
use thiserror::Error;

use crate::scalar::{Scalar, ScalarError};
use serre::Counts;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum UqError {
    #[error("word of length {found} exceeds the degree cap {cap}")]
    DegreeCap { found: usize, cap: usize },
    #[error(transparent)]
    Scalar(#[from] ScalarError),
}

/// `U_h(g)` for one algebra and one root order `D` (`v = q^{1/D}`),
/// together with the caches used by multiplication.
pub struct Uq {
    cartan: CartanData,
    d: u32,
    cap: usize,
    /// exponent of `v` in `q_i`
    steps: Vec<i32>,
    tables: Mutex<HashMap<Counts, Arc<SerreTable>>>,
    memo: Mutex<HashMap<(Word, Word), Arc<Element>>>,
}

impl std::fmt::Debug for Uq {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "Uq({}, D = {}, cap = {})", self.cartan.kind, self.d, self.cap)
    }
}

impl Uq {
    pub fn new(kind: AlgebraKind) -> Self {
        let d = CartanData::new(kind).default_root_order;
        Uq::with_root_order(kind, d)
    }

    pub fn with_root_order(kind: AlgebraKind, d: u32) -> Self {
        let cartan = CartanData::new(kind);
        let steps = cartan.symmetrizers.iter().map(|di| (*di as i32) * d as i32).collect();
        let cap = Uq::default_cap(&cartan);
        Uq { cartan, d, cap, steps, tables: Mutex::new(HashMap::new()), memo: Mutex::new(HashMap::new()) }
    }

    /// Height of the highest root plus two.
    pub fn default_cap(cartan: &CartanData) -> usize {
        cartan.highest_root().height().to_integer() as usize + 2
    }

    pub fn with_cap(mut self, cap: usize) -> Self {
        self.cap = cap;
        self
    }

    pub fn cartan(&self) -> &CartanData {
        &self.cartan
    }

    pub fn root_order(&self) -> u32 {
        self.d
    }

    pub fn cap(&self) -> usize {
        self.cap
    }

    /// `q^r`; fails if `r` is not a multiple of `1/D`.
    pub fn q_pow(&self, r: Rational64) -> Result<Scalar, UqError> {
        Ok(crate::scalar::q_pow(*r.numer(), *r.denom(), self.d)?)
    }

    pub fn q_int(&self, n: i64) -> Scalar {
        Scalar::v_pow(n as i32 * self.d as i32)
    }

    /// `q_i = q^{d_i}`.
    pub fn qi(&self, i: usize) -> Scalar {
        Scalar::v_pow(self.steps[i])
    }

    pub fn qi_pow(&self, i: usize, n: i32) -> Scalar {
        Scalar::v_pow(self.steps[i] * n)
    }

    /// `q^{(x, y)}` for the symmetrized pairing.
    pub fn q_pairing(&self, x: &Weight, y: &Weight) -> Result<Scalar, UqError> {
        self.q_pow(self.cartan.pairing(x, y))
    }

    pub fn table(&self, counts: &Counts) -> Arc<SerreTable> {
        if let Some(t) = self.tables.lock().unwrap().get(counts) {
            return t.clone();
        }
        let t = Arc::new(serre::build(&self.cartan, &self.steps, counts));
        self.tables.lock().unwrap().entry(*counts).or_insert(t).clone()
    }

    fn counts(w: &[u8]) -> Counts {
        let mut c = [0; MAX_RANK];
        for &l in w {
            c[l as usize] += 1;
        }
        c
    }

    /// Expansion of an arbitrary word over standard words of its weight.
    pub fn reduce_word(&self, w: &[u8]) -> Vec<(Word, Scalar)> {
        self.table(&Uq::counts(w)).reduce(w).to_vec()
    }

    /// Standard words of the given weight (nonnegative integer coordinates).
    pub fn standard_words(&self, weight: &Weight) -> Vec<Word> {
        let c = weight.as_ints().expect("integral weight");
        let counts = c.map(|x| x as usize);
        self.table(&counts).standard.clone()
    }

    fn check_cap(&self, len: usize) -> Result<(), UqError> {
        if len > self.cap {
            Err(UqError::DegreeCap { found: len, cap: self.cap })
        } else {
            Ok(())
        }
    }

    /// `F k E` with arbitrary words, brought to normal form.
    pub fn normal_monomial(&self, f: &[u8], k: Weight, e: &[u8]) -> Result<Element, UqError> {
        self.check_cap(f.len())?;
        self.check_cap(e.len())?;
        let mut out = Element::zero();
        let fs = self.table(&Uq::counts(f));
        let es = self.table(&Uq::counts(e));
        for (fw, fc) in fs.reduce(f) {
            for (ew, ec) in es.reduce(e) {
                out.add_term(Monomial::new(fw.clone(), k, ew.clone()), fc * ec);
            }
        }
        Ok(out)
    }

    pub fn e(&self, i: usize) -> Element {
        Element::monomial(Monomial::new(Vec::new(), Weight::zero(), vec![i as u8]), Scalar::one())
    }

    pub fn f(&self, i: usize) -> Element {
        Element::monomial(Monomial::new(vec![i as u8], Weight::zero(), Vec::new()), Scalar::one())
    }

    /// `k_lambda`.
    pub fn k(&self, lambda: Weight) -> Element {
        Element::torus(lambda)
    }

    /// `k_i^{s/2}`.
    pub fn k_half(&self, i: usize, s: i64) -> Element {
        Element::torus(Weight::simple(i).scale(Rational64::new(s, 2)))
    }

    /// `u = q^{2 h_rho}`, realized as `k_{2 rho}` times the pairing scale.
    pub fn u(&self) -> Element {
        Element::torus((self.cartan.rho() * 2).scale(self.cartan.pairing_scale))
    }

    pub fn mul(&self, a: &Element, b: &Element) -> Result<Element, UqError> {
        let mut out = Element::zero();
        for (m1, c1) in a.terms() {
            for (m2, c2) in b.terms() {
                let p = self.mul_monomials(m1, m2)?;
                out.add_scaled(&p, &(c1 * c2));
            }
        }
        Ok(out)
    }

    pub fn mul_all(&self, factors: &[&Element]) -> Result<Element, UqError> {
        let mut acc = Element::one();
        for f in factors {
            acc = self.mul(&acc, f)?;
        }
        Ok(acc)
    }

    pub fn mul_monomials(&self, m1: &Monomial, m2: &Monomial) -> Result<Element, UqError> {
        // F1 k1 (E1 F2) k2 E2 with E1 F2 = sum F' k' E'
        let mid = self.straighten(&m1.e, &m2.f)?;
        let mut out = Element::zero();
        for (m, c) in mid.terms() {
            let c1 = self.q_pairing(&m1.k, &word_weight(&m.f))?.inv()?;
            let c2 = self.q_pairing(&m2.k, &word_weight(&m.e))?.inv()?;
            let mut f = m1.f.clone();
            f.extend_from_slice(&m.f);
            let mut e = m.e.clone();
            e.extend_from_slice(&m2.e);
            let term = self.normal_monomial(&f, m1.k + m.k + m2.k, &e)?;
            out.add_scaled(&term, &(c * &(&c1 * &c2)));
        }
        Ok(out)
    }

    /// Normal form of `E F` for words `E`, `F`.
    fn straighten(&self, e: &[u8], f: &[u8]) -> Result<Arc<Element>, UqError> {
        if e.is_empty() || f.is_empty() {
            return Ok(Arc::new(self.normal_monomial(f, Weight::zero(), e)?));
        }
        let key = (e.to_vec(), f.to_vec());
        if let Some(r) = self.memo.lock().unwrap().get(&key) {
            return Ok(r.clone());
        }
        let j = f[0] as usize;
        let rest = &f[1..];
        // E f_j = f_j E + sum over letters e_j of E of the commutator terms
        let mut out = Element::zero();
        for (m, c) in self.straighten(e, rest)?.terms() {
            let mut fw = vec![j as u8];
            fw.extend_from_slice(&m.f);
            out.add_scaled(&self.normal_monomial(&fw, m.k, &m.e)?, c);
        }
        let aj = Weight::simple(j);
        let denom = (&self.qi(j) - &self.qi(j).inv()?).inv()?;
        for p in 0..e.len() {
            if e[p] as usize != j {
                continue;
            }
            let pre = &e[..p];
            let mut shorter = pre.to_vec();
            shorter.extend_from_slice(&e[p + 1..]);
            let shift = self.q_pairing(&aj, &word_weight(pre))?;
            let inner = self.straighten(&shorter, rest)?;
            for (sign, coeff) in [(1, &shift.inv()? * &denom), (-1, -&(&shift * &denom))] {
                let lambda = aj * sign;
                for (m, c) in inner.terms() {
                    // k_lambda F = q^{-(lambda, wt F)} F k_lambda
                    let comm = self.q_pairing(&lambda, &word_weight(&m.f))?.inv()?;
                    let mono = Monomial::new(m.f.clone(), m.k + lambda, m.e.clone());
                    out.add_term(mono, &(c * &comm) * &coeff);
                }
            }
        }
        let out = Arc::new(out);
        self.memo.lock().unwrap().insert(key, out.clone());
        Ok(out)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn sl2() -> Uq {
        Uq::new(AlgebraKind::Sl2)
    }

    #[test]
    fn sl2_commutator() {
        let u = sl2();
        let ef = u.mul(&u.e(0), &u.f(0)).unwrap();
        let fe = u.mul(&u.f(0), &u.e(0)).unwrap();
        let q = u.q_int(1);
        let denom = (&q - &q.inv().unwrap()).inv().unwrap();
        let expected = fe.add(&u.k(Weight::simple(0)).scale(&denom)).sub(&u.k(-Weight::simple(0)).scale(&denom));
        assert_eq!(ef, expected);
    }

    #[test]
    fn torus_commutes_with_factor() {
        let u = Uq::new(AlgebraKind::A2);
        let lam = Weight::from_ratios(&[(1, 3), (-1, 3)]);
        let lhs = u.mul(&u.k(lam), &u.e(0)).unwrap();
        let rhs = u.mul(&u.e(0), &u.k(lam)).unwrap().scale(&u.q_pairing(&lam, &Weight::simple(0)).unwrap());
        assert_eq!(lhs, rhs);
    }

    #[test]
    fn degree_cap_is_enforced() {
        let u = sl2().with_cap(2);
        let e2 = u.mul(&u.e(0), &u.e(0)).unwrap();
        assert!(matches!(u.mul(&e2, &u.e(0)), Err(UqError::DegreeCap { found: 3, cap: 2 })));
    }

    #[test]
    fn serre_relation_vanishes() {
        let u = Uq::new(AlgebraKind::C2);
        // x1^3 x2 - [3] x1^2 x2 x1 + [3] x1 x2 x1^2 - x2 x1^3 = 0 (q_1 = q)
        let b = q_number(3, u.steps[0]);
        let w = |word: &[u8]| u.normal_monomial(&[], Weight::zero(), word).unwrap();
        let rel = w(&[0, 0, 0, 1]).sub(&w(&[0, 0, 1, 0]).scale(&b)).add(&w(&[0, 1, 0, 0]).scale(&b)).sub(&w(&[1, 0, 0, 0]));
        assert!(rel.is_zero());
    }
}
