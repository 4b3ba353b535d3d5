use std::collections::BTreeMap;
use std::fmt;

use crate::scalar::{pretty_q, Scalar};

use super::weight::Weight;

/// A word in the simple generators, letters are 0-based node indices.
pub type Word = Vec<u8>;

/// `F-word · k_lambda · E-word`, the normal order of the triangular
/// decomposition.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Monomial {
    pub f: Word,
    pub k: Weight,
    pub e: Word,
}

impl Monomial {
    pub fn one() -> Self {
        Monomial { f: Vec::new(), k: Weight::zero(), e: Vec::new() }
    }

    pub fn torus(k: Weight) -> Self {
        Monomial { f: Vec::new(), k, e: Vec::new() }
    }

    pub fn new(f: Word, k: Weight, e: Word) -> Self {
        Monomial { f, k, e }
    }

    /// Adjoint weight: E-letters count positively, F-letters negatively.
    pub fn weight(&self) -> Weight {
        word_weight(&self.e) - word_weight(&self.f)
    }

    pub fn is_one(&self) -> bool {
        self.f.is_empty() && self.e.is_empty() && self.k.is_zero()
    }
}

pub fn word_weight(w: &[u8]) -> Weight {
    let mut out = Weight::zero();
    for &l in w {
        out.0[l as usize] += 1;
    }
    out
}

/// A finite linear combination of normal-ordered monomials. Zero
/// coefficients are never stored.
#[derive(Clone, PartialEq, Eq, Default)]
pub struct Element {
    terms: BTreeMap<Monomial, Scalar>,
}

impl Element {
    pub fn zero() -> Self {
        Element::default()
    }

    pub fn one() -> Self {
        Element::monomial(Monomial::one(), Scalar::one())
    }

    pub fn monomial(m: Monomial, c: Scalar) -> Self {
        let mut e = Element::zero();
        e.add_term(m, c);
        e
    }

    pub fn torus(k: Weight) -> Self {
        Element::monomial(Monomial::torus(k), Scalar::one())
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Monomial, &Scalar)> {
        self.terms.iter()
    }

    pub fn coefficient(&self, m: &Monomial) -> Scalar {
        self.terms.get(m).cloned().unwrap_or_else(Scalar::zero)
    }

    pub fn add_term(&mut self, m: Monomial, c: Scalar) {
        if c.is_zero() {
            return;
        }
        match self.terms.entry(m) {
            std::collections::btree_map::Entry::Vacant(v) => {
                v.insert(c);
            }
            std::collections::btree_map::Entry::Occupied(mut o) => {
                let s = o.get() + &c;
                if s.is_zero() {
                    o.remove();
                } else {
                    *o.get_mut() = s;
                }
            }
        }
    }

    pub fn add_scaled(&mut self, other: &Element, c: &Scalar) {
        if c.is_zero() {
            return;
        }
        for (m, x) in &other.terms {
            self.add_term(m.clone(), if c.is_one() { x.clone() } else { x * c });
        }
    }

    pub fn add(&self, other: &Element) -> Element {
        let mut out = self.clone();
        out.add_scaled(other, &Scalar::one());
        out
    }

    pub fn sub(&self, other: &Element) -> Element {
        let mut out = self.clone();
        out.add_scaled(other, &-Scalar::one());
        out
    }

    pub fn scale(&self, c: &Scalar) -> Element {
        if c.is_zero() {
            return Element::zero();
        }
        Element { terms: self.terms.iter().map(|(m, x)| (m.clone(), x * c)).collect() }
    }

    pub fn neg(&self) -> Element {
        Element { terms: self.terms.iter().map(|(m, x)| (m.clone(), -x)).collect() }
    }

    /// Applies `f` to every coefficient, dropping zeros.
    pub fn map_coefficients(&self, f: impl Fn(&Scalar) -> Scalar) -> Element {
        let mut out = Element::zero();
        for (m, x) in &self.terms {
            out.add_term(m.clone(), f(x));
        }
        out
    }

    /// The common adjoint weight, if the element is homogeneous and nonzero.
    pub fn weight(&self) -> Option<Weight> {
        let mut it = self.terms.keys().map(Monomial::weight);
        let w = it.next()?;
        if it.all(|x| x == w) {
            Some(w)
        } else {
            None
        }
    }

    /// Longest E- or F-word length among the terms.
    pub fn degree(&self) -> usize {
        self.terms.keys().map(|m| m.e.len().max(m.f.len())).max().unwrap_or(0)
    }

    /// Scalar `s` with `self = s * other`, if the two are proportional.
    pub fn ratio_to(&self, other: &Element) -> Option<Scalar> {
        if other.is_zero() {
            return if self.is_zero() { Some(Scalar::zero()) } else { None };
        }
        let (m, c) = other.terms.iter().next().unwrap();
        let s = &self.coefficient(m) / c;
        if &other.scale(&s) == self {
            Some(s)
        } else {
            None
        }
    }

    /// Rendering with the given exponent denominator `d` of `v = q^{1/d}`.
    pub fn render(&self, d: u32) -> String {
        self.render_with(|c| pretty_q(c, d))
    }

    fn render_with(&self, coeff: impl Fn(&Scalar) -> String) -> String {
        if self.is_zero() {
            return "0".to_string();
        }
        let parts: Vec<String> = self
            .terms
            .iter()
            .map(|(m, c)| {
                let mono = render_monomial(m);
                if mono.is_empty() {
                    format!("({})", coeff(c))
                } else {
                    format!("({}) {}", coeff(c), mono)
                }
            })
            .collect();
        parts.join(" + ")
    }
}

fn render_monomial(m: &Monomial) -> String {
    let mut parts = Vec::new();
    for &l in &m.f {
        parts.push(format!("f{}", l + 1));
    }
    for (i, x) in m.k.0.iter().enumerate() {
        if *x == num_rational::Rational64::from_integer(1) {
            parts.push(format!("k{}", i + 1));
        } else if *x != num_rational::Rational64::from_integer(0) {
            parts.push(format!("k{}^({})", i + 1, x));
        }
    }
    for &l in &m.e {
        parts.push(format!("e{}", l + 1));
    }
    parts.join(" ")
}

impl fmt::Debug for Element {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.render_with(|c| c.to_string()))
    }
}

impl fmt::Debug for Monomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s = render_monomial(self);
        f.write_str(if s.is_empty() { "1" } else { &s })
    }
}
