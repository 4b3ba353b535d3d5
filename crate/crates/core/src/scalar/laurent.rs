//! Sparse Laurent polynomials in `v` over the Gaussian rationals.

use std::collections::BTreeMap;

use num_integer::Integer;
use num_traits::{One, Zero};

use super::gauss::GaussRat;

/// Terms are kept sorted by exponent, with no zero coefficients.
#[derive(Clone, PartialEq, Eq, Hash, Debug, Default)]
pub struct Laurent {
    terms: Vec<(i32, GaussRat)>,
}

impl Laurent {
    pub fn zero() -> Self {
        Laurent { terms: Vec::new() }
    }

    pub fn one() -> Self {
        Laurent::constant(GaussRat::one())
    }

    pub fn constant(c: GaussRat) -> Self {
        Laurent::monomial(0, c)
    }

    pub fn monomial(exp: i32, c: GaussRat) -> Self {
        if c.is_zero() {
            Laurent::zero()
        } else {
            Laurent { terms: vec![(exp, c)] }
        }
    }

    /// Builds from arbitrary (exponent, coefficient) pairs, merging duplicates.
    pub fn from_terms<I: IntoIterator<Item = (i32, GaussRat)>>(terms: I) -> Self {
        let mut map: BTreeMap<i32, GaussRat> = BTreeMap::new();
        for (e, c) in terms {
            *map.entry(e).or_insert_with(GaussRat::zero) += &c;
        }
        Laurent { terms: map.into_iter().filter(|(_, c)| !c.is_zero()).collect() }
    }

    pub fn terms(&self) -> &[(i32, GaussRat)] {
        &self.terms
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_one(&self) -> bool {
        self.terms.len() == 1 && self.terms[0].0 == 0 && self.terms[0].1.is_one()
    }

    pub fn is_monomial(&self) -> bool {
        self.terms.len() == 1
    }

    pub fn low(&self) -> i32 {
        self.terms.first().map_or(0, |t| t.0)
    }

    pub fn high(&self) -> i32 {
        self.terms.last().map_or(0, |t| t.0)
    }

    pub fn leading(&self) -> &GaussRat {
        &self.terms.last().expect("leading coefficient of zero polynomial").1
    }

    pub fn trailing(&self) -> &GaussRat {
        &self.terms.first().expect("trailing coefficient of zero polynomial").1
    }

    pub fn shift(&self, by: i32) -> Self {
        Laurent { terms: self.terms.iter().map(|(e, c)| (e + by, c.clone())).collect() }
    }

    pub fn scale(&self, c: &GaussRat) -> Self {
        if c.is_zero() {
            return Laurent::zero();
        }
        Laurent { terms: self.terms.iter().map(|(e, x)| (*e, x * c)).collect() }
    }

    pub fn neg(&self) -> Self {
        Laurent { terms: self.terms.iter().map(|(e, c)| (*e, -c)).collect() }
    }

    /// `v -> v^{-1}`.
    pub fn reverse(&self) -> Self {
        Laurent { terms: self.terms.iter().rev().map(|(e, c)| (-e, c.clone())).collect() }
    }

    pub fn eval_one(&self) -> GaussRat {
        let mut acc = GaussRat::zero();
        for (_, c) in &self.terms {
            acc += c;
        }
        acc
    }

    pub fn add(&self, other: &Laurent) -> Laurent {
        self.merge(other, false)
    }

    pub fn sub(&self, other: &Laurent) -> Laurent {
        self.merge(other, true)
    }

    fn merge(&self, other: &Laurent, negate: bool) -> Laurent {
        if other.is_zero() {
            return self.clone();
        }
        if self.is_zero() {
            return if negate { other.neg() } else { other.clone() };
        }
        let mut out = Vec::with_capacity(self.terms.len() + other.terms.len());
        let (mut i, mut j) = (0, 0);
        let (a, b) = (&self.terms, &other.terms);
        while i < a.len() || j < b.len() {
            if j == b.len() || (i < a.len() && a[i].0 < b[j].0) {
                out.push(a[i].clone());
                i += 1;
            } else if i == a.len() || b[j].0 < a[i].0 {
                let c = if negate { -&b[j].1 } else { b[j].1.clone() };
                out.push((b[j].0, c));
                j += 1;
            } else {
                let c = if negate { &a[i].1 - &b[j].1 } else { &a[i].1 + &b[j].1 };
                if !c.is_zero() {
                    out.push((a[i].0, c));
                }
                i += 1;
                j += 1;
            }
        }
        Laurent { terms: out }
    }

    pub fn mul(&self, other: &Laurent) -> Laurent {
        if self.is_zero() || other.is_zero() {
            return Laurent::zero();
        }
        if self.terms.len() == 1 {
            let (e, c) = &self.terms[0];
            return other.scale(c).shift(*e);
        }
        if other.terms.len() == 1 {
            let (e, c) = &other.terms[0];
            return self.scale(c).shift(*e);
        }
        let mut map: BTreeMap<i32, GaussRat> = BTreeMap::new();
        for (ea, ca) in &self.terms {
            for (eb, cb) in &other.terms {
                let prod = ca * cb;
                map.entry(ea + eb).and_modify(|x| *x += &prod).or_insert(prod);
            }
        }
        Laurent { terms: map.into_iter().filter(|(_, c)| !c.is_zero()).collect() }
    }

    /// Divides by the leading coefficient.
    pub fn monic(&self) -> Laurent {
        if self.is_zero() {
            return Laurent::zero();
        }
        let inv = self.leading().inv().expect("nonzero leading coefficient");
        self.scale(&inv)
    }

    /// gcd of all exponents after shifting the lowest to zero (0 for constants).
    fn exponent_stride(&self) -> i32 {
        let low = self.low();
        self.terms.iter().fold(0, |g, (e, _)| g.gcd(&(e - low)))
    }

    fn compress(&self, stride: i32) -> Laurent {
        Laurent { terms: self.terms.iter().map(|(e, c)| (e / stride, c.clone())).collect() }
    }

    fn expand(&self, stride: i32) -> Laurent {
        Laurent { terms: self.terms.iter().map(|(e, c)| (e * stride, c.clone())).collect() }
    }

    /// Polynomial long division; both operands must have nonnegative exponents.
    pub fn div_rem(&self, divisor: &Laurent) -> (Laurent, Laurent) {
        assert!(!divisor.is_zero(), "polynomial division by zero");
        let mut rem = self.clone();
        let mut quot: Vec<(i32, GaussRat)> = Vec::new();
        let d_high = divisor.high();
        let d_lead_inv = divisor.leading().inv().expect("nonzero");
        while !rem.is_zero() && rem.high() >= d_high {
            let e = rem.high() - d_high;
            let c = rem.leading() * &d_lead_inv;
            rem = rem.sub(&divisor.scale(&c).shift(e));
            quot.push((e, c));
        }
        quot.reverse();
        (Laurent { terms: quot }, rem)
    }

    /// Exact quotient; panics if the division leaves a remainder.
    pub fn exact_div(&self, divisor: &Laurent) -> Laurent {
        if divisor.is_one() {
            return self.clone();
        }
        if divisor.is_monomial() {
            let (e, c) = &divisor.terms[0];
            return self.scale(&c.inv().expect("nonzero")).shift(-e);
        }
        let s = self.shift(-self.low());
        let d = divisor.shift(-divisor.low());
        let (q, r) = s.div_rem(&d);
        assert!(r.is_zero(), "inexact polynomial division");
        q.shift(self.low() - divisor.low())
    }

    /// Monic gcd of the polynomial parts (powers of `v` are ignored).
    pub fn gcd(&self, other: &Laurent) -> Laurent {
        if self.is_zero() {
            return other.shift(-other.low()).monic();
        }
        if other.is_zero() {
            return self.shift(-self.low()).monic();
        }
        let a = self.shift(-self.low());
        let b = other.shift(-other.low());
        if a.is_monomial() || b.is_monomial() {
            return Laurent::one();
        }
        let stride = a.exponent_stride().gcd(&b.exponent_stride());
        let (mut a, mut b) = if stride > 1 { (a.compress(stride), b.compress(stride)) } else { (a, b) };
        if a.high() < b.high() {
            std::mem::swap(&mut a, &mut b);
        }
        a = a.monic();
        b = b.monic();
        while !b.is_zero() {
            let (_, r) = a.div_rem(&b);
            a = b;
            b = if r.is_zero() { r } else { r.shift(-r.low()).monic() };
        }
        let g = a.monic();
        if stride > 1 {
            g.expand(stride)
        } else {
            g
        }
    }

    /// Multiplicity of the root `v = 1`.
    pub fn valuation_at_one(&self) -> usize {
        let mut p = self.shift(-self.low());
        let mut n = 0;
        let root = Laurent::from_terms([(1, GaussRat::one()), (0, -GaussRat::one())]);
        while !p.is_zero() && p.eval_one().is_zero() {
            p = p.exact_div(&root);
            n += 1;
        }
        n
    }

    /// Square root as a Laurent polynomial, if this is a perfect square.
    pub fn sqrt(&self) -> Option<Laurent> {
        if self.is_zero() {
            return Some(Laurent::zero());
        }
        let low = self.low();
        if low % 2 != 0 {
            return None;
        }
        let p = self.shift(-low);
        let deg = p.high();
        if deg % 2 != 0 {
            return None;
        }
        let half = deg / 2;
        // Determine coefficients from the top down: r = sum r_k v^k.
        let lead = p.leading().sqrt()?;
        let two_lead_inv = (&lead + &lead).inv().ok()?;
        let mut root: Vec<GaussRat> = vec![GaussRat::zero(); (half + 1) as usize];
        root[half as usize] = lead;
        let coeff = |e: i32| -> GaussRat {
            p.terms.binary_search_by_key(&e, |t| t.0).map(|i| p.terms[i].1.clone()).unwrap_or_else(|_| GaussRat::zero())
        };
        for k in (0..half).rev() {
            // coefficient of v^{half + k} in r^2 involves r_half*r_k twice
            let target = half + k;
            let mut acc = coeff(target);
            for j in (k + 1)..half {
                let other = target - j;
                if other > j && other <= half {
                    acc = &acc - &(&(&root[j as usize] * &root[other as usize]) * &GaussRat::from_int(2));
                } else if other == j {
                    acc = &acc - &(&root[j as usize] * &root[j as usize]);
                }
            }
            root[k as usize] = &acc * &two_lead_inv;
        }
        let r = Laurent::from_terms(root.into_iter().enumerate().map(|(k, c)| (k as i32, c)));
        if r.mul(&r) == p {
            Some(r.shift(low / 2))
        } else {
            None
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn poly(ts: &[(i32, i64)]) -> Laurent {
        Laurent::from_terms(ts.iter().map(|&(e, c)| (e, GaussRat::from_int(c))))
    }

    #[test]
    fn gcd_of_cyclotomic_products() {
        // (v^2 - 1) = (v-1)(v+1), (v^3 - 1) = (v-1)(v^2+v+1)
        let a = poly(&[(2, 1), (0, -1)]);
        let b = poly(&[(3, 1), (0, -1)]);
        assert_eq!(a.gcd(&b), poly(&[(1, 1), (0, -1)]));
        // strided: v^12 - 1 and v^6 - 1 share v^6 - 1
        let a = poly(&[(12, 1), (0, -1)]);
        let b = poly(&[(6, 2), (0, -2)]);
        assert_eq!(a.gcd(&b), poly(&[(6, 1), (0, -1)]));
    }

    #[test]
    fn division_roundtrip() {
        let a = poly(&[(4, 1), (1, 3), (0, -2)]);
        let b = poly(&[(2, 1), (0, 5)]);
        let (q, r) = a.div_rem(&b);
        assert_eq!(q.mul(&b).add(&r), a);
        assert!(r.high() < b.high());
    }

    #[test]
    fn sqrt_and_valuation() {
        let p = poly(&[(1, 1), (0, -1)]);
        let sq = p.mul(&p).shift(-4);
        let r = sq.sqrt().unwrap();
        assert_eq!(r.mul(&r), sq);
        assert_eq!(sq.valuation_at_one(), 2);
        assert!(poly(&[(2, 1), (0, 1)]).sqrt().is_none());
        assert!(poly(&[(1, 1)]).sqrt().is_none());
    }
}
