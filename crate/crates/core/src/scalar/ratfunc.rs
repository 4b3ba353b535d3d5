//! The coefficient field `Q(i)(v)` with `v = q^{1/D}`.

use std::fmt;
use std::ops::{Add, Div, Mul, Neg, Sub};

use num_traits::{One, Zero};

use super::gauss::GaussRat;
use super::laurent::Laurent;
use super::ScalarError;

/// A rational function `num / den` in canonical form: `den` is a monic
/// polynomial with nonzero constant term and `gcd(num, den) = 1`, so
/// structural equality is field equality.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Scalar {
    num: Laurent,
    den: Laurent,
}

impl Scalar {
    pub fn zero() -> Self {
        Scalar { num: Laurent::zero(), den: Laurent::one() }
    }

    pub fn one() -> Self {
        Scalar { num: Laurent::one(), den: Laurent::one() }
    }

    pub fn from_int(n: i64) -> Self {
        Scalar::from_gauss(GaussRat::from_int(n))
    }

    pub fn from_ratio(n: i64, d: i64) -> Self {
        Scalar::from_gauss(GaussRat::from_ratio(n, d))
    }

    pub fn from_gauss(c: GaussRat) -> Self {
        Scalar { num: Laurent::constant(c), den: Laurent::one() }
    }

    pub fn i() -> Self {
        Scalar::from_gauss(GaussRat::i())
    }

    /// `v^e`.
    pub fn v_pow(e: i32) -> Self {
        Scalar { num: Laurent::monomial(e, GaussRat::one()), den: Laurent::one() }
    }

    pub fn from_laurent(p: Laurent) -> Self {
        Scalar { num: p, den: Laurent::one() }
    }

    /// Builds `num / den` and brings it to canonical form.
    pub fn from_parts(num: Laurent, den: Laurent) -> Result<Self, ScalarError> {
        if den.is_zero() {
            return Err(ScalarError::DivisionByZero);
        }
        Ok(Scalar::canonical(num, den))
    }

    pub fn numerator(&self) -> &Laurent {
        &self.num
    }

    pub fn denominator(&self) -> &Laurent {
        &self.den
    }

    pub fn is_zero(&self) -> bool {
        self.num.is_zero()
    }

    pub fn is_one(&self) -> bool {
        self.num.is_one() && self.den.is_one()
    }

    pub fn is_laurent(&self) -> bool {
        self.den.is_one()
    }

    /// The value as a constant, when it does not depend on `v`.
    pub fn as_constant(&self) -> Option<GaussRat> {
        if self.is_zero() {
            return Some(GaussRat::zero());
        }
        if self.den.is_one() && self.num.is_monomial() && self.num.low() == 0 {
            Some(self.num.leading().clone())
        } else {
            None
        }
    }

    fn canonical(num: Laurent, den: Laurent) -> Scalar {
        if num.is_zero() {
            return Scalar::zero();
        }
        // move v-powers of the denominator to the numerator
        let shift = den.low();
        let (mut num, mut den) = (num.shift(-shift), den.shift(-shift));
        if !den.is_monomial() {
            let g = num.gcd(&den);
            if !g.is_one() {
                num = num.exact_div(&g);
                den = den.exact_div(&g);
            }
        }
        let lead = den.leading().clone();
        if !lead.is_one() {
            let inv = lead.inv().expect("nonzero");
            num = num.scale(&inv);
            den = den.scale(&inv);
        }
        Scalar { num, den }
    }

    pub fn inv(&self) -> Result<Scalar, ScalarError> {
        if self.is_zero() {
            return Err(ScalarError::DivisionByZero);
        }
        Ok(Scalar::canonical(self.den.clone(), self.num.clone()))
    }

    pub fn pow(&self, n: i32) -> Result<Scalar, ScalarError> {
        let base = if n < 0 { self.inv()? } else { self.clone() };
        let mut acc = Scalar::one();
        for _ in 0..n.unsigned_abs() {
            acc = &acc * &base;
        }
        Ok(acc)
    }

    /// q-conjugation `v -> v^{-1}`.
    pub fn qconj(&self) -> Scalar {
        if self.den.is_one() {
            return Scalar { num: self.num.reverse(), den: Laurent::one() };
        }
        let deg = self.den.high();
        let num = self.num.reverse().shift(deg);
        let den = self.den.reverse().shift(deg);
        // gcd is preserved; only the leading coefficient needs fixing.
        let lead = den.leading().clone();
        let inv = lead.inv().expect("nonzero");
        Scalar { num: num.scale(&inv), den: den.scale(&inv) }
    }

    pub fn is_qconj_invariant(&self) -> bool {
        self.qconj() == *self
    }

    /// Evaluation at `v = 1` (the classical limit `h = 0`).
    pub fn classical_limit(&self) -> Result<GaussRat, ScalarError> {
        let d = self.den.eval_one();
        if d.is_zero() {
            return Err(ScalarError::PoleAtOne(self.to_string()));
        }
        Ok(&self.num.eval_one() * &d.inv()?)
    }

    /// Order of vanishing at `v = 1` (negative for a pole).
    pub fn valuation_at_one(&self) -> i64 {
        if self.is_zero() {
            return i64::MAX;
        }
        self.num.valuation_at_one() as i64 - self.den.valuation_at_one() as i64
    }

    /// Square root inside `Q(i)(v)`, if it exists. The branch is chosen so
    /// that the leading numerator coefficient is positive (see
    /// [`GaussRat::is_positive_branch`]).
    pub fn sqrt(&self) -> Option<Scalar> {
        if self.is_zero() {
            return Some(Scalar::zero());
        }
        // den is monic, so a square root of num/den is sqrt(c*num)/sqrt(c*den)
        // for the right constant; since den is monic its root is monic.
        let d = self.den.sqrt()?;
        let n = self.num.sqrt()?;
        let mut r = Scalar::canonical(n, d);
        if !r.num.leading().is_positive_branch() {
            r = -r;
        }
        Some(r)
    }

    /// Leading coefficient of the numerator.
    pub fn leading_coefficient(&self) -> GaussRat {
        if self.is_zero() {
            GaussRat::zero()
        } else {
            self.num.leading().clone()
        }
    }
}

impl Default for Scalar {
    fn default() -> Self {
        Scalar::zero()
    }
}

impl<'a> Add<&'a Scalar> for &'a Scalar {
    type Output = Scalar;
    fn add(self, rhs: &Scalar) -> Scalar {
        if self.is_zero() {
            return rhs.clone();
        }
        if rhs.is_zero() {
            return self.clone();
        }
        if self.den == rhs.den {
            let num = self.num.add(&rhs.num);
            if self.den.is_one() {
                return Scalar { num, den: Laurent::one() };
            }
            return Scalar::canonical(num, self.den.clone());
        }
        if self.den.is_one() || rhs.den.is_one() {
            // gcd(a*d + c, d) = gcd(c, d) = 1, so no reduction is needed
            let (poly, frac) = if self.den.is_one() { (self, rhs) } else { (rhs, self) };
            let num = poly.num.mul(&frac.den).add(&frac.num);
            if num.is_zero() {
                return Scalar::zero();
            }
            return Scalar { num, den: frac.den.clone() };
        }
        let g = self.den.gcd(&rhs.den);
        let a_co = rhs.den.exact_div(&g);
        let b_co = self.den.exact_div(&g);
        let num = self.num.mul(&a_co).add(&rhs.num.mul(&b_co));
        let den = self.den.mul(&a_co);
        Scalar::canonical(num, den)
    }
}

impl<'a> Sub<&'a Scalar> for &'a Scalar {
    type Output = Scalar;
    fn sub(self, rhs: &Scalar) -> Scalar {
        self + &(-rhs)
    }
}

impl<'a> Mul<&'a Scalar> for &'a Scalar {
    type Output = Scalar;
    fn mul(self, rhs: &Scalar) -> Scalar {
        if self.is_zero() || rhs.is_zero() {
            return Scalar::zero();
        }
        if self.den.is_one() && rhs.den.is_one() {
            return Scalar { num: self.num.mul(&rhs.num), den: Laurent::one() };
        }
        // cross-cancel before multiplying
        let g1 = self.num.gcd(&rhs.den);
        let g2 = rhs.num.gcd(&self.den);
        let n1 = self.num.exact_div(&g1);
        let d2 = rhs.den.exact_div(&g1);
        let n2 = rhs.num.exact_div(&g2);
        let d1 = self.den.exact_div(&g2);
        let num = n1.mul(&n2);
        let den = d1.mul(&d2);
        let lead = den.leading().clone();
        if lead.is_one() && den.low() == 0 {
            Scalar { num, den }
        } else {
            Scalar::canonical(num, den)
        }
    }
}

impl<'a> Div<&'a Scalar> for &'a Scalar {
    type Output = Scalar;
    fn div(self, rhs: &Scalar) -> Scalar {
        self * &rhs.inv().expect("division by zero scalar")
    }
}

impl Neg for &Scalar {
    type Output = Scalar;
    fn neg(self) -> Scalar {
        Scalar { num: self.num.neg(), den: self.den.clone() }
    }
}

impl Neg for Scalar {
    type Output = Scalar;
    fn neg(self) -> Scalar {
        -&self
    }
}

macro_rules! forward_owned {
    ($tr:ident, $m:ident) => {
        impl $tr<Scalar> for Scalar {
            type Output = Scalar;
            fn $m(self, rhs: Scalar) -> Scalar {
                (&self).$m(&rhs)
            }
        }
        impl<'a> $tr<&'a Scalar> for Scalar {
            type Output = Scalar;
            fn $m(self, rhs: &Scalar) -> Scalar {
                (&self).$m(rhs)
            }
        }
    };
}
forward_owned!(Add, add);
forward_owned!(Sub, sub);
forward_owned!(Mul, mul);
forward_owned!(Div, div);

impl Zero for Scalar {
    fn zero() -> Self {
        Scalar::zero()
    }
    fn is_zero(&self) -> bool {
        self.num.is_zero()
    }
}

impl One for Scalar {
    fn one() -> Self {
        Scalar::one()
    }
}

impl fmt::Debug for Scalar {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self)
    }
}

impl From<i64> for Scalar {
    fn from(n: i64) -> Self {
        Scalar::from_int(n)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn q(e: i32) -> Scalar {
        Scalar::v_pow(e)
    }

    #[test]
    fn factorization_identity() {
        // D = 1: inv(q - q^-1) * (q^2 - q^-2) = q + q^-1
        let a = &q(1) - &q(-1);
        let b = &q(2) - &q(-2);
        assert_eq!(&a.inv().unwrap() * &b, &q(1) + &q(-1));
    }

    #[test]
    fn half_powers_multiply() {
        // D = 2: v^1 is q^{1/2}
        assert_eq!(&q(1) * &q(1), q(2));
    }

    #[test]
    fn canonical_denominator_is_monic_with_constant_term() {
        let s = &Scalar::one() / &(&q(3) * &Scalar::from_int(2) - &q(1));
        assert_eq!(s.denominator().low(), 0);
        assert!(s.denominator().leading().is_one());
    }

    #[test]
    fn qconj_examples() {
        let palin = &(&q(-2) - &Scalar::one()) + &q(2);
        assert_eq!(palin.qconj(), palin);
        assert_eq!(q(3).qconj(), q(-3));
        let r = &Scalar::one() / &(&q(1) + &Scalar::from_int(3));
        assert_eq!(r.qconj().qconj(), r);
        assert_eq!(r.qconj(), &Scalar::one() / &(&q(-1) + &Scalar::from_int(3)));
    }

    #[test]
    fn classical_limits() {
        assert_eq!((&Scalar::one() + &q(-2)).classical_limit().unwrap(), GaussRat::from_int(2));
        assert_eq!((&q(-2) - &q(2)).classical_limit().unwrap(), GaussRat::zero());
        assert_eq!(q(5).classical_limit().unwrap(), GaussRat::one());
        let pole = (&q(1) - &q(-1)).inv().unwrap();
        assert!(matches!(pole.classical_limit(), Err(ScalarError::PoleAtOne(_))));
        assert_eq!(pole.valuation_at_one(), -1);
    }

    #[test]
    fn square_roots() {
        let x = &(&q(1) + &q(-1)) / &(&q(2) + &Scalar::from_int(3));
        let sq = &x * &x;
        let r = sq.sqrt().unwrap();
        assert_eq!(&r * &r, sq);
        assert!((&q(1) + &q(-1)).sqrt().is_none());
    }
}
