//! Gaussian rationals `a + b·i` with `a, b ∈ Q`.

use std::fmt;
use std::ops::{Add, AddAssign, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use super::ScalarError;

#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct GaussRat {
    re: BigRational,
    im: BigRational,
}

impl GaussRat {
    pub fn new(re: BigRational, im: BigRational) -> Self {
        GaussRat { re, im }
    }

    pub fn from_int(n: i64) -> Self {
        GaussRat::new(BigRational::from_integer(n.into()), BigRational::zero())
    }

    pub fn from_ratio(num: i64, den: i64) -> Self {
        GaussRat::new(BigRational::new(num.into(), den.into()), BigRational::zero())
    }

    pub fn real(re: BigRational) -> Self {
        GaussRat::new(re, BigRational::zero())
    }

    pub fn i() -> Self {
        GaussRat::new(BigRational::zero(), BigRational::one())
    }

    pub fn re(&self) -> &BigRational {
        &self.re
    }

    pub fn im(&self) -> &BigRational {
        &self.im
    }

    pub fn is_real(&self) -> bool {
        self.im.is_zero()
    }

    pub fn is_neg_one(&self) -> bool {
        self.im.is_zero() && self.re == -BigRational::one()
    }

    pub fn inv(&self) -> Result<Self, ScalarError> {
        if self.is_zero() {
            return Err(ScalarError::DivisionByZero);
        }
        if self.im.is_zero() {
            return Ok(GaussRat::real(self.re.recip()));
        }
        let norm = &self.re * &self.re + &self.im * &self.im;
        Ok(GaussRat::new(&self.re / &norm, -&self.im / &norm))
    }

    /// Complex conjugate (not q-conjugation).
    pub fn conj(&self) -> Self {
        GaussRat::new(self.re.clone(), -self.im.clone())
    }

    /// Exact square root in `Q(i)`, if one exists. The root returned has
    /// positive real part, or positive imaginary part when purely imaginary.
    pub fn sqrt(&self) -> Option<Self> {
        if self.is_zero() {
            return Some(GaussRat::zero());
        }
        if self.im.is_zero() {
            return if self.re.is_positive() {
                rational_sqrt(&self.re).map(GaussRat::real)
            } else {
                rational_sqrt(&-self.re.clone()).map(|y| GaussRat::new(BigRational::zero(), y))
            };
        }
        let modulus = rational_sqrt(&(&self.re * &self.re + &self.im * &self.im))?;
        let two = BigRational::from_integer(2.into());
        let x = rational_sqrt(&((&self.re + &modulus) / &two))?;
        let y = &self.im / (&two * &x);
        Some(GaussRat::new(x, y))
    }

    /// A sign-normalization key: `true` when the value is "positive" in the
    /// sense used for choosing square-root branches.
    pub fn is_positive_branch(&self) -> bool {
        if self.re.is_zero() {
            self.im.is_positive()
        } else {
            self.re.is_positive()
        }
    }

    pub(crate) fn fmt_coeff(&self) -> String {
        if self.im.is_zero() {
            fmt_rat(&self.re)
        } else if self.re.is_zero() {
            if self.im.is_one() {
                "i".to_string()
            } else if self.im == -BigRational::one() {
                "-i".to_string()
            } else {
                format!("{}i", fmt_rat(&self.im))
            }
        } else {
            let im = if self.im.is_one() {
                "+i".to_string()
            } else if self.im == -BigRational::one() {
                "-i".to_string()
            } else if self.im.is_negative() {
                format!("{}i", fmt_rat(&self.im))
            } else {
                format!("+{}i", fmt_rat(&self.im))
            };
            format!("({}{})", fmt_rat(&self.re), im)
        }
    }
}

fn fmt_rat(r: &BigRational) -> String {
    if r.is_integer() {
        r.numer().to_string()
    } else {
        format!("{}/{}", r.numer(), r.denom())
    }
}

fn int_sqrt(n: &BigInt) -> Option<BigInt> {
    if n.is_negative() {
        return None;
    }
    let r = n.sqrt();
    if &(&r * &r) == n {
        Some(r)
    } else {
        None
    }
}

fn rational_sqrt(r: &BigRational) -> Option<BigRational> {
    let n = int_sqrt(r.numer())?;
    let d = int_sqrt(r.denom())?;
    Some(BigRational::new(n, d))
}

impl Zero for GaussRat {
    fn zero() -> Self {
        GaussRat::new(BigRational::zero(), BigRational::zero())
    }
    fn is_zero(&self) -> bool {
        self.re.is_zero() && self.im.is_zero()
    }
}

impl One for GaussRat {
    fn one() -> Self {
        GaussRat::from_int(1)
    }
    fn is_one(&self) -> bool {
        self.im.is_zero() && self.re.is_one()
    }
}

impl<'a> Add<&'a GaussRat> for &'a GaussRat {
    type Output = GaussRat;
    fn add(self, rhs: &GaussRat) -> GaussRat {
        GaussRat::new(&self.re + &rhs.re, &self.im + &rhs.im)
    }
}

impl Add for GaussRat {
    type Output = GaussRat;
    fn add(self, rhs: GaussRat) -> GaussRat {
        &self + &rhs
    }
}

impl AddAssign<&GaussRat> for GaussRat {
    fn add_assign(&mut self, rhs: &GaussRat) {
        self.re += &rhs.re;
        if !rhs.im.is_zero() {
            self.im += &rhs.im;
        }
    }
}

impl<'a> Sub<&'a GaussRat> for &'a GaussRat {
    type Output = GaussRat;
    fn sub(self, rhs: &GaussRat) -> GaussRat {
        GaussRat::new(&self.re - &rhs.re, &self.im - &rhs.im)
    }
}

impl Sub for GaussRat {
    type Output = GaussRat;
    fn sub(self, rhs: GaussRat) -> GaussRat {
        &self - &rhs
    }
}

impl<'a> Mul<&'a GaussRat> for &'a GaussRat {
    type Output = GaussRat;
    fn mul(self, rhs: &GaussRat) -> GaussRat {
        match (self.im.is_zero(), rhs.im.is_zero()) {
            (true, true) => GaussRat::real(&self.re * &rhs.re),
            (true, false) => GaussRat::new(&self.re * &rhs.re, &self.re * &rhs.im),
            (false, true) => GaussRat::new(&self.re * &rhs.re, &self.im * &rhs.re),
            (false, false) => GaussRat::new(&self.re * &rhs.re - &self.im * &rhs.im, &self.re * &rhs.im + &self.im * &rhs.re),
        }
    }
}

impl Mul for GaussRat {
    type Output = GaussRat;
    fn mul(self, rhs: GaussRat) -> GaussRat {
        &self * &rhs
    }
}

impl Neg for GaussRat {
    type Output = GaussRat;
    fn neg(self) -> GaussRat {
        GaussRat::new(-self.re, -self.im)
    }
}

impl Neg for &GaussRat {
    type Output = GaussRat;
    fn neg(self) -> GaussRat {
        GaussRat::new(-self.re.clone(), -self.im.clone())
    }
}

impl fmt::Display for GaussRat {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.fmt_coeff())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn inverse_of_gaussian() {
        let z = GaussRat::new(BigRational::from_integer(3.into()), BigRational::from_integer(4.into()));
        let w = z.inv().unwrap();
        assert!((&z * &w).is_one());
        assert_eq!(GaussRat::zero().inv(), Err(ScalarError::DivisionByZero));
    }

    #[test]
    fn square_roots() {
        let minus_four = GaussRat::from_int(-4);
        let r = minus_four.sqrt().unwrap();
        assert_eq!(&r * &r, minus_four);
        assert!(r.is_positive_branch());
        // (1 + 2i)^2 = -3 + 4i
        let z = GaussRat::new(BigRational::from_integer((-3).into()), BigRational::from_integer(4.into()));
        let r = z.sqrt().unwrap();
        assert_eq!(&r * &r, z);
        assert!(GaussRat::from_int(2).sqrt().is_none());
        assert_eq!(GaussRat::from_ratio(1, 24).sqrt(), None);
        assert_eq!(GaussRat::from_ratio(9, 4).sqrt(), Some(GaussRat::from_ratio(3, 2)));
    }
}
