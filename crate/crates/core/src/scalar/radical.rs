use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};
use std::sync::Arc;

use super::gauss::GaussRat;
use super::ratfunc::Scalar;
use super::ScalarError;

/// Shared data for one computation: the root order `D` (`v = q^{1/D}`) and
/// the optional square `R = C^2` of the formal radical.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct ScalarContext {
    d: u32,
    radical_square: Option<Scalar>,
}

impl ScalarContext {
    pub fn new(d: u32) -> Self {
        assert!(d > 0, "D must be positive");
        ScalarContext { d, radical_square: None }
    }

    /// Adds the radical `C` with `C^2 = r`. `r` must be q-conjugation
    /// invariant (so that `C` is), finite and nonzero at `q = 1`, and not a
    /// square in `Q(i)(v)`.
    pub fn with_radical(d: u32, r: Scalar) -> Result<Self, ScalarError> {
        if r.is_zero() {
            return Err(ScalarError::InvalidRadical("zero".into()));
        }
        if r.qconj() != r {
            return Err(ScalarError::InvalidRadical(format!("{} is not q-conjugation invariant", r)));
        }
        let at_one = r.classical_limit().map_err(|_| ScalarError::InvalidRadical(format!("{} has a pole at q = 1", r)))?;
        if at_one == GaussRat::from_int(0) {
            return Err(ScalarError::InvalidRadical(format!("{} vanishes at q = 1", r)));
        }
        if r.sqrt().is_some() {
            return Err(ScalarError::InvalidRadical(format!("{} is already a square", r)));
        }
        Ok(ScalarContext { d, radical_square: Some(r) })
    }

    pub fn d(&self) -> u32 {
        self.d
    }

    pub fn radical_square(&self) -> Option<&Scalar> {
        self.radical_square.as_ref()
    }
}

/// `rational + radical·√radicand`, the classical value of a [`RadScalar`].
/// The square root is the positive branch for a positive radicand.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct QuadraticValue {
    pub rational: GaussRat,
    pub radical: GaussRat,
    pub radicand: GaussRat,
}

impl fmt::Display for QuadraticValue {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        use num_traits::Zero;
        if self.radical.is_zero() {
            write!(f, "{}", self.rational)
        } else if self.rational.is_zero() {
            write!(f, "{}*sqrt({})", self.radical, self.radicand)
        } else {
            write!(f, "{} + {}*sqrt({})", self.rational, self.radical, self.radicand)
        }
    }
}

/// An element `a + b·C` of the radical extension.
#[derive(Clone)]
pub struct RadScalar {
    a: Scalar,
    b: Scalar,
    ctx: Arc<ScalarContext>,
}

impl RadScalar {
    pub fn new(a: Scalar, b: Scalar, ctx: Arc<ScalarContext>) -> Result<Self, ScalarError> {
        if !b.is_zero() && ctx.radical_square.is_none() {
            return Err(ScalarError::InvalidRadical("context has no radical".into()));
        }
        Ok(RadScalar { a, b, ctx })
    }

    pub fn rational(a: Scalar, ctx: &Arc<ScalarContext>) -> Self {
        RadScalar { a, b: Scalar::zero(), ctx: ctx.clone() }
    }

    /// The radical `C` itself.
    pub fn radical(ctx: &Arc<ScalarContext>) -> Result<Self, ScalarError> {
        RadScalar::new(Scalar::zero(), Scalar::one(), ctx.clone())
    }

    pub fn context(&self) -> &Arc<ScalarContext> {
        &self.ctx
    }

    pub fn rational_part(&self) -> &Scalar {
        &self.a
    }

    pub fn radical_part(&self) -> &Scalar {
        &self.b
    }

    pub fn is_zero(&self) -> bool {
        self.a.is_zero() && self.b.is_zero()
    }

    fn check(&self, other: &RadScalar) -> Result<(), ScalarError> {
        if Arc::ptr_eq(&self.ctx, &other.ctx) || self.ctx == other.ctx {
            Ok(())
        } else {
            Err(ScalarError::ContextMismatch)
        }
    }

    fn r(&self) -> Scalar {
        self.ctx.radical_square.clone().unwrap_or_else(Scalar::zero)
    }

    pub fn try_add(&self, other: &RadScalar) -> Result<RadScalar, ScalarError> {
        self.check(other)?;
        Ok(RadScalar { a: &self.a + &other.a, b: &self.b + &other.b, ctx: self.ctx.clone() })
    }

    pub fn try_mul(&self, other: &RadScalar) -> Result<RadScalar, ScalarError> {
        self.check(other)?;
        let mut a = &self.a * &other.a;
        if !self.b.is_zero() && !other.b.is_zero() {
            a = &a + &(&(&self.b * &other.b) * &self.r());
        }
        let b = &(&self.a * &other.b) + &(&self.b * &other.a);
        Ok(RadScalar { a, b, ctx: self.ctx.clone() })
    }

    /// Inverse by conjugate rationalization: `(a + bC)^{-1} = (a - bC)/(a^2 - b^2 R)`.
    pub fn inv(&self) -> Result<RadScalar, ScalarError> {
        if self.b.is_zero() {
            return Ok(RadScalar { a: self.a.inv()?, b: Scalar::zero(), ctx: self.ctx.clone() });
        }
        let norm = &(&self.a * &self.a) - &(&(&self.b * &self.b) * &self.r());
        let n_inv = norm.inv()?;
        Ok(RadScalar { a: &self.a * &n_inv, b: -&(&self.b * &n_inv), ctx: self.ctx.clone() })
    }

    pub fn try_div(&self, other: &RadScalar) -> Result<RadScalar, ScalarError> {
        self.try_mul(&other.inv()?)
    }

    pub fn scale(&self, s: &Scalar) -> RadScalar {
        RadScalar { a: &self.a * s, b: &self.b * s, ctx: self.ctx.clone() }
    }

    /// q-conjugation; `C` is fixed because `R` is q-conjugation invariant.
    pub fn qconj(&self) -> RadScalar {
        RadScalar { a: self.a.qconj(), b: self.b.qconj(), ctx: self.ctx.clone() }
    }

    pub fn classical_limit(&self) -> Result<QuadraticValue, ScalarError> {
        let rational = self.a.classical_limit()?;
        let radical = self.b.classical_limit()?;
        let radicand = match &self.ctx.radical_square {
            Some(r) => r.classical_limit()?,
            None => GaussRat::from_int(0),
        };
        Ok(QuadraticValue { rational, radical, radicand })
    }
}

impl PartialEq for RadScalar {
    fn eq(&self, other: &Self) -> bool {
        self.check(other).is_ok() && self.a == other.a && self.b == other.b
    }
}

impl Eq for RadScalar {}

impl fmt::Debug for RadScalar {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self)
    }
}

impl<'a> Add<&'a RadScalar> for &'a RadScalar {
    type Output = RadScalar;
    fn add(self, rhs: &RadScalar) -> RadScalar {
        self.try_add(rhs).expect("scalar context mismatch")
    }
}

impl<'a> Sub<&'a RadScalar> for &'a RadScalar {
    type Output = RadScalar;
    fn sub(self, rhs: &RadScalar) -> RadScalar {
        self.try_add(&-rhs).expect("scalar context mismatch")
    }
}

impl<'a> Mul<&'a RadScalar> for &'a RadScalar {
    type Output = RadScalar;
    fn mul(self, rhs: &RadScalar) -> RadScalar {
        self.try_mul(rhs).expect("scalar context mismatch")
    }
}

impl Neg for &RadScalar {
    type Output = RadScalar;
    fn neg(self) -> RadScalar {
        RadScalar { a: -&self.a, b: -&self.b, ctx: self.ctx.clone() }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn ctx() -> Arc<ScalarContext> {
        // R = 1/(q + q^-1), D = 1
        let r = (&Scalar::v_pow(1) + &Scalar::v_pow(-1)).inv().unwrap();
        Arc::new(ScalarContext::with_radical(1, r).unwrap())
    }

    #[test]
    fn conjugate_product() {
        let c = ctx();
        let a = Scalar::from_int(3);
        let b = Scalar::v_pow(2);
        let x = RadScalar::new(a.clone(), b.clone(), c.clone()).unwrap();
        let y = RadScalar::new(a.clone(), -&b, c.clone()).unwrap();
        let expected = &(&a * &a) - &(&(&b * &b) * c.radical_square().unwrap());
        assert_eq!(&x * &y, RadScalar::rational(expected, &c));
        assert_eq!(&x * &x.inv().unwrap(), RadScalar::rational(Scalar::one(), &c));
    }

    #[test]
    fn context_mismatch_is_reported() {
        let c1 = ctx();
        let c2 = Arc::new(ScalarContext::new(2));
        let x = RadScalar::rational(Scalar::one(), &c1);
        let y = RadScalar::rational(Scalar::one(), &c2);
        assert_eq!(x.try_add(&y).unwrap_err(), ScalarError::ContextMismatch);
    }

    #[test]
    fn rejects_bad_radicands() {
        assert!(ScalarContext::with_radical(1, Scalar::v_pow(1)).is_err());
        assert!(ScalarContext::with_radical(1, Scalar::from_int(4)).is_err());
        let vanishing = &Scalar::v_pow(1) - &Scalar::v_pow(-1);
        assert!(ScalarContext::with_radical(1, &vanishing * &vanishing).is_err());
    }
}
