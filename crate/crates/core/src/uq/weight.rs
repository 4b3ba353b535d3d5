use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_rational::Rational64;
use num_traits::Zero;

/// Largest rank handled by the engine.
pub const MAX_RANK: usize = 2;

/// A rational vector in simple-root coordinates. Coordinates beyond the
/// rank of the algebra stay zero.
#[derive(Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Default)]
pub struct Weight(pub [Rational64; MAX_RANK]);

impl Weight {
    pub fn zero() -> Self {
        Weight([Rational64::zero(); MAX_RANK])
    }

    pub fn simple(i: usize) -> Self {
        let mut w = Weight::zero();
        w.0[i] = Rational64::from_integer(1);
        w
    }

    pub fn from_ints(c: &[i64]) -> Self {
        let mut w = Weight::zero();
        for (k, x) in c.iter().enumerate() {
            w.0[k] = Rational64::from_integer(*x);
        }
        w
    }

    pub fn from_ratios(c: &[(i64, i64)]) -> Self {
        let mut w = Weight::zero();
        for (k, (n, d)) in c.iter().enumerate() {
            w.0[k] = Rational64::new(*n, *d);
        }
        w
    }

    pub fn coord(&self, i: usize) -> Rational64 {
        self.0[i]
    }

    pub fn is_zero(&self) -> bool {
        self.0.iter().all(|x| x.is_zero())
    }

    pub fn scale(&self, r: Rational64) -> Self {
        Weight(self.0.map(|x| x * r))
    }

    /// Integer coordinates, if all are integral.
    pub fn as_ints(&self) -> Option<[i64; MAX_RANK]> {
        if self.0.iter().all(|x| x.is_integer()) {
            Some(self.0.map(|x| x.to_integer()))
        } else {
            None
        }
    }

    /// Sum of the coordinates; the height of a root.
    pub fn height(&self) -> Rational64 {
        self.0.iter().sum()
    }
}

impl Add for Weight {
    type Output = Weight;
    fn add(self, o: Weight) -> Weight {
        let mut w = self;
        for k in 0..MAX_RANK {
            w.0[k] += o.0[k];
        }
        w
    }
}

impl Sub for Weight {
    type Output = Weight;
    fn sub(self, o: Weight) -> Weight {
        self + (-o)
    }
}

impl Neg for Weight {
    type Output = Weight;
    fn neg(self) -> Weight {
        Weight(self.0.map(|x| -x))
    }
}

impl Mul<i64> for Weight {
    type Output = Weight;
    fn mul(self, k: i64) -> Weight {
        self.scale(Rational64::from_integer(k))
    }
}

impl fmt::Debug for Weight {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({}, {})", self.0[0], self.0[1])
    }
}

impl fmt::Display for Weight {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Debug::fmt(self, f)
    }
}
