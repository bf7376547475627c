use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_traits::Signed;
use serde::{Deserialize, Serialize};

use super::quad::decimal;
use super::{forward_binop, Ring};

/// A Gaussian integer `re + im·i`, `i² = −1`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct GaussInt {
    #[serde(with = "decimal")]
    pub re: BigInt,
    #[serde(with = "decimal")]
    pub im: BigInt,
}

impl GaussInt {
    pub fn new(re: impl Into<BigInt>, im: impl Into<BigInt>) -> Self {
        GaussInt {
            re: re.into(),
            im: im.into(),
        }
    }

    pub fn i() -> Self {
        GaussInt::new(0, 1)
    }

    pub fn conj(&self) -> Self {
        GaussInt {
            re: self.re.clone(),
            im: -&self.im,
        }
    }

    /// `N(a + bi) = a² + b²`, the squared complex absolute value.
    pub fn norm(&self) -> BigInt {
        &self.re * &self.re + &self.im * &self.im
    }
}

impl<'b> Add<&'b GaussInt> for &GaussInt {
    type Output = GaussInt;
    fn add(self, rhs: &'b GaussInt) -> GaussInt {
        GaussInt {
            re: &self.re + &rhs.re,
            im: &self.im + &rhs.im,
        }
    }
}

impl<'b> Sub<&'b GaussInt> for &GaussInt {
    type Output = GaussInt;
    fn sub(self, rhs: &'b GaussInt) -> GaussInt {
        GaussInt {
            re: &self.re - &rhs.re,
            im: &self.im - &rhs.im,
        }
    }
}

impl<'b> Mul<&'b GaussInt> for &GaussInt {
    type Output = GaussInt;
    fn mul(self, rhs: &'b GaussInt) -> GaussInt {
        GaussInt {
            re: &self.re * &rhs.re - &self.im * &rhs.im,
            im: &self.re * &rhs.im + &self.im * &rhs.re,
        }
    }
}

forward_binop!(GaussInt, Add, add);
forward_binop!(GaussInt, Sub, sub);
forward_binop!(GaussInt, Mul, mul);

impl Neg for GaussInt {
    type Output = GaussInt;
    fn neg(self) -> GaussInt {
        GaussInt {
            re: -self.re,
            im: -self.im,
        }
    }
}

impl Neg for &GaussInt {
    type Output = GaussInt;
    fn neg(self) -> GaussInt {
        GaussInt {
            re: -&self.re,
            im: -&self.im,
        }
    }
}

impl Ring for GaussInt {
    fn zero() -> Self {
        GaussInt::new(0, 0)
    }

    fn one() -> Self {
        GaussInt::new(1, 0)
    }

    fn add_ref(&self, other: &Self) -> Self {
        self + other
    }

    fn mul_ref(&self, other: &Self) -> Self {
        self * other
    }

    fn neg_ref(&self) -> Self {
        -self
    }

    fn sub_ref(&self, other: &Self) -> Self {
        self - other
    }

    fn inverse(&self) -> Option<Self> {
        // units: ±1, ±i; the inverse of a unit is its conjugate
        if self.norm().is_one() {
            Some(self.conj())
        } else {
            None
        }
    }

    fn from_integer(n: &BigInt) -> Self {
        GaussInt {
            re: n.clone(),
            im: BigInt::zero(),
        }
    }

    fn is_zero(&self) -> bool {
        self.re.is_zero() && self.im.is_zero()
    }
}

impl fmt::Display for GaussInt {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.im.is_negative() {
            write!(f, "{} - {}i", self.re, -&self.im)
        } else {
            write!(f, "{} + {}i", self.re, self.im)
        }
    }
}
