//! Coefficient rings.
//!
//! [`Ring`] is the contract the power-series engine and Laurent evaluation are
//! generic over. It is implemented for [`BigInt`], [`QuadInt`] (the ring
//! `Z[φ]`), [`GaussInt`] (`Z[i]`) and [`LaurentPoly`] (`Z[q, q^-1]`).

mod gauss;
mod laurent;
mod quad;

use std::fmt::{Debug, Display};

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};

pub use gauss::GaussInt;
pub use laurent::LaurentPoly;
pub use quad::{alpha_pow, QuadInt};

/// A commutative ring with exact, value-semantic arithmetic.
pub trait Ring: Clone + PartialEq + Debug + Display + Send + Sync {
    fn zero() -> Self;
    fn one() -> Self;

    fn add_ref(&self, other: &Self) -> Self;
    fn mul_ref(&self, other: &Self) -> Self;
    fn neg_ref(&self) -> Self;

    /// Multiplicative inverse, if `self` is a unit.
    fn inverse(&self) -> Option<Self>;

    /// Image of an integer under the canonical map `Z -> Self`.
    fn from_integer(n: &BigInt) -> Self;

    fn sub_ref(&self, other: &Self) -> Self {
        self.add_ref(&other.neg_ref())
    }

    fn is_zero(&self) -> bool {
        *self == Self::zero()
    }

    fn is_one(&self) -> bool {
        *self == Self::one()
    }

    fn from_i64(n: i64) -> Self {
        Self::from_integer(&BigInt::from(n))
    }

    fn pow(&self, mut exp: u64) -> Self {
        let mut base = self.clone();
        let mut acc = Self::one();
        while exp > 0 {
            if exp & 1 == 1 {
                acc = acc.mul_ref(&base);
            }
            exp >>= 1;
            if exp > 0 {
                base = base.mul_ref(&base);
            }
        }
        acc
    }
}

impl Ring for BigInt {
    fn zero() -> Self {
        Zero::zero()
    }

    fn one() -> Self {
        One::one()
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
        // units of Z are exactly ±1
        if One::is_one(&self.abs()) {
            Some(self.clone())
        } else {
            None
        }
    }

    fn from_integer(n: &BigInt) -> Self {
        n.clone()
    }

    fn is_zero(&self) -> bool {
        Zero::is_zero(self)
    }

    fn is_one(&self) -> bool {
        One::is_one(self)
    }
}

/// Implements the owned/borrowed combinations of a binary operator in terms
/// of the `&T op &T` impl.
macro_rules! forward_binop {
    ($ty:ty, $tr:ident, $method:ident) => {
        impl std::ops::$tr<$ty> for $ty {
            type Output = $ty;
            fn $method(self, rhs: $ty) -> $ty {
                std::ops::$tr::$method(&self, &rhs)
            }
        }
        impl<'a> std::ops::$tr<&'a $ty> for $ty {
            type Output = $ty;
            fn $method(self, rhs: &'a $ty) -> $ty {
                std::ops::$tr::$method(&self, rhs)
            }
        }
        impl<'a> std::ops::$tr<$ty> for &'a $ty {
            type Output = $ty;
            fn $method(self, rhs: $ty) -> $ty {
                std::ops::$tr::$method(self, &rhs)
            }
        }
    };
}
pub(crate) use forward_binop;

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn bigint_units() {
        assert_eq!(BigInt::from(-1).inverse(), Some(BigInt::from(-1)));
        assert_eq!(BigInt::from(1).inverse(), Some(BigInt::from(1)));
        assert_eq!(BigInt::from(2).inverse(), None);
        assert_eq!(BigInt::from(0).inverse(), None);
    }

    #[test]
    fn pow_by_squaring() {
        assert_eq!(BigInt::from(3).pow(0), BigInt::from(1));
        assert_eq!(Ring::pow(&BigInt::from(3), 5), BigInt::from(243));
        let big = Ring::pow(&BigInt::from(10), 600);
        assert_eq!(big.to_string().len(), 601);
    }
}
