use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_traits::Signed;
use serde::{Deserialize, Serialize};

use super::{forward_binop, Ring};

/// An element `a + b·φ` of `Z[φ]`, where `φ² = φ + 1`.
///
/// The special point `α = (3 + √5)/2 = φ²` is the element `1 + φ`
/// (see [`QuadInt::alpha`]); it is a unit of norm 1 with `α⁻¹ = 2 − φ`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct QuadInt {
    #[serde(with = "decimal")]
    pub a: BigInt,
    #[serde(with = "decimal")]
    pub b: BigInt,
}

impl QuadInt {
    pub fn new(a: impl Into<BigInt>, b: impl Into<BigInt>) -> Self {
        QuadInt {
            a: a.into(),
            b: b.into(),
        }
    }

    pub fn rational(a: impl Into<BigInt>) -> Self {
        QuadInt::new(a, 0)
    }

    pub fn phi() -> Self {
        QuadInt::new(0, 1)
    }

    /// `α = 1 + φ`.
    pub fn alpha() -> Self {
        QuadInt::new(1, 1)
    }

    /// Galois conjugate, `φ ↦ 1 − φ`.
    pub fn conj(&self) -> Self {
        QuadInt {
            a: &self.a + &self.b,
            b: -&self.b,
        }
    }

    /// `N(a + bφ) = a² + ab − b²`.
    pub fn norm(&self) -> BigInt {
        &self.a * &self.a + &self.a * &self.b - &self.b * &self.b
    }

    /// True when the `φ`-component vanishes.
    pub fn is_rational(&self) -> bool {
        self.b.is_zero()
    }

    pub fn scale(&self, k: &BigInt) -> Self {
        QuadInt {
            a: &self.a * k,
            b: &self.b * k,
        }
    }
}

impl<'b> Add<&'b QuadInt> for &QuadInt {
    type Output = QuadInt;
    fn add(self, rhs: &'b QuadInt) -> QuadInt {
        QuadInt {
            a: &self.a + &rhs.a,
            b: &self.b + &rhs.b,
        }
    }
}

impl<'b> Sub<&'b QuadInt> for &QuadInt {
    type Output = QuadInt;
    fn sub(self, rhs: &'b QuadInt) -> QuadInt {
        QuadInt {
            a: &self.a - &rhs.a,
            b: &self.b - &rhs.b,
        }
    }
}

impl<'b> Mul<&'b QuadInt> for &QuadInt {
    type Output = QuadInt;
    fn mul(self, rhs: &'b QuadInt) -> QuadInt {
        // (a + bφ)(c + dφ) = ac + (ad + bc)φ + bdφ², φ² = φ + 1
        let bd = &self.b * &rhs.b;
        QuadInt {
            a: &self.a * &rhs.a + &bd,
            b: &self.a * &rhs.b + &self.b * &rhs.a + bd,
        }
    }
}

forward_binop!(QuadInt, Add, add);
forward_binop!(QuadInt, Sub, sub);
forward_binop!(QuadInt, Mul, mul);

impl Neg for QuadInt {
    type Output = QuadInt;
    fn neg(self) -> QuadInt {
        QuadInt {
            a: -self.a,
            b: -self.b,
        }
    }
}

impl Neg for &QuadInt {
    type Output = QuadInt;
    fn neg(self) -> QuadInt {
        QuadInt {
            a: -&self.a,
            b: -&self.b,
        }
    }
}

impl Ring for QuadInt {
    fn zero() -> Self {
        QuadInt::new(0, 0)
    }

    fn one() -> Self {
        QuadInt::new(1, 0)
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
        // x · conj(x) = N(x), so x is a unit iff N(x) = ±1 and then
        // x⁻¹ = N(x) · conj(x).
        let n = self.norm();
        if n.abs().is_one() {
            Some(self.conj().scale(&n))
        } else {
            None
        }
    }

    fn from_integer(n: &BigInt) -> Self {
        QuadInt {
            a: n.clone(),
            b: BigInt::zero(),
        }
    }

    fn is_zero(&self) -> bool {
        self.a.is_zero() && self.b.is_zero()
    }
}

impl fmt::Display for QuadInt {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.b.is_negative() {
            write!(f, "{} - {}φ", self.a, -&self.b)
        } else {
            write!(f, "{} + {}φ", self.a, self.b)
        }
    }
}

/// Exact `α^n` for any integer `n`, by square-and-multiply on `α` or `α⁻¹`.
pub fn alpha_pow(n: i64) -> QuadInt {
    let base = if n >= 0 {
        QuadInt::alpha()
    } else {
        QuadInt::new(2, -1)
    };
    base.pow(n.unsigned_abs())
}

/// Serializes a `BigInt` as a decimal string.
pub(crate) mod decimal {
    use num_bigint::BigInt;
    use serde::{de::Error, Deserialize, Deserializer, Serializer};

    pub fn serialize<S: Serializer>(n: &BigInt, s: S) -> Result<S::Ok, S::Error> {
        s.collect_str(n)
    }

    pub fn deserialize<'de, D: Deserializer<'de>>(d: D) -> Result<BigInt, D::Error> {
        let s = String::deserialize(d)?;
        s.parse().map_err(D::Error::custom)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::number_theory::{fib, fib_signed};

    #[test]
    fn mul_examples() {
        assert_eq!(QuadInt::phi() * QuadInt::phi(), QuadInt::new(1, 1));
        assert_eq!(QuadInt::new(1, 1) * QuadInt::new(2, -1), QuadInt::one());
        assert_eq!(QuadInt::new(1, 1) * QuadInt::new(1, 1), QuadInt::new(2, 3));
    }

    #[test]
    fn norm_examples() {
        assert_eq!(QuadInt::new(1, 1).norm(), BigInt::from(1));
        assert_eq!(QuadInt::new(0, 1).norm(), BigInt::from(-1));
        assert_eq!(QuadInt::new(3, 0).norm(), BigInt::from(9));
    }

    #[test]
    fn alpha_pow_examples() {
        assert_eq!(alpha_pow(0), QuadInt::new(1, 0));
        assert_eq!(alpha_pow(1), QuadInt::new(1, 1));
        assert_eq!(alpha_pow(2), QuadInt::new(2, 3));
        assert_eq!(alpha_pow(-1), QuadInt::new(2, -1));
    }

    #[test]
    fn alpha_pow_matches_fibonacci_basis() {
        // α^n = f_{2n-1} + f_{2n} φ
        for n in 0..60i64 {
            let expected = QuadInt {
                a: fib_signed(2 * n - 1),
                b: fib(2 * n as u64),
            };
            assert_eq!(alpha_pow(n), expected, "n = {n}");
        }
    }

    #[test]
    fn inverse_of_units_and_non_units() {
        assert_eq!(QuadInt::alpha().inverse(), Some(QuadInt::new(2, -1)));
        assert_eq!(QuadInt::phi().inverse(), Some(QuadInt::new(-1, 1)));
        assert_eq!(QuadInt::new(2, 0).inverse(), None);
        assert_eq!(QuadInt::zero().inverse(), None);
    }

    #[test]
    fn alpha_plus_inverse_is_three() {
        let a = QuadInt::alpha();
        assert_eq!(&a + &a.inverse().unwrap(), QuadInt::rational(3));
    }

    #[test]
    fn display() {
        assert_eq!(QuadInt::new(8, 12).to_string(), "8 + 12φ");
        assert_eq!(QuadInt::new(2, -1).to_string(), "2 - 1φ");
    }
}
