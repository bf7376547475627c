use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_traits::Signed;

use super::{forward_binop, Ring};
use crate::error::{Error, Result};

/// A Laurent polynomial in `q` with integer coefficients.
///
/// Stored as a sparse map `exponent -> coefficient` that never contains a
/// zero coefficient, so structural equality is polynomial equality.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash)]
pub struct LaurentPoly {
    coeffs: BTreeMap<i64, BigInt>,
}

impl LaurentPoly {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn one() -> Self {
        Self::constant(1)
    }

    pub fn constant(c: impl Into<BigInt>) -> Self {
        Self::monomial(c, 0)
    }

    /// `c · q^exp`.
    pub fn monomial(c: impl Into<BigInt>, exp: i64) -> Self {
        let mut p = Self::zero();
        p.add_term(exp, c.into());
        p
    }

    /// The indeterminate `q`.
    pub fn q() -> Self {
        Self::monomial(1, 1)
    }

    /// Builds `Σ coeffs[j] · q^(min_exp + j)`.
    pub fn from_dense<C: Into<BigInt>>(min_exp: i64, coeffs: impl IntoIterator<Item = C>) -> Self {
        let mut p = Self::zero();
        for (j, c) in coeffs.into_iter().enumerate() {
            p.add_term(min_exp + j as i64, c.into());
        }
        p
    }

    fn add_term(&mut self, exp: i64, c: BigInt) {
        if c.is_zero() {
            return;
        }
        match self.coeffs.entry(exp) {
            std::collections::btree_map::Entry::Vacant(v) => {
                v.insert(c);
            }
            std::collections::btree_map::Entry::Occupied(mut o) => {
                *o.get_mut() += c;
                if o.get().is_zero() {
                    o.remove();
                }
            }
        }
    }

    pub fn coeff(&self, exp: i64) -> BigInt {
        self.coeffs.get(&exp).cloned().unwrap_or_default()
    }

    /// Nonzero terms `(exponent, coefficient)` in ascending exponent order.
    pub fn terms(&self) -> impl DoubleEndedIterator<Item = (i64, &BigInt)> + '_ {
        self.coeffs.iter().map(|(&e, c)| (e, c))
    }

    pub fn num_terms(&self) -> usize {
        self.coeffs.len()
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn min_exp(&self) -> Option<i64> {
        self.coeffs.keys().next().copied()
    }

    pub fn max_exp(&self) -> Option<i64> {
        self.coeffs.keys().next_back().copied()
    }

    /// True when no negative exponent is present.
    pub fn is_polynomial(&self) -> bool {
        self.min_exp().is_none_or(|e| e >= 0)
    }

    /// Multiplies by `q^k`.
    pub fn shift(&self, k: i64) -> Self {
        LaurentPoly {
            coeffs: self.coeffs.iter().map(|(&e, c)| (e + k, c.clone())).collect(),
        }
    }

    /// Dense coefficient vector for exponents `lo..=hi`.
    pub fn to_dense(&self, lo: i64, hi: i64) -> Vec<BigInt> {
        (lo..=hi).map(|e| self.coeff(e)).collect()
    }

    /// Formal derivative with respect to `q`.
    pub fn derivative(&self) -> Self {
        let mut p = Self::zero();
        for (&e, c) in &self.coeffs {
            p.add_term(e - 1, c * e);
        }
        p
    }

    /// Substitutes `q := x`.
    ///
    /// Negative exponents need `x` to be a unit of its ring; otherwise the
    /// specialization is undefined and [`Error::NotInvertible`] is returned.
    pub fn eval<R: Ring>(&self, x: &R) -> Result<R> {
        let (Some(lo), Some(hi)) = (self.min_exp(), self.max_exp()) else {
            return Ok(R::zero());
        };
        let mut acc = R::zero();
        if hi >= 0 {
            acc = horner(x, (0..=hi).rev().map(|e| self.coeffs.get(&e)));
        }
        if lo < 0 {
            let inv = x
                .inverse()
                .ok_or_else(|| Error::NotInvertible(format!("evaluation point {x}")))?;
            // Σ_{e<0} c_e x^e = x⁻¹ · Σ_{j≥0} c_{-(j+1)} (x⁻¹)^j
            let neg = horner(&inv, (lo..=-1).map(|e| self.coeffs.get(&e)));
            acc = acc.add_ref(&inv.mul_ref(&neg));
        }
        Ok(acc)
    }

    /// True iff `coeff(k) = coeff(degree − k)` for every `k` and all
    /// exponents lie in `0..=degree`.
    pub fn is_self_reciprocal(&self, degree: i64) -> bool {
        if !self.is_polynomial() || self.max_exp().is_some_and(|e| e > degree) {
            return false;
        }
        self.coeffs
            .iter()
            .all(|(&e, c)| self.coeffs.get(&(degree - e)) == Some(c))
    }

    /// Exact quotient `self / divisor` for ordinary polynomials.
    ///
    /// The divisor must have leading coefficient ±1; a nonzero remainder is
    /// reported as [`Error::NotDivisible`].
    pub fn div_exact(&self, divisor: &LaurentPoly) -> Result<LaurentPoly> {
        let not_divisible = || Error::NotDivisible {
            dividend: self.to_string(),
            divisor: divisor.to_string(),
        };
        let Some(dd) = divisor.max_exp() else {
            return Err(not_divisible());
        };
        let lead = &divisor.coeffs[&dd];
        if !self.is_polynomial() || !divisor.is_polynomial() || !lead.abs().is_one() {
            return Err(not_divisible());
        }
        let mut rem = self.clone();
        let mut quot = LaurentPoly::zero();
        while let Some(top) = rem.max_exp() {
            if top < dd {
                break;
            }
            let c = &rem.coeffs[&top] * lead;
            let step = LaurentPoly::monomial(c, top - dd);
            rem = &rem - &(&step * divisor);
            quot = &quot + &step;
        }
        if rem.is_zero() {
            Ok(quot)
        } else {
            Err(not_divisible())
        }
    }
}

fn horner<'a, R: Ring>(x: &R, coeffs_desc: impl Iterator<Item = Option<&'a BigInt>>) -> R {
    coeffs_desc.fold(R::zero(), |acc, c| {
        let acc = acc.mul_ref(x);
        match c {
            Some(c) => acc.add_ref(&R::from_integer(c)),
            None => acc,
        }
    })
}

impl<'b> Add<&'b LaurentPoly> for &LaurentPoly {
    type Output = LaurentPoly;
    fn add(self, rhs: &'b LaurentPoly) -> LaurentPoly {
        let mut out = self.clone();
        for (&e, c) in &rhs.coeffs {
            out.add_term(e, c.clone());
        }
        out
    }
}

impl<'b> Sub<&'b LaurentPoly> for &LaurentPoly {
    type Output = LaurentPoly;
    fn sub(self, rhs: &'b LaurentPoly) -> LaurentPoly {
        let mut out = self.clone();
        for (&e, c) in &rhs.coeffs {
            out.add_term(e, -c);
        }
        out
    }
}

impl<'b> Mul<&'b LaurentPoly> for &LaurentPoly {
    type Output = LaurentPoly;
    fn mul(self, rhs: &'b LaurentPoly) -> LaurentPoly {
        let mut acc: BTreeMap<i64, BigInt> = BTreeMap::new();
        for (&e1, c1) in &self.coeffs {
            for (&e2, c2) in &rhs.coeffs {
                *acc.entry(e1 + e2).or_default() += c1 * c2;
            }
        }
        acc.retain(|_, c| !c.is_zero());
        LaurentPoly { coeffs: acc }
    }
}

forward_binop!(LaurentPoly, Add, add);
forward_binop!(LaurentPoly, Sub, sub);
forward_binop!(LaurentPoly, Mul, mul);

impl Neg for LaurentPoly {
    type Output = LaurentPoly;
    fn neg(mut self) -> LaurentPoly {
        for c in self.coeffs.values_mut() {
            *c = -std::mem::take(c);
        }
        self
    }
}

impl Neg for &LaurentPoly {
    type Output = LaurentPoly;
    fn neg(self) -> LaurentPoly {
        -self.clone()
    }
}

impl Ring for LaurentPoly {
    fn zero() -> Self {
        LaurentPoly::zero()
    }

    fn one() -> Self {
        LaurentPoly::one()
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

    /// The units of `Z[q, q⁻¹]` are exactly `±q^k`.
    fn inverse(&self) -> Option<Self> {
        if self.coeffs.len() != 1 {
            return None;
        }
        let (&e, c) = self.coeffs.iter().next()?;
        c.abs()
            .is_one()
            .then(|| LaurentPoly::monomial(c.clone(), -e))
    }

    fn from_integer(n: &BigInt) -> Self {
        LaurentPoly::constant(n.clone())
    }

    fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }
}

impl fmt::Display for LaurentPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.coeffs.is_empty() {
            return write!(f, "0");
        }
        for (i, (&e, c)) in self.coeffs.iter().rev().enumerate() {
            let mag = c.abs();
            match (i, c.is_negative()) {
                (0, true) => write!(f, "-")?,
                (0, false) => {}
                (_, true) => write!(f, " - ")?,
                (_, false) => write!(f, " + ")?,
            }
            if e == 0 {
                write!(f, "{mag}")?;
                continue;
            }
            if !mag.is_one() {
                write!(f, "{mag}")?;
            }
            match e {
                1 => write!(f, "q")?,
                _ => write!(f, "q^{e}")?,
            }
        }
        Ok(())
    }
}
