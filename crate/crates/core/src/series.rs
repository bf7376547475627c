//! Truncated power series in `t` over any [`Ring`], and the two infinite
//! products:
//!
//! * `∏_{m≥1} (1 + F(t^m))` with `F(t) = Σ f_{2n} t^n = t/(1 − 3t + t²)`,
//! * `∏_{m≥1} (1 − t^m)² / (1 − (q + q⁻¹) t^m + t^{2m})`.
//!
//! A series of order `N` is computed modulo `t^{N+1}`. Factor `m` of either
//! product is `1 + O(t^m)`, so truncating the product at `m = N` is exact.

use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;

use crate::error::{Error, Result};
use crate::rings::Ring;

#[derive(Clone, Debug, PartialEq)]
pub struct TruncSeries<R> {
    coeffs: Vec<R>,
}

impl<R: Ring> TruncSeries<R> {
    pub fn zero(order: usize) -> Self {
        TruncSeries {
            coeffs: vec![R::zero(); order + 1],
        }
    }

    pub fn one(order: usize) -> Self {
        Self::constant(order, R::one())
    }

    pub fn constant(order: usize, c: R) -> Self {
        let mut s = Self::zero(order);
        s.coeffs[0] = c;
        s
    }

    /// `c · t^exp`; zero if `exp > order`.
    pub fn monomial(order: usize, c: R, exp: usize) -> Self {
        let mut s = Self::zero(order);
        if exp <= order {
            s.coeffs[exp] = c;
        }
        s
    }

    /// Pads with zeros or truncates `coeffs` to length `order + 1`.
    pub fn from_coeffs(order: usize, coeffs: impl IntoIterator<Item = R>) -> Self {
        let mut v: Vec<R> = coeffs.into_iter().take(order + 1).collect();
        v.resize(order + 1, R::zero());
        TruncSeries { coeffs: v }
    }

    pub fn order(&self) -> usize {
        self.coeffs.len() - 1
    }

    pub fn coeff(&self, k: usize) -> &R {
        &self.coeffs[k]
    }

    pub fn coeffs(&self) -> &[R] {
        &self.coeffs
    }

    pub fn into_coeffs(self) -> Vec<R> {
        self.coeffs
    }

    /// Reduces to a lower order.
    pub fn truncate(&self, order: usize) -> Self {
        Self::from_coeffs(order, self.coeffs.iter().cloned())
    }

    /// Multiplicative inverse; requires a unit constant term.
    pub fn inverse(&self) -> Result<Self> {
        let inv0 = self.coeffs[0]
            .inverse()
            .ok_or_else(|| Error::NotInvertible(format!("series with constant term {}", self.coeffs[0])))?;
        let n = self.order();
        let mut out = vec![R::zero(); n + 1];
        out[0] = inv0.clone();
        // b_k = −a_0⁻¹ Σ_{j=1}^{k} a_j b_{k−j}
        let support: Vec<usize> = (1..=n).filter(|&j| !self.coeffs[j].is_zero()).collect();
        for k in 1..=n {
            let mut acc = R::zero();
            for &j in support.iter().take_while(|&&j| j <= k) {
                if !out[k - j].is_zero() {
                    acc = acc.add_ref(&self.coeffs[j].mul_ref(&out[k - j]));
                }
            }
            out[k] = acc.mul_ref(&inv0).neg_ref();
        }
        Ok(TruncSeries { coeffs: out })
    }

    /// `a(t^m)`, kept at the same order.
    ///
    /// # Panics
    ///
    /// If `m == 0`.
    pub fn substitute_power(&self, m: usize) -> Self {
        assert!(m >= 1, "substitute_power requires m >= 1");
        let n = self.order();
        let mut out = Self::zero(n);
        for (j, c) in self.coeffs.iter().enumerate() {
            let e = j * m;
            if e > n {
                break;
            }
            out.coeffs[e] = c.clone();
        }
        out
    }

    fn zip_with(&self, rhs: &Self, f: impl Fn(&R, &R) -> R) -> Self {
        TruncSeries {
            coeffs: self.coeffs.iter().zip(&rhs.coeffs).map(|(a, b)| f(a, b)).collect(),
        }
    }
}

impl<'b, R: Ring> Add<&'b TruncSeries<R>> for &TruncSeries<R> {
    type Output = TruncSeries<R>;
    fn add(self, rhs: &'b TruncSeries<R>) -> TruncSeries<R> {
        self.zip_with(rhs, R::add_ref)
    }
}

impl<'b, R: Ring> Sub<&'b TruncSeries<R>> for &TruncSeries<R> {
    type Output = TruncSeries<R>;
    fn sub(self, rhs: &'b TruncSeries<R>) -> TruncSeries<R> {
        self.zip_with(rhs, R::sub_ref)
    }
}

impl<R: Ring> Neg for &TruncSeries<R> {
    type Output = TruncSeries<R>;
    fn neg(self) -> TruncSeries<R> {
        TruncSeries {
            coeffs: self.coeffs.iter().map(R::neg_ref).collect(),
        }
    }
}

/// Cauchy product truncated to the smaller order. Zero coefficients are
/// skipped, which makes products with sparse factors like `F(t^m)` cheap.
impl<'b, R: Ring> Mul<&'b TruncSeries<R>> for &TruncSeries<R> {
    type Output = TruncSeries<R>;
    fn mul(self, rhs: &'b TruncSeries<R>) -> TruncSeries<R> {
        let n = self.order().min(rhs.order());
        let mut out = vec![R::zero(); n + 1];
        let rhs_support: Vec<usize> = (0..=n).filter(|&j| !rhs.coeffs[j].is_zero()).collect();
        for i in 0..=n {
            let a = &self.coeffs[i];
            if a.is_zero() {
                continue;
            }
            for &j in rhs_support.iter().take_while(|&&j| i + j <= n) {
                out[i + j] = out[i + j].add_ref(&a.mul_ref(&rhs.coeffs[j]));
            }
        }
        TruncSeries { coeffs: out }
    }
}

/// `F(t) = Σ_{n≥1} f_{2n} t^n` via `c_n = 3 c_{n−1} − c_{n−2}`, `c_0 = 0`,
/// `c_1 = 1`.
pub fn f_series(order: usize) -> TruncSeries<BigInt> {
    let mut c = Vec::with_capacity(order + 1);
    c.push(BigInt::from(0));
    if order >= 1 {
        c.push(BigInt::from(1));
    }
    for n in 2..=order {
        let next = &c[n - 1] * 3 - &c[n - 2];
        c.push(next);
    }
    TruncSeries::from_coeffs(order, c)
}

/// `F(t)` built as `t · (1 − 3t + t²)⁻¹`.
pub fn f_series_by_inverse(order: usize) -> TruncSeries<BigInt> {
    let den = TruncSeries::from_coeffs(order, [1, -3, 1].map(BigInt::from));
    let t = TruncSeries::monomial(order, BigInt::from(1), 1);
    &t * &den.inverse().expect("constant term 1 is a unit")
}

/// `∏_{m=1}^{N} (1 + F(t^m)) mod t^{N+1}`; coefficient `n ≥ 1` is `λ_n`.
pub fn lambda_product_series(order: usize) -> TruncSeries<BigInt> {
    let f = f_series(order);
    let mut prod = TruncSeries::one(order);
    for m in 1..=order {
        let factor = &TruncSeries::one(order) + &f.substitute_power(m);
        prod = &prod * &factor;
    }
    prod
}

/// Denominator `1 − s t^m + t^{2m}` of one factor of the Kassel–Reutenauer
/// product, with `s = q + q⁻¹`.
pub fn kr_denominator<R: Ring>(order: usize, s: &R, m: usize) -> TruncSeries<R> {
    let one = TruncSeries::one(order);
    &(&one - &TruncSeries::monomial(order, s.clone(), m)) + &TruncSeries::monomial(order, R::one(), 2 * m)
}

/// One factor `(1 − t^m)² · (1 − s t^m + t^{2m})⁻¹`.
pub fn kr_factor<R: Ring>(order: usize, s: &R, m: usize) -> TruncSeries<R> {
    let two = R::from_i64(2);
    let num = &(&TruncSeries::one(order) - &TruncSeries::monomial(order, two, m))
        + &TruncSeries::monomial(order, R::one(), 2 * m);
    let den = kr_denominator(order, s, m);
    &num * &den.inverse().expect("constant term 1 is a unit")
}

/// The same factor written as `1 + (s − 2) t^m · (1 − s t^m + t^{2m})⁻¹`.
pub fn kr_factor_split<R: Ring>(order: usize, s: &R, m: usize) -> TruncSeries<R> {
    let shift = s.sub_ref(&R::from_i64(2));
    let den_inv = kr_denominator(order, s, m).inverse().expect("constant term 1 is a unit");
    &TruncSeries::one(order) + &(&TruncSeries::monomial(order, shift, m) * &den_inv)
}

/// `∏_{m=1}^{N} (1 − t^m)² / (1 − (q + q⁻¹) t^m + t^{2m}) mod t^{N+1}` at
/// `q = qval`, which must be a unit of `R`. Pass [`LaurentPoly::q`] for the
/// symbolic product.
///
/// [`LaurentPoly::q`]: crate::rings::LaurentPoly::q
pub fn kr_lhs_series<R: Ring>(order: usize, qval: &R) -> Result<TruncSeries<R>> {
    let inv = qval
        .inverse()
        .ok_or_else(|| Error::NotInvertible(format!("q = {qval}")))?;
    let s = qval.add_ref(&inv);
    let mut prod = TruncSeries::one(order);
    for m in 1..=order {
        prod = &prod * &kr_factor(order, &s, m);
    }
    Ok(prod)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rings::{LaurentPoly, QuadInt};

    fn ints(v: &[i64]) -> Vec<BigInt> {
        v.iter().map(|&x| BigInt::from(x)).collect()
    }

    fn series(order: usize, v: &[i64]) -> TruncSeries<BigInt> {
        TruncSeries::from_coeffs(order, ints(v))
    }

    #[test]
    fn f_series_examples() {
        assert_eq!(f_series(5).coeffs(), ints(&[0, 1, 3, 8, 21, 55]).as_slice());
        assert_eq!(f_series(0).coeffs(), ints(&[0]).as_slice());
        assert_eq!(f_series_by_inverse(20), f_series(20));
    }

    #[test]
    fn mul_examples() {
        let a = series(4, &[3, -1, 4, 1, -5]);
        assert_eq!(&a * &TruncSeries::one(4), a);
        assert_eq!(&series(2, &[1, 1]) * &series(2, &[1, -1]), series(2, &[1, 0, -1]));
        let den = series(4, &[1, -3, 1]);
        assert_eq!(&f_series(4) * &den, series(4, &[0, 1]));
    }

    #[test]
    fn mismatched_orders_truncate_to_smaller() {
        let p = &series(5, &[1, 1]) * &series(2, &[1, 1]);
        assert_eq!(p, series(2, &[1, 2, 1]));
    }

    #[test]
    fn inverse_examples() {
        assert_eq!(series(3, &[1, -1]).inverse().unwrap(), series(3, &[1, 1, 1, 1]));
        assert_eq!(series(3, &[1, -3, 1]).inverse().unwrap(), series(3, &[1, 3, 8, 21]));
        assert!(matches!(series(3, &[0, 1]).inverse(), Err(Error::NotInvertible(_))));
        assert!(series(3, &[2, 1]).inverse().is_err());
    }

    #[test]
    fn substitute_examples() {
        assert_eq!(f_series(5).substitute_power(2), series(5, &[0, 0, 1, 0, 3, 0]));
        assert_eq!(f_series(5).substitute_power(1), f_series(5));
        assert_eq!(series(2, &[1, 1]).substitute_power(3), series(2, &[1]));
    }

    #[test]
    fn lambda_product_first_terms() {
        let p = lambda_product_series(4);
        assert_eq!(p.coeffs(), ints(&[1, 1, 4, 10, 29]).as_slice());
    }

    #[test]
    fn kr_product_at_one_is_trivial() {
        let p = kr_lhs_series(12, &BigInt::from(1)).unwrap();
        assert_eq!(p, TruncSeries::one(12));
    }

    #[test]
    fn kr_product_at_alpha() {
        let p = kr_lhs_series(4, &QuadInt::alpha()).unwrap();
        let expected: Vec<QuadInt> = [1, 1, 4, 10, 29].into_iter().map(QuadInt::rational).collect();
        assert_eq!(p.coeffs(), expected.as_slice());
    }

    #[test]
    fn kr_product_symbolic_first_coefficient() {
        let p = kr_lhs_series(3, &LaurentPoly::q()).unwrap();
        assert_eq!(*p.coeff(0), LaurentPoly::one());
        assert_eq!(*p.coeff(1), LaurentPoly::from_dense(-1, [1, -2, 1]));
        assert_eq!(*p.coeff(2), LaurentPoly::from_dense(-2, [1, -1, 0, -1, 1]));
    }

    #[test]
    fn kr_product_rejects_non_unit() {
        assert!(kr_lhs_series(3, &BigInt::from(2)).is_err());
        assert!(kr_lhs_series(3, &LaurentPoly::from_dense(0, [1, 1])).is_err());
    }
}
