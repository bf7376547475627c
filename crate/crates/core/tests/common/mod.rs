//! Reference computations that share no code path with the library.

#![allow(dead_code)]

use num_bigint::BigInt;
use num_traits::{One, Zero};

/// `f_0..=f_max` by the plain recurrence.
pub fn naive_fibs(max: usize) -> Vec<BigInt> {
    let mut v = vec![BigInt::zero(), BigInt::one()];
    while v.len() <= max {
        let next = &v[v.len() - 1] + &v[v.len() - 2];
        v.push(next);
    }
    v.truncate(max + 1);
    v
}

/// `ℓ_0..=ℓ_max` by the plain recurrence.
pub fn naive_lucas(max: usize) -> Vec<BigInt> {
    let mut v = vec![BigInt::from(2), BigInt::one()];
    while v.len() <= max {
        let next = &v[v.len() - 1] + &v[v.len() - 2];
        v.push(next);
    }
    v.truncate(max + 1);
    v
}

/// `[t^n] ∏_{m≥1} (1 + Σ_{j≥1} f_{2j} t^{mj})` by enumerating every way to
/// write `n = Σ_m m·j_m` with distinct parts `m` and multiplicities `j_m ≥ 1`.
pub fn lambda_by_compositions(n: usize) -> BigInt {
    let fibs = naive_fibs(2 * n + 2);
    fn go(rest: usize, min_part: usize, fibs: &[BigInt]) -> BigInt {
        if rest == 0 {
            return BigInt::one();
        }
        let mut total = BigInt::zero();
        for m in min_part..=rest {
            let mut j = 1;
            while m * j <= rest {
                total += &fibs[2 * j] * go(rest - m * j, m + 1, fibs);
                j += 1;
            }
        }
        total
    }
    go(n, 1, &fibs)
}

/// Window membership `(k + √(k²+2n))/2 < d ≤ k + √(k²+2n)` evaluated with the
/// irrational bound itself: in `f64`, falling back to a 40-digit fixed-point
/// square root when `d` is within `1e-6` of either bound.
pub fn window_oracle(n: u64, k: u64, d: u64) -> bool {
    let root = ((k * k + 2 * n) as f64).sqrt();
    let upper = k as f64 + root;
    let lower = upper / 2.0;
    let d_f = d as f64;
    if (d_f - lower).abs() > 1e-6 && (d_f - upper).abs() > 1e-6 {
        return d_f > lower && d_f <= upper;
    }
    window_oracle_fixed_point(n, k, d)
}

/// Same test with `√m` represented as `⌊√m · 10^40⌋`.
pub fn window_oracle_fixed_point(n: u64, k: u64, d: u64) -> bool {
    let scale = BigInt::from(10u32).pow(40);
    let m = BigInt::from(k * k + 2 * n);
    let scaled_sq = &m * &scale * &scale;
    let root = scaled_sq.sqrt();
    let k_s = BigInt::from(k) * &scale;
    let d_s = BigInt::from(d) * &scale;
    // scaled k + √m lies in [upper_lo, upper_lo + 1); both sides below are
    // multiples of the scale, so comparing against the floor is exact
    let upper_lo = &k_s + &root;
    let two_d = &d_s * 2;
    two_d > upper_lo && d_s <= upper_lo
}
