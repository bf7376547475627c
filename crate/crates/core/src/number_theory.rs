//! Fibonacci and Lucas numbers, divisors, and the short-interval divisor
//! profile `a_{n,k}`.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Zero};
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// Consecutive Fibonacci numbers `(f_n, f_{n+1})`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FibPair {
    pub index: u64,
    pub current: BigInt,
    pub next: BigInt,
}

/// `(f_n, f_{n+1})` by fast doubling:
/// `f_{2k} = f_k (2 f_{k+1} − f_k)`, `f_{2k+1} = f_k² + f_{k+1}²`.
pub fn fib_pair(n: u64) -> FibPair {
    let mut a = BigInt::zero();
    let mut b = BigInt::one();
    for bit in (0..u64::BITS - n.leading_zeros()).rev() {
        let c = &a * (&b * 2 - &a);
        let d = &a * &a + &b * &b;
        if (n >> bit) & 1 == 1 {
            a = d;
            b = &c + &a;
        } else {
            a = c;
            b = d;
        }
    }
    FibPair {
        index: n,
        current: a,
        next: b,
    }
}

/// `f_n` with `f_0 = 0`, `f_1 = 1`.
pub fn fib(n: u64) -> BigInt {
    fib_pair(n).current
}

/// `f_n` for any integer `n`, extended backwards by `f_{n−2} = f_n − f_{n−1}`,
/// i.e. `f_{−n} = (−1)^{n+1} f_n`.
pub fn fib_signed(n: i64) -> BigInt {
    let f = fib(n.unsigned_abs());
    if n < 0 && n % 2 == 0 {
        -f
    } else {
        f
    }
}

/// `ℓ_n` with `ℓ_0 = 2`, `ℓ_1 = 1`, computed as `2 f_{n+1} − f_n`.
pub fn lucas(n: u64) -> BigInt {
    let p = fib_pair(n);
    p.next * 2 - p.current
}

/// Positive divisors of `n` in ascending order, by trial division up to `√n`.
pub fn divisors(n: u64) -> Result<Vec<u64>> {
    if n == 0 {
        return Err(Error::ZeroArgument { what: "divisors" });
    }
    let mut small = Vec::new();
    let mut large = Vec::new();
    let mut d = 1u64;
    while d * d <= n {
        if n.is_multiple_of(d) {
            small.push(d);
            if d * d != n {
                large.push(n / d);
            }
        }
        d += 1;
    }
    small.extend(large.into_iter().rev());
    Ok(small)
}

/// `σ(n)`, the sum of the positive divisors of `n`.
pub fn sigma(n: u64) -> Result<BigInt> {
    if n == 0 {
        return Err(Error::ZeroArgument { what: "sigma" });
    }
    Ok(divisors(n)?.into_iter().map(BigInt::from).sum())
}

/// Whether the divisor `d` of `n` lies in the window
/// `((k + √(k² + 2n))/2, k + √(k² + 2n)]`.
///
/// Equivalent integer form: `2d(d − k) > n` and `d(d − 2k) ≤ 2n`. When
/// `2d ≤ k` the first product is non-positive, and when `d ≤ k` the second
/// is, so the sign cases fall out of the same two inequalities.
pub fn in_divisor_window(n: u64, k: u64, d: u64) -> bool {
    let (n, k, d) = (n as i128, k as i128, d as i128);
    2 * d * (d - k) > n && d * (d - 2 * k) <= 2 * n
}

/// The counts `a_{n,0}, …, a_{n,n−1}`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct DivisorProfile {
    pub n: u64,
    pub counts: Vec<u32>,
}

impl DivisorProfile {
    pub fn get(&self, k: u64) -> u32 {
        self.counts.get(k as usize).copied().unwrap_or(0)
    }

    /// `a_{n,0} + 2 Σ_{k≥1} a_{n,k}`; equals `σ(n)`.
    pub fn weighted_total(&self) -> BigInt {
        let rest: u64 = self.counts.iter().skip(1).map(|&c| c as u64).sum();
        BigInt::from(self.get(0)) + BigInt::from(rest) * 2
    }

    /// `(k, a_{n,k})` for the nonzero entries.
    pub fn support(&self) -> impl Iterator<Item = (u64, u32)> + '_ {
        self.counts
            .iter()
            .enumerate()
            .filter(|(_, &c)| c > 0)
            .map(|(k, &c)| (k as u64, c))
    }
}

/// Computes `a_{n,k}` for `0 ≤ k < n`.
///
/// For a fixed divisor `d` the window condition holds for a contiguous run
/// of `k`: `k ≥ ⌈(d² − 2n)/(2d)⌉` and `k ≤ ⌊(2d² − n − 1)/(2d)⌋`. Each divisor
/// contributes to its run, clamped to `0..n`.
///
/// # Panics
///
/// If `n == 0`.
pub fn divisor_profile(n: u64) -> DivisorProfile {
    assert!(n >= 1, "divisor_profile requires n >= 1");
    let len = n as usize;
    let mut counts = vec![0u32; len];
    let ni = n as i128;
    for d in divisors(n).expect("n >= 1") {
        let d = d as i128;
        let lo = Integer::div_ceil(&(d * d - 2 * ni), &(2 * d)).max(0);
        let hi = Integer::div_floor(&(2 * d * d - ni - 1), &(2 * d)).min(ni - 1);
        for k in lo..=hi {
            counts[k as usize] += 1;
        }
    }
    DivisorProfile { n, counts }
}
