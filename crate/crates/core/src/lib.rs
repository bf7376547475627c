//! Exact arithmetic for the ideal-counting polynomials `C_n(q)` of the
//! two-dimensional torus `F_q[x, y, x^-1, y^-1]` and the integer sequence
//! `λ_n` obtained by specializing `q` at `α = (3 + √5)/2`.
//!
//! Everything is computed exactly: big integers, the quadratic ring `Z[φ]`,
//! Gaussian integers, Laurent polynomials in `q`, and truncated power series
//! in `t` over any of those rings.
//!
//! * [`rings`] holds the coefficient rings and the [`Ring`] contract.
//! * [`number_theory`] holds Fibonacci/Lucas numbers, divisors and the
//!   short-interval divisor profile `a_{n,k}`.
//! * [`series`] holds truncated power series and the two infinite products.
//! * [`kr`] computes `C_n(q)`, `λ_n` by three methods, and the verifiers.
//! * [`exec`] fans per-`n` work out over threads (feature `parallel`).

pub mod error;
pub mod exec;
pub mod kr;
pub mod number_theory;
pub mod rings;
pub mod series;

pub use error::{Error, Result};
pub use exec::Exec;
pub use num_bigint::BigInt;
pub use rings::{GaussInt, LaurentPoly, QuadInt, Ring};
pub use series::TruncSeries;
