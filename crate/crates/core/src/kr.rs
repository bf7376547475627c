//! The ideal-counting polynomials `C_n(q)`, the sequence `λ_n`, and the
//! identity verifiers.
//!
//! `C_n(q)` is defined here through the divisor profile:
//!
//! ```text
//! C_n(q) / q^n = (q + q⁻¹ − 2) · (a_{n,0} + Σ_{k=1}^{n−1} a_{n,k} (q^k + q^{−k}))
//! ```
//!
//! and `λ_n` is computed three independent ways:
//!
//! * [`LambdaMethod::Product`]: coefficients of `∏_{m≥1} (1 + F(t^m))`,
//! * [`LambdaMethod::Divisor`]: `a_{n,0} + Σ_{k≥1} a_{n,k} ℓ_{2k}`,
//! * [`LambdaMethod::Eval`]: `C_n(α) · α^{−n}` in `Z[φ]`.

use std::fmt;
use std::str::FromStr;

use num_bigint::BigInt;
use num_traits::Signed;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::exec::Exec;
use crate::number_theory::{divisor_profile, fib, lucas, sigma, DivisorProfile};
use crate::rings::{alpha_pow, GaussInt, LaurentPoly, QuadInt, Ring};
use crate::series::{kr_lhs_series, lambda_product_series};

/// `C_n(q)`, an ordinary polynomial of degree `2n`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CnPolynomial {
    pub n: u64,
    pub poly: LaurentPoly,
}

impl CnPolynomial {
    /// Coefficients of `q^0, …, q^{2n}`.
    pub fn coeffs(&self) -> Vec<BigInt> {
        self.poly.to_dense(0, 2 * self.n as i64)
    }

    /// `q^{−n} C_n(q)`, supported on `[−n, n]`.
    pub fn normalized(&self) -> LaurentPoly {
        self.poly.shift(-(self.n as i64))
    }

    pub fn eval<R: Ring>(&self, x: &R) -> Result<R> {
        self.poly.eval(x)
    }
}

/// `a_{n,0} + Σ_{k=1}^{n−1} a_{n,k} (q^k + q^{−k})`.
fn profile_laurent(profile: &DivisorProfile) -> LaurentPoly {
    let mut dense = vec![BigInt::zero(); 2 * profile.counts.len() - 1];
    let mid = profile.counts.len() - 1;
    for (k, c) in profile.support() {
        let k = k as usize;
        dense[mid + k] = BigInt::from(c);
        dense[mid - k] = BigInt::from(c);
    }
    LaurentPoly::from_dense(-(mid as i64), dense)
}

/// # Panics
///
/// If `n == 0`.
pub fn cn_poly(n: u64) -> CnPolynomial {
    assert!(n >= 1, "cn_poly requires n >= 1");
    let shape = LaurentPoly::from_dense(-1, [1, -2, 1]);
    let normalized = &shape * &profile_laurent(&divisor_profile(n));
    CnPolynomial {
        n,
        poly: normalized.shift(n as i64),
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum LambdaMethod {
    Product,
    Divisor,
    Eval,
}

impl LambdaMethod {
    pub const ALL: [LambdaMethod; 3] = [LambdaMethod::Product, LambdaMethod::Divisor, LambdaMethod::Eval];

    pub fn name(self) -> &'static str {
        match self {
            LambdaMethod::Product => "product",
            LambdaMethod::Divisor => "divisor",
            LambdaMethod::Eval => "eval",
        }
    }
}

impl fmt::Display for LambdaMethod {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LambdaResult {
    pub n: u64,
    pub value: BigInt,
    pub method: LambdaMethod,
}

/// `λ_n = a_{n,0} + Σ_{k=1}^{n−1} a_{n,k} ℓ_{2k}`.
pub fn lambda_divisor(n: u64) -> LambdaResult {
    let profile = divisor_profile(n);
    let value = profile
        .support()
        .map(|(k, c)| {
            let weight = if k == 0 { BigInt::from(1) } else { lucas(2 * k) };
            weight * c
        })
        .sum();
    LambdaResult {
        n,
        value,
        method: LambdaMethod::Divisor,
    }
}

/// `λ_1, …, λ_N` from the product expansion.
pub fn lambda_product(max_n: u64) -> Vec<LambdaResult> {
    lambda_product_series(max_n as usize)
        .into_coeffs()
        .into_iter()
        .enumerate()
        .skip(1)
        .map(|(n, value)| LambdaResult {
            n: n as u64,
            value,
            method: LambdaMethod::Product,
        })
        .collect()
}

/// `λ_n = C_n(α) · α^{−n}`.
///
/// A nonzero `φ`-component would falsify the identity and is reported as
/// [`Error::Inconsistent`].
pub fn lambda_eval(n: u64) -> Result<LambdaResult> {
    let at_alpha = cn_poly(n).eval(&QuadInt::alpha())?;
    let value = &at_alpha * &alpha_pow(-(n as i64));
    if !value.is_rational() {
        return Err(Error::Inconsistent {
            n,
            detail: format!("C_n(α)·α^-n = {value} is not a rational integer"),
        });
    }
    Ok(LambdaResult {
        n,
        value: value.a,
        method: LambdaMethod::Eval,
    })
}

/// `λ · (f_{2n} α − f_{2n−2})`.
pub fn theorem_rhs(n: u64, lambda: &BigInt) -> QuadInt {
    let f2n = fib(2 * n);
    let f2n2 = fib(2 * n - 2);
    let alpha_n = &QuadInt::alpha().scale(&f2n) - &QuadInt::rational(f2n2);
    alpha_n.scale(lambda)
}

/// Number of `(x, y) ∈ Z²` with `x² + b·y² = n`, by exhaustive search.
pub fn lattice_count(n: u64, b: u64) -> Result<BigInt> {
    if n == 0 {
        return Err(Error::ZeroArgument { what: "lattice_count" });
    }
    if !matches!(b, 1 | 2) {
        return Err(Error::UnsupportedForm(b));
    }
    let mut count = 0u64;
    let mut y = 0u64;
    while b * y * y <= n {
        let rest = n - b * y * y;
        let mut x = 0u64;
        while x * x <= rest {
            if x * x == rest {
                let signs = if x == 0 { 1 } else { 2 } * if y == 0 { 1 } else { 2 };
                count += signs;
            }
            x += 1;
        }
        y += 1;
    }
    Ok(BigInt::from(count))
}

/// A failed identity with both sides in canonical printed form.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Witness {
    pub n: u64,
    pub identity: String,
    pub left: String,
    pub right: String,
}

fn check<T: PartialEq + fmt::Display>(n: u64, identity: &str, left: T, right: T) -> Option<Witness> {
    (left != right).then(|| Witness {
        n,
        identity: identity.to_string(),
        left: left.to_string(),
        right: right.to_string(),
    })
}

fn error_witness(n: u64, identity: &str, err: &Error) -> Witness {
    Witness {
        n,
        identity: identity.to_string(),
        left: format!("error: {err}"),
        right: String::new(),
    }
}

/// `C_n(α) = λ_n (f_{2n} α − f_{2n−2})` with `λ_n` from the divisor formula.
pub fn verify_theorem(n: u64) -> std::result::Result<(), Box<Witness>> {
    verify_theorem_with(n, &lambda_divisor(n).value)
}

/// The theorem check against a caller-supplied `λ_n`.
pub fn verify_theorem_with(n: u64, lambda: &BigInt) -> std::result::Result<(), Box<Witness>> {
    let lhs = match cn_poly(n).eval(&QuadInt::alpha()) {
        Ok(v) => v,
        Err(e) => return Err(Box::new(error_witness(n, "C_n(α) = λ_n(f_2n α − f_2n-2)", &e))),
    };
    match check(n, "C_n(α) = λ_n(f_2n α − f_2n-2)", lhs, theorem_rhs(n, lambda)) {
        Some(w) => Err(Box::new(w)),
        None => Ok(()),
    }
}

/// `C_n(−1) = #{x² + y² = n}` and `N(C_n(i)) = #{x² + 2y² = n}²`.
pub fn verify_lattice(n: u64) -> Vec<Witness> {
    let cn = cn_poly(n);
    let mut out = Vec::new();
    let sum_two_squares = lattice_count(n, 1).expect("b = 1");
    match cn.eval(&BigInt::from(-1)) {
        Ok(v) => out.extend(check(n, "C_n(-1) = #{x²+y²=n}", v, sum_two_squares)),
        Err(e) => out.push(error_witness(n, "C_n(-1) = #{x²+y²=n}", &e)),
    }
    let r2 = lattice_count(n, 2).expect("b = 2");
    match cn.eval(&GaussInt::i()) {
        Ok(v) => out.extend(check(n, "N(C_n(i)) = #{x²+2y²=n}²", v.norm(), &r2 * &r2)),
        Err(e) => out.push(error_witness(n, "N(C_n(i)) = #{x²+2y²=n}²", &e)),
    }
    out
}

/// `σ(n)` two ways: the profile identity `a_{n,0} + 2 Σ a_{n,k}`, and
/// `(C_n(q) / (q − 1)²)` evaluated at `q = 1`.
pub fn verify_sigma(n: u64) -> Vec<Witness> {
    let s = sigma(n).expect("n >= 1");
    let mut out = Vec::new();
    out.extend(check(
        n,
        "a_n,0 + 2Σa_n,k = σ(n)",
        divisor_profile(n).weighted_total(),
        s.clone(),
    ));
    let double_root = LaurentPoly::from_dense(0, [1, -2, 1]);
    match cn_poly(n).poly.div_exact(&double_root).and_then(|p| p.eval(&BigInt::from(1))) {
        Ok(v) => out.extend(check(n, "[C_n/(q-1)²](1) = σ(n)", v, s)),
        Err(e) => out.push(error_witness(n, "[C_n/(q-1)²](1) = σ(n)", &e)),
    }
    out
}

/// Both §1-style specializations: lattice counts and the σ-limit.
pub fn verify_specializations(n: u64) -> Vec<Witness> {
    let mut out = verify_lattice(n);
    out.extend(verify_sigma(n));
    out
}

/// Structural properties of `C_n` and the profile.
pub fn verify_shape(n: u64) -> Vec<Witness> {
    let cn = cn_poly(n);
    let deg = 2 * n as i64;
    let mut out = Vec::new();
    let span = format!("[{}, {}]", cn.poly.min_exp().unwrap_or(0), cn.poly.max_exp().unwrap_or(0));
    out.extend(check(n, "support of C_n = [0, 2n]", span, format!("[0, {deg}]")));
    out.extend(check(n, "C_n self-reciprocal of degree 2n", cn.poly.is_self_reciprocal(deg), true));
    let one = BigInt::from(1);
    let at_one = cn.poly.eval(&one).unwrap_or_else(|_| BigInt::from(-1));
    out.extend(check(n, "C_n(1) = 0", at_one, BigInt::zero()));
    let slope = cn.poly.derivative().eval(&one).unwrap_or_else(|_| BigInt::from(-1));
    out.extend(check(n, "C_n'(1) = 0", slope, BigInt::zero()));
    let lambda = lambda_divisor(n).value;
    out.extend(check(n, "λ_n ≥ 0", !lambda.is_negative(), true));
    let profile = divisor_profile(n);
    out.extend(check(n, "a_n,n-1 = 1", profile.get(n - 1), 1));
    out.extend(check(n, "a_n,0 + 2Σa_n,k = σ(n)", profile.weighted_total(), sigma(n).expect("n >= 1")));
    out
}

/// Coefficient `t^n` of the symbolic product equals `q^{−n} C_n(q)` for
/// `n ≤ max_n`, and the constant term is 1. Returns one entry per `n` in
/// `0..=max_n`.
pub fn verify_gf_identity(max_n: u64, exec: Exec) -> Vec<(u64, Vec<Witness>)> {
    let lhs = kr_lhs_series(max_n as usize, &LaurentPoly::q()).expect("q is a unit of Z[q, q^-1]");
    let rhs: Vec<LaurentPoly> = exec.map_range(0..=max_n, |n| match n {
        0 => LaurentPoly::one(),
        _ => cn_poly(n).normalized(),
    });
    lhs.coeffs()
        .iter()
        .zip(rhs)
        .enumerate()
        .map(|(n, (l, r))| {
            let n = n as u64;
            (n, check(n, "[t^n] KR product = q^-n C_n(q)", l, &r).into_iter().collect())
        })
        .collect()
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Suite {
    Theorem,
    Gf,
    Lattice,
    Sigma,
    Shape,
}

impl Suite {
    pub const ALL: [Suite; 5] = [Suite::Theorem, Suite::Gf, Suite::Lattice, Suite::Sigma, Suite::Shape];

    pub fn name(self) -> &'static str {
        match self {
            Suite::Theorem => "theorem",
            Suite::Gf => "gf",
            Suite::Lattice => "lattice",
            Suite::Sigma => "sigma",
            Suite::Shape => "shape",
        }
    }

    fn check_one(self, n: u64) -> Vec<Witness> {
        match self {
            Suite::Theorem => verify_theorem(n).err().map(|w| *w).into_iter().collect(),
            Suite::Lattice => verify_lattice(n),
            Suite::Sigma => verify_sigma(n),
            Suite::Shape => verify_shape(n),
            Suite::Gf => unreachable!("gf is checked as one series"),
        }
    }
}

impl fmt::Display for Suite {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Suite {
    type Err = String;

    fn from_str(s: &str) -> std::result::Result<Self, String> {
        Suite::ALL
            .into_iter()
            .find(|suite| suite.name() == s)
            .ok_or_else(|| format!("unknown suite '{s}' (expected theorem, gf, lattice, sigma or shape)"))
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct SuiteResult {
    pub suite: Suite,
    pub max_n: u64,
    pub checked: u64,
    pub passed: u64,
    pub failures: Vec<Witness>,
}

impl SuiteResult {
    pub fn ok(&self) -> bool {
        self.failures.is_empty()
    }

    fn from_entries(suite: Suite, max_n: u64, entries: Vec<(u64, Vec<Witness>)>) -> Self {
        let checked = entries.iter().filter(|(n, _)| *n >= 1).count() as u64;
        let passed = entries.iter().filter(|(n, w)| *n >= 1 && w.is_empty()).count() as u64;
        SuiteResult {
            suite,
            max_n,
            checked,
            passed,
            failures: entries.into_iter().flat_map(|(_, w)| w).collect(),
        }
    }
}

impl fmt::Display for SuiteResult {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let status = if self.ok() { "PASS" } else { "FAIL" };
        write!(f, "{}: {}/{} {}", self.suite, self.passed, self.checked, status)
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct VerificationReport {
    pub max_n: u64,
    pub suites: Vec<SuiteResult>,
}

impl VerificationReport {
    pub fn all_passed(&self) -> bool {
        self.suites.iter().all(SuiteResult::ok)
    }

    pub fn failures(&self) -> impl Iterator<Item = &Witness> {
        self.suites.iter().flat_map(|s| &s.failures)
    }
}

/// Runs `suites` for `1 ≤ n ≤ max_n`; the gf suite stops at
/// `min(max_n, gf_max)`. Suites appear in the order given, witnesses in
/// ascending `n`.
pub fn run_verification(max_n: u64, suites: &[Suite], gf_max: u64, exec: Exec) -> VerificationReport {
    assert!(max_n >= 1, "run_verification requires max_n >= 1");
    let results = suites
        .iter()
        .map(|&suite| match suite {
            Suite::Gf => {
                let cap = max_n.min(gf_max).max(1);
                SuiteResult::from_entries(suite, cap, verify_gf_identity(cap, exec))
            }
            _ => {
                let entries = exec.map_range(1..=max_n, |n| (n, suite.check_one(n)));
                SuiteResult::from_entries(suite, max_n, entries)
            }
        })
        .collect();
    VerificationReport { max_n, suites: results }
}
