//! Reciprocal binomial sums
//! `W^{(l)}_{k,r}(p, m, alpha) = sum_{n>=1} (H^{(m)}_{n+alpha})^l / (n^p C(n+k+r, k))`
//! and Euler sums `sum H_{n+2alpha} / (n+alpha)^w` from the symmetry of
//! parametric polylogarithm integrals.
//!
//! `1/C(n+k+r, k)` is expanded either over the simple poles `n+r+j` ("flat")
//! or over products `(n+r+1)(n+r+1+j)` ("paired"). Each piece is then a
//! two-factor sum handled by [`crate::identities`], so the two expansions
//! give independent closed-form routes to the same value.

use num_bigint::BigInt;
use num_integer::binomial;
use num_traits::{One, Zero};
use serde::{Deserialize, Serialize};

use crate::const_combo::Rational;
use crate::error::{Error, Result};
use crate::harmonic::{classical_harmonic, harmonic_value};
use crate::identities::{DomainMode, Family, TwoFactorSpec};
use crate::oracle::series::{power_log, HarmonicSeries};
use crate::oracle::{sum_series_with, DecayClass, FnSeries, OracleConfig, OracleEstimate};
use crate::special_fn::{hurwitz_zeta_int, zeta_int};

/// The `(l, p, m)` triples with explicit closed forms.
pub const SUPPORTED: [(u32, u32, u32); 6] = [(1, 0, 1), (1, 0, 2), (2, 0, 1), (1, 1, 1), (1, 1, 2), (2, 1, 1)];

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct WSpec {
    pub l: u32,
    pub p: u32,
    pub m: u32,
    pub k: u32,
    pub r: u32,
    pub alpha: f64,
}

/// Which expansion of `1/C(n+k+r, k)` feeds the two-factor evaluators.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Route {
    Flat,
    Paired,
}

impl WSpec {
    pub fn new(l: u32, p: u32, m: u32, k: u32, r: u32, alpha: f64) -> Self {
        WSpec { l, p, m, k, r, alpha }
    }

    pub fn describe(&self) -> String {
        format!(
            "wsum l={} p={} m={} k={} r={} alpha={}",
            self.l, self.p, self.m, self.k, self.r, self.alpha
        )
    }

    pub fn validate(&self) -> Result<()> {
        let triple = (self.l, self.p, self.m);
        if !SUPPORTED.contains(&triple) {
            let list: Vec<String> = SUPPORTED.iter().map(|t| format!("{t:?}")).collect();
            return Err(Error::Unsupported(format!(
                "(l, p, m) = {triple:?}; supported triples are {}",
                list.join(", ")
            )));
        }
        if !self.alpha.is_finite() {
            return Err(Error::domain("alpha must be finite"));
        }
        let (k, r, a) = (self.k, self.r, self.alpha);
        if self.p == 0 {
            if k < 2 {
                return Err(Error::domain(format!("p = 0 needs k >= 2, got k = {k}")));
            }
            if !(a > (k + r) as f64) {
                return Err(Error::domain(format!("need alpha > k + r = {}, got {a}", k + r)));
            }
        } else {
            if r != 0 {
                return Err(Error::domain(format!("p = 1 needs r = 0, got r = {r}")));
            }
            if k < 1 {
                return Err(Error::domain("p = 1 needs k >= 1"));
            }
            if !(a > k as f64) {
                return Err(Error::domain(format!("need alpha > k = {k}, got {a}")));
            }
        }
        Ok(())
    }

    fn family(&self) -> Family {
        match (self.l, self.m) {
            (1, 1) => Family::Linear,
            (1, 2) => Family::Order2,
            _ => Family::Square,
        }
    }

    /// `sum f(H_{n+alpha}) / ((n+a)(n+b))` for the numerator of this sum.
    fn pair(&self, a: u32, b: u32) -> Result<f64> {
        TwoFactorSpec::new(self.family(), self.alpha, a, b).evaluate(DomainMode::Strict)
    }

    pub fn decay(&self) -> DecayClass {
        let degree = if self.m == 1 { self.l } else { 0 };
        power_log((self.k + self.p) as f64, degree)
    }

    /// Direct summation of the defining series.
    pub fn oracle(&self, target: f64, config: &OracleConfig) -> Result<OracleEstimate> {
        self.validate()?;
        self.series_oracle(target, config)
    }

    /// Direct summation without the closed-form hypotheses: any `l`, `p`,
    /// `m <= 4` and any shift with finite terms.
    pub fn series_oracle(&self, target: f64, config: &OracleConfig) -> Result<OracleEstimate> {
        if self.k + self.p < 2 {
            return Err(Error::domain("the series needs k + p >= 2 to converge"));
        }
        if !(1..=4).contains(&self.m) {
            return Err(Error::domain(format!("harmonic order must lie in 1..=4, got {}", self.m)));
        }
        let (l, p, m, k, r) = (self.l as i32, self.p as i32, self.m as usize, self.k, self.r);
        let mut s = HarmonicSeries::new(self.alpha, self.m, self.decay(), move |n, h| {
            let nf = n as f64;
            let mut inv_binom = 1.0;
            for i in 1..=k {
                inv_binom *= i as f64 / (nf + (r + i) as f64);
            }
            h[m].powi(l) * inv_binom / nf.powi(p)
        })?;
        sum_series_with(&mut s, target, config)
    }
}

/// How the pieces of a [`PartialFractionDecomp`] depend on `n`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum DecompForm {
    /// `weight / (n+r+j)`
    Flat,
    /// `weight / ((n+r+1)(n+r+1+j))`
    Paired,
}

#[derive(Debug, Clone, PartialEq)]
pub struct PartialFractionDecomp {
    pub form: DecompForm,
    pub k: u32,
    pub r: u32,
    pub coefficients: Vec<(u32, Rational)>,
}

impl PartialFractionDecomp {
    /// Value of the expansion at `n`.
    pub fn eval(&self, n: u32) -> Rational {
        let base = BigInt::from(n + self.r);
        let mut total = Rational::zero();
        for (j, w) in &self.coefficients {
            let den = match self.form {
                DecompForm::Flat => base.clone() + j,
                DecompForm::Paired => (base.clone() + 1u32) * (base.clone() + 1u32 + j),
            };
            total += w / Rational::from_integer(den);
        }
        total
    }

    /// Whether the expansion equals `1/C(n+k+r, k)` for `n = 1..=n_max`.
    pub fn reconstructs(&self, n_max: u32) -> bool {
        (1..=n_max).all(|n| self.eval(n) == inverse_binomial(n + self.k + self.r, self.k))
    }
}

/// `1 / C(n, k)` as an exact rational.
pub fn inverse_binomial(n: u32, k: u32) -> Rational {
    Rational::new(BigInt::one(), binomial(BigInt::from(n), BigInt::from(k)))
}

fn signed(j: u32, magnitude: BigInt) -> Rational {
    let w = Rational::from_integer(magnitude);
    if j % 2 == 1 {
        w
    } else {
        -w
    }
}

/// `1/C(n+k+r, k) = sum_{j=1}^k (-1)^{j+1} j C(k, j) / (n+r+j)`.
pub fn binom_decomp_flat(k: u32, r: u32) -> Result<PartialFractionDecomp> {
    if k < 1 {
        return Err(Error::domain("k must be at least 1"));
    }
    let coefficients = (1..=k)
        .map(|j| (j, signed(j, BigInt::from(j) * binomial(BigInt::from(k), BigInt::from(j)))))
        .collect();
    Ok(PartialFractionDecomp {
        form: DecompForm::Flat,
        k,
        r,
        coefficients,
    })
}

/// `1/C(n+k+r, k) = sum_{j=1}^{k-1} (-1)^{j+1} k j C(k-1, j) / ((n+r+1)(n+r+1+j))`.
pub fn binom_decomp_paired(k: u32, r: u32) -> Result<PartialFractionDecomp> {
    if k < 2 {
        return Err(Error::Unsupported(format!("paired expansion needs k >= 2, got k = {k}")));
    }
    let coefficients = (1..k)
        .map(|j| {
            let mag = BigInt::from(k) * BigInt::from(j) * binomial(BigInt::from(k - 1), BigInt::from(j));
            (j, signed(j, mag))
        })
        .collect();
    Ok(PartialFractionDecomp {
        form: DecompForm::Paired,
        k,
        r,
        coefficients,
    })
}

fn to_f64(q: &Rational) -> f64 {
    use num_traits::ToPrimitive;
    q.to_f64().unwrap_or(f64::NAN)
}

/// Closed form of the sum by the route its formula is stated with: paired
/// for `p = 0`, flat for `p = 1`.
pub fn w_sum(spec: WSpec) -> Result<f64> {
    let route = if spec.p == 0 { Route::Paired } else { Route::Flat };
    w_sum_via(spec, route)
}

pub fn w_sum_via(spec: WSpec, route: Route) -> Result<f64> {
    spec.validate()?;
    let (k, r) = (spec.k, spec.r);
    let mut total = 0.0;
    match (spec.p, route) {
        (0, Route::Paired) => {
            for (j, w) in binom_decomp_paired(k, r)?.coefficients {
                total += to_f64(&w) * spec.pair(r + 1, r + 1 + j)?;
            }
        }
        (0, Route::Flat) => {
            // the weights sum to zero, so each simple pole is paired with the last one
            for (j, w) in binom_decomp_flat(k, r)?.coefficients {
                if j < k {
                    total += to_f64(&w) * (k - j) as f64 * spec.pair(r + j, r + k)?;
                }
            }
        }
        (_, Route::Flat) => {
            for (j, w) in binom_decomp_flat(k, 0)?.coefficients {
                total += to_f64(&w) * spec.pair(0, j)?;
            }
        }
        (_, Route::Paired) => {
            if k == 1 {
                return spec.pair(0, 1);
            }
            // 1/(n(n+1)(n+1+j)) = (1/(n(n+1)) - 1/(n(n+1+j))) / j
            let first = spec.pair(0, 1)?;
            for (j, w) in binom_decomp_paired(k, 0)?.coefficients {
                total += to_f64(&w) / j as f64 * (first - spec.pair(0, 1 + j)?);
            }
        }
    }
    Ok(total)
}

/// `sum_{n>=1} H_n^2 / C(n+k, k) = k/(k-1) (zeta(2) - H^{(2)}_{k-1} + 2/(k-1)^2)`.
pub fn classical_square_sum(k: u32) -> Result<f64> {
    if k < 2 {
        return Err(Error::domain(format!("k must be at least 2, got {k}")));
    }
    let km1 = (k - 1) as f64;
    let h2 = to_f64(&classical_harmonic((k - 1) as u64, 2));
    Ok(k as f64 / km1 * (zeta_int(2) - h2 + 2.0 / (km1 * km1)))
}

/// Direct summation of `sum H_n^2 / C(n+k, k)`.
pub fn classical_square_oracle(k: u32, target: f64, config: &OracleConfig) -> Result<OracleEstimate> {
    if k < 2 {
        return Err(Error::domain(format!("k must be at least 2, got {k}")));
    }
    let mut s = HarmonicSeries::new(0.0, 1, power_log(k as f64, 2), move |n, h| {
        let nf = n as f64;
        let mut inv_binom = 1.0;
        for i in 1..=k {
            inv_binom *= i as f64 / (nf + i as f64);
        }
        h[1] * h[1] * inv_binom
    })?;
    sum_series_with(&mut s, target, config)
}

fn negative_integer(x: f64) -> bool {
    x < 0.0 && x == x.floor()
}

fn sign(e: u32) -> f64 {
    if e % 2 == 0 {
        1.0
    } else {
        -1.0
    }
}

/// Accuracy requested for each of the series in [`polylog_symmetry_check`].
const SYMMETRY_TARGET: f64 = 1e-10;

/// `sum_{n>=1} 1 / ((n+x)^a (n+y)^b)`.
fn double_power_sum(x: f64, a: u32, y: f64, b: u32, config: &OracleConfig) -> Result<OracleEstimate> {
    let mut s = FnSeries::new(power_log((a + b) as f64, 0), move |n| {
        let n = n as f64;
        1.0 / ((n + x).powi(a as i32) * (n + y).powi(b as i32))
    });
    sum_series_with(&mut s, SYMMETRY_TARGET, config)
}

/// `sum_{n>=1} H_{n+r} / ((n+x)^a (n+y)^b)`.
fn harmonic_power_sum(r: f64, x: f64, a: u32, y: f64, b: u32, config: &OracleConfig) -> Result<OracleEstimate> {
    let mut s = HarmonicSeries::new(r, 1, power_log((a + b) as f64, 1), move |n, h| {
        let n = n as f64;
        h[1] / ((n + x).powi(a as i32) * (n + y).powi(b as i32))
    })?;
    sum_series_with(&mut s, SYMMETRY_TARGET, config)
}

/// Difference of the two sides of the symmetry relation between
/// `sum H_{n+r} / ((n+alpha)^p (n+r-beta)^m)` and the same sum with
/// `(alpha, p)` and `(beta, m)` exchanged. Every series is summed directly.
/// The returned bound collects the error bounds of all series involved.
pub fn polylog_symmetry_check(
    p: u32,
    m: u32,
    r: f64,
    alpha: f64,
    beta: f64,
    config: &OracleConfig,
) -> Result<OracleEstimate> {
    if p < 2 || m < 2 {
        return Err(Error::domain(format!("need p, m >= 2, got p = {p}, m = {m}")));
    }
    if !(r > 0.0) {
        return Err(Error::domain(format!("need r > 0, got {r}")));
    }
    for (name, x) in [("alpha", alpha), ("beta", beta), ("r - alpha", r - alpha), ("r - beta", r - beta)] {
        if !x.is_finite() || negative_integer(x) {
            return Err(Error::pole(format!("{name} = {x} makes a denominator vanish")));
        }
    }
    let mut value = 0.0;
    let mut bound = 0.0;
    let mut terms = 0;
    let mut add = |coef: f64, est: OracleEstimate| {
        value += coef * est.value;
        bound += coef.abs() * est.error_bound;
        terms += est.terms_used;
    };
    let sm = sign(m - 1);
    let sp = sign(p - 1);
    let h_alpha = harmonic_value(alpha, 1)?;
    let h_beta = harmonic_value(beta, 1)?;

    add(sm, harmonic_power_sum(r, alpha, p, r - beta, m, config)?);
    add(-sp, harmonic_power_sum(r, beta, m, r - alpha, p, config)?);
    add(-sm * h_beta, double_power_sum(alpha, p, r - beta, m, config)?);
    add(sp * h_alpha, double_power_sum(beta, m, r - alpha, p, config)?);
    for i in 1..p {
        let z = hurwitz_zeta_int(p + 1 - i, alpha + 1.0)?;
        add(-sign(i - 1) * z, double_power_sum(beta, m, r - alpha, i, config)?);
    }
    for i in 1..m {
        let z = hurwitz_zeta_int(m + 1 - i, beta + 1.0)?;
        add(sign(i - 1) * z, double_power_sum(alpha, p, r - beta, i, config)?);
    }
    Ok(OracleEstimate {
        value,
        error_bound: bound,
        terms_used: terms,
    })
}

/// Numeric residual of the symmetry relation, expected to vanish.
pub fn polylog_symmetry_residual(p: u32, m: u32, r: f64, alpha: f64, beta: f64) -> Result<f64> {
    Ok(polylog_symmetry_check(p, m, r, alpha, beta, &OracleConfig::default())?.value)
}

/// `sum_{n>=1} H_{n+2alpha} / (n+alpha)^{p+m}` for `p + m` odd.
///
/// The value depends on `p + m` only; the split is kept because the formula
/// is written in terms of it.
pub fn euler_shifted_sum(alpha: f64, p: u32, m: u32) -> Result<f64> {
    if p < 1 || m < 1 {
        return Err(Error::domain(format!("need p, m >= 1, got p = {p}, m = {m}")));
    }
    if (p + m) % 2 == 0 {
        return Err(Error::Parity(format!(
            "p + m = {} is even and the relation degenerates to 0 = 0",
            p + m
        )));
    }
    if !(alpha > 0.0) || !alpha.is_finite() {
        return Err(Error::domain(format!("need alpha > 0, got {alpha}")));
    }
    let z = |s: u32| hurwitz_zeta_int(s, alpha + 1.0);
    let c = sign(m - 1) - sign(p - 1);
    let mut bracket = 0.0;
    for i in 1..p {
        bracket += sign(i - 1) * z(p + 1 - i)? * z(m + i)?;
    }
    for i in 1..m {
        bracket -= sign(i - 1) * z(m + 1 - i)? * z(p + i)?;
    }
    Ok(harmonic_value(alpha, 1)? * z(p + m)? + bracket / c)
}

/// [`euler_shifted_sum`] at odd weight `w >= 3`.
pub fn euler_shifted_weight(alpha: f64, weight: u32) -> Result<f64> {
    if weight < 3 || weight % 2 == 0 {
        return Err(Error::Parity(format!("weight must be odd and at least 3, got {weight}")));
    }
    euler_shifted_sum(alpha, 1, weight - 1)
}

/// Direct summation of `sum H_{n+2alpha} / (n+alpha)^w`.
pub fn euler_shifted_oracle(alpha: f64, weight: u32, target: f64, config: &OracleConfig) -> Result<OracleEstimate> {
    if !(alpha > 0.0) || !alpha.is_finite() {
        return Err(Error::domain(format!("need alpha > 0, got {alpha}")));
    }
    if weight < 2 {
        return Err(Error::domain(format!("weight must be at least 2, got {weight}")));
    }
    let mut s = HarmonicSeries::new(2.0 * alpha, 1, power_log(weight as f64, 1), move |n, h| {
        h[1] / (n as f64 + alpha).powi(weight as i32)
    })?;
    sum_series_with(&mut s, target, config)
}
