//! Closed forms for `sum_{n>=1} f(H_{n+alpha}) / ((n+r)(n+k))`.
//!
//! Every two-factor evaluator is assembled from a one-factor "base" sum
//! `sum f/((n+k)(n+alpha))` through [`lemma_split`], or from the single-brace
//! forms obtained after the inner sums cancel. Harmonic numbers are fetched
//! through [`harmonic_value`], so integer and half-integer shifts use the
//! exact route.
//!
//! Hypotheses are enforced by default. [`DomainMode::Unchecked`] evaluates
//! the formulas anyway; poles of the formulas themselves are still reported.

use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::harmonic::{harmonic_complement, harmonic_value, shift_difference};
use crate::oracle::series::{power_log, HarmonicSeries};
use crate::oracle::{sum_series_with, DecayClass, FnSeries, OracleConfig, OracleEstimate};
use crate::special_fn::riemann_zeta;

/// Distance below which `alpha` counts as sitting on an excluded point.
pub const EXCLUSION_TOL: f64 = 1e-9;

/// Accuracy requested from the oracle for the numeric inner sum of
/// [`order2_base`].
const INNER_SUM_TARGET: f64 = 1e-13;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Default, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum DomainMode {
    #[default]
    Strict,
    Unchecked,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum Family {
    /// `H_{n+a} / ((n+r)(n+k))`
    Linear,
    /// `H_{n+a} / ((n+k)(n+a))`
    LinearBase,
    /// `H_{n+a-m} / ((n+r)(n+k))`
    LinearShift,
    /// `H^(2)_{n+a} / ((n+k)(n+a))`
    Order2Base,
    /// `H^(2)_{n+a} / ((n+r)(n+k))`
    Order2,
    /// `H^(2)_{n+a-m} / ((n+r)(n+k))`
    Order2Shift,
    /// `(H^2 + H^(2))_{n+a} / ((n+r)(n+k))`
    SqPlusO2,
    /// `(H^3 + 3 H H^(2) + 2 H^(3))_{n+a} / ((n+r)(n+k))`
    CubicCombo,
    /// `H^2_{n+a} / ((n+r)(n+k))`
    Square,
    /// `H^(3)_{n+a} / ((n+r)(n+k))`
    Order3,
    /// `(H_{n+a-r} - H_{n+a-k}) / n^p`
    WeightedTail,
}

impl Family {
    pub const ALL: [Family; 11] = [
        Family::Linear,
        Family::LinearBase,
        Family::LinearShift,
        Family::Order2Base,
        Family::Order2,
        Family::Order2Shift,
        Family::SqPlusO2,
        Family::CubicCombo,
        Family::Square,
        Family::Order3,
        Family::WeightedTail,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Family::Linear => "linear",
            Family::LinearBase => "linear-base",
            Family::LinearShift => "linear-shift",
            Family::Order2Base => "order2-base",
            Family::Order2 => "order2",
            Family::Order2Shift => "order2-shift",
            Family::SqPlusO2 => "sq-plus-o2",
            Family::CubicCombo => "cubic-combo",
            Family::Square => "square",
            Family::Order3 => "order3",
            Family::WeightedTail => "weighted-tail",
        }
    }

    pub fn uses_shift(self) -> bool {
        matches!(self, Family::LinearShift | Family::Order2Shift)
    }

    /// Families stated only for `alpha > k > r`.
    pub fn ordered(self) -> bool {
        matches!(
            self,
            Family::Order2
                | Family::Order2Shift
                | Family::SqPlusO2
                | Family::CubicCombo
                | Family::Square
                | Family::Order3
        )
    }

    /// Base families, which have no `r`.
    pub fn single_parameter(self) -> bool {
        matches!(self, Family::LinearBase | Family::Order2Base)
    }
}

impl fmt::Display for Family {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Family {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        Family::ALL
            .iter()
            .copied()
            .find(|f| f.name() == s)
            .ok_or_else(|| {
                let names: Vec<&str> = Family::ALL.iter().map(|f| f.name()).collect();
                Error::Parse(format!("unknown family '{s}', expected one of {}", names.join(", ")))
            })
    }
}

/// One instance of a two-factor sum.
///
/// `m` is read only by the shift families and `p` only by
/// [`Family::WeightedTail`]; `r` is ignored by the base families.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct TwoFactorSpec {
    pub family: Family,
    pub alpha: f64,
    pub r: u32,
    pub k: u32,
    pub m: u32,
    pub p: u32,
}

impl TwoFactorSpec {
    pub fn new(family: Family, alpha: f64, r: u32, k: u32) -> Self {
        TwoFactorSpec {
            family,
            alpha,
            r,
            k,
            m: 0,
            p: 2,
        }
    }

    pub fn with_shift(mut self, m: u32) -> Self {
        self.m = m;
        self
    }

    pub fn with_power(mut self, p: u32) -> Self {
        self.p = p;
        self
    }

    pub fn describe(&self) -> String {
        let mut s = format!("{} alpha={}", self.family, self.alpha);
        if !self.family.single_parameter() {
            s.push_str(&format!(" r={}", self.r));
        }
        s.push_str(&format!(" k={}", self.k));
        if self.family.uses_shift() {
            s.push_str(&format!(" m={}", self.m));
        }
        if self.family == Family::WeightedTail {
            s.push_str(&format!(" p={}", self.p));
        }
        s
    }

    /// Checks the hypotheses of the family. In unchecked mode only the
    /// conditions without which the formula cannot be written down remain.
    pub fn validate(&self, mode: DomainMode) -> Result<()> {
        let a = self.alpha;
        if !a.is_finite() {
            return Err(Error::domain("alpha must be finite"));
        }
        let (r, k) = (self.r, self.k);
        if !self.family.single_parameter() && r == k {
            return Err(Error::domain(format!("r and k must differ, both are {k}")));
        }
        if self.family == Family::WeightedTail {
            if self.p < 2 {
                return Err(Error::domain(format!("weighted tail needs p >= 2, got {}", self.p)));
            }
            if r > k {
                return Err(Error::domain(format!("weighted tail needs r < k, got r = {r}, k = {k}")));
            }
        }
        if self.family.uses_shift() {
            check_exclusions(a, self.m, r, k)?;
        }
        if mode == DomainMode::Unchecked {
            return Ok(());
        }
        if self.family.single_parameter() {
            if !(a > k as f64) {
                return Err(Error::domain(format!("need alpha > k = {k}, got alpha = {a}")));
            }
        } else if self.family == Family::WeightedTail {
            // every harmonic number in the closed form is finite once alpha >= k
            if !(k > r) || !(a >= k as f64) {
                return Err(Error::domain(format!(
                    "need alpha >= k > r, got alpha = {a}, r = {r}, k = {k}"
                )));
            }
        } else if self.family.ordered() {
            if !(k > r) {
                return Err(Error::domain(format!(
                    "{} is stated for k > r, got r = {r}, k = {k}",
                    self.family
                )));
            }
            if !(a > k as f64) {
                return Err(Error::domain(format!("need alpha > k > r, got alpha = {a}, k = {k}")));
            }
        } else if !(a > k.max(r) as f64) {
            return Err(Error::domain(format!(
                "need alpha > max(k, r) = {}, got alpha = {a}",
                k.max(r)
            )));
        }
        if self.family.uses_shift() {
            let shifted = a - self.m as f64;
            if shifted < 0.0 && shifted == shifted.round() {
                return Err(Error::domain(format!(
                    "alpha - m = {shifted} is a negative integer"
                )));
            }
        }
        Ok(())
    }

    /// Closed-form value.
    pub fn evaluate(&self, mode: DomainMode) -> Result<f64> {
        self.validate(mode)?;
        let (a, r, k, m) = (self.alpha, self.r, self.k, self.m);
        let v = match self.family {
            Family::Linear => linear_raw(a, r, k)?,
            Family::LinearBase => base_sum(a, k, y_combo, |x| h(x, 1))?,
            Family::LinearShift => linear_shift_raw(a, m, r, k)?,
            Family::Order2Base => order2_base_raw(a, k)?,
            Family::Order2 => order2_raw(a, r, k)?,
            Family::Order2Shift => order2_shift_raw(a, m, r, k)?,
            Family::SqPlusO2 => split(a, r, k, |kk| base_sum(a, kk, x_combo, y_combo))?,
            Family::CubicCombo => split(a, r, k, |kk| base_sum(a, kk, q_combo, x_combo))?,
            Family::Square => square_raw(a, r, k)?,
            Family::Order3 => order3_raw(a, r, k)?,
            Family::WeightedTail => weighted_tail_raw(a, r, k, self.p)?,
        };
        finite(v, self)
    }

    /// Asymptotic decay of the summand.
    pub fn decay(&self) -> DecayClass {
        match self.family {
            Family::Linear | Family::LinearBase | Family::LinearShift => power_log(2.0, 1),
            Family::Order2Base | Family::Order2 | Family::Order2Shift | Family::Order3 => {
                power_log(2.0, 0)
            }
            Family::SqPlusO2 | Family::Square => power_log(2.0, 2),
            Family::CubicCombo => power_log(2.0, 3),
            Family::WeightedTail => power_log(self.p as f64 + 1.0, 0),
        }
    }

    /// Direct summation of the defining series.
    pub fn oracle(&self, target: f64, config: &OracleConfig) -> Result<OracleEstimate> {
        let (a, r, k) = (self.alpha, self.r as f64, self.k as f64);
        let decay = self.decay();
        match self.family {
            Family::WeightedTail => {
                let (ri, ki, p) = (self.r, self.k, self.p as i32);
                let mut s = FnSeries::new(decay, move |n| {
                    let n = n as f64;
                    let mut d = 0.0;
                    for j in (1..=(ki.saturating_sub(ri))).rev() {
                        d += 1.0 / (n + a - ki as f64 + j as f64);
                    }
                    d / n.powi(p)
                });
                sum_series_with(&mut s, target, config)
            }
            Family::LinearBase | Family::Order2Base => {
                let order = if self.family == Family::LinearBase { 1 } else { 2 };
                let mut s = HarmonicSeries::new(a, order, decay, move |n, hv| {
                    let n = n as f64;
                    hv[order as usize] / ((n + k) * (n + a))
                })?;
                sum_series_with(&mut s, target, config)
            }
            fam => {
                let beta = if fam.uses_shift() { a - self.m as f64 } else { a };
                let numerator: fn(&[f64; 5]) -> f64 = match fam {
                    Family::Linear | Family::LinearShift => |h| h[1],
                    Family::Order2 | Family::Order2Shift => |h| h[2],
                    Family::SqPlusO2 => |h| h[1] * h[1] + h[2],
                    Family::CubicCombo => |h| h[1] * h[1] * h[1] + 3.0 * h[1] * h[2] + 2.0 * h[3],
                    Family::Square => |h| h[1] * h[1],
                    Family::Order3 => |h| h[3],
                    _ => unreachable!("handled above"),
                };
                let mut s = HarmonicSeries::new(beta, 3, decay, move |n, hv| {
                    let n = n as f64;
                    numerator(hv) / ((n + r) * (n + k))
                })?;
                sum_series_with(&mut s, target, config)
            }
        }
    }
}

fn finite(v: f64, spec: &TwoFactorSpec) -> Result<f64> {
    if v.is_finite() {
        Ok(v)
    } else {
        Err(Error::domain(format!("formula is singular at {}", spec.describe())))
    }
}

fn check_exclusions(alpha: f64, m: u32, r: u32, k: u32) -> Result<()> {
    for j in 1..=m {
        for (label, idx) in [("r", r), ("k", k)] {
            let point = (m + idx) as f64 - j as f64;
            if (alpha - point).abs() <= EXCLUSION_TOL {
                return Err(Error::Exclusion {
                    alpha,
                    j,
                    constraint: format!("m + {label} - j = {point}"),
                });
            }
        }
    }
    Ok(())
}

fn h(x: f64, m: u32) -> Result<f64> {
    harmonic_value(x, m)
}

fn zeta(s: u32) -> f64 {
    riemann_zeta(s as f64).expect("zeta at an integer >= 2")
}

/// `H^2 + H^(2)`
fn y_combo(x: f64) -> Result<f64> {
    let h1 = h(x, 1)?;
    Ok(h1 * h1 + h(x, 2)?)
}

/// `H^3 + 3 H H^(2) + 2 H^(3)`
fn x_combo(x: f64) -> Result<f64> {
    let (h1, h2, h3) = (h(x, 1)?, h(x, 2)?, h(x, 3)?);
    Ok(h1 * h1 * h1 + 3.0 * h1 * h2 + 2.0 * h3)
}

/// `H^4 + 6 H^2 H^(2) + 8 H H^(3) + 3 (H^(2))^2 + 6 H^(4)`
fn q_combo(x: f64) -> Result<f64> {
    let (h1, h2, h3, h4) = (h(x, 1)?, h(x, 2)?, h(x, 3)?, h(x, 4)?);
    Ok(h1.powi(4) + 6.0 * h1 * h1 * h2 + 8.0 * h1 * h3 + 3.0 * h2 * h2 + 6.0 * h4)
}

/// `top(a-k)/(a-k) - sum_{j=1}^k inner(a+j-k) / (j (a+j-k))`
fn base_sum(
    a: f64,
    k: u32,
    top: impl Fn(f64) -> Result<f64>,
    inner: impl Fn(f64) -> Result<f64>,
) -> Result<f64> {
    let b = a - k as f64;
    let mut v = top(b)? / b;
    v -= tail_sum(a, k, |x| inner(x))?;
    Ok(v)
}

/// `sum_{j=1}^k g(a+j-k) / (j (a+j-k))`
fn tail_sum(a: f64, k: u32, g: impl Fn(f64) -> Result<f64>) -> Result<f64> {
    let mut s = 0.0;
    for j in 1..=k {
        let x = a + j as f64 - k as f64;
        s += g(x)? / (j as f64 * x);
    }
    Ok(s)
}

/// `sum_{j=1}^{k-r} g(a+j-k) / (a+j-k)^q`
fn gap_sum(a: f64, r: u32, k: u32, q: i32, g: impl Fn(f64) -> Result<f64>) -> Result<f64> {
    let mut s = 0.0;
    for j in 1..=k.saturating_sub(r) {
        let x = a + j as f64 - k as f64;
        s += g(x)? / x.powi(q);
    }
    Ok(s)
}

fn split(a: f64, r: u32, k: u32, base: impl Fn(u32) -> Result<f64>) -> Result<f64> {
    lemma_split(a, r, k, (base(k)?, base(r)?))
}

/// Combines the one-factor sums `base_k = sum f/((n+k)(n+a))` and
/// `base_r = sum f/((n+r)(n+a))` into `sum f/((n+r)(n+k))`.
pub fn lemma_split(alpha: f64, r: u32, k: u32, base_values: (f64, f64)) -> Result<f64> {
    if r == k {
        return Err(Error::domain(format!("r and k must differ, both are {k}")));
    }
    let (base_k, base_r) = base_values;
    let d = k as f64 - r as f64;
    Ok((k as f64 - alpha) / d * base_k + (alpha - r as f64) / d * base_r)
}

fn linear_raw(a: f64, r: u32, k: u32) -> Result<f64> {
    split(a, r, k, |kk| base_sum(a, kk, y_combo, |x| h(x, 1)))
}

fn linear_shift_raw(a: f64, m: u32, r: u32, k: u32) -> Result<f64> {
    let mut corr = 0.0;
    let (hr, hk) = (h(r as f64, 1)?, h(k as f64, 1)?);
    for j in 1..=m {
        let x = a + j as f64 - m as f64;
        let hx = h(x, 1)?;
        corr += (hx - hr) / (x - r as f64) - (hx - hk) / (x - k as f64);
    }
    Ok(linear_raw(a, r, k)? - corr / (k as f64 - r as f64))
}

/// `sum_{n>=1} H_{n+beta} / n^2`. Closed for integer `beta >= 0`; otherwise
/// summed by the oracle.
fn inner_square_sum(beta: f64) -> Result<f64> {
    if beta >= 0.0 && beta == beta.round() && beta <= 10_000.0 {
        let b = beta as u32;
        let mut s = 2.0 * zeta(3) + zeta(2) * h(beta, 1)?;
        for j in (1..=b).rev() {
            s -= h(j as f64, 1)? / (j as f64 * j as f64);
        }
        return Ok(s);
    }
    let mut series = HarmonicSeries::new(beta, 1, power_log(2.0, 1), |n, hv| {
        hv[1] / (n as f64 * n as f64)
    })?;
    Ok(sum_series_with(&mut series, INNER_SUM_TARGET, &OracleConfig::default())?.value)
}

fn order2_base_raw(a: f64, k: u32) -> Result<f64> {
    let b = a - k as f64;
    let s = inner_square_sum(b)?;
    let mut v = s / b - 2.0 * harmonic_complement(b, 3)? / b - 2.0 * harmonic_complement(b, 2)? * h(b, 1)? / b;
    v -= tail_sum(a, k, |x| h(x, 2))?;
    Ok(v)
}

fn order2_raw(a: f64, r: u32, k: u32) -> Result<f64> {
    let (ar, ak) = (a - r as f64, a - k as f64);
    let z2 = zeta(2);
    let mut t = (r as f64 - a) * tail_sum(a, r, |x| h(x, 2))?
        - (k as f64 - a) * tail_sum(a, k, |x| h(x, 2))?;
    t -= gap_sum(a, r, k, 2, |x| h(x, 1))?;
    t += 2.0 * h(ar, 3)? + h(ak, 1)? * z2 + 2.0 * h(ar, 1)? * h(ar, 2)?;
    t -= 2.0 * h(ak, 3)? + h(ar, 1)? * z2 + 2.0 * h(ak, 1)? * h(ak, 2)?;
    Ok(t / (k as f64 - r as f64))
}

fn order2_shift_raw(a: f64, m: u32, r: u32, k: u32) -> Result<f64> {
    let (hr, hk) = (h(r as f64, 1)?, h(k as f64, 1)?);
    let mut corr = 0.0;
    for j in 1..=m {
        let x = a + j as f64 - m as f64;
        let hx = h(x, 1)?;
        let c2 = harmonic_complement(x, 2)?;
        let (dr, dk) = (x - r as f64, x - k as f64);
        corr += (hx - hr) / (dr * dr) - c2 / dr - (hx - hk) / (dk * dk) + c2 / dk;
    }
    Ok(order2_raw(a, r, k)? - corr / (k as f64 - r as f64))
}

fn square_raw(a: f64, r: u32, k: u32) -> Result<f64> {
    let (ar, ak) = (a - r as f64, a - k as f64);
    let z2 = zeta(2);
    let cube_part = |x: f64| -> Result<f64> {
        let h1 = h(x, 1)?;
        Ok(h1 * h1 * h1 + h1 * h(x, 2)? + h1 * z2)
    };
    let sq = |x: f64| -> Result<f64> { Ok(h(x, 1)?.powi(2)) };
    let mut t = cube_part(ar)? - cube_part(ak)?;
    t += (r as f64 - a) * tail_sum(a, r, sq)?;
    t += gap_sum(a, r, k, 2, |x| h(x, 1))?;
    t -= (k as f64 - a) * tail_sum(a, k, sq)?;
    Ok(t / (k as f64 - r as f64))
}

fn order3_raw(a: f64, r: u32, k: u32) -> Result<f64> {
    let (ar, ak) = (a - r as f64, a - k as f64);
    let (z2, z3) = (zeta(2), zeta(3));
    let mut t = (r as f64 - a) * tail_sum(a, r, |x| h(x, 3))?
        - (k as f64 - a) * tail_sum(a, k, |x| h(x, 3))?;
    // the printed coefficient of this sum is -1/2; the series requires -1
    t -= gap_sum(a, r, k, 2, |x| h(x, 2))?;
    t -= gap_sum(a, r, k, 3, |x| h(x, 1))?;
    t += 3.0 * (h(ar, 4)? - h(ak, 4)?);
    t += (h(ak, 2)? - h(ar, 2)?) * z2 + (h(ak, 1)? - h(ar, 1)?) * z3;
    t += h(ar, 2)?.powi(2) - h(ak, 2)?.powi(2);
    t += 2.0 * (h(ar, 1)? * h(ar, 3)? - h(ak, 1)? * h(ak, 3)?);
    Ok(t / (k as f64 - r as f64))
}

fn weighted_tail_raw(a: f64, r: u32, k: u32, p: u32) -> Result<f64> {
    let mut v = 0.0;
    for i in 1..p {
        let sign = if i % 2 == 1 { 1.0 } else { -1.0 };
        v += sign * zeta(p + 1 - i) * shift_difference(a, r, k, i);
    }
    let sign = if p % 2 == 1 { 1.0 } else { -1.0 };
    v += sign * gap_sum(a, r, k, p as i32, |x| h(x, 1))?;
    Ok(v)
}

fn strict(spec: TwoFactorSpec) -> Result<f64> {
    spec.evaluate(DomainMode::Strict)
}

/// `sum H_{n+alpha} / ((n+r)(n+k))` for `alpha > max(k, r)`.
pub fn linear_sum(alpha: f64, r: u32, k: u32) -> Result<f64> {
    strict(TwoFactorSpec::new(Family::Linear, alpha, r, k))
}

/// `sum H_{n+alpha} / ((n+k)(n+alpha))` for `alpha > k`.
pub fn linear_sum_base(alpha: f64, k: u32) -> Result<f64> {
    strict(TwoFactorSpec::new(Family::LinearBase, alpha, 0, k))
}

/// `sum H_{n+alpha-m} / ((n+r)(n+k))`.
pub fn linear_sum_shift(alpha: f64, m: u32, r: u32, k: u32) -> Result<f64> {
    strict(TwoFactorSpec::new(Family::LinearShift, alpha, r, k).with_shift(m))
}

/// `sum H^(2)_{n+alpha} / ((n+k)(n+alpha))` for `alpha > k`.
///
/// Contains `sum H_{n+alpha-k} / n^2`, which is closed only for integer
/// `alpha - k`; other shifts take that inner sum from the oracle.
pub fn order2_base(alpha: f64, k: u32) -> Result<f64> {
    strict(TwoFactorSpec::new(Family::Order2Base, alpha, 0, k))
}

/// `sum H^(2)_{n+alpha} / ((n+r)(n+k))` for `alpha > k > r`.
pub fn order2_sum(alpha: f64, r: u32, k: u32) -> Result<f64> {
    strict(TwoFactorSpec::new(Family::Order2, alpha, r, k))
}

/// `sum H^(2)_{n+alpha-m} / ((n+r)(n+k))`.
pub fn order2_sum_shift(alpha: f64, m: u32, r: u32, k: u32) -> Result<f64> {
    strict(TwoFactorSpec::new(Family::Order2Shift, alpha, r, k).with_shift(m))
}

/// `sum (H^2 + H^(2))_{n+alpha} / ((n+r)(n+k))` for `alpha > k > r`.
pub fn sq_plus_o2_sum(alpha: f64, r: u32, k: u32) -> Result<f64> {
    strict(TwoFactorSpec::new(Family::SqPlusO2, alpha, r, k))
}

/// `sum (H^3 + 3 H H^(2) + 2 H^(3))_{n+alpha} / ((n+r)(n+k))`.
pub fn cubic_combo_sum(alpha: f64, r: u32, k: u32) -> Result<f64> {
    strict(TwoFactorSpec::new(Family::CubicCombo, alpha, r, k))
}

/// `sum H^2_{n+alpha} / ((n+r)(n+k))` for `alpha > k > r`.
pub fn square_sum(alpha: f64, r: u32, k: u32) -> Result<f64> {
    strict(TwoFactorSpec::new(Family::Square, alpha, r, k))
}

/// `sum H^(3)_{n+alpha} / ((n+r)(n+k))` for `alpha > k > r`.
pub fn order3_sum(alpha: f64, r: u32, k: u32) -> Result<f64> {
    strict(TwoFactorSpec::new(Family::Order3, alpha, r, k))
}

/// `sum (H_{n+alpha-r} - H_{n+alpha-k}) / n^p` for `p >= 2`, `r < k <= alpha`.
pub fn weighted_tail_sum(alpha: f64, r: u32, k: u32, p: u32) -> Result<f64> {
    strict(TwoFactorSpec::new(Family::WeightedTail, alpha, r, k).with_power(p))
}
