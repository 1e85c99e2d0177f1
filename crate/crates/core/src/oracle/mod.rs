//! Brute-force reference values for series and integrals.
//!
//! Nothing here calls the special-function kernel: harmonic numbers are
//! produced incrementally from seeds summed directly, so agreement between a
//! closed form and the oracle is a genuine two-route check.
//!
//! Series are summed with Neumaier compensation. The partial sum stops at
//! `N` terms and the remainder is modeled from the shape of the terms: for
//! `a_n ~ n^{-q} P(ln n)` the scaled terms `a_n n^q` are fitted by least
//! squares on log-spaced samples from `[N/s, N]`, with `s` growing with
//! `deg P`, against
//! `t^i (M/n)^j` (`i <= deg P`, `j < 3`), and the fitted model is summed past
//! `N` with Euler-Maclaurin. `N` starts at `10^4` and quadruples until two
//! consecutive estimates agree to a quarter of the requested error.

mod quad;
pub mod series;
mod stream;

pub use quad::integrate_01;
pub use stream::{direct_shifted_harmonic, HarmonicStream};

use nalgebra::{DMatrix, DVector};
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// Asymptotic shape of the terms, used to model the remainder.
#[derive(Debug, Clone, Copy, PartialEq)]
pub enum DecayClass {
    /// `|a_n| <= n^{-power} P(ln n)` with `deg P <= log_degree`, `power > 1`.
    PowerLog { power: f64, log_degree: u32 },
    /// `|a_{n+1}| <= ratio |a_n|` eventually, `0 < ratio < 1`.
    Geometric { ratio: f64 },
}

/// A series `sum_{n>=1} a_n`. `term` is called with `n = 1, 2, 3, ...` in
/// order, which lets implementations update running quantities.
pub trait SeriesTerm {
    fn decay(&self) -> DecayClass;
    fn term(&mut self, n: u64) -> f64;
}

/// A series given by a closure.
pub struct FnSeries<F> {
    decay: DecayClass,
    f: F,
}

impl<F: FnMut(u64) -> f64> FnSeries<F> {
    pub fn new(decay: DecayClass, f: F) -> Self {
        FnSeries { decay, f }
    }
}

impl<F: FnMut(u64) -> f64> SeriesTerm for FnSeries<F> {
    fn decay(&self) -> DecayClass {
        self.decay
    }
    fn term(&mut self, n: u64) -> f64 {
        (self.f)(n)
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct OracleEstimate {
    pub value: f64,
    pub error_bound: f64,
    pub terms_used: u64,
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct OracleConfig {
    /// Hard cap on the number of terms summed.
    pub term_budget: u64,
    pub initial_terms: u64,
}

pub const DEFAULT_TERM_BUDGET: u64 = 10_000_000;

impl Default for OracleConfig {
    fn default() -> Self {
        OracleConfig {
            term_budget: DEFAULT_TERM_BUDGET,
            initial_terms: 10_000,
        }
    }
}

/// Neumaier's variant of compensated summation.
#[derive(Debug, Clone, Copy, Default)]
pub struct CompensatedSum {
    sum: f64,
    comp: f64,
}

impl CompensatedSum {
    pub fn new(start: f64) -> Self {
        CompensatedSum { sum: start, comp: 0.0 }
    }

    pub fn add(&mut self, x: f64) {
        let t = self.sum + x;
        if self.sum.abs() >= x.abs() {
            self.comp += (self.sum - t) + x;
        } else {
            self.comp += (x - t) + self.sum;
        }
        self.sum = t;
    }

    pub fn value(&self) -> f64 {
        self.sum + self.comp
    }
}

const SAMPLES_PER_OCTAVE: f64 = 32.0;
const INVERSE_POWERS: usize = 3;
/// Relative error assumed for each sampled term.
const SAMPLE_NOISE: f64 = 16.0 * f64::EPSILON;

/// Ratio `N / lo` of the fit window. Log factors make the basis functions
/// nearly dependent on a short window, so the window widens with the degree.
fn fit_span(log_degree: u32) -> f64 {
    8.0 * 2f64.powi(log_degree.min(3) as i32)
}

pub fn sum_series<T: SeriesTerm + ?Sized>(term: &mut T, target_error: f64) -> Result<OracleEstimate> {
    sum_series_with(term, target_error, &OracleConfig::default())
}

pub fn sum_series_with<T: SeriesTerm + ?Sized>(
    term: &mut T,
    target_error: f64,
    config: &OracleConfig,
) -> Result<OracleEstimate> {
    if !(target_error > 0.0) {
        return Err(Error::domain("target error must be positive"));
    }
    match term.decay() {
        DecayClass::PowerLog { power, log_degree } => {
            if !(power > 1.0) {
                return Err(Error::domain(format!("power decay needs exponent > 1, got {power}")));
            }
            sum_power_log(term, target_error, config, power, log_degree)
        }
        DecayClass::Geometric { ratio } => {
            if !(ratio > 0.0 && ratio < 1.0) {
                return Err(Error::domain(format!("geometric ratio must lie in (0, 1), got {ratio}")));
            }
            sum_geometric(term, target_error, config, ratio)
        }
    }
}

fn sum_geometric<T: SeriesTerm + ?Sized>(
    term: &mut T,
    target_error: f64,
    config: &OracleConfig,
    ratio: f64,
) -> Result<OracleEstimate> {
    let mut acc = CompensatedSum::default();
    let mut abs_sum = 0.0;
    let mut n = 0u64;
    loop {
        n += 1;
        if n > config.term_budget {
            return Err(Error::NonConvergence(format!(
                "geometric series not settled within {} terms",
                config.term_budget
            )));
        }
        let a = term.term(n);
        if !a.is_finite() {
            return Err(Error::NonConvergence(format!("term {n} is not finite")));
        }
        acc.add(a);
        abs_sum += a.abs();
        let tail = a.abs() * ratio / (1.0 - ratio);
        if n >= 16 && tail <= target_error / 4.0 {
            let roundoff = 8.0 * f64::EPSILON * abs_sum;
            return Ok(OracleEstimate {
                value: acc.value(),
                error_bound: tail + roundoff,
                terms_used: n,
            });
        }
    }
}

struct Sampler {
    next: f64,
    points: Vec<(f64, f64)>,
}

impl Sampler {
    fn new() -> Self {
        Sampler {
            next: 8.0,
            points: Vec::new(),
        }
    }

    fn offer(&mut self, n: u64, a: f64) {
        let nf = n as f64;
        if nf >= self.next {
            self.points.push((nf, a));
            while self.next <= nf {
                self.next *= 2f64.powf(1.0 / SAMPLES_PER_OCTAVE);
            }
        }
    }
}

struct TailFit {
    tail: f64,
    /// Bound on the remainder contributed by the misfit of the model.
    misfit: f64,
}

fn sum_power_log<T: SeriesTerm + ?Sized>(
    term: &mut T,
    target_error: f64,
    config: &OracleConfig,
    power: f64,
    log_degree: u32,
) -> Result<OracleEstimate> {
    let mut acc = CompensatedSum::default();
    let mut abs_sum = 0.0;
    let mut sampler = Sampler::new();
    let mut n = 0u64;
    let mut stage = config.initial_terms.max(64);
    let mut previous: Option<f64> = None;
    loop {
        if stage > config.term_budget {
            return Err(Error::NonConvergence(format!(
                "tail estimates did not settle within the budget of {} terms",
                config.term_budget
            )));
        }
        while n < stage {
            n += 1;
            let a = term.term(n);
            if !a.is_finite() {
                return Err(Error::NonConvergence(format!("term {n} is not finite")));
            }
            acc.add(a);
            abs_sum += a.abs();
            sampler.offer(n, a);
        }
        let fit = fit_tail(&sampler.points, stage as f64, power, log_degree)?;
        let estimate = acc.value() + fit.tail;
        let roundoff = 8.0 * f64::EPSILON * (abs_sum + fit.tail.abs());
        if let Some(prev) = previous {
            let delta = (estimate - prev).abs();
            if delta <= target_error / 4.0 {
                return Ok(OracleEstimate {
                    value: estimate,
                    error_bound: 2.0 * delta + fit.misfit + roundoff,
                    terms_used: n,
                });
            }
        }
        previous = Some(estimate);
        stage = stage.saturating_mul(4);
    }
}

/// Least-squares model of `a_n n^q` on `[N/span, N]` and the sum of the model
/// over `n > N`.
fn fit_tail(points: &[(f64, f64)], big_n: f64, power: f64, log_degree: u32) -> Result<TailFit> {
    let span = fit_span(log_degree);
    let lo = big_n / span;
    let pts: Vec<(f64, f64)> = points
        .iter()
        .copied()
        .filter(|&(n, _)| n >= lo && n <= big_n)
        .collect();
    let degree = log_degree as usize;
    let ncols = (degree + 1) * INVERSE_POWERS;
    if pts.len() < 2 * ncols {
        return Err(Error::NonConvergence(format!(
            "only {} samples for a {}-term tail model",
            pts.len(),
            ncols
        )));
    }
    let center = 0.5 * (lo.ln() + big_n.ln());
    let width = 0.5 * span.ln();
    let m_scale = lo;
    let basis = |n: f64| -> Vec<f64> {
        let t = (n.ln() - center) / width;
        let mut row = Vec::with_capacity(ncols);
        for i in 0..=degree {
            for j in 0..INVERSE_POWERS {
                row.push(t.powi(i as i32) * (m_scale / n).powi(j as i32));
            }
        }
        row
    };
    let mut a = DMatrix::<f64>::zeros(pts.len(), ncols);
    let mut b = DVector::<f64>::zeros(pts.len());
    for (r, &(n, v)) in pts.iter().enumerate() {
        for (c, x) in basis(n).into_iter().enumerate() {
            a[(r, c)] = x;
        }
        b[r] = v * n.powf(power);
    }
    let svd = a.clone().svd(true, true);
    let coeff = svd
        .solve(&b, 1e-14)
        .map_err(|e| Error::NonConvergence(format!("tail fit failed: {e}")))?;
    let residual = &a * &coeff - &b;
    let misfit_scale = residual.amax();

    let ln_n = big_n.ln();
    let t_n = (ln_n - center) / width;
    let mut weights = DVector::<f64>::zeros(ncols);
    for i in 0..=degree {
        for j in 0..INVERSE_POWERS {
            let s = power + j as f64;
            weights[i * INVERSE_POWERS + j] =
                m_scale.powi(j as i32) * power_log_tail(s, i as u32, t_n, width, big_n);
        }
    }
    let tail = weights.dot(&coeff);
    // the tail is linear in the samples; propagate their rounding error
    let pinv = svd
        .pseudo_inverse(1e-14)
        .map_err(|e| Error::NonConvergence(format!("tail fit failed: {e}")))?;
    let sensitivity = pinv.transpose() * &weights;
    let noise: f64 = sensitivity.iter().zip(b.iter()).map(|(v, x)| (v * x).abs()).sum();
    // the model misfit is at most misfit_scale n^{-q} per term
    let misfit = 2.0 * misfit_scale * big_n.powf(1.0 - power) / (power - 1.0) + SAMPLE_NOISE * noise;
    Ok(TailFit { tail, misfit })
}

/// `sum_{n>N} n^{-s} t(n)^i` with `t(n) = (ln n - c)/w`, by Euler-Maclaurin
/// on `g(x) = x^{-s} t(x)^i`. `t_n` is `t(N)`.
fn power_log_tail(s: f64, i: u32, t_n: f64, w: f64, big_n: f64) -> f64 {
    // G(L) = t^i; G^(l) = i!/(i-l)! t^{i-l} / w^l
    let deriv = |l: u32| -> f64 {
        if l > i {
            return 0.0;
        }
        let mut c = 1.0;
        for q in 0..l {
            c *= (i - q) as f64;
        }
        c * t_n.powi((i - l) as i32) / w.powi(l as i32)
    };
    let mut integral = 0.0;
    for l in 0..=i {
        integral += deriv(l) / (s - 1.0).powi(l as i32 + 1);
    }
    integral *= big_n.powf(1.0 - s);
    let g = big_n.powf(-s) * deriv(0);
    let dg = big_n.powf(-s - 1.0) * (-s * deriv(0) + deriv(1));
    integral - 0.5 * g - dg / 12.0
}

#[cfg(test)]
mod tests;
