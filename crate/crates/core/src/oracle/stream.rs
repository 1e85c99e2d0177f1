//! Shifted harmonic numbers computed without the special-function kernel.

use super::{CompensatedSum, OracleEstimate};
use crate::error::{Error, Result};

const HEAD_TERMS: u64 = 2000;

/// `H^{(m)}_beta = sum_{k>=1} (k^{-m} - (k+beta)^{-m})` summed directly over
/// a head of a few thousand terms, with the remainder from Euler-Maclaurin.
pub fn direct_shifted_harmonic(beta: f64, m: u32) -> Result<OracleEstimate> {
    if m == 0 {
        return Err(Error::domain("harmonic order must be at least 1"));
    }
    if !beta.is_finite() {
        return Err(Error::domain("shift must be finite"));
    }
    if beta < 0.0 && beta == beta.round() {
        return Err(Error::pole(format!("H_{beta} has a pole at a negative integer")));
    }
    let k_max = HEAD_TERMS.max((40.0 * beta.abs()).ceil() as u64);
    let mf = m as f64;
    let mut acc = CompensatedSum::default();
    let mut abs_sum = 0.0;
    for k in 1..=k_max {
        let kf = k as f64;
        let t = kf.powi(-(m as i32)) - (kf + beta).powi(-(m as i32));
        acc.add(t);
        abs_sum += t.abs();
    }
    let kf = k_max as f64;
    let kb = kf + beta;
    // f(x) = x^{-m} - (x+beta)^{-m}; f^(j) = (-1)^j (m)_j [x^{-m-j} - (x+beta)^{-m-j}]
    let deriv = |j: u32| -> f64 {
        let mut rising = 1.0;
        for q in 0..j {
            rising *= mf + q as f64;
        }
        let sign = if j % 2 == 0 { 1.0 } else { -1.0 };
        sign * rising * (kf.powf(-mf - j as f64) - kb.powf(-mf - j as f64))
    };
    let integral = if m == 1 {
        (beta / kf).ln_1p()
    } else {
        (kf.powf(1.0 - mf) - kb.powf(1.0 - mf)) / (mf - 1.0)
    };
    let tail = integral - 0.5 * deriv(0) - deriv(1) / 12.0 + deriv(3) / 720.0 - deriv(5) / 30240.0;
    acc.add(tail);
    let truncation = deriv(7).abs() / 1_209_600.0;
    Ok(OracleEstimate {
        value: acc.value(),
        error_bound: truncation + 8.0 * f64::EPSILON * (abs_sum + tail.abs()),
        terms_used: k_max,
    })
}

/// Running values of `H^{(m)}_{n+beta}` for `m = 1..=4` as `n` advances.
///
/// Index `m` of [`HarmonicStream::values`] holds order `m`; index 0 is unused.
#[derive(Debug, Clone)]
pub struct HarmonicStream {
    beta: f64,
    n: u64,
    orders: usize,
    sums: [CompensatedSum; 5],
    values: [f64; 5],
}

pub const STREAM_MAX_ORDER: u32 = 4;

impl HarmonicStream {
    /// Seeds the stream at `n = 0`, i.e. with `H^{(m)}_beta`.
    pub fn new(beta: f64, max_order: u32) -> Result<Self> {
        if max_order == 0 || max_order > STREAM_MAX_ORDER {
            return Err(Error::domain(format!(
                "stream order must be in 1..={STREAM_MAX_ORDER}, got {max_order}"
            )));
        }
        let mut sums = [CompensatedSum::default(); 5];
        let mut values = [0.0; 5];
        for m in 1..=max_order as usize {
            let seed = direct_shifted_harmonic(beta, m as u32)?.value;
            sums[m] = CompensatedSum::new(seed);
            values[m] = seed;
        }
        Ok(HarmonicStream {
            beta,
            n: 0,
            orders: max_order as usize,
            sums,
            values,
        })
    }

    pub fn index(&self) -> u64 {
        self.n
    }

    pub fn values(&self) -> &[f64; 5] {
        &self.values
    }

    /// Moves from `H_{n-1+beta}` to `H_{n+beta}`.
    pub fn advance(&mut self) -> &[f64; 5] {
        self.n += 1;
        let x = self.n as f64 + self.beta;
        let inv = 1.0 / x;
        let mut p = 1.0;
        for m in 1..=self.orders {
            p *= inv;
            self.sums[m].add(p);
            self.values[m] = self.sums[m].value();
        }
        &self.values
    }
}
