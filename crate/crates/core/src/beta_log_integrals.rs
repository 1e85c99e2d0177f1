//! Log-moment integrals `I(a, m, k) = int_0^1 x^{a-1} ln^m(x) ln^k(1-x) dx`
//! and polylogarithm moments.
//!
//! `I(a, 0, k)` comes from the pure-`k` recurrence, and the mixed entries are
//! filled row by row in `m` from the two-index recurrence. Wherever the
//! recurrence pairs `H_a^(s)` with `zeta(s)` the difference is taken directly
//! as `-zeta(s, a + 1)`.

use crate::error::{Error, Result};
use crate::harmonic::{harmonic_complement, harmonic_value};
use crate::special_fn;

/// Largest supported `m + k`.
pub const MAX_ORDER: u32 = 8;

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct LogMomentQuery {
    pub alpha: f64,
    pub m: u32,
    pub k: u32,
}

impl LogMomentQuery {
    pub fn new(alpha: f64, m: u32, k: u32) -> Result<Self> {
        if !(alpha > 0.0) || !alpha.is_finite() {
            return Err(Error::domain(format!("log moment needs alpha > 0, got {alpha}")));
        }
        if m + k > MAX_ORDER {
            return Err(Error::domain(format!(
                "log moment supports m + k <= {MAX_ORDER}, got m = {m}, k = {k}"
            )));
        }
        Ok(LogMomentQuery { alpha, m, k })
    }
}

/// All `I(a, m, k)` with `m + k <= order` for one `a`.
#[derive(Debug, Clone)]
pub struct LogMomentTable {
    alpha: f64,
    order: u32,
    /// `grid[m][k]`
    grid: Vec<Vec<f64>>,
}

fn factorial(n: u32) -> f64 {
    (1..=n).map(|i| i as f64).product()
}

fn binom(n: u32, k: u32) -> f64 {
    let mut b = 1.0;
    for i in 0..k {
        b = b * (n - i) as f64 / (i + 1) as f64;
    }
    b
}

fn sign(e: u32) -> f64 {
    if e % 2 == 0 {
        1.0
    } else {
        -1.0
    }
}

impl LogMomentTable {
    pub fn new(alpha: f64, order: u32) -> Result<Self> {
        LogMomentQuery::new(alpha, 0, order)?;
        let n = order as usize;
        // h[s] = H_a^(s), z[s] = zeta(s) - H_a^(s)
        let mut h = vec![0.0; n + 2];
        let mut z = vec![0.0; n + 2];
        for s in 1..=(n + 1) {
            h[s] = harmonic_value(alpha, s as u32)?;
            if s >= 2 {
                z[s] = harmonic_complement(alpha, s as u32)?;
            }
        }
        let mut grid = vec![vec![0.0; n + 1]; n + 1];
        // I(a, i, 0) = (-1)^i i! / a^{i+1}
        for i in 0..=n {
            grid[i][0] = sign(i as u32) * factorial(i as u32) / alpha.powi(i as i32 + 1);
        }
        // I(a, 0, k) = sum_{i<k} (-1)^{k-i} (k-i-1)! C(k-1, i) I(a, 0, i) H^(k-i)
        for k in 1..=n {
            let mut acc = 0.0;
            for i in 0..k {
                let d = (k - i) as u32;
                acc += sign(d) * factorial(d - 1) * binom(k as u32 - 1, i as u32) * grid[0][i] * h[d as usize];
            }
            grid[0][k] = acc;
        }
        for m in 1..=n {
            for k in 1..=(n - m) {
                let (mu, ku) = (m as u32, k as u32);
                let mut acc = 0.0;
                for i in 0..m {
                    let d = mu - i as u32;
                    acc += binom(mu - 1, i as u32) * factorial(d - 1) * sign(d) / alpha.powi(d as i32)
                        * grid[i][k];
                }
                // (H^(s) - zeta(s)) terms, s = m + k - i - j
                for i in 0..m {
                    let bi = if i == 0 { 1.0 } else { binom(mu - 1, i as u32) };
                    for j in 0..k {
                        let s = mu + ku - i as u32 - j as u32;
                        acc -= bi
                            * binom(ku, j as u32)
                            * sign(s)
                            * factorial(s - 1)
                            * z[s as usize]
                            * grid[i][j];
                    }
                }
                grid[m][k] = acc;
            }
        }
        Ok(LogMomentTable { alpha, order, grid })
    }

    pub fn alpha(&self) -> f64 {
        self.alpha
    }

    pub fn get(&self, m: u32, k: u32) -> Option<f64> {
        if m + k > self.order {
            return None;
        }
        Some(self.grid[m as usize][k as usize])
    }
}

/// `I(a, m, k)` through the recurrences.
pub fn log_moment(q: LogMomentQuery) -> Result<f64> {
    let q = LogMomentQuery::new(q.alpha, q.m, q.k)?;
    let table = LogMomentTable::new(q.alpha, q.m + q.k)?;
    Ok(table.get(q.m, q.k).expect("entry inside the table"))
}

/// The pairs with a direct closed form.
pub const CLOSED_PAIRS: [(u32, u32); 6] = [(0, 1), (0, 2), (1, 1), (0, 3), (1, 2), (0, 4)];

/// `I(a, m, k)` from the explicit formulas in terms of `H_a^(s)`.
pub fn log_moment_closed(alpha: f64, m: u32, k: u32) -> Result<f64> {
    LogMomentQuery::new(alpha, m, k)?;
    let h1 = harmonic_value(alpha, 1)?;
    let h2 = harmonic_value(alpha, 2)?;
    let a = alpha;
    match (m, k) {
        (0, 1) => Ok(-h1 / a),
        (0, 2) => Ok((h1 * h1 + h2) / a),
        (1, 1) => Ok(h1 / (a * a) - harmonic_complement(a, 2)? / a),
        (0, 3) => {
            let h3 = harmonic_value(a, 3)?;
            Ok(-(h1.powi(3) + 3.0 * h1 * h2 + 2.0 * h3) / a)
        }
        (1, 2) => Ok(-(h1 * h1 + h2) / (a * a)
            + 2.0 * harmonic_complement(a, 3)? / a
            + 2.0 * harmonic_complement(a, 2)? * h1 / a),
        (0, 4) => {
            let h3 = harmonic_value(a, 3)?;
            let h4 = harmonic_value(a, 4)?;
            Ok((h1.powi(4) + 6.0 * h1 * h1 * h2 + 8.0 * h1 * h3 + 3.0 * h2 * h2 + 6.0 * h4) / a)
        }
        _ => Err(Error::Unsupported(format!(
            "no closed form for (m, k) = ({m}, {k}); supported pairs are {CLOSED_PAIRS:?}"
        ))),
    }
}

/// `int_0^1 x^{a-1} Li_p(x) dx = sum_{n>=1} 1/(n^p (n + a))`, `p >= 1`, `a > 0`.
pub fn polylog_moment(alpha: f64, p: u32) -> Result<f64> {
    if !(alpha > 0.0) || !alpha.is_finite() {
        return Err(Error::domain(format!("polylog moment needs alpha > 0, got {alpha}")));
    }
    if p == 0 {
        return Err(Error::domain("polylog moment needs p >= 1"));
    }
    let mut sum = 0.0;
    for i in 1..p {
        sum += sign(i - 1) * alpha.powi(-(i as i32)) * special_fn::zeta_int(p + 1 - i);
    }
    let h = harmonic_value(alpha, 1)?;
    Ok(sum - sign(p) * h / alpha.powi(p as i32))
}

/// `int_0^1 x^{r-1} Li_{p,a}(x) dx = sum_{n>=1} 1/((n + a)^p (n + r))`
/// for `r > 0`, `r != a`, `a > -1`.
pub fn polylog_moment_shifted(r: f64, p: u32, alpha: f64) -> Result<f64> {
    if !(r > 0.0) || !r.is_finite() {
        return Err(Error::domain(format!("need r > 0, got {r}")));
    }
    if !(alpha > -1.0) || !alpha.is_finite() {
        return Err(Error::domain(format!("need alpha > -1, got {alpha}")));
    }
    if p == 0 {
        return Err(Error::domain("need p >= 1"));
    }
    let d = r - alpha;
    if d.abs() <= 1e-12 * r.abs().max(1.0) {
        return Err(Error::Coincidence(format!(
            "r = {r} and alpha = {alpha} coincide; the formula divides by r - alpha"
        )));
    }
    let mut sum = 0.0;
    for i in 1..p {
        sum += sign(i - 1) * d.powi(-(i as i32)) * special_fn::hurwitz_zeta_int(p + 1 - i, alpha + 1.0)?;
    }
    let hr = harmonic_value(r, 1)?;
    let ha = harmonic_value(alpha, 1)?;
    Ok(sum + sign(p - 1) * (hr - ha) / d.powi(p as i32))
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn rel(a: f64, b: f64) -> f64 {
        ((a - b) / b).abs()
    }

    const Z2: f64 = 1.644_934_066_848_226_4;
    const Z3: f64 = 1.202_056_903_159_594_2;

    #[test]
    fn base_cases() {
        assert_eq!(log_moment(LogMomentQuery::new(1.0, 0, 0).unwrap()).unwrap(), 1.0);
        let v = log_moment(LogMomentQuery::new(2.0, 3, 0).unwrap()).unwrap();
        assert!(rel(v, -6.0 / 16.0) < 1e-15);
    }

    #[test]
    fn closed_examples() {
        let h = |a: f64| harmonic_value(a, 1).unwrap();
        for &a in &[0.3, 1.0, 4.5] {
            assert!(rel(log_moment(LogMomentQuery::new(a, 0, 1).unwrap()).unwrap(), -h(a) / a) < 1e-14);
        }
        assert!(rel(log_moment_closed(1.0, 0, 2).unwrap(), 2.0) < 1e-15);
        assert!(rel(log_moment_closed(1.0, 1, 1).unwrap(), 2.0 - Z2) < 1e-14);
        assert!(rel(log_moment_closed(1.0, 0, 4).unwrap(), 24.0) < 1e-14);
        assert!(rel(log_moment(LogMomentQuery::new(1.0, 0, 4).unwrap()).unwrap(), 24.0) < 1e-14);
        assert!(matches!(log_moment_closed(1.0, 2, 2), Err(Error::Unsupported(_))));
    }

    #[test]
    fn frozen_values() {
        let v = log_moment(LogMomentQuery::new(2.5, 1, 2).unwrap()).unwrap();
        assert!(rel(v, -0.174_735_543_284_032_775_71) < 1e-13);
        let v = log_moment(LogMomentQuery::new(0.5, 1, 1).unwrap()).unwrap();
        assert!(rel(v, 0.585_218_154_431_078_905_83) < 1e-13);
    }

    #[test]
    fn query_validation() {
        assert!(LogMomentQuery::new(0.0, 1, 1).is_err());
        assert!(LogMomentQuery::new(-1.0, 1, 1).is_err());
        assert!(LogMomentQuery::new(1.0, 5, 4).is_err());
        assert!(LogMomentQuery::new(1.0, 4, 4).is_ok());
    }

    #[test]
    fn polylog_moment_examples() {
        assert!(rel(polylog_moment(1.0, 2).unwrap(), Z2 - 1.0) < 1e-14);
        for &a in &[0.5, 2.0, 7.3] {
            let expected = Z2 / a - harmonic_value(a, 1).unwrap() / (a * a);
            assert!(rel(polylog_moment(a, 2).unwrap(), expected) < 1e-13);
        }
        assert!(rel(polylog_moment(2.5, 3).unwrap(), 0.325_177_138_123_115_151_39) < 1e-13);
        // p = 1 reduces to H_a / a
        assert!(rel(polylog_moment(3.0, 1).unwrap(), 11.0 / 18.0) < 1e-14);
        assert!(polylog_moment(0.0, 2).is_err());
    }

    #[test]
    fn polylog_moment_shifted_examples() {
        for &r in &[0.5, 2.0, 3.7] {
            let a = polylog_moment_shifted(r, 2, 0.0).unwrap();
            assert!(rel(a, polylog_moment(r, 2).unwrap()) < 1e-13);
        }
        let v = polylog_moment_shifted(2.0, 2, 1.0).unwrap();
        assert!(rel(v, Z2 - 1.5) < 1e-14);
        let v = polylog_moment_shifted(3.5, 3, 1.25).unwrap();
        assert!(rel(v, 0.029_074_399_252_466_369_493) < 1e-13);
        assert!(matches!(polylog_moment_shifted(2.0, 2, 2.0), Err(Error::Coincidence(_))));
        let _ = Z3;
    }

    proptest! {
        #[test]
        fn recurrence_matches_closed_forms(a in 0.1f64..50.0) {
            let table = LogMomentTable::new(a, 4).unwrap();
            for &(m, k) in CLOSED_PAIRS.iter() {
                let r = table.get(m, k).unwrap();
                let c = log_moment_closed(a, m, k).unwrap();
                prop_assert!(((r - c) / c).abs() <= 1e-10, "a={} m={} k={} {} {}", a, m, k, r, c);
            }
        }

        #[test]
        fn sign_follows_parity(a in 0.1f64..40.0) {
            let table = LogMomentTable::new(a, MAX_ORDER).unwrap();
            for m in 0..=MAX_ORDER {
                for k in 0..=(MAX_ORDER - m) {
                    let v = table.get(m, k).unwrap();
                    prop_assert!(v != 0.0);
                    prop_assert_eq!(v > 0.0, (m + k) % 2 == 0, "a={} m={} k={} v={}", a, m, k, v);
                }
            }
        }
    }
}
