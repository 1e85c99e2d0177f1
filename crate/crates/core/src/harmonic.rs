//! Shifted harmonic numbers `H_a^(m)`.
//!
//! For `m >= 2` the value is `zeta(m) - zeta(m, a + 1)`; for `m = 1` it is
//! `psi(a + 1) + gamma`. Both vanish at `a = 0`, so small shifts use the
//! Taylor expansion in `a` instead. Integers and half-integers also have an
//! exact form over the constant basis.

use std::cell::RefCell;
use std::collections::HashMap;

use num_bigint::BigInt;
use num_traits::{One, Zero};

use crate::const_combo::{rat, ConstAtom, ConstCombo, Rational};
use crate::error::{Error, Result};
use crate::special_fn::{self, EULER_GAMMA};

/// Largest `|a|` for which [`harmonic_value`] takes the exact route.
const EXACT_ROUTE_LIMIT: f64 = 64.0;

fn check_order(m: u32) -> Result<()> {
    if m == 0 {
        return Err(Error::domain("harmonic order m must be at least 1"));
    }
    Ok(())
}

fn check_alpha(alpha: f64) -> Result<()> {
    if !alpha.is_finite() {
        return Err(Error::domain(format!("shift {alpha} is not finite")));
    }
    if alpha < 0.0 && alpha == alpha.floor() {
        return Err(Error::pole(format!(
            "H_a is undefined at the negative integer a = {alpha}"
        )));
    }
    Ok(())
}

/// `H_alpha^(m)` for real `alpha` outside the negative integers.
pub fn shifted_harmonic(alpha: f64, m: u32) -> Result<f64> {
    check_order(m)?;
    check_alpha(alpha)?;
    Ok(shifted_harmonic_unchecked(alpha, m))
}

fn shifted_harmonic_unchecked(alpha: f64, m: u32) -> f64 {
    if alpha == alpha.floor() && (0.0..=1000.0).contains(&alpha) {
        let n = alpha as u64;
        return (1..=n).rev().map(|j| (j as f64).powi(-(m as i32))).sum();
    }
    if alpha.abs() < 0.1 {
        return small_shift_series(alpha, m);
    }
    if alpha < -1.0 {
        // H_a = H_{a+1} - (a+1)^{-m}
        let steps = (-1.0 - alpha).ceil() as u64;
        let top = alpha + steps as f64;
        let mut v = shifted_harmonic_unchecked(top, m);
        for i in (0..steps).rev() {
            v -= (alpha + i as f64 + 1.0).powi(-(m as i32));
        }
        return v;
    }
    if m == 1 {
        special_fn::digamma(alpha + 1.0).unwrap_or(f64::NAN) + EULER_GAMMA
    } else {
        special_fn::zeta_int(m) - special_fn::hurwitz_zeta_int(m, alpha + 1.0).unwrap_or(f64::NAN)
    }
}

/// `H_a^(m) = -sum_{j>=1} C(m+j-1, j) (-a)^j zeta(m+j)` for small `|a|`.
fn small_shift_series(alpha: f64, m: u32) -> f64 {
    let mut sum = 0.0;
    let mut binom = 1.0;
    let mut pow = 1.0;
    let mut terms = Vec::with_capacity(32);
    for j in 1..=32u32 {
        binom *= (m + j - 1) as f64 / j as f64;
        pow *= -alpha;
        terms.push(-binom * pow * special_fn::zeta_int(m + j));
    }
    for t in terms.iter().rev() {
        sum += t;
    }
    sum
}

/// Exact `H_alpha^(m)` for integer or half-integer `alpha`.
pub fn shifted_harmonic_exact(alpha: &Rational, m: u32) -> Result<ConstCombo> {
    check_order(m)?;
    let den = alpha.denom().clone();
    let two = BigInt::from(2);
    if den.is_one() {
        if alpha < &Rational::zero() {
            return Err(Error::pole(format!("H_a is undefined at a = {alpha}")));
        }
        let n: i64 = alpha
            .numer()
            .try_into()
            .map_err(|_| Error::Overflow(format!("shift {alpha} is too large")))?;
        let mut h = Rational::zero();
        for j in 1..=n {
            h += rat(1, j).pow(m as i32);
        }
        return Ok(ConstCombo::rational(h));
    }
    if den != two {
        return Err(Error::UnsupportedDenominator {
            den: den.to_string(),
            supported: "1 and 2".into(),
        });
    }
    let twice: i64 = alpha
        .numer()
        .try_into()
        .map_err(|_| Error::Overflow(format!("shift {alpha} is too large")))?;
    // start from H_{1/2}^(m)
    let mut combo = if m == 1 {
        ConstCombo::integer(2) + ConstCombo::term(rat(-2, 1), ConstAtom::Ln2)
    } else {
        let p = BigInt::from(2).pow(m);
        ConstCombo::rational(Rational::from_integer(p.clone()))
            + ConstCombo::term(Rational::from_integer(-(p - BigInt::from(2))), ConstAtom::Zeta(m))
    };
    let mut shift = Rational::zero();
    let mut x = 1i64; // current shift is x/2
    while x < twice {
        // H_{a+1} = H_a + (a+1)^{-m}
        shift += rat(2, x + 2).pow(m as i32);
        x += 2;
    }
    while x > twice {
        // H_{a-1} = H_a - a^{-m}
        shift -= rat(2, x).pow(m as i32);
        x -= 2;
    }
    combo += &ConstCombo::rational(shift);
    Ok(combo)
}

/// Exact shift as a rational when `alpha` is an integer or half-integer
/// of moderate size.
pub(crate) fn half_integer(alpha: f64) -> Option<Rational> {
    let twice = 2.0 * alpha;
    if twice == twice.round() && alpha.abs() <= EXACT_ROUTE_LIMIT {
        Some(rat(twice as i64, 2))
    } else {
        None
    }
}

thread_local! {
    static EXACT_CACHE: RefCell<HashMap<(i64, u32), f64>> = RefCell::new(HashMap::new());
}

/// `H` through the exact combination, cached per thread.
fn exact_value(twice: i64, m: u32) -> Result<f64> {
    if let Some(v) = EXACT_CACHE.with(|c| c.borrow().get(&(twice, m)).copied()) {
        return Ok(v);
    }
    let h = shifted_harmonic_exact(&rat(twice, 2), m)?.eval();
    EXACT_CACHE.with(|c| c.borrow_mut().insert((twice, m), h));
    Ok(h)
}

/// `H_alpha^(m)`, routed through the exact form for integer and
/// half-integer shifts and through [`shifted_harmonic`] otherwise.
pub fn harmonic_value(alpha: f64, m: u32) -> Result<f64> {
    check_order(m)?;
    check_alpha(alpha)?;
    match half_integer(alpha) {
        Some(_) => exact_value((2.0 * alpha).round() as i64, m),
        None => Ok(shifted_harmonic_unchecked(alpha, m)),
    }
}

/// `zeta(m) - H_alpha^(m) = zeta(m, alpha + 1)` for `m >= 2`.
///
/// Always evaluated as a Hurwitz zeta value: the exact form would subtract
/// two nearly equal numbers here.
pub fn harmonic_complement(alpha: f64, m: u32) -> Result<f64> {
    if m < 2 {
        return Err(Error::domain("the complement needs order m >= 2"));
    }
    check_alpha(alpha)?;
    special_fn::hurwitz_zeta_int(m, alpha + 1.0)
}

/// `H_{alpha-r}^(m) - H_{alpha-k}^(m) = sum_{j=1}^{k-r} (j + alpha - k)^{-m}`.
pub fn harmonic_difference(alpha: f64, r: u32, k: u32, m: u32) -> Result<f64> {
    check_order(m)?;
    if r >= k {
        return Err(Error::domain(format!("need r < k, got r = {r}, k = {k}")));
    }
    if !(alpha > k as f64) {
        return Err(Error::domain(format!("need alpha > k = {k}, got alpha = {alpha}")));
    }
    Ok(shift_difference(alpha, r, k, m))
}

pub(crate) fn shift_difference(alpha: f64, r: u32, k: u32, m: u32) -> f64 {
    (1..=(k - r))
        .rev()
        .map(|j| (j as f64 + alpha - k as f64).powi(-(m as i32)))
        .sum()
}

/// Classical `H_n^(m)` as an exact rational.
pub fn classical_harmonic(n: u64, m: u32) -> Rational {
    let mut h = Rational::zero();
    for j in 1..=n {
        h += Rational::new(BigInt::one(), BigInt::from(j)).pow(m as i32);
    }
    h
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;
    use num_traits::ToPrimitive;

    fn rel(a: f64, b: f64) -> f64 {
        if b == 0.0 {
            a.abs()
        } else {
            ((a - b) / b).abs()
        }
    }

    fn ln2(c: Rational) -> ConstCombo {
        ConstCombo::term(c, ConstAtom::Ln2)
    }

    #[test]
    fn numeric_examples() {
        let ln2v = std::f64::consts::LN_2;
        assert!(rel(shifted_harmonic(0.5, 1).unwrap(), 2.0 - 2.0 * ln2v) < 1e-14);
        assert!(rel(shifted_harmonic(1.5, 2).unwrap(), 1.154_576_310_747_99) < 1e-13);
        assert!(rel(shifted_harmonic(4.0, 1).unwrap(), 25.0 / 12.0) < 1e-15);
        assert!(rel(shifted_harmonic(4.0, 2).unwrap(), 1.423_611_111_111_111_2) < 1e-15);
        assert!(matches!(shifted_harmonic(-1.0, 1), Err(Error::Pole(_))));
        assert!(matches!(shifted_harmonic(-7.0, 3), Err(Error::Pole(_))));
        assert!(shifted_harmonic(1.0, 0).is_err());
    }

    #[test]
    fn exact_examples() {
        let cases = [
            (rat(1, 2), 1, ConstCombo::integer(2) + ln2(rat(-2, 1))),
            (rat(3, 2), 1, ConstCombo::rational(rat(8, 3)) + ln2(rat(-2, 1))),
            (rat(5, 2), 1, ConstCombo::rational(rat(46, 15)) + ln2(rat(-2, 1))),
            (
                rat(1, 2),
                2,
                ConstCombo::integer(4) + ConstCombo::term(rat(-2, 1), ConstAtom::Zeta(2)),
            ),
            (
                rat(3, 2),
                2,
                ConstCombo::rational(rat(40, 9)) + ConstCombo::term(rat(-2, 1), ConstAtom::Zeta(2)),
            ),
        ];
        for (a, m, expected) in cases {
            let got = shifted_harmonic_exact(&a, m).unwrap();
            assert_eq!(got, expected, "alpha = {a}, m = {m}");
            let numeric = shifted_harmonic(a.to_f64().unwrap(), m).unwrap();
            assert!(rel(got.eval(), numeric) < 1e-12);
        }
    }

    #[test]
    fn exact_negative_half_integers() {
        // H_{-1/2} = -2 ln 2
        assert_eq!(shifted_harmonic_exact(&rat(-1, 2), 1).unwrap(), ln2(rat(-2, 1)));
        for twice in [-1i64, -3, -5, -11] {
            for m in 1..=4 {
                let c = shifted_harmonic_exact(&rat(twice, 2), m).unwrap();
                let v = shifted_harmonic(twice as f64 / 2.0, m).unwrap();
                assert!(rel(c.eval(), v) < 1e-12, "twice = {twice}, m = {m}");
            }
        }
    }

    #[test]
    fn exact_errors() {
        assert!(matches!(
            shifted_harmonic_exact(&rat(1, 4), 1),
            Err(Error::UnsupportedDenominator { .. })
        ));
        assert!(matches!(shifted_harmonic_exact(&rat(-2, 1), 1), Err(Error::Pole(_))));
        assert_eq!(
            shifted_harmonic_exact(&rat(0, 1), 3).unwrap(),
            ConstCombo::zero()
        );
    }

    #[test]
    fn half_integer_base_matches_direct_summation() {
        // H_{1/2}^(m) = sum_k (1/k^m - 1/(k+1/2)^m), brute force with an
        // integral tail, compared with 2^m - (2^m - 2) zeta(m)
        for m in 2..=6u32 {
            let n = 200_000u64;
            let mut s = 0.0;
            for k in (1..=n).rev() {
                let kf = k as f64;
                s += kf.powi(-(m as i32)) - (kf + 0.5).powi(-(m as i32));
            }
            let mf = m as f64;
            let x = n as f64 + 0.5;
            let tail = ((x).powf(1.0 - mf) - (x + 0.5).powf(1.0 - mf)) / (mf - 1.0);
            let exact = shifted_harmonic_exact(&rat(1, 2), m).unwrap().eval();
            assert!((s + tail - exact).abs() < 1e-12, "m = {m}");
        }
    }

    #[test]
    fn digamma_series_oracle() {
        // H_a = sum_{k<=N} (1/k - 1/(k+a)) + tail ~ a/N
        for &a in &[0.25, 0.5, 2.75] {
            let n = 1_000_000u64;
            let mut s = 0.0;
            for k in (1..=n).rev() {
                let kf = k as f64;
                s += 1.0 / kf - 1.0 / (kf + a);
            }
            let est = s + a / n as f64;
            let bound = a * (a + 1.0) / (n as f64 * n as f64) + 1e-13;
            assert!((est - shifted_harmonic(a, 1).unwrap()).abs() <= bound, "a = {a}");
        }
    }

    #[test]
    fn integer_reduction() {
        for n in 1..=50u64 {
            for m in 1..=4u32 {
                let exact = classical_harmonic(n, m).to_f64().unwrap();
                assert!(rel(shifted_harmonic(n as f64, m).unwrap(), exact) < 1e-13);
                assert!(rel(harmonic_value(n as f64, m).unwrap(), exact) < 1e-14);
            }
        }
    }

    #[test]
    fn half_integer_routes_agree() {
        for twice in (1..=21).step_by(2) {
            let a = twice as f64 / 2.0;
            for m in 1..=4 {
                let c = shifted_harmonic_exact(&rat(twice, 2), m).unwrap();
                assert!(rel(c.eval(), shifted_harmonic(a, m).unwrap()) < 1e-12);
            }
        }
    }

    #[test]
    fn small_shift_is_accurate() {
        // H_a ~ zeta(2) a for tiny a
        let a = 1e-9;
        assert!(rel(shifted_harmonic(a, 1).unwrap(), 1.644_934_066_848_226_4e-9 - 1.2020569e-18) < 1e-12);
        // branch boundary
        for &a in &[0.099_999, 0.100_001, -0.099_999, -0.100_001] {
            let lhs = shifted_harmonic(a + 1.0, 2).unwrap() - (a + 1.0).powi(-2);
            assert!(rel(shifted_harmonic(a, 2).unwrap(), lhs) < 1e-12);
        }
    }

    #[test]
    fn difference_examples() {
        assert!(rel(harmonic_difference(3.5, 0, 1, 1).unwrap(), 1.0 / 3.5) < 1e-15);
        assert!(rel(harmonic_difference(5.0, 1, 3, 2).unwrap(), 1.0 / 9.0 + 1.0 / 16.0) < 1e-15);
        assert!(harmonic_difference(3.0, 0, 3, 1).is_err());
        assert!(harmonic_difference(5.0, 2, 2, 1).is_err());
    }

    #[test]
    fn complement_matches_hurwitz() {
        for &a in &[0.5, 2.5, 3.3, -0.5] {
            for m in 2..=5 {
                let c = harmonic_complement(a, m).unwrap();
                let z = special_fn::hurwitz_zeta(m as f64, a + 1.0).unwrap();
                assert!(rel(c, z) < 1e-13);
            }
        }
    }

    proptest! {
        #[test]
        fn recurrence(a in 0.0f64..20.0, m in 1u32..=4) {
            let lhs = shifted_harmonic(a + 1.0, m).unwrap();
            let rhs = shifted_harmonic(a, m).unwrap() + (a + 1.0).powi(-(m as i32));
            prop_assert!((lhs - rhs).abs() <= 1e-12 * lhs.abs().max(1.0));
        }

        #[test]
        fn difference_matches_subtraction(a in 6.01f64..30.0, r in 0u32..3, dk in 1u32..4, m in 1u32..=4) {
            let k = r + dk;
            let d = harmonic_difference(a, r, k, m).unwrap();
            let s = shifted_harmonic(a - r as f64, m).unwrap() - shifted_harmonic(a - k as f64, m).unwrap();
            prop_assert!((d - s).abs() <= 1e-12 * d.abs().max(1.0));
        }
    }
}
