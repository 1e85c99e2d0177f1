use super::series::{power_log, HarmonicSeries};
use super::*;
use std::f64::consts::{LN_2, PI};

const ZETA2: f64 = PI * PI / 6.0;
const ZETA3: f64 = 1.202_056_903_159_594_2;
const ZETA4: f64 = PI * PI * PI * PI / 90.0;

struct Case {
    name: &'static str,
    exact: f64,
    build: fn() -> Box<dyn SeriesTerm>,
}

fn fn_series(decay: DecayClass, f: fn(u64) -> f64) -> Box<dyn SeriesTerm> {
    Box::new(FnSeries::new(decay, f))
}

fn h_series(beta: f64, orders: u32, decay: DecayClass, f: fn(u64, &[f64; 5]) -> f64) -> Box<dyn SeriesTerm> {
    Box::new(HarmonicSeries::new(beta, orders, decay, f).unwrap())
}

fn calibration_set() -> Vec<Case> {
    vec![
        Case {
            name: "telescoping 1/(n(n+1))",
            exact: 1.0,
            build: || fn_series(power_log(2.0, 0), |n| {
                let n = n as f64;
                1.0 / (n * (n + 1.0))
            }),
        },
        Case {
            name: "telescoping 1/(n(n+2))",
            exact: 0.75,
            build: || fn_series(power_log(2.0, 0), |n| {
                let n = n as f64;
                1.0 / (n * (n + 2.0))
            }),
        },
        Case {
            name: "telescoping 1/(n(n+1)(n+2))",
            exact: 0.25,
            build: || fn_series(power_log(3.0, 0), |n| {
                let n = n as f64;
                1.0 / (n * (n + 1.0) * (n + 2.0))
            }),
        },
        Case {
            name: "zeta(2)",
            exact: ZETA2,
            build: || fn_series(power_log(2.0, 0), |n| (n as f64).powi(-2)),
        },
        Case {
            name: "zeta(3)",
            exact: ZETA3,
            build: || fn_series(power_log(3.0, 0), |n| (n as f64).powi(-3)),
        },
        Case {
            name: "zeta(4)",
            exact: ZETA4,
            build: || fn_series(power_log(4.0, 0), |n| (n as f64).powi(-4)),
        },
        Case {
            name: "zeta(3/2)",
            exact: 2.612_375_348_685_488,
            build: || fn_series(power_log(1.5, 0), |n| (n as f64).powf(-1.5)),
        },
        Case {
            name: "1/(n^2(n+1))",
            exact: ZETA2 - 1.0,
            build: || fn_series(power_log(3.0, 0), |n| {
                let n = n as f64;
                1.0 / (n * n * (n + 1.0))
            }),
        },
        Case {
            name: "ln n / n^2",
            exact: 0.937_548_254_315_843_8,
            build: || fn_series(power_log(2.0, 1), |n| (n as f64).ln() / (n as f64).powi(2)),
        },
        Case {
            name: "geometric 2^-n",
            exact: 1.0,
            build: || fn_series(DecayClass::Geometric { ratio: 0.5 }, |n| 0.5f64.powi(n as i32)),
        },
        Case {
            name: "n 3^-n",
            exact: 0.75,
            build: || fn_series(DecayClass::Geometric { ratio: 2.0 / 3.0 }, |n| {
                n as f64 / 3f64.powi(n as i32)
            }),
        },
        Case {
            name: "H_n/n^2",
            exact: 2.0 * ZETA3,
            build: || h_series(0.0, 1, power_log(2.0, 1), |n, h| h[1] / (n as f64).powi(2)),
        },
        Case {
            name: "H_n/n^3",
            exact: 1.25 * ZETA4,
            build: || h_series(0.0, 1, power_log(3.0, 1), |n, h| h[1] / (n as f64).powi(3)),
        },
        Case {
            name: "H_n/(n(n+1))",
            exact: ZETA2,
            build: || h_series(0.0, 1, power_log(2.0, 1), |n, h| {
                let n = n as f64;
                h[1] / (n * (n + 1.0))
            }),
        },
        Case {
            name: "H_n/(n+1)^2",
            exact: ZETA3,
            build: || h_series(0.0, 1, power_log(2.0, 1), |n, h| h[1] / (n as f64 + 1.0).powi(2)),
        },
        Case {
            name: "H_{n+2}/(n(n+1))",
            exact: 2.25,
            build: || h_series(2.0, 1, power_log(2.0, 1), |n, h| {
                let n = n as f64;
                h[1] / (n * (n + 1.0))
            }),
        },
        Case {
            name: "H_{n+1}/(n(n+1))",
            exact: 2.0,
            build: || h_series(1.0, 1, power_log(2.0, 1), |n, h| {
                let n = n as f64;
                h[1] / (n * (n + 1.0))
            }),
        },
        Case {
            name: "H_{n+1/2}/(n(n+1/2))",
            exact: 2.0 * ((2.0 - 2.0 * LN_2).powi(2) + 4.0 - 2.0 * ZETA2),
            build: || h_series(0.5, 1, power_log(2.0, 1), |n, h| {
                let n = n as f64;
                h[1] / (n * (n + 0.5))
            }),
        },
        Case {
            name: "H_n^2/C(n+2,2)",
            exact: 2.0 * ZETA2 + 2.0,
            build: || h_series(0.0, 1, power_log(2.0, 2), |n, h| {
                let n = n as f64;
                2.0 * h[1] * h[1] / ((n + 1.0) * (n + 2.0))
            }),
        },
        Case {
            name: "H^(2)_n/n^2",
            exact: 1.75 * ZETA4,
            build: || h_series(0.0, 2, power_log(2.0, 0), |n, h| h[2] / (n as f64).powi(2)),
        },
        Case {
            name: "H_n^2/n^2",
            exact: 4.25 * ZETA4,
            build: || h_series(0.0, 1, power_log(2.0, 2), |n, h| h[1] * h[1] / (n as f64).powi(2)),
        },
    ]
}

#[test]
fn calibration_error_within_reported_bound() {
    for case in calibration_set() {
        for &target in &[1e-8, 1e-10] {
            let mut s = (case.build)();
            let est = sum_series(s.as_mut(), target).unwrap();
            let err = (est.value - case.exact).abs();
            assert!(
                err <= est.error_bound,
                "{}: error {err:e} exceeds bound {:e} (target {target:e})",
                case.name,
                est.error_bound
            );
            assert!(est.error_bound <= target, "{}: bound {:e} above target {target:e}", case.name, est.error_bound);
        }
    }
}

#[test]
fn identical_inputs_give_identical_bits() {
    for case in calibration_set().into_iter().take(6) {
        let a = sum_series((case.build)().as_mut(), 1e-9).unwrap();
        let b = sum_series((case.build)().as_mut(), 1e-9).unwrap();
        assert_eq!(a.value.to_bits(), b.value.to_bits(), "{}", case.name);
        assert_eq!(a.error_bound.to_bits(), b.error_bound.to_bits());
        assert_eq!(a.terms_used, b.terms_used);
    }
}

#[test]
fn tighter_target_never_worsens_error() {
    for case in calibration_set() {
        let mut last = f64::INFINITY;
        for &target in &[1e-6, 1e-8, 1e-10] {
            let est = sum_series((case.build)().as_mut(), target).unwrap();
            let err = (est.value - case.exact).abs();
            // rounding in the reference constant and final additions
            let slack = 4.0 * f64::EPSILON * case.exact.abs();
            assert!(err <= last + slack, "{}: {err:e} after {last:e}", case.name);
            last = err;
        }
    }
}

#[test]
fn budget_exhaustion_is_reported() {
    let mut s = FnSeries::new(power_log(1.01, 0), |n| (n as f64).powf(-1.01) * (1.0 + (n as f64).sin()));
    let cfg = OracleConfig {
        term_budget: 100_000,
        initial_terms: 10_000,
    };
    assert!(matches!(sum_series_with(&mut s, 1e-12, &cfg), Err(Error::NonConvergence(_))));
}

#[test]
fn rejects_bad_targets_and_decay() {
    let mut s = FnSeries::new(power_log(2.0, 0), |n| (n as f64).powi(-2));
    assert!(sum_series(&mut s, 0.0).is_err());
    let mut s = FnSeries::new(power_log(1.0, 0), |n| (n as f64).powi(-2));
    assert!(sum_series(&mut s, 1e-8).is_err());
}

#[test]
fn integrals_with_endpoint_singularities() {
    let one = integrate_01(|_, _| 1.0, 1e-12).unwrap();
    assert!((one.value - 1.0).abs() <= 1e-12);
    let l = integrate_01(|_, omx| omx.ln(), 1e-12).unwrap();
    assert!((l.value + 1.0).abs() <= l.error_bound.max(1e-12));
    // x^{-1/2} ln x ln(1-x) = H/a^2 - (zeta(2) - H^(2))/a at a = 1/2
    let h = 2.0 - 2.0 * LN_2;
    let h2 = 4.0 - 2.0 * ZETA2;
    let exact = h / 0.25 - (ZETA2 - h2) / 0.5;
    let v = integrate_01(|x, omx| x.powf(-0.5) * x.ln() * omx.ln(), 1e-10).unwrap();
    assert!((v.value - exact).abs() <= 1e-10, "{} vs {exact}", v.value);
}

#[test]
fn quadrature_matches_log_moment_recurrence() {
    use crate::beta_log_integrals::{log_moment, LogMomentQuery};
    for &alpha in &[0.7, 1.0, 2.5, 6.0] {
        for m in 0..=4u32 {
            for k in 0..=(4 - m) {
                let q = LogMomentQuery::new(alpha, m, k).unwrap();
                let rec = log_moment(q).unwrap();
                let quad = integrate_01(
                    |x, omx| x.powf(alpha - 1.0) * x.ln().powi(m as i32) * omx.ln().powi(k as i32),
                    1e-10,
                )
                .unwrap();
                assert!(
                    (rec - quad.value).abs() <= 1e-8,
                    "I({alpha},{m},{k}): {rec} vs {}",
                    quad.value
                );
            }
        }
    }
}
