//! Golden examples and the seeded smoke run.

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use super::report::VerificationReport;
use super::sampling::{draw_alpha, draw_two_factor, draw_wspec};
use crate::beta_log_integrals::{log_moment, LogMomentQuery};
use crate::const_combo::{rat, ConstAtom, ConstCombo, Rational};
use crate::error::Result;
use crate::harmonic::{classical_harmonic, shifted_harmonic_exact};
use crate::identities::{DomainMode, Family, TwoFactorSpec};
use crate::oracle::{direct_shifted_harmonic, integrate_01, OracleConfig, OracleEstimate};
use crate::w_sums::{
    classical_square_oracle, classical_square_sum, euler_shifted_oracle, euler_shifted_weight,
    polylog_symmetry_check, w_sum, WSpec, SUPPORTED,
};

/// Tolerance of the series entries.
pub const SERIES_TOL: f64 = 1e-8;
/// Accuracy requested from the oracle by the suites.
pub const SUITE_TARGET: f64 = 1e-10;

fn entry(
    name: &str,
    spec: String,
    tol: f64,
    eval: impl FnOnce() -> Result<(f64, OracleEstimate)>,
) -> VerificationReport {
    match eval() {
        Ok((closed, oracle)) => VerificationReport::new(name, spec, closed, oracle, tol),
        Err(e) => VerificationReport::failed(name, spec, tol, e.to_string()),
    }
}

fn ln2_combo(c: Rational, l: Rational) -> ConstCombo {
    ConstCombo::rational(c) + ConstCombo::term(l, ConstAtom::Ln2)
}

fn exact_values(out: &mut Vec<VerificationReport>) {
    let cases = [(rat(1, 2), 1u32), (rat(3, 2), 1), (rat(1, 2), 2), (rat(3, 2), 2), (rat(5, 2), 1)];
    for (alpha, m) in cases {
        let name = if m == 1 {
            format!("H_{{{alpha}}}")
        } else {
            format!("H^({m})_{{{alpha}}}")
        };
        let a: f64 = num_traits::ToPrimitive::to_f64(&alpha).unwrap_or(f64::NAN);
        let mut exact = String::new();
        let mut report = entry(&name, format!("shifted harmonic alpha={alpha} m={m}"), 1e-12, || {
            let combo = shifted_harmonic_exact(&alpha, m)?;
            exact = combo.to_string();
            Ok((combo.eval(), direct_shifted_harmonic(a, m)?))
        });
        if !exact.is_empty() {
            report = report.with_exact(exact);
        }
        out.push(report);
    }
}

/// `k/(k-1) (zeta(2) - H^(2)_{k-1} + 2/(k-1)^2)` as a combination of constants.
fn classical_combo(k: u32) -> ConstCombo {
    let k = k as i64;
    let c = rat(k, k - 1);
    let rest = rat(2, (k - 1) * (k - 1)) - classical_harmonic((k - 1) as u64, 2);
    ConstCombo::term(c.clone(), ConstAtom::Zeta(2)) + ConstCombo::rational(c * rest)
}

fn classical(out: &mut Vec<VerificationReport>, config: &OracleConfig) {
    for k in 2..=6 {
        let name = format!("H_n^2/C(n+{k},{k})");
        let report = entry(&name, format!("classical square sum k={k}"), SERIES_TOL, || {
            Ok((classical_square_sum(k)?, classical_square_oracle(k, SUITE_TARGET, config)?))
        });
        out.push(report.with_exact(classical_combo(k).to_string()));
    }
}

/// The printed value of the quarter-shift example.
pub fn quarter_shift_combo() -> ConstCombo {
    ConstCombo::integer(152)
        + ConstCombo::term(rat(-140, 3), ConstAtom::Catalan)
        + ConstCombo::term(rat(-128, 3), ConstAtom::Ln2)
        + ConstCombo::term(rat(-64, 9), ConstAtom::Pi)
        + ConstCombo::term(rat(-69, 2), ConstAtom::Zeta(2))
}

/// `sum H^(2)_{n+1/4} / (n C(n+k, k))` by direct summation.
pub fn quarter_shift_oracle(k: u32, config: &OracleConfig) -> Result<OracleEstimate> {
    WSpec::new(1, 1, 2, k, 0, 0.25).series_oracle(SUITE_TARGET, config)
}

fn quarter_shift(out: &mut Vec<VerificationReport>, config: &OracleConfig) {
    let combo = quarter_shift_combo();
    for k in [4, 2] {
        let name = format!("H^(2)_{{n+1/4}}/(n C(n+{k},{k})), printed value");
        let report = entry(&name, format!("quarter shift k={k} against the printed value"), 1e-7, || {
            Ok((combo.eval(), quarter_shift_oracle(k, config)?))
        });
        out.push(report.with_exact(combo.to_string()));
    }
}

/// The four ln 2 examples: label, evaluator spec and printed value.
pub fn ln2_examples() -> Vec<(&'static str, TwoFactorSpec, ConstCombo)> {
    vec![
        (
            "H_{n-1/2}/((n+1)(n+2))",
            TwoFactorSpec::new(Family::LinearShift, 2.5, 1, 2).with_shift(3),
            ln2_combo(rat(2, 3), rat(1, 3)),
        ),
        (
            "H_{n+1/2}/((n+1)(n+2))",
            TwoFactorSpec::new(Family::LinearShift, 2.5, 1, 2).with_shift(2),
            ln2_combo(rat(-1, 1), rat(3, 1)),
        ),
        (
            "H_{n+3/2}/((n+1)(n+2))",
            TwoFactorSpec::new(Family::LinearShift, 2.5, 1, 2).with_shift(1),
            ln2_combo(rat(14, 3), rat(-5, 1)),
        ),
        (
            "H_{n+5/2}/((n+1)(n+2))",
            TwoFactorSpec::new(Family::Linear, 2.5, 1, 2),
            ln2_combo(rat(131, 45), rat(-7, 3)),
        ),
    ]
}

fn ln2_block(out: &mut Vec<VerificationReport>, config: &OracleConfig) {
    for (label, spec, combo) in ln2_examples() {
        let oracle = spec.oracle(SUITE_TARGET, config);
        let formula = entry(label, spec.describe(), SERIES_TOL, || {
            Ok((spec.evaluate(DomainMode::Strict)?, oracle.clone()?))
        });
        out.push(formula.with_exact(combo.to_string()));
        let printed = entry(&format!("{label}, printed value"), spec.describe(), SERIES_TOL, || {
            Ok((combo.eval(), oracle?))
        });
        out.push(printed.with_exact(combo.to_string()));
    }
}

fn log_moments(out: &mut Vec<VerificationReport>) {
    let cases: [(f64, u32, u32, ConstCombo); 3] = [
        (1.0, 0, 2, ConstCombo::integer(2)),
        (1.0, 1, 1, ConstCombo::integer(2) - ConstCombo::atom(ConstAtom::Zeta(2))),
        // -H_{1/2} / (1/2)
        (0.5, 0, 1, ln2_combo(rat(-4, 1), rat(4, 1))),
    ];
    for (alpha, m, k, combo) in cases {
        let name = format!("x^({alpha}-1) ln^{m}(x) ln^{k}(1-x)");
        let report = entry(&name, format!("log moment alpha={alpha} m={m} k={k}"), SERIES_TOL, || {
            let closed = log_moment(LogMomentQuery::new(alpha, m, k)?)?;
            let quad = integrate_01(
                |x, omx| x.powf(alpha - 1.0) * x.ln().powi(m as i32) * omx.ln().powi(k as i32),
                SUITE_TARGET,
            )?;
            Ok((closed, quad))
        });
        out.push(report.with_exact(combo.to_string()));
    }
}

fn base_example(out: &mut Vec<VerificationReport>, config: &OracleConfig) {
    let spec = TwoFactorSpec::new(Family::LinearBase, 1.0, 0, 0);
    let report = entry("H_{n+1}/(n(n+1))", spec.describe(), SERIES_TOL, || {
        Ok((spec.evaluate(DomainMode::Strict)?, spec.oracle(SUITE_TARGET, config)?))
    });
    out.push(report.with_exact("2"));
}

fn euler_cases(out: &mut Vec<VerificationReport>, config: &OracleConfig) {
    for weight in [3, 5, 7] {
        for alpha in [0.5, 1.0, 1.5, 2.3] {
            let name = format!("H_{{n+2a}}/(n+a)^{weight}, a={alpha}");
            let report = entry(&name, format!("euler-shifted alpha={alpha} weight={weight}"), SERIES_TOL, || {
                Ok((
                    euler_shifted_weight(alpha, weight)?,
                    euler_shifted_oracle(alpha, weight, SUITE_TARGET, config)?,
                ))
            });
            out.push(report);
        }
    }
}

/// Every displayed numeric identity, checked against the oracle.
pub fn paper_examples(config: &OracleConfig) -> Vec<VerificationReport> {
    let mut out = Vec::new();
    exact_values(&mut out);
    classical(&mut out, config);
    quarter_shift(&mut out, config);
    ln2_block(&mut out, config);
    base_example(&mut out, config);
    log_moments(&mut out);
    euler_cases(&mut out, config);
    out
}

const SMOKE_DRAWS: usize = 3;

/// A few seeded random instances of every family.
pub fn property_smoke(seed: u64, config: &OracleConfig) -> Vec<VerificationReport> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut out = Vec::new();
    for family in Family::ALL {
        for i in 0..SMOKE_DRAWS {
            let spec = draw_two_factor(&mut rng, family);
            out.push(entry(&format!("{family} #{i}"), spec.describe(), SERIES_TOL, || {
                Ok((spec.evaluate(DomainMode::Strict)?, spec.oracle(SUITE_TARGET, config)?))
            }));
        }
    }
    for triple in SUPPORTED {
        for i in 0..SMOKE_DRAWS {
            let spec = draw_wspec(&mut rng, triple);
            out.push(entry(&format!("wsum {triple:?} #{i}"), spec.describe(), SERIES_TOL, || {
                Ok((w_sum(spec)?, spec.oracle(SUITE_TARGET, config)?))
            }));
        }
    }
    for i in 0..SMOKE_DRAWS {
        let alpha = draw_alpha(&mut rng, 0.0, 4.0);
        let weight = [3, 5, 7][rng.gen_range(0..3)];
        out.push(entry(
            &format!("euler-shifted #{i}"),
            format!("euler-shifted alpha={alpha} weight={weight}"),
            SERIES_TOL,
            || {
                Ok((
                    euler_shifted_weight(alpha, weight)?,
                    euler_shifted_oracle(alpha, weight, SUITE_TARGET, config)?,
                ))
            },
        ));
    }
    let (p, m) = [(2, 2), (2, 3), (3, 2)][rng.gen_range(0..3)];
    let r = rng.gen_range(1.0..3.0);
    let alpha = rng.gen_range(0.1..r - 0.1);
    let beta = rng.gen_range(0.1..r - 0.1);
    out.push(entry(
        "polylog symmetry",
        format!("symmetry residual p={p} m={m} r={r} alpha={alpha} beta={beta}"),
        1e-7,
        || Ok((0.0, polylog_symmetry_check(p, m, r, alpha, beta, config)?)),
    ));
    out
}
