//! Acceptance criteria, one PASS/FAIL line each. Exits non-zero if any fails.

mod common;

use std::time::{Duration, Instant};

use harmonic_sums::beta_log_integrals::{log_moment, log_moment_closed, LogMomentQuery, CLOSED_PAIRS};
use harmonic_sums::cli::suite::{ln2_examples, quarter_shift_combo, quarter_shift_oracle};
use harmonic_sums::const_combo::{rat, ConstAtom, ConstCombo};
use harmonic_sums::harmonic::{shifted_harmonic, shifted_harmonic_exact};
use harmonic_sums::identities::{DomainMode, Family};
use harmonic_sums::oracle::{integrate_01, OracleConfig};
use harmonic_sums::w_sums::{
    classical_square_oracle, classical_square_sum, euler_shifted_oracle, euler_shifted_weight, SUPPORTED,
};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

const SEED: u64 = 20_240_601;

struct Outcome {
    ok: bool,
    detail: String,
}

fn outcome(failures: Vec<String>, summary: String) -> Outcome {
    if failures.is_empty() {
        Outcome { ok: true, detail: summary }
    } else {
        Outcome {
            ok: false,
            detail: format!("{summary}; {} failure(s): {}", failures.len(), failures.join(" | ")),
        }
    }
}

fn exact_values() -> Outcome {
    let ln2 = |c: (i64, i64)| ConstCombo::rational(rat(c.0, c.1)) + ConstCombo::term(rat(-2, 1), ConstAtom::Ln2);
    let z2 = |c: (i64, i64)| ConstCombo::rational(rat(c.0, c.1)) + ConstCombo::term(rat(-2, 1), ConstAtom::Zeta(2));
    let cases = [
        ((1, 2), 1, ln2((2, 1))),
        ((3, 2), 1, ln2((8, 3))),
        ((1, 2), 2, z2((4, 1))),
        ((3, 2), 2, z2((40, 9))),
        ((5, 2), 1, ln2((46, 15))),
    ];
    let mut failures = Vec::new();
    for ((p, q), m, expect) in cases {
        let label = format!("H^({m})_{{{p}/{q}}}");
        match shifted_harmonic_exact(&rat(p, q), m) {
            Ok(c) if c == expect => {
                let numeric = shifted_harmonic(p as f64 / q as f64, m).unwrap();
                let diff = (c.eval() - numeric).abs();
                if diff > 1e-12 {
                    failures.push(format!("{label}: combo {} numeric {numeric}", c.eval()));
                }
            }
            other => failures.push(format!("{label}: got {other:?}")),
        }
    }
    outcome(failures, "five exact values, structural and numeric".into())
}

fn ln2_block() -> Outcome {
    let config = OracleConfig {
        term_budget: 1_000_000,
        ..OracleConfig::default()
    };
    let mut failures = Vec::new();
    let mut max_terms = 0;
    for (label, spec, combo) in ln2_examples() {
        let closed = match spec.evaluate(DomainMode::Strict) {
            Ok(v) => v,
            Err(e) => {
                failures.push(format!("{label}: {e}"));
                continue;
            }
        };
        if (closed - combo.eval()).abs() > 1e-11 {
            failures.push(format!("{label}: closed {closed} printed {}", combo.eval()));
        }
        match spec.oracle(1e-10, &config) {
            Ok(est) => {
                max_terms = max_terms.max(est.terms_used);
                if (closed - est.value).abs() > 1e-8 + est.error_bound || est.error_bound > 1e-8 {
                    failures.push(format!("{label}: oracle {} +- {:e}", est.value, est.error_bound));
                }
            }
            Err(e) => failures.push(format!("{label}: oracle {e}")),
        }
    }
    outcome(failures, format!("four ln2 sums, at most {max_terms} terms"))
}

fn classical_formula() -> Outcome {
    let config = OracleConfig::default();
    let mut failures = Vec::new();
    for k in 2..=6 {
        let closed = classical_square_sum(k).unwrap();
        match classical_square_oracle(k, 1e-10, &config) {
            Ok(est) if (closed - est.value).abs() <= 1e-8 + est.error_bound => {}
            other => failures.push(format!("k={k}: closed {closed} oracle {other:?}")),
        }
    }
    outcome(failures, "k = 2..6".into())
}

fn quarter_shift() -> Outcome {
    let printed = quarter_shift_combo().eval();
    match quarter_shift_oracle(4, &OracleConfig::default()) {
        Ok(est) => {
            let diff = (printed - est.value).abs();
            let summary = format!(
                "printed value {printed}, direct sum {} +- {:.1e}, diff {diff:.3e}",
                est.value, est.error_bound
            );
            if diff <= 1e-7 + est.error_bound {
                outcome(Vec::new(), summary)
            } else {
                outcome(vec!["printed value does not match the series".into()], summary)
            }
        }
        Err(e) => outcome(vec![e.to_string()], "oracle failed".into()),
    }
}

fn euler_cases() -> Outcome {
    let config = OracleConfig::default();
    let mut failures = Vec::new();
    for weight in [3, 5, 7] {
        for alpha in [0.5, 1.0, 1.5, 2.3] {
            let closed = euler_shifted_weight(alpha, weight).unwrap();
            match euler_shifted_oracle(alpha, weight, 1e-10, &config) {
                Ok(est) if (closed - est.value).abs() <= 1e-8 + est.error_bound => {}
                other => failures.push(format!("w={weight} alpha={alpha}: closed {closed} oracle {other:?}")),
            }
        }
    }
    outcome(failures, "weights 3, 5, 7 at four shifts".into())
}

fn property_suites() -> Outcome {
    const DRAWS: usize = 200;
    let families = [
        Family::Linear,
        Family::LinearShift,
        Family::Order2,
        Family::Order2Shift,
        Family::SqPlusO2,
        Family::CubicCombo,
        Family::Square,
        Family::Order3,
    ];
    let mut failures = Vec::new();
    let mut checked = 0;
    let mut absorb = |name: String, b: common::Batch| {
        checked += b.checked;
        if b.checked < DRAWS {
            failures.push(format!("{name}: only {} draws", b.checked));
        }
        failures.extend(b.failures.into_iter().map(|f| format!("{name}: {f}")));
    };
    for family in families {
        absorb(family.to_string(), common::two_factor_batch(family, DRAWS, SEED));
    }
    for triple in SUPPORTED {
        absorb(format!("wsum {triple:?}"), common::wsum_batch(triple, DRAWS, SEED));
    }
    absorb("symmetry".into(), common::symmetry_batch(DRAWS, SEED));
    outcome(failures, format!("{checked} draws over 15 families"))
}

fn integrals() -> Outcome {
    let mut failures = Vec::new();
    for &alpha in &[0.7, 1.0, 2.5, 6.0] {
        for m in 0..=4u32 {
            for k in 0..=(4 - m) {
                let rec = log_moment(LogMomentQuery::new(alpha, m, k).unwrap()).unwrap();
                let quad = integrate_01(
                    |x, omx| x.powf(alpha - 1.0) * x.ln().powi(m as i32) * omx.ln().powi(k as i32),
                    1e-10,
                );
                match quad {
                    Ok(q) if (rec - q.value).abs() <= 1e-8 => {}
                    other => failures.push(format!("I({alpha},{m},{k}): recurrence {rec} quadrature {other:?}")),
                }
            }
        }
    }
    let mut rng = ChaCha8Rng::seed_from_u64(SEED);
    for _ in 0..50 {
        let alpha: f64 = rng.gen_range(0.05..12.0);
        for (m, k) in CLOSED_PAIRS {
            let rec = log_moment(LogMomentQuery::new(alpha, m, k).unwrap()).unwrap();
            let closed = log_moment_closed(alpha, m, k).unwrap();
            if (rec - closed).abs() > 1e-10 {
                failures.push(format!("I({alpha},{m},{k}): recurrence {rec} closed {closed}"));
            }
        }
    }
    outcome(failures, "quadrature grid and 50 shifts on the closed pairs".into())
}

fn dual_route() -> Outcome {
    let b = common::dual_route_batch(50, SEED, 1e-10);
    outcome(b.failures, format!("{} specs", b.checked))
}

fn main() {
    type Criterion = (&'static str, &'static str, Duration, fn() -> Outcome);
    let criteria: [Criterion; 8] = [
        ("AC1", "exact half-integer harmonic numbers", Duration::from_secs(1), exact_values),
        ("AC2", "ln2 example block", Duration::from_secs(30), ln2_block),
        ("AC3", "classical square-sum formula", Duration::from_secs(60), classical_formula),
        ("AC4", "quarter-shift example", Duration::from_secs(60), quarter_shift),
        ("AC5", "shifted Euler sums of odd weight", Duration::from_secs(600), euler_cases),
        ("AC6", "property suites", Duration::from_secs(600), property_suites),
        ("AC7", "integral suite", Duration::from_secs(600), integrals),
        ("AC8", "flat and paired expansions agree", Duration::from_secs(600), dual_route),
    ];
    let mut failed = 0;
    for (id, title, limit, check) in criteria {
        let start = Instant::now();
        let mut result = check();
        let elapsed = start.elapsed();
        if elapsed > limit {
            result.ok = false;
            result.detail = format!("{} (took {elapsed:.1?}, limit {limit:?})", result.detail);
        }
        let status = if result.ok { "PASS" } else { "FAIL" };
        if !result.ok {
            failed += 1;
        }
        println!("{status} {id} {title}: {} [{elapsed:.2?}]", result.detail);
    }
    if failed > 0 {
        println!("{failed} criterion(s) failed");
        std::process::exit(1);
    }
}
