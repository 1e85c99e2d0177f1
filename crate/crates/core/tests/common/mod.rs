//! Seeded property checks shared by the integration and acceptance targets.
#![allow(dead_code)]

use harmonic_sums::cli::sampling::{draw_two_factor, draw_wspec};
use harmonic_sums::identities::{DomainMode, Family};
use harmonic_sums::oracle::{OracleConfig, OracleEstimate};
use harmonic_sums::w_sums::{polylog_symmetry_check, w_sum, w_sum_via, Route, WSpec};
use harmonic_sums::Result;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

pub const TOL: f64 = 1e-8;
pub const TARGET: f64 = 1e-10;

/// Outcome of a batch of random draws: number checked and the failures.
#[derive(Debug, Default)]
pub struct Batch {
    pub checked: usize,
    pub failures: Vec<String>,
}

impl Batch {
    fn record(&mut self, label: String, closed: Result<f64>, oracle: Result<OracleEstimate>) {
        self.checked += 1;
        match (closed, oracle) {
            (Ok(c), Ok(o)) => {
                let diff = (c - o.value).abs();
                if !(diff <= TOL + o.error_bound) {
                    self.failures.push(format!(
                        "{label}: closed {c} oracle {} +- {:e}, diff {diff:e}",
                        o.value, o.error_bound
                    ));
                }
            }
            (c, o) => self.failures.push(format!("{label}: closed {c:?}, oracle {o:?}")),
        }
    }
}

fn rng(seed: u64, stream: u64) -> ChaCha8Rng {
    let mut r = ChaCha8Rng::seed_from_u64(seed);
    r.set_stream(stream);
    r
}

pub fn two_factor_batch(family: Family, draws: usize, seed: u64) -> Batch {
    let mut r = rng(seed, family as u64);
    let config = OracleConfig::default();
    let mut batch = Batch::default();
    for _ in 0..draws {
        let spec = draw_two_factor(&mut r, family);
        batch.record(spec.describe(), spec.evaluate(DomainMode::Strict), spec.oracle(TARGET, &config));
    }
    batch
}

pub fn wsum_batch(triple: (u32, u32, u32), draws: usize, seed: u64) -> Batch {
    let (l, p, m) = triple;
    let mut r = rng(seed, 100 + 10 * l as u64 + 5 * p as u64 + m as u64);
    let config = OracleConfig::default();
    let mut batch = Batch::default();
    for _ in 0..draws {
        let spec = draw_wspec(&mut r, triple);
        batch.record(spec.describe(), w_sum(spec), spec.oracle(TARGET, &config));
    }
    batch
}

/// Symmetry relation with both sides summed directly; the closed side is 0.
pub fn symmetry_batch(draws: usize, seed: u64) -> Batch {
    let mut r = rng(seed, 200);
    let config = OracleConfig::default();
    let mut batch = Batch::default();
    for _ in 0..draws {
        let p = r.gen_range(2..=3);
        let m = r.gen_range(2..=3);
        let rr: f64 = r.gen_range(0.5..4.0);
        let alpha = r.gen_range(0.05..rr + 0.9);
        let beta = r.gen_range(0.05..rr + 0.9);
        let label = format!("symmetry p={p} m={m} r={rr} alpha={alpha} beta={beta}");
        batch.record(label, Ok(0.0), polylog_symmetry_check(p, m, rr, alpha, beta, &config));
    }
    batch
}

/// Flat and paired expansions of random supported specs; failures above `tol`.
pub fn dual_route_batch(draws: usize, seed: u64, tol: f64) -> Batch {
    let mut r = rng(seed, 300);
    let mut batch = Batch::default();
    for _ in 0..draws {
        let triple = harmonic_sums::w_sums::SUPPORTED[r.gen_range(0..6)];
        let spec: WSpec = draw_wspec(&mut r, triple);
        batch.checked += 1;
        match (w_sum_via(spec, Route::Flat), w_sum_via(spec, Route::Paired)) {
            (Ok(a), Ok(b)) if (a - b).abs() <= tol => {}
            (a, b) => batch.failures.push(format!("{}: flat {a:?} paired {b:?}", spec.describe())),
        }
    }
    batch
}
