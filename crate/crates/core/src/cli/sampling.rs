//! Random admissible parameters for the property suites.
//!
//! Shifts are either half-integers or generic reals, and always sit at least
//! `0.1` above the largest integer the family requires them to exceed.

use rand::Rng;

use crate::identities::{Family, TwoFactorSpec};
use crate::w_sums::{WSpec, SUPPORTED};

const ALPHA_MAX: f64 = 12.0;
const MAX_K: u32 = 5;

/// A shift in `(floor + 0.1, ceiling)`, a half-integer half of the time.
pub fn draw_alpha<R: Rng>(rng: &mut R, floor: f64, ceiling: f64) -> f64 {
    let lo = floor + 0.1;
    let hi = ceiling.max(lo + 1.0);
    if rng.gen_bool(0.5) {
        let first = (lo - 0.5).ceil() as i64;
        let last = (hi - 0.5).floor() as i64;
        if last >= first {
            return rng.gen_range(first..=last) as f64 + 0.5;
        }
    }
    rng.gen_range(lo..hi)
}

fn ordered_pair<R: Rng>(rng: &mut R) -> (u32, u32) {
    let k = rng.gen_range(1..=MAX_K);
    (rng.gen_range(0..k), k)
}

pub fn draw_two_factor<R: Rng>(rng: &mut R, family: Family) -> TwoFactorSpec {
    match family {
        Family::LinearBase | Family::Order2Base => {
            let k = rng.gen_range(0..=MAX_K);
            TwoFactorSpec::new(family, draw_alpha(rng, k as f64, ALPHA_MAX), 0, k)
        }
        Family::Linear | Family::LinearShift => {
            let r = rng.gen_range(0..=MAX_K);
            let mut k = rng.gen_range(0..MAX_K);
            if k >= r {
                k += 1;
            }
            let m = if family == Family::LinearShift { rng.gen_range(0..=3) } else { 0 };
            let alpha = draw_alpha(rng, k.max(r) as f64, ALPHA_MAX);
            TwoFactorSpec::new(family, alpha, r, k).with_shift(m)
        }
        Family::WeightedTail => {
            let (r, k) = ordered_pair(rng);
            let p = rng.gen_range(2..=4);
            TwoFactorSpec::new(family, draw_alpha(rng, k as f64, ALPHA_MAX), r, k).with_power(p)
        }
        _ => {
            let (r, k) = ordered_pair(rng);
            let m = if family.uses_shift() { rng.gen_range(0..=3) } else { 0 };
            TwoFactorSpec::new(family, draw_alpha(rng, k as f64, ALPHA_MAX), r, k).with_shift(m)
        }
    }
}

/// A supported spec with the given `(l, p, m)`.
pub fn draw_wspec<R: Rng>(rng: &mut R, triple: (u32, u32, u32)) -> WSpec {
    debug_assert!(SUPPORTED.contains(&triple));
    let (l, p, m) = triple;
    let (k, r) = if p == 0 {
        (rng.gen_range(2..=MAX_K), rng.gen_range(0..=3))
    } else {
        (rng.gen_range(1..=MAX_K), 0)
    };
    let floor = (k + r) as f64;
    WSpec::new(l, p, m, k, r, draw_alpha(rng, floor, floor + 8.0))
}
