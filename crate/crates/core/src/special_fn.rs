//! Real-argument special functions: digamma, polygamma, Riemann and Hurwitz
//! zeta, integer-order polylogarithms, and Gauss's closed form for the
//! digamma function at rational points.
//!
//! Hurwitz zeta is the single kernel. The argument is lifted by the
//! recurrence until it reaches `max(10, 2s)` and the remainder is closed with
//! Euler-Maclaurin through `B_20`. Digamma uses the same lifting together with
//! its asymptotic expansion, plus a Taylor expansion about the positive zero
//! so that the relative error stays small where `psi` vanishes.

use std::sync::OnceLock;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, ToPrimitive, Zero};

use crate::const_combo::{ConstAtom, ConstCombo, Rational};
use crate::error::{Error, Result};

/// Euler-Mascheroni constant.
pub const EULER_GAMMA: f64 = 0.577_215_664_901_532_860_606_512_090_082_4;
/// Catalan's constant.
pub const CATALAN: f64 = 0.915_965_594_177_219_015_054_603_514_932_4;

/// Positive zero of the digamma function, split into a double-double pair.
const DIGAMMA_ROOT_HI: f64 = 1.461_632_144_968_362_2;
const DIGAMMA_ROOT_LO: f64 = 9.549_995_429_965_697e-17;

const MAX_BERNOULLI: usize = 64;
const EM_ORDER: usize = 10;

struct Tables {
    bernoulli_exact: Vec<Rational>,
    bernoulli: Vec<f64>,
    /// `B_{2j} / (2j)!` for `j = 0..=EM_ORDER`.
    em_coeff: Vec<f64>,
}

fn tables() -> &'static Tables {
    static TABLES: OnceLock<Tables> = OnceLock::new();
    TABLES.get_or_init(|| {
        // B_m = -1/(m+1) * sum_{k<m} C(m+1, k) B_k
        let mut b: Vec<Rational> = Vec::with_capacity(MAX_BERNOULLI + 1);
        b.push(Rational::one());
        for m in 1..=MAX_BERNOULLI {
            let mut acc = Rational::zero();
            let mut binom = BigInt::one();
            for (k, bk) in b.iter().enumerate() {
                acc += Rational::from_integer(binom.clone()) * bk;
                binom = binom * BigInt::from(m + 1 - k) / BigInt::from(k + 1);
            }
            b.push(-acc / Rational::from_integer(BigInt::from(m + 1)));
        }
        let bernoulli: Vec<f64> = b.iter().map(rational_to_f64).collect();
        let mut em_coeff = Vec::with_capacity(EM_ORDER + 1);
        let mut fact = 1.0f64;
        for j in 0..=EM_ORDER {
            if j > 0 {
                fact *= ((2 * j - 1) * (2 * j)) as f64;
            }
            em_coeff.push(bernoulli[2 * j] / fact);
        }
        Tables {
            bernoulli_exact: b,
            bernoulli,
            em_coeff,
        }
    })
}

fn rational_to_f64(r: &Rational) -> f64 {
    r.to_f64().unwrap_or(f64::NAN)
}

/// Bernoulli number `B_n` (with `B_1 = -1/2`) as an exact rational, `n <= 64`.
pub fn bernoulli_exact(n: usize) -> Option<Rational> {
    tables().bernoulli_exact.get(n).cloned()
}

/// Bernoulli number `B_n` in floating point, `n <= 64`.
pub fn bernoulli(n: usize) -> Option<f64> {
    tables().bernoulli.get(n).copied()
}

fn is_nonpositive_integer(x: f64) -> bool {
    x <= 0.0 && x == x.floor()
}

/// Digamma function `psi(x)`.
pub fn digamma(x: f64) -> Result<f64> {
    if !x.is_finite() {
        return Err(Error::domain(format!("digamma argument {x} is not finite")));
    }
    if is_nonpositive_integer(x) {
        return Err(Error::pole(format!("digamma has a pole at x = {x}")));
    }
    if x < 0.0 {
        // psi(x) = psi(1 - x) - pi cot(pi x)
        let (s, c) = (std::f64::consts::PI * x).sin_cos();
        return Ok(digamma_positive(1.0 - x) - std::f64::consts::PI * c / s);
    }
    Ok(digamma_positive(x))
}

fn digamma_positive(x: f64) -> f64 {
    let delta = (x - DIGAMMA_ROOT_HI) - DIGAMMA_ROOT_LO;
    if delta.abs() < 0.25 {
        return digamma_root_series(delta);
    }
    let mut shift = 0.0;
    let mut y = x;
    let mut head = Vec::new();
    while y < 10.0 {
        head.push(1.0 / y);
        y += 1.0;
    }
    for v in head.iter().rev() {
        shift += v;
    }
    let inv2 = 1.0 / (y * y);
    let t = tables();
    let mut series = 0.0;
    let mut pow = inv2;
    for j in 1..=EM_ORDER {
        series += t.bernoulli[2 * j] / (2 * j) as f64 * pow;
        pow *= inv2;
    }
    y.ln() - 0.5 / y - series - shift
}

fn digamma_root_series(delta: f64) -> f64 {
    static COEFF: OnceLock<Vec<f64>> = OnceLock::new();
    let c = COEFF.get_or_init(|| {
        // psi(x0 + d) = sum_{n>=1} (-1)^{n+1} zeta(n+1, x0) d^n
        (1..=40)
            .map(|n| {
                let z = hurwitz_core((n + 1) as f64, DIGAMMA_ROOT_HI);
                if n % 2 == 1 {
                    z
                } else {
                    -z
                }
            })
            .collect()
    });
    let mut acc = 0.0;
    for coeff in c.iter().rev() {
        acc = (acc + coeff) * delta;
    }
    acc
}

/// Polygamma function `psi^(n)(x) = (-1)^{n+1} n! zeta(n+1, x)` for `n >= 1`.
pub fn polygamma(n: u32, x: f64) -> Result<f64> {
    if n == 0 {
        return digamma(x);
    }
    if !x.is_finite() {
        return Err(Error::domain(format!("polygamma argument {x} is not finite")));
    }
    if is_nonpositive_integer(x) {
        return Err(Error::pole(format!("polygamma has a pole at x = {x}")));
    }
    let mut fact = 1.0f64;
    for i in 2..=n {
        fact *= i as f64;
    }
    let z = hurwitz_zeta_int(n + 1, x)?;
    let sign = if n % 2 == 1 { 1.0 } else { -1.0 };
    let v = sign * fact * z;
    if !v.is_finite() {
        return Err(Error::Overflow(format!("polygamma({n}, {x}) overflows")));
    }
    Ok(v)
}

/// Hurwitz zeta `zeta(s, a) = sum_{k>=0} (k + a)^{-s}` for `s > 1`, `a > 0`.
pub fn hurwitz_zeta(s: f64, a: f64) -> Result<f64> {
    if !(s > 1.0) || !s.is_finite() {
        return Err(Error::domain(format!("hurwitz_zeta needs s > 1, got s = {s}")));
    }
    if !(a > 0.0) || !a.is_finite() {
        return Err(Error::domain(format!("hurwitz_zeta needs a > 0, got a = {a}")));
    }
    Ok(hurwitz_core(s, a))
}

/// Hurwitz zeta for integer `s >= 2` extended to negative non-integer `a`
/// through the defining series.
pub(crate) fn hurwitz_zeta_int(s: u32, a: f64) -> Result<f64> {
    if s < 2 {
        return Err(Error::domain(format!("integer Hurwitz zeta needs s >= 2, got {s}")));
    }
    if is_nonpositive_integer(a) {
        return Err(Error::pole(format!("zeta({s}, a) has a pole at a = {a}")));
    }
    if a > 0.0 {
        return Ok(hurwitz_core(s as f64, a));
    }
    let steps = (1.0 - a).ceil() as u64;
    let mut head = 0.0;
    for k in 0..steps {
        head += (a + k as f64).powi(-(s as i32));
    }
    Ok(head + hurwitz_core(s as f64, a + steps as f64))
}

fn hurwitz_core(s: f64, a: f64) -> f64 {
    let target = (2.0 * s).max(10.0);
    let lift = if a < target {
        (target - a).ceil() as u64
    } else {
        0
    };
    let mut sum = 0.0;
    for k in (0..lift).rev() {
        sum += (a + k as f64).powf(-s);
    }
    let x = a + lift as f64;
    let xs = x.powf(-s);
    let mut tail = x * xs / (s - 1.0) + 0.5 * xs;
    let coeff = &tables().em_coeff;
    let mut poch = s;
    let mut xpow = xs / x;
    let inv2 = 1.0 / (x * x);
    for (j, c) in coeff.iter().enumerate().skip(1) {
        tail += c * poch * xpow;
        let jj = j as f64;
        poch *= (s + 2.0 * jj - 1.0) * (s + 2.0 * jj);
        xpow *= inv2;
    }
    sum + tail
}

/// Riemann zeta `zeta(s)` for `s > 1`.
pub fn riemann_zeta(s: f64) -> Result<f64> {
    if !(s > 1.0) || !s.is_finite() {
        return Err(Error::domain(format!("riemann_zeta needs s > 1, got s = {s}")));
    }
    Ok(zeta_value(s))
}

fn zeta_value(s: f64) -> f64 {
    if s == s.floor() && s <= 64.0 {
        static CACHE: OnceLock<Vec<f64>> = OnceLock::new();
        let c = CACHE.get_or_init(|| {
            (0..=64)
                .map(|k| if k < 2 { f64::NAN } else { hurwitz_core(k as f64, 1.0) })
                .collect()
        });
        return c[s as usize];
    }
    hurwitz_core(s, 1.0)
}

/// `zeta(k)` for an integer `k >= 2`.
pub(crate) fn zeta_int(k: u32) -> f64 {
    zeta_value(k as f64)
}

/// `zeta(-n)` for `n >= 0`.
fn zeta_nonpositive(n: usize) -> f64 {
    if n == 0 {
        return -0.5;
    }
    let b = tables().bernoulli[n + 1];
    let v = b / (n + 1) as f64;
    if n % 2 == 0 {
        v
    } else {
        -v
    }
}

/// Polylogarithm `Li_p(x) = sum_{n>=1} x^n / n^p` for integer `p >= 1`.
pub fn polylog(p: u32, x: f64) -> Result<f64> {
    if p == 0 {
        return Err(Error::domain("polylog order must be at least 1"));
    }
    if !x.is_finite() {
        return Err(Error::domain(format!("polylog argument {x} is not finite")));
    }
    if x == 1.0 {
        if p >= 2 {
            return Ok(zeta_int(p));
        }
        return Err(Error::pole("Li_1 diverges at x = 1"));
    }
    if x.abs() >= 1.0 {
        return Err(Error::domain(format!("polylog needs |x| < 1, got x = {x}")));
    }
    Ok(polylog_inner(p, x))
}

fn polylog_inner(p: u32, x: f64) -> f64 {
    if p == 1 {
        return -(-x).ln_1p();
    }
    if x == 0.0 {
        return 0.0;
    }
    if x.abs() <= 0.75 {
        return polylog_direct(p, x);
    }
    if x > 0.0 {
        return polylog_near_one(p, x);
    }
    // Li_p(x) + Li_p(-x) = 2^{1-p} Li_p(x^2)
    2f64.powi(1 - p as i32) * polylog_inner(p, x * x) - polylog_inner(p, -x)
}

fn polylog_direct(p: u32, x: f64) -> f64 {
    let mut terms = Vec::with_capacity(160);
    let mut xn = x;
    let mut n = 1u32;
    loop {
        let t = xn / (n as f64).powi(p as i32);
        terms.push(t);
        if t.abs() < 1e-18 * terms[0].abs() || n > 400 {
            break;
        }
        n += 1;
        xn *= x;
    }
    terms.iter().rev().sum()
}

fn polylog_near_one(p: u32, x: f64) -> f64 {
    // Li_p(e^mu) = sum_{k != p-1} zeta(p-k) mu^k/k! + mu^{p-1}/(p-1)! (H_{p-1} - ln(-mu))
    let mu = x.ln();
    let p = p as usize;
    let mut sum = 0.0;
    let mut pow = 1.0; // mu^k / k!
    for k in 0..(p + 40) {
        if k > 0 {
            pow *= mu / k as f64;
        }
        if k + 1 == p {
            let h: f64 = (1..p).map(|j| 1.0 / j as f64).sum();
            sum += pow * (h - (-mu).ln());
        } else if k + 1 < p {
            sum += zeta_int((p - k) as u32) * pow;
        } else {
            sum += zeta_nonpositive(k - p) * pow;
        }
    }
    sum
}

/// A reduced rational argument `p/q` with `q >= 1`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct RationalArg {
    p: i64,
    q: i64,
}

impl RationalArg {
    pub fn new(p: i64, q: i64) -> Result<Self> {
        if q == 0 {
            return Err(Error::domain("denominator must be nonzero"));
        }
        let g = p.gcd(&q);
        let sign = if q < 0 { -1 } else { 1 };
        Ok(RationalArg {
            p: sign * p / g,
            q: sign * q / g,
        })
    }

    pub fn p(&self) -> i64 {
        self.p
    }

    pub fn q(&self) -> i64 {
        self.q
    }

    pub fn to_f64(&self) -> f64 {
        self.p as f64 / self.q as f64
    }
}

impl std::fmt::Display for RationalArg {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        if self.q == 1 {
            write!(f, "{}", self.p)
        } else {
            write!(f, "{}/{}", self.p, self.q)
        }
    }
}

/// Whether [`digamma_rational`] may return a numeric atom.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Exactness {
    Exact,
    AllowNumeric,
}

/// `psi(p/q) - psi(1)` as a constant combination.
///
/// Denominators 1 and 2 give exact combinations over `{1, ln2}`; any positive
/// argument is accepted there. Other denominators need `0 < p < q` and are
/// evaluated with Gauss's finite formula into a single numeric atom.
pub fn digamma_rational(arg: RationalArg, exactness: Exactness) -> Result<ConstCombo> {
    let (p, q) = (arg.p, arg.q);
    if p <= 0 {
        return Err(Error::domain(format!(
            "digamma_rational needs a positive argument, got {arg}"
        )));
    }
    match q {
        1 => {
            // psi(p) - psi(1) = H_{p-1}
            let mut h = Rational::zero();
            for j in 1..p {
                h += Rational::new(BigInt::one(), BigInt::from(j));
            }
            Ok(ConstCombo::rational(h))
        }
        2 => {
            // psi(1/2) - psi(1) = -2 ln 2, then psi(x + 1) = psi(x) + 1/x
            let mut c = ConstCombo::term(Rational::from_integer(BigInt::from(-2)), ConstAtom::Ln2);
            let mut shift = Rational::zero();
            for i in 0..(p - 1) / 2 {
                shift += Rational::new(BigInt::from(2), BigInt::from(2 * i + 1));
            }
            c = c + ConstCombo::rational(shift);
            Ok(c)
        }
        _ => {
            if exactness == Exactness::Exact {
                return Err(Error::UnsupportedDenominator {
                    den: q.to_string(),
                    supported: "1 and 2".into(),
                });
            }
            if p >= q {
                return Err(Error::domain(format!(
                    "Gauss's formula needs 0 < p < q, got {arg}"
                )));
            }
            let v = gauss_digamma(p, q);
            Ok(ConstCombo::atom(ConstAtom::numeric(
                format!("psi({arg})+gamma"),
                v,
            )))
        }
    }
}

/// `psi(p/q) + gamma` from Gauss's formula, `0 < p < q`.
fn gauss_digamma(p: i64, q: i64) -> f64 {
    use std::f64::consts::PI;
    let (pf, qf) = (p as f64, q as f64);
    let mut sum = 0.0;
    for k in 1..=(q - 1) / 2 {
        let kf = k as f64;
        let angle = 2.0 * PI * (k * p % q) as f64 / qf;
        sum += 2.0 * angle.cos() * (2.0 * (kf * PI / qf).sin()).ln();
    }
    let r = if q % 2 == 0 {
        if p % 2 == 0 {
            std::f64::consts::LN_2
        } else {
            -std::f64::consts::LN_2
        }
    } else {
        0.0
    };
    let cot = 1.0 / (pf * PI / qf).tan();
    sum + r - 0.5 * PI * cot - qf.ln()
}
