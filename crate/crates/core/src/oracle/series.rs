//! Series whose terms involve shifted harmonic numbers `H^{(m)}_{n+beta}`.

use super::{DecayClass, HarmonicStream, SeriesTerm};
use crate::error::Result;

/// `sum_{n>=1} f(n, h)` where `h[m] = H^{(m)}_{n+beta}` for `m <= max_order`.
pub struct HarmonicSeries<F> {
    stream: HarmonicStream,
    decay: DecayClass,
    f: F,
}

impl<F: FnMut(u64, &[f64; 5]) -> f64> HarmonicSeries<F> {
    pub fn new(beta: f64, max_order: u32, decay: DecayClass, f: F) -> Result<Self> {
        Ok(HarmonicSeries {
            stream: HarmonicStream::new(beta, max_order)?,
            decay,
            f,
        })
    }
}

impl<F: FnMut(u64, &[f64; 5]) -> f64> SeriesTerm for HarmonicSeries<F> {
    fn decay(&self) -> DecayClass {
        self.decay
    }

    fn term(&mut self, n: u64) -> f64 {
        assert_eq!(n, self.stream.index() + 1, "harmonic series must be read in order");
        let h = *self.stream.advance();
        (self.f)(n, &h)
    }
}

/// Decay of `P(H_{n+a}) / ((n+r)(n+k))` with `P` of degree `log_degree` in
/// `H` and all higher-order harmonic numbers bounded.
pub fn power_log(power: f64, log_degree: u32) -> DecayClass {
    DecayClass::PowerLog { power, log_degree }
}
