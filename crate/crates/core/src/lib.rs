//! Shifted harmonic numbers, closed forms for series built from them, and an
//! independent summation oracle for checking those closed forms.

// `!(x > 0.0)` is used on purpose so that NaN is rejected too.
#![allow(clippy::neg_cmp_op_on_partial_ord)]
#![allow(clippy::excessive_precision)]

pub mod beta_log_integrals;
pub mod cli;
pub mod const_combo;
pub mod error;
pub mod harmonic;
pub mod identities;
pub mod oracle;
pub mod special_fn;
pub mod w_sums;

pub use error::{Error, Result};
