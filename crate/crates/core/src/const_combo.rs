//! Exact rational-linear combinations of named constants.
//!
//! The basis `{1, ln 2, pi, G, zeta(k)}` is treated as linearly independent;
//! no rewriting between atoms is attempted, so `zeta(2)` and `pi` stay
//! separate. Values that have no basis representation travel as `Numeric`
//! atoms carrying their floating-point value.

use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, AddAssign, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};
use serde_json::{json, Value};

use crate::error::{Error, Result};
use crate::special_fn::{self, CATALAN};

pub type Rational = BigRational;

/// Shorthand for the rational `n/d`.
pub fn rat(n: i64, d: i64) -> Rational {
    Rational::new(BigInt::from(n), BigInt::from(d))
}

/// Basis constants, declared in canonical order.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum ConstAtom {
    One,
    Ln2,
    Pi,
    Catalan,
    /// `zeta(k)`, `k >= 2`.
    Zeta(u32),
    /// A constant outside the basis, identified by name; the value is stored
    /// as IEEE bits so that equality stays structural.
    Numeric { id: String, bits: u64 },
}

impl ConstAtom {
    pub fn zeta(k: u32) -> Result<Self> {
        if k < 2 {
            return Err(Error::domain(format!("zeta({k}) is not a basis constant")));
        }
        Ok(ConstAtom::Zeta(k))
    }

    pub fn numeric(id: impl Into<String>, value: f64) -> Self {
        ConstAtom::Numeric {
            id: id.into(),
            bits: value.to_bits(),
        }
    }

    pub fn value(&self) -> f64 {
        match self {
            ConstAtom::One => 1.0,
            ConstAtom::Ln2 => std::f64::consts::LN_2,
            ConstAtom::Pi => std::f64::consts::PI,
            ConstAtom::Catalan => CATALAN,
            ConstAtom::Zeta(k) => special_fn::zeta_int(*k),
            ConstAtom::Numeric { bits, .. } => f64::from_bits(*bits),
        }
    }

    /// Key used in the JSON rendering.
    pub fn key(&self) -> String {
        match self {
            ConstAtom::One => "one".into(),
            ConstAtom::Ln2 => "ln2".into(),
            ConstAtom::Pi => "pi".into(),
            ConstAtom::Catalan => "catalan".into(),
            ConstAtom::Zeta(k) => format!("zeta{k}"),
            ConstAtom::Numeric { id, .. } => format!("numeric:{id}"),
        }
    }

    fn symbol(&self) -> String {
        match self {
            ConstAtom::One => "1".into(),
            ConstAtom::Ln2 => "ln2".into(),
            ConstAtom::Pi => "π".into(),
            ConstAtom::Catalan => "G".into(),
            ConstAtom::Zeta(k) => format!("ζ({k})"),
            ConstAtom::Numeric { id, .. } => format!("[{id}]"),
        }
    }
}

/// A finite map from atoms to nonzero rational coefficients.
#[derive(Debug, Clone, PartialEq, Eq, Default, Hash)]
pub struct ConstCombo {
    terms: BTreeMap<ConstAtom, Rational>,
}

impl ConstCombo {
    pub fn zero() -> Self {
        ConstCombo::default()
    }

    pub fn rational(c: Rational) -> Self {
        ConstCombo::term(c, ConstAtom::One)
    }

    pub fn integer(n: i64) -> Self {
        ConstCombo::rational(Rational::from_integer(BigInt::from(n)))
    }

    pub fn atom(a: ConstAtom) -> Self {
        ConstCombo::term(Rational::one(), a)
    }

    pub fn term(c: Rational, a: ConstAtom) -> Self {
        let mut terms = BTreeMap::new();
        if !c.is_zero() {
            terms.insert(a, c);
        }
        ConstCombo { terms }
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn coeff(&self, a: &ConstAtom) -> Rational {
        self.terms.get(a).cloned().unwrap_or_else(Rational::zero)
    }

    /// Terms in canonical atom order.
    pub fn terms(&self) -> impl Iterator<Item = (&ConstAtom, &Rational)> {
        self.terms.iter()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn eval(&self) -> f64 {
        // add the smaller contributions first
        let mut parts: Vec<f64> = self
            .terms
            .iter()
            .map(|(a, c)| rational_value(c) * a.value())
            .collect();
        parts.sort_by(|x, y| x.abs().total_cmp(&y.abs()));
        parts.iter().sum()
    }

    fn add_term(&mut self, a: &ConstAtom, c: &Rational) {
        if c.is_zero() {
            return;
        }
        let entry = self.terms.entry(a.clone()).or_insert_with(Rational::zero);
        *entry += c;
        if entry.is_zero() {
            self.terms.remove(a);
        }
    }

    pub fn scale(&self, c: &Rational) -> Self {
        if c.is_zero() {
            return ConstCombo::zero();
        }
        ConstCombo {
            terms: self
                .terms
                .iter()
                .map(|(a, v)| (a.clone(), v * c))
                .collect(),
        }
    }

    /// JSON rendering: `[{"atom": "zeta2", "num": -2, "den": 1}, ...]`.
    ///
    /// Coefficients that do not fit in 64 bits are written as decimal
    /// strings. Numeric atoms carry an extra `value` field.
    pub fn to_json(&self) -> Value {
        Value::Array(
            self.terms
                .iter()
                .map(|(a, c)| {
                    let mut obj = json!({
                        "atom": a.key(),
                        "num": big_to_json(c.numer()),
                        "den": big_to_json(c.denom()),
                    });
                    if let ConstAtom::Numeric { bits, .. } = a {
                        obj["value"] = json!(f64::from_bits(*bits));
                    }
                    obj
                })
                .collect(),
        )
    }

    pub fn from_json(v: &Value) -> Result<Self> {
        let items = v
            .as_array()
            .ok_or_else(|| Error::Parse("combination must be a JSON array".into()))?;
        let mut out = ConstCombo::zero();
        for item in items {
            let key = item["atom"]
                .as_str()
                .ok_or_else(|| Error::Parse("term is missing \"atom\"".into()))?;
            let num = big_from_json(&item["num"])?;
            let den = big_from_json(&item["den"])?;
            if den.is_zero() {
                return Err(Error::Parse("zero denominator".into()));
            }
            let atom = match key {
                "one" => ConstAtom::One,
                "ln2" => ConstAtom::Ln2,
                "pi" => ConstAtom::Pi,
                "catalan" => ConstAtom::Catalan,
                _ => {
                    if let Some(k) = key.strip_prefix("zeta") {
                        let k: u32 = k
                            .parse()
                            .map_err(|_| Error::Parse(format!("bad atom {key}")))?;
                        ConstAtom::zeta(k)?
                    } else if let Some(id) = key.strip_prefix("numeric:") {
                        let value = item["value"].as_f64().ok_or_else(|| {
                            Error::Parse(format!("numeric atom {id} has no value"))
                        })?;
                        ConstAtom::numeric(id, value)
                    } else {
                        return Err(Error::Parse(format!("unknown atom {key}")));
                    }
                }
            };
            out.add_term(&atom, &Rational::new(num, den));
        }
        Ok(out)
    }
}

fn rational_value(c: &Rational) -> f64 {
    if let (Some(n), Some(d)) = (c.numer().to_f64(), c.denom().to_f64()) {
        if n.is_finite() && d.is_finite() && d != 0.0 {
            return n / d;
        }
    }
    c.to_f64().unwrap_or(f64::NAN)
}

fn big_to_json(b: &BigInt) -> Value {
    match b.to_i64() {
        Some(v) => json!(v),
        None => json!(b.to_string()),
    }
}

fn big_from_json(v: &Value) -> Result<BigInt> {
    if let Some(i) = v.as_i64() {
        return Ok(BigInt::from(i));
    }
    if let Some(s) = v.as_str() {
        return s
            .parse()
            .map_err(|_| Error::Parse(format!("bad integer {s}")));
    }
    Err(Error::Parse(format!("expected an integer, got {v}")))
}

pub fn combo_add(a: &ConstCombo, b: &ConstCombo) -> ConstCombo {
    let mut out = a.clone();
    for (atom, c) in b.terms.iter() {
        out.add_term(atom, c);
    }
    out
}

pub fn combo_scale(c: &Rational, a: &ConstCombo) -> ConstCombo {
    a.scale(c)
}

pub fn combo_eval(a: &ConstCombo) -> f64 {
    a.eval()
}

impl Add for ConstCombo {
    type Output = ConstCombo;
    fn add(self, rhs: ConstCombo) -> ConstCombo {
        combo_add(&self, &rhs)
    }
}

impl Add<&ConstCombo> for &ConstCombo {
    type Output = ConstCombo;
    fn add(self, rhs: &ConstCombo) -> ConstCombo {
        combo_add(self, rhs)
    }
}

impl AddAssign<&ConstCombo> for ConstCombo {
    fn add_assign(&mut self, rhs: &ConstCombo) {
        for (atom, c) in rhs.terms.iter() {
            self.add_term(atom, c);
        }
    }
}

impl Neg for ConstCombo {
    type Output = ConstCombo;
    fn neg(self) -> ConstCombo {
        self.scale(&-Rational::one())
    }
}

impl Sub for ConstCombo {
    type Output = ConstCombo;
    fn sub(self, rhs: ConstCombo) -> ConstCombo {
        combo_add(&self, &-rhs)
    }
}

impl Mul<&Rational> for &ConstCombo {
    type Output = ConstCombo;
    fn mul(self, rhs: &Rational) -> ConstCombo {
        self.scale(rhs)
    }
}

impl fmt::Display for ConstCombo {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        for (i, (atom, c)) in self.terms.iter().enumerate() {
            let neg = c.is_negative();
            match (i, neg) {
                (0, true) => write!(f, "-")?,
                (0, false) => {}
                (_, true) => write!(f, " - ")?,
                (_, false) => write!(f, " + ")?,
            }
            let mag = c.abs();
            if *atom == ConstAtom::One {
                write!(f, "{mag}")?;
            } else if mag.is_one() {
                write!(f, "{}", atom.symbol())?;
            } else {
                write!(f, "{mag}·{}", atom.symbol())?;
            }
        }
        Ok(())
    }
}
