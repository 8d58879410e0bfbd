//! Exact pivot types shared by every codec and by the evaluator.
//!
//! All cross-system conversion goes through [`Integer`]; all arithmetic in
//! the [`Value`] domain is over exact [`Rational`]s.

use std::fmt;
use std::str::FromStr;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{Signed, Zero};
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// Arbitrary-precision signed integer.
pub type Integer = BigInt;

/// Arbitrary-precision rational. Values built through `BigRational::new`
/// are kept in lowest terms with a positive denominator.
pub type Rational = BigRational;

/// The extended arithmetic domain.
///
/// * `Finite` is an ordinary exact rational.
/// * `Khahara` is the quantity with a zero denominator (infinity) in the
///   1150 CE rule set.
/// * `Unresolved(a)` is `a/0` left as written by the 628 CE rule set.
/// * `ZeroProduct(a)` is a product `a × 0` whose factor is kept so that a
///   later division by zero can cancel it. It displays as `0`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub enum Value {
    Finite(Rational),
    Khahara,
    Unresolved(Rational),
    ZeroProduct(Rational),
}

impl Value {
    pub fn zero() -> Self {
        Value::Finite(Rational::zero())
    }

    pub fn int(n: i64) -> Self {
        Value::Finite(Rational::from_integer(n.into()))
    }

    pub fn ratio(numer: i64, denom: i64) -> Self {
        Value::Finite(Rational::new(numer.into(), denom.into()))
    }

    pub fn is_finite(&self) -> bool {
        matches!(self, Value::Finite(_))
    }

    pub fn is_zero(&self) -> bool {
        matches!(self, Value::Finite(q) if q.is_zero())
    }

    pub fn as_finite(&self) -> Option<&Rational> {
        match self {
            Value::Finite(q) => Some(q),
            _ => None,
        }
    }

    /// Variant name, independent of payload.
    pub fn kind(&self) -> &'static str {
        match self {
            Value::Finite(_) => "finite",
            Value::Khahara => "khahara",
            Value::Unresolved(_) => "unresolved",
            Value::ZeroProduct(_) => "zero-product",
        }
    }
}

impl From<Rational> for Value {
    fn from(q: Rational) -> Self {
        Value::Finite(q)
    }
}

impl From<Integer> for Value {
    fn from(n: Integer) -> Self {
        Value::Finite(Rational::from_integer(n))
    }
}

/// Reduce a value to its canonical representative.
///
/// Finite payloads are gcd-reduced, a zero-product with factor 0 is plain
/// zero, everything else passes through.
pub fn normalize(v: &Value) -> Value {
    match v {
        Value::Finite(q) => Value::Finite(q.reduced()),
        Value::ZeroProduct(q) if q.is_zero() => Value::zero(),
        Value::ZeroProduct(q) => Value::ZeroProduct(q.reduced()),
        Value::Unresolved(q) => Value::Unresolved(q.clone()),
        Value::Khahara => Value::Khahara,
    }
}

impl fmt::Display for Value {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Value::Finite(q) => write!(f, "{}", format_rational(q)),
            Value::Khahara => f.write_str("khahara (∞)"),
            Value::Unresolved(q) if q.is_integer() => {
                write!(f, "{}/0 (unresolved)", q.numer())
            }
            Value::Unresolved(q) => write!(f, "({})/0 (unresolved)", format_rational(q)),
            Value::ZeroProduct(_) => f.write_str("0"),
        }
    }
}

/// `n` for integers, `n/d` otherwise.
pub fn format_rational(q: &Rational) -> String {
    let q = q.reduced();
    if q.is_integer() {
        q.numer().to_string()
    } else {
        format!("{}/{}", q.numer(), q.denom())
    }
}

/// Parse an optionally signed run of ASCII decimal digits.
pub fn parse_decimal_integer(text: &str) -> Result<Integer> {
    let digits = text.strip_prefix(['-', '+']).unwrap_or(text);
    if digits.is_empty() || !digits.bytes().all(|b| b.is_ascii_digit()) {
        return Err(Error::parse(format!("not a decimal integer: {text:?}")));
    }
    Integer::from_str(text).map_err(|e| Error::parse(format!("{text:?}: {e}")))
}

/// Parse a decimal literal such as `7`, `-3`, `0.001`, `.1` or `1/2` into
/// an exact rational.
pub fn parse_rational(text: &str) -> Result<Rational> {
    let text = text.trim();
    if let Some((n, d)) = text.split_once('/') {
        let n = parse_rational(n)?;
        let d = parse_rational(d)?;
        if d.is_zero() {
            return Err(Error::parse(format!("zero denominator in literal {text:?}")));
        }
        return Ok(n / d);
    }
    let (negative, body) = match text.strip_prefix('-') {
        Some(rest) => (true, rest),
        None => (false, text.strip_prefix('+').unwrap_or(text)),
    };
    let (whole, frac) = body.split_once('.').unwrap_or((body, ""));
    let well_formed = !(whole.is_empty() && frac.is_empty())
        && whole.bytes().all(|b| b.is_ascii_digit())
        && frac.bytes().all(|b| b.is_ascii_digit());
    if !well_formed {
        return Err(Error::parse(format!("not a decimal literal: {text:?}")));
    }
    let mut digits = String::with_capacity(whole.len() + frac.len());
    digits.push_str(whole);
    digits.push_str(frac);
    let numer = Integer::from_str(&digits).map_err(|e| Error::parse(e.to_string()))?;
    let denom = num_traits::pow(Integer::from(10), frac.len());
    let q = Rational::new(numer, denom);
    Ok(if negative { -q } else { q })
}

/// Selects which arithmetic semantics the evaluator applies.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum RuleSet {
    /// Brahmagupta, 628 CE: `a/0` left unresolved, `0/0 = 0`.
    Brahmagupta628,
    /// Bhaskara II, 1150 CE: `a/0` is khahara, `(a×0)/0 = a`.
    Bhaskara1150,
    /// Exact rational arithmetic; division by zero is an error.
    Modern,
}

impl RuleSet {
    pub const ALL: [RuleSet; 3] = [RuleSet::Brahmagupta628, RuleSet::Bhaskara1150, RuleSet::Modern];

    pub fn name(self) -> &'static str {
        match self {
            RuleSet::Brahmagupta628 => "brahmagupta",
            RuleSet::Bhaskara1150 => "bhaskara",
            RuleSet::Modern => "modern",
        }
    }
}

impl fmt::Display for RuleSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for RuleSet {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s.to_ascii_lowercase().as_str() {
            "brahmagupta" | "brahmagupta628" => Ok(RuleSet::Brahmagupta628),
            "bhaskara" | "bhaskara1150" => Ok(RuleSet::Bhaskara1150),
            "modern" => Ok(RuleSet::Modern),
            other => Err(Error::parse(format!("unknown rule set {other:?}"))),
        }
    }
}

/// The numeral systems the conversion facade understands.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub enum NumeralSystem {
    Roman,
    Greek,
    /// Positional numerals without a zero digit.
    GapPositional(Integer),
    Aryabhata,
    Brahmi,
    /// Plain decimal digits; the reference system.
    HinduArabic,
}

impl NumeralSystem {
    pub const DEFAULT_GAP_BASE: u32 = 60;

    /// Gap-positional system with a validated base.
    pub fn gap(base: impl Into<Integer>) -> Result<Self> {
        let base = base.into();
        check_base(&base)?;
        Ok(NumeralSystem::GapPositional(base))
    }

    /// Parse a system name; `base` is only used for the gap-positional
    /// system.
    pub fn from_name(name: &str, base: Integer) -> Result<Self> {
        match name.to_ascii_lowercase().as_str() {
            "roman" => Ok(NumeralSystem::Roman),
            "greek" => Ok(NumeralSystem::Greek),
            "gap" | "gap-positional" | "babylonian" | "sexagesimal" => NumeralSystem::gap(base),
            "aryabhata" => Ok(NumeralSystem::Aryabhata),
            "brahmi" => Ok(NumeralSystem::Brahmi),
            "decimal" | "hindu-arabic" | "hinduarabic" => Ok(NumeralSystem::HinduArabic),
            other => Err(Error::parse(format!("unknown numeral system {other:?}"))),
        }
    }

    pub fn name(&self) -> &'static str {
        match self {
            NumeralSystem::Roman => "roman",
            NumeralSystem::Greek => "greek",
            NumeralSystem::GapPositional(_) => "gap",
            NumeralSystem::Aryabhata => "aryabhata",
            NumeralSystem::Brahmi => "brahmi",
            NumeralSystem::HinduArabic => "decimal",
        }
    }
}

impl fmt::Display for NumeralSystem {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            NumeralSystem::GapPositional(b) => write!(f, "gap(base={b})"),
            other => f.write_str(other.name()),
        }
    }
}

pub(crate) fn check_base(base: &Integer) -> Result<()> {
    if *base < Integer::from(2) {
        return Err(Error::range(format!("base must be at least 2, got {base}")));
    }
    Ok(())
}

/// Exact integer `k`-th root if `n` is a perfect `k`-th power.
pub(crate) fn exact_root(n: &Integer, k: u32) -> Option<Integer> {
    if n.is_negative() {
        if k.is_multiple_of(2) {
            return None;
        }
        return exact_root(&-n, k).map(|r| -r);
    }
    let r = n.nth_root(k);
    if num_traits::pow(r.clone(), k as usize) == *n {
        Some(r)
    } else {
        None
    }
}
