//! Positional numerals with no zero digit.
//!
//! An empty place can only be shown by a medial gap, and a gap never leads
//! or trails. So the width of a gap and the number of trailing empty places
//! are both lost when writing, and reading a numeral back yields a set of
//! candidate integers rather than one.
//!
//! Text form: whitespace-separated decimal digit values with `_` for a gap,
//! e.g. `1 _ 23 45` in base 60.

use std::collections::BTreeSet;
use std::fmt;

use num_integer::Integer as _;
use num_traits::{ToPrimitive, Zero};

use crate::error::{Error, Result};
use crate::numeric::{check_base, parse_decimal_integer, Integer};

#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub enum Slot {
    Digit(Integer),
    Gap,
}

#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct GapNumeral {
    base: Integer,
    slots: Vec<Slot>,
}

impl GapNumeral {
    /// Validate and build a numeral from its slots.
    pub fn new(base: Integer, slots: Vec<Slot>) -> Result<Self> {
        check_base(&base)?;
        let (first, last) = match (slots.first(), slots.last()) {
            (Some(f), Some(l)) => (f, l),
            _ => return Err(Error::parse("empty gap-positional numeral")),
        };
        if *first == Slot::Gap {
            return Err(Error::parse("a gap cannot lead a numeral"));
        }
        if *last == Slot::Gap {
            return Err(Error::parse("a gap cannot end a numeral"));
        }
        for pair in slots.windows(2) {
            if pair[0] == Slot::Gap && pair[1] == Slot::Gap {
                return Err(Error::parse("adjacent gaps; one gap already stands for a run of empty places"));
            }
        }
        for slot in &slots {
            if let Slot::Digit(d) = slot {
                if d.is_zero() || d.sign() == num_bigint::Sign::Minus {
                    return Err(Error::parse(format!("digit {d} is not allowed; there is no zero digit")));
                }
                if *d >= base {
                    return Err(Error::parse(format!("digit {d} is not below base {base}")));
                }
            }
        }
        Ok(GapNumeral { base, slots })
    }

    pub fn base(&self) -> &Integer {
        &self.base
    }

    pub fn slots(&self) -> &[Slot] {
        &self.slots
    }

    pub fn gap_count(&self) -> usize {
        self.slots.iter().filter(|s| **s == Slot::Gap).count()
    }

    /// Digits only, gaps dropped.
    pub fn digits(&self) -> impl Iterator<Item = &Integer> {
        self.slots.iter().filter_map(|s| match s {
            Slot::Digit(d) => Some(d),
            Slot::Gap => None,
        })
    }
}

impl fmt::Display for GapNumeral {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (i, slot) in self.slots.iter().enumerate() {
            if i > 0 {
                f.write_str(" ")?;
            }
            match slot {
                Slot::Digit(d) => write!(f, "{d}")?,
                Slot::Gap => f.write_str("_")?,
            }
        }
        Ok(())
    }
}

/// Bounds that make the set of readings finite.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct InterpretationBounds {
    /// Largest number of empty places a single gap may stand for (≥ 1).
    pub max_gap_width: u32,
    /// Largest number of unwritten trailing empty places.
    pub max_trailing: u32,
}

impl Default for InterpretationBounds {
    fn default() -> Self {
        InterpretationBounds { max_gap_width: 1, max_trailing: 1 }
    }
}

impl InterpretationBounds {
    pub fn new(max_gap_width: u32, max_trailing: u32) -> Result<Self> {
        if max_gap_width == 0 {
            return Err(Error::range("max_gap_width must be at least 1"));
        }
        Ok(InterpretationBounds { max_gap_width, max_trailing })
    }

    /// Upper bound on the number of readings of `n`.
    pub fn max_readings(&self, n: &GapNumeral) -> Integer {
        num_traits::pow(Integer::from(self.max_gap_width), n.gap_count()) * Integer::from(self.max_trailing + 1)
    }
}

/// Sorted, deduplicated integer readings of a numeral.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct InterpretationSet {
    pub values: Vec<Integer>,
}

impl InterpretationSet {
    pub fn len(&self) -> usize {
        self.values.len()
    }

    pub fn is_empty(&self) -> bool {
        self.values.is_empty()
    }

    pub fn contains(&self, n: &Integer) -> bool {
        self.values.binary_search(n).is_ok()
    }
}

pub fn parse_gap(tokens: &str, base: &Integer) -> Result<GapNumeral> {
    let slots = tokens
        .split_whitespace()
        .map(|tok| match tok {
            "_" => Ok(Slot::Gap),
            digits => parse_decimal_integer(digits)
                .map(Slot::Digit)
                .map_err(|_| Error::parse(format!("{tok:?} is neither a digit value nor \"_\""))),
        })
        .collect::<Result<Vec<_>>>()?;
    GapNumeral::new(base.clone(), slots)
}

/// Every integer the numeral could denote within `bounds`.
pub fn interpretations(n: &GapNumeral, bounds: &InterpretationBounds) -> InterpretationSet {
    // Evaluate slot by slot, carrying every partial value reached so far.
    let mut partials: Vec<Integer> = vec![Integer::zero()];
    let gap_scales: Vec<Integer> =
        (1..=bounds.max_gap_width).map(|w| num_traits::pow(n.base.clone(), w as usize)).collect();
    for slot in &n.slots {
        partials = match slot {
            Slot::Digit(d) => partials.into_iter().map(|p| p * &n.base + d).collect(),
            Slot::Gap => partials.iter().flat_map(|p| gap_scales.iter().map(move |s| p * s)).collect(),
        };
    }
    let mut out = BTreeSet::new();
    for p in partials {
        let mut v = p;
        out.insert(v.clone());
        for _ in 0..bounds.max_trailing {
            v *= &n.base;
            out.insert(v.clone());
        }
    }
    InterpretationSet { values: out.into_iter().collect() }
}

/// Lossy encoding of `n`: medial zero runs become one gap each, trailing
/// zero places are dropped and their count is returned as `lost_scale`.
pub fn render_gap(n: &Integer, base: &Integer) -> Result<(GapNumeral, Integer)> {
    check_base(base)?;
    if *n <= Integer::zero() {
        return Err(Error::range(format!("positional numerals without zero cannot write {n}")));
    }
    let mut digits = Vec::new();
    let mut rest = n.clone();
    while !rest.is_zero() {
        let (q, r) = rest.div_rem(base);
        digits.push(r);
        rest = q;
    }
    let lost = digits.iter().take_while(|d| d.is_zero()).count();
    let mut slots = Vec::new();
    for d in digits.into_iter().skip(lost).rev() {
        if d.is_zero() {
            if slots.last() != Some(&Slot::Gap) {
                slots.push(Slot::Gap);
            }
        } else {
            slots.push(Slot::Digit(d));
        }
    }
    Ok((GapNumeral { base: base.clone(), slots }, Integer::from(lost)))
}

/// True when `render_gap` loses nothing for `n`: no trailing empty places
/// and every medial run is a single place.
pub fn is_lossless(n: &Integer, base: &Integer) -> bool {
    match render_gap(n, base) {
        Ok((numeral, lost)) => {
            lost.is_zero() && interpretations(&numeral, &InterpretationBounds { max_gap_width: 1, max_trailing: 0 }).contains(n)
        }
        Err(_) => false,
    }
}

/// Split a sexagesimal digit into its tens-wedge and unit-wedge counts.
pub fn digit_decompose(d: &Integer) -> Result<(Integer, Integer)> {
    match d.to_u32() {
        Some(v @ 1..=59) => Ok((Integer::from(v / 10), Integer::from(v % 10))),
        _ => Err(Error::range(format!("{d} is not a single base-60 digit (1..=59)"))),
    }
}

impl Slot {
    pub fn digit(d: impl Into<Integer>) -> Self {
        Slot::Digit(d.into())
    }
}
