//! Roman numerals over the seven letters I V X L C D M.
//!
//! A letter followed by one of greater value subtracts, otherwise it adds.
//! Two parse modes exist: `Strict` accepts only the canonical subtractive
//! form (1..=3999), `Permissive` accepts any well-formed add/subtract
//! sequence, including long additive runs such as a hundred `M`s.

use num_traits::{ToPrimitive, Zero};

use crate::error::{Error, Result};
use crate::numeric::Integer;

/// Largest value the canonical subtractive style can express.
pub const CANONICAL_MAX: u32 = 3999;

/// Largest value the repetition style will render. Beyond this the output
/// would be more than a hundred thousand `M`s.
pub const REPETITION_MAX: u64 = 100_000_000;

const LETTERS: [(char, u32); 7] = [
    ('M', 1000),
    ('D', 500),
    ('C', 100),
    ('L', 50),
    ('X', 10),
    ('V', 5),
    ('I', 1),
];

const CANONICAL: [(&str, u32); 13] = [
    ("M", 1000),
    ("CM", 900),
    ("D", 500),
    ("CD", 400),
    ("C", 100),
    ("XC", 90),
    ("L", 50),
    ("XL", 40),
    ("X", 10),
    ("IX", 9),
    ("V", 5),
    ("IV", 4),
    ("I", 1),
];

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ParseMode {
    Strict,
    Permissive,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum RenderStyle {
    /// Standard subtractive form, 1..=3999.
    Canonical,
    /// Purely additive greedy form; every thousand is one more `M`.
    Repetition,
}

pub fn letter_value(c: char) -> Option<u32> {
    LETTERS.iter().find(|(l, _)| *l == c).map(|(_, v)| *v)
}

/// Parse a Roman numeral.
///
/// Permissive well-formedness: a subtracting letter must be the only
/// smaller letter in front of its larger partner (so `IIX` and `IVX` are
/// rejected) and the partner itself must add.
pub fn parse_roman(text: &str, mode: ParseMode) -> Result<Integer> {
    if text.is_empty() {
        return Err(Error::parse("empty Roman numeral"));
    }
    let values = text
        .chars()
        .enumerate()
        .map(|(i, c)| {
            letter_value(c).ok_or_else(|| {
                Error::parse(format!("{c:?} at position {i} is not a Roman letter (I V X L C D M)"))
            })
        })
        .collect::<Result<Vec<u32>>>()?;

    let mut total: u64 = 0;
    let mut i = 0;
    while i < values.len() {
        let v = values[i];
        match values.get(i + 1) {
            Some(&next) if v < next => {
                if i > 0 && values[i - 1] <= v {
                    return Err(Error::parse(format!(
                        "{text:?}: more than one letter subtracts from {}",
                        char_at(text, i + 1)
                    )));
                }
                if values.get(i + 2).is_some_and(|&after| next < after) {
                    return Err(Error::parse(format!(
                        "{text:?}: chained subtraction at position {}",
                        i + 1
                    )));
                }
                total += u64::from(next - v);
                i += 2;
            }
            _ => {
                total += u64::from(v);
                i += 1;
            }
        }
    }

    let value = Integer::from(total);
    if mode == ParseMode::Strict {
        let canonical = render_roman(&value, RenderStyle::Canonical)
            .map_err(|_| Error::parse(format!("{text:?} exceeds the canonical range 1..=3999")))?;
        if canonical != text {
            return Err(Error::parse(format!(
                "{text:?} is not canonical; the canonical form of {value} is {canonical:?}"
            )));
        }
    }
    Ok(value)
}

fn char_at(text: &str, i: usize) -> char {
    text.chars().nth(i).unwrap_or('?')
}

pub fn render_roman(n: &Integer, style: RenderStyle) -> Result<String> {
    if n <= &Integer::zero() {
        return Err(Error::range(format!("Roman numerals have no zero or negatives (got {n})")));
    }
    match style {
        RenderStyle::Canonical => {
            let v = n
                .to_u32()
                .filter(|v| *v <= CANONICAL_MAX)
                .ok_or_else(|| Error::range(format!("{n} exceeds the canonical ceiling {CANONICAL_MAX}; use repetition style")))?;
            Ok(greedy(u64::from(v), CANONICAL.iter().map(|(s, v)| (*s, *v))))
        }
        RenderStyle::Repetition => {
            let v = n
                .to_u64()
                .filter(|v| *v <= REPETITION_MAX)
                .ok_or_else(|| Error::range(format!("{n} exceeds the repetition-style limit {REPETITION_MAX}")))?;
            let additive = [("M", 1000), ("D", 500), ("C", 100), ("L", 50), ("X", 10), ("V", 5), ("I", 1)];
            Ok(greedy(v, additive.into_iter()))
        }
    }
}

/// Canonical form up to 3999, repetition style above.
pub fn render_roman_auto(n: &Integer) -> Result<String> {
    if n <= &Integer::from(CANONICAL_MAX) {
        render_roman(n, RenderStyle::Canonical)
    } else {
        render_roman(n, RenderStyle::Repetition)
    }
}

fn greedy<'a>(mut n: u64, table: impl Iterator<Item = (&'a str, u32)>) -> String {
    let mut out = String::new();
    for (sym, v) in table {
        let v = u64::from(v);
        let count = n / v;
        for _ in 0..count {
            out.push_str(sym);
        }
        n -= count * v;
    }
    out
}
