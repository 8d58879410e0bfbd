//! Ionian (alphabetic) Greek numerals.
//!
//! Each letter carries a fixed value and a numeral's value is the plain sum
//! of its letters. The myriad `μ` (10000) is the ceiling. Because `μ` is the
//! myriad here, there is no single letter for 40; it is written `λι`.
//! Thousands are the units letters preceded by the lower numeral sign `͵`.
//!
//! Input is either Unicode Greek (`ρια`) or `+`-joined ASCII letter names
//! (`rho+iota+alpha`, thousands as `,alpha`).

use std::fmt;
use std::sync::LazyLock;

use num_traits::{ToPrimitive, Zero};
use serde::Deserialize;

use crate::error::{Error, Result};
use crate::numeric::Integer;

pub const MYRIAD: u32 = 10_000;

const TABLE_JSON: &str = include_str!("../data/greek.json");

#[derive(Debug, Deserialize)]
struct TableFile {
    thousands_sign: String,
    letters: Vec<LetterEntry>,
}

#[derive(Debug, Clone, Deserialize)]
struct LetterEntry {
    name: String,
    glyph: String,
    value: u32,
    #[serde(default)]
    aliases: Vec<String>,
}

/// One numeral token: a letter, or a units letter marked as thousands.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GreekToken {
    pub name: String,
    pub glyph: String,
    pub value: u32,
}

#[derive(Debug)]
pub struct GreekTable {
    thousands_sign: char,
    letters: Vec<LetterEntry>,
    /// All tokens (letters plus thousands forms), strictly decreasing value.
    tokens: Vec<GreekToken>,
}

static TABLE: LazyLock<GreekTable> = LazyLock::new(|| {
    let file: TableFile = serde_json::from_str(TABLE_JSON).expect("bundled Greek table is valid JSON");
    GreekTable::from_file(file)
});

pub fn table() -> &'static GreekTable {
    &TABLE
}

impl GreekTable {
    fn from_file(file: TableFile) -> Self {
        let thousands_sign = file.thousands_sign.chars().next().expect("thousands sign");
        let mut tokens: Vec<GreekToken> = file
            .letters
            .iter()
            .map(|l| GreekToken { name: l.name.clone(), glyph: l.glyph.clone(), value: l.value })
            .collect();
        for l in file.letters.iter().filter(|l| l.value < 10) {
            tokens.push(GreekToken {
                name: format!(",{}", l.name),
                glyph: format!("{thousands_sign}{}", l.glyph),
                value: l.value * 1000,
            });
        }
        tokens.sort_by_key(|t| std::cmp::Reverse(t.value));
        GreekTable { thousands_sign, letters: file.letters, tokens }
    }

    /// Every token, highest value first.
    pub fn tokens(&self) -> &[GreekToken] {
        &self.tokens
    }

    pub fn value_of_name(&self, name: &str) -> Option<u32> {
        self.tokens.iter().find(|t| t.name == name).map(|t| t.value).or_else(|| {
            self.letters.iter().find(|l| l.aliases.iter().any(|a| a == name)).map(|l| l.value)
        })
    }

    fn value_of_glyph(&self, c: char) -> Option<u32> {
        self.letters
            .iter()
            .find(|l| l.glyph.chars().eq([c]) || l.aliases.iter().any(|a| a.chars().eq([c])))
            .map(|l| l.value)
    }

    fn token_for_value(&self, value: u32) -> Option<&GreekToken> {
        self.tokens.iter().find(|t| t.value == value)
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GreekNumeral {
    pub tokens: Vec<GreekToken>,
}

impl GreekNumeral {
    pub fn value(&self) -> u32 {
        self.tokens.iter().map(|t| t.value).sum()
    }

    pub fn to_ascii(&self) -> String {
        self.tokens.iter().map(|t| t.name.as_str()).collect::<Vec<_>>().join("+")
    }
}

impl fmt::Display for GreekNumeral {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for t in &self.tokens {
            f.write_str(&t.glyph)?;
        }
        Ok(())
    }
}

/// Sum the letter values of a Greek numeral.
pub fn parse_greek(text: &str) -> Result<Integer> {
    let text = text.trim();
    if text.is_empty() {
        return Err(Error::parse("empty Greek numeral"));
    }
    let t = table();
    let values: Vec<u32> = if text.is_ascii() {
        text.split('+')
            .map(|name| {
                t.value_of_name(name.trim())
                    .ok_or_else(|| Error::parse(format!("unknown Greek letter name {name:?}")))
            })
            .collect::<Result<_>>()?
    } else {
        let mut out = Vec::new();
        let mut chars = text.chars();
        while let Some(c) = chars.next() {
            if c == t.thousands_sign {
                let unit = chars
                    .next()
                    .and_then(|u| t.value_of_glyph(u))
                    .filter(|v| *v < 10)
                    .ok_or_else(|| Error::parse(format!("{c} must be followed by a units letter")))?;
                out.push(unit * 1000);
            } else {
                out.push(
                    t.value_of_glyph(c)
                        .ok_or_else(|| Error::parse(format!("{c:?} is not a Greek numeral letter")))?,
                );
            }
        }
        out
    };
    let sum: u64 = values.iter().map(|v| u64::from(*v)).sum();
    if sum > u64::from(MYRIAD) {
        return Err(Error::range(format!("{sum} exceeds the myriad ({MYRIAD})")));
    }
    Ok(Integer::from(sum))
}

/// Greedy decomposition into strictly decreasing letter values.
pub fn render_greek(n: &Integer) -> Result<GreekNumeral> {
    let v = n
        .to_u32()
        .filter(|v| !v.is_zero() && *v <= MYRIAD)
        .ok_or_else(|| Error::range(format!("Greek numerals cover 1..={MYRIAD}, got {n}")))?;
    let t = table();
    let mut rest = v;
    let mut ceiling = u32::MAX;
    let mut tokens = Vec::new();
    while rest > 0 {
        let tok = t
            .tokens
            .iter()
            .find(|tok| tok.value <= rest && tok.value < ceiling)
            .ok_or_else(|| Error::range(format!("{v} has no strictly decreasing decomposition")))?;
        rest -= tok.value;
        ceiling = tok.value;
        tokens.push(tok.clone());
    }
    Ok(GreekNumeral { tokens })
}

/// Glyph for a single value, if one token carries exactly that value.
pub fn glyph_for(value: u32) -> Option<&'static str> {
    table().token_for_value(value).map(|t| t.glyph.as_str())
}
