//! Aryabhata's alphasyllabic numerals.
//!
//! Each consonant has a value (1..=25 for the varga letters, 30..=100 for
//! the avarga letters) and each of the nine vowels a place value
//! `10^(2k)`. A syllable is worth consonant × place, and a numeral is the
//! sum of its syllables. The same rule applies to varga and avarga letters.
//!
//! Machine text is `+`-joined `consonant.vowel` transliteration
//! (`ga.u+Na.a`); Devanagari (`गुण`) is accepted through the mapping table
//! in `data/aryabhata.json`.

use std::fmt;
use std::sync::LazyLock;

use num_integer::Integer as _;
use num_traits::{ToPrimitive, Zero};
use serde::Deserialize;

use crate::error::{Error, Result};
use crate::numeric::Integer;

const TABLE_JSON: &str = include_str!("../../data/aryabhata.json");

#[derive(Debug, Clone, Deserialize)]
pub struct Consonant {
    pub translit: String,
    pub devanagari: String,
    pub value: u32,
}

#[derive(Debug, Clone, Deserialize)]
pub struct Vowel {
    pub translit: String,
    pub independent: String,
    /// Dependent sign; empty for the inherent `a`.
    pub sign: String,
    pub place_exponent: u32,
}

#[derive(Debug, Deserialize)]
pub struct AryabhataTable {
    pub consonants: Vec<Consonant>,
    pub vowels: Vec<Vowel>,
}

static TABLE: LazyLock<AryabhataTable> =
    LazyLock::new(|| serde_json::from_str(TABLE_JSON).expect("bundled Aryabhata table is valid JSON"));

pub fn table() -> &'static AryabhataTable {
    &TABLE
}

/// Exclusive upper bound of renderable values: pairs up to 99 at place 10^16.
pub fn render_limit() -> Integer {
    num_traits::pow(Integer::from(10), 18)
}

/// A consonant/vowel pair, stored as indices into the table.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct AryabhataSyllable {
    consonant: usize,
    vowel: usize,
}

impl AryabhataSyllable {
    pub fn new(consonant: usize, vowel: usize) -> Result<Self> {
        let t = table();
        if consonant >= t.consonants.len() || vowel >= t.vowels.len() {
            return Err(Error::range(format!("no syllable ({consonant}, {vowel}) in the table")));
        }
        Ok(AryabhataSyllable { consonant, vowel })
    }

    pub fn consonant(&self) -> &'static Consonant {
        &table().consonants[self.consonant]
    }

    pub fn vowel(&self) -> &'static Vowel {
        &table().vowels[self.vowel]
    }

    pub fn value(&self) -> Integer {
        Integer::from(self.consonant().value) * num_traits::pow(Integer::from(10), self.vowel().place_exponent as usize)
    }

    pub fn to_ascii(&self) -> String {
        format!("{}.{}", self.consonant().translit, self.vowel().translit)
    }
}

impl fmt::Display for AryabhataSyllable {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.consonant().devanagari)?;
        f.write_str(&self.vowel().sign)
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct AryabhataNumeral {
    pub syllables: Vec<AryabhataSyllable>,
}

impl AryabhataNumeral {
    pub fn value(&self) -> Integer {
        self.syllables.iter().map(|s| s.value()).sum()
    }

    pub fn to_ascii(&self) -> String {
        self.syllables.iter().map(|s| s.to_ascii()).collect::<Vec<_>>().join("+")
    }
}

impl fmt::Display for AryabhataNumeral {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        self.syllables.iter().try_for_each(|s| write!(f, "{s}"))
    }
}

fn consonant_by_translit(tok: &str) -> Option<usize> {
    table().consonants.iter().position(|c| c.translit == tok)
}

fn vowel_by_translit(tok: &str) -> Option<usize> {
    table().vowels.iter().position(|v| v.translit == tok)
}

fn consonant_by_char(c: char) -> Option<usize> {
    table().consonants.iter().position(|k| k.devanagari.chars().eq([c]))
}

fn vowel_by_sign(c: char) -> Option<usize> {
    table().vowels.iter().position(|v| v.sign.chars().eq([c]))
}

/// Parse either written form into its syllables, in written order.
pub fn parse_syllables(text: &str) -> Result<AryabhataNumeral> {
    let text = text.trim();
    if text.is_empty() {
        return Err(Error::parse("empty Aryabhata numeral"));
    }
    let syllables = if text.is_ascii() { parse_translit(text)? } else { parse_devanagari(text)? };
    Ok(AryabhataNumeral { syllables })
}

fn parse_translit(text: &str) -> Result<Vec<AryabhataSyllable>> {
    text.split('+')
        .map(|syl| {
            let syl = syl.trim();
            let (cons, vowel) = syl.split_once('.').unwrap_or((syl, "a"));
            let consonant = consonant_by_translit(cons)
                .ok_or_else(|| Error::parse(format!("unknown consonant {cons:?} in syllable {syl:?}")))?;
            let vowel = vowel_by_translit(vowel)
                .ok_or_else(|| Error::parse(format!("unknown vowel {vowel:?} in syllable {syl:?}")))?;
            Ok(AryabhataSyllable { consonant, vowel })
        })
        .collect()
}

fn parse_devanagari(text: &str) -> Result<Vec<AryabhataSyllable>> {
    let mut out = Vec::new();
    let mut chars = text.chars().peekable();
    while let Some(c) = chars.next() {
        let consonant = consonant_by_char(c).ok_or_else(|| {
            Error::parse(format!("{c:?} (U+{:04X}) does not start a numeral syllable", u32::from(c)))
        })?;
        let vowel = match chars.peek().and_then(|&n| vowel_by_sign(n)) {
            Some(v) => {
                chars.next();
                v
            }
            None => 0,
        };
        out.push(AryabhataSyllable { consonant, vowel });
    }
    Ok(out)
}

/// Sum of consonant value × vowel place over all syllables.
pub fn parse_aryabhata(text: &str) -> Result<Integer> {
    Ok(parse_syllables(text)?.value())
}

/// Canonical syllables for `n`, most significant place first.
pub fn render_aryabhata(n: &Integer) -> Result<AryabhataNumeral> {
    if *n <= Integer::zero() || *n >= render_limit() {
        return Err(Error::range(format!("Aryabhata rendering covers 1..10^18, got {n}")));
    }
    let hundred = Integer::from(100);
    let mut pairs = Vec::new();
    let mut rest = n.clone();
    while !rest.is_zero() {
        let (q, r) = rest.div_rem(&hundred);
        pairs.push(r.to_u32().expect("pair below 100"));
        rest = q;
    }
    let mut syllables = Vec::new();
    for (place, pair) in pairs.into_iter().enumerate().rev() {
        for letter in pair_letters(pair) {
            let consonant = table()
                .consonants
                .iter()
                .position(|c| c.value == letter)
                .expect("every pair letter value is in the table");
            syllables.push(AryabhataSyllable { consonant, vowel: place });
        }
    }
    Ok(AryabhataNumeral { syllables })
}

/// Consonant values that together make one base-100 pair.
fn pair_letters(pair: u32) -> Vec<u32> {
    match pair {
        0 => vec![],
        1..=25 => vec![pair],
        26..=29 => vec![25, pair - 25],
        _ if pair.is_multiple_of(10) => vec![pair],
        _ => vec![pair - pair % 10, pair % 10],
    }
}
