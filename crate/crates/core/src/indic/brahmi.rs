//! Brahmi numerals: separate signs for 1..9 and for each ten 10..90, read
//! additively. Tokens are named `B1`..`B9`, `B10`, `B20`, ..., `B90`.

use std::fmt;

use num_traits::ToPrimitive;

use crate::error::{Error, Result};
use crate::numeric::Integer;

pub const MAX: u32 = 99;

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord)]
pub struct BrahmiToken(u32);

impl BrahmiToken {
    pub fn new(value: u32) -> Option<Self> {
        match value {
            1..=9 => Some(BrahmiToken(value)),
            10..=90 if value.is_multiple_of(10) => Some(BrahmiToken(value)),
            _ => None,
        }
    }

    pub fn value(self) -> u32 {
        self.0
    }

    /// All eighteen tokens in ascending value.
    pub fn all() -> impl Iterator<Item = BrahmiToken> {
        (1..=9).chain((10..=90).step_by(10)).map(BrahmiToken)
    }
}

impl fmt::Display for BrahmiToken {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "B{}", self.0)
    }
}

impl std::str::FromStr for BrahmiToken {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        s.strip_prefix('B')
            .filter(|digits| !digits.is_empty() && !digits.starts_with('0') && digits.bytes().all(|b| b.is_ascii_digit()))
            .and_then(|digits| digits.parse().ok())
            .and_then(BrahmiToken::new)
            .ok_or_else(|| Error::parse(format!("unknown Brahmi token {s:?}")))
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BrahmiNumeral {
    pub tokens: Vec<BrahmiToken>,
}

impl fmt::Display for BrahmiNumeral {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let names: Vec<String> = self.tokens.iter().map(|t| t.to_string()).collect();
        f.write_str(&names.join(" "))
    }
}

pub fn parse_brahmi(tokens: &str) -> Result<Integer> {
    let values = tokens
        .split_whitespace()
        .map(|t| t.parse::<BrahmiToken>().map(BrahmiToken::value))
        .collect::<Result<Vec<u32>>>()?;
    if values.is_empty() {
        return Err(Error::parse("empty Brahmi numeral"));
    }
    let sum: u32 = values.iter().sum();
    if sum > MAX {
        return Err(Error::range(format!("Brahmi sum {sum} exceeds {MAX}")));
    }
    Ok(Integer::from(sum))
}

pub fn render_brahmi(n: &Integer) -> Result<BrahmiNumeral> {
    let v = n
        .to_u32()
        .filter(|v| (1..=MAX).contains(v))
        .ok_or_else(|| Error::range(format!("Brahmi numerals cover 1..={MAX}, got {n}")))?;
    let tokens = [v - v % 10, v % 10].into_iter().filter_map(BrahmiToken::new).collect();
    Ok(BrahmiNumeral { tokens })
}
