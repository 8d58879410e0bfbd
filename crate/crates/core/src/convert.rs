//! Conversion between numeral systems through the [`Integer`] pivot.
//!
//! Each system has exactly one parser and one renderer here; `convert` is
//! their composition. There are no system-to-system shortcuts.

use num_traits::Zero;

use crate::error::{Error, Result};
use crate::gap::{interpretations, parse_gap, render_gap, InterpretationBounds};
use crate::greek::{parse_greek, render_greek};
use crate::indic::{parse_aryabhata, parse_brahmi, render_aryabhata, render_brahmi};
use crate::numeric::{parse_decimal_integer, Integer, NumeralSystem};
use crate::roman::{parse_roman, render_roman_auto, ParseMode};

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct ConvertOptions {
    /// Bounds used when reading a gap-positional numeral. A numeral with
    /// more than one reading under these bounds is an `Ambiguity` error.
    pub bounds: InterpretationBounds,
    /// Emit ASCII transliterations for Greek and Aryabhata output.
    pub ascii: bool,
    pub roman_mode: ParseMode,
}

impl Default for ConvertOptions {
    fn default() -> Self {
        ConvertOptions { bounds: InterpretationBounds::default(), ascii: false, roman_mode: ParseMode::Permissive }
    }
}

/// Read `text` as a numeral of `system`.
pub fn parse_numeral(text: &str, system: &NumeralSystem, opts: &ConvertOptions) -> Result<Integer> {
    let text = text.trim();
    match system {
        NumeralSystem::HinduArabic => parse_decimal_integer(text),
        NumeralSystem::Roman => parse_roman(text, opts.roman_mode),
        NumeralSystem::Greek => parse_greek(text),
        NumeralSystem::Aryabhata => parse_aryabhata(text),
        NumeralSystem::Brahmi => parse_brahmi(text),
        NumeralSystem::GapPositional(base) => {
            let numeral = parse_gap(text, base)?;
            let mut readings = interpretations(&numeral, &opts.bounds).values;
            if readings.len() > 1 {
                return Err(Error::Ambiguity { readings });
            }
            Ok(readings.pop().expect("a valid numeral has at least one reading"))
        }
    }
}

/// Canonical rendering of `n` in `system`.
///
/// Roman uses the subtractive form up to 3999 and the repetition form
/// above. Gap-positional output fails for values that end in empty places,
/// since those cannot be written at all.
pub fn render_numeral(n: &Integer, system: &NumeralSystem, opts: &ConvertOptions) -> Result<String> {
    match system {
        NumeralSystem::HinduArabic => Ok(n.to_string()),
        NumeralSystem::Roman => render_roman_auto(n),
        NumeralSystem::Greek => {
            let g = render_greek(n)?;
            Ok(if opts.ascii { g.to_ascii() } else { g.to_string() })
        }
        NumeralSystem::Aryabhata => {
            let a = render_aryabhata(n)?;
            Ok(if opts.ascii { a.to_ascii() } else { a.to_string() })
        }
        NumeralSystem::Brahmi => Ok(render_brahmi(n)?.to_string()),
        NumeralSystem::GapPositional(base) => {
            let (numeral, lost) = render_gap(n, base)?;
            if !lost.is_zero() {
                return Err(Error::range(format!(
                    "{n} ends in {lost} empty place(s) in base {base}, which this notation cannot write"
                )));
            }
            Ok(numeral.to_string())
        }
    }
}

pub fn convert(text: &str, from: &NumeralSystem, to: &NumeralSystem) -> Result<String> {
    convert_with(text, from, to, &ConvertOptions::default())
}

pub fn convert_with(text: &str, from: &NumeralSystem, to: &NumeralSystem, opts: &ConvertOptions) -> Result<String> {
    let n = parse_numeral(text, from, opts)?;
    render_numeral(&n, to, opts)
}
