//! Display forms of the ten decimal digits in three scripts. Display only;
//! the decimal codec itself reads and writes ASCII digits.

use serde::Serialize;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum DigitScript {
    Devanagari,
    ArabicIndic,
    Western,
}

impl DigitScript {
    pub const ALL: [DigitScript; 3] = [DigitScript::Devanagari, DigitScript::ArabicIndic, DigitScript::Western];

    pub fn name(self) -> &'static str {
        match self {
            DigitScript::Devanagari => "sanskrit",
            DigitScript::ArabicIndic => "arabic",
            DigitScript::Western => "english",
        }
    }

    pub fn digits(self) -> [char; 10] {
        match self {
            DigitScript::Devanagari => ['०', '१', '२', '३', '४', '५', '६', '७', '८', '९'],
            DigitScript::ArabicIndic => ['٠', '١', '٢', '٣', '٤', '٥', '٦', '٧', '٨', '٩'],
            DigitScript::Western => ['0', '1', '2', '3', '4', '5', '6', '7', '8', '9'],
        }
    }
}

/// Rewrite the ASCII digits of `decimal` in `script`; other characters
/// (such as a leading sign) are kept.
pub fn transcribe(decimal: &str, script: DigitScript) -> String {
    let table = script.digits();
    decimal
        .chars()
        .map(|c| c.to_digit(10).filter(|_| c.is_ascii_digit()).map_or(c, |d| table[d as usize]))
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn transcribes() {
        assert_eq!(transcribe("2016", DigitScript::Devanagari), "२०१६");
        assert_eq!(transcribe("-30", DigitScript::ArabicIndic), "-٣٠");
        assert_eq!(transcribe("876", DigitScript::Western), "876");
    }
}
