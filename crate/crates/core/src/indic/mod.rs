//! Indic numeral codecs.

pub mod aryabhata;
pub mod brahmi;

pub use aryabhata::{parse_aryabhata, render_aryabhata, AryabhataNumeral, AryabhataSyllable};
pub use brahmi::{parse_brahmi, render_brahmi, BrahmiNumeral, BrahmiToken};
