//! Historical numeral systems and historical arithmetic of zero.
//!
//! Codecs for Roman, Ionian Greek, zero-less positional (Babylonian style),
//! Aryabhata and Brahmi numerals meet at an exact [`Integer`] pivot, and an
//! evaluator runs arithmetic over [`Value`] under three [`RuleSet`]s: the
//! zero rules of 628 CE, those of 1150 CE, and modern exact arithmetic.
//!
//! ```
//! use sunya_core::{convert, NumeralSystem};
//!
//! let out = convert("MMXVI", &NumeralSystem::Roman, &NumeralSystem::HinduArabic).unwrap();
//! assert_eq!(out, "2016");
//! ```

pub mod arith;
pub mod convert;
pub mod digits;
pub mod error;
pub mod gap;
pub mod greek;
pub mod indic;
pub mod numeric;
pub mod pedagogy;
pub mod roman;

pub use arith::{
    eval_binary, eval_expression, eval_unary, parse_expression, signed_op, zero_from, BinaryOp, ExprError,
    Expression, RuleTrace, SignedQuantity, UnaryOp,
};
pub use convert::{convert, convert_with, parse_numeral, render_numeral, ConvertOptions};
pub use error::{Error, Result};
pub use gap::{
    digit_decompose, interpretations, parse_gap, render_gap, GapNumeral, InterpretationBounds, InterpretationSet,
    Slot,
};
pub use greek::{parse_greek, render_greek, GreekNumeral};
pub use indic::{parse_aryabhata, parse_brahmi, render_aryabhata, render_brahmi, AryabhataNumeral, BrahmiNumeral};
pub use numeric::{normalize, Integer, NumeralSystem, Rational, RuleSet, Value};
pub use roman::{parse_roman, render_roman, ParseMode, RenderStyle};

pub use num_bigint;
pub use num_rational;
