use thiserror::Error;

use crate::numeric::Integer;

pub type Result<T, E = Error> = std::result::Result<T, E>;

/// Every failure the library can report.
///
/// Codec failures (`Parse`, `Range`, `Ambiguity`) and evaluator failures
/// (`DivisionByZero`, `UndefinedBySource`, `Domain`, `InexactQuotient`)
/// share one type so the conversion facade and the expression evaluator can
/// be chained without wrapping.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("ParseError: {0}")]
    Parse(String),

    #[error("RangeError: {0}")]
    Range(String),

    #[error("AmbiguityError: numeral has {} readings ({}); use the interpretation API", .readings.len(), preview(.readings))]
    Ambiguity { readings: Vec<Integer> },

    #[error("DivisionByZero: {0}")]
    DivisionByZero(String),

    #[error("UndefinedBySource: {0}")]
    UndefinedBySource(String),

    #[error("DomainError: {0}")]
    Domain(String),

    #[error("InexactQuotient: {dividend} is not a multiple of {divisor}")]
    InexactQuotient { dividend: Integer, divisor: Integer },
}

impl Error {
    /// Stable short name used by the CLI diagnostics.
    pub fn name(&self) -> &'static str {
        match self {
            Error::Parse(_) => "ParseError",
            Error::Range(_) => "RangeError",
            Error::Ambiguity { .. } => "AmbiguityError",
            Error::DivisionByZero(_) => "DivisionByZero",
            Error::UndefinedBySource(_) => "UndefinedBySource",
            Error::Domain(_) => "DomainError",
            Error::InexactQuotient { .. } => "InexactQuotient",
        }
    }

    pub(crate) fn parse(msg: impl Into<String>) -> Self {
        Error::Parse(msg.into())
    }

    pub(crate) fn range(msg: impl Into<String>) -> Self {
        Error::Range(msg.into())
    }

    pub(crate) fn undefined(msg: impl Into<String>) -> Self {
        Error::UndefinedBySource(msg.into())
    }
}

fn preview(readings: &[Integer]) -> String {
    let mut shown: Vec<String> = readings.iter().take(4).map(|r| r.to_string()).collect();
    if readings.len() > 4 {
        shown.push("...".to_string());
    }
    shown.join(", ")
}
