//! Small executable demonstrations: Fibonacci numbers, the infinite-hotel
//! room shifts, exact limit tables for division by a shrinking number, and
//! the base-60 leftovers in time keeping.

use num_integer::Integer as _;
use num_traits::{One, Signed, Zero};
use serde::Serialize;

use crate::arith::{eval_binary, BinaryOp, RuleTrace};
use crate::error::{Error, Result};
use crate::numeric::{parse_rational, Integer, Rational, RuleSet, Value};

/// The first `count` Fibonacci numbers, starting `0, 1`.
pub fn fibonacci(count: usize) -> Result<Vec<Integer>> {
    if count < 1 {
        return Err(Error::range("fibonacci needs count >= 1"));
    }
    let mut out = Vec::with_capacity(count);
    let (mut a, mut b) = (Integer::zero(), Integer::one());
    for _ in 0..count {
        out.push(a.clone());
        let next = &a + &b;
        a = std::mem::replace(&mut b, next);
    }
    Ok(out)
}

fn check_room(room: &Integer) -> Result<()> {
    if *room < Integer::one() {
        return Err(Error::range(format!("rooms are numbered from 1, got {room}")));
    }
    Ok(())
}

/// One new guest: everyone moves up one room, freeing room 1.
pub fn hilbert_single(room: &Integer) -> Result<Integer> {
    check_room(room)?;
    Ok(room + 1)
}

/// Infinitely many new guests: everyone moves to twice their room number,
/// freeing every odd room.
pub fn hilbert_infinite(room: &Integer) -> Result<Integer> {
    check_room(room)?;
    Ok(room * 2)
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LimitTableRow {
    pub input: Rational,
    pub output: Value,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LimitTable {
    pub rows: Vec<LimitTableRow>,
    /// What the rule set says once the shrinking quantity reaches zero.
    pub limit: std::result::Result<(Value, RuleTrace), Error>,
}

fn check_shrinking(xs: &[Rational]) -> Result<()> {
    if let Some(z) = xs.iter().position(|x| x.is_zero()) {
        return Err(Error::range(format!("table entry {} is zero", z + 1)));
    }
    for (i, w) in xs.windows(2).enumerate() {
        if w[1].abs() >= w[0].abs() {
            return Err(Error::range(format!("table entries must shrink in magnitude (entry {})", i + 2)));
        }
    }
    Ok(())
}

fn divide(a: &Rational, b: &Rational) -> Value {
    Value::Finite(a / b)
}

/// `numerator / d` for each shrinking `d`, then `numerator / 0` under `rules`.
pub fn reciprocal_table(denominators: &[Rational], numerator: &Rational, rules: RuleSet) -> Result<LimitTable> {
    check_shrinking(denominators)?;
    let rows = denominators
        .iter()
        .map(|d| LimitTableRow { input: d.clone(), output: divide(numerator, d) })
        .collect();
    let limit = eval_binary(BinaryOp::Div, &Value::Finite(numerator.clone()), &Value::zero(), rules);
    Ok(LimitTable { rows, limit })
}

/// `x / x` for each shrinking `x`, then `0 / 0` under `rules`.
pub fn self_ratio_table(values: &[Rational], rules: RuleSet) -> Result<LimitTable> {
    check_shrinking(values)?;
    let rows = values
        .iter()
        .map(|x| LimitTableRow { input: x.clone(), output: divide(x, x) })
        .collect();
    let limit = eval_binary(BinaryOp::Div, &Value::zero(), &Value::zero(), rules);
    Ok(LimitTable { rows, limit })
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum TableKind {
    /// `1 / x`
    Reciprocal,
    /// `x / x`
    SelfRatio,
    /// `0 / x`
    ZeroOver,
}

/// One row of a historical table, with the value as it was printed.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PrintedRow {
    pub input: Rational,
    pub printed: Rational,
    pub exact: Value,
}

impl PrintedRow {
    /// True when the printed value disagrees with exact division.
    pub fn is_erratum(&self) -> bool {
        self.exact != Value::Finite(self.printed.clone())
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct HistoricalTable {
    pub kind: TableKind,
    pub rows: Vec<PrintedRow>,
    pub limit: std::result::Result<(Value, RuleTrace), Error>,
}

fn q(text: &str) -> Rational {
    parse_rational(text).expect("static table literal")
}

/// The three classic tables (`1/x`, `x/x`, `0/x` for shrinking `x`), each
/// row paired with its traditionally printed value. Two printed `1/x`
/// values are wrong and are flagged by [`PrintedRow::is_erratum`].
pub fn historical_limit_tables(rules: RuleSet) -> Vec<HistoricalTable> {
    let reciprocal: [(&str, &str); 4] =
        [(".1", "10"), (".001", "1000"), (".00001", "10000"), (".0000000001", "1000000000")];
    let small = [".1", ".001", ".00001", ".000000001", ".00000000001"];

    let one = Rational::one();
    let zero = Rational::zero();
    let inputs: Vec<Rational> = reciprocal.iter().map(|(x, _)| q(x)).collect();
    let recip = reciprocal_table(&inputs, &one, rules).expect("static table shrinks");
    let smalls: Vec<Rational> = small.iter().map(|x| q(x)).collect();
    let ratio = self_ratio_table(&smalls, rules).expect("static table shrinks");
    let zeros = reciprocal_table(&smalls, &zero, rules).expect("static table shrinks");

    let attach = |t: LimitTable, printed: Vec<Rational>, kind| HistoricalTable {
        kind,
        rows: t
            .rows
            .into_iter()
            .zip(printed)
            .map(|(r, printed)| PrintedRow { input: r.input, printed, exact: r.output })
            .collect(),
        limit: t.limit,
    };
    vec![
        attach(recip, reciprocal.iter().map(|(_, p)| q(p)).collect(), TableKind::Reciprocal),
        attach(ratio, vec![one.clone(); small.len()], TableKind::SelfRatio),
        attach(zeros, vec![zero.clone(); small.len()], TableKind::ZeroOver),
    ]
}

/// Split seconds into hours, minutes (0..60) and seconds (0..60).
pub fn decompose_time(total_seconds: &Integer) -> Result<(Integer, Integer, Integer)> {
    if total_seconds.is_negative() {
        return Err(Error::range(format!("negative duration {total_seconds}")));
    }
    let sixty = Integer::from(60);
    let (minutes_total, seconds) = total_seconds.div_rem(&sixty);
    let (hours, minutes) = minutes_total.div_rem(&sixty);
    Ok((hours, minutes, seconds))
}

/// Every positive divisor of 60, ascending.
pub fn divisors_of_sixty() -> Vec<Integer> {
    (1..=60u32).filter(|d| 60 % d == 0).map(Integer::from).collect()
}
