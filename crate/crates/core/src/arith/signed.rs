//! Integer sign calculus in the vocabulary of fortunes (positive) and
//! debts (negative), tracing which of the eleven numbered rules governs
//! each result.

use std::fmt;

use num_integer::Integer as _;
use num_traits::{Signed, Zero};

use crate::arith::rules::RuleTrace;
use crate::arith::BinaryOp;
use crate::error::{Error, Result};
use crate::numeric::Integer;

#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub enum SignedQuantity {
    Fortune(Integer),
    Debt(Integer),
    Zero,
}

impl SignedQuantity {
    pub fn fortune(m: impl Into<Integer>) -> Self {
        SignedQuantity::from(m.into())
    }

    pub fn debt(m: impl Into<Integer>) -> Self {
        SignedQuantity::from(-m.into())
    }

    pub fn to_integer(&self) -> Integer {
        match self {
            SignedQuantity::Fortune(m) => m.clone(),
            SignedQuantity::Debt(m) => -m,
            SignedQuantity::Zero => Integer::zero(),
        }
    }

    fn word(&self) -> &'static str {
        match self {
            SignedQuantity::Fortune(_) => "fortune",
            SignedQuantity::Debt(_) => "debt",
            SignedQuantity::Zero => "zero",
        }
    }
}

impl From<Integer> for SignedQuantity {
    fn from(n: Integer) -> Self {
        if n.is_positive() {
            SignedQuantity::Fortune(n)
        } else if n.is_negative() {
            SignedQuantity::Debt(-n)
        } else {
            SignedQuantity::Zero
        }
    }
}

impl From<i64> for SignedQuantity {
    fn from(n: i64) -> Self {
        SignedQuantity::from(Integer::from(n))
    }
}

impl fmt::Display for SignedQuantity {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            SignedQuantity::Fortune(m) => write!(f, "fortune {m}"),
            SignedQuantity::Debt(m) => write!(f, "debt {m}"),
            SignedQuantity::Zero => f.write_str("zero"),
        }
    }
}

/// Combine two signed quantities; quotients must be exact.
pub fn signed_op(op: BinaryOp, a: &SignedQuantity, b: &SignedQuantity) -> Result<(SignedQuantity, RuleTrace)> {
    use SignedQuantity::{Debt, Fortune, Zero};

    let (x, y) = (a.to_integer(), b.to_integer());
    let result = match op {
        BinaryOp::Add => x + y,
        BinaryOp::Sub => x - y,
        BinaryOp::Mul => x * y,
        BinaryOp::Div => {
            if y.is_zero() {
                return Err(Error::DivisionByZero(format!("{a} divided by zero")));
            }
            let (q, r) = x.div_rem(&y);
            if !r.is_zero() {
                return Err(Error::InexactQuotient { dividend: x, divisor: y });
            }
            q
        }
    };
    let result = SignedQuantity::from(result);

    let rule: &'static str = match (op, a, b) {
        (BinaryOp::Sub, Debt(_), Zero) => "DF-1",
        (BinaryOp::Sub, Fortune(_), Zero) => "DF-2",
        (BinaryOp::Sub, Zero, Zero) => "DF-3",
        (BinaryOp::Sub, Zero, Debt(_)) => "DF-4",
        (BinaryOp::Sub, Zero, Fortune(_)) => "DF-5",
        (BinaryOp::Mul, Zero, Zero) => "DF-7",
        (BinaryOp::Mul, Zero, _) | (BinaryOp::Mul, _, Zero) => "DF-6",
        (BinaryOp::Mul | BinaryOp::Div, Fortune(_), Fortune(_)) => "DF-8",
        (BinaryOp::Mul | BinaryOp::Div, Debt(_), Debt(_)) => "DF-9",
        (BinaryOp::Mul | BinaryOp::Div, Debt(_), Fortune(_)) => "DF-10",
        (BinaryOp::Mul | BinaryOp::Div, Fortune(_), Debt(_)) => "DF-11",
        (BinaryOp::Add, _, Zero) | (BinaryOp::Add, Zero, _) => "BG-i",
        (BinaryOp::Add, _, _) => "EXACT-add",
        (BinaryOp::Sub, _, _) => "EXACT-sub",
        (BinaryOp::Div, Zero, _) => "EXACT-div",
        (BinaryOp::Div, _, Zero) => unreachable!("division by zero rejected above"),
    };
    let mut trace = RuleTrace::new();
    trace.push(rule, format!("{} {op} {} gives {}", a.word(), b.word(), result.word()));
    Ok((result, trace))
}
