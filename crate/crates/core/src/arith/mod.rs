//! Arithmetic over [`Value`] under a selected [`RuleSet`].
//!
//! * `Brahmagupta628`: `a ± 0 = a`, `a × 0 = 0`, `a ÷ 0` stays unresolved,
//!   `0 ÷ 0 = 0`. Sign rules for fortunes and debts are traced alongside.
//! * `Bhaskara1150`: `a ÷ 0` is khahara, khahara absorbs finite addends,
//!   and `a × 0` keeps its factor pending so that `(a × 0) ÷ 0 = a`.
//! * `Modern`: exact rationals, division by zero is an error.
//!
//! Anything a rule set does not define is `UndefinedBySource`.

use std::fmt;

use num_traits::{Signed, Zero};
use serde::Serialize;

use crate::error::{Error, Result};
use crate::numeric::{exact_root, normalize, Rational, RuleSet, Value};

pub mod expr;
pub mod rules;
pub mod signed;

pub use expr::{eval_expression, parse_expression, ExprError, Expression};
pub use rules::{Rule, RuleFiring, RuleSource, RuleTrace, CATALOG, ERRATA};
pub use signed::{signed_op, SignedQuantity};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
pub enum BinaryOp {
    Add,
    Sub,
    Mul,
    Div,
}

impl BinaryOp {
    pub const ALL: [BinaryOp; 4] = [BinaryOp::Add, BinaryOp::Sub, BinaryOp::Mul, BinaryOp::Div];

    pub fn symbol(self) -> &'static str {
        match self {
            BinaryOp::Add => "+",
            BinaryOp::Sub => "-",
            BinaryOp::Mul => "*",
            BinaryOp::Div => "/",
        }
    }
}

impl fmt::Display for BinaryOp {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.symbol())
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
pub enum UnaryOp {
    Square,
    Sqrt,
    Cube,
    Cbrt,
    Negate,
}

impl UnaryOp {
    pub const ALL: [UnaryOp; 5] = [UnaryOp::Square, UnaryOp::Sqrt, UnaryOp::Cube, UnaryOp::Cbrt, UnaryOp::Negate];
}

/// Apply one binary operation, returning the result and the rules fired.
pub fn eval_binary(op: BinaryOp, lhs: &Value, rhs: &Value, rules: RuleSet) -> Result<(Value, RuleTrace)> {
    let mut trace = RuleTrace::new();
    let value = match rules {
        RuleSet::Brahmagupta628 => brahmagupta(op, lhs, rhs, &mut trace)?,
        RuleSet::Bhaskara1150 => bhaskara(op, lhs, rhs, &mut trace)?,
        RuleSet::Modern => modern(op, lhs, rhs, &mut trace)?,
    };
    Ok((normalize(&value), trace))
}

fn exact(op: BinaryOp, a: &Rational, b: &Rational, trace: &mut RuleTrace) -> Value {
    let (id, v) = match op {
        BinaryOp::Add => ("EXACT-add", a + b),
        BinaryOp::Sub => ("EXACT-sub", a - b),
        BinaryOp::Mul => ("EXACT-mul", a * b),
        BinaryOp::Div => ("EXACT-div", a / b),
    };
    trace.push(id, format!("{} {op} {} = {}", show(a), show(b), show(&v)));
    Value::Finite(v)
}

fn show(q: &Rational) -> String {
    crate::numeric::format_rational(q)
}

/// Sign rule for a product or quotient of two non-zero quantities.
fn sign_rule(a: &Rational, b: &Rational) -> (&'static str, &'static str) {
    match (a.is_positive(), b.is_positive()) {
        (true, true) => ("DF-8", "fortune and fortune give a fortune"),
        (false, false) => ("DF-9", "debt and debt give a fortune"),
        (false, true) => ("DF-10", "debt and fortune give a debt"),
        (true, false) => ("DF-11", "fortune and debt give a debt"),
    }
}

fn finite_pair<'a>(lhs: &'a Value, rhs: &'a Value, rules: RuleSet) -> Result<(&'a Rational, &'a Rational)> {
    match (lhs, rhs) {
        (Value::Finite(a), Value::Finite(b)) => Ok((a, b)),
        _ => {
            let odd = if lhs.is_finite() { rhs } else { lhs };
            Err(Error::undefined(format!("{rules} states no rule for arithmetic on a {} value", odd.kind())))
        }
    }
}

fn brahmagupta(op: BinaryOp, lhs: &Value, rhs: &Value, trace: &mut RuleTrace) -> Result<Value> {
    let (a, b) = finite_pair(lhs, rhs, RuleSet::Brahmagupta628)?;
    let v = match op {
        BinaryOp::Add if b.is_zero() => {
            trace.push("BG-i", format!("{} + 0 = {}", show(a), show(a)));
            Value::Finite(a.clone())
        }
        BinaryOp::Add if a.is_zero() => {
            trace.push("BG-i", format!("0 + {} = {}", show(b), show(b)));
            Value::Finite(b.clone())
        }
        BinaryOp::Sub if b.is_zero() => {
            trace.push("BG-ii", format!("{} - 0 = {}", show(a), show(a)));
            let (id, what) = if a.is_negative() {
                ("DF-1", "a debt minus zero stays a debt")
            } else if a.is_positive() {
                ("DF-2", "a fortune minus zero stays a fortune")
            } else {
                ("DF-3", "zero minus zero is zero")
            };
            trace.push(id, what);
            Value::Finite(a.clone())
        }
        BinaryOp::Sub if a.is_zero() => {
            let (id, what) = if b.is_negative() {
                ("DF-4", "a debt taken from zero leaves a fortune")
            } else {
                ("DF-5", "a fortune taken from zero leaves a debt")
            };
            trace.push(id, format!("0 - {} = {}: {what}", show(b), show(&-b)));
            Value::Finite(-b)
        }
        BinaryOp::Mul if a.is_zero() || b.is_zero() => {
            trace.push("BG-iii", format!("{} * {} = 0", show(a), show(b)));
            if a.is_zero() && b.is_zero() {
                trace.push("DF-7", "zero times zero is zero");
            } else {
                trace.push("DF-6", "zero times a fortune or debt is zero");
            }
            Value::zero()
        }
        BinaryOp::Div if b.is_zero() && a.is_zero() => {
            trace.push("BG-v", "0 / 0 = 0");
            Value::zero()
        }
        BinaryOp::Div if b.is_zero() => {
            trace.push("BG-iv", format!("{} / 0 is left as written", show(a)));
            Value::Unresolved(a.clone())
        }
        BinaryOp::Mul | BinaryOp::Div if !a.is_zero() => {
            let v = exact(op, a, b, trace);
            let (id, what) = sign_rule(a, b);
            trace.push(id, what);
            v
        }
        _ => exact(op, a, b, trace),
    };
    Ok(v)
}

fn bhaskara(op: BinaryOp, lhs: &Value, rhs: &Value, trace: &mut RuleTrace) -> Result<Value> {
    if matches!(lhs, Value::Unresolved(_)) || matches!(rhs, Value::Unresolved(_)) {
        return Err(Error::undefined("bhaskara states no rule for an unresolved a/0"));
    }
    let rhs = match rhs {
        Value::ZeroProduct(f) => {
            trace.push("BH-collapse", format!("right operand {} × 0 read as 0", show(f)));
            Value::zero()
        }
        other => other.clone(),
    };
    let v = match (op, lhs, &rhs) {
        (BinaryOp::Add | BinaryOp::Sub, Value::ZeroProduct(f), _) => {
            trace.push("BH-collapse", format!("{} × 0 read as 0 under {op}", show(f)));
            return bhaskara(op, &Value::zero(), &rhs, trace);
        }
        (BinaryOp::Add | BinaryOp::Sub, Value::Khahara, Value::Finite(x)) => {
            trace.push("BH-khahara", format!("khahara {op} {} is unchanged", show(x)));
            Value::Khahara
        }
        (BinaryOp::Add, Value::Finite(x), Value::Khahara) => {
            trace.push("BH-khahara", format!("{} + khahara is unchanged", show(x)));
            Value::Khahara
        }
        (_, Value::Khahara, _) | (_, _, Value::Khahara) => {
            return Err(Error::undefined(format!(
                "bhaskara states no rule for {} {op} {}",
                lhs.kind(),
                rhs.kind()
            )));
        }
        (BinaryOp::Div, Value::ZeroProduct(f), Value::Finite(x)) if x.is_zero() => {
            trace.push("BH-viii", format!("({} × 0) / 0 = {}", show(f), show(f)));
            Value::Finite(f.clone())
        }
        (BinaryOp::Mul, Value::ZeroProduct(f), Value::Finite(x)) => {
            let g = f * x;
            trace.push("BH-defer", format!("({} × 0) * {} = {} × 0", show(f), show(x), show(&g)));
            Value::ZeroProduct(g)
        }
        (BinaryOp::Div, Value::ZeroProduct(f), Value::Finite(x)) => {
            let g = f / x;
            trace.push("BH-defer", format!("({} × 0) / {} = {} × 0", show(f), show(x), show(&g)));
            Value::ZeroProduct(g)
        }
        (BinaryOp::Add | BinaryOp::Sub, Value::Finite(a), Value::Finite(b)) if b.is_zero() => {
            trace.push("BH-i", format!("{} {op} 0 = {}", show(a), show(a)));
            Value::Finite(a.clone())
        }
        (BinaryOp::Add, Value::Finite(a), Value::Finite(b)) if a.is_zero() => {
            trace.push("BH-i", format!("0 + {} = {}", show(b), show(b)));
            Value::Finite(b.clone())
        }
        (BinaryOp::Mul, Value::Finite(a), Value::Finite(b)) if a.is_zero() || b.is_zero() => {
            let factor = if b.is_zero() { a } else { b };
            trace.push("BH-vii", format!("{} × 0 shows as 0; factor {} kept", show(factor), show(factor)));
            Value::ZeroProduct(factor.clone())
        }
        (BinaryOp::Div, Value::Finite(a), Value::Finite(b)) if b.is_zero() => {
            if a.is_zero() {
                return Err(Error::undefined("bhaskara states no rule for a bare 0 / 0"));
            }
            trace.push("BH-vi", format!("{} / 0 = khahara", show(a)));
            Value::Khahara
        }
        (_, Value::Finite(a), Value::Finite(b)) => exact(op, a, b, trace),
        _ => unreachable!("unresolved operands rejected above"),
    };
    Ok(v)
}

fn modern(op: BinaryOp, lhs: &Value, rhs: &Value, trace: &mut RuleTrace) -> Result<Value> {
    let (a, b) = match (lhs, rhs) {
        (Value::Finite(a), Value::Finite(b)) => (a, b),
        _ => {
            let odd = if lhs.is_finite() { rhs } else { lhs };
            return Err(Error::undefined(format!("MOD-extended: {} is not a modern number", odd.kind())));
        }
    };
    if op == BinaryOp::Div && b.is_zero() {
        return Err(Error::DivisionByZero(format!("MOD-div0: {} / 0", show(a))));
    }
    Ok(exact(op, a, b, trace))
}

/// Apply one unary operation.
///
/// Roots are only taken of exact perfect squares or cubes.
pub fn eval_unary(op: UnaryOp, v: &Value, rules: RuleSet) -> Result<(Value, RuleTrace)> {
    let mut trace = RuleTrace::new();
    let q = match (v, rules) {
        (Value::Finite(q), _) => q.clone(),
        (Value::ZeroProduct(f), RuleSet::Bhaskara1150) => {
            if op == UnaryOp::Negate {
                trace.push("BH-defer", format!("-({} × 0) = {} × 0", show(f), show(&-f)));
                return Ok((normalize(&Value::ZeroProduct(-f)), trace));
            }
            trace.push("BH-collapse", format!("{} × 0 read as 0", show(f)));
            Rational::zero()
        }
        (other, RuleSet::Modern) => {
            return Err(Error::undefined(format!("MOD-extended: {} is not a modern number", other.kind())));
        }
        (other, _) => {
            return Err(Error::undefined(format!("{rules} states no rule for {op:?} of a {} value", other.kind())));
        }
    };
    let bhaskara_zero = rules == RuleSet::Bhaskara1150 && q.is_zero();
    let result = match op {
        UnaryOp::Negate => {
            trace.push("EXACT-neg", format!("-({}) = {}", show(&q), show(&-&q)));
            -q
        }
        UnaryOp::Square | UnaryOp::Cube => {
            let (k, bh) = if op == UnaryOp::Square { (2, "BH-ii") } else { (3, "BH-iv") };
            let r = num_traits::pow(q.clone(), k);
            if bhaskara_zero {
                trace.push(bh, format!("0^{k} = 0"));
            } else {
                trace.push("EXACT-pow", format!("({})^{k} = {}", show(&q), show(&r)));
            }
            r
        }
        UnaryOp::Sqrt | UnaryOp::Cbrt => {
            let (k, bh, name) = if op == UnaryOp::Sqrt { (2, "BH-iii", "sqrt") } else { (3, "BH-v", "cbrt") };
            let root = exact_root(q.numer(), k)
                .zip(exact_root(q.denom(), k))
                .map(|(n, d)| Rational::new(n, d))
                .ok_or_else(|| {
                    if k == 2 && q.is_negative() {
                        Error::Domain(format!("square root of negative {}", show(&q)))
                    } else {
                        Error::Domain(format!("{name}({}) is not exact", show(&q)))
                    }
                })?;
            if bhaskara_zero {
                trace.push(bh, format!("{name}(0) = 0"));
            } else {
                trace.push("EXACT-root", format!("{name}({}) = {}", show(&q), show(&root)));
            }
            root
        }
    };
    Ok((Value::Finite(result), trace))
}

/// Zero as a number taken away from itself.
pub fn zero_from(a: &Value) -> Result<(Value, RuleTrace)> {
    match a {
        Value::Finite(q) => {
            let mut trace = RuleTrace::new();
            #[allow(clippy::eq_op)]
            let z = q - q;
            trace.push("BG-zero", format!("{} - {} = 0", show(q), show(q)));
            Ok((Value::Finite(z), trace))
        }
        other => Err(Error::undefined(format!("zero is defined as a − a for finite a, not {}", other.kind()))),
    }
}
