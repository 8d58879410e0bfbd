//! Expression trees, a small infix parser, and a tracing evaluator.
//!
//! Grammar (loosest binding first):
//!
//! ```text
//! sum     := product (("+" | "-" | "−") product)*
//! product := prefix (("*" | "×" | "/" | "÷") prefix)*
//! prefix  := ("-" | "−") prefix | postfix
//! postfix := atom ("^2" | "^3" | "²" | "³")*
//! atom    := number | "khahara" | "∞" | ("sqrt" | "cbrt") "(" sum ")" | "(" sum ")"
//! ```
//!
//! Numbers are exact decimals (`7`, `0.001`, `.1`).

use std::fmt;

use crate::arith::rules::RuleTrace;
use crate::arith::{eval_binary, eval_unary, BinaryOp, UnaryOp};
use crate::error::{Error, Result};
use crate::numeric::{format_rational, parse_rational, RuleSet, Value};

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Expression {
    Literal(Value),
    Unary(UnaryOp, Box<Expression>),
    Binary(BinaryOp, Box<Expression>, Box<Expression>),
}

impl Expression {
    pub fn literal(v: Value) -> Self {
        Expression::Literal(v)
    }

    pub fn unary(op: UnaryOp, e: Expression) -> Self {
        Expression::Unary(op, Box::new(e))
    }

    pub fn binary(op: BinaryOp, lhs: Expression, rhs: Expression) -> Self {
        Expression::Binary(op, Box::new(lhs), Box::new(rhs))
    }

    /// Number of nodes in the tree.
    pub fn size(&self) -> usize {
        match self {
            Expression::Literal(_) => 1,
            Expression::Unary(_, e) => 1 + e.size(),
            Expression::Binary(_, l, r) => 1 + l.size() + r.size(),
        }
    }
}

impl fmt::Display for Expression {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Expression::Literal(Value::Finite(q)) if q.is_integer() => write!(f, "{}", q.numer()),
            Expression::Literal(Value::Finite(q)) => write!(f, "({})", format_rational(q)),
            Expression::Literal(Value::Khahara) => f.write_str("khahara"),
            Expression::Literal(other) => write!(f, "<{}>", other.kind()),
            Expression::Unary(op, e) => match op {
                UnaryOp::Negate => write!(f, "-{}", Wrapped(e)),
                UnaryOp::Square => write!(f, "{}^2", Wrapped(e)),
                UnaryOp::Cube => write!(f, "{}^3", Wrapped(e)),
                UnaryOp::Sqrt => write!(f, "sqrt({e})"),
                UnaryOp::Cbrt => write!(f, "cbrt({e})"),
            },
            Expression::Binary(op, l, r) => write!(f, "{} {op} {}", Wrapped(l), Wrapped(r)),
        }
    }
}

/// Parenthesizes compound operands.
struct Wrapped<'a>(&'a Expression);

impl fmt::Display for Wrapped<'_> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self.0 {
            Expression::Binary(..) => write!(f, "({})", self.0),
            e => write!(f, "{e}"),
        }
    }
}

/// An evaluation failure together with where in the tree it happened.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ExprError {
    /// Pre-order index of the failing node (root is 0).
    pub node: usize,
    /// The failing subexpression, rendered.
    pub subexpression: String,
    pub error: Error,
}

impl fmt::Display for ExprError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{} (at node {}: {})", self.error, self.node, self.subexpression)
    }
}

impl std::error::Error for ExprError {
    fn source(&self) -> Option<&(dyn std::error::Error + 'static)> {
        Some(&self.error)
    }
}

/// Depth-first, left-to-right evaluation with a concatenated rule trace.
pub fn eval_expression(e: &Expression, rules: RuleSet) -> std::result::Result<(Value, RuleTrace), ExprError> {
    let mut trace = RuleTrace::new();
    let v = eval_node(e, 0, rules, &mut trace)?;
    Ok((v, trace))
}

fn eval_node(e: &Expression, index: usize, rules: RuleSet, trace: &mut RuleTrace) -> std::result::Result<Value, ExprError> {
    let at = |error: Error| ExprError { node: index, subexpression: e.to_string(), error };
    match e {
        Expression::Literal(v) => Ok(crate::numeric::normalize(v)),
        Expression::Unary(op, inner) => {
            let v = eval_node(inner, index + 1, rules, trace)?;
            let (out, t) = eval_unary(*op, &v, rules).map_err(at)?;
            trace.extend(t);
            Ok(out)
        }
        Expression::Binary(op, l, r) => {
            let lv = eval_node(l, index + 1, rules, trace)?;
            let rv = eval_node(r, index + 1 + l.size(), rules, trace)?;
            let (out, t) = eval_binary(*op, &lv, &rv, rules).map_err(at)?;
            trace.extend(t);
            Ok(out)
        }
    }
}

#[derive(Debug, Clone, PartialEq)]
enum Token {
    Number(String),
    Word(String),
    Op(BinaryOp),
    Minus,
    Power(u8),
    Khahara,
    Open,
    Close,
}

fn tokenize(src: &str) -> Result<Vec<(usize, Token)>> {
    let mut out = Vec::new();
    let chars: Vec<(usize, char)> = src.char_indices().collect();
    let mut i = 0;
    while i < chars.len() {
        let (pos, c) = chars[i];
        let col = src[..pos].chars().count() + 1;
        i += 1;
        let tok = match c {
            c if c.is_whitespace() => continue,
            '0'..='9' | '.' => {
                let mut s = c.to_string();
                while let Some(&(_, d)) = chars.get(i) {
                    if d.is_ascii_digit() || d == '.' {
                        s.push(d);
                        i += 1;
                    } else {
                        break;
                    }
                }
                Token::Number(s)
            }
            'a'..='z' | 'A'..='Z' => {
                let mut s = c.to_string();
                while let Some(&(_, d)) = chars.get(i) {
                    if d.is_ascii_alphabetic() {
                        s.push(d);
                        i += 1;
                    } else {
                        break;
                    }
                }
                match s.to_ascii_lowercase().as_str() {
                    "khahara" | "inf" => Token::Khahara,
                    _ => Token::Word(s.to_ascii_lowercase()),
                }
            }
            '∞' => Token::Khahara,
            '+' => Token::Op(BinaryOp::Add),
            '-' | '−' => Token::Minus,
            '*' | '×' => Token::Op(BinaryOp::Mul),
            '/' | '÷' => Token::Op(BinaryOp::Div),
            '²' => Token::Power(2),
            '³' => Token::Power(3),
            '^' => match chars.get(i) {
                Some(&(_, '2')) => {
                    i += 1;
                    Token::Power(2)
                }
                Some(&(_, '3')) => {
                    i += 1;
                    Token::Power(3)
                }
                _ => return Err(Error::parse(format!("column {col}: only ^2 and ^3 are supported"))),
            },
            '(' => Token::Open,
            ')' => Token::Close,
            other => return Err(Error::parse(format!("column {col}: unexpected character {other:?}"))),
        };
        out.push((col, tok));
    }
    Ok(out)
}

struct Parser {
    tokens: Vec<(usize, Token)>,
    pos: usize,
    end_col: usize,
}

impl Parser {
    fn peek(&self) -> Option<&Token> {
        self.tokens.get(self.pos).map(|(_, t)| t)
    }

    fn col(&self) -> usize {
        self.tokens.get(self.pos).map(|(c, _)| *c).unwrap_or(self.end_col)
    }

    fn next(&mut self) -> Option<Token> {
        let t = self.tokens.get(self.pos).map(|(_, t)| t.clone());
        self.pos += 1;
        t
    }

    fn fail<T>(&self, what: &str) -> Result<T> {
        Err(Error::parse(format!("column {}: {what}", self.col())))
    }

    fn expect_close(&mut self) -> Result<()> {
        match self.next() {
            Some(Token::Close) => Ok(()),
            _ => {
                self.pos -= 1;
                self.fail("expected ')'")
            }
        }
    }

    fn sum(&mut self) -> Result<Expression> {
        let mut lhs = self.product()?;
        loop {
            let op = match self.peek() {
                Some(Token::Op(BinaryOp::Add)) => BinaryOp::Add,
                Some(Token::Minus) => BinaryOp::Sub,
                _ => return Ok(lhs),
            };
            self.pos += 1;
            lhs = Expression::binary(op, lhs, self.product()?);
        }
    }

    fn product(&mut self) -> Result<Expression> {
        let mut lhs = self.prefix()?;
        while let Some(Token::Op(op @ (BinaryOp::Mul | BinaryOp::Div))) = self.peek() {
            let op = *op;
            self.pos += 1;
            lhs = Expression::binary(op, lhs, self.prefix()?);
        }
        Ok(lhs)
    }

    fn prefix(&mut self) -> Result<Expression> {
        if self.peek() == Some(&Token::Minus) {
            self.pos += 1;
            return Ok(Expression::unary(UnaryOp::Negate, self.prefix()?));
        }
        self.postfix()
    }

    fn postfix(&mut self) -> Result<Expression> {
        let mut e = self.atom()?;
        while let Some(Token::Power(k)) = self.peek() {
            let op = if *k == 2 { UnaryOp::Square } else { UnaryOp::Cube };
            self.pos += 1;
            e = Expression::unary(op, e);
        }
        Ok(e)
    }

    fn atom(&mut self) -> Result<Expression> {
        let col = self.col();
        match self.next() {
            Some(Token::Number(s)) => parse_rational(&s)
                .map(|q| Expression::literal(Value::Finite(q)))
                .map_err(|_| Error::parse(format!("column {col}: bad number {s:?}"))),
            Some(Token::Khahara) => Ok(Expression::literal(Value::Khahara)),
            Some(Token::Open) => {
                let e = self.sum()?;
                self.expect_close()?;
                Ok(e)
            }
            Some(Token::Word(w)) if w == "sqrt" || w == "cbrt" => {
                if self.next() != Some(Token::Open) {
                    self.pos -= 1;
                    return self.fail(&format!("expected '(' after {w}"));
                }
                let e = self.sum()?;
                self.expect_close()?;
                let op = if w == "sqrt" { UnaryOp::Sqrt } else { UnaryOp::Cbrt };
                Ok(Expression::unary(op, e))
            }
            Some(Token::Word(w)) => Err(Error::parse(format!("column {col}: unknown word {w:?}"))),
            Some(_) => Err(Error::parse(format!("column {col}: expected a number or '('"))),
            None => Err(Error::parse(format!("column {col}: unexpected end of expression"))),
        }
    }
}

pub fn parse_expression(src: &str) -> Result<Expression> {
    let tokens = tokenize(src)?;
    if tokens.is_empty() {
        return Err(Error::parse("empty expression"));
    }
    let mut p = Parser { tokens, pos: 0, end_col: src.chars().count() + 1 };
    let e = p.sum()?;
    if p.pos < p.tokens.len() {
        return p.fail("unexpected trailing input");
    }
    Ok(e)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn eval(src: &str, rules: RuleSet) -> std::result::Result<(Value, RuleTrace), ExprError> {
        eval_expression(&parse_expression(src).unwrap(), rules)
    }

    #[test]
    fn parses_precedence() {
        let e = parse_expression("1 + 2 * 3").unwrap();
        assert_eq!(e.to_string(), "1 + (2 * 3)");
        let e = parse_expression("-2^2").unwrap();
        assert_eq!(e, Expression::unary(UnaryOp::Negate, Expression::unary(UnaryOp::Square, Expression::literal(Value::int(2)))));
        let e = parse_expression("(5 × 0) ÷ 0").unwrap();
        assert_eq!(e.to_string(), "(5 * 0) / 0");
        assert_eq!(parse_expression("sqrt(9) + cbrt(8)³").unwrap().size(), 6);
        assert_eq!(parse_expression("10 - 2 - 3").unwrap().to_string(), "(10 - 2) - 3");
    }

    #[test]
    fn parse_errors() {
        for bad in ["", "1 +", "(1", "1)", "2^4", "foo(1)", "sqrt 4", "1 $ 2", "1..2", "1 2"] {
            assert!(matches!(parse_expression(bad), Err(Error::Parse(_))), "{bad:?}");
        }
    }

    #[test]
    fn bhaskara_cancellation() {
        let (v, t) = eval("(5 * 0) / 0", RuleSet::Bhaskara1150).unwrap();
        assert_eq!(v, Value::int(5));
        assert_eq!(t.ids(), ["BH-vii", "BH-viii"]);
        let (v, _) = eval("(5 * 0) + 1", RuleSet::Bhaskara1150).unwrap();
        assert_eq!(v, Value::int(1));
        let (v, _) = eval("khahara + 7", RuleSet::Bhaskara1150).unwrap();
        assert_eq!(v, Value::Khahara);
    }

    #[test]
    fn error_position() {
        let err = eval("1 / 0", RuleSet::Modern).unwrap_err();
        assert_eq!(err.error.name(), "DivisionByZero");
        assert_eq!(err.node, 0);
        let err = eval("2 + (3 * (1 / 0))", RuleSet::Modern).unwrap_err();
        assert_eq!(err.node, 4);
        assert_eq!(err.subexpression, "1 / 0");
        let err = eval("(1 / 0) + 1", RuleSet::Brahmagupta628).unwrap_err();
        assert_eq!(err.error.name(), "UndefinedBySource");
        assert_eq!(err.node, 0);
    }

    #[test]
    fn exact_decimals() {
        let (v, _) = eval("1 / .001", RuleSet::Modern).unwrap();
        assert_eq!(v, Value::int(1000));
        let (v, _) = eval("0.1 + 0.2", RuleSet::Modern).unwrap();
        assert_eq!(v, Value::ratio(3, 10));
    }
}
