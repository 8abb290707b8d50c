//! Text syntax for cycle expressions.
//!
//! Grammar (whitespace-insensitive):
//!
//! ```text
//! sum     := term (('+' | '-') term)*
//! term    := unary ('*' unary)*
//! unary   := '-' unary | power
//! power   := atom ('^' INT)?
//! atom    := INT ('/' INT)? | IDENT | '(' sum ')'
//! ```
//!
//! `^` binds tighter than unary minus, which binds tighter than `*`, so
//! `-E4^3` reads as `-(E4^3)` and `-a*b` as `(-a)*b`.

mod parser;
mod print;

pub use parser::parse_expr;
pub use print::print_expr;

use crate::exact::Rational;

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub enum Expr {
    Sum(Vec<Expr>),
    Product(Vec<Expr>),
    Power(Box<Expr>, u32),
    Neg(Box<Expr>),
    Scalar(Rational),
    Generator(String),
}

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
#[error("at byte {offset}: {kind}")]
pub struct ParseError {
    pub offset: usize,
    pub kind: ParseErrorKind,
}

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum ParseErrorKind {
    #[error("unexpected character {0:?}")]
    UnknownToken(char),
    #[error("unexpected {0}")]
    Unexpected(String),
    #[error("unexpected end of input")]
    UnexpectedEnd,
    #[error("unbalanced parentheses")]
    Unbalanced,
    #[error("exponent must be a nonnegative integer literal")]
    BadExponent,
    #[error("exponent too large")]
    ExponentOverflow,
    #[error("zero denominator in rational literal")]
    ZeroDenominator,
    #[error("`**` is not an operator; use `^`")]
    DoubleStar,
    #[error("missing `*` (implicit multiplication is not accepted)")]
    ImplicitMultiplication,
    #[error("chained exponents need parentheses")]
    ChainedPower,
}

impl Expr {
    pub fn generator(name: &str) -> Self {
        Expr::Generator(name.to_string())
    }

    pub fn scalar(r: impl Into<Rational>) -> Self {
        Expr::Scalar(r.into())
    }

    /// Canonical shape: nested sums and products flattened, single-child
    /// sums and products unwrapped, negative scalars written as negations.
    pub fn normalize(&self) -> Expr {
        match self {
            Expr::Sum(children) => {
                let mut flat = Vec::with_capacity(children.len());
                for c in children {
                    match c.normalize() {
                        Expr::Sum(inner) => flat.extend(inner),
                        other => flat.push(other),
                    }
                }
                match flat.len() {
                    0 => Expr::Scalar(Rational::zero()),
                    1 => flat.pop().unwrap(),
                    _ => Expr::Sum(flat),
                }
            }
            Expr::Product(children) => {
                let mut flat = Vec::with_capacity(children.len());
                for c in children {
                    match c.normalize() {
                        Expr::Product(inner) => flat.extend(inner),
                        other => flat.push(other),
                    }
                }
                match flat.len() {
                    0 => Expr::Scalar(Rational::one()),
                    1 => flat.pop().unwrap(),
                    _ => Expr::Product(flat),
                }
            }
            Expr::Power(base, e) => Expr::Power(Box::new(base.normalize()), *e),
            Expr::Neg(inner) => Expr::Neg(Box::new(inner.normalize())),
            Expr::Scalar(r) if r.is_negative() => Expr::Neg(Box::new(Expr::Scalar(-r))),
            Expr::Scalar(r) => Expr::Scalar(r.clone()),
            Expr::Generator(g) => Expr::Generator(g.clone()),
        }
    }

    /// Generator names in order of first appearance.
    pub fn generators(&self) -> Vec<String> {
        fn walk(e: &Expr, out: &mut Vec<String>) {
            match e {
                Expr::Sum(cs) | Expr::Product(cs) => cs.iter().for_each(|c| walk(c, out)),
                Expr::Power(b, _) | Expr::Neg(b) => walk(b, out),
                Expr::Scalar(_) => {}
                Expr::Generator(g) => {
                    if !out.contains(g) {
                        out.push(g.clone());
                    }
                }
            }
        }
        let mut out = Vec::new();
        walk(self, &mut out);
        out
    }
}

pub fn is_valid_generator_name(name: &str) -> bool {
    let mut chars = name.chars();
    matches!(chars.next(), Some(c) if c.is_ascii_alphabetic())
        && chars.all(|c| c.is_ascii_alphanumeric() || c == '_')
}
