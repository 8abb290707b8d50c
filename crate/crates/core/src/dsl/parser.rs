use num_bigint::BigInt;

use super::{Expr, ParseError, ParseErrorKind};
use crate::exact::Rational;

#[derive(Clone, Debug, PartialEq, Eq)]
enum Tok {
    Int(BigInt),
    Ident(String),
    Plus,
    Minus,
    Star,
    Slash,
    Caret,
    LParen,
    RParen,
}

impl Tok {
    fn describe(&self) -> String {
        match self {
            Tok::Int(n) => format!("number {n}"),
            Tok::Ident(s) => format!("identifier `{s}`"),
            Tok::Plus => "`+`".into(),
            Tok::Minus => "`-`".into(),
            Tok::Star => "`*`".into(),
            Tok::Slash => "`/`".into(),
            Tok::Caret => "`^`".into(),
            Tok::LParen => "`(`".into(),
            Tok::RParen => "`)`".into(),
        }
    }
}

fn err(offset: usize, kind: ParseErrorKind) -> ParseError {
    ParseError { offset, kind }
}

fn lex(src: &str) -> Result<Vec<(usize, Tok)>, ParseError> {
    let bytes = src.as_bytes();
    let mut out = Vec::new();
    let mut i = 0;
    while i < bytes.len() {
        let b = bytes[i];
        let start = i;
        let tok = match b {
            b' ' | b'\t' | b'\n' | b'\r' => {
                i += 1;
                continue;
            }
            b'0'..=b'9' => {
                while i < bytes.len() && bytes[i].is_ascii_digit() {
                    i += 1;
                }
                out.push((start, Tok::Int(src[start..i].parse().expect("ascii digits"))));
                continue;
            }
            b'A'..=b'Z' | b'a'..=b'z' => {
                while i < bytes.len() && (bytes[i].is_ascii_alphanumeric() || bytes[i] == b'_') {
                    i += 1;
                }
                out.push((start, Tok::Ident(src[start..i].to_string())));
                continue;
            }
            b'+' => Tok::Plus,
            b'-' => Tok::Minus,
            b'*' => {
                if bytes.get(i + 1) == Some(&b'*') {
                    return Err(err(i + 1, ParseErrorKind::DoubleStar));
                }
                Tok::Star
            }
            b'/' => Tok::Slash,
            b'^' => Tok::Caret,
            b'(' => Tok::LParen,
            b')' => Tok::RParen,
            _ => {
                let c = src[i..].chars().next().expect("in bounds");
                return Err(err(i, ParseErrorKind::UnknownToken(c)));
            }
        };
        i += 1;
        out.push((start, tok));
    }
    Ok(out)
}

struct Parser {
    toks: Vec<(usize, Tok)>,
    pos: usize,
    end: usize,
    depth: usize,
}

const MAX_DEPTH: usize = 256;

impl Parser {
    fn peek(&self) -> Option<&Tok> {
        self.toks.get(self.pos).map(|(_, t)| t)
    }

    fn offset(&self) -> usize {
        self.toks.get(self.pos).map_or(self.end, |(o, _)| *o)
    }

    fn bump(&mut self) -> Option<Tok> {
        let t = self.toks.get(self.pos).map(|(_, t)| t.clone());
        self.pos += 1;
        t
    }

    fn sum(&mut self) -> Result<Expr, ParseError> {
        let mut terms = vec![self.term()?];
        loop {
            match self.peek() {
                Some(Tok::Plus) => {
                    self.bump();
                    terms.push(self.term()?);
                }
                Some(Tok::Minus) => {
                    self.bump();
                    terms.push(Expr::Neg(Box::new(self.term()?)));
                }
                _ => break,
            }
        }
        Ok(if terms.len() == 1 { terms.pop().unwrap() } else { Expr::Sum(terms) })
    }

    fn term(&mut self) -> Result<Expr, ParseError> {
        let mut factors = vec![self.unary()?];
        loop {
            match self.peek() {
                Some(Tok::Star) => {
                    self.bump();
                    factors.push(self.unary()?);
                }
                Some(Tok::Int(_) | Tok::Ident(_) | Tok::LParen) => {
                    return Err(err(self.offset(), ParseErrorKind::ImplicitMultiplication));
                }
                _ => break,
            }
        }
        Ok(if factors.len() == 1 { factors.pop().unwrap() } else { Expr::Product(factors) })
    }

    fn unary(&mut self) -> Result<Expr, ParseError> {
        if self.peek() == Some(&Tok::Minus) {
            self.bump();
            self.enter()?;
            let inner = self.unary();
            self.depth -= 1;
            return Ok(Expr::Neg(Box::new(inner?)));
        }
        self.power()
    }

    fn power(&mut self) -> Result<Expr, ParseError> {
        let base = self.atom()?;
        if self.peek() != Some(&Tok::Caret) {
            return Ok(base);
        }
        self.bump();
        let at = self.offset();
        let exp = match self.bump() {
            Some(Tok::Int(n)) => u32::try_from(n).map_err(|_| err(at, ParseErrorKind::ExponentOverflow))?,
            Some(_) => return Err(err(at, ParseErrorKind::BadExponent)),
            None => return Err(err(at, ParseErrorKind::BadExponent)),
        };
        match self.peek() {
            Some(Tok::Caret) => Err(err(self.offset(), ParseErrorKind::ChainedPower)),
            Some(Tok::Slash) => Err(err(self.offset(), ParseErrorKind::BadExponent)),
            _ => Ok(Expr::Power(Box::new(base), exp)),
        }
    }

    fn enter(&mut self) -> Result<(), ParseError> {
        self.depth += 1;
        if self.depth > MAX_DEPTH {
            return Err(err(self.offset(), ParseErrorKind::Unexpected("nesting too deep".into())));
        }
        Ok(())
    }

    fn atom(&mut self) -> Result<Expr, ParseError> {
        let at = self.offset();
        match self.bump() {
            Some(Tok::Int(n)) => {
                if self.peek() == Some(&Tok::Slash) {
                    self.bump();
                    let dat = self.offset();
                    match self.bump() {
                        Some(Tok::Int(d)) => Rational::try_new(n, d)
                            .map(Expr::Scalar)
                            .map_err(|_| err(dat, ParseErrorKind::ZeroDenominator)),
                        Some(t) => Err(err(dat, ParseErrorKind::Unexpected(t.describe()))),
                        None => Err(err(dat, ParseErrorKind::UnexpectedEnd)),
                    }
                } else {
                    Ok(Expr::Scalar(Rational::from_integer(n)))
                }
            }
            Some(Tok::Ident(name)) => Ok(Expr::Generator(name)),
            Some(Tok::LParen) => {
                self.enter()?;
                let inner = self.sum()?;
                self.depth -= 1;
                match self.bump() {
                    Some(Tok::RParen) => Ok(inner),
                    _ => Err(err(at, ParseErrorKind::Unbalanced)),
                }
            }
            Some(Tok::RParen) => Err(err(at, ParseErrorKind::Unbalanced)),
            Some(t) => Err(err(at, ParseErrorKind::Unexpected(t.describe()))),
            None => Err(err(at, ParseErrorKind::UnexpectedEnd)),
        }
    }
}

/// Parse a cycle expression. Errors carry the byte offset of the offending token.
pub fn parse_expr(src: &str) -> Result<Expr, ParseError> {
    let toks = lex(src)?;
    let mut p = Parser {
        toks,
        pos: 0,
        end: src.len(),
        depth: 0,
    };
    let e = p.sum()?;
    match p.peek() {
        None => Ok(e),
        Some(Tok::RParen) => Err(err(p.offset(), ParseErrorKind::Unbalanced)),
        Some(t) => {
            let d = t.describe();
            Err(err(p.offset(), ParseErrorKind::Unexpected(d)))
        }
    }
}
