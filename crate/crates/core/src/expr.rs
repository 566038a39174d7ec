//! Parser for algebra expressions such as `e1*e2 - q^2*e2*e1`.
//!
//! Precedence from tightest: `^`, then `*` and `/` (left-associative), then
//! unary minus, then binary `+` and `-`. Exponents are integer literals and
//! may be negative. Division is only meaningful by scalars; that is checked
//! at evaluation time.

use std::fmt;

use num_bigint::BigInt;

use crate::error::{Error, Result};
use crate::scalar::BigRat;

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Expr {
    Num(BigInt),
    Q,
    Ident(String),
    Neg(Box<Expr>),
    Add(Box<Expr>, Box<Expr>),
    Sub(Box<Expr>, Box<Expr>),
    Mul(Box<Expr>, Box<Expr>),
    Div(Box<Expr>, Box<Expr>),
    Pow(Box<Expr>, i64),
}

impl Expr {
    fn prec(&self) -> u8 {
        match self {
            Expr::Add(..) | Expr::Sub(..) => 1,
            Expr::Neg(_) => 2,
            Expr::Mul(..) | Expr::Div(..) => 3,
            Expr::Pow(..) => 4,
            _ => 5,
        }
    }

    /// Evaluates an expression built only from numbers, returning a rational.
    pub fn as_rational(&self) -> Option<BigRat> {
        Some(match self {
            Expr::Num(n) => BigRat::from_integer(n.clone()),
            Expr::Neg(a) => -a.as_rational()?,
            Expr::Add(a, b) => a.as_rational()? + b.as_rational()?,
            Expr::Sub(a, b) => a.as_rational()? - b.as_rational()?,
            Expr::Mul(a, b) => a.as_rational()? * b.as_rational()?,
            Expr::Div(a, b) => {
                let d = b.as_rational()?;
                if d == BigRat::from_integer(0.into()) {
                    return None;
                }
                a.as_rational()? / d
            }
            Expr::Pow(a, e) => {
                let base = a.as_rational()?;
                if *e < 0 && base == BigRat::from_integer(0.into()) {
                    return None;
                }
                num_traits::pow::Pow::pow(base, *e as i32)
            }
            Expr::Q | Expr::Ident(_) => return None,
        })
    }
}

impl fmt::Display for Expr {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let wrap = |f: &mut fmt::Formatter<'_>, e: &Expr, min: u8| -> fmt::Result {
            if e.prec() < min {
                write!(f, "({e})")
            } else {
                write!(f, "{e}")
            }
        };
        match self {
            Expr::Num(n) => write!(f, "{n}"),
            Expr::Q => f.write_str("q"),
            Expr::Ident(s) => f.write_str(s),
            Expr::Neg(a) => {
                f.write_str("-")?;
                wrap(f, a, 3)
            }
            Expr::Add(a, b) => {
                wrap(f, a, 1)?;
                f.write_str(" + ")?;
                wrap(f, b, 2)
            }
            Expr::Sub(a, b) => {
                wrap(f, a, 1)?;
                f.write_str(" - ")?;
                wrap(f, b, 2)
            }
            Expr::Mul(a, b) => {
                wrap(f, a, 3)?;
                f.write_str("*")?;
                wrap(f, b, 4)
            }
            Expr::Div(a, b) => {
                wrap(f, a, 3)?;
                f.write_str("/")?;
                wrap(f, b, 4)
            }
            Expr::Pow(a, e) => {
                wrap(f, a, 5)?;
                write!(f, "^{e}")
            }
        }
    }
}

struct Parser<'a> {
    src: &'a str,
    pos: usize,
}

fn is_ident_start(c: char) -> bool {
    c.is_ascii_alphabetic() || c == '_'
}

fn is_ident_char(c: char) -> bool {
    c.is_ascii_alphanumeric() || c == '_' || c == '\''
}

impl<'a> Parser<'a> {
    fn skip_ws(&mut self) {
        while let Some(c) = self.peek_raw() {
            if c.is_whitespace() {
                self.pos += c.len_utf8();
            } else {
                break;
            }
        }
    }

    fn peek_raw(&self) -> Option<char> {
        self.src[self.pos..].chars().next()
    }

    fn peek(&mut self) -> Option<char> {
        self.skip_ws();
        self.peek_raw()
    }

    fn fail<T>(&mut self, expected: &[&str]) -> Result<T> {
        self.skip_ws();
        Err(Error::Parse { offset: self.pos, expected: expected.iter().map(|s| s.to_string()).collect() })
    }

    fn eat(&mut self, c: char) -> bool {
        if self.peek() == Some(c) {
            self.pos += c.len_utf8();
            true
        } else {
            false
        }
    }

    fn expr(&mut self) -> Result<Expr> {
        let mut lhs = self.signed()?;
        loop {
            if self.eat('+') {
                lhs = Expr::Add(Box::new(lhs), Box::new(self.signed()?));
            } else if self.eat('-') {
                lhs = Expr::Sub(Box::new(lhs), Box::new(self.signed()?));
            } else {
                return Ok(lhs);
            }
        }
    }

    fn signed(&mut self) -> Result<Expr> {
        if self.eat('-') {
            Ok(Expr::Neg(Box::new(self.signed()?)))
        } else {
            self.product()
        }
    }

    fn product(&mut self) -> Result<Expr> {
        let mut lhs = self.power()?;
        loop {
            if self.eat('*') {
                lhs = Expr::Mul(Box::new(lhs), Box::new(self.power()?));
            } else if self.eat('/') {
                lhs = Expr::Div(Box::new(lhs), Box::new(self.power()?));
            } else {
                return Ok(lhs);
            }
        }
    }

    fn power(&mut self) -> Result<Expr> {
        let base = self.atom()?;
        if self.eat('^') {
            let neg = self.eat('-');
            let Some(n) = self.digits() else {
                return self.fail(&["integer exponent"]);
            };
            let n: i64 = match n.parse() {
                Ok(v) => v,
                Err(_) => return self.fail(&["exponent fitting in 64 bits"]),
            };
            Ok(Expr::Pow(Box::new(base), if neg { -n } else { n }))
        } else {
            Ok(base)
        }
    }

    fn digits(&mut self) -> Option<&'a str> {
        self.skip_ws();
        let start = self.pos;
        while self.peek_raw().is_some_and(|c| c.is_ascii_digit()) {
            self.pos += 1;
        }
        (self.pos > start).then(|| &self.src[start..self.pos])
    }

    fn atom(&mut self) -> Result<Expr> {
        const EXPECTED: &[&str] = &["number", "q", "identifier", "("];
        match self.peek() {
            Some(c) if c.is_ascii_digit() => {
                let d = self.digits().unwrap();
                Ok(Expr::Num(d.parse().expect("decimal digits")))
            }
            Some('(') => {
                self.pos += 1;
                let e = self.expr()?;
                if !self.eat(')') {
                    return self.fail(&[")", "+", "-", "*", "/", "^"]);
                }
                Ok(e)
            }
            Some(c) if is_ident_start(c) => {
                let start = self.pos;
                while self.peek_raw().is_some_and(is_ident_char) {
                    self.pos += self.peek_raw().unwrap().len_utf8();
                }
                let name = &self.src[start..self.pos];
                Ok(if name == "q" { Expr::Q } else { Expr::Ident(name.to_string()) })
            }
            _ => self.fail(EXPECTED),
        }
    }
}

pub fn parse_expr(text: &str) -> Result<Expr> {
    let mut p = Parser { src: text, pos: 0 };
    let e = p.expr()?;
    if p.peek().is_some() {
        return p.fail(&["+", "-", "*", "/", "^", "end of input"]);
    }
    Ok(e)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn ident(s: &str) -> Box<Expr> {
        Box::new(Expr::Ident(s.into()))
    }

    #[test]
    fn e3_definition() {
        let e = parse_expr("e1*e2 - q^2*e2*e1").unwrap();
        let expect = Expr::Sub(
            Box::new(Expr::Mul(ident("e1"), ident("e2"))),
            Box::new(Expr::Mul(
                Box::new(Expr::Mul(Box::new(Expr::Pow(Box::new(Expr::Q), 2)), ident("e2"))),
                ident("e1"),
            )),
        );
        assert_eq!(e, expect);
    }

    #[test]
    fn negative_exponent_and_unary_minus() {
        assert_eq!(parse_expr("q^-2").unwrap(), Expr::Pow(Box::new(Expr::Q), -2));
        // unary minus binds looser than *
        assert_eq!(
            parse_expr("-a*b").unwrap(),
            Expr::Neg(Box::new(Expr::Mul(ident("a"), ident("b"))))
        );
        assert_eq!(parse_expr("z'").unwrap(), Expr::Ident("z'".into()));
    }

    #[test]
    fn unbalanced_parenthesis() {
        match parse_expr("e1*(e2") {
            Err(Error::Parse { offset, expected }) => {
                assert_eq!(offset, 6);
                assert!(expected.contains(&")".to_string()));
            }
            other => panic!("unexpected {other:?}"),
        }
        assert!(matches!(parse_expr("e1 e2"), Err(Error::Parse { offset: 3, .. })));
        assert!(matches!(parse_expr(""), Err(Error::Parse { offset: 0, .. })));
        assert!(matches!(parse_expr("e1^x"), Err(Error::Parse { .. })));
    }

    #[test]
    fn printing_round_trips() {
        for s in [
            "e1*e2 - q^2*e2*e1",
            "-(a + b)*c",
            "(1 - q^-4)*z*e1 + q^-4*(1 - q^-2)*e3^2",
            "1/2*e1 - -e2",
            "(a - b) - (c - d)",
            "a^2^3",
            "(-a)^2",
            "q^4/(q^6 - q^4 - q^2 + 1)*e3^-1",
        ] {
            if let Ok(e) = parse_expr(s) {
                assert_eq!(parse_expr(&e.to_string()).unwrap(), e, "{s} -> {e}");
            }
        }
    }

    #[test]
    fn rational_literals() {
        assert_eq!(parse_expr("3/4").unwrap().as_rational(), Some(BigRat::new(3.into(), 4.into())));
        assert_eq!(parse_expr("-(1/2)^-2").unwrap().as_rational(), Some(BigRat::from_integer((-4).into())));
    }
}
