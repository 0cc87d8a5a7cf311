//! Reader for Laurent polynomials over Q(√D) written as arithmetic
//! expressions in `z`.
//!
//! Accepts the crate's own serializations (`(11/216+5/216*sqrt(5))*z^-1 + …`
//! and `p/q+r/s*sqrt(d)`) as well as hand-written input such as
//! `z^-1 + 3*z^2 - (1+sqrt(5))/2`. Division is allowed only by nonzero
//! monomials, and negative exponents apply only to monomials.

use num_bigint::BigInt;
use num_traits::ToPrimitive;

use crate::error::{Error, Result};
use crate::laurent::Laurent;
use crate::numfield::Quadratic;
use crate::rational::Rational;

#[derive(Debug, Clone, PartialEq)]
enum Token {
    Int(BigInt),
    Z,
    Sqrt,
    Plus,
    Minus,
    Star,
    Slash,
    Caret,
    LParen,
    RParen,
}

fn tokenize(s: &str) -> Result<Vec<Token>> {
    let mut out = Vec::new();
    let chars: Vec<char> = s.chars().collect();
    let mut i = 0;
    while i < chars.len() {
        let c = chars[i];
        match c {
            ' ' | '\t' | '\n' | '\r' => {}
            '+' => out.push(Token::Plus),
            '-' => out.push(Token::Minus),
            '*' => out.push(Token::Star),
            '/' => out.push(Token::Slash),
            '^' => out.push(Token::Caret),
            '(' => out.push(Token::LParen),
            ')' => out.push(Token::RParen),
            'z' => out.push(Token::Z),
            '0'..='9' => {
                let start = i;
                while i + 1 < chars.len() && chars[i + 1].is_ascii_digit() {
                    i += 1;
                }
                let digits: String = chars[start..=i].iter().collect();
                out.push(Token::Int(digits.parse().expect("ascii digits")));
            }
            's' if chars[i..].starts_with(&['s', 'q', 'r', 't']) => {
                out.push(Token::Sqrt);
                i += 3;
            }
            other => return Err(Error::Parse(format!("unexpected character `{other}`"))),
        }
        i += 1;
    }
    Ok(out)
}

struct Parser<const D: u64> {
    tokens: Vec<Token>,
    pos: usize,
}

type Value<const D: u64> = Laurent<Quadratic<D>>;

impl<const D: u64> Parser<D> {
    fn peek(&self) -> Option<&Token> {
        self.tokens.get(self.pos)
    }

    fn next(&mut self) -> Option<Token> {
        let t = self.tokens.get(self.pos).cloned();
        self.pos += 1;
        t
    }

    fn expect(&mut self, want: Token) -> Result<()> {
        match self.next() {
            Some(t) if t == want => Ok(()),
            other => Err(Error::Parse(format!("expected {want:?}, found {other:?}"))),
        }
    }

    fn expr(&mut self) -> Result<Value<D>> {
        let mut acc = self.term()?;
        loop {
            match self.peek() {
                Some(Token::Plus) => {
                    self.pos += 1;
                    acc = &acc + &self.term()?;
                }
                Some(Token::Minus) => {
                    self.pos += 1;
                    acc = &acc - &self.term()?;
                }
                _ => return Ok(acc),
            }
        }
    }

    fn term(&mut self) -> Result<Value<D>> {
        let mut acc = self.unary()?;
        loop {
            match self.peek() {
                Some(Token::Star) => {
                    self.pos += 1;
                    acc = &acc * &self.unary()?;
                }
                Some(Token::Slash) => {
                    self.pos += 1;
                    let divisor = self.unary()?;
                    acc = &acc * &monomial_inverse(&divisor)?;
                }
                _ => return Ok(acc),
            }
        }
    }

    fn unary(&mut self) -> Result<Value<D>> {
        match self.peek() {
            Some(Token::Minus) => {
                self.pos += 1;
                Ok(-&self.unary()?)
            }
            Some(Token::Plus) => {
                self.pos += 1;
                self.unary()
            }
            _ => self.power(),
        }
    }

    fn power(&mut self) -> Result<Value<D>> {
        let base = self.atom()?;
        if self.peek() != Some(&Token::Caret) {
            return Ok(base);
        }
        self.pos += 1;
        let negative = match self.peek() {
            Some(Token::Minus) => {
                self.pos += 1;
                true
            }
            Some(Token::Plus) => {
                self.pos += 1;
                false
            }
            _ => false,
        };
        let exp = match self.next() {
            Some(Token::Int(n)) => n
                .to_u32()
                .ok_or_else(|| Error::Parse("exponent too large".into()))?,
            other => return Err(Error::Parse(format!("expected exponent, found {other:?}"))),
        };
        if !negative {
            return Ok(base.pow(exp));
        }
        if base.len() > 1 {
            return Err(Error::Parse("negative power of a non-monomial".into()));
        }
        Ok(monomial_inverse(&base)?.pow(exp))
    }

    fn atom(&mut self) -> Result<Value<D>> {
        match self.next() {
            Some(Token::Int(n)) => Ok(Laurent::constant(Quadratic::from_rational(
                Rational::from_integer(n),
            ))),
            Some(Token::Z) => Ok(Laurent::z(1)),
            Some(Token::Sqrt) => {
                self.expect(Token::LParen)?;
                let d = match self.next() {
                    Some(Token::Int(n)) => n
                        .to_u64()
                        .ok_or_else(|| Error::Parse("sqrt argument too large".into()))?,
                    other => {
                        return Err(Error::Parse(format!("expected integer in sqrt, found {other:?}")))
                    }
                };
                self.expect(Token::RParen)?;
                if d != D {
                    return Err(Error::FieldMismatch {
                        expected: D,
                        found: d,
                    });
                }
                Ok(Laurent::constant(Quadratic::sqrt_d()))
            }
            Some(Token::LParen) => {
                let v = self.expr()?;
                self.expect(Token::RParen)?;
                Ok(v)
            }
            other => Err(Error::Parse(format!("unexpected token {other:?}"))),
        }
    }
}

fn monomial_inverse<const D: u64>(v: &Value<D>) -> Result<Value<D>> {
    if v.is_zero() {
        return Err(Error::DivisionByZero);
    }
    if v.len() != 1 {
        return Err(Error::Parse("division by a non-monomial".into()));
    }
    let (k, c) = v.lowest().expect("one term");
    Ok(Laurent::monomial(c.inv()?, -k))
}

/// Parses an expression in `z` into a Laurent polynomial over Q(√D).
pub fn parse_laurent<const D: u64>(s: &str) -> Result<Laurent<Quadratic<D>>> {
    let tokens = tokenize(s)?;
    if tokens.is_empty() {
        return Err(Error::Parse("empty input".into()));
    }
    let mut p = Parser::<D> { tokens, pos: 0 };
    let v = p.expr()?;
    if p.pos != p.tokens.len() {
        return Err(Error::Parse(format!(
            "trailing input at token {}",
            p.pos + 1
        )));
    }
    Ok(v)
}
