//! Expression language for rational functions and dual numbers.
//!
//! ```text
//! expr   := term (('+' | '-') term)*
//! term   := factor (('*' | '/') factor)*
//! factor := '-' factor | atom ('^' nat)?
//! atom   := int | 'x' | 'y' | 't' | 'eps' | '(' expr ')'
//! ```
//!
//! `a/b` between integers is an exact rational. `eps` is a reserved token with
//! `eps^2 = 0`; any product that would produce an `eps^2` term is rejected.

use num_bigint::BigInt;

use crate::arith::dual::{dual_invert, DualRatFunc};
use crate::arith::poly::{Ring, Var};
use crate::arith::ratfunc::RatFunc;
use crate::arith::Rational;
use crate::error::{Error, Result};

const MAX_EXPONENT: u32 = 64;

#[derive(Clone, Debug, PartialEq, Eq)]
enum Tok {
    Num(BigInt),
    Var(Var),
    Eps,
    Plus,
    Minus,
    Star,
    Slash,
    Caret,
    LParen,
    RParen,
}

fn syntax(pos: usize, message: impl Into<String>) -> Error {
    Error::Syntax { pos, message: message.into() }
}

fn lex(src: &str) -> Result<Vec<(usize, Tok)>> {
    let bytes = src.as_bytes();
    let mut out = Vec::new();
    let mut i = 0;
    while i < bytes.len() {
        let c = bytes[i];
        let start = i;
        let tok = match c {
            b' ' | b'\t' | b'\r' | b'\n' => {
                i += 1;
                continue;
            }
            b'+' => Tok::Plus,
            b'-' => Tok::Minus,
            b'*' => Tok::Star,
            b'/' => Tok::Slash,
            b'^' => Tok::Caret,
            b'(' => Tok::LParen,
            b')' => Tok::RParen,
            b'0'..=b'9' => {
                while i < bytes.len() && bytes[i].is_ascii_digit() {
                    i += 1;
                }
                out.push((start, Tok::Num(src[start..i].parse().unwrap())));
                continue;
            }
            c if c.is_ascii_alphabetic() => {
                while i < bytes.len() && bytes[i].is_ascii_alphanumeric() {
                    i += 1;
                }
                let tok = match &src[start..i] {
                    "x" => Tok::Var(Var::X),
                    "y" => Tok::Var(Var::Y),
                    "t" => Tok::Var(Var::T),
                    "eps" => Tok::Eps,
                    other => return Err(syntax(start, format!("unknown identifier '{other}'"))),
                };
                out.push((start, tok));
                continue;
            }
            _ => {
                let ch = src[start..].chars().next().unwrap();
                return Err(syntax(start, format!("unexpected character '{ch}'")));
            }
        };
        out.push((start, tok));
        i += 1;
    }
    Ok(out)
}

struct Parser {
    toks: Vec<(usize, Tok)>,
    i: usize,
    end: usize,
    ring: Ring,
}

impl Parser {
    fn peek(&self) -> Option<&Tok> {
        self.toks.get(self.i).map(|(_, t)| t)
    }

    fn pos(&self) -> usize {
        self.toks.get(self.i).map_or(self.end, |(p, _)| *p)
    }

    fn bump(&mut self) -> Option<Tok> {
        let t = self.toks.get(self.i).map(|(_, t)| t.clone());
        self.i += 1;
        t
    }

    fn expr(&mut self) -> Result<DualRatFunc> {
        let mut acc = self.term()?;
        loop {
            match self.peek() {
                Some(Tok::Plus) => {
                    self.bump();
                    acc = &acc + &self.term()?;
                }
                Some(Tok::Minus) => {
                    self.bump();
                    acc = &acc - &self.term()?;
                }
                _ => return Ok(acc),
            }
        }
    }

    fn term(&mut self) -> Result<DualRatFunc> {
        let mut acc = self.factor()?;
        loop {
            match self.peek() {
                Some(Tok::Star) => {
                    let pos = self.pos();
                    self.bump();
                    let rhs = self.factor()?;
                    acc = mul_checked(&acc, &rhs, pos)?;
                }
                Some(Tok::Slash) => {
                    let pos = self.pos();
                    self.bump();
                    let rhs = self.factor()?;
                    let inv = dual_invert(&rhs).map_err(|_| Error::DivisionByZero { pos })?;
                    acc = mul_checked(&acc, &inv, pos)?;
                }
                _ => return Ok(acc),
            }
        }
    }

    fn factor(&mut self) -> Result<DualRatFunc> {
        if self.peek() == Some(&Tok::Minus) {
            self.bump();
            return Ok(-&self.factor()?);
        }
        let base = self.atom()?;
        if self.peek() != Some(&Tok::Caret) {
            return Ok(base);
        }
        self.bump();
        let pos = self.pos();
        let e = match self.bump() {
            Some(Tok::Num(n)) => u32::try_from(n)
                .ok()
                .filter(|&e| e <= MAX_EXPONENT)
                .ok_or_else(|| syntax(pos, format!("exponent must be at most {MAX_EXPONENT}")))?,
            _ => return Err(syntax(pos, "expected a natural number exponent")),
        };
        if e >= 2 && !base.is_undeformed() {
            return Err(Error::EpsDegree { pos });
        }
        // (b + eps*e)^n = b^n + eps * n * b^(n-1) * e
        let (b, d) = base.into_parts();
        let body = b.pow(e as i64).expect("nonnegative power");
        let eps = if e == 0 {
            RatFunc::zero(self.ring)
        } else {
            (&b.pow(e as i64 - 1).unwrap() * &d).scale(&Rational::from_integer(e.into()))
        };
        DualRatFunc::new(body, eps)
    }

    fn atom(&mut self) -> Result<DualRatFunc> {
        let pos = self.pos();
        match self.bump() {
            Some(Tok::Num(n)) => Ok(RatFunc::constant(self.ring, Rational::from_integer(n)).into()),
            Some(Tok::Var(v)) => {
                if v.ring() != self.ring {
                    return Err(syntax(pos, format!("variable {} is not a coordinate here", v.name())));
                }
                Ok(RatFunc::var(v).into())
            }
            Some(Tok::Eps) => Ok(DualRatFunc::eps(self.ring)),
            Some(Tok::LParen) => {
                let inner = self.expr()?;
                match self.bump() {
                    Some(Tok::RParen) => Ok(inner),
                    _ => Err(syntax(self.toks.get(self.i - 1).map_or(self.end, |t| t.0), "expected ')'")),
                }
            }
            Some(t) => Err(syntax(pos, format!("unexpected token {t:?}"))),
            None => Err(syntax(pos, "unexpected end of input")),
        }
    }
}

fn mul_checked(a: &DualRatFunc, b: &DualRatFunc, pos: usize) -> Result<DualRatFunc> {
    if !a.is_undeformed() && !b.is_undeformed() {
        return Err(Error::EpsDegree { pos });
    }
    Ok(a * b)
}

/// Parse an expression over the coordinate ring `ring` ({t} or {x, y}).
pub fn parse_expr(src: &str, ring: Ring) -> Result<DualRatFunc> {
    let toks = lex(src)?;
    let mut p = Parser { toks, i: 0, end: src.len(), ring };
    if p.peek().is_none() {
        return Err(syntax(0, "empty expression"));
    }
    let v = p.expr()?;
    if p.i < p.toks.len() {
        return Err(syntax(p.pos(), "unexpected trailing input"));
    }
    Ok(v)
}

/// Parse an expression that must not involve `eps`.
pub fn parse_ratfunc(src: &str, ring: Ring) -> Result<RatFunc> {
    let v = parse_expr(src, ring)?;
    if !v.is_undeformed() {
        return Err(Error::InvalidArgument(format!("'{src}' has an eps part where a plain function is expected")));
    }
    Ok(v.into_parts().0)
}
