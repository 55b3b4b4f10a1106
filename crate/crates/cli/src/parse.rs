//! Recursive-descent parser for polynomial expressions.
//!
//! ```text
//! expr   := term (('+' | '-') term)*
//! term   := unary ('*' unary)*
//! unary  := ('+' | '-') unary | power
//! power  := atom ('^' exponent)?
//! atom   := number | variable | '(' expr ')'
//! number := digits ('/' digits)?
//! ```
//!
//! An exponent is a literal or a parenthesized constant expression that
//! evaluates to a nonnegative integer.

use erlab_core::poly::{MultiPoly, Scalar, Var};
use num_traits::{ToPrimitive, Zero};

/// Exponents above this are rejected to keep expansion bounded.
pub const MAX_EXPONENT: u32 = 10_000;

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
#[error("parse error at column {}: {message}", .position + 1)]
pub struct ParseError {
    /// Byte offset into the source.
    pub position: usize,
    pub message: String,
}

#[derive(Debug, Clone, PartialEq, Eq)]
enum Tok {
    Num(Scalar),
    Var(Var),
    Plus,
    Minus,
    Star,
    Caret,
    LParen,
    RParen,
}

fn err<T>(position: usize, message: impl Into<String>) -> Result<T, ParseError> {
    Err(ParseError {
        position,
        message: message.into(),
    })
}

fn lex(src: &str) -> Result<Vec<(Tok, usize)>, ParseError> {
    let bytes = src.as_bytes();
    let mut out = Vec::new();
    let mut i = 0;
    let skip_ws = |mut i: usize| {
        while i < bytes.len() && bytes[i].is_ascii_whitespace() {
            i += 1;
        }
        i
    };
    while i < bytes.len() {
        let c = bytes[i];
        let start = i;
        if c.is_ascii_whitespace() {
            i += 1;
            continue;
        }
        let simple = match c {
            b'+' => Some(Tok::Plus),
            b'-' => Some(Tok::Minus),
            b'*' => Some(Tok::Star),
            b'^' => Some(Tok::Caret),
            b'(' => Some(Tok::LParen),
            b')' => Some(Tok::RParen),
            _ => None,
        };
        if let Some(t) = simple {
            out.push((t, start));
            i += 1;
            continue;
        }
        if c.is_ascii_digit() {
            let digits = |mut j: usize| {
                while j < bytes.len() && bytes[j].is_ascii_digit() {
                    j += 1;
                }
                j
            };
            i = digits(i);
            let num: num_bigint::BigInt = src[start..i].parse().expect("digits");
            let mut value = Scalar::from_integer(num);
            let after = skip_ws(i);
            if after < bytes.len() && bytes[after] == b'/' {
                let dstart = skip_ws(after + 1);
                let dend = digits(dstart);
                if dend == dstart {
                    return err(dstart, "expected an integer denominator after '/'");
                }
                let den: num_bigint::BigInt = src[dstart..dend].parse().expect("digits");
                if den.is_zero() {
                    return err(dstart, "zero denominator");
                }
                value /= Scalar::from_integer(den);
                i = dend;
            }
            out.push((Tok::Num(value), start));
            continue;
        }
        if c.is_ascii_alphabetic() || c == b'_' {
            while i < bytes.len() && (bytes[i].is_ascii_alphanumeric() || bytes[i] == b'_') {
                i += 1;
            }
            let ident = &src[start..i];
            let mut chars = ident.chars();
            match (chars.next().and_then(Var::from_name), chars.next()) {
                (Some(v), None) => out.push((Tok::Var(v), start)),
                _ => return err(start, format!("unknown identifier '{ident}'")),
            }
            continue;
        }
        if c == b'/' {
            return err(start, "'/' is only allowed inside a rational literal");
        }
        let ch = src[start..].chars().next().expect("nonempty");
        return err(start, format!("unexpected character '{ch}'"));
    }
    Ok(out)
}

struct Parser {
    toks: Vec<(Tok, usize)>,
    pos: usize,
    end: usize,
}

impl Parser {
    fn peek(&self) -> Option<&Tok> {
        self.toks.get(self.pos).map(|(t, _)| t)
    }

    fn offset(&self) -> usize {
        self.toks.get(self.pos).map_or(self.end, |(_, o)| *o)
    }

    fn expr(&mut self) -> Result<MultiPoly, ParseError> {
        let mut acc = self.term()?;
        loop {
            match self.peek() {
                Some(Tok::Plus) => {
                    self.pos += 1;
                    acc = &acc + &self.term()?;
                }
                Some(Tok::Minus) => {
                    self.pos += 1;
                    acc = &acc - &self.term()?;
                }
                _ => return Ok(acc),
            }
        }
    }

    fn term(&mut self) -> Result<MultiPoly, ParseError> {
        let mut acc = self.unary()?;
        while let Some(Tok::Star) = self.peek() {
            self.pos += 1;
            acc = &acc * &self.unary()?;
        }
        Ok(acc)
    }

    fn unary(&mut self) -> Result<MultiPoly, ParseError> {
        match self.peek() {
            Some(Tok::Minus) => {
                self.pos += 1;
                Ok(-self.unary()?)
            }
            Some(Tok::Plus) => {
                self.pos += 1;
                self.unary()
            }
            _ => self.power(),
        }
    }

    fn power(&mut self) -> Result<MultiPoly, ParseError> {
        let base = self.atom()?;
        if let Some(Tok::Caret) = self.peek() {
            self.pos += 1;
            let e = self.exponent()?;
            return Ok(base.pow(e));
        }
        Ok(base)
    }

    fn exponent(&mut self) -> Result<u32, ParseError> {
        let at = self.offset();
        let value = match self.peek() {
            Some(Tok::Num(n)) => {
                let n = n.clone();
                self.pos += 1;
                n
            }
            Some(Tok::LParen) => {
                let p = self.atom()?;
                match p.constant_value() {
                    Some(c) => c,
                    None if p.is_zero() => Scalar::zero(),
                    None => return err(at, "exponent must be a constant"),
                }
            }
            _ => return err(at, "expected a nonnegative integer exponent"),
        };
        if !value.is_integer() || value < Scalar::zero() {
            return err(at, format!("exponent {value} is not a nonnegative integer"));
        }
        match value.to_integer().to_u32() {
            Some(e) if e <= MAX_EXPONENT => Ok(e),
            _ => err(at, format!("exponent {value} exceeds {MAX_EXPONENT}")),
        }
    }

    fn atom(&mut self) -> Result<MultiPoly, ParseError> {
        let at = self.offset();
        match self.peek().cloned() {
            Some(Tok::Num(n)) => {
                self.pos += 1;
                Ok(MultiPoly::constant(n))
            }
            Some(Tok::Var(v)) => {
                self.pos += 1;
                Ok(MultiPoly::var(v))
            }
            Some(Tok::LParen) => {
                self.pos += 1;
                let inner = self.expr()?;
                match self.peek() {
                    Some(Tok::RParen) => {
                        self.pos += 1;
                        Ok(inner)
                    }
                    _ => err(self.offset(), "expected ')'"),
                }
            }
            Some(t) => err(at, format!("unexpected {}", describe(&t))),
            None => err(at, "unexpected end of input"),
        }
    }
}

fn describe(t: &Tok) -> String {
    match t {
        Tok::Num(n) => format!("number {n}"),
        Tok::Var(v) => format!("variable {v}"),
        Tok::Plus => "'+'".into(),
        Tok::Minus => "'-'".into(),
        Tok::Star => "'*'".into(),
        Tok::Caret => "'^'".into(),
        Tok::LParen => "'('".into(),
        Tok::RParen => "')'".into(),
    }
}

/// Parses a polynomial in `x, y, z, t, w` with rational coefficients.
pub fn parse_poly(src: &str) -> Result<MultiPoly, ParseError> {
    let toks = lex(src)?;
    let mut p = Parser {
        toks,
        pos: 0,
        end: src.len(),
    };
    let out = p.expr()?;
    if let Some(t) = p.peek().cloned() {
        let hint = match t {
            Tok::Num(_) | Tok::Var(_) | Tok::LParen => " (implicit multiplication is not supported)",
            _ => "",
        };
        return err(p.offset(), format!("unexpected {}{hint}", describe(&t)));
    }
    Ok(out)
}
