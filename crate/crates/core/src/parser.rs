//! Text format for [`FibExpr`].
//!
//! ```text
//! expr       := ["-"] product (("+" | "-") ["-"] product)*
//! product    := factor (["*"] factor | "/" natural)*
//! factor     := natural | "n" ["^" natural] | fibref | altref | "(" polynomial ")"
//! fibref     := "F(" "n" [("+" | "-") natural] ")"
//! altref     := "(-1)^n"
//! ```
//!
//! `polynomial` is an `expr` without `fibref`/`altref`. Every summand must be
//! a polynomial times one `F(n±k)`, a constant times `(-1)^n`, or a constant.
//! Whitespace is ignored everywhere. Examples:
//!
//! ```text
//! (2n+3)/5*F(n) - n/5*F(n-1)
//! 4n/5*F(n+1) + (3n+3)/5*F(n) + 1/2 + 1/2*(-1)^n
//! ```

use std::fmt;

use num_bigint::BigInt;
use num_traits::{One, Signed, ToPrimitive, Zero};
use thiserror::Error;

use crate::exact::{RatPoly, Rational};
use crate::seqform::FibExpr;

const MAX_SHIFT: i64 = 1_000_000;
const MAX_EXPONENT: usize = 1_000;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
#[error("{message} at offset {offset}")]
pub struct ParseError {
    /// Byte offset into the input.
    pub offset: usize,
    pub message: String,
}

#[derive(Debug, Clone, PartialEq, Eq)]
enum Tok {
    Num(BigInt),
    N,
    F,
    LParen,
    RParen,
    Plus,
    Minus,
    Star,
    Slash,
    Caret,
    End,
}

impl fmt::Display for Tok {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s = match self {
            Tok::Num(n) => return write!(f, "number {n}"),
            Tok::N => "'n'",
            Tok::F => "'F'",
            Tok::LParen => "'('",
            Tok::RParen => "')'",
            Tok::Plus => "'+'",
            Tok::Minus => "'-'",
            Tok::Star => "'*'",
            Tok::Slash => "'/'",
            Tok::Caret => "'^'",
            Tok::End => "end of input",
        };
        f.write_str(s)
    }
}

fn lex(text: &str) -> Result<Vec<(Tok, usize)>, ParseError> {
    let mut out = Vec::new();
    let mut chars = text.char_indices().peekable();
    while let Some((i, c)) = chars.next() {
        let tok = match c {
            c if c.is_whitespace() => continue,
            '0'..='9' => {
                let mut end = i + 1;
                while let Some(&(j, d)) = chars.peek() {
                    if !d.is_ascii_digit() {
                        break;
                    }
                    end = j + 1;
                    chars.next();
                }
                Tok::Num(text[i..end].parse().expect("ascii digits"))
            }
            'n' => Tok::N,
            'F' => Tok::F,
            '(' => Tok::LParen,
            ')' => Tok::RParen,
            '+' => Tok::Plus,
            '-' => Tok::Minus,
            '*' => Tok::Star,
            '/' => Tok::Slash,
            '^' => Tok::Caret,
            other => {
                return Err(ParseError {
                    offset: i,
                    message: format!("unexpected character {other:?}"),
                })
            }
        };
        out.push((tok, i));
    }
    out.push((Tok::End, text.len()));
    Ok(out)
}

/// What a product is multiplied against.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
enum Carrier {
    Plain,
    Fib(i64),
    Alt,
}

struct Parser {
    toks: Vec<(Tok, usize)>,
    pos: usize,
}

impl Parser {
    fn peek(&self) -> &Tok {
        &self.toks[self.pos].0
    }

    fn peek_at(&self, k: usize) -> &Tok {
        &self.toks[(self.pos + k).min(self.toks.len() - 1)].0
    }

    fn offset(&self) -> usize {
        self.toks[self.pos].1
    }

    fn bump(&mut self) -> Tok {
        let t = self.toks[self.pos].0.clone();
        if self.pos + 1 < self.toks.len() {
            self.pos += 1;
        }
        t
    }

    fn err<T>(&self, message: impl Into<String>) -> Result<T, ParseError> {
        Err(ParseError { offset: self.offset(), message: message.into() })
    }

    fn expect(&mut self, want: Tok) -> Result<(), ParseError> {
        if *self.peek() == want {
            self.bump();
            Ok(())
        } else {
            self.err(format!("expected {want}, found {}", self.peek()))
        }
    }

    fn natural(&mut self, what: &str) -> Result<BigInt, ParseError> {
        match self.peek().clone() {
            Tok::Num(v) => {
                self.bump();
                Ok(v)
            }
            other => self.err(format!("{what} must be a non-negative integer literal, found {other}")),
        }
    }

    fn exponent(&mut self) -> Result<usize, ParseError> {
        let at = self.offset();
        let v = self.natural("exponent")?;
        v.to_usize().filter(|&e| e <= MAX_EXPONENT).ok_or(ParseError {
            offset: at,
            message: format!("exponent {v} exceeds {MAX_EXPONENT}"),
        })
    }

    /// Sum of signed products; returns `(carrier, poly, offset)` per summand.
    fn sum(&mut self, allow_carriers: bool) -> Result<Vec<(Carrier, RatPoly, usize)>, ParseError> {
        let mut out = Vec::new();
        let mut negate = false;
        loop {
            let at = self.offset();
            if *self.peek() == Tok::Minus {
                self.bump();
                negate = !negate;
            }
            let (carrier, poly) = self.product(allow_carriers)?;
            out.push((carrier, if negate { -poly } else { poly }, at));
            negate = match self.peek() {
                Tok::Plus => false,
                Tok::Minus => true,
                _ => break,
            };
            self.bump();
        }
        Ok(out)
    }

    fn starts_factor(&self) -> bool {
        matches!(self.peek(), Tok::Num(_) | Tok::N | Tok::F | Tok::LParen)
    }

    fn product(&mut self, allow_carriers: bool) -> Result<(Carrier, RatPoly), ParseError> {
        let (mut carrier, mut poly) = self.factor(allow_carriers)?;
        loop {
            match self.peek() {
                Tok::Slash => {
                    self.bump();
                    let at = self.offset();
                    let d = self.natural("divisor")?;
                    if d.is_zero() {
                        return Err(ParseError { offset: at, message: "division by zero".into() });
                    }
                    poly = poly.scale(&Rational::new(BigInt::one(), d));
                }
                Tok::Star => {
                    self.bump();
                    carrier = self.multiply(carrier, &mut poly, allow_carriers)?;
                }
                _ if self.starts_factor() => {
                    carrier = self.multiply(carrier, &mut poly, allow_carriers)?;
                }
                _ => return Ok((carrier, poly)),
            }
        }
    }

    fn multiply(
        &mut self,
        carrier: Carrier,
        poly: &mut RatPoly,
        allow_carriers: bool,
    ) -> Result<Carrier, ParseError> {
        let at = self.offset();
        let (c, p) = self.factor(allow_carriers)?;
        *poly = &*poly * &p;
        match (carrier, c) {
            (Carrier::Plain, c) | (c, Carrier::Plain) => Ok(c),
            _ => Err(ParseError {
                offset: at,
                message: "products of F(...) or (-1)^n factors are not supported".into(),
            }),
        }
    }

    fn is_altref(&self) -> bool {
        self.peek_at(0) == &Tok::LParen
            && self.peek_at(1) == &Tok::Minus
            && self.peek_at(2) == &Tok::Num(BigInt::one())
            && self.peek_at(3) == &Tok::RParen
            && self.peek_at(4) == &Tok::Caret
    }

    fn factor(&mut self, allow_carriers: bool) -> Result<(Carrier, RatPoly), ParseError> {
        let at = self.offset();
        let no_carrier = |what: &str| ParseError {
            offset: at,
            message: format!("{what} is not allowed inside parentheses"),
        };
        match self.peek().clone() {
            Tok::Num(v) => {
                self.bump();
                self.reject_caret()?;
                Ok((Carrier::Plain, RatPoly::constant(Rational::from_integer(v))))
            }
            Tok::N => {
                self.bump();
                let k = if *self.peek() == Tok::Caret {
                    self.bump();
                    self.exponent()?
                } else {
                    1
                };
                Ok((Carrier::Plain, RatPoly::monomial(Rational::one(), k)))
            }
            Tok::F => {
                if !allow_carriers {
                    return Err(no_carrier("F(...)"));
                }
                self.bump();
                self.expect(Tok::LParen)?;
                if *self.peek() != Tok::N {
                    return self.err("shift argument must have the form n, n+k or n-k");
                }
                self.bump();
                let shift = match self.peek() {
                    Tok::Plus | Tok::Minus => {
                        let sign = if self.bump() == Tok::Plus { -1 } else { 1 };
                        let k_at = self.offset();
                        let k = self.natural("shift")?;
                        match k.to_i64().filter(|k| *k <= MAX_SHIFT) {
                            Some(k) => sign * k,
                            None => {
                                return Err(ParseError {
                                    offset: k_at,
                                    message: format!("shift {k} exceeds {MAX_SHIFT}"),
                                })
                            }
                        }
                    }
                    Tok::RParen => 0,
                    _ => return self.err("shift argument must have the form n, n+k or n-k"),
                };
                self.expect(Tok::RParen)?;
                Ok((Carrier::Fib(shift), RatPoly::one()))
            }
            Tok::LParen if self.is_altref() => {
                if !allow_carriers {
                    return Err(no_carrier("(-1)^n"));
                }
                for _ in 0..5 {
                    self.bump();
                }
                if *self.peek() != Tok::N {
                    return self.err("only (-1)^n is supported");
                }
                self.bump();
                Ok((Carrier::Alt, RatPoly::one()))
            }
            Tok::LParen => {
                self.bump();
                let inner = self.sum(false)?;
                self.expect(Tok::RParen)?;
                self.reject_caret()?;
                let poly = inner.into_iter().fold(RatPoly::zero(), |acc, (_, p, _)| &acc + &p);
                Ok((Carrier::Plain, poly))
            }
            other => self.err(format!("expected a number, n, F(...) or '(', found {other}")),
        }
    }

    fn reject_caret(&self) -> Result<(), ParseError> {
        if *self.peek() == Tok::Caret {
            self.err("'^' is only allowed on n and (-1)")
        } else {
            Ok(())
        }
    }
}

pub fn parse(text: &str) -> Result<FibExpr, ParseError> {
    let mut p = Parser { toks: lex(text)?, pos: 0 };
    if *p.peek() == Tok::End {
        return p.err("empty expression");
    }
    let summands = p.sum(true)?;
    if *p.peek() != Tok::End {
        return p.err(format!("unexpected {}", p.peek()));
    }
    let mut terms = Vec::new();
    let mut e = Rational::zero();
    let mut f = Rational::zero();
    for (carrier, poly, at) in summands {
        let constant = || match poly.degree() {
            None => Ok(Rational::zero()),
            Some(0) => Ok(poly.coeff(0)),
            Some(_) => Err(ParseError {
                offset: at,
                message: match carrier {
                    Carrier::Alt => "the coefficient of (-1)^n must be constant".into(),
                    _ => "a non-constant polynomial must multiply some F(...)".into(),
                },
            }),
        };
        match carrier {
            Carrier::Fib(shift) => terms.push((shift, poly.clone())),
            Carrier::Alt => f += constant()?,
            Carrier::Plain => e += constant()?,
        }
    }
    Ok(FibExpr::new(terms, e, f))
}

/// Polynomial in `var`, descending degree: `"2/5*n + 3/5"`, `"n^2 - 1"`, `"0"`.
pub fn format_poly(p: &RatPoly, var: &str) -> String {
    let mut out = String::new();
    for (k, c) in p.coeffs().iter().enumerate().rev() {
        if c.is_zero() {
            continue;
        }
        let neg = c.is_negative();
        if out.is_empty() {
            if neg {
                out.push('-');
            }
        } else {
            out.push_str(if neg { " - " } else { " + " });
        }
        let mag = c.abs();
        let power = match k {
            0 => String::new(),
            1 => var.to_string(),
            _ => format!("{var}^{k}"),
        };
        match (k, mag.is_one()) {
            (0, _) => out.push_str(&mag.to_string()),
            (_, true) => out.push_str(&power),
            (_, false) => out.push_str(&format!("{mag}*{power}")),
        }
    }
    if out.is_empty() {
        out.push('0');
    }
    out
}

fn format_fibref(shift: i64) -> String {
    match shift {
        0 => "F(n)".into(),
        s if s > 0 => format!("F(n-{s})"),
        s => format!("F(n+{})", s.unsigned_abs()),
    }
}

/// Deterministic text accepted by [`parse`].
pub fn print(expr: &FibExpr) -> String {
    let mut parts = Vec::new();
    for t in expr.terms() {
        if t.poly().is_one() {
            parts.push(format_fibref(t.shift()));
        } else {
            parts.push(format!("({})*{}", format_poly(t.poly(), "n"), format_fibref(t.shift())));
        }
    }
    if !expr.const_e().is_zero() {
        parts.push(expr.const_e().to_string());
    }
    if !expr.alt_f().is_zero() {
        parts.push(format!("{}*(-1)^n", expr.alt_f()));
    }
    if parts.is_empty() {
        return "0".into();
    }
    parts.join(" + ")
}

impl fmt::Display for FibExpr {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&print(self))
    }
}

impl std::str::FromStr for FibExpr {
    type Err = ParseError;
    fn from_str(s: &str) -> Result<Self, ParseError> {
        parse(s)
    }
}
