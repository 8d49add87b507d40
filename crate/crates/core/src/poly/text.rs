//! Expression parser and canonical printer.
//!
//! Grammar:
//!
//! ```text
//! expr   := term (('+' | '-') term)*
//! term   := unary ('*' unary)*
//! unary  := '-' unary | power
//! power  := atom ('^' integer)*
//! atom   := integer ('/' integer)? | identifier | '(' expr ')'
//! ```
//!
//! `/` only appears inside rational literals; multiplication is never implicit.

use std::fmt;

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};

use super::{ParseError, ParseErrorKind, PolyError, Polynomial, Rational, VarTable};

#[derive(Clone, Debug, PartialEq)]
enum Tok {
    Int(BigInt),
    Ident(String),
    Plus,
    Minus,
    Star,
    Caret,
    Slash,
    LParen,
    RParen,
    Dot,
}

fn lex(src: &str) -> Result<Vec<(Tok, usize)>, ParseError> {
    let bytes = src.as_bytes();
    let mut out = Vec::new();
    let mut i = 0;
    while i < bytes.len() {
        let c = bytes[i] as char;
        if c.is_ascii_whitespace() {
            i += 1;
            continue;
        }
        let start = i;
        let tok = match c {
            '+' => Tok::Plus,
            '-' => Tok::Minus,
            '*' => Tok::Star,
            '^' => Tok::Caret,
            '/' => Tok::Slash,
            '(' => Tok::LParen,
            ')' => Tok::RParen,
            '.' => Tok::Dot,
            '0'..='9' => {
                while i < bytes.len() && bytes[i].is_ascii_digit() {
                    i += 1;
                }
                let n: BigInt = src[start..i].parse().expect("digits");
                out.push((Tok::Int(n), start));
                continue;
            }
            c if c.is_ascii_alphabetic() || c == '_' => {
                while i < bytes.len() && (bytes[i].is_ascii_alphanumeric() || bytes[i] == b'_') {
                    i += 1;
                }
                out.push((Tok::Ident(src[start..i].to_string()), start));
                continue;
            }
            _ => {
                let ch = src[start..].chars().next().unwrap();
                return Err(ParseError {
                    kind: ParseErrorKind::UnexpectedChar(ch),
                    position: start,
                });
            }
        };
        out.push((tok, start));
        i += 1;
    }
    Ok(out)
}

struct Parser<'a> {
    toks: Vec<(Tok, usize)>,
    pos: usize,
    end: usize,
    vars: &'a VarTable,
}

impl Parser<'_> {
    fn peek(&self) -> Option<&Tok> {
        self.toks.get(self.pos).map(|(t, _)| t)
    }

    fn offset(&self) -> usize {
        self.toks.get(self.pos).map(|&(_, p)| p).unwrap_or(self.end)
    }

    fn err(&self, kind: ParseErrorKind) -> ParseError {
        ParseError {
            kind,
            position: self.offset(),
        }
    }

    fn expr(&mut self) -> Result<Polynomial, ParseError> {
        let mut acc = self.term()?;
        loop {
            match self.peek() {
                Some(Tok::Plus) => {
                    self.pos += 1;
                    acc += self.term()?;
                }
                Some(Tok::Minus) => {
                    self.pos += 1;
                    acc -= self.term()?;
                }
                _ => return Ok(acc),
            }
        }
    }

    fn term(&mut self) -> Result<Polynomial, ParseError> {
        let mut acc = self.unary()?;
        while let Some(Tok::Star) = self.peek() {
            self.pos += 1;
            let rhs = self.unary()?;
            acc = &acc * &rhs;
        }
        Ok(acc)
    }

    fn unary(&mut self) -> Result<Polynomial, ParseError> {
        if let Some(Tok::Minus) = self.peek() {
            self.pos += 1;
            return Ok(-self.unary()?);
        }
        self.power()
    }

    fn power(&mut self) -> Result<Polynomial, ParseError> {
        let mut base = self.atom()?;
        while let Some(Tok::Caret) = self.peek() {
            self.pos += 1;
            let at = self.offset();
            let e = match self.peek().cloned() {
                Some(Tok::Int(n)) => {
                    self.pos += 1;
                    if matches!(self.peek(), Some(Tok::Slash) | Some(Tok::Dot)) {
                        return Err(ParseError {
                            kind: ParseErrorKind::NonIntegerExponent,
                            position: at,
                        });
                    }
                    n
                }
                Some(Tok::Minus) => {
                    return Err(ParseError {
                        kind: ParseErrorKind::NegativeExponent,
                        position: at,
                    })
                }
                Some(_) => {
                    return Err(ParseError {
                        kind: ParseErrorKind::NonIntegerExponent,
                        position: at,
                    })
                }
                None => return Err(self.err(ParseErrorKind::UnexpectedEnd)),
            };
            let e: u32 = e.try_into().map_err(|_| ParseError {
                kind: ParseErrorKind::ExponentTooLarge,
                position: at,
            })?;
            base = base.pow(e);
        }
        Ok(base)
    }

    fn atom(&mut self) -> Result<Polynomial, ParseError> {
        let n = self.vars.len();
        match self.peek().cloned() {
            Some(Tok::Int(num)) => {
                self.pos += 1;
                if let Some(Tok::Slash) = self.peek() {
                    self.pos += 1;
                    match self.peek().cloned() {
                        Some(Tok::Int(den)) => {
                            if den.is_zero() {
                                return Err(self.err(ParseErrorKind::ZeroDenominator));
                            }
                            self.pos += 1;
                            Ok(Polynomial::constant(n, Rational::new(num, den)))
                        }
                        Some(_) => Err(self.err(ParseErrorKind::Expected("denominator"))),
                        None => Err(self.err(ParseErrorKind::UnexpectedEnd)),
                    }
                } else if let Some(Tok::Dot) = self.peek() {
                    Err(self.err(ParseErrorKind::UnexpectedChar('.')))
                } else {
                    Ok(Polynomial::constant(n, Rational::from_integer(num)))
                }
            }
            Some(Tok::Ident(name)) => match self.vars.index_of(&name) {
                Some(i) => {
                    self.pos += 1;
                    Ok(Polynomial::var(n, i))
                }
                None => Err(self.err(ParseErrorKind::UnknownVariable(name))),
            },
            Some(Tok::LParen) => {
                self.pos += 1;
                let inner = self.expr()?;
                match self.peek() {
                    Some(Tok::RParen) => {
                        self.pos += 1;
                        Ok(inner)
                    }
                    Some(_) => Err(self.err(ParseErrorKind::Expected("')'"))),
                    None => Err(self.err(ParseErrorKind::UnexpectedEnd)),
                }
            }
            Some(Tok::Dot) => Err(self.err(ParseErrorKind::UnexpectedChar('.'))),
            Some(_) => Err(self.err(ParseErrorKind::Expected("number, variable or '('"))),
            None => Err(self.err(ParseErrorKind::UnexpectedEnd)),
        }
    }
}

/// Parses an expression over `vars` into an exact polynomial.
pub fn parse_poly(src: &str, vars: &VarTable) -> Result<Polynomial, PolyError> {
    let toks = lex(src)?;
    let mut p = Parser {
        toks,
        pos: 0,
        end: src.len(),
        vars,
    };
    let out = p.expr()?;
    if p.pos != p.toks.len() {
        return Err(p.err(ParseErrorKind::TrailingInput).into());
    }
    Ok(out)
}

/// Canonical text of a polynomial: graded-lex descending, `*` between factors.
pub struct PolyDisplay<'a> {
    poly: &'a Polynomial,
    vars: &'a VarTable,
}

impl VarTable {
    pub fn display<'a>(&'a self, poly: &'a Polynomial) -> PolyDisplay<'a> {
        PolyDisplay { poly, vars: self }
    }

    /// Shorthand for `self.display(poly).to_string()`.
    pub fn fmt_poly(&self, poly: &Polynomial) -> String {
        self.display(poly).to_string()
    }
}

fn write_rational(f: &mut fmt::Formatter<'_>, c: &Rational) -> fmt::Result {
    if c.denom().is_one() {
        write!(f, "{}", c.numer())
    } else {
        write!(f, "{}/{}", c.numer(), c.denom())
    }
}

impl fmt::Display for PolyDisplay<'_> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.poly.is_zero() {
            return f.write_str("0");
        }
        for (k, (m, c)) in self
            .poly
            .sorted_terms(self.vars.weights())
            .into_iter()
            .enumerate()
        {
            let mag = c.abs();
            if k == 0 {
                if c.is_negative() {
                    f.write_str("-")?;
                }
            } else if c.is_negative() {
                f.write_str(" - ")?;
            } else {
                f.write_str(" + ")?;
            }
            let mut first = true;
            if !mag.is_one() || m.is_one() {
                write_rational(f, &mag)?;
                first = false;
            }
            for (i, &e) in m.exponents().iter().enumerate() {
                if e == 0 {
                    continue;
                }
                if !first {
                    f.write_str("*")?;
                }
                first = false;
                f.write_str(self.vars.name(i))?;
                if e > 1 {
                    write!(f, "^{e}")?;
                }
            }
        }
        Ok(())
    }
}
