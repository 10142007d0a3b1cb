//! Plain-text polynomial syntax.
//!
//! Grammar (whitespace insignificant):
//!
//! ```text
//! expr   := term (('+' | '-') term)*
//! term   := unary (('*' | '/') unary)*
//! unary  := ('+' | '-') unary | power
//! power  := atom ('^' INT)?
//! atom   := INT | IDENT | '(' expr ')'
//! IDENT  := [A-Za-z][A-Za-z0-9_]*
//! ```
//!
//! Division is only allowed by a nonzero constant. The printer emits terms
//! in descending graded-lex order, so `parse(format(p)) == p` and the output
//! is byte-stable.

use std::fmt;
use std::str::FromStr;

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};

use super::poly::{print_cmp, MultiPoly};
use super::rational::{fmt_rat, BigRat};
use super::PolyError;

fn format_monomial(vars: &[String], exps: &[u32]) -> String {
    let mut parts: Vec<(&str, u32)> = vars
        .iter()
        .zip(exps)
        .filter(|(_, e)| **e > 0)
        .map(|(v, e)| (v.as_str(), *e))
        .collect();
    parts.sort_by(|a, b| print_cmp(a.0, b.0));
    parts
        .iter()
        .map(|(v, e)| if *e == 1 { v.to_string() } else { format!("{v}^{e}") })
        .collect::<Vec<_>>()
        .join("*")
}

pub fn format_poly(p: &MultiPoly) -> String {
    if p.is_zero() {
        return "0".to_string();
    }
    let mut out = String::new();
    for (i, (exps, c)) in p.terms_desc().enumerate() {
        let negative = c.is_negative();
        let mag = c.abs();
        if i == 0 {
            if negative {
                out.push('-');
            }
        } else {
            out.push_str(if negative { " - " } else { " + " });
        }
        let mono = format_monomial(p.vars(), exps);
        if mono.is_empty() {
            out.push_str(&fmt_rat(&mag));
        } else if mag.is_one() {
            out.push_str(&mono);
        } else {
            out.push_str(&fmt_rat(&mag));
            out.push('*');
            out.push_str(&mono);
        }
    }
    out
}

impl fmt::Display for MultiPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&format_poly(self))
    }
}

#[derive(Debug, Clone, PartialEq)]
enum Tok {
    Int(BigInt),
    Ident(String),
    Sym(char),
}

struct Parser {
    toks: Vec<(Tok, usize)>,
    pos: usize,
    end: usize,
}

fn syntax(offset: usize, message: impl Into<String>) -> PolyError {
    PolyError::Syntax {
        offset,
        message: message.into(),
    }
}

fn tokenize(text: &str) -> Result<Vec<(Tok, usize)>, PolyError> {
    let bytes = text.as_bytes();
    let mut toks = Vec::new();
    let mut i = 0;
    while i < bytes.len() {
        let c = bytes[i] as char;
        if c.is_ascii_whitespace() {
            i += 1;
        } else if c.is_ascii_digit() {
            let start = i;
            while i < bytes.len() && bytes[i].is_ascii_digit() {
                i += 1;
            }
            toks.push((Tok::Int(text[start..i].parse().unwrap()), start));
        } else if c.is_ascii_alphabetic() {
            let start = i;
            while i < bytes.len() && (bytes[i].is_ascii_alphanumeric() || bytes[i] == b'_') {
                i += 1;
            }
            toks.push((Tok::Ident(text[start..i].to_string()), start));
        } else if "+-*/^()".contains(c) {
            toks.push((Tok::Sym(c), i));
            i += 1;
        } else {
            return Err(syntax(i, format!("unexpected character '{c}'")));
        }
    }
    Ok(toks)
}

impl Parser {
    fn peek(&self) -> Option<&Tok> {
        self.toks.get(self.pos).map(|(t, _)| t)
    }

    fn offset(&self) -> usize {
        self.toks.get(self.pos).map(|(_, o)| *o).unwrap_or(self.end)
    }

    fn eat(&mut self, c: char) -> bool {
        if self.peek() == Some(&Tok::Sym(c)) {
            self.pos += 1;
            true
        } else {
            false
        }
    }

    fn expr(&mut self) -> Result<MultiPoly, PolyError> {
        let mut acc = self.term()?;
        loop {
            if self.eat('+') {
                acc = &acc + &self.term()?;
            } else if self.eat('-') {
                acc = &acc - &self.term()?;
            } else {
                return Ok(acc);
            }
        }
    }

    fn term(&mut self) -> Result<MultiPoly, PolyError> {
        let mut acc = self.unary()?;
        loop {
            if self.eat('*') {
                acc = &acc * &self.unary()?;
            } else if self.peek() == Some(&Tok::Sym('/')) {
                let at = self.offset();
                self.pos += 1;
                let d = self.unary()?;
                match d.constant_value() {
                    Some(c) if !c.is_zero() => acc = acc.scale(&(BigRat::one() / c)),
                    Some(_) => return Err(syntax(at, "division by zero")),
                    None => return Err(syntax(at, "division by a non-constant")),
                }
            } else {
                return Ok(acc);
            }
        }
    }

    fn unary(&mut self) -> Result<MultiPoly, PolyError> {
        if self.eat('-') {
            return Ok(-self.unary()?);
        }
        if self.eat('+') {
            return self.unary();
        }
        self.power()
    }

    fn power(&mut self) -> Result<MultiPoly, PolyError> {
        let base = self.atom()?;
        if self.eat('^') {
            let at = self.offset();
            match self.peek().cloned() {
                Some(Tok::Int(n)) => {
                    self.pos += 1;
                    let e: u32 = n
                        .try_into()
                        .map_err(|_| syntax(at, "exponent too large"))?;
                    Ok(base.pow(e))
                }
                _ => Err(syntax(at, "expected a nonnegative integer exponent")),
            }
        } else {
            Ok(base)
        }
    }

    fn atom(&mut self) -> Result<MultiPoly, PolyError> {
        let at = self.offset();
        match self.peek().cloned() {
            Some(Tok::Int(n)) => {
                self.pos += 1;
                Ok(MultiPoly::constant(BigRat::from_integer(n)))
            }
            Some(Tok::Ident(name)) => {
                self.pos += 1;
                Ok(MultiPoly::var(&name))
            }
            Some(Tok::Sym('(')) => {
                self.pos += 1;
                let inner = self.expr()?;
                if !self.eat(')') {
                    return Err(syntax(self.offset(), "expected ')'"));
                }
                Ok(inner)
            }
            Some(Tok::Sym(c)) => Err(syntax(at, format!("unexpected '{c}'"))),
            None => Err(syntax(at, "unexpected end of input")),
        }
    }
}

pub fn parse_poly(text: &str) -> Result<MultiPoly, PolyError> {
    let toks = tokenize(text)?;
    let mut p = Parser {
        toks,
        pos: 0,
        end: text.len(),
    };
    let out = p.expr()?;
    if p.pos != p.toks.len() {
        return Err(syntax(p.offset(), "trailing input"));
    }
    Ok(out)
}

impl FromStr for MultiPoly {
    type Err = PolyError;
    fn from_str(s: &str) -> Result<Self, Self::Err> {
        parse_poly(s)
    }
}

/// Parses text known to be well-formed (built-in constants).
pub fn poly(text: &str) -> MultiPoly {
    parse_poly(text).unwrap_or_else(|e| panic!("bad built-in polynomial {text:?}: {e}"))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn round_trip_simple() {
        let p = poly("x^3 - 4*x");
        assert_eq!(p.num_terms(), 2);
        assert_eq!(format_poly(&p), "x^3 - 4*x");
    }

    #[test]
    fn discriminant_form() {
        let p = poly("Y^4 - 4*Delta*Y - 12*a*Delta");
        assert_eq!(p.num_terms(), 3);
        assert_eq!(p.to_string(), "Y^4 - 4*Delta*Y - 12*a*Delta");
    }

    #[test]
    fn syntax_error_offset() {
        match parse_poly("x^^2") {
            Err(PolyError::Syntax { offset, .. }) => assert_eq!(offset, 2),
            other => panic!("expected syntax error, got {other:?}"),
        }
        assert!(matches!(parse_poly("(x+1"), Err(PolyError::Syntax { offset: 4, .. })));
        assert!(matches!(parse_poly("x/y"), Err(PolyError::Syntax { offset: 1, .. })));
        assert!(matches!(parse_poly("x $"), Err(PolyError::Syntax { offset: 2, .. })));
        assert!(matches!(parse_poly(""), Err(PolyError::Syntax { offset: 0, .. })));
    }

    #[test]
    fn rationals_and_signs() {
        let p = poly("-3/4*x1^2*x2 + x2/2 - 7");
        assert_eq!(p.to_string(), "-3/4*x1^2*x2 + 1/2*x2 - 7");
        assert_eq!(poly(&p.to_string()), p);
        assert_eq!(poly("0").to_string(), "0");
        assert_eq!(poly("2*(a+b)^2").to_string(), "2*a^2 + 4*a*b + 2*b^2");
    }
}
