use std::str::FromStr;

use num_bigint::BigInt;
use num_traits::Zero;

use super::{MultiPoly, Rational, Var};
use crate::error::{Error, Result};

/// Parses expressions such as `1/2*d*(d-1)*(a+b) - 3*xi^2`.
///
/// Grammar: sums of products of integers, variable symbols, parenthesized
/// expressions and their non-negative integer powers. Division is allowed
/// only by an integer. Multiplication must be written explicitly.
impl FromStr for MultiPoly {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let tokens = tokenize(s)?;
        let mut p = Parser { tokens, pos: 0 };
        let out = p.expr()?;
        if p.pos != p.tokens.len() {
            return Err(p.error("trailing input"));
        }
        Ok(out)
    }
}

#[derive(Clone, Debug, PartialEq)]
enum Tok {
    Int(BigInt),
    Ident(String),
    Sym(char),
}

fn tokenize(s: &str) -> Result<Vec<Tok>> {
    let chars: Vec<char> = s.chars().collect();
    let mut out = Vec::new();
    let mut i = 0;
    while i < chars.len() {
        let c = chars[i];
        if c.is_whitespace() {
            i += 1;
        } else if c.is_ascii_digit() {
            let start = i;
            while i < chars.len() && chars[i].is_ascii_digit() {
                i += 1;
            }
            let text: String = chars[start..i].iter().collect();
            out.push(Tok::Int(text.parse().expect("digits")));
        } else if c.is_ascii_alphabetic() {
            let start = i;
            while i < chars.len() && chars[i].is_ascii_alphanumeric() {
                i += 1;
            }
            out.push(Tok::Ident(chars[start..i].iter().collect()));
        } else if "+-*/^()".contains(c) {
            out.push(Tok::Sym(c));
            i += 1;
        } else {
            return Err(Error::Parse(format!("unexpected character {c:?}")));
        }
    }
    Ok(out)
}

struct Parser {
    tokens: Vec<Tok>,
    pos: usize,
}

impl Parser {
    fn error(&self, what: &str) -> Error {
        Error::Parse(format!("{what} at token {}", self.pos))
    }

    fn peek_sym(&self, c: char) -> bool {
        self.tokens.get(self.pos) == Some(&Tok::Sym(c))
    }

    fn expr(&mut self) -> Result<MultiPoly> {
        let mut acc = if self.peek_sym('-') {
            self.pos += 1;
            -self.term()?
        } else {
            self.term()?
        };
        loop {
            if self.peek_sym('+') {
                self.pos += 1;
                acc += &self.term()?;
            } else if self.peek_sym('-') {
                self.pos += 1;
                acc -= &self.term()?;
            } else {
                return Ok(acc);
            }
        }
    }

    fn term(&mut self) -> Result<MultiPoly> {
        let mut acc = self.power()?;
        loop {
            if self.peek_sym('*') {
                self.pos += 1;
                acc = &acc * &self.power()?;
            } else if self.peek_sym('/') {
                self.pos += 1;
                match self.tokens.get(self.pos) {
                    Some(Tok::Int(n)) if !n.is_zero() => {
                        let r = Rational::new(1.into(), n.clone());
                        self.pos += 1;
                        acc = acc.scale(&r);
                    }
                    _ => return Err(self.error("expected a nonzero integer divisor")),
                }
            } else {
                return Ok(acc);
            }
        }
    }

    fn power(&mut self) -> Result<MultiPoly> {
        let base = self.atom()?;
        if self.peek_sym('^') {
            self.pos += 1;
            match self.tokens.get(self.pos) {
                Some(Tok::Int(n)) => {
                    let e: u32 = n.try_into().map_err(|_| self.error("exponent too large"))?;
                    self.pos += 1;
                    Ok(base.pow(e))
                }
                _ => Err(self.error("expected an integer exponent")),
            }
        } else {
            Ok(base)
        }
    }

    fn atom(&mut self) -> Result<MultiPoly> {
        match self.tokens.get(self.pos).cloned() {
            Some(Tok::Int(n)) => {
                self.pos += 1;
                Ok(MultiPoly::constant(Rational::from_integer(n)))
            }
            Some(Tok::Ident(name)) => {
                let v = Var::from_symbol(&name)
                    .ok_or_else(|| Error::Parse(format!("unknown variable {name:?}")))?;
                self.pos += 1;
                Ok(MultiPoly::var(v))
            }
            Some(Tok::Sym('(')) => {
                self.pos += 1;
                let inner = self.expr()?;
                if !self.peek_sym(')') {
                    return Err(self.error("expected ')'"));
                }
                self.pos += 1;
                Ok(inner)
            }
            Some(Tok::Sym('-')) => {
                self.pos += 1;
                Ok(-self.power()?)
            }
            _ => Err(self.error("expected a number, variable or '('")),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactpoly::UniPoly;

    fn parse(s: &str) -> MultiPoly {
        s.parse().unwrap()
    }

    #[test]
    fn parses_products_and_powers() {
        assert_eq!(parse("(a+b)^2"), parse("a^2 + 2*a*b + b^2"));
        assert_eq!(
            parse("1/2*d*(d-1)"),
            MultiPoly::from_unipoly(
                &UniPoly::from_roots(crate::exactpoly::rat(1, 2), &[0, 1]),
                Var::D
            )
        );
        assert_eq!(parse("-xi + xi"), MultiPoly::zero());
        assert_eq!(parse("2*-a"), parse("-2*a"));
    }

    #[test]
    fn rejects_garbage() {
        assert!("a +".parse::<MultiPoly>().is_err());
        assert!("q".parse::<MultiPoly>().is_err());
        assert!("a/b".parse::<MultiPoly>().is_err());
        assert!("(a".parse::<MultiPoly>().is_err());
        assert!("a $ b".parse::<MultiPoly>().is_err());
    }
}
