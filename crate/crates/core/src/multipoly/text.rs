//! Canonical text form of polynomials.
//!
//! Terms are written in descending term order as `coeff*var^e*...`, joined
//! by ` + ` and ` - `. A unit coefficient is elided on non-constant terms,
//! exponent 1 is elided, and the zero polynomial is `0`. The parser accepts
//! the same grammar with arbitrary whitespace, so `parse(serialize(p)) == p`.

use std::fmt::{self, Write as _};
use std::sync::Arc;

use num_bigint::BigInt;
use num_traits::{One, Signed};
use rustc_hash::FxHashMap;

use crate::error::{Error, Result};
use crate::multipoly::monomial::Monomial;
use crate::multipoly::poly::Polynomial;
use crate::multipoly::table::VarTable;

pub fn serialize_poly(p: &Polynomial) -> String {
    let mut out = String::new();
    for (i, (m, c)) in p.terms().enumerate() {
        match (i, c.is_negative()) {
            (0, true) => out.push('-'),
            (0, false) => {}
            (_, true) => out.push_str(" - "),
            (_, false) => out.push_str(" + "),
        }
        write_unsigned_term(&mut out, m, &c.abs(), p.table());
    }
    if out.is_empty() {
        out.push('0');
    }
    out
}

/// Renders a single signed term, used in error witnesses.
pub(crate) fn format_term(m: &Monomial, c: &BigInt, table: &VarTable) -> String {
    let mut out = String::new();
    if c.is_negative() {
        out.push('-');
    }
    write_unsigned_term(&mut out, m, &c.abs(), table);
    out
}

fn write_unsigned_term(out: &mut String, m: &Monomial, c: &BigInt, table: &VarTable) {
    let mut first = true;
    if !c.is_one() || m.is_one() {
        write!(out, "{c}").unwrap();
        first = false;
    }
    for i in 0..table.len() {
        let e = m.exponent(i);
        if e == 0 {
            continue;
        }
        if !first {
            out.push('*');
        }
        first = false;
        out.push_str(table.name(i));
        if e > 1 {
            write!(out, "^{e}").unwrap();
        }
    }
}

impl fmt::Display for Polynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&serialize_poly(self))
    }
}

pub fn parse_poly(text: &str, table: &Arc<VarTable>) -> Result<Polynomial> {
    Parser::new(text, table).parse()
}

struct Parser<'a> {
    chars: Vec<char>,
    pos: usize,
    table: &'a Arc<VarTable>,
}

impl<'a> Parser<'a> {
    fn new(text: &str, table: &'a Arc<VarTable>) -> Self {
        Parser {
            chars: text.chars().collect(),
            pos: 0,
            table,
        }
    }

    fn error(&self, at: usize, message: impl Into<String>) -> Error {
        let mut line = 1;
        let mut column = 1;
        for &c in &self.chars[..at.min(self.chars.len())] {
            if c == '\n' {
                line += 1;
                column = 1;
            } else {
                column += 1;
            }
        }
        Error::Parse {
            line,
            column,
            message: message.into(),
        }
    }

    fn skip_ws(&mut self) {
        while self.pos < self.chars.len() && self.chars[self.pos].is_whitespace() {
            self.pos += 1;
        }
    }

    fn peek(&mut self) -> Option<char> {
        self.skip_ws();
        self.chars.get(self.pos).copied()
    }

    fn sign(&mut self) -> Option<bool> {
        match self.peek() {
            Some('+') => {
                self.pos += 1;
                Some(false)
            }
            // accept U+2212 MINUS SIGN alongside ASCII
            Some('-') | Some('\u{2212}') => {
                self.pos += 1;
                Some(true)
            }
            _ => None,
        }
    }

    fn parse(mut self) -> Result<Polynomial> {
        let mut acc: FxHashMap<Monomial, BigInt> = FxHashMap::default();
        let mut negative = self.sign().unwrap_or(false);
        loop {
            let (m, c) = self.term()?;
            let c = if negative { -c } else { c };
            *acc.entry(m).or_default() += c;
            match self.peek() {
                None => break,
                Some(_) => match self.sign() {
                    Some(neg) => negative = neg,
                    None => return Err(self.error(self.pos, "expected `+` or `-` between terms")),
                },
            }
        }
        Ok(Polynomial::from_map(self.table, acc))
    }

    fn term(&mut self) -> Result<(Monomial, BigInt)> {
        let mut coeff = BigInt::one();
        let mut exps = vec![0u16; self.table.len()];
        loop {
            match self.peek() {
                Some(c) if c.is_ascii_digit() => coeff *= self.integer()?,
                Some(c) if c.is_ascii_alphabetic() || c == '_' => {
                    let start = self.pos;
                    let name = self.identifier();
                    let idx = self
                        .table
                        .index_of(&name)
                        .map_err(|_| self.error(start, format!("unknown variable `{name}`")))?;
                    let mut e = 1u16;
                    if self.peek() == Some('^') {
                        self.pos += 1;
                        let at = self.pos;
                        let v = self.integer()?;
                        e = u16::try_from(&v).map_err(|_| self.error(at, "exponent too large"))?;
                    }
                    exps[idx] = exps[idx]
                        .checked_add(e)
                        .ok_or_else(|| self.error(start, "exponent too large"))?;
                }
                Some(c) => return Err(self.error(self.pos, format!("unexpected `{c}`"))),
                None => return Err(self.error(self.pos, "unexpected end of input")),
            }
            if self.peek() == Some('*') {
                self.pos += 1;
            } else {
                break;
            }
        }
        Ok((Monomial::new(&exps, self.table), coeff))
    }

    fn integer(&mut self) -> Result<BigInt> {
        self.skip_ws();
        let start = self.pos;
        while self.pos < self.chars.len() && self.chars[self.pos].is_ascii_digit() {
            self.pos += 1;
        }
        if start == self.pos {
            return Err(self.error(start, "expected an integer"));
        }
        let digits: String = self.chars[start..self.pos].iter().collect();
        Ok(digits.parse().expect("digit string"))
    }

    fn identifier(&mut self) -> String {
        let start = self.pos;
        while self.pos < self.chars.len()
            && (self.chars[self.pos].is_ascii_alphanumeric() || self.chars[self.pos] == '_')
        {
            self.pos += 1;
        }
        self.chars[start..self.pos].iter().collect()
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn canonical_forms() {
        let t = VarTable::family(3).unwrap();
        let p = parse_poly("a1^2 - 2*a2", &t).unwrap();
        assert_eq!(serialize_poly(&p), "a1^2 - 2*a2");
        assert_eq!(serialize_poly(&Polynomial::zero(&t)), "0");
        assert_eq!(serialize_poly(&parse_poly("-1 + 0*a1", &t).unwrap()), "-1");
        assert_eq!(serialize_poly(&parse_poly("a2 + a1^2", &t).unwrap()), "a1^2 + a2");
        assert_eq!(serialize_poly(&parse_poly("-x*a3*x", &t).unwrap()), "-x^2*a3");
    }

    #[test]
    fn whitespace_and_unicode_minus() {
        let t = VarTable::family(3).unwrap();
        let a = parse_poly("  3 * a1 ^ 2\n  \u{2212} a2 ", &t).unwrap();
        assert_eq!(a, parse_poly("3*a1^2-a2", &t).unwrap());
    }

    #[test]
    fn parse_errors_carry_positions() {
        let t = VarTable::family(3).unwrap();
        match parse_poly("a1 +\n  b7", &t) {
            Err(Error::Parse { line, column, .. }) => assert_eq!((line, column), (2, 3)),
            other => panic!("unexpected {other:?}"),
        }
        assert!(matches!(parse_poly("a1 a2", &t), Err(Error::Parse { .. })));
        assert!(matches!(parse_poly("", &t), Err(Error::Parse { .. })));
        assert!(matches!(parse_poly("a1^", &t), Err(Error::Parse { .. })));
        assert!(matches!(parse_poly("a1 + + a2", &t), Err(Error::Parse { .. })));
    }
}
