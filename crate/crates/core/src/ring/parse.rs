//! Recursive-descent parser for the canonical polynomial grammar.
//!
//! ```text
//! expr   := [sign] term { sign term }
//! term   := factor { '*' factor }
//! factor := atom [ '^' nat ]
//! atom   := nat | var | '(' expr ')'
//! var    := 'l' | 'p' | 'q' | 't'
//!         | 'x' '[' nat ']' | 'y' '[' nat ']'
//!         | 'a' '[' nat ',' nat ']'
//! sign   := '+' | '-'
//! ```
//!
//! Whitespace is insignificant everywhere. Indices must be positive and
//! entry indices must satisfy `i < j`.

use super::{Polynomial, VarId};
use num_bigint::BigInt;
use std::fmt;

/// A parse failure with the byte position of the offending input.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct ParseError {
    pub position: usize,
    pub message: String,
}

impl fmt::Display for ParseError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "parse error at position {}: {}", self.position, self.message)
    }
}

impl std::error::Error for ParseError {}

pub(super) fn parse_polynomial(input: &str) -> Result<Polynomial, ParseError> {
    let mut p = Parser {
        src: input.as_bytes(),
        pos: 0,
    };
    let poly = p.expr()?;
    p.skip_ws();
    if p.pos != p.src.len() {
        return Err(p.error("unexpected trailing input"));
    }
    Ok(poly)
}

struct Parser<'a> {
    src: &'a [u8],
    pos: usize,
}

impl<'a> Parser<'a> {
    fn error(&self, message: impl Into<String>) -> ParseError {
        ParseError {
            position: self.pos,
            message: message.into(),
        }
    }

    fn skip_ws(&mut self) {
        while self.src.get(self.pos).is_some_and(|b| b.is_ascii_whitespace()) {
            self.pos += 1;
        }
    }

    fn peek(&mut self) -> Option<u8> {
        self.skip_ws();
        self.src.get(self.pos).copied()
    }

    fn eat(&mut self, byte: u8) -> bool {
        if self.peek() == Some(byte) {
            self.pos += 1;
            true
        } else {
            false
        }
    }

    fn expect(&mut self, byte: u8) -> Result<(), ParseError> {
        if self.eat(byte) {
            Ok(())
        } else {
            Err(self.error(format!("expected '{}'", byte as char)))
        }
    }

    fn expr(&mut self) -> Result<Polynomial, ParseError> {
        let mut acc = Polynomial::zero();
        let mut negate = false;
        if self.eat(b'-') {
            negate = true;
        } else {
            self.eat(b'+');
        }
        loop {
            let t = self.term()?;
            if negate {
                acc -= &t;
            } else {
                acc += &t;
            }
            match self.peek() {
                Some(b'+') => {
                    self.pos += 1;
                    negate = false;
                }
                Some(b'-') => {
                    self.pos += 1;
                    negate = true;
                }
                _ => return Ok(acc),
            }
        }
    }

    fn term(&mut self) -> Result<Polynomial, ParseError> {
        let mut acc = self.factor()?;
        while self.eat(b'*') {
            let f = self.factor()?;
            acc = &acc * &f;
        }
        Ok(acc)
    }

    fn factor(&mut self) -> Result<Polynomial, ParseError> {
        let base = self.atom()?;
        if self.eat(b'^') {
            let e = self.small_nat("exponent")?;
            Ok(base.pow(e))
        } else {
            Ok(base)
        }
    }

    fn atom(&mut self) -> Result<Polynomial, ParseError> {
        match self.peek() {
            Some(b'(') => {
                self.pos += 1;
                let inner = self.expr()?;
                self.expect(b')')?;
                Ok(inner)
            }
            Some(b) if b.is_ascii_digit() => {
                let n = self.big_nat()?;
                Ok(Polynomial::integer(n))
            }
            Some(b'l') => {
                self.pos += 1;
                Ok(Polynomial::lambda())
            }
            Some(b'p') => {
                self.pos += 1;
                Ok(Polynomial::p())
            }
            Some(b'q') => {
                self.pos += 1;
                Ok(Polynomial::q())
            }
            Some(b't') => {
                self.pos += 1;
                Ok(Polynomial::t())
            }
            Some(b'x') => self.indexed_var(VarKind::X),
            Some(b'y') => self.indexed_var(VarKind::Y),
            Some(b'a') => self.indexed_var(VarKind::Entry),
            _ => Err(self.error("expected a number, variable, or '('")),
        }
    }

    fn indexed_var(&mut self, kind: VarKind) -> Result<Polynomial, ParseError> {
        let start = self.pos;
        self.pos += 1; // the letter
        self.expect(b'[')?;
        let i = self.small_nat("index")?;
        if i == 0 {
            self.pos = start;
            return Err(self.error("variable index must be positive"));
        }
        let var = match kind {
            VarKind::X => VarId::X(i),
            VarKind::Y => VarId::Y(i),
            VarKind::Entry => {
                self.expect(b',')?;
                let j = self.small_nat("index")?;
                if !(i >= 1 && i < j) {
                    self.pos = start;
                    return Err(self.error(format!(
                        "entry indices must satisfy i < j, got a[{i},{j}]"
                    )));
                }
                VarId::Entry(i, j)
            }
        };
        self.expect(b']')?;
        Ok(Polynomial::var(var))
    }

    fn big_nat(&mut self) -> Result<BigInt, ParseError> {
        self.skip_ws();
        let start = self.pos;
        while self.src.get(self.pos).is_some_and(u8::is_ascii_digit) {
            self.pos += 1;
        }
        if self.pos == start {
            return Err(self.error("expected a number"));
        }
        let digits = std::str::from_utf8(&self.src[start..self.pos]).unwrap();
        Ok(digits.parse::<BigInt>().unwrap())
    }

    fn small_nat(&mut self, what: &str) -> Result<u32, ParseError> {
        let start_err = self.pos;
        let n = self.big_nat()?;
        u32::try_from(&n).map_err(|_| ParseError {
            position: start_err,
            message: format!("{what} out of range"),
        })
    }
}

enum VarKind {
    X,
    Y,
    Entry,
}
