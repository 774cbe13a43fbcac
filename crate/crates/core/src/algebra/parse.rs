//! Text grammar for polynomials (whitespace-insensitive):
//!
//! ```text
//! poly   := ['+'|'-'] term (('+'|'-') term)*
//! term   := coeff ['*'] factor ('*' factor)* | coeff | factor ('*' factor)*
//! factor := 'x' INDEX ['^' EXP]
//! coeff  := INT | INT '/' INT
//! ```

use num_bigint::BigInt;
use num_traits::{One, Zero};

use super::{Domain, Poly};
use crate::{Error, Rational, Result};

struct Parser<'a> {
    chars: Vec<(usize, char)>,
    pos: usize,
    src: &'a str,
}

impl<'a> Parser<'a> {
    fn new(src: &'a str) -> Self {
        // columns are 1-based character positions in the original text
        let chars = src
            .chars()
            .enumerate()
            .filter(|(_, c)| !c.is_whitespace())
            .map(|(i, c)| (i + 1, c))
            .collect();
        Parser { chars, pos: 0, src }
    }

    fn peek(&self) -> Option<char> {
        self.chars.get(self.pos).map(|&(_, c)| c)
    }

    fn column(&self) -> usize {
        self.chars
            .get(self.pos)
            .map(|&(i, _)| i)
            .unwrap_or(self.src.chars().count() + 1)
    }

    fn error(&self, message: impl Into<String>) -> Error {
        Error::Syntax {
            column: self.column(),
            message: message.into(),
        }
    }

    fn eat(&mut self, c: char) -> bool {
        if self.peek() == Some(c) {
            self.pos += 1;
            true
        } else {
            false
        }
    }

    fn digits(&mut self) -> Option<String> {
        let start = self.pos;
        while matches!(self.peek(), Some(c) if c.is_ascii_digit()) {
            self.pos += 1;
        }
        (self.pos > start).then(|| self.chars[start..self.pos].iter().map(|&(_, c)| c).collect())
    }

    fn small_int(&mut self, what: &str) -> Result<u32> {
        let col = self.column();
        let s = self.digits().ok_or_else(|| self.error(format!("expected {what}")))?;
        s.parse().map_err(|_| Error::Syntax {
            column: col,
            message: format!("{what} too large"),
        })
    }

    fn coeff(&mut self) -> Result<Option<Rational>> {
        let Some(num) = self.digits() else {
            return Ok(None);
        };
        let num: BigInt = num.parse().expect("digits");
        if self.eat('/') {
            let col = self.column();
            let den = self
                .digits()
                .ok_or_else(|| self.error("expected denominator"))?;
            let den: BigInt = den.parse().expect("digits");
            if den.is_zero() {
                return Err(Error::Syntax {
                    column: col,
                    message: "zero denominator".into(),
                });
            }
            Ok(Some(Rational::new(num, den)))
        } else {
            Ok(Some(Rational::from_integer(num)))
        }
    }

    fn factor(&mut self, exps: &mut [u32]) -> Result<()> {
        if !self.eat('x') {
            return Err(self.error("expected variable `x<index>`"));
        }
        let index = self.small_int("variable index")? as usize;
        if index >= exps.len() {
            return Err(Error::VariableOutOfRange {
                index,
                nvars: exps.len(),
            });
        }
        let power = if self.eat('^') {
            self.small_int("exponent")?
        } else {
            1
        };
        exps[index] = exps[index]
            .checked_add(power)
            .ok_or_else(|| self.error("exponent overflow"))?;
        Ok(())
    }

    fn term(&mut self, nvars: usize) -> Result<(Vec<u32>, Rational)> {
        let mut exps = vec![0u32; nvars];
        let coeff = self.coeff()?;
        let has_coeff = coeff.is_some();
        let coeff = coeff.unwrap_or_else(Rational::one);
        let explicit_star = has_coeff && self.eat('*');
        if has_coeff && !explicit_star && self.peek() != Some('x') {
            return Ok((exps, coeff));
        }
        self.factor(&mut exps)?;
        while self.eat('*') {
            self.factor(&mut exps)?;
        }
        Ok((exps, coeff))
    }

    fn poly(&mut self, nvars: usize) -> Result<Vec<(Vec<u32>, Rational)>> {
        if self.peek().is_none() {
            return Err(self.error("empty polynomial"));
        }
        let mut terms = Vec::new();
        let mut negative = self.eat('-');
        if !negative {
            self.eat('+');
        }
        loop {
            let (e, c) = self.term(nvars)?;
            terms.push((e, if negative { -c } else { c }));
            match self.peek() {
                None => break,
                Some('+') => {
                    self.pos += 1;
                    negative = false;
                }
                Some('-') => {
                    self.pos += 1;
                    negative = true;
                }
                Some(c) => return Err(self.error(format!("unexpected `{c}`"))),
            }
        }
        Ok(terms)
    }
}

impl Poly {
    /// Parses `text` in `nvars` variables `x0 … x{nvars-1}` over `domain`.
    pub fn parse(text: &str, nvars: usize, domain: Domain) -> Result<Poly> {
        let terms = Parser::new(text).poly(nvars)?;
        Poly::from_terms(nvars, domain, terms)
    }
}
