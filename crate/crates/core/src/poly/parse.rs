//! Text syntax for integer polynomials in `t1..td`.
//!
//! Grammar (whitespace ignored):
//!
//! ```text
//! expr   := term (('+' | '-') term)*
//! term   := unary ('*' unary)*
//! unary  := ('+' | '-') unary | power
//! power  := atom ('^' integer)?
//! atom   := integer | variable | '(' expr ')'
//! variable := 't' digits     (bare 't' means t1 when d = 1)
//! ```

use num_bigint::BigInt;
use thiserror::Error;

use super::multi::MultiPoly;

/// Default cap on a single `^` exponent.
pub const DEFAULT_MAX_EXPONENT: u32 = 4096;

#[derive(Clone, Debug, PartialEq, Eq, Error)]
pub enum ParseError {
    #[error("unexpected character {found:?} at position {pos}")]
    UnexpectedChar { pos: usize, found: char },
    #[error("unexpected end of input at position {pos}")]
    UnexpectedEnd { pos: usize },
    #[error("variable t{index} at position {pos} exceeds the declared {nvars} variable(s)")]
    VariableOutOfRange { pos: usize, index: usize, nvars: usize },
    #[error("malformed variable name at position {pos}")]
    BadVariable { pos: usize },
    #[error("exponent at position {pos} exceeds the bound {limit}")]
    ExponentTooLarge { pos: usize, limit: u32 },
    #[error("empty input")]
    Empty,
}

impl ParseError {
    /// Byte offset of the offending token, when there is one.
    pub fn position(&self) -> Option<usize> {
        match self {
            ParseError::UnexpectedChar { pos, .. }
            | ParseError::UnexpectedEnd { pos }
            | ParseError::VariableOutOfRange { pos, .. }
            | ParseError::BadVariable { pos }
            | ParseError::ExponentTooLarge { pos, .. } => Some(*pos),
            ParseError::Empty => None,
        }
    }
}

/// Parses `text` as a polynomial in `nvars` variables.
pub fn parse_poly(text: &str, nvars: usize) -> Result<MultiPoly, ParseError> {
    parse_poly_with_limit(text, nvars, DEFAULT_MAX_EXPONENT)
}

pub fn parse_poly_with_limit(text: &str, nvars: usize, max_exponent: u32) -> Result<MultiPoly, ParseError> {
    let tokens: Vec<(usize, char)> = text.char_indices().filter(|(_, c)| !c.is_whitespace()).collect();
    if tokens.is_empty() {
        return Err(ParseError::Empty);
    }
    let mut p = Parser { tokens, idx: 0, end: text.len(), nvars, max_exponent };
    let poly = p.expr()?;
    if let Some(&(pos, found)) = p.tokens.get(p.idx) {
        return Err(ParseError::UnexpectedChar { pos, found });
    }
    Ok(poly)
}

/// Highest variable index mentioned in `text` (1 for a bare `t`), 0 if none.
pub fn max_variable_index(text: &str) -> usize {
    let bytes = text.as_bytes();
    let mut best = 0;
    let mut i = 0;
    while i < bytes.len() {
        if bytes[i] == b't' {
            let mut j = i + 1;
            while j < bytes.len() && bytes[j].is_ascii_digit() {
                j += 1;
            }
            let idx = if j == i + 1 { 1 } else { text[i + 1..j].parse().unwrap_or(usize::MAX) };
            best = best.max(idx);
            i = j;
        } else {
            i += 1;
        }
    }
    best
}

struct Parser {
    tokens: Vec<(usize, char)>,
    idx: usize,
    end: usize,
    nvars: usize,
    max_exponent: u32,
}

impl Parser {
    fn peek(&self) -> Option<char> {
        self.tokens.get(self.idx).map(|t| t.1)
    }

    fn pos(&self) -> usize {
        self.tokens.get(self.idx).map_or(self.end, |t| t.0)
    }

    fn unexpected(&self) -> ParseError {
        match self.tokens.get(self.idx) {
            Some(&(pos, found)) => ParseError::UnexpectedChar { pos, found },
            None => ParseError::UnexpectedEnd { pos: self.end },
        }
    }

    fn expr(&mut self) -> Result<MultiPoly, ParseError> {
        let mut acc = self.term()?;
        while let Some(c @ ('+' | '-')) = self.peek() {
            self.idx += 1;
            let rhs = self.term()?;
            acc = if c == '+' { acc.add(&rhs) } else { acc.sub(&rhs) };
        }
        Ok(acc)
    }

    fn term(&mut self) -> Result<MultiPoly, ParseError> {
        let mut acc = self.unary()?;
        while self.peek() == Some('*') {
            self.idx += 1;
            let rhs = self.unary()?;
            acc = acc.mul(&rhs);
        }
        Ok(acc)
    }

    fn unary(&mut self) -> Result<MultiPoly, ParseError> {
        match self.peek() {
            Some('-') => {
                self.idx += 1;
                Ok(self.unary()?.neg())
            }
            Some('+') => {
                self.idx += 1;
                self.unary()
            }
            _ => self.power(),
        }
    }

    fn power(&mut self) -> Result<MultiPoly, ParseError> {
        let base = self.atom()?;
        if self.peek() != Some('^') {
            return Ok(base);
        }
        self.idx += 1;
        let pos = self.pos();
        let digits = self.digits();
        if digits.is_empty() {
            return Err(self.unexpected());
        }
        let e: u32 = match digits.parse::<u64>() {
            Ok(v) if v <= self.max_exponent as u64 => v as u32,
            _ => return Err(ParseError::ExponentTooLarge { pos, limit: self.max_exponent }),
        };
        Ok(base.pow(e))
    }

    fn digits(&mut self) -> String {
        let mut s = String::new();
        while let Some(c) = self.peek().filter(|c| c.is_ascii_digit()) {
            s.push(c);
            self.idx += 1;
        }
        s
    }

    fn atom(&mut self) -> Result<MultiPoly, ParseError> {
        match self.peek() {
            Some('(') => {
                self.idx += 1;
                let inner = self.expr()?;
                if self.peek() != Some(')') {
                    return Err(self.unexpected());
                }
                self.idx += 1;
                Ok(inner)
            }
            Some(c) if c.is_ascii_digit() => {
                let s = self.digits();
                let v: BigInt = s.parse().expect("digit string");
                Ok(MultiPoly::constant(self.nvars, v))
            }
            Some('t') => {
                let pos = self.pos();
                self.idx += 1;
                // Digits must follow `t` directly, without whitespace.
                let mut s = String::new();
                while let Some(&(p, c)) = self.tokens.get(self.idx) {
                    if !c.is_ascii_digit() || p != pos + 1 + s.len() {
                        break;
                    }
                    s.push(c);
                    self.idx += 1;
                }
                let index = if s.is_empty() {
                    if self.nvars == 1 {
                        1
                    } else {
                        return Err(ParseError::BadVariable { pos });
                    }
                } else {
                    match s.parse::<usize>() {
                        Ok(0) | Err(_) => return Err(ParseError::BadVariable { pos }),
                        Ok(i) => i,
                    }
                };
                if index > self.nvars {
                    return Err(ParseError::VariableOutOfRange { pos, index, nvars: self.nvars });
                }
                Ok(MultiPoly::var(self.nvars, index - 1))
            }
            _ => Err(self.unexpected()),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parses_and_canonicalizes() {
        let f = parse_poly("t1*t2 - 2", 2).unwrap();
        assert_eq!(f.to_string(), "t1*t2 - 2");
        let g = parse_poly("(1+t1)^2 - 2*t1", 1).unwrap();
        assert_eq!(g.to_string(), "t1^2 + 1");
        let h = parse_poly("-t2^2*3 + (t1 - t1)", 2).unwrap();
        assert_eq!(h.to_string(), "-3*t2^2");
        assert_eq!(parse_poly("t - 6", 1).unwrap().to_string(), "t1 - 6");
    }

    #[test]
    fn unary_minus_binds_looser_than_power() {
        let f = parse_poly("-t1^2", 1).unwrap();
        assert_eq!(f.to_string(), "-t1^2");
        let g = parse_poly("(-t1)^3", 1).unwrap();
        assert_eq!(g.to_string(), "-t1^3");
    }

    #[test]
    fn errors_carry_positions() {
        assert_eq!(
            parse_poly("t1 + t3", 2),
            Err(ParseError::VariableOutOfRange { pos: 5, index: 3, nvars: 2 })
        );
        assert_eq!(parse_poly("t1 + * 2", 1), Err(ParseError::UnexpectedChar { pos: 5, found: '*' }));
        assert_eq!(parse_poly("(t1 + 2", 1), Err(ParseError::UnexpectedEnd { pos: 7 }));
        assert_eq!(parse_poly("x + 1", 1), Err(ParseError::UnexpectedChar { pos: 0, found: 'x' }));
        assert!(matches!(parse_poly("t1^99999", 1), Err(ParseError::ExponentTooLarge { pos: 3, .. })));
        assert_eq!(parse_poly("t + t2", 2), Err(ParseError::BadVariable { pos: 0 }));
        assert_eq!(parse_poly("  ", 1), Err(ParseError::Empty));
    }

    #[test]
    fn variable_scan() {
        assert_eq!(max_variable_index("t1*t12 + 3"), 12);
        assert_eq!(max_variable_index("t-6"), 1);
        assert_eq!(max_variable_index("7"), 0);
    }
}
