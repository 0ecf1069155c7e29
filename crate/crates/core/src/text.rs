//! Text format for polynomials and rational functions.
//!
//! Grammar (whitespace-insensitive):
//!
//! ```text
//! expr  := term (('+' | '-') term)*
//! term  := unary (('*' | '/') unary)*
//! unary := '-' unary | '+' unary | power
//! power := atom ('^' '-'? INT)?
//! atom  := INT | VAR | '(' expr ')'
//! ```
//!
//! Variables are `t1..tn` (or another single-letter prefix). Rational
//! coefficients are written as quotients, e.g. `3/2*t3`.

use num_bigint::BigInt;

use crate::field::CoefField;
use crate::poly::{MPoly, PolyError};
use crate::ratfunc::RatFunc;

#[derive(Debug, Clone, PartialEq)]
enum Token {
    Int(BigInt),
    Var(usize),
    Plus,
    Minus,
    Star,
    Slash,
    Caret,
    LParen,
    RParen,
}

fn tokenize(s: &str, nvars: usize, prefix: char) -> Result<Vec<Token>, PolyError> {
    let chars: Vec<char> = s.chars().collect();
    let mut out = Vec::new();
    let mut i = 0;
    while i < chars.len() {
        let c = chars[i];
        match c {
            ' ' | '\t' | '\n' | '\r' => {
                i += 1;
            }
            '+' => {
                out.push(Token::Plus);
                i += 1;
            }
            '-' => {
                out.push(Token::Minus);
                i += 1;
            }
            '*' => {
                out.push(Token::Star);
                i += 1;
            }
            '/' => {
                out.push(Token::Slash);
                i += 1;
            }
            '^' => {
                out.push(Token::Caret);
                i += 1;
            }
            '(' => {
                out.push(Token::LParen);
                i += 1;
            }
            ')' => {
                out.push(Token::RParen);
                i += 1;
            }
            d if d.is_ascii_digit() => {
                let start = i;
                while i < chars.len() && chars[i].is_ascii_digit() {
                    i += 1;
                }
                let lit: String = chars[start..i].iter().collect();
                out.push(Token::Int(lit.parse().expect("digits")));
            }
            v if v == prefix => {
                i += 1;
                let start = i;
                while i < chars.len() && chars[i].is_ascii_digit() {
                    i += 1;
                }
                if start == i {
                    return Err(PolyError::Parse(format!("variable `{prefix}` needs an index")));
                }
                let idx: usize = chars[start..i]
                    .iter()
                    .collect::<String>()
                    .parse()
                    .map_err(|_| PolyError::Parse("bad variable index".into()))?;
                if idx == 0 || idx > nvars {
                    return Err(PolyError::Parse(format!(
                        "variable {prefix}{idx} out of range 1..={nvars}"
                    )));
                }
                out.push(Token::Var(idx - 1));
            }
            other => return Err(PolyError::Parse(format!("unexpected character `{other}`"))),
        }
    }
    Ok(out)
}

struct Parser {
    tokens: Vec<Token>,
    pos: usize,
    nvars: usize,
    field: CoefField,
}

type PResult = Result<RatFunc, PolyError>;

fn lift(e: crate::ratfunc::RatFuncError) -> PolyError {
    match e {
        crate::ratfunc::RatFuncError::Poly(p) => p,
        other => PolyError::Parse(other.to_string()),
    }
}

impl Parser {
    fn peek(&self) -> Option<&Token> {
        self.tokens.get(self.pos)
    }

    fn next(&mut self) -> Option<Token> {
        let t = self.tokens.get(self.pos).cloned();
        self.pos += 1;
        t
    }

    fn expr(&mut self) -> PResult {
        let mut acc = self.term()?;
        loop {
            match self.peek() {
                Some(Token::Plus) => {
                    self.pos += 1;
                    let rhs = self.term()?;
                    acc = acc.checked_add(&rhs).map_err(lift)?;
                }
                Some(Token::Minus) => {
                    self.pos += 1;
                    let rhs = self.term()?;
                    acc = acc.checked_sub(&rhs).map_err(lift)?;
                }
                _ => return Ok(acc),
            }
        }
    }

    fn term(&mut self) -> PResult {
        let mut acc = self.unary()?;
        loop {
            match self.peek() {
                Some(Token::Star) => {
                    self.pos += 1;
                    let rhs = self.unary()?;
                    acc = acc.checked_mul(&rhs).map_err(lift)?;
                }
                Some(Token::Slash) => {
                    self.pos += 1;
                    let rhs = self.unary()?;
                    if rhs.is_zero() {
                        return Err(PolyError::Parse("division by zero".into()));
                    }
                    acc = acc.checked_div(&rhs).map_err(lift)?;
                }
                _ => return Ok(acc),
            }
        }
    }

    fn unary(&mut self) -> PResult {
        match self.peek() {
            Some(Token::Minus) => {
                self.pos += 1;
                Ok(self.unary()?.checked_neg())
            }
            Some(Token::Plus) => {
                self.pos += 1;
                self.unary()
            }
            _ => self.power(),
        }
    }

    fn power(&mut self) -> PResult {
        let base = self.atom()?;
        if self.peek() != Some(&Token::Caret) {
            return Ok(base);
        }
        self.pos += 1;
        let neg = if self.peek() == Some(&Token::Minus) {
            self.pos += 1;
            true
        } else {
            false
        };
        let k: i64 = match self.next() {
            Some(Token::Int(k)) => i64::try_from(k).map_err(|_| PolyError::Parse("exponent too large".into()))?,
            _ => return Err(PolyError::Parse("expected integer exponent".into())),
        };
        if k > u32::MAX as i64 {
            return Err(PolyError::Parse("exponent too large".into()));
        }
        if neg && base.is_zero() {
            return Err(PolyError::Parse("division by zero".into()));
        }
        base.pow(if neg { -k } else { k }).map_err(lift)
    }

    fn atom(&mut self) -> PResult {
        match self.next() {
            Some(Token::Int(k)) => Ok(RatFunc::constant(self.nvars, self.field.from_bigint(&k))),
            Some(Token::Var(i)) => Ok(RatFunc::var(self.nvars, self.field, i)),
            Some(Token::LParen) => {
                let inner = self.expr()?;
                match self.next() {
                    Some(Token::RParen) => Ok(inner),
                    _ => Err(PolyError::Parse("expected `)`".into())),
                }
            }
            Some(t) => Err(PolyError::Parse(format!("unexpected token {t:?}"))),
            None => Err(PolyError::Parse("unexpected end of input".into())),
        }
    }
}

/// Parses a rational function in `t1..tn` with a custom variable letter.
pub fn parse_ratfunc_with(s: &str, nvars: usize, field: CoefField, prefix: char) -> Result<RatFunc, PolyError> {
    let tokens = tokenize(s, nvars, prefix)?;
    if tokens.is_empty() {
        return Err(PolyError::Parse("empty input".into()));
    }
    let mut p = Parser {
        tokens,
        pos: 0,
        nvars,
        field,
    };
    let out = p.expr()?;
    if p.pos != p.tokens.len() {
        return Err(PolyError::Parse(format!("trailing input at token {}", p.pos)));
    }
    Ok(out)
}

pub fn parse_ratfunc(s: &str, nvars: usize, field: CoefField) -> Result<RatFunc, PolyError> {
    parse_ratfunc_with(s, nvars, field, 't')
}

/// Parses a polynomial; divisions are allowed only by constants.
pub fn parse_poly(s: &str, nvars: usize, field: CoefField) -> Result<MPoly, PolyError> {
    let f = parse_ratfunc(s, nvars, field)?;
    if !f.is_polynomial() {
        return Err(PolyError::Parse(format!("`{s}` is not a polynomial")));
    }
    Ok(f.num().clone())
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn rejects_bad_input() {
        let q = CoefField::Rationals;
        assert!(parse_poly("t4", 3, q).is_err());
        assert!(parse_poly("t0", 3, q).is_err());
        assert!(parse_poly("t1 +", 3, q).is_err());
        assert!(parse_poly("(t1", 3, q).is_err());
        assert!(parse_poly("x1", 3, q).is_err());
        assert!(parse_poly("1/t1", 3, q).is_err());
        assert!(parse_ratfunc("1/0", 3, q).is_err());
        assert!(parse_ratfunc("", 3, q).is_err());
    }

    #[test]
    fn precedence() {
        let q = CoefField::Rationals;
        assert_eq!(parse_poly("-t1^2", 1, q).unwrap(), -&parse_poly("t1*t1", 1, q).unwrap());
        assert_eq!(parse_poly("3/2*t1", 1, q).unwrap(), parse_poly("(3*t1)/2", 1, q).unwrap());
        assert_eq!(parse_ratfunc("t1^-2", 1, q).unwrap(), parse_ratfunc("1/(t1*t1)", 1, q).unwrap());
    }

    #[test]
    fn prime_field_literals() {
        let f7 = CoefField::prime(7).unwrap();
        assert_eq!(parse_poly("1/2*t1", 1, f7).unwrap(), parse_poly("4*t1", 1, f7).unwrap());
        assert!(parse_ratfunc("1/7", 1, f7).is_err());
    }

    #[test]
    fn other_prefix() {
        let q = CoefField::Rationals;
        let e = parse_ratfunc_with("e1^2 - 2*e2", 2, q, 'e').unwrap();
        assert_eq!(e.num().to_string_with("e"), "e1^2 - 2*e2");
    }
}
