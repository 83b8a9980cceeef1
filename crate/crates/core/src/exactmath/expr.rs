//! Compact polynomial expressions such as `l1*d^2 - 3/2` or `(d + l1)^2`.
//!
//! Grammar:
//!
//! ```text
//! expr   := ['+'|'-'] term (('+'|'-') term)*
//! term   := factor (('*'|'/') factor)*
//! factor := atom ['^' integer]
//! atom   := integer | name | '(' expr ')' | '-' atom
//! ```
//!
//! Division is only allowed by a nonzero constant.

use num_bigint::BigInt;
use num_traits::Zero;
use thiserror::Error;

use super::poly::Poly;
use super::rational::Rational;
use super::var::Var;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ExprError {
    #[error("unexpected character `{ch}` at column {col}")]
    UnexpectedChar { ch: char, col: usize },
    #[error("unexpected end of expression")]
    UnexpectedEnd,
    #[error("expected {expected} at column {col}")]
    Expected { expected: &'static str, col: usize },
    #[error("division by a non-constant or zero polynomial at column {col}")]
    BadDivision { col: usize },
    #[error("exponent too large at column {col}")]
    ExponentTooLarge { col: usize },
}

#[derive(Debug, Clone, PartialEq)]
enum Tok {
    Num(BigInt),
    Name(String),
    Op(char),
}

fn lex(src: &str) -> Result<Vec<(Tok, usize)>, ExprError> {
    let chars: Vec<char> = src.chars().collect();
    let mut out = Vec::new();
    let mut i = 0;
    while i < chars.len() {
        let c = chars[i];
        let col = i + 1;
        if c.is_whitespace() {
            i += 1;
        } else if c.is_ascii_digit() {
            let start = i;
            while i < chars.len() && chars[i].is_ascii_digit() {
                i += 1;
            }
            let s: String = chars[start..i].iter().collect();
            out.push((Tok::Num(s.parse().expect("digits")), col));
        } else if c.is_ascii_alphabetic() {
            let start = i;
            while i < chars.len() && (chars[i].is_ascii_alphanumeric() || chars[i] == '_') {
                i += 1;
            }
            out.push((Tok::Name(chars[start..i].iter().collect()), col));
        } else if "+-*/^()".contains(c) {
            out.push((Tok::Op(c), col));
            i += 1;
        } else {
            return Err(ExprError::UnexpectedChar { ch: c, col });
        }
    }
    Ok(out)
}

struct Parser {
    toks: Vec<(Tok, usize)>,
    pos: usize,
    end_col: usize,
}

impl Parser {
    fn peek(&self) -> Option<&Tok> {
        self.toks.get(self.pos).map(|(t, _)| t)
    }

    fn col(&self) -> usize {
        self.toks.get(self.pos).map_or(self.end_col, |(_, c)| *c)
    }

    fn eat(&mut self, op: char) -> bool {
        if self.peek() == Some(&Tok::Op(op)) {
            self.pos += 1;
            true
        } else {
            false
        }
    }

    fn expr(&mut self) -> Result<Poly, ExprError> {
        let mut acc = if self.eat('-') {
            -self.term()?
        } else {
            self.eat('+');
            self.term()?
        };
        loop {
            if self.eat('+') {
                acc += &self.term()?;
            } else if self.eat('-') {
                acc -= &self.term()?;
            } else {
                return Ok(acc);
            }
        }
    }

    fn term(&mut self) -> Result<Poly, ExprError> {
        let mut acc = self.factor()?;
        loop {
            if self.eat('*') {
                acc = &acc * &self.factor()?;
            } else if self.eat('/') {
                let col = self.col();
                let den = self.factor()?;
                match den.constant_value() {
                    Some(c) if !c.is_zero() => acc = acc.scale(&(Rational::from_integer(1.into()) / c)),
                    _ => return Err(ExprError::BadDivision { col }),
                }
            } else {
                return Ok(acc);
            }
        }
    }

    fn factor(&mut self) -> Result<Poly, ExprError> {
        let base = self.atom()?;
        if self.eat('^') {
            let col = self.col();
            match self.toks.get(self.pos) {
                Some((Tok::Num(n), _)) => {
                    let e: u32 = n
                        .try_into()
                        .ok()
                        .filter(|e| *e <= 1000)
                        .ok_or(ExprError::ExponentTooLarge { col })?;
                    self.pos += 1;
                    Ok(base.pow(e))
                }
                Some(_) => Err(ExprError::Expected {
                    expected: "integer exponent",
                    col,
                }),
                None => Err(ExprError::UnexpectedEnd),
            }
        } else {
            Ok(base)
        }
    }

    fn atom(&mut self) -> Result<Poly, ExprError> {
        let col = self.col();
        let Some((tok, _)) = self.toks.get(self.pos).cloned() else {
            return Err(ExprError::UnexpectedEnd);
        };
        self.pos += 1;
        match tok {
            Tok::Num(n) => Ok(Poly::constant(Rational::from_integer(n))),
            Tok::Name(s) => Ok(Poly::var(Var::new(&s))),
            Tok::Op('(') => {
                let inner = self.expr()?;
                if !self.eat(')') {
                    return Err(ExprError::Expected {
                        expected: "`)`",
                        col: self.col(),
                    });
                }
                Ok(inner)
            }
            Tok::Op('-') => Ok(-self.atom()?),
            Tok::Op(_) => Err(ExprError::Expected {
                expected: "a number, name or `(`",
                col,
            }),
        }
    }
}

/// Parses a compact polynomial expression.
pub fn parse_poly(src: &str) -> Result<Poly, ExprError> {
    let toks = lex(src)?;
    let mut p = Parser {
        toks,
        pos: 0,
        end_col: src.chars().count() + 1,
    };
    let out = p.expr()?;
    if p.pos != p.toks.len() {
        return Err(ExprError::Expected {
            expected: "operator or end of input",
            col: p.col(),
        });
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactmath::rational::frac;

    #[test]
    fn parses_basic_forms() {
        let l1 = Poly::lambda(1);
        let d = Poly::d();
        assert_eq!(
            parse_poly("l1*d^2 - 3/2").unwrap(),
            &(&l1 * &d.pow(2)) - &Poly::constant(frac(3, 2))
        );
        assert_eq!(parse_poly("(d + l1)^2").unwrap(), (&d + &l1).pow(2));
        assert_eq!(parse_poly("-l1-d").unwrap(), -(&l1 + &d));
        assert_eq!(parse_poly("0").unwrap(), Poly::zero());
        assert_eq!(parse_poly(" 2 * -d ").unwrap(), d.scale_int(-2));
        assert_eq!(parse_poly("d/(1+1)").unwrap(), d.scale(&frac(1, 2)));
    }

    #[test]
    fn rejects_malformed() {
        assert!(matches!(parse_poly(""), Err(ExprError::UnexpectedEnd)));
        assert!(matches!(parse_poly("d +"), Err(ExprError::UnexpectedEnd)));
        assert!(matches!(parse_poly("d/d"), Err(ExprError::BadDivision { .. })));
        assert!(matches!(parse_poly("1/0"), Err(ExprError::BadDivision { .. })));
        assert!(matches!(
            parse_poly("d $"),
            Err(ExprError::UnexpectedChar { ch: '$', col: 3 })
        ));
        assert!(matches!(parse_poly("(d"), Err(ExprError::Expected { .. })));
        assert!(matches!(parse_poly("d d"), Err(ExprError::Expected { .. })));
        assert!(matches!(parse_poly("d^l1"), Err(ExprError::Expected { .. })));
    }

    #[test]
    fn display_round_trips() {
        for src in ["l1*d^2 - 3/2", "(d+l1)^3 - t*l2", "-7/3*d*l1*l2 + 1"] {
            let p = parse_poly(src).unwrap();
            assert_eq!(parse_poly(&p.to_string()).unwrap(), p);
        }
    }
}
