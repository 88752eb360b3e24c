//! Surd expressions: integers, `sqrt(·)` of a non-negative rational,
//! `+ - * /`, unary minus and parentheses.
//!
//! ```text
//! expr   := term (('+' | '-') term)*
//! term   := unary (('*' | '/') unary)*
//! unary  := '-' unary | atom
//! atom   := integer | 'sqrt' '(' expr ')' | '(' expr ')'
//! ```

use num_rational::Ratio;
use thiserror::Error;

use crate::kernel::{KernelError, Radical};
use crate::scalar::Int;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ParseError {
    #[error("at offset {pos}: {msg}")]
    Syntax { pos: usize, msg: String },
    #[error("sqrt of {0}: the argument must be a non-negative rational")]
    BadSqrt(String),
    #[error(transparent)]
    Kernel(#[from] KernelError),
}

struct Parser<'a> {
    src: &'a [u8],
    pos: usize,
}

impl<'a> Parser<'a> {
    fn skip_ws(&mut self) {
        while self.src.get(self.pos).is_some_and(|c| c.is_ascii_whitespace()) {
            self.pos += 1;
        }
    }

    fn peek(&mut self) -> Option<u8> {
        self.skip_ws();
        self.src.get(self.pos).copied()
    }

    fn err<X>(&self, msg: impl Into<String>) -> Result<X, ParseError> {
        Err(ParseError::Syntax { pos: self.pos, msg: msg.into() })
    }

    fn expect(&mut self, c: u8) -> Result<(), ParseError> {
        if self.peek() == Some(c) {
            self.pos += 1;
            Ok(())
        } else {
            self.err(format!("expected '{}'", c as char))
        }
    }

    fn expr<T: Int>(&mut self) -> Result<Radical<T>, ParseError> {
        let mut acc = self.term()?;
        while let Some(op @ (b'+' | b'-')) = self.peek() {
            self.pos += 1;
            let rhs = self.term()?;
            acc = if op == b'+' { &acc + &rhs } else { &acc - &rhs };
        }
        Ok(acc)
    }

    fn term<T: Int>(&mut self) -> Result<Radical<T>, ParseError> {
        let mut acc = self.unary()?;
        while let Some(op @ (b'*' | b'/')) = self.peek() {
            self.pos += 1;
            let rhs = self.unary()?;
            acc = if op == b'*' { &acc * &rhs } else { acc.checked_div(&rhs)? };
        }
        Ok(acc)
    }

    fn unary<T: Int>(&mut self) -> Result<Radical<T>, ParseError> {
        if self.peek() == Some(b'-') {
            self.pos += 1;
            return Ok(-self.unary()?);
        }
        self.atom()
    }

    fn atom<T: Int>(&mut self) -> Result<Radical<T>, ParseError> {
        match self.peek() {
            Some(b'(') => {
                self.pos += 1;
                let v = self.expr()?;
                self.expect(b')')?;
                Ok(v)
            }
            Some(c) if c.is_ascii_digit() => {
                let start = self.pos;
                while self.src.get(self.pos).is_some_and(|c| c.is_ascii_digit()) {
                    self.pos += 1;
                }
                let digits = std::str::from_utf8(&self.src[start..self.pos]).expect("ascii digits");
                let n = T::from_str_radix(digits, 10)
                    .or_else(|_| self.err(format!("integer {digits} out of range")))?;
                Ok(Radical::rational(Ratio::from_integer(n)))
            }
            Some(b's') if self.src[self.pos..].starts_with(b"sqrt") => {
                self.pos += 4;
                self.expect(b'(')?;
                let arg: Radical<T> = self.expr()?;
                self.expect(b')')?;
                match arg.as_rational() {
                    Some(q) if q >= Ratio::from_integer(T::zero()) => Ok(Radical::sqrt(&q)?),
                    _ => Err(ParseError::BadSqrt(arg.to_string())),
                }
            }
            Some(c) => self.err(format!("unexpected '{}'", c as char)),
            None => self.err("unexpected end of input"),
        }
    }
}

/// Parses and evaluates a surd expression exactly.
pub fn parse_expr<T: Int>(s: &str) -> Result<Radical<T>, ParseError> {
    let mut p = Parser { src: s.as_bytes(), pos: 0 };
    let v = p.expr()?;
    if p.peek().is_some() {
        return p.err("trailing input");
    }
    Ok(v)
}

#[cfg(test)]
mod tests {
    use super::*;
    use num_bigint::BigInt;

    fn eval(s: &str) -> String {
        parse_expr::<BigInt>(s).unwrap().to_string()
    }

    #[test]
    fn evaluates() {
        assert_eq!(eval("sqrt(2)"), "sqrt(2)");
        assert_eq!(eval("7/3"), "7/3");
        assert_eq!(eval("(1+sqrt(5))/2"), "1/2 + 1/2*sqrt(5)");
        assert_eq!(eval("sqrt(8) - 2"), "-2 + 2*sqrt(2)");
        assert_eq!(eval("-3 * -(sqrt(3/4))"), "3/2*sqrt(3)");
        assert_eq!(eval("1/(sqrt(2)-1)"), "1 + sqrt(2)");
        assert_eq!(eval("sqrt(15)/3 - sqrt(3)/3"), "-1/3*sqrt(3) + 1/3*sqrt(15)");
        assert_eq!(eval(" 2 - 3 - 4 "), "-5");
        assert_eq!(eval("12/4/3"), "1");
    }

    #[test]
    fn rejects() {
        for s in ["", "2 +", "sqrt 2", "sqrt(-2)", "sqrt(sqrt(2))", "(1", "1)", "x", "1/0", "2 3"] {
            assert!(parse_expr::<BigInt>(s).is_err(), "{s:?}");
        }
    }
}
