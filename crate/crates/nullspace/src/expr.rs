//! Interval expressions such as `2 * [1,3] - ([0,1/2] + [1,1])`.
//!
//! ```text
//! expr   := term (("+" | "-") term)*
//! term   := number "*" term | "-" term | atom
//! atom   := "[" signed "," signed "]" | "(" expr ")"
//! signed := "-"? number
//! number := digits ("/" digits)?
//! ```
//!
//! `x - y` is `x ⊕ (-1)y`, so `[1,2] - [1,2]` is `[-1,1]`, not zero.

use std::str::FromStr;

use nullspace_core::numerics::Rational;
use nullspace_core::Interval;

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum ExprError {
    #[error("unexpected {found} at offset {at}, expected {expected}")]
    Unexpected { at: usize, found: String, expected: &'static str },
    #[error("decimal `{0}` is not accepted; write it as a fraction such as 3/2")]
    Decimal(String),
    #[error("{0}")]
    Value(#[from] nullspace_core::Error),
}

#[derive(Clone, Debug, PartialEq, Eq)]
enum Tok {
    Num(String),
    Sym(char),
    End,
}

fn lex(src: &str) -> Result<Vec<(usize, Tok)>, ExprError> {
    let mut out = Vec::new();
    let cs: Vec<(usize, char)> = src.char_indices().collect();
    let mut i = 0;
    while i < cs.len() {
        let (at, c) = cs[i];
        if c.is_whitespace() {
            i += 1;
        } else if c.is_ascii_digit() || c == '.' {
            let start = i;
            while i < cs.len() && (cs[i].1.is_ascii_alphanumeric() || matches!(cs[i].1, '.' | '/')) {
                i += 1;
            }
            let text: String = cs[start..i].iter().map(|p| p.1).collect();
            if text.contains(['.', 'e', 'E']) {
                return Err(ExprError::Decimal(text));
            }
            out.push((at, Tok::Num(text)));
        } else if "[](),+-*".contains(c) {
            out.push((at, Tok::Sym(c)));
            i += 1;
        } else {
            return Err(ExprError::Unexpected { at, found: format!("`{c}`"), expected: "an interval expression" });
        }
    }
    out.push((src.len(), Tok::End));
    Ok(out)
}

struct Parser {
    toks: Vec<(usize, Tok)>,
    pos: usize,
}

impl Parser {
    fn peek(&self) -> &Tok {
        &self.toks[self.pos].1
    }

    fn fail<T>(&self, expected: &'static str) -> Result<T, ExprError> {
        let (at, t) = &self.toks[self.pos];
        let found = match t {
            Tok::Num(n) => format!("`{n}`"),
            Tok::Sym(c) => format!("`{c}`"),
            Tok::End => "end of input".to_string(),
        };
        Err(ExprError::Unexpected { at: *at, found, expected })
    }

    fn eat(&mut self, c: char) -> bool {
        if *self.peek() == Tok::Sym(c) {
            self.pos += 1;
            true
        } else {
            false
        }
    }

    fn expect(&mut self, c: char, what: &'static str) -> Result<(), ExprError> {
        if self.eat(c) {
            Ok(())
        } else {
            self.fail(what)
        }
    }

    fn number(&mut self) -> Result<Rational, ExprError> {
        match self.peek().clone() {
            Tok::Num(n) => {
                self.pos += 1;
                Ok(Rational::from_str(&n)?)
            }
            _ => self.fail("a number"),
        }
    }

    fn signed(&mut self) -> Result<Rational, ExprError> {
        let neg = self.eat('-');
        let q = self.number()?;
        Ok(if neg { -q } else { q })
    }

    fn expr(&mut self) -> Result<Interval, ExprError> {
        let mut acc = self.term()?;
        loop {
            if self.eat('+') {
                acc = acc.add(&self.term()?);
            } else if self.eat('-') {
                acc = acc.sub(&self.term()?);
            } else {
                return Ok(acc);
            }
        }
    }

    fn term(&mut self) -> Result<Interval, ExprError> {
        if self.eat('-') {
            return Ok(-&self.term()?);
        }
        if let Tok::Num(_) = self.peek() {
            let s = self.number()?;
            self.expect('*', "`*` after a scalar")?;
            return Ok(self.term()?.scale(&s));
        }
        self.atom()
    }

    fn atom(&mut self) -> Result<Interval, ExprError> {
        if self.eat('(') {
            let v = self.expr()?;
            self.expect(')', "`)`")?;
            return Ok(v);
        }
        if self.eat('[') {
            let lo = self.signed()?;
            self.expect(',', "`,` between endpoints")?;
            let hi = self.signed()?;
            self.expect(']', "`]`")?;
            return Ok(Interval::new(lo, hi)?);
        }
        self.fail("`[` or `(`")
    }
}

pub fn eval(src: &str) -> Result<Interval, ExprError> {
    let mut p = Parser { toks: lex(src)?, pos: 0 };
    let v = p.expr()?;
    if *p.peek() != Tok::End {
        return p.fail("an operator or end of input");
    }
    Ok(v)
}

/// A scalar flag value, such as `--epsilon 3/2`.
pub fn scalar(src: &str) -> Result<Rational, ExprError> {
    let mut p = Parser { toks: lex(src)?, pos: 0 };
    let v = p.signed()?;
    if *p.peek() != Tok::End {
        return p.fail("end of input");
    }
    Ok(v)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn iv(a: i64, b: i64) -> Interval {
        Interval::int(a, b)
    }

    #[test]
    fn sums_and_scalings() {
        assert_eq!(eval("[1,2] + [3,5]").unwrap(), iv(4, 7));
        assert_eq!(eval("[1,2] - [1,2]").unwrap(), iv(-1, 1));
        assert_eq!(eval("-2 * [1,3]").unwrap(), iv(-6, -2));
        assert_eq!(eval("1/2 * ([0,2] + [2,2])").unwrap(), iv(1, 2));
        assert_eq!(eval("[-1/2, 1/2]").unwrap(), Interval::new(Rational::new(-1, 2), Rational::new(1, 2)).unwrap());
    }

    #[test]
    fn rejects_decimals_with_a_hint() {
        let e = eval("[0.5, 1]").unwrap_err();
        assert!(matches!(e, ExprError::Decimal(_)));
        assert!(e.to_string().contains("3/2"));
    }

    #[test]
    fn reports_position() {
        assert!(matches!(eval("[1,2] +"), Err(ExprError::Unexpected { at: 7, .. })));
        assert!(eval("[2,1]").is_err());
        assert!(eval("[1,2] [3,4]").is_err());
        assert!(eval("2 [1,2]").is_err());
    }
}
