//! Recursive-descent parser for polynomials in `x, y, u, v`.
//!
//! ```text
//! expr   := term (('+' | '-') term)*
//! term   := unary ('*' unary)*
//! unary  := ('+' | '-') unary | power
//! power  := atom ('^' integer)?
//! atom   := integer ('/' integer)? | variable | '(' expr ')'
//! ```
//! Positions in errors are byte offsets into the input.

use num_bigint::BigInt;
use num_traits::Zero;

use crate::algebra::Var;
use crate::error::{Error, Result};
use crate::{QPoly, Rat};

const VARIABLES: [Var; 4] = [Var::X, Var::Y, Var::U, Var::V];

struct Parser<'a> {
    src: &'a [u8],
    pos: usize,
}

fn syntax(pos: usize, msg: impl Into<String>) -> Error {
    Error::Syntax {
        pos,
        msg: msg.into(),
    }
}

impl Parser<'_> {
    fn skip_ws(&mut self) {
        while self.pos < self.src.len() && self.src[self.pos].is_ascii_whitespace() {
            self.pos += 1;
        }
    }

    fn peek(&mut self) -> Option<u8> {
        self.skip_ws();
        self.src.get(self.pos).copied()
    }

    fn eat(&mut self, c: u8) -> bool {
        if self.peek() == Some(c) {
            self.pos += 1;
            true
        } else {
            false
        }
    }

    fn expr(&mut self) -> Result<QPoly> {
        let mut acc = self.term()?;
        loop {
            if self.eat(b'+') {
                acc = &acc + &self.term()?;
            } else if self.eat(b'-') {
                acc = &acc - &self.term()?;
            } else {
                return Ok(acc);
            }
        }
    }

    fn term(&mut self) -> Result<QPoly> {
        let mut acc = self.unary()?;
        loop {
            if self.eat(b'*') {
                acc = &acc * &self.unary()?;
                continue;
            }
            match self.peek() {
                Some(c) if c.is_ascii_alphanumeric() || c == b'(' => {
                    return Err(syntax(
                        self.pos,
                        "expected operator, explicit '*' is required",
                    ));
                }
                _ => return Ok(acc),
            }
        }
    }

    fn unary(&mut self) -> Result<QPoly> {
        if self.eat(b'-') {
            return Ok(-self.unary()?);
        }
        if self.eat(b'+') {
            return self.unary();
        }
        self.power()
    }

    fn power(&mut self) -> Result<QPoly> {
        let base = self.atom()?;
        if !self.eat(b'^') {
            return Ok(base);
        }
        match self.peek() {
            Some(b'-') => Err(Error::NegativeExponent(self.pos)),
            Some(c) if c.is_ascii_digit() => {
                let start = self.pos;
                let n = self.integer()?;
                let e = u32::try_from(n).map_err(|_| syntax(start, "exponent too large"))?;
                Ok(base.pow(e))
            }
            _ => Err(syntax(self.pos, "expected a non-negative integer exponent")),
        }
    }

    fn integer(&mut self) -> Result<BigInt> {
        self.skip_ws();
        let start = self.pos;
        while self.pos < self.src.len() && self.src[self.pos].is_ascii_digit() {
            self.pos += 1;
        }
        if start == self.pos {
            return Err(syntax(start, "expected an integer"));
        }
        let text = std::str::from_utf8(&self.src[start..self.pos]).expect("ascii digits");
        Ok(text.parse().expect("digits parse"))
    }

    fn atom(&mut self) -> Result<QPoly> {
        match self.peek() {
            Some(c) if c.is_ascii_digit() => {
                let num = self.integer()?;
                if self.eat(b'/') {
                    let at = self.pos;
                    let den = self.integer()?;
                    if den.is_zero() {
                        return Err(syntax(at, "zero denominator"));
                    }
                    return Ok(QPoly::constant(Rat::new(num, den)));
                }
                Ok(QPoly::constant(Rat::from_integer(num)))
            }
            Some(c) if c.is_ascii_alphabetic() => {
                let start = self.pos;
                while self.pos < self.src.len()
                    && (self.src[self.pos].is_ascii_alphanumeric() || self.src[self.pos] == b'_')
                {
                    self.pos += 1;
                }
                let name = std::str::from_utf8(&self.src[start..self.pos]).expect("ascii");
                match Var::from_name(name).filter(|v| VARIABLES.contains(v)) {
                    Some(v) => Ok(QPoly::var(v)),
                    None => Err(Error::UnknownVariable {
                        pos: start,
                        name: name.to_string(),
                    }),
                }
            }
            Some(b'(') => {
                self.pos += 1;
                let inner = self.expr()?;
                if !self.eat(b')') {
                    return Err(syntax(self.pos, "expected ')'"));
                }
                Ok(inner)
            }
            Some(_) => Err(syntax(self.pos, "unexpected character")),
            None => Err(syntax(self.pos, "unexpected end of input")),
        }
    }
}

/// Parses a polynomial over the rationals in the variables `x, y, u, v`.
pub fn parse_polynomial(text: &str) -> Result<QPoly> {
    let mut p = Parser {
        src: text.as_bytes(),
        pos: 0,
    };
    let out = p.expr()?;
    if p.peek().is_some() {
        return Err(syntax(p.pos, "unexpected trailing input"));
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::scalar::{rat, ratio};

    fn x() -> QPoly {
        QPoly::var(Var::X)
    }
    fn y() -> QPoly {
        QPoly::var(Var::Y)
    }

    #[test]
    fn examples() {
        assert_eq!(parse_polynomial("y^2 - x").unwrap(), &y().pow(2) - &x());
        assert_eq!(parse_polynomial("x + y^2").unwrap(), &x() + &y().pow(2));
        assert_eq!(
            parse_polynomial("1/2*x*y - 3").unwrap(),
            &(&x() * &y()).scale(&ratio(1, 2)) - &QPoly::int(3)
        );
    }

    #[test]
    fn precedence_and_parentheses() {
        assert_eq!(
            parse_polynomial("-(x + 1)^2 * 3").unwrap(),
            (&x() + &QPoly::one()).pow(2).scale(&rat(-3))
        );
        assert_eq!(parse_polynomial("2 - -x").unwrap(), &QPoly::int(2) + &x());
        assert_eq!(
            parse_polynomial("  u*v ").unwrap(),
            &QPoly::var(Var::U) * &QPoly::var(Var::V)
        );
        assert_eq!(parse_polynomial("x^0").unwrap(), QPoly::one());
    }

    #[test]
    fn errors_carry_positions() {
        assert_eq!(
            parse_polynomial("x + w"),
            Err(Error::UnknownVariable {
                pos: 4,
                name: "w".into()
            })
        );
        assert_eq!(parse_polynomial("x^-2"), Err(Error::NegativeExponent(2)));
        assert!(matches!(
            parse_polynomial("2x"),
            Err(Error::Syntax { pos: 1, .. })
        ));
        assert!(matches!(
            parse_polynomial("x +"),
            Err(Error::Syntax { pos: 3, .. })
        ));
        assert!(matches!(parse_polynomial("(x"), Err(Error::Syntax { .. })));
        assert!(matches!(parse_polynomial("1/0"), Err(Error::Syntax { .. })));
        assert!(matches!(
            parse_polynomial("x / 2"),
            Err(Error::Syntax { .. })
        ));
        assert!(matches!(
            parse_polynomial("t"),
            Err(Error::UnknownVariable { .. })
        ));
    }

    #[test]
    fn printed_forms_reparse() {
        for text in ["y^2 - x", "1/2*x*y - 3", "-u^2 + v", "(x + y)^3 - 2/3*x"] {
            let p = parse_polynomial(text).unwrap();
            assert_eq!(parse_polynomial(&p.to_string()).unwrap(), p);
        }
    }
}
