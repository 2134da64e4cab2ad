//! Text syntax for scalars and mode elements, matching their `Display` output.
//!
//! ```text
//! expr   := ['-'] term (('+' | '-') term)*
//! term   := factor (['*' | '/'] factor)*        juxtaposition multiplies
//! factor := atom ['^' int]
//! atom   := integer | 'q' | generator | 'K(' int ')' | 'Kp(' int ')' | '(' expr ')'
//! generator := ('xp' | 'xm' | 'phi' | 'psi') '(' int ',' int ')' | ('phi0inv' | 'psi0inv') '(' int ')'
//! ```
//! Products are noncommutative and keep the written order; division and negative
//! powers are only allowed for scalars.

use num_bigint::BigInt;
use num_rational::BigRational;

use crate::error::{Error, Result};
use crate::modes::{GenKind, Generator, ModeElement, ModeWord};
use crate::scalar::{CentralExponent, Scalar};

struct Parser<'a> {
    text: &'a str,
    pos: usize,
}

impl<'a> Parser<'a> {
    fn err<T>(&self, msg: impl Into<String>) -> Result<T> {
        Err(Error::Parse { pos: self.pos, msg: msg.into() })
    }

    fn skip_ws(&mut self) {
        while self.rest().starts_with(char::is_whitespace) {
            self.pos += self.rest().chars().next().unwrap().len_utf8();
        }
    }

    fn rest(&self) -> &'a str {
        &self.text[self.pos..]
    }

    fn peek(&mut self) -> Option<char> {
        self.skip_ws();
        self.rest().chars().next()
    }

    fn eat(&mut self, c: char) -> bool {
        if self.peek() == Some(c) {
            self.pos += c.len_utf8();
            true
        } else {
            false
        }
    }

    fn expect(&mut self, c: char) -> Result<()> {
        if self.eat(c) {
            Ok(())
        } else {
            self.err(format!("expected '{c}'"))
        }
    }

    fn digits(&mut self) -> Result<BigInt> {
        self.skip_ws();
        let len = self.rest().find(|c: char| !c.is_ascii_digit()).unwrap_or(self.rest().len());
        if len == 0 {
            return self.err("expected a number");
        }
        let n = self.rest()[..len].parse().unwrap();
        self.pos += len;
        Ok(n)
    }

    fn int(&mut self) -> Result<i64> {
        let neg = self.eat('-');
        let start = self.pos;
        let n = self.digits()?;
        let n: i64 = n.try_into().map_err(|_| Error::Parse { pos: start, msg: "integer too large".into() })?;
        Ok(if neg { -n } else { n })
    }

    fn ident(&mut self) -> &'a str {
        self.skip_ws();
        let len = self.rest().find(|c: char| !c.is_ascii_alphanumeric()).unwrap_or(self.rest().len());
        let s = &self.rest()[..len];
        self.pos += len;
        s
    }

    fn expr(&mut self) -> Result<ModeElement> {
        let mut acc = if self.eat('-') { -&self.term()? } else { self.term()? };
        loop {
            if self.eat('+') {
                acc = &acc + &self.term()?;
            } else if self.eat('-') {
                acc = &acc - &self.term()?;
            } else {
                return Ok(acc);
            }
        }
    }

    fn starts_factor(&mut self) -> bool {
        matches!(self.peek(), Some(c) if c.is_ascii_alphanumeric() || c == '(')
    }

    fn term(&mut self) -> Result<ModeElement> {
        let mut acc = self.factor()?;
        loop {
            if self.eat('*') {
                acc = &acc * &self.factor()?;
            } else if self.eat('/') {
                let at = self.pos;
                let d = as_scalar(&self.factor()?)
                    .ok_or(Error::Parse { pos: at, msg: "can only divide by a scalar".into() })?;
                let inv = d.inv().map_err(|_| Error::Parse { pos: at, msg: "division by zero".into() })?;
                acc = acc.scale(&inv);
            } else if self.starts_factor() {
                acc = &acc * &self.factor()?;
            } else {
                return Ok(acc);
            }
        }
    }

    fn factor(&mut self) -> Result<ModeElement> {
        let base = self.atom()?;
        if !self.eat('^') {
            return Ok(base);
        }
        let at = self.pos;
        let e = self.int()?;
        if let Some(s) = as_scalar(&base) {
            let p = s.pow(e).map_err(|_| Error::Parse { pos: at, msg: "zero to a negative power".into() })?;
            return Ok(ModeElement::scalar(p));
        }
        if e < 0 {
            return self.err("negative powers need a scalar base");
        }
        Ok((0..e).fold(ModeElement::one(), |acc, _| &acc * &base))
    }

    fn atom(&mut self) -> Result<ModeElement> {
        match self.peek() {
            Some('(') => {
                self.pos += 1;
                let e = self.expr()?;
                self.expect(')')?;
                Ok(e)
            }
            Some(c) if c.is_ascii_digit() => {
                let n = self.digits()?;
                Ok(ModeElement::scalar(Scalar::from_rational(BigRational::from_integer(n))))
            }
            Some(c) if c.is_ascii_alphabetic() => {
                let start = self.pos;
                let name = self.ident();
                let kind = match name {
                    "q" => return Ok(ModeElement::scalar(Scalar::q_pow(1))),
                    "K" | "Kp" => {
                        self.expect('(')?;
                        let e = self.int()?;
                        self.expect(')')?;
                        let c = if name == "K" { CentralExponent::new(e, 0) } else { CentralExponent::new(0, e) };
                        return Ok(ModeElement::central(c));
                    }
                    "xp" => GenKind::XPlus,
                    "xm" => GenKind::XMinus,
                    "phi" => GenKind::Phi,
                    "psi" => GenKind::Psi,
                    "phi0inv" => GenKind::PhiZeroInv,
                    "psi0inv" => GenKind::PsiZeroInv,
                    _ => return Err(Error::Parse { pos: start, msg: format!("unknown symbol '{name}'") }),
                };
                self.expect('(')?;
                let node = self.int()?;
                let mode = if matches!(kind, GenKind::PhiZeroInv | GenKind::PsiZeroInv) {
                    0
                } else {
                    self.expect(',')?;
                    self.int()?
                };
                self.expect(')')?;
                if node < 1 {
                    return Err(Error::Parse { pos: start, msg: "nodes are numbered from 1".into() });
                }
                let g = Generator::new(kind, node as usize, mode)
                    .map_err(|e| Error::Parse { pos: start, msg: e.to_string() })?;
                Ok(ModeElement::letter(g))
            }
            Some(c) => self.err(format!("unexpected '{c}'")),
            None => self.err("unexpected end of input"),
        }
    }
}

fn as_scalar(e: &ModeElement) -> Option<Scalar> {
    let mut terms = e.terms();
    match (terms.next(), terms.next()) {
        (None, _) => Some(Scalar::zero()),
        (Some((w, c)), None) if w.is_one() => Some(c.clone()),
        _ => None,
    }
}

fn parse_all<T>(text: &str, f: impl FnOnce(&mut Parser) -> Result<T>) -> Result<T> {
    let mut p = Parser { text, pos: 0 };
    let out = f(&mut p)?;
    if p.peek().is_some() {
        return p.err("trailing input");
    }
    Ok(out)
}

/// Parses a mode element, e.g. `xp(1,0) phi(2,-1) - (q + q^-1) K(2)`.
pub fn parse_element(text: &str) -> Result<ModeElement> {
    parse_all(text, |p| p.expr())
}

/// Parses an element of `Q(q)`, e.g. `-q/(q^2 + 1)`.
pub fn parse_scalar(text: &str) -> Result<Scalar> {
    let e = parse_element(text)?;
    as_scalar(&e).ok_or(Error::Parse { pos: 0, msg: "expected a scalar".into() })
}

/// Parses a single word with coefficient 1, e.g. `xm(1,2) psi(1,0) Kp(-1)`.
pub fn parse_word(text: &str) -> Result<ModeWord> {
    let e = parse_element(text)?;
    let mut terms = e.terms();
    match (terms.next(), terms.next()) {
        (Some((w, c)), None) if c.is_one() => Ok(w.clone()),
        _ => Err(Error::Parse { pos: 0, msg: "expected a single word".into() }),
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn division_divides() {
        let q = Scalar::q_pow(1);
        let den = &(&q * &q) + &Scalar::one();
        assert_eq!(parse_scalar("-q/(q^2 + 1)").unwrap(), -(&q * &den.inv().unwrap()));
        assert_eq!(parse_scalar("3/2").unwrap(), Scalar::from_rational(BigRational::new(3.into(), 2.into())));
        let e = parse_element("xp(1,0)/q").unwrap();
        assert_eq!(e.coeff(&ModeWord::letter(Generator::xp(1, 0))), Scalar::q_pow(-1));
    }

    #[test]
    fn scalars_round_trip() {
        for s in ["-q/(q^2 + 1)", "q^-2", "-1 + q^-4", "3/2", "(q^3 - 2*q)/(q^2 - 3)", "0"] {
            let x = parse_scalar(s).unwrap();
            assert_eq!(parse_scalar(&x.to_string()).unwrap(), x, "{s}");
        }
        assert_eq!(parse_scalar("(q + q^-1)*(q - q^-1)").unwrap(), Scalar::laurent(&[(2, 1), (-2, -1)]));
    }

    #[test]
    fn elements_round_trip() {
        let text = "xp(1,0) phi(2,-1) K(-1) - (q + q^-1) xm(1,2) + 3/2*psi0inv(2) Kp(1) + 5";
        let e = parse_element(text).unwrap();
        assert_eq!(parse_element(&e.to_string()).unwrap(), e);
    }

    #[test]
    fn products_keep_order() {
        let ab = parse_element("xp(1,0) xp(2,0)").unwrap();
        let ba = parse_element("xp(2,0)*xp(1,0)").unwrap();
        assert_ne!(ab, ba);
        assert_eq!(parse_element("(xp(1,0))^2").unwrap(), parse_element("xp(1,0) xp(1,0)").unwrap());
    }

    #[test]
    fn errors_carry_positions() {
        assert!(matches!(parse_element("xp(1,0) +"), Err(Error::Parse { .. })));
        assert!(matches!(parse_element("phi(1,2)"), Err(Error::Parse { pos: 0, .. })));
        assert!(matches!(parse_element("xp(1,0)/xp(1,0)"), Err(Error::Parse { .. })));
        assert!(matches!(parse_element("foo(1)"), Err(Error::Parse { .. })));
        assert!(parse_word("2 xp(1,0)").is_err());
    }
}
