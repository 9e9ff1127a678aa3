//! Expressions for `project`: sums and products of `R(m,n)`, `z`, `zbar`,
//! `|z|^2`, real or imaginary literals and parentheses, with nonnegative
//! integer powers. Example: `R(2,1) + (0.5-2i)*z^2*zbar - (1-|z|^2)^2`.

use polybergman::disc_poly::eval_jacobi_form;
use polybergman::{Complex64, Orders, WeightParam};

#[derive(Debug, Clone, PartialEq)]
pub enum Expr {
    Const(Complex64),
    Z,
    Zbar,
    Disc(usize, usize),
    Neg(Box<Expr>),
    Add(Box<Expr>, Box<Expr>),
    Sub(Box<Expr>, Box<Expr>),
    Mul(Box<Expr>, Box<Expr>),
    Pow(Box<Expr>, u32),
}

#[derive(Debug, thiserror::Error, PartialEq)]
#[error("cannot parse expression at byte {pos}: {msg}")]
pub struct ParseError {
    pub pos: usize,
    pub msg: String,
}

impl Expr {
    pub fn eval(&self, g: WeightParam, z: Complex64) -> Complex64 {
        match self {
            Expr::Const(c) => *c,
            Expr::Z => z,
            Expr::Zbar => z.conj(),
            Expr::Disc(m, n) => eval_jacobi_form(g, Orders::new(*m, *n), z),
            Expr::Neg(a) => -a.eval(g, z),
            Expr::Add(a, b) => a.eval(g, z) + b.eval(g, z),
            Expr::Sub(a, b) => a.eval(g, z) - b.eval(g, z),
            Expr::Mul(a, b) => a.eval(g, z) * b.eval(g, z),
            Expr::Pow(a, k) => a.eval(g, z).powu(*k),
        }
    }

    /// Upper bounds on the degrees in `z` and in `z̄`.
    pub fn degrees(&self) -> (usize, usize) {
        match self {
            Expr::Const(_) => (0, 0),
            Expr::Z => (1, 0),
            Expr::Zbar => (0, 1),
            Expr::Disc(m, n) => (*m, *n),
            Expr::Neg(a) => a.degrees(),
            Expr::Add(a, b) | Expr::Sub(a, b) => {
                let (x, y) = (a.degrees(), b.degrees());
                (x.0.max(y.0), x.1.max(y.1))
            }
            Expr::Mul(a, b) => {
                let (x, y) = (a.degrees(), b.degrees());
                (x.0 + y.0, x.1 + y.1)
            }
            Expr::Pow(a, k) => {
                let (p, q) = a.degrees();
                (p * *k as usize, q * *k as usize)
            }
        }
    }
}

pub fn parse(src: &str) -> Result<Expr, ParseError> {
    let mut p = Parser {
        s: src.as_bytes(),
        pos: 0,
    };
    let e = p.sum()?;
    p.skip_ws();
    if p.pos != p.s.len() {
        return Err(p.err("unexpected trailing input"));
    }
    Ok(e)
}

struct Parser<'a> {
    s: &'a [u8],
    pos: usize,
}

impl Parser<'_> {
    fn err(&self, msg: &str) -> ParseError {
        ParseError {
            pos: self.pos,
            msg: msg.into(),
        }
    }

    fn skip_ws(&mut self) {
        while self.pos < self.s.len() && self.s[self.pos].is_ascii_whitespace() {
            self.pos += 1;
        }
    }

    fn peek(&mut self) -> Option<u8> {
        self.skip_ws();
        self.s.get(self.pos).copied()
    }

    fn eat(&mut self, tok: &str) -> bool {
        self.skip_ws();
        if self.s[self.pos..].starts_with(tok.as_bytes()) {
            self.pos += tok.len();
            true
        } else {
            false
        }
    }

    fn expect(&mut self, tok: &str) -> Result<(), ParseError> {
        if self.eat(tok) {
            Ok(())
        } else {
            Err(self.err(&format!("expected '{tok}'")))
        }
    }

    fn sum(&mut self) -> Result<Expr, ParseError> {
        let mut e = self.product()?;
        loop {
            match self.peek() {
                Some(b'+') => {
                    self.pos += 1;
                    e = Expr::Add(Box::new(e), Box::new(self.product()?));
                }
                Some(b'-') => {
                    self.pos += 1;
                    e = Expr::Sub(Box::new(e), Box::new(self.product()?));
                }
                _ => return Ok(e),
            }
        }
    }

    fn product(&mut self) -> Result<Expr, ParseError> {
        let mut e = self.unary()?;
        while self.eat("*") {
            e = Expr::Mul(Box::new(e), Box::new(self.unary()?));
        }
        Ok(e)
    }

    fn unary(&mut self) -> Result<Expr, ParseError> {
        if self.eat("-") {
            return Ok(Expr::Neg(Box::new(self.unary()?)));
        }
        self.eat("+");
        self.power()
    }

    fn power(&mut self) -> Result<Expr, ParseError> {
        let base = self.atom()?;
        if self.eat("^") {
            let k = self.integer()?;
            let k = u32::try_from(k).map_err(|_| self.err("exponent too large"))?;
            return Ok(Expr::Pow(Box::new(base), k));
        }
        Ok(base)
    }

    fn integer(&mut self) -> Result<usize, ParseError> {
        self.skip_ws();
        let start = self.pos;
        while self.pos < self.s.len() && self.s[self.pos].is_ascii_digit() {
            self.pos += 1;
        }
        std::str::from_utf8(&self.s[start..self.pos])
            .unwrap()
            .parse()
            .map_err(|_| ParseError {
                pos: start,
                msg: "expected a nonnegative integer".into(),
            })
    }

    fn atom(&mut self) -> Result<Expr, ParseError> {
        match self.peek() {
            Some(b'(') => {
                self.pos += 1;
                let e = self.sum()?;
                self.expect(")")?;
                Ok(e)
            }
            Some(b'|') => {
                self.pos += 1;
                self.expect("z")?;
                self.expect("|")?;
                self.expect("^")?;
                if self.integer()? != 2 {
                    return Err(self.err("only |z|^2 is supported"));
                }
                Ok(Expr::Mul(Box::new(Expr::Z), Box::new(Expr::Zbar)))
            }
            Some(b'R') => {
                self.pos += 1;
                self.expect("(")?;
                let m = self.integer()?;
                self.expect(",")?;
                let n = self.integer()?;
                self.expect(")")?;
                Ok(Expr::Disc(m, n))
            }
            Some(b'i') => {
                self.pos += 1;
                Ok(Expr::Const(Complex64::new(0.0, 1.0)))
            }
            Some(c) if c.is_ascii_digit() || c == b'.' => self.number(),
            Some(b'z') => {
                if self.eat("zbar") {
                    Ok(Expr::Zbar)
                } else {
                    self.pos += 1;
                    Ok(Expr::Z)
                }
            }
            Some(_) => Err(self.err("unexpected character")),
            None => Err(self.err("unexpected end of input")),
        }
    }

    fn number(&mut self) -> Result<Expr, ParseError> {
        let start = self.pos;
        while self.pos < self.s.len()
            && (self.s[self.pos].is_ascii_digit() || self.s[self.pos] == b'.')
        {
            self.pos += 1;
        }
        // Exponent, as in 1e-3.
        if self.pos < self.s.len() && matches!(self.s[self.pos], b'e' | b'E') {
            let save = self.pos;
            self.pos += 1;
            if self.pos < self.s.len() && matches!(self.s[self.pos], b'+' | b'-') {
                self.pos += 1;
            }
            let digits = self.pos;
            while self.pos < self.s.len() && self.s[self.pos].is_ascii_digit() {
                self.pos += 1;
            }
            if digits == self.pos {
                self.pos = save;
            }
        }
        let text = std::str::from_utf8(&self.s[start..self.pos]).unwrap();
        let v: f64 = text.parse().map_err(|_| ParseError {
            pos: start,
            msg: format!("bad number '{text}'"),
        })?;
        if self.s.get(self.pos) == Some(&b'i') {
            self.pos += 1;
            return Ok(Expr::Const(Complex64::new(0.0, v)));
        }
        Ok(Expr::Const(Complex64::new(v, 0.0)))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn at(src: &str, z: Complex64) -> Complex64 {
        parse(src).unwrap().eval(WeightParam::new(0.0).unwrap(), z)
    }

    #[test]
    fn monomials_and_literals() {
        let z = Complex64::new(0.3, -0.4);
        assert!((at("z^2*zbar", z) - z * z * z.conj()).norm() < 1e-15);
        assert!((at("(0.5-2i)*z", z) - Complex64::new(0.5, -2.0) * z).norm() < 1e-15);
        assert!(
            (at("-(1-|z|^2)^2", z) + Complex64::new((1.0 - z.norm_sqr()).powi(2), 0.0)).norm()
                < 1e-15
        );
        assert!((at("1e-1 * i", z) - Complex64::new(0.0, 0.1)).norm() < 1e-16);
    }

    #[test]
    fn disc_polynomial_atom() {
        let z = Complex64::new(0.5, 0.0);
        assert!((at("R(1,1)", z) + 0.5).norm() < 1e-15);
        assert_eq!(parse("R(2,1) + zbar^3").unwrap().degrees(), (2, 3));
        assert_eq!(parse("(1-|z|^2)^2*z").unwrap().degrees(), (3, 2));
    }

    #[test]
    fn rejects_malformed_input() {
        assert!(parse("R(1)").is_err());
        assert!(parse("z +").is_err());
        assert!(parse("w").is_err());
        assert!(parse("|z|^3").is_err());
        assert!(parse("(z").is_err());
    }
}
