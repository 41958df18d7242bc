//! Arithmetic expressions over a field: integers, named variables, `+ - * /`,
//! integer powers and parentheses. Juxtaposition (`2t`) multiplies.

use num_bigint::BigInt;

use crate::algebra::{Elem, Field, MPoly};
use crate::error::{Error, Result};
use crate::milnor::RatFunc;

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Expr {
    Num(BigInt),
    Var(String),
    Neg(Box<Expr>),
    Add(Box<Expr>, Box<Expr>),
    Sub(Box<Expr>, Box<Expr>),
    Mul(Box<Expr>, Box<Expr>),
    Div(Box<Expr>, Box<Expr>),
    Pow(Box<Expr>, i64),
}

impl Expr {
    /// Identifiers used anywhere in the expression.
    pub fn idents(&self, out: &mut Vec<String>) {
        match self {
            Expr::Num(_) => {}
            Expr::Var(v) => {
                if !out.contains(v) {
                    out.push(v.clone());
                }
            }
            Expr::Neg(a) | Expr::Pow(a, _) => a.idents(out),
            Expr::Add(a, b) | Expr::Sub(a, b) | Expr::Mul(a, b) | Expr::Div(a, b) => {
                a.idents(out);
                b.idents(out);
            }
        }
    }

    pub fn eval<A: Algebra>(&self, alg: &A) -> Result<A::V> {
        Ok(match self {
            Expr::Num(n) => alg.num(n),
            Expr::Var(v) => alg.var(v)?,
            Expr::Neg(a) => alg.neg(&a.eval(alg)?),
            Expr::Add(a, b) => alg.add(&a.eval(alg)?, &b.eval(alg)?),
            Expr::Sub(a, b) => alg.sub(&a.eval(alg)?, &b.eval(alg)?),
            Expr::Mul(a, b) => alg.mul(&a.eval(alg)?, &b.eval(alg)?),
            Expr::Div(a, b) => alg.div(&a.eval(alg)?, &b.eval(alg)?)?,
            Expr::Pow(a, e) => alg.pow(&a.eval(alg)?, *e)?,
        })
    }
}

/// Target of expression evaluation.
pub trait Algebra {
    type V: Clone;
    fn num(&self, n: &BigInt) -> Self::V;
    fn var(&self, name: &str) -> Result<Self::V>;
    fn add(&self, a: &Self::V, b: &Self::V) -> Self::V;
    fn sub(&self, a: &Self::V, b: &Self::V) -> Self::V;
    fn mul(&self, a: &Self::V, b: &Self::V) -> Self::V;
    fn neg(&self, a: &Self::V) -> Self::V;
    fn div(&self, a: &Self::V, b: &Self::V) -> Result<Self::V>;
    fn one(&self) -> Self::V;

    fn pow(&self, a: &Self::V, e: i64) -> Result<Self::V> {
        let mut base = if e < 0 { self.div(&self.one(), a)? } else { a.clone() };
        let mut m = e.unsigned_abs();
        let mut acc = self.one();
        while m > 0 {
            if m & 1 == 1 {
                acc = self.mul(&acc, &base);
            }
            base = self.mul(&base, &base);
            m >>= 1;
        }
        Ok(acc)
    }
}

/// The generator named `name` somewhere in the tower of `field`, embedded
/// into `field`.
pub fn tower_generator(field: &Field, name: &str) -> Option<Elem> {
    let mut cur = Some(field);
    while let Some(f) = cur {
        if f.var() == Some(name) {
            return field.embed(f, &f.generator().unwrap()).ok();
        }
        cur = f.base();
    }
    None
}

/// Field elements; identifiers are tower generators.
pub struct ElemAlg<'a>(pub &'a Field);

impl Algebra for ElemAlg<'_> {
    type V = Elem;
    fn num(&self, n: &BigInt) -> Elem {
        self.0.from_bigint(n)
    }
    fn var(&self, name: &str) -> Result<Elem> {
        tower_generator(self.0, name)
            .ok_or_else(|| Error::Parse(format!("unknown identifier `{name}` over {}", self.0)))
    }
    fn add(&self, a: &Elem, b: &Elem) -> Elem {
        self.0.add(a, b)
    }
    fn sub(&self, a: &Elem, b: &Elem) -> Elem {
        self.0.sub(a, b)
    }
    fn mul(&self, a: &Elem, b: &Elem) -> Elem {
        self.0.mul(a, b)
    }
    fn neg(&self, a: &Elem) -> Elem {
        self.0.neg(a)
    }
    fn div(&self, a: &Elem, b: &Elem) -> Result<Elem> {
        self.0.div(a, b).ok_or_else(|| Error::Parse("division by zero".into()))
    }
    fn one(&self) -> Elem {
        self.0.one()
    }
}

/// Polynomials in up to two named variables; other identifiers are tower
/// generators. Division only by nonzero constants.
pub struct MPolyAlg<'a> {
    pub field: &'a Field,
    pub vars: &'a [&'a str],
}

impl Algebra for MPolyAlg<'_> {
    type V = MPoly;
    fn num(&self, n: &BigInt) -> MPoly {
        MPoly::constant(self.field, self.field.from_bigint(n))
    }
    fn var(&self, name: &str) -> Result<MPoly> {
        match self.vars.iter().position(|v| *v == name) {
            Some(0) => Ok(MPoly::var0(self.field)),
            Some(_) => Ok(MPoly::var1(self.field)),
            None => Ok(MPoly::constant(self.field, ElemAlg(self.field).var(name)?)),
        }
    }
    fn add(&self, a: &MPoly, b: &MPoly) -> MPoly {
        a.add(b, self.field)
    }
    fn sub(&self, a: &MPoly, b: &MPoly) -> MPoly {
        a.sub(b, self.field)
    }
    fn mul(&self, a: &MPoly, b: &MPoly) -> MPoly {
        a.mul(b, self.field)
    }
    fn neg(&self, a: &MPoly) -> MPoly {
        a.neg(self.field)
    }
    fn div(&self, a: &MPoly, b: &MPoly) -> Result<MPoly> {
        let c = b
            .as_constant(self.field)
            .ok_or_else(|| Error::Parse("division by a non-constant polynomial".into()))?;
        let inv = self.field.inv(&c).ok_or_else(|| Error::Parse("division by zero".into()))?;
        Ok(a.scale(&inv, self.field))
    }
    fn one(&self) -> MPoly {
        MPoly::one(self.field)
    }
}

/// Rational functions in `t`; other identifiers are tower generators.
pub struct RatAlg<'a>(pub &'a Field);

impl Algebra for RatAlg<'_> {
    type V = RatFunc;
    fn num(&self, n: &BigInt) -> RatFunc {
        RatFunc::constant(self.0, self.0.from_bigint(n))
    }
    fn var(&self, name: &str) -> Result<RatFunc> {
        let p = MPolyAlg { field: self.0, vars: &["t"] }.var(name)?;
        Ok(RatFunc::from_poly(self.0, p.to_poly(self.0).unwrap()))
    }
    fn add(&self, a: &RatFunc, b: &RatFunc) -> RatFunc {
        a.add(b, self.0)
    }
    fn sub(&self, a: &RatFunc, b: &RatFunc) -> RatFunc {
        a.sub(b, self.0)
    }
    fn mul(&self, a: &RatFunc, b: &RatFunc) -> RatFunc {
        a.mul(b, self.0)
    }
    fn neg(&self, a: &RatFunc) -> RatFunc {
        a.neg(self.0)
    }
    fn div(&self, a: &RatFunc, b: &RatFunc) -> Result<RatFunc> {
        if b.is_zero() {
            return Err(Error::Parse("division by zero".into()));
        }
        Ok(a.mul(&b.inv(self.0)?, self.0))
    }
    fn one(&self) -> RatFunc {
        RatFunc::constant(self.0, self.0.one())
    }
}

#[derive(Clone, Debug, PartialEq)]
enum Tok {
    Num(BigInt),
    Ident(String),
    Op(char),
}

fn tokenize(s: &str) -> Result<Vec<Tok>> {
    let b: Vec<char> = s.chars().collect();
    let mut out = Vec::new();
    let mut i = 0;
    while i < b.len() {
        let c = b[i];
        if c.is_whitespace() {
            i += 1;
        } else if c.is_ascii_digit() {
            let start = i;
            while i < b.len() && b[i].is_ascii_digit() {
                i += 1;
            }
            let text: String = b[start..i].iter().collect();
            out.push(Tok::Num(text.parse().unwrap()));
        } else if c.is_alphabetic() || c == '_' {
            let start = i;
            while i < b.len() && (b[i].is_alphanumeric() || b[i] == '_') {
                i += 1;
            }
            out.push(Tok::Ident(b[start..i].iter().collect()));
        } else if "+-*/^()".contains(c) {
            out.push(Tok::Op(c));
            i += 1;
        } else {
            return Err(Error::Parse(format!("unexpected character `{c}` in `{s}`")));
        }
    }
    Ok(out)
}

pub fn parse_expr(s: &str) -> Result<Expr> {
    let toks = tokenize(s)?;
    let mut p = ExprParser { toks, i: 0, src: s };
    let e = p.sum()?;
    if p.i != p.toks.len() {
        return Err(p.err("trailing tokens"));
    }
    Ok(e)
}

struct ExprParser<'a> {
    toks: Vec<Tok>,
    i: usize,
    src: &'a str,
}

impl ExprParser<'_> {
    fn err(&self, msg: &str) -> Error {
        Error::Parse(format!("{msg} in expression `{}`", self.src))
    }

    fn peek_op(&self) -> Option<char> {
        match self.toks.get(self.i) {
            Some(Tok::Op(c)) => Some(*c),
            _ => None,
        }
    }

    fn sum(&mut self) -> Result<Expr> {
        let mut e = self.unary()?;
        while let Some(c @ ('+' | '-')) = self.peek_op() {
            self.i += 1;
            let r = self.unary()?;
            e = if c == '+' { Expr::Add(e.into(), r.into()) } else { Expr::Sub(e.into(), r.into()) };
        }
        Ok(e)
    }

    fn unary(&mut self) -> Result<Expr> {
        match self.peek_op() {
            Some('-') => {
                self.i += 1;
                Ok(Expr::Neg(self.unary()?.into()))
            }
            Some('+') => {
                self.i += 1;
                self.unary()
            }
            _ => self.product(),
        }
    }

    fn product(&mut self) -> Result<Expr> {
        let mut e = self.power()?;
        loop {
            match self.toks.get(self.i) {
                Some(Tok::Op('*')) => {
                    self.i += 1;
                    e = Expr::Mul(e.into(), self.power()?.into());
                }
                Some(Tok::Op('/')) => {
                    self.i += 1;
                    e = Expr::Div(e.into(), self.power()?.into());
                }
                Some(Tok::Num(_) | Tok::Ident(_) | Tok::Op('(')) => {
                    e = Expr::Mul(e.into(), self.power()?.into());
                }
                _ => return Ok(e),
            }
        }
    }

    fn power(&mut self) -> Result<Expr> {
        let base = self.atom()?;
        if self.peek_op() == Some('^') {
            self.i += 1;
            let paren = self.peek_op() == Some('(');
            if paren {
                self.i += 1;
            }
            let neg = self.peek_op() == Some('-');
            if neg {
                self.i += 1;
            }
            let n = match self.toks.get(self.i) {
                Some(Tok::Num(n)) => i64::try_from(n).map_err(|_| self.err("exponent too large"))?,
                _ => return Err(self.err("expected an integer exponent")),
            };
            self.i += 1;
            if paren {
                if self.peek_op() != Some(')') {
                    return Err(self.err("expected `)`"));
                }
                self.i += 1;
            }
            return Ok(Expr::Pow(base.into(), if neg { -n } else { n }));
        }
        Ok(base)
    }

    fn atom(&mut self) -> Result<Expr> {
        let t = self.toks.get(self.i).cloned().ok_or_else(|| self.err("unexpected end"))?;
        self.i += 1;
        match t {
            Tok::Num(n) => Ok(Expr::Num(n)),
            Tok::Ident(v) => Ok(Expr::Var(v)),
            Tok::Op('(') => {
                let e = self.sum()?;
                if self.peek_op() != Some(')') {
                    return Err(self.err("expected `)`"));
                }
                self.i += 1;
                Ok(e)
            }
            Tok::Op(c) => Err(self.err(&format!("unexpected `{c}`"))),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn polynomial_round_trip() {
        let q = Field::rational();
        let alg = MPolyAlg { field: &q, vars: &["x", "y"] };
        for s in ["x*y+2", "-t^2+t+2", "3*x^2-1", "(1/2)*x-y"] {
            let vars: &[&str] = if s.contains('t') { &["t"] } else { &["x", "y"] };
            let alg2 = MPolyAlg { field: &q, vars };
            let p = parse_expr(s).unwrap().eval(&alg2).unwrap();
            let back = p.format(&q, vars);
            assert_eq!(parse_expr(&back).unwrap().eval(&alg2).unwrap(), p, "{s} -> {back}");
        }
        let p = parse_expr("-(x+1)^2").unwrap().eval(&alg).unwrap();
        assert_eq!(p.format(&q, &["x", "y"]), "-x^2-2*x-1");
        assert!(parse_expr("x/(y+1)").unwrap().eval(&alg).is_err());
        assert!(parse_expr("2*").is_err());
    }

    #[test]
    fn rational_functions() {
        let q = Field::rational();
        let r = parse_expr("(t^2-2)/t").unwrap().eval(&RatAlg(&q)).unwrap();
        assert_eq!(r.format(&q), "(t^2-2)/t");
        let r = parse_expr("t^(-2)").unwrap().eval(&RatAlg(&q)).unwrap();
        assert_eq!(r.format(&q), "1/t^2");
    }
}
