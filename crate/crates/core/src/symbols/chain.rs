//! Formal integer combinations of symbol tuples and the simplicial boundary
//! maps.

use std::collections::BTreeMap;
use std::fmt;

use super::tuple::SymbolTuple;
use crate::algebra::{Field, MPoly};
use crate::error::{Error, Result};

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Context {
    pub field: Field,
    pub d: usize,
    pub l: usize,
}

impl fmt::Display for Context {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{{field:\"{}\", d:{}, l:{}}}", self.field.descriptor(), self.d, self.l)
    }
}

/// An ordered list of `(coefficient, tuple)` terms in one context.
///
/// The order matters only to the certificate checker, which addresses terms
/// by index; [`Chain::collect`] gives the canonical form used for equality.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Chain {
    ctx: Context,
    terms: Vec<(i64, SymbolTuple)>,
}

impl Chain {
    pub fn zero(ctx: &Context) -> Chain {
        Chain { ctx: ctx.clone(), terms: vec![] }
    }

    pub fn new(ctx: &Context, terms: Vec<(i64, SymbolTuple)>) -> Result<Chain> {
        for (_, t) in &terms {
            check_ctx(ctx, t)?;
        }
        Ok(Chain { ctx: ctx.clone(), terms })
    }

    pub fn single(t: SymbolTuple) -> Chain {
        let ctx = Context { field: t.field().clone(), d: t.d(), l: t.l() };
        Chain { ctx, terms: vec![(1, t)] }
    }

    pub fn ctx(&self) -> &Context {
        &self.ctx
    }

    pub fn terms(&self) -> &[(i64, SymbolTuple)] {
        &self.terms
    }

    pub fn terms_mut(&mut self) -> &mut Vec<(i64, SymbolTuple)> {
        &mut self.terms
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn push(&mut self, coef: i64, t: SymbolTuple) -> Result<()> {
        check_ctx(&self.ctx, &t)?;
        self.terms.push((coef, t));
        Ok(())
    }

    pub fn add(&self, o: &Chain) -> Result<Chain> {
        if self.ctx != o.ctx {
            return Err(Error::Context(format!("{} vs {}", self.ctx, o.ctx)));
        }
        let mut terms = self.terms.clone();
        terms.extend(o.terms.iter().cloned());
        Ok(Chain { ctx: self.ctx.clone(), terms })
    }

    pub fn scale(&self, c: i64) -> Chain {
        Chain {
            ctx: self.ctx.clone(),
            terms: self.terms.iter().map(|(k, t)| (k * c, t.clone())).collect(),
        }
    }

    pub fn neg(&self) -> Chain {
        self.scale(-1)
    }

    pub fn sub(&self, o: &Chain) -> Result<Chain> {
        self.add(&o.neg())
    }

    /// Merge equal tuples, drop zero coefficients, sort canonically.
    pub fn collect(&self) -> Chain {
        let mut map: BTreeMap<&SymbolTuple, i64> = BTreeMap::new();
        for (c, t) in &self.terms {
            *map.entry(t).or_insert(0) += c;
        }
        let terms = map.into_iter().filter(|(_, c)| *c != 0).map(|(t, c)| (c, t.clone())).collect();
        Chain { ctx: self.ctx.clone(), terms }
    }

    /// Equality as formal combinations.
    pub fn same_as(&self, o: &Chain) -> bool {
        self.ctx == o.ctx && self.collect().terms == o.collect().terms
    }

    /// `∂` on a `d = 1` chain: `θ(1) - θ(0)`.
    pub fn boundary(&self) -> Result<Chain> {
        if self.ctx.d != 1 {
            return Err(Error::Context(format!("boundary needs d=1, got d={}", self.ctx.d)));
        }
        let ctx = Context { d: 0, ..self.ctx.clone() };
        let mut terms = Vec::new();
        for (c, t) in &self.terms {
            terms.push((*c, t.at(1)));
            terms.push((-c, t.at(0)));
        }
        Ok(Chain { ctx, terms }.collect())
    }

    /// `∂` on a `d = 2` chain:
    /// `θ(1-t, t) - θ(0, t) + θ(t, 0)`.
    pub fn boundary2(&self) -> Result<Chain> {
        if self.ctx.d != 2 {
            return Err(Error::Context(format!("boundary2 needs d=2, got d={}", self.ctx.d)));
        }
        let f = &self.ctx.field;
        let t = MPoly::var0(f);
        let one_minus_t = MPoly::one(f).sub(&t, f);
        let zero = MPoly::zero();
        let ctx = Context { d: 1, ..self.ctx.clone() };
        let mut terms = Vec::new();
        for (c, s) in &self.terms {
            terms.push((*c, s.substitute(&one_minus_t, &t, 1)));
            terms.push((-c, s.substitute(&zero, &t, 1)));
            terms.push((*c, s.substitute(&t, &zero, 1)));
        }
        Ok(Chain { ctx, terms }.collect())
    }

    /// The boundary appropriate to the context degree.
    pub fn boundary_any(&self) -> Result<Chain> {
        match self.ctx.d {
            1 => self.boundary(),
            2 => self.boundary2(),
            d => Err(Error::Context(format!("no boundary at d={d}"))),
        }
    }

    /// Text form: a list of `{coef: c, tuple: ...}`.
    pub fn format(&self) -> String {
        let terms: Vec<String> = self
            .terms
            .iter()
            .map(|(c, t)| format!("{{coef:{c}, tuple:{}}}", t.format()))
            .collect();
        format!("[{}]", terms.join(", "))
    }
}

impl fmt::Display for Chain {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        for (i, (c, t)) in self.terms.iter().enumerate() {
            let sign = if *c < 0 { "-" } else if i > 0 { "+" } else { "" };
            let mag = c.unsigned_abs();
            if i > 0 {
                write!(f, " ")?;
            }
            if mag == 1 {
                write!(f, "{sign}{t}")?;
            } else {
                write!(f, "{sign}{mag}{t}")?;
            }
        }
        Ok(())
    }
}

fn check_ctx(ctx: &Context, t: &SymbolTuple) -> Result<()> {
    if t.field() != &ctx.field || t.d() != ctx.d || t.l() != ctx.l {
        return Err(Error::Context(format!(
            "tuple over {} with d={}, l={} in context {}",
            t.field(),
            t.d(),
            t.l(),
            ctx
        )));
    }
    Ok(())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::{Elem, Mat};

    #[test]
    fn boundary_of_theta_block() {
        // Θ(t) = [[0,1],[-6, 6t + 5(1-t)]] with φ=2, ψ=3
        let f = Field::rational();
        let t = MPoly::var0(&f);
        let c = |n: i64| MPoly::from_int(&f, n);
        let entry = t.scale(&f.from_int(6), &f).add(&c(1).sub(&t, &f).scale(&f.from_int(5), &f), &f);
        let theta = Mat::from_rows(vec![vec![c(0), c(1)], vec![c(-6), entry]]).unwrap();
        let five = Mat::from_rows(vec![vec![c(5), c(0)], vec![c(0), c(5)]]).unwrap();
        let s = SymbolTuple::new(&f, 1, vec![theta, five]).unwrap();
        let b = Chain::single(s).boundary().unwrap();
        let q = |rows: &[&[i64]]| -> Mat<Elem> {
            Mat::from_rows(rows.iter().map(|r| r.iter().map(|&x| f.from_int(x)).collect()).collect())
                .unwrap()
        };
        let at1 = SymbolTuple::constant(&f, vec![q(&[&[0, 1], &[-6, 6]]), q(&[&[5, 0], &[0, 5]])])
            .unwrap();
        let at0 = SymbolTuple::constant(&f, vec![q(&[&[0, 1], &[-6, 5]]), q(&[&[5, 0], &[0, 5]])])
            .unwrap();
        let ctx = Context { field: f.clone(), d: 0, l: 2 };
        let expect = Chain::new(&ctx, vec![(1, at1), (-1, at0)]).unwrap();
        assert!(b.same_as(&expect));
    }

    #[test]
    fn constant_d2_boundary_is_itself() {
        let f = Field::rational();
        let m = Mat::from_rows(vec![vec![MPoly::from_int(&f, 3)]]).unwrap();
        let s = SymbolTuple::new(&f, 2, vec![m.clone()]).unwrap();
        let b = Chain::single(s).boundary2().unwrap();
        let expect = Chain::single(SymbolTuple::new(&f, 1, vec![m]).unwrap());
        assert!(b.same_as(&expect));
        assert!(b.boundary().unwrap().is_empty());
    }
}
