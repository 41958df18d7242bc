//! The maps `ρ : K^M_l(k) → H` and `φ : H → K^M_l(k)` between Milnor
//! K-theory and `d = 0` symbol chains, the companion homotopy, and the
//! norm compatibility test.

mod compat;
mod homotopy;

use std::fmt;

pub use compat::{norm_compat_test, CompatReport};
pub use homotopy::{build_companion_homotopy, check_companion_homotopy, HomotopyCheck};

use crate::algebra::{Elem, Field};
use crate::error::{Error, Result};
use crate::milnor::{invariant, norm, MilnorElement, MilnorInvariant};
use crate::symbols::{k0_class, Chain, Context, SymbolTuple};

/// `coefficient · N_{L/k} {α_1, ..., α_l}`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct NormTaggedSymbol {
    pub field: Field,
    pub alphas: Vec<Elem>,
    pub coefficient: i64,
}

impl NormTaggedSymbol {
    pub fn format(&self) -> String {
        let a: Vec<String> =
            self.alphas.iter().map(|x| format!("\"{}\"", self.field.format_elem(x))).collect();
        format!(
            "{{coef:{}, symbol:[{}], norm_from:\"{}\"}}",
            self.coefficient,
            a.join(","),
            self.field.descriptor()
        )
    }
}

impl fmt::Display for NormTaggedSymbol {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let a: Vec<String> = self.alphas.iter().map(|x| self.field.format_elem(x)).collect();
        write!(f, "{}*N[{}]{{{}}}", self.coefficient, self.field.descriptor(), a.join(","))
    }
}

/// Output of `φ`: the norm-tagged symbols and, where computable, their sum
/// in `K^M_l(k)` and its invariant.
#[derive(Clone, Debug)]
pub struct PhiResult {
    pub field: Field,
    pub l: usize,
    pub symbols: Vec<NormTaggedSymbol>,
    pub value: Result<MilnorElement>,
    pub invariant: Result<MilnorInvariant>,
}

impl PhiResult {
    pub fn format(&self) -> String {
        let t: Vec<String> = self.symbols.iter().map(|s| s.format()).collect();
        format!(
            "{{field:\"{}\", l:{}, terms:[{}]}}",
            self.field.descriptor(),
            self.l,
            t.join(", ")
        )
    }
}

/// `ρ`: each Steinberg symbol becomes the tuple of `1 × 1` matrices.
pub fn rho(m: &MilnorElement) -> Result<Chain> {
    let ctx = Context { field: m.field().clone(), d: 0, l: m.l() };
    let mut c = Chain::zero(&ctx);
    for (coef, s) in m.terms() {
        if s.iter().any(|a| m.field().is_zero(a)) {
            return Err(Error::ZeroCoordinate);
        }
        c.push(*coef, SymbolTuple::scalars(m.field(), s)?)?;
    }
    Ok(c)
}

/// `φ` on a `d = 0` chain via its composition factors.
pub fn phi(c: &Chain) -> Result<PhiResult> {
    if c.ctx().d != 0 {
        return Err(Error::Context(format!("phi needs d = 0, got {}", c.ctx())));
    }
    let k = c.ctx().field.clone();
    let l = c.ctx().l;
    let class = k0_class(c)?;
    let symbols: Vec<NormTaggedSymbol> = class
        .factors()
        .iter()
        .map(|(f, &m)| NormTaggedSymbol {
            field: f.field.clone(),
            alphas: f.alphas.clone(),
            coefficient: m,
        })
        .collect();
    let value = sum_norms(&k, l, &symbols);
    let invariant = match &value {
        Ok(v) => invariant(v),
        Err(e) => Err(e.clone()),
    };
    Ok(PhiResult { field: k, l, symbols, value, invariant })
}

fn sum_norms(k: &Field, l: usize, symbols: &[NormTaggedSymbol]) -> Result<MilnorElement> {
    let mut out = MilnorElement::zero(k, l);
    for s in symbols {
        let e = MilnorElement::new(&s.field, l, vec![(s.coefficient, s.alphas.clone())])?;
        out = out.add(&norm(&e, k)?)?;
    }
    Ok(out.collect())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::Mat;

    #[test]
    fn rho_examples() {
        let q = Field::rational();
        let m = MilnorElement::symbol(&q, vec![q.from_int(2), q.from_int(3)]).unwrap();
        let c = rho(&m).unwrap();
        assert_eq!(c.len(), 1);
        assert_eq!(c.terms()[0].0, 1);
        let m = MilnorElement::symbol(&q, vec![q.from_int(2), q.one()]).unwrap();
        assert!(rho(&m).unwrap().is_empty());
        let m = MilnorElement::new(&q, 1, vec![(2, vec![q.from_int(5)]), (-1, vec![q.from_int(3)])])
            .unwrap();
        let coefs: Vec<i64> = rho(&m).unwrap().terms().iter().map(|(c, _)| *c).collect();
        assert_eq!(coefs, vec![2, -1]);
    }

    #[test]
    fn phi_of_companion() {
        let q = Field::rational();
        let a = Mat::from_rows(vec![vec![q.zero(), q.one()], vec![q.from_int(-20), q.from_int(9)]])
            .unwrap();
        let c = Chain::single(SymbolTuple::constant(&q, vec![a]).unwrap());
        let r = phi(&c).unwrap();
        assert_eq!(r.symbols.len(), 2);
        let twenty = MilnorElement::symbol(&q, vec![q.from_int(20)]).unwrap();
        assert_eq!(r.invariant.unwrap(), invariant(&twenty).unwrap());
    }

    #[test]
    fn phi_rho_two_three() {
        let q = Field::rational();
        let m = MilnorElement::symbol(&q, vec![q.from_int(2), q.from_int(3)]).unwrap();
        let r = phi(&rho(&m).unwrap()).unwrap();
        assert_eq!(r.value.unwrap(), m);
        assert_eq!(r.invariant.unwrap(), invariant(&m).unwrap());
    }
}
