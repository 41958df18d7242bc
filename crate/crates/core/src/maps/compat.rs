//! Compatibility of `φ` with norms: restriction of scalars on the symbol
//! side against the Milnor norm.

use super::{phi, rho};
use crate::algebra::Field;
use crate::error::{Error, Result};
use crate::milnor::{invariant, norm, MilnorElement, MilnorInvariant};
use crate::symbols::{Chain, Context};

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CompatReport {
    /// `invariant(φ(restrict_scalars(ρ(m))))`.
    pub motivic: MilnorInvariant,
    /// `invariant(N_{L/k}(m))`.
    pub milnor: MilnorInvariant,
    pub equal: bool,
}

pub fn norm_compat_test(k: &Field, m: &MilnorElement) -> Result<CompatReport> {
    let l = m.field();
    if l.degree_over(k).is_none() {
        return Err(Error::NotExtension(l.descriptor(), k.descriptor()));
    }
    if !k.is_finite() && !(k.is_rational() && m.l() <= 2) {
        return Err(Error::Unsupported(format!("norm compatibility over {k} in weight {}", m.l())));
    }
    let up = rho(m)?;
    let mut down = Chain::zero(&Context { field: k.clone(), d: 0, l: m.l() });
    for (c, t) in up.terms() {
        down.push(*c, t.restrict_scalars(k)?)?;
    }
    let motivic = phi(&down)?.invariant?;
    let milnor = invariant(&norm(m, k)?)?;
    let equal = motivic == milnor;
    Ok(CompatReport { motivic, milnor, equal })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::Poly;

    #[test]
    fn f25_over_f5() {
        let f5 = Field::prime(5).unwrap();
        let f25 = Field::extension(&f5, &Poly::from_ints(&f5, &[2, 0, 1]), "x").unwrap();
        let x = f25.generator().unwrap();
        let x1 = f25.add(&x, &f25.one());
        let m = MilnorElement::symbol(&f25, vec![x.clone(), x1]).unwrap();
        let r = norm_compat_test(&f5, &m).unwrap();
        assert!(r.equal && r.motivic.is_zero());
        let m = MilnorElement::symbol(&f25, vec![x]).unwrap();
        let r = norm_compat_test(&f5, &m).unwrap();
        assert!(r.equal);
        let two = MilnorElement::symbol(&f5, vec![f5.from_int(2)]).unwrap();
        assert_eq!(r.milnor, invariant(&two).unwrap());
    }

    #[test]
    fn two_and_i() {
        let q = Field::rational();
        let qi = Field::extension(&q, &Poly::from_ints(&q, &[1, 0, 1]), "i").unwrap();
        let m = MilnorElement::symbol(&qi, vec![qi.from_int(2), qi.generator().unwrap()]).unwrap();
        let r = norm_compat_test(&q, &m).unwrap();
        assert!(r.equal && r.milnor.is_zero());
    }
}
