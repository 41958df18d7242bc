//! Tame symbols `∂_v : K_{l+1}(k(t)) → K_l(k_v)` and Weil reciprocity.

use std::collections::BTreeSet;

use super::element::{FunctionElement, MilnorElement};
use super::ratfunc::{Place, RatFunc};
use crate::algebra::{Elem, Field};
use crate::error::{Error, Result};

/// Residue of one symbol, by multilinear expansion into unit and
/// uniformizer parts. A subset `S` of positions taking the uniformizer
/// contributes `Π_{i∈S} v_i`; all uniformizers after the first become `-1`
/// (from `{π, π} = {π, -1}`), and moving the remaining `π` from position
/// `j` to the end costs `(-1)^(n-j)`.
fn residue_of_symbol(
    k: &Field,
    kv: &Field,
    coords: &[RatFunc],
    v: &Place,
    coef: i64,
    out: &mut MilnorElement,
) -> Result<()> {
    let n = coords.len();
    let vals: Vec<i64> = coords.iter().map(|f| f.valuation(v, k)).collect();
    let units: Vec<Elem> = coords.iter().map(|f| f.unit_residue(v, k)).collect();
    let minus_one = kv.from_int(-1);
    let positions: Vec<usize> = (0..n).filter(|&i| vals[i] != 0).collect();
    // nonempty subsets of the positions with nonzero valuation
    for mask in 1u64..(1u64 << positions.len()) {
        let s: Vec<usize> = (0..positions.len())
            .filter(|b| mask & (1 << b) != 0)
            .map(|b| positions[b])
            .collect();
        let j = s[0];
        let mult: i64 = s.iter().map(|&i| vals[i]).product();
        let sign = if (n - 1 - j).is_multiple_of(2) { 1 } else { -1 };
        let sym: Vec<Elem> = (0..n)
            .filter(|&i| i != j)
            .map(|i| if s.contains(&i) { minus_one.clone() } else { units[i].clone() })
            .collect();
        out.push(coef * mult * sign, sym)?;
    }
    Ok(())
}

/// `∂_v w`, an element of weight `l - 1` over the residue field `k_v`.
pub fn tame_symbol(w: &FunctionElement, v: &Place) -> Result<MilnorElement> {
    if w.l() == 0 {
        return Err(Error::Context("tame symbol needs weight at least 1".into()));
    }
    let k = w.field();
    let kv = v.residue_field(k);
    let mut out = MilnorElement::zero(&kv, w.l() - 1);
    for (c, s) in w.terms() {
        residue_of_symbol(k, &kv, s, v, *c, &mut out)?;
    }
    Ok(out.collect())
}

/// Variant that expands coordinates in reverse order and undoes the
/// permutation sign; used to test expansion-order independence.
pub fn tame_symbol_reversed(w: &FunctionElement, v: &Place) -> Result<MilnorElement> {
    let k = w.field();
    let n = w.l();
    // reversing n coordinates is a permutation of sign (-1)^(n(n-1)/2)
    let sign = if (n * n.saturating_sub(1) / 2).is_multiple_of(2) { 1 } else { -1 };
    let kv = v.residue_field(k);
    let mut rev = MilnorElement::zero(&kv, n - 1);
    for (c, s) in w.terms() {
        let r: Vec<RatFunc> = s.iter().rev().cloned().collect();
        residue_of_symbol(k, &kv, &r, v, *c * sign, &mut rev)?;
    }
    // bring the residue symbols back: reversing n-1 coordinates
    let m = n - 1;
    let back = if (m * m.saturating_sub(1) / 2).is_multiple_of(2) { 1 } else { -1 };
    let terms = rev
        .terms()
        .iter()
        .map(|(c, s)| (c * back, s.iter().rev().cloned().collect()))
        .collect();
    Ok(MilnorElement::new(&kv, m, terms)?.collect())
}

/// Every place where some coordinate has nonzero valuation or non-unit
/// behaviour, plus infinity.
pub fn support(w: &FunctionElement) -> Result<Vec<Place>> {
    let k = w.field();
    let mut set = BTreeSet::new();
    for (_, s) in w.terms() {
        for f in s {
            for p in f.support(k)? {
                set.insert(Place::Finite(p));
            }
        }
    }
    let mut v: Vec<Place> = set.into_iter().collect();
    v.push(Place::Infinity);
    Ok(v)
}

#[derive(Clone, Debug)]
pub struct ReciprocityReport {
    /// `(place, ∂_v w, N_v(∂_v w))`.
    pub residues: Vec<(Place, MilnorElement, Elem)>,
    pub product: Elem,
    pub holds: bool,
}

/// `Π_v N_{k_v/k}(∂_v w)` for a weight-two element; reciprocity says it is 1.
pub fn weil_reciprocity_check(w: &FunctionElement) -> Result<ReciprocityReport> {
    if w.l() != 2 {
        return Err(Error::Context("reciprocity check needs weight 2".into()));
    }
    let k = w.field();
    let mut residues = Vec::new();
    let mut product = k.one();
    for v in support(w)? {
        let r = tame_symbol(w, &v)?;
        let kv = r.field().clone();
        let val = r.weight_one_value()?;
        let n = kv.norm_to(&val, k)?;
        product = k.mul(&product, &n);
        residues.push((v, r, n));
    }
    let holds = k.is_one(&product);
    Ok(ReciprocityReport { residues, product, holds })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::Poly;

    fn rf(k: &Field, c: &[i64]) -> RatFunc {
        RatFunc::from_poly(k, Poly::from_ints(k, c))
    }

    #[test]
    fn five_t() {
        let q = Field::rational();
        let w = FunctionElement::symbol(&q, vec![rf(&q, &[5]), rf(&q, &[0, 1])]).unwrap();
        let at_t = Place::Finite(Poly::from_ints(&q, &[0, 1]));
        let r = tame_symbol(&w, &at_t).unwrap();
        assert_eq!(r, MilnorElement::symbol(&q, vec![q.from_int(5)]).unwrap());
        let r = tame_symbol(&w, &Place::Infinity).unwrap();
        assert_eq!(r.weight_one_value().unwrap(), q.inv(&q.from_int(5)).unwrap());
        assert!(weil_reciprocity_check(&w).unwrap().holds);
    }

    #[test]
    fn steinberg_residues_vanish() {
        let q = Field::rational();
        let w = FunctionElement::symbol(&q, vec![rf(&q, &[0, 1]), rf(&q, &[1, -1])]).unwrap();
        let rep = weil_reciprocity_check(&w).unwrap();
        assert!(rep.holds);
        for (_, r, n) in &rep.residues {
            assert!(r.weight_one_value().is_ok());
            assert_eq!(*n, q.one());
        }
    }

    #[test]
    fn t2_minus_2_and_t() {
        let q = Field::rational();
        let w = FunctionElement::symbol(&q, vec![rf(&q, &[-2, 0, 1]), rf(&q, &[0, 1])]).unwrap();
        let rep = weil_reciprocity_check(&w).unwrap();
        assert!(rep.holds);
        let at_t = Place::Finite(Poly::from_ints(&q, &[0, 1]));
        let r = rep.residues.iter().find(|(v, _, _)| *v == at_t).unwrap();
        assert_eq!(r.2, q.from_int(-2));
    }

    #[test]
    fn colliding_uniformizers() {
        // ∂_t {t, t} = {-1} (from {t,t} = {t,-1})
        let q = Field::rational();
        let w = FunctionElement::symbol(&q, vec![rf(&q, &[0, 1]), rf(&q, &[0, 1])]).unwrap();
        let at_t = Place::Finite(Poly::from_ints(&q, &[0, 1]));
        let r = tame_symbol(&w, &at_t).unwrap();
        assert_eq!(r.weight_one_value().unwrap(), q.from_int(-1));
        assert_eq!(tame_symbol_reversed(&w, &at_t).unwrap().weight_one_value().unwrap(), q.from_int(-1));
    }
}
