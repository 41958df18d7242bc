//! Norms `N_{L/k}` on Milnor K-groups of a finite extension tower.
//!
//! Weight 1 is the field norm. Weight 2 uses the Bass-Tate construction:
//! for `L = K[t]/(m)` and `a, b ∈ L` lifted to polynomials `A, B` of degree
//! below `deg m`, Weil reciprocity applied to `{A, B, m}` gives
//! `N_m {a, b} = -Σ_{v ≠ m} N_v ∂_v {A, B, m}`, where every other place has
//! smaller residue degree. Towers are handled one level at a time.

use super::element::{FunctionElement, MilnorElement};
use super::ratfunc::{Place, RatFunc};
use super::tame::{support, tame_symbol};
use crate::algebra::{Elem, Field, Poly};
use crate::error::{Error, Result};

pub fn norm(e: &MilnorElement, k: &Field) -> Result<MilnorElement> {
    let l = e.field();
    if l == k {
        return Ok(e.clone());
    }
    let deg = l
        .degree_over(k)
        .ok_or_else(|| Error::NotExtension(l.descriptor(), k.descriptor()))?;
    match e.l() {
        0 => Ok(MilnorElement::new(k, 0, vec![(e.weight_zero_value() * deg as i64, vec![])])?),
        1 => {
            let terms = e
                .terms()
                .iter()
                .map(|(c, s)| Ok((*c, vec![l.norm_to(&s[0], k)?])))
                .collect::<Result<Vec<_>>>()?;
            MilnorElement::new(k, 1, terms)
        }
        w if k.is_finite() => Ok(MilnorElement::zero(k, w)),
        2 => {
            let base = l.base().unwrap().clone();
            let mut down = MilnorElement::zero(&base, 2);
            for (c, s) in e.terms() {
                down = down.add(&bass_tate(l, &s[0], &s[1])?.scale(*c))?;
            }
            norm(&down.collect(), k)
        }
        w => Err(Error::Unsupported(format!(
            "norm of weight {w} over a field of characteristic zero"
        ))),
    }
}

fn lift(base: &Field, a: &Elem) -> Poly {
    match a {
        Elem::Ext(c) => Poly::new(base, c.clone()),
        _ => unreachable!("element of a simple extension"),
    }
}

/// `N_{L/K} {a, b}` for a simple extension `L = K[t]/(m)`.
fn bass_tate(l: &Field, a: &Elem, b: &Elem) -> Result<MilnorElement> {
    let base = l.base().unwrap().clone();
    let m = l.modulus().unwrap();
    if m.degree() == Some(1) {
        let ra = l.restrict_to(&base, a).unwrap();
        let rb = l.restrict_to(&base, b).unwrap();
        return MilnorElement::symbol(&base, vec![ra, rb]);
    }
    let lift_a = RatFunc::from_poly(&base, lift(&base, a));
    let lift_b = RatFunc::from_poly(&base, lift(&base, b));
    let w = FunctionElement::symbol(&base, vec![lift_a, lift_b, RatFunc::from_poly(&base, m.clone())])?;
    let mut out = MilnorElement::zero(&base, 2);
    let here = Place::Finite(m);
    for v in support(&w)? {
        if v == here {
            continue;
        }
        let r = tame_symbol(&w, &v)?;
        let kv = r.field().clone();
        if kv == base {
            out = out.add(&r.scale(-1))?;
        } else {
            for (c, s) in r.terms() {
                out = out.add(&bass_tate(&kv, &s[0], &s[1])?.scale(-c))?;
            }
        }
    }
    Ok(out.collect())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::milnor::invariant;

    fn ext(base: &Field, m: &[i64], var: &str) -> Field {
        Field::extension(base, &Poly::from_ints(base, m), var).unwrap()
    }

    fn el(l: &Field, c: &[i64]) -> Elem {
        let b = l.base().unwrap();
        l.from_coords(&c.iter().map(|&x| b.from_int(x)).collect::<Vec<_>>(), b).unwrap()
    }

    #[test]
    fn two_and_i_has_zero_norm() {
        let q = Field::rational();
        let qi = ext(&q, &[1, 0, 1], "i");
        let e = MilnorElement::symbol(&qi, vec![qi.from_int(2), qi.generator().unwrap()]).unwrap();
        assert!(invariant(&norm(&e, &q).unwrap()).unwrap().is_zero());
    }

    #[test]
    fn projection_formula() {
        let q = Field::rational();
        let fields = [ext(&q, &[1, 0, 1], "i"), ext(&q, &[-2, 0, 1], "s"), ext(&q, &[-2, 0, 0, 1], "c")];
        for l in &fields {
            for a in [&[1, 2][..], &[3, -1], &[0, 1], &[2, 1, 1]] {
                let d = l.degree();
                let a: Vec<i64> = a.iter().copied().chain(std::iter::repeat(0)).take(d).collect();
                let a = el(l, &a);
                for c in [-1, 3, 5, 6] {
                    let e = MilnorElement::symbol(l, vec![a.clone(), l.from_int(c)]).unwrap();
                    let lhs = invariant(&norm(&e, &q).unwrap()).unwrap();
                    let na = l.norm_to(&a, &q).unwrap();
                    let rhs = MilnorElement::symbol(&q, vec![na, q.from_int(c)]).unwrap();
                    assert_eq!(lhs, invariant(&rhs).unwrap(), "{l} a={} c={c}", l.format_elem(&a));
                }
            }
        }
    }
}
