//! Trager's algorithm: factor over `L = K[a]/(m)` in characteristic zero by
//! factoring a norm over `K`.

use crate::algebra::field::Field;
use crate::algebra::matrix::Mat;
use crate::algebra::mpoly::MPoly;
use crate::algebra::poly::Poly;
use crate::algebra::ring::PolyRing;
use crate::error::Result;

pub(super) fn factor(l: &Field, p: &Poly) -> Result<Vec<(Poly, usize)>> {
    let mut out = Vec::new();
    for (part, mult) in super::yun(l, p) {
        for g in factor_squarefree(l, &part)? {
            out.push((g, mult));
        }
    }
    Ok(out)
}

/// `N_{L/K}(g)` for `g` in `L[x]`, as a polynomial in `K[x]`.
pub(crate) fn norm_poly(l: &Field, g: &Poly) -> Result<Poly> {
    let k = l.base().expect("norm of a polynomial over a non-extension").clone();
    let dim = l.degree();
    let ring = PolyRing::new(&k);
    let mut m = Mat::zeros(&ring, dim, dim);
    for (j, c) in g.coeffs().iter().enumerate() {
        let r = l.regular_representation(c, &k)?;
        for a in 0..dim {
            for b in 0..dim {
                let term = MPoly::monomial(&k, r.get(a, b).clone(), j as u32, 0);
                let v = m.get(a, b).add(&term, &k);
                m.set(a, b, v);
            }
        }
    }
    Ok(m.det(&ring).to_poly(&k).unwrap())
}

fn factor_squarefree(l: &Field, f: &Poly) -> Result<Vec<Poly>> {
    if f.degree() == Some(1) {
        return Ok(vec![f.monic(l)]);
    }
    let k = l.base().unwrap().clone();
    let a = l.generator().unwrap();
    for s in shifts() {
        let sa = l.mul(&l.from_int(s), &a);
        // g(x) = f(x - s a)
        let shift = Poly::new(l, vec![l.neg(&sa), l.one()]);
        let g = f.compose(&shift, l);
        let n = norm_poly(l, &g)?;
        if n.gcd(&n.derivative(&k), &k).degree() != Some(0) {
            continue;
        }
        let factors = super::factor_unchecked(&k, &n)?;
        if factors.len() == 1 {
            return Ok(vec![f.monic(l)]);
        }
        let back = Poly::new(l, vec![sa.clone(), l.one()]);
        let mut out = Vec::new();
        for (ni, _) in factors {
            let ni_l = ni.map_coeffs(l, |c| l.embed_base(c));
            let h = g.gcd(&ni_l, l);
            if h.degree().unwrap_or(0) > 0 {
                out.push(h.compose(&back, l).monic(l));
            }
        }
        return Ok(out);
    }
    unreachable!("some shift always gives a square-free norm")
}

/// `0, 1, -1, 2, -2, ...`
fn shifts() -> impl Iterator<Item = i64> {
    (0..).map(|i: i64| if i % 2 == 0 { -(i / 2) } else { i / 2 + 1 })
}
