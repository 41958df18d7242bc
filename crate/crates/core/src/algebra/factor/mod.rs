//! Factorization of univariate polynomials into monic irreducibles.
//!
//! * finite fields (any tower over `F_p`): square-free, distinct-degree and
//!   equal-degree splitting;
//! * `Q`: square-free decomposition, then factorization modulo a good prime,
//!   Hensel lifting and subset recombination;
//! * towers over `Q`: Trager's norm method.

mod finite;
mod rational;
mod trager;

use super::field::{Elem, Field};
use super::poly::Poly;
use crate::error::{Error, Result};

pub const RATIONAL_DEGREE_LIMIT: usize = 8;
pub const FINITE_DEGREE_LIMIT: usize = 64;

/// Internal factorizations (norms in Trager's method) may exceed the public
/// cap; this bounds them.
const INTERNAL_DEGREE_LIMIT: usize = 64;

/// The public degree cap for `f`, honouring `MOTSYM_DEGREE_LIMIT`.
pub fn degree_limit(f: &Field) -> usize {
    if let Some(n) = std::env::var("MOTSYM_DEGREE_LIMIT")
        .ok()
        .and_then(|s| s.trim().parse::<usize>().ok())
    {
        return n;
    }
    if f.is_finite() {
        FINITE_DEGREE_LIMIT
    } else {
        RATIONAL_DEGREE_LIMIT
    }
}

/// Monic irreducible factors with multiplicities, sorted canonically. The
/// product of `factor^mult` equals `p` up to its leading coefficient.
pub fn factor(f: &Field, p: &Poly) -> Result<Vec<(Poly, usize)>> {
    let deg = p.degree().ok_or(Error::ZeroPolynomial)?;
    let limit = degree_limit(f);
    if deg > limit {
        return Err(Error::DegreeLimit { degree: deg, limit });
    }
    factor_unchecked(f, p)
}

pub(crate) fn factor_unchecked(f: &Field, p: &Poly) -> Result<Vec<(Poly, usize)>> {
    let deg = p.degree().ok_or(Error::ZeroPolynomial)?;
    if deg > INTERNAL_DEGREE_LIMIT {
        return Err(Error::DegreeLimit { degree: deg, limit: INTERNAL_DEGREE_LIMIT });
    }
    if deg == 0 {
        return Ok(vec![]);
    }
    let p = p.monic(f);
    let mut out = if f.is_finite() {
        finite::factor(f, &p)
    } else if f.is_rational() {
        rational::factor(&p)
    } else {
        trager::factor(f, &p)?
    };
    out.sort();
    Ok(out)
}

pub fn is_irreducible(f: &Field, p: &Poly) -> Result<bool> {
    let fac = factor(f, p)?;
    Ok(fac.len() == 1 && fac[0].1 == 1)
}

/// Roots in `f`, with multiplicity, sorted.
pub fn roots(f: &Field, p: &Poly) -> Result<Vec<(Elem, usize)>> {
    Ok(factor(f, p)?
        .into_iter()
        .filter(|(g, _)| g.degree() == Some(1))
        .map(|(g, m)| (f.neg(&g.coeffs()[0]), m))
        .collect())
}

/// Square-free decomposition in characteristic zero (Yun): pairs
/// `(a_i, i)` with `p = lc * prod a_i^i`, each `a_i` monic square-free.
pub(crate) fn yun(f: &Field, p: &Poly) -> Vec<(Poly, usize)> {
    let p = p.monic(f);
    let dp = p.derivative(f);
    let a0 = p.gcd(&dp, f);
    let mut b = p.quo(&a0, f);
    let c = dp.quo(&a0, f);
    let mut d = c.sub(&b.derivative(f), f);
    let mut out = Vec::new();
    let mut i = 1;
    while b.degree().unwrap_or(0) > 0 {
        let a = b.gcd(&d, f);
        b = b.quo(&a, f);
        let c = d.quo(&a, f);
        d = c.sub(&b.derivative(f), f);
        if a.degree().unwrap_or(0) > 0 {
            out.push((a, i));
        }
        i += 1;
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    fn product(f: &Field, fac: &[(Poly, usize)]) -> Poly {
        fac.iter().fold(Poly::one(f), |acc, (g, m)| acc.mul(&g.pow(*m, f), f))
    }

    #[test]
    fn x2_plus_1_over_f5() {
        let f = Field::prime(5).unwrap();
        let p = Poly::from_ints(&f, &[1, 0, 1]);
        let fac = factor(&f, &p).unwrap();
        assert_eq!(
            fac,
            vec![(Poly::from_ints(&f, &[2, 1]), 1), (Poly::from_ints(&f, &[3, 1]), 1)]
        );
    }

    #[test]
    fn rational_examples() {
        let q = Field::rational();
        let p = Poly::from_ints(&q, &[-3, 1]);
        assert_eq!(factor(&q, &p).unwrap(), vec![(p.clone(), 1)]);
        let p = Poly::from_ints(&q, &[-4, 1]).mul(&Poly::from_ints(&q, &[-3, 0, 1]), &q);
        assert_eq!(
            factor(&q, &p).unwrap(),
            vec![(Poly::from_ints(&q, &[-4, 1]), 1), (Poly::from_ints(&q, &[-3, 0, 1]), 1)]
        );
    }

    #[test]
    fn multiplicities_over_q() {
        let q = Field::rational();
        let a = Poly::from_ints(&q, &[1, 1]);
        let b = Poly::from_ints(&q, &[2, 0, 1]);
        let p = a.pow(3, &q).mul(&b.pow(2, &q), &q).scale(&q.from_int(-6), &q);
        let fac = factor(&q, &p).unwrap();
        assert_eq!(fac, vec![(a, 3), (b, 2)]);
    }

    #[test]
    fn swinnerton_dyer_like_quartic() {
        // x^4 - 10x^2 + 1 is irreducible over Q but splits mod every prime
        let q = Field::rational();
        let p = Poly::from_ints(&q, &[1, 0, -10, 0, 1]);
        assert!(is_irreducible(&q, &p).unwrap());
    }

    #[test]
    fn multiplicity_p_over_finite_field() {
        let f = Field::prime(3).unwrap();
        let a = Poly::from_ints(&f, &[1, 1]);
        let b = Poly::from_ints(&f, &[1, 0, 1]);
        let p = a.pow(3, &f).mul(&b.pow(4, &f), &f);
        let fac = factor(&f, &p).unwrap();
        assert_eq!(product(&f, &fac), p);
        assert_eq!(fac.len(), 2);
    }

    #[test]
    fn over_gaussian_rationals() {
        let q = Field::rational();
        let l = Field::extension(&q, &Poly::from_ints(&q, &[1, 0, 1]), "i").unwrap();
        let p = Poly::new(&l, vec![l.one(), l.zero(), l.one()]);
        let fac = factor(&l, &p).unwrap();
        assert_eq!(fac.len(), 2);
        assert_eq!(product(&l, &fac), p);
        let p2 = Poly::new(&l, vec![l.from_int(-2), l.zero(), l.one()]);
        assert!(is_irreducible(&l, &p2).unwrap());
    }

    #[test]
    fn degree_limit_enforced() {
        let q = Field::rational();
        let p = Poly::monomial(&q, q.one(), 9).add(&Poly::one(&q), &q);
        assert!(matches!(factor(&q, &p), Err(Error::DegreeLimit { .. })));
        assert_eq!(factor(&q, &Poly::zero()), Err(Error::ZeroPolynomial));
    }
}
