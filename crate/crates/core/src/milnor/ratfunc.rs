//! Rational functions in one variable and the places of `k(t)`.

use crate::algebra::factor::factor;
use crate::algebra::{Elem, Field, Poly};
use crate::error::{Error, Result};

/// `num / den` with `gcd(num, den) = 1`, `den` monic; zero is `0/1`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct RatFunc {
    num: Poly,
    den: Poly,
}

impl RatFunc {
    pub fn new(k: &Field, num: Poly, den: Poly) -> Result<RatFunc> {
        if den.is_zero() {
            return Err(Error::Parse("zero denominator".into()));
        }
        if num.is_zero() {
            return Ok(RatFunc { num, den: Poly::one(k) });
        }
        let g = num.gcd(&den, k);
        let num = num.quo(&g, k);
        let den = den.quo(&g, k);
        let inv = k.inv(den.lc()).unwrap();
        Ok(RatFunc { num: num.scale(&inv, k), den: den.scale(&inv, k) })
    }

    pub fn from_poly(k: &Field, p: Poly) -> RatFunc {
        RatFunc { num: p, den: Poly::one(k) }
    }

    pub fn constant(k: &Field, c: Elem) -> RatFunc {
        RatFunc::from_poly(k, Poly::constant(k, c))
    }

    pub fn num(&self) -> &Poly {
        &self.num
    }

    pub fn den(&self) -> &Poly {
        &self.den
    }

    pub fn is_zero(&self) -> bool {
        self.num.is_zero()
    }

    pub fn is_one(&self, k: &Field) -> bool {
        self.den.degree() == Some(0) && self.num == Poly::one(k)
    }

    pub fn mul(&self, o: &RatFunc, k: &Field) -> RatFunc {
        RatFunc::new(k, self.num.mul(&o.num, k), self.den.mul(&o.den, k)).unwrap()
    }

    pub fn inv(&self, k: &Field) -> Result<RatFunc> {
        RatFunc::new(k, self.den.clone(), self.num.clone())
    }

    pub fn neg(&self, k: &Field) -> RatFunc {
        RatFunc { num: self.num.neg(k), den: self.den.clone() }
    }

    pub fn add(&self, o: &RatFunc, k: &Field) -> RatFunc {
        let n = self.num.mul(&o.den, k).add(&o.num.mul(&self.den, k), k);
        RatFunc::new(k, n, self.den.mul(&o.den, k)).unwrap()
    }

    pub fn sub(&self, o: &RatFunc, k: &Field) -> RatFunc {
        self.add(&o.neg(k), k)
    }

    pub fn pow(&self, e: i64, k: &Field) -> Result<RatFunc> {
        let base = if e < 0 { self.inv(k)? } else { self.clone() };
        let m = e.unsigned_abs() as usize;
        Ok(RatFunc { num: base.num.pow(m, k), den: base.den.pow(m, k) })
    }

    /// Valuation at a place.
    pub fn valuation(&self, v: &Place, k: &Field) -> i64 {
        match v {
            Place::Infinity => self.den.degree().unwrap() as i64 - self.num.degree().unwrap() as i64,
            Place::Finite(pi) => poly_valuation(&self.num, pi, k) - poly_valuation(&self.den, pi, k),
        }
    }

    /// Residue in `k_v` of the unit part `self * π^(-v(self))`.
    pub fn unit_residue(&self, v: &Place, k: &Field) -> Elem {
        match v {
            Place::Infinity => k.div(self.num.lc(), self.den.lc()).unwrap(),
            Place::Finite(pi) => {
                let kv = v.residue_field(k);
                let n = strip(&self.num, pi, k);
                let d = strip(&self.den, pi, k);
                let rn = reduce(&n, pi, k);
                let rd = reduce(&d, pi, k);
                kv.div(&rn, &rd).unwrap()
            }
        }
    }

    /// Monic irreducible factors of numerator and denominator.
    pub fn support(&self, k: &Field) -> Result<Vec<Poly>> {
        let mut out = Vec::new();
        for p in [&self.num, &self.den] {
            if p.degree().unwrap_or(0) > 0 {
                for (g, _) in factor(k, p)? {
                    out.push(g);
                }
            }
        }
        Ok(out)
    }

    pub fn format(&self, k: &Field) -> String {
        let n = self.num.format(k, "t");
        if self.den.degree() == Some(0) {
            return n;
        }
        let d = self.den.format(k, "t");
        let wrap = |s: String, p: &Poly| {
            if p.coeffs().iter().filter(|c| !k.is_zero(c)).count() > 1 {
                format!("({s})")
            } else {
                s
            }
        };
        format!("{}/{}", wrap(n, &self.num), wrap(d, &self.den))
    }
}

fn poly_valuation(p: &Poly, pi: &Poly, k: &Field) -> i64 {
    let mut v = 0;
    let mut cur = p.clone();
    while let Some(q) = cur.div_exact(pi, k) {
        cur = q;
        v += 1;
    }
    v
}

fn strip(p: &Poly, pi: &Poly, k: &Field) -> Poly {
    let mut cur = p.clone();
    while let Some(q) = cur.div_exact(pi, k) {
        cur = q;
    }
    cur
}

/// Image of `p` in `k[t]/(π)`.
fn reduce(p: &Poly, pi: &Poly, k: &Field) -> Elem {
    let r = p.rem(pi, k);
    if pi.degree() == Some(1) {
        r.coeff(k, 0)
    } else {
        Elem::Ext(r.padded(k, pi.degree().unwrap()))
    }
}

/// A place of `k(t)` trivial on `k`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Place {
    /// The place of a monic irreducible polynomial.
    Finite(Poly),
    /// `v_∞`, with `v_∞(t) = -1`.
    Infinity,
}

impl Place {
    /// `k_v = k[t]/(π)`, which is `k` itself for linear `π` and at infinity.
    pub fn residue_field(&self, k: &Field) -> Field {
        match self {
            Place::Finite(pi) if pi.degree() != Some(1) => Field::extension_unchecked(k, pi, "t"),
            _ => k.clone(),
        }
    }

    pub fn format(&self, k: &Field) -> String {
        match self {
            Place::Infinity => "inf".into(),
            Place::Finite(pi) => pi.format(k, "t"),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn valuations_and_residues() {
        let q = Field::rational();
        // (t^2 - 2) / t
        let r = RatFunc::new(&q, Poly::from_ints(&q, &[-2, 0, 1]), Poly::from_ints(&q, &[0, 1])).unwrap();
        let at_t = Place::Finite(Poly::from_ints(&q, &[0, 1]));
        assert_eq!(r.valuation(&at_t, &q), -1);
        assert_eq!(r.unit_residue(&at_t, &q), q.from_int(-2));
        assert_eq!(r.valuation(&Place::Infinity, &q), -1);
        assert_eq!(r.unit_residue(&Place::Infinity, &q), q.one());
        let pi = Poly::from_ints(&q, &[-2, 0, 1]);
        let v = Place::Finite(pi);
        assert_eq!(r.valuation(&v, &q), 1);
        // residue of 1/t in Q(sqrt 2) is t̄/2
        let kv = v.residue_field(&q);
        let res = r.unit_residue(&v, &q);
        assert_eq!(kv.mul(&res, &kv.generator().unwrap()), kv.one());
        assert_eq!(r.format(&q), "(t^2-2)/t");
    }
}
