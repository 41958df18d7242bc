//! Dense univariate polynomials over a [`Field`].

use std::cmp::Ordering;

use num_bigint::BigUint;
use num_traits::Signed;

use super::field::{Elem, Field};

/// Coefficients low to high; the leading coefficient is nonzero unless the
/// polynomial is zero (empty vector).
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Poly {
    coeffs: Vec<Elem>,
}

impl PartialOrd for Poly {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

/// Degree first, then coefficients from the top down.
impl Ord for Poly {
    fn cmp(&self, other: &Self) -> Ordering {
        self.coeffs
            .len()
            .cmp(&other.coeffs.len())
            .then_with(|| self.coeffs.iter().rev().cmp(other.coeffs.iter().rev()))
    }
}

impl Poly {
    pub fn new(f: &Field, mut coeffs: Vec<Elem>) -> Poly {
        while coeffs.last().is_some_and(|c| f.is_zero(c)) {
            coeffs.pop();
        }
        Poly { coeffs }
    }

    pub(crate) fn from_trimmed(coeffs: Vec<Elem>) -> Poly {
        Poly { coeffs }
    }

    pub fn zero() -> Poly {
        Poly { coeffs: vec![] }
    }

    pub fn one(f: &Field) -> Poly {
        Poly { coeffs: vec![f.one()] }
    }

    pub fn constant(f: &Field, c: Elem) -> Poly {
        Poly::new(f, vec![c])
    }

    pub fn x(f: &Field) -> Poly {
        Poly { coeffs: vec![f.zero(), f.one()] }
    }

    pub fn monomial(f: &Field, c: Elem, deg: usize) -> Poly {
        let mut v = vec![f.zero(); deg + 1];
        v[deg] = c;
        Poly::new(f, v)
    }

    /// `x - a`
    pub fn linear(f: &Field, a: &Elem) -> Poly {
        Poly { coeffs: vec![f.neg(a), f.one()] }
    }

    /// Integer coefficients, low to high.
    pub fn from_ints(f: &Field, c: &[i64]) -> Poly {
        Poly::new(f, c.iter().map(|&n| f.from_int(n)).collect())
    }

    pub fn coeffs(&self) -> &[Elem] {
        &self.coeffs
    }

    pub fn into_coeffs(self) -> Vec<Elem> {
        self.coeffs
    }

    pub fn coeff(&self, f: &Field, i: usize) -> Elem {
        self.coeffs.get(i).cloned().unwrap_or_else(|| f.zero())
    }

    /// Coefficients padded with zeros to exactly `n` entries (`n > degree`).
    pub fn padded(&self, f: &Field, n: usize) -> Vec<Elem> {
        let mut v = self.coeffs.clone();
        v.resize(n, f.zero());
        v
    }

    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn is_constant(&self) -> bool {
        self.coeffs.len() <= 1
    }

    /// Leading coefficient; panics on the zero polynomial.
    pub fn lc(&self) -> &Elem {
        self.coeffs.last().expect("leading coefficient of zero polynomial")
    }

    pub fn is_monic(&self, f: &Field) -> bool {
        !self.is_zero() && f.is_one(self.lc())
    }

    pub fn monic(&self, f: &Field) -> Poly {
        if self.is_zero() {
            return Poly::zero();
        }
        let inv = f.inv(self.lc()).unwrap();
        self.scale(&inv, f)
    }

    pub fn add(&self, o: &Poly, f: &Field) -> Poly {
        let n = self.coeffs.len().max(o.coeffs.len());
        let v = (0..n)
            .map(|i| match (self.coeffs.get(i), o.coeffs.get(i)) {
                (Some(a), Some(b)) => f.add(a, b),
                (Some(a), None) => a.clone(),
                (None, Some(b)) => b.clone(),
                (None, None) => unreachable!(),
            })
            .collect();
        Poly::new(f, v)
    }

    pub fn neg(&self, f: &Field) -> Poly {
        Poly { coeffs: self.coeffs.iter().map(|c| f.neg(c)).collect() }
    }

    pub fn sub(&self, o: &Poly, f: &Field) -> Poly {
        self.add(&o.neg(f), f)
    }

    pub fn mul(&self, o: &Poly, f: &Field) -> Poly {
        if self.is_zero() || o.is_zero() {
            return Poly::zero();
        }
        let mut v = vec![f.zero(); self.coeffs.len() + o.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if f.is_zero(a) {
                continue;
            }
            for (j, b) in o.coeffs.iter().enumerate() {
                v[i + j] = f.add(&v[i + j], &f.mul(a, b));
            }
        }
        Poly::new(f, v)
    }

    pub fn scale(&self, c: &Elem, f: &Field) -> Poly {
        Poly::new(f, self.coeffs.iter().map(|a| f.mul(a, c)).collect())
    }

    /// Multiply by `x^k`.
    pub fn shift(&self, k: usize, f: &Field) -> Poly {
        if self.is_zero() {
            return Poly::zero();
        }
        let mut v = vec![f.zero(); k];
        v.extend(self.coeffs.iter().cloned());
        Poly { coeffs: v }
    }

    pub fn pow(&self, e: usize, f: &Field) -> Poly {
        let mut r = Poly::one(f);
        for _ in 0..e {
            r = r.mul(self, f);
        }
        r
    }

    /// Euclidean division; panics if `d` is zero.
    pub fn div_rem(&self, d: &Poly, f: &Field) -> (Poly, Poly) {
        let dd = d.degree().expect("division by zero polynomial");
        let inv = f.inv(d.lc()).unwrap();
        let mut r = self.coeffs.clone();
        if r.len() <= dd {
            return (Poly::zero(), self.clone());
        }
        let mut q = vec![f.zero(); r.len() - dd];
        for k in (0..q.len()).rev() {
            let c = f.mul(&r[k + dd], &inv);
            if !f.is_zero(&c) {
                for (j, dc) in d.coeffs.iter().enumerate() {
                    r[k + j] = f.sub(&r[k + j], &f.mul(&c, dc));
                }
            }
            q[k] = c;
        }
        r.truncate(dd);
        (Poly::new(f, q), Poly::new(f, r))
    }

    pub fn rem(&self, d: &Poly, f: &Field) -> Poly {
        self.div_rem(d, f).1
    }

    pub fn quo(&self, d: &Poly, f: &Field) -> Poly {
        self.div_rem(d, f).0
    }

    /// Exact division; `None` if `d` does not divide `self`.
    pub fn div_exact(&self, d: &Poly, f: &Field) -> Option<Poly> {
        let (q, r) = self.div_rem(d, f);
        r.is_zero().then_some(q)
    }

    /// Monic gcd (zero if both inputs are zero).
    pub fn gcd(&self, o: &Poly, f: &Field) -> Poly {
        let mut a = self.clone();
        let mut b = o.clone();
        while !b.is_zero() {
            let r = a.rem(&b, f);
            a = b;
            b = r;
        }
        a.monic(f)
    }

    /// `(g, s, t)` with `s*self + t*o = g`, `g` monic (unless both are zero).
    pub fn ext_gcd(&self, o: &Poly, f: &Field) -> (Poly, Poly, Poly) {
        let (mut r0, mut r1) = (self.clone(), o.clone());
        let (mut s0, mut s1) = (Poly::one(f), Poly::zero());
        let (mut t0, mut t1) = (Poly::zero(), Poly::one(f));
        while !r1.is_zero() {
            let (q, r) = r0.div_rem(&r1, f);
            r0 = std::mem::replace(&mut r1, r);
            let s = s0.sub(&q.mul(&s1, f), f);
            s0 = std::mem::replace(&mut s1, s);
            let t = t0.sub(&q.mul(&t1, f), f);
            t0 = std::mem::replace(&mut t1, t);
        }
        if r0.is_zero() {
            return (r0, s0, t0);
        }
        let inv = f.inv(r0.lc()).unwrap();
        (r0.scale(&inv, f), s0.scale(&inv, f), t0.scale(&inv, f))
    }

    pub fn eval(&self, x: &Elem, f: &Field) -> Elem {
        let mut acc = f.zero();
        for c in self.coeffs.iter().rev() {
            acc = f.add(&f.mul(&acc, x), c);
        }
        acc
    }

    pub fn derivative(&self, f: &Field) -> Poly {
        let v = self
            .coeffs
            .iter()
            .enumerate()
            .skip(1)
            .map(|(i, c)| f.mul(c, &f.from_int(i as i64)))
            .collect();
        Poly::new(f, v)
    }

    /// `self(g)`
    pub fn compose(&self, g: &Poly, f: &Field) -> Poly {
        let mut acc = Poly::zero();
        for c in self.coeffs.iter().rev() {
            acc = acc.mul(g, f).add(&Poly::constant(f, c.clone()), f);
        }
        acc
    }

    /// `self^e mod m`
    pub fn powmod(&self, e: &BigUint, m: &Poly, f: &Field) -> Poly {
        let base = self.rem(m, f);
        let mut r = Poly::one(f).rem(m, f);
        for i in (0..e.bits()).rev() {
            r = r.mul(&r, f).rem(m, f);
            if e.bit(i) {
                r = r.mul(&base, f).rem(m, f);
            }
        }
        r
    }

    /// Apply `g` to every coefficient, retrimming in the target field.
    pub fn map_coeffs(&self, target: &Field, g: impl Fn(&Elem) -> Elem) -> Poly {
        Poly::new(target, self.coeffs.iter().map(g).collect())
    }

    /// Text form, highest degree first, e.g. `x^2-3*x+1`.
    pub fn format(&self, f: &Field, var: &str) -> String {
        if self.is_zero() {
            return "0".into();
        }
        let mut out = String::new();
        for (i, c) in self.coeffs.iter().enumerate().rev() {
            if f.is_zero(c) {
                continue;
            }
            let (neg, mag) = split_sign(f, c);
            let mono = match i {
                0 => String::new(),
                1 => var.to_string(),
                _ => format!("{var}^{i}"),
            };
            let coef = if i > 0 && f.is_one(&mag) {
                String::new()
            } else if f.is_compound(&mag) {
                format!("({})", f.format_elem(&mag))
            } else {
                f.format_elem(&mag)
            };
            if neg {
                out.push('-');
            } else if !out.is_empty() {
                out.push('+');
            }
            match (coef.is_empty(), mono.is_empty()) {
                (true, _) => out.push_str(&mono),
                (false, true) => out.push_str(&coef),
                (false, false) => {
                    out.push_str(&coef);
                    out.push('*');
                    out.push_str(&mono);
                }
            }
        }
        out
    }
}

/// Split a rational coefficient into sign and magnitude; other fields carry
/// no sign.
pub(crate) fn split_sign(f: &Field, c: &Elem) -> (bool, Elem) {
    match c {
        Elem::Q(q) if q.is_negative() => (true, f.neg(c)),
        _ => (false, c.clone()),
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn division_and_gcd() {
        let q = Field::rational();
        let a = Poly::from_ints(&q, &[-1, 0, 1]); // x^2-1
        let b = Poly::from_ints(&q, &[1, 1]); // x+1
        let (qq, r) = a.div_rem(&b, &q);
        assert!(r.is_zero());
        assert_eq!(qq, Poly::from_ints(&q, &[-1, 1]));
        let c = Poly::from_ints(&q, &[2, 3, 1]); // (x+1)(x+2)
        assert_eq!(a.gcd(&c, &q), b);
        let (g, s, t) = a.ext_gcd(&c, &q);
        assert_eq!(s.mul(&a, &q).add(&t.mul(&c, &q), &q), g);
    }

    #[test]
    fn formatting() {
        let q = Field::rational();
        assert_eq!(Poly::from_ints(&q, &[1, -3, 1]).format(&q, "x"), "x^2-3*x+1");
        assert_eq!(Poly::from_ints(&q, &[-1, 0, 0, 3]).format(&q, "t"), "3*t^3-1");
        let f5 = Field::prime(5).unwrap();
        assert_eq!(Poly::from_ints(&f5, &[-1, 1]).format(&f5, "x"), "x+4");
    }

    #[test]
    fn ordering_is_by_degree_first() {
        let q = Field::rational();
        let a = Poly::from_ints(&q, &[5, 1]);
        let b = Poly::from_ints(&q, &[0, 0, 1]);
        assert!(a < b);
    }
}
