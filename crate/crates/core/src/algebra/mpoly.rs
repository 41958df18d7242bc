//! Sparse polynomials in at most two variables over a [`Field`].
//!
//! These model the coordinate rings `k[t]` (one variable) and `k[x, y]` (two
//! variables). A monomial is keyed by its exponent pair; in one-variable use
//! the second exponent is always zero.

use std::collections::BTreeMap;

use super::field::{Elem, Field};
use super::poly::{split_sign, Poly};

#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Default)]
pub struct MPoly {
    terms: BTreeMap<(u32, u32), Elem>,
}

impl MPoly {
    pub fn zero() -> MPoly {
        MPoly::default()
    }

    pub fn constant(f: &Field, c: Elem) -> MPoly {
        MPoly::monomial(f, c, 0, 0)
    }

    pub fn from_int(f: &Field, n: i64) -> MPoly {
        MPoly::constant(f, f.from_int(n))
    }

    pub fn one(f: &Field) -> MPoly {
        MPoly::constant(f, f.one())
    }

    pub fn monomial(f: &Field, c: Elem, e0: u32, e1: u32) -> MPoly {
        let mut terms = BTreeMap::new();
        if !f.is_zero(&c) {
            terms.insert((e0, e1), c);
        }
        MPoly { terms }
    }

    /// The first variable (`t`, or `x` in two variables).
    pub fn var0(f: &Field) -> MPoly {
        MPoly::monomial(f, f.one(), 1, 0)
    }

    /// The second variable (`y`).
    pub fn var1(f: &Field) -> MPoly {
        MPoly::monomial(f, f.one(), 0, 1)
    }

    /// Embed a univariate polynomial in the first variable.
    pub fn from_poly(f: &Field, p: &Poly) -> MPoly {
        let mut terms = BTreeMap::new();
        for (i, c) in p.coeffs().iter().enumerate() {
            if !f.is_zero(c) {
                terms.insert((i as u32, 0), c.clone());
            }
        }
        MPoly { terms }
    }

    /// View as a univariate polynomial in the first variable; `None` if the
    /// second variable occurs.
    pub fn to_poly(&self, f: &Field) -> Option<Poly> {
        let deg = self.degree_in(0);
        let mut v = vec![f.zero(); deg as usize + 1];
        for (&(a, b), c) in &self.terms {
            if b != 0 {
                return None;
            }
            v[a as usize] = c.clone();
        }
        Some(Poly::new(f, v))
    }

    pub fn terms(&self) -> &BTreeMap<(u32, u32), Elem> {
        &self.terms
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_constant(&self) -> bool {
        self.terms.keys().all(|&k| k == (0, 0))
    }

    /// The constant term (zero if absent).
    pub fn constant_term(&self, f: &Field) -> Elem {
        self.terms.get(&(0, 0)).cloned().unwrap_or_else(|| f.zero())
    }

    /// The value when constant.
    pub fn as_constant(&self, f: &Field) -> Option<Elem> {
        self.is_constant().then(|| self.constant_term(f))
    }

    pub fn degree_in(&self, var: usize) -> u32 {
        self.terms
            .keys()
            .map(|&(a, b)| if var == 0 { a } else { b })
            .max()
            .unwrap_or(0)
    }

    pub fn total_degree(&self) -> u32 {
        self.terms.keys().map(|&(a, b)| a + b).max().unwrap_or(0)
    }

    pub fn uses_var(&self, var: usize) -> bool {
        self.degree_in(var) > 0
    }

    pub fn add(&self, o: &MPoly, f: &Field) -> MPoly {
        let mut terms = self.terms.clone();
        for (k, c) in &o.terms {
            let s = match terms.get(k) {
                Some(a) => f.add(a, c),
                None => c.clone(),
            };
            if f.is_zero(&s) {
                terms.remove(k);
            } else {
                terms.insert(*k, s);
            }
        }
        MPoly { terms }
    }

    pub fn neg(&self, f: &Field) -> MPoly {
        MPoly { terms: self.terms.iter().map(|(k, c)| (*k, f.neg(c))).collect() }
    }

    pub fn sub(&self, o: &MPoly, f: &Field) -> MPoly {
        self.add(&o.neg(f), f)
    }

    pub fn mul(&self, o: &MPoly, f: &Field) -> MPoly {
        let mut terms: BTreeMap<(u32, u32), Elem> = BTreeMap::new();
        for (&(a, b), c) in &self.terms {
            for (&(x, y), d) in &o.terms {
                let k = (a + x, b + y);
                let p = f.mul(c, d);
                let s = match terms.get(&k) {
                    Some(e) => f.add(e, &p),
                    None => p,
                };
                terms.insert(k, s);
            }
        }
        terms.retain(|_, c| !f.is_zero(c));
        MPoly { terms }
    }

    pub fn scale(&self, c: &Elem, f: &Field) -> MPoly {
        let mut terms: BTreeMap<_, _> =
            self.terms.iter().map(|(k, v)| (*k, f.mul(v, c))).collect();
        terms.retain(|_, v| !f.is_zero(v));
        MPoly { terms }
    }

    pub fn pow(&self, e: u32, f: &Field) -> MPoly {
        let mut r = MPoly::one(f);
        for _ in 0..e {
            r = r.mul(self, f);
        }
        r
    }

    /// Substitute `var0 := s0`, `var1 := s1`.
    pub fn substitute(&self, s0: &MPoly, s1: &MPoly, f: &Field) -> MPoly {
        let mut acc = MPoly::zero();
        let mut pow0: Vec<MPoly> = vec![MPoly::one(f)];
        let mut pow1: Vec<MPoly> = vec![MPoly::one(f)];
        for (&(a, b), c) in &self.terms {
            while pow0.len() <= a as usize {
                let next = pow0.last().unwrap().mul(s0, f);
                pow0.push(next);
            }
            while pow1.len() <= b as usize {
                let next = pow1.last().unwrap().mul(s1, f);
                pow1.push(next);
            }
            let term = pow0[a as usize].mul(&pow1[b as usize], f).scale(c, f);
            acc = acc.add(&term, f);
        }
        acc
    }

    /// Evaluate at a point.
    pub fn eval(&self, x0: &Elem, x1: &Elem, f: &Field) -> Elem {
        let mut acc = f.zero();
        for (&(a, b), c) in &self.terms {
            let m = f.mul(
                &f.pow(x0, a as i64).unwrap_or_else(|| f.zero()),
                &f.pow(x1, b as i64).unwrap_or_else(|| f.zero()),
            );
            acc = f.add(&acc, &f.mul(c, &m));
        }
        acc
    }

    /// Apply `g` to every coefficient, moving to another field.
    pub fn map_coeffs(&self, target: &Field, g: impl Fn(&Elem) -> Elem) -> MPoly {
        let mut terms: BTreeMap<_, _> = self.terms.iter().map(|(k, v)| (*k, g(v))).collect();
        terms.retain(|_, v| !target.is_zero(v));
        MPoly { terms }
    }

    /// Text form with the given variable names, highest total degree first.
    pub fn format(&self, f: &Field, vars: &[&str]) -> String {
        if self.is_zero() {
            return "0".into();
        }
        let mut keys: Vec<_> = self.terms.keys().copied().collect();
        keys.sort_by(|p, q| (q.0 + q.1).cmp(&(p.0 + p.1)).then(q.cmp(p)));
        let mut out = String::new();
        for k in keys {
            let c = &self.terms[&k];
            let (neg, mag) = split_sign(f, c);
            let mut mono = Vec::new();
            for (i, e) in [k.0, k.1].into_iter().enumerate() {
                let name = vars.get(i).copied().unwrap_or(if i == 0 { "t" } else { "y" });
                match e {
                    0 => {}
                    1 => mono.push(name.to_string()),
                    _ => mono.push(format!("{name}^{e}")),
                }
            }
            let mono = mono.join("*");
            let coef = if !mono.is_empty() && f.is_one(&mag) {
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

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn substitution_of_faces() {
        let q = Field::rational();
        let x = MPoly::var0(&q);
        let y = MPoly::var1(&q);
        // x*y + 2
        let p = x.mul(&y, &q).add(&MPoly::from_int(&q, 2), &q);
        let t = MPoly::var0(&q);
        let one_minus_t = MPoly::one(&q).sub(&t, &q);
        let r = p.substitute(&one_minus_t, &t, &q);
        // (1-t)t + 2 = -t^2 + t + 2
        assert_eq!(r.format(&q, &["t"]), "-t^2+t+2");
        assert_eq!(p.format(&q, &["x", "y"]), "x*y+2");
    }

    #[test]
    fn poly_round_trip() {
        let q = Field::rational();
        let p = Poly::from_ints(&q, &[1, 0, -3]);
        assert_eq!(MPoly::from_poly(&q, &p).to_poly(&q).unwrap(), p);
    }
}
