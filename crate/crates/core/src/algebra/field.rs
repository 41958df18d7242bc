//! Exact fields: prime fields `F_p`, the rationals, and explicit towers of
//! simple extensions `K[x]/(f)`.
//!
//! A [`Field`] is a cheap, shareable handle; field elements ([`Elem`]) carry no
//! reference to their field, so every operation goes through the field that
//! owns them. Representations are canonical: two elements are equal exactly
//! when their representations are equal.

use std::cmp::Ordering;
use std::fmt;
use std::hash::{Hash, Hasher};
use std::sync::Arc;

use num_bigint::{BigInt, BigUint};
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};
use rand::Rng;

use super::matrix::Mat;
use super::poly::Poly;
use crate::error::{Error, Result};

/// An element of some [`Field`].
///
/// * `Fp(r)`: least nonnegative residue modulo `p`.
/// * `Q(q)`: always-reduced fraction.
/// * `Ext(c)`: coefficient vector of length `[L:K]` in the power basis of the
///   generator, coefficients in the immediate base field.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Elem {
    Fp(u64),
    Q(BigRational),
    Ext(Vec<Elem>),
}

#[derive(Debug)]
pub enum FieldKind {
    Rational,
    Prime(u64),
    Extension {
        base: Field,
        /// Monic modulus, coefficients low to high, length `degree + 1`.
        modulus: Vec<Elem>,
        var: String,
    },
}

#[derive(Clone)]
pub struct Field(Arc<FieldKind>);

impl fmt::Debug for Field {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.descriptor())
    }
}

impl fmt::Display for Field {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.descriptor())
    }
}

fn kind_rank(k: &FieldKind) -> u8 {
    match k {
        FieldKind::Rational => 0,
        FieldKind::Prime(_) => 1,
        FieldKind::Extension { .. } => 2,
    }
}

// Equality is structural on (base, modulus); the generator name is cosmetic.
impl PartialEq for Field {
    fn eq(&self, other: &Self) -> bool {
        self.cmp(other) == Ordering::Equal
    }
}
impl Eq for Field {}

impl PartialOrd for Field {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl Ord for Field {
    fn cmp(&self, other: &Self) -> Ordering {
        if Arc::ptr_eq(&self.0, &other.0) {
            return Ordering::Equal;
        }
        match (&*self.0, &*other.0) {
            (FieldKind::Rational, FieldKind::Rational) => Ordering::Equal,
            (FieldKind::Prime(a), FieldKind::Prime(b)) => a.cmp(b),
            (
                FieldKind::Extension { base: b1, modulus: m1, .. },
                FieldKind::Extension { base: b2, modulus: m2, .. },
            ) => b1.cmp(b2).then_with(|| m1.len().cmp(&m2.len())).then_with(|| m1.cmp(m2)),
            (a, b) => kind_rank(a).cmp(&kind_rank(b)),
        }
    }
}

impl Hash for Field {
    fn hash<H: Hasher>(&self, state: &mut H) {
        match &*self.0 {
            FieldKind::Rational => 0u8.hash(state),
            FieldKind::Prime(p) => {
                1u8.hash(state);
                p.hash(state)
            }
            FieldKind::Extension { base, modulus, .. } => {
                2u8.hash(state);
                base.hash(state);
                modulus.hash(state);
            }
        }
    }
}

fn is_prime_u64(p: u64) -> bool {
    if p < 2 {
        return false;
    }
    let mut d = 2u64;
    while d * d <= p {
        if p.is_multiple_of(d) {
            return false;
        }
        d += 1;
    }
    true
}

fn inv_mod(a: u64, p: u64) -> u64 {
    // Fermat; p is prime and a != 0.
    pow_mod_u64(a, p - 2, p)
}

pub(crate) fn pow_mod_u64(mut b: u64, mut e: u64, m: u64) -> u64 {
    let mut r = 1 % m;
    b %= m;
    while e > 0 {
        if e & 1 == 1 {
            r = ((r as u128 * b as u128) % m as u128) as u64;
        }
        b = ((b as u128 * b as u128) % m as u128) as u64;
        e >>= 1;
    }
    r
}

impl Field {
    pub fn rational() -> Field {
        Field(Arc::new(FieldKind::Rational))
    }

    pub fn prime(p: u64) -> Result<Field> {
        if !is_prime_u64(p) || p >= (1u64 << 62) {
            return Err(Error::InvalidField(format!("{p} is not a supported prime")));
        }
        Ok(Field(Arc::new(FieldKind::Prime(p))))
    }

    /// `base[var]/(modulus)`, checking that the modulus is monic and irreducible.
    pub fn extension(base: &Field, modulus: &Poly, var: &str) -> Result<Field> {
        let deg = modulus
            .degree()
            .ok_or_else(|| Error::InvalidField("zero modulus".into()))?;
        if deg == 0 {
            return Err(Error::InvalidField("constant modulus".into()));
        }
        if !base.is_one(modulus.lc()) {
            return Err(Error::InvalidField(format!(
                "modulus {} is not monic",
                modulus.format(base, var)
            )));
        }
        let factors = super::factor::factor(base, modulus)?;
        if factors.len() != 1 || factors[0].1 != 1 {
            return Err(Error::InvalidField(format!(
                "modulus {} is reducible over {}",
                modulus.format(base, var),
                base
            )));
        }
        Ok(Self::extension_unchecked(base, modulus, var))
    }

    /// Like [`Field::extension`] but trusts the caller that `modulus` is monic
    /// and irreducible.
    pub fn extension_unchecked(base: &Field, modulus: &Poly, var: &str) -> Field {
        Field(Arc::new(FieldKind::Extension {
            base: base.clone(),
            modulus: modulus.coeffs().to_vec(),
            var: var.to_string(),
        }))
    }

    pub fn kind(&self) -> &FieldKind {
        &self.0
    }

    pub fn is_rational(&self) -> bool {
        matches!(*self.0, FieldKind::Rational)
    }

    pub fn base(&self) -> Option<&Field> {
        match &*self.0 {
            FieldKind::Extension { base, .. } => Some(base),
            _ => None,
        }
    }

    pub fn modulus(&self) -> Option<Poly> {
        match &*self.0 {
            FieldKind::Extension { modulus, .. } => Some(Poly::from_trimmed(modulus.clone())),
            _ => None,
        }
    }

    pub fn var(&self) -> Option<&str> {
        match &*self.0 {
            FieldKind::Extension { var, .. } => Some(var),
            _ => None,
        }
    }

    /// The prime field at the bottom of the tower.
    pub fn prime_field(&self) -> Field {
        match &*self.0 {
            FieldKind::Extension { base, .. } => base.prime_field(),
            _ => self.clone(),
        }
    }

    pub fn characteristic(&self) -> u64 {
        match &*self.0 {
            FieldKind::Rational => 0,
            FieldKind::Prime(p) => *p,
            FieldKind::Extension { base, .. } => base.characteristic(),
        }
    }

    pub fn is_finite(&self) -> bool {
        self.characteristic() != 0
    }

    /// Degree over the immediate base (1 for prime fields).
    pub fn degree(&self) -> usize {
        match &*self.0 {
            FieldKind::Extension { modulus, .. } => modulus.len() - 1,
            _ => 1,
        }
    }

    /// Degree over the prime field.
    pub fn total_degree(&self) -> usize {
        match &*self.0 {
            FieldKind::Extension { base, .. } => self.degree() * base.total_degree(),
            _ => 1,
        }
    }

    /// `[self : k]`, if `k` lies in the tower below `self`.
    pub fn degree_over(&self, k: &Field) -> Option<usize> {
        if self == k {
            return Some(1);
        }
        match &*self.0 {
            FieldKind::Extension { base, .. } => base.degree_over(k).map(|d| d * self.degree()),
            _ => None,
        }
    }

    pub fn is_extension_of(&self, k: &Field) -> bool {
        self.degree_over(k).is_some()
    }

    /// Number of elements, for finite fields.
    pub fn size(&self) -> Option<BigUint> {
        match self.characteristic() {
            0 => None,
            p => Some(BigUint::from(p).pow(self.total_degree() as u32)),
        }
    }

    /// Human-readable descriptor in the text format (`Q`, `Fp(5)`,
    /// `Fq(5,x^2+2)`, `Ext(<base>,<modulus>)`).
    pub fn descriptor(&self) -> String {
        match &*self.0 {
            FieldKind::Rational => "Q".into(),
            FieldKind::Prime(p) => format!("Fp({p})"),
            FieldKind::Extension { base, modulus, var } => {
                let m = Poly::from_trimmed(modulus.clone()).format(base, var);
                match &*base.0 {
                    FieldKind::Prime(p) => format!("Fq({p},{m})"),
                    _ => format!("Ext({},{m})", base.descriptor()),
                }
            }
        }
    }

    // ---- constants ----

    pub fn zero(&self) -> Elem {
        match &*self.0 {
            FieldKind::Rational => Elem::Q(BigRational::zero()),
            FieldKind::Prime(_) => Elem::Fp(0),
            FieldKind::Extension { base, .. } => Elem::Ext(vec![base.zero(); self.degree()]),
        }
    }

    pub fn one(&self) -> Elem {
        self.from_int(1)
    }

    pub fn from_int(&self, n: i64) -> Elem {
        self.from_bigint(&BigInt::from(n))
    }

    pub fn from_bigint(&self, n: &BigInt) -> Elem {
        match &*self.0 {
            FieldKind::Rational => Elem::Q(BigRational::from_integer(n.clone())),
            FieldKind::Prime(p) => {
                let r = n.mod_floor(&BigInt::from(*p));
                Elem::Fp(r.to_u64().unwrap())
            }
            FieldKind::Extension { base, .. } => self.embed_base(&base.from_bigint(n)),
        }
    }

    /// Image of a rational number; fails if the denominator vanishes in
    /// positive characteristic.
    pub fn from_rational(&self, q: &BigRational) -> Result<Elem> {
        let n = self.from_bigint(q.numer());
        let d = self.from_bigint(q.denom());
        let dinv = self
            .inv(&d)
            .ok_or_else(|| Error::Parse(format!("denominator of {q} vanishes in {self}")))?;
        Ok(self.mul(&n, &dinv))
    }

    /// The class of the generator `x` in `K[x]/(f)`.
    pub fn generator(&self) -> Option<Elem> {
        match &*self.0 {
            FieldKind::Extension { base, .. } => {
                let mut c = vec![base.zero(); self.degree()];
                if self.degree() == 1 {
                    // x = -f_0 when the modulus is linear
                    let m = self.modulus().unwrap();
                    c[0] = base.neg(&m.coeffs()[0]);
                } else {
                    c[1] = base.one();
                }
                Some(Elem::Ext(c))
            }
            _ => None,
        }
    }

    /// Embed an element of the immediate base field.
    pub fn embed_base(&self, e: &Elem) -> Elem {
        match &*self.0 {
            FieldKind::Extension { base, .. } => {
                let mut c = vec![base.zero(); self.degree()];
                c[0] = e.clone();
                Elem::Ext(c)
            }
            _ => e.clone(),
        }
    }

    /// Embed an element of a subfield `from` lying in the tower below `self`.
    pub fn embed(&self, from: &Field, e: &Elem) -> Result<Elem> {
        if self == from {
            return Ok(e.clone());
        }
        match &*self.0 {
            FieldKind::Extension { base, .. } => Ok(self.embed_base(&base.embed(from, e)?)),
            _ => Err(Error::NotExtension(self.descriptor(), from.descriptor())),
        }
    }

    /// If `e` lies in the subfield `k`, return it as an element of `k`.
    pub fn restrict_to(&self, k: &Field, e: &Elem) -> Option<Elem> {
        if self == k {
            return Some(e.clone());
        }
        match (&*self.0, e) {
            (FieldKind::Extension { base, .. }, Elem::Ext(c)) => {
                if c[1..].iter().all(|x| base.is_zero(x)) {
                    base.restrict_to(k, &c[0])
                } else {
                    None
                }
            }
            _ => None,
        }
    }

    // ---- arithmetic ----

    pub fn is_zero(&self, a: &Elem) -> bool {
        match a {
            Elem::Fp(x) => *x == 0,
            Elem::Q(q) => q.is_zero(),
            Elem::Ext(c) => {
                let base = self.base().expect("extension element in non-extension field");
                c.iter().all(|x| base.is_zero(x))
            }
        }
    }

    pub fn is_one(&self, a: &Elem) -> bool {
        *a == self.one()
    }

    pub fn add(&self, a: &Elem, b: &Elem) -> Elem {
        match (&*self.0, a, b) {
            (FieldKind::Prime(p), Elem::Fp(x), Elem::Fp(y)) => Elem::Fp((x + y) % p),
            (FieldKind::Rational, Elem::Q(x), Elem::Q(y)) => Elem::Q(x + y),
            (FieldKind::Extension { base, .. }, Elem::Ext(x), Elem::Ext(y)) => {
                Elem::Ext(x.iter().zip(y).map(|(u, v)| base.add(u, v)).collect())
            }
            _ => panic!("element/field mismatch in add ({self})"),
        }
    }

    pub fn neg(&self, a: &Elem) -> Elem {
        match (&*self.0, a) {
            (FieldKind::Prime(p), Elem::Fp(x)) => Elem::Fp((p - x) % p),
            (FieldKind::Rational, Elem::Q(x)) => Elem::Q(-x),
            (FieldKind::Extension { base, .. }, Elem::Ext(x)) => {
                Elem::Ext(x.iter().map(|u| base.neg(u)).collect())
            }
            _ => panic!("element/field mismatch in neg ({self})"),
        }
    }

    pub fn sub(&self, a: &Elem, b: &Elem) -> Elem {
        self.add(a, &self.neg(b))
    }

    pub fn mul(&self, a: &Elem, b: &Elem) -> Elem {
        match (&*self.0, a, b) {
            (FieldKind::Prime(p), Elem::Fp(x), Elem::Fp(y)) => {
                Elem::Fp(((*x as u128 * *y as u128) % *p as u128) as u64)
            }
            (FieldKind::Rational, Elem::Q(x), Elem::Q(y)) => Elem::Q(x * y),
            (FieldKind::Extension { base, modulus, .. }, Elem::Ext(x), Elem::Ext(y)) => {
                let px = Poly::new(base, x.clone());
                let py = Poly::new(base, y.clone());
                let m = Poly::from_trimmed(modulus.clone());
                let r = px.mul(&py, base).rem(&m, base);
                Elem::Ext(r.padded(base, self.degree()))
            }
            _ => panic!("element/field mismatch in mul ({self})"),
        }
    }

    pub fn inv(&self, a: &Elem) -> Option<Elem> {
        if self.is_zero(a) {
            return None;
        }
        Some(match (&*self.0, a) {
            (FieldKind::Prime(p), Elem::Fp(x)) => Elem::Fp(inv_mod(*x, *p)),
            (FieldKind::Rational, Elem::Q(x)) => Elem::Q(x.recip()),
            (FieldKind::Extension { base, modulus, .. }, Elem::Ext(x)) => {
                let px = Poly::new(base, x.clone());
                let m = Poly::from_trimmed(modulus.clone());
                let (g, s, _) = px.ext_gcd(&m, base);
                // g is a nonzero constant since the modulus is irreducible
                let ginv = base.inv(&g.coeffs()[0])?;
                let s = s.scale(&ginv, base).rem(&m, base);
                Elem::Ext(s.padded(base, self.degree()))
            }
            _ => panic!("element/field mismatch in inv ({self})"),
        })
    }

    pub fn div(&self, a: &Elem, b: &Elem) -> Option<Elem> {
        self.inv(b).map(|bi| self.mul(a, &bi))
    }

    pub fn pow(&self, a: &Elem, e: i64) -> Option<Elem> {
        if e < 0 {
            let ai = self.inv(a)?;
            return Some(self.pow_big(&ai, &BigUint::from(e.unsigned_abs())));
        }
        Some(self.pow_big(a, &BigUint::from(e as u64)))
    }

    pub fn pow_big(&self, a: &Elem, e: &BigUint) -> Elem {
        let mut result = self.one();
        let bits = e.bits();
        for i in (0..bits).rev() {
            result = self.mul(&result, &result);
            if e.bit(i) {
                result = self.mul(&result, a);
            }
        }
        result
    }

    // ---- linear structure over subfields ----

    /// Coordinates of `e` over the subfield `k`, in the tower-flattened power
    /// basis (outer generator index major).
    pub fn coords_over(&self, e: &Elem, k: &Field) -> Result<Vec<Elem>> {
        if self == k {
            return Ok(vec![e.clone()]);
        }
        match (&*self.0, e) {
            (FieldKind::Extension { base, .. }, Elem::Ext(c)) => {
                let mut out = Vec::new();
                for x in c {
                    out.extend(base.coords_over(x, k)?);
                }
                Ok(out)
            }
            _ => Err(Error::NotExtension(self.descriptor(), k.descriptor())),
        }
    }

    /// Inverse of [`Field::coords_over`].
    pub fn from_coords(&self, coords: &[Elem], k: &Field) -> Result<Elem> {
        if self == k {
            return Ok(coords[0].clone());
        }
        match &*self.0 {
            FieldKind::Extension { base, .. } => {
                let inner = base
                    .degree_over(k)
                    .ok_or_else(|| Error::NotExtension(self.descriptor(), k.descriptor()))?;
                let c = coords
                    .chunks(inner)
                    .map(|ch| base.from_coords(ch, k))
                    .collect::<Result<Vec<_>>>()?;
                Ok(Elem::Ext(c))
            }
            _ => Err(Error::NotExtension(self.descriptor(), k.descriptor())),
        }
    }

    /// Matrix over `k` of multiplication by `e`, in the tower-flattened power
    /// basis; column `j` holds the coordinates of `e * b_j`.
    pub fn regular_representation(&self, e: &Elem, k: &Field) -> Result<Mat<Elem>> {
        let dim = self
            .degree_over(k)
            .ok_or_else(|| Error::NotExtension(self.descriptor(), k.descriptor()))?;
        let mut m = Mat::filled(dim, dim, k.zero());
        for j in 0..dim {
            let mut unit = vec![k.zero(); dim];
            unit[j] = k.one();
            let b = self.from_coords(&unit, k)?;
            let col = self.coords_over(&self.mul(e, &b), k)?;
            for (i, c) in col.into_iter().enumerate() {
                m.set(i, j, c);
            }
        }
        Ok(m)
    }

    /// Field norm `N_{self/k}(e)`, the determinant of the regular representation.
    pub fn norm_to(&self, e: &Elem, k: &Field) -> Result<Elem> {
        if self == k {
            return Ok(e.clone());
        }
        // transitive through the tower
        let base = self
            .base()
            .ok_or_else(|| Error::NotExtension(self.descriptor(), k.descriptor()))?;
        let m = self.regular_representation(e, base)?;
        let n = m.det_field(base);
        base.norm_to(&n, k)
    }

    // ---- enumeration and randomness ----

    pub fn random_elem<R: Rng>(&self, rng: &mut R, bound: i64) -> Elem {
        match &*self.0 {
            FieldKind::Rational => {
                let n = rng.gen_range(-bound..=bound);
                let d = rng.gen_range(1..=bound.max(1));
                Elem::Q(BigRational::new(n.into(), d.into()))
            }
            FieldKind::Prime(p) => Elem::Fp(rng.gen_range(0..*p)),
            FieldKind::Extension { base, .. } => {
                Elem::Ext((0..self.degree()).map(|_| base.random_elem(rng, bound)).collect())
            }
        }
    }

    /// A small nonzero integer-like element (rationals: a nonzero integer in
    /// `[-bound, bound]`).
    pub fn random_nonzero<R: Rng>(&self, rng: &mut R, bound: i64) -> Elem {
        loop {
            let e = match &*self.0 {
                FieldKind::Rational => self.from_int(rng.gen_range(-bound..=bound)),
                _ => self.random_elem(rng, bound),
            };
            if !self.is_zero(&e) {
                return e;
            }
        }
    }

    /// All elements of a finite field, in canonical order (small fields only).
    pub fn elements(&self) -> Vec<Elem> {
        match &*self.0 {
            FieldKind::Rational => panic!("cannot enumerate Q"),
            FieldKind::Prime(p) => (0..*p).map(Elem::Fp).collect(),
            FieldKind::Extension { base, .. } => {
                let be = base.elements();
                let mut out: Vec<Vec<Elem>> = vec![vec![]];
                for _ in 0..self.degree() {
                    let mut next = Vec::new();
                    for prefix in &out {
                        for b in &be {
                            let mut v = prefix.clone();
                            v.push(b.clone());
                            next.push(v);
                        }
                    }
                    out = next;
                }
                out.into_iter().map(Elem::Ext).collect()
            }
        }
    }

    // ---- formatting ----

    pub fn format_elem(&self, e: &Elem) -> String {
        match (&*self.0, e) {
            (FieldKind::Prime(_), Elem::Fp(x)) => x.to_string(),
            (FieldKind::Rational, Elem::Q(q)) => {
                if q.is_integer() {
                    q.numer().to_string()
                } else {
                    format!("{}/{}", q.numer(), q.denom())
                }
            }
            (FieldKind::Extension { base, var, .. }, Elem::Ext(c)) => {
                Poly::new(base, c.clone()).format(base, var)
            }
            _ => panic!("element/field mismatch in format ({self})"),
        }
    }

    /// Whether the formatted element needs parentheses as a coefficient.
    pub(crate) fn is_compound(&self, e: &Elem) -> bool {
        match e {
            Elem::Fp(_) => false,
            Elem::Q(q) => !q.is_integer(),
            Elem::Ext(c) => {
                let base = self.base().unwrap();
                c.iter().filter(|x| !base.is_zero(x)).count() > 1
                    || c.iter().skip(1).any(|x| !base.is_zero(x))
            }
        }
    }

    pub fn value(&self, e: Elem) -> FieldValue {
        FieldValue { field: self.clone(), elem: e }
    }

    /// Integer value of an element of `Q` when it is an integer.
    pub fn as_integer(&self, e: &Elem) -> Option<BigInt> {
        match e {
            Elem::Q(q) if q.is_integer() => Some(q.numer().clone()),
            Elem::Fp(x) => Some(BigInt::from(*x)),
            _ => None,
        }
    }

    /// The value of a rational element.
    pub fn as_rational(&self, e: &Elem) -> Option<BigRational> {
        match e {
            Elem::Q(q) => Some(q.clone()),
            _ => None,
        }
    }

    /// Sign of a rational element (-1, 0, 1).
    pub fn rational_sign(&self, e: &Elem) -> Option<i32> {
        match e {
            Elem::Q(q) => Some(if q.is_zero() {
                0
            } else if q.is_positive() {
                1
            } else {
                -1
            }),
            _ => None,
        }
    }

    pub fn one_big() -> BigInt {
        BigInt::one()
    }
}

/// A field element bundled with its field.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct FieldValue {
    pub field: Field,
    pub elem: Elem,
}

impl fmt::Display for FieldValue {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.field.format_elem(&self.elem))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn q(n: i64) -> Elem {
        Field::rational().from_int(n)
    }

    #[test]
    fn prime_field_rejects_composites() {
        assert!(Field::prime(6).is_err());
        assert!(Field::prime(1).is_err());
        assert!(Field::prime(7).is_ok());
    }

    #[test]
    fn gaussian_integer_arithmetic() {
        let qf = Field::rational();
        let m = Poly::new(&qf, vec![q(1), q(0), q(1)]);
        let l = Field::extension(&qf, &m, "i").unwrap();
        let i = l.generator().unwrap();
        let i2 = l.mul(&i, &i);
        assert_eq!(i2, l.from_int(-1));
        let inv = l.inv(&i).unwrap();
        assert_eq!(inv, l.neg(&i));
        assert_eq!(l.format_elem(&l.add(&i, &l.one())), "i+1");
    }

    #[test]
    fn reducible_modulus_rejected() {
        let qf = Field::rational();
        let m = Poly::new(&qf, vec![q(-1), q(0), q(1)]);
        assert!(Field::extension(&qf, &m, "x").is_err());
    }

    #[test]
    fn regular_representation_of_i() {
        let qf = Field::rational();
        let m = Poly::new(&qf, vec![q(1), q(0), q(1)]);
        let l = Field::extension(&qf, &m, "x").unwrap();
        let r = l.regular_representation(&l.generator().unwrap(), &qf).unwrap();
        assert_eq!(r.get(0, 0), &q(0));
        assert_eq!(r.get(0, 1), &q(-1));
        assert_eq!(r.get(1, 0), &q(1));
        assert_eq!(r.get(1, 1), &q(0));
        assert_eq!(l.norm_to(&l.generator().unwrap(), &qf).unwrap(), q(1));
    }

    #[test]
    fn f25_norm_of_generator() {
        let f5 = Field::prime(5).unwrap();
        let m = Poly::new(&f5, vec![f5.from_int(2), f5.zero(), f5.one()]);
        let l = Field::extension(&f5, &m, "x").unwrap();
        let r = l.regular_representation(&l.generator().unwrap(), &f5).unwrap();
        // [[0,-2],[1,0]] with -2 = 3 in F_5
        assert_eq!(r.get(0, 1), &f5.from_int(3));
        assert_eq!(l.norm_to(&l.generator().unwrap(), &f5).unwrap(), f5.from_int(2));
        assert_eq!(l.elements().len(), 25);
    }

    #[test]
    fn embedding_through_a_tower() {
        let qf = Field::rational();
        let l1 = Field::extension(&qf, &Poly::new(&qf, vec![q(1), q(0), q(1)]), "i").unwrap();
        let m2 = Poly::new(&l1, vec![l1.from_int(-2), l1.zero(), l1.one()]);
        let l2 = Field::extension(&l1, &m2, "s").unwrap();
        assert_eq!(l2.degree_over(&qf), Some(4));
        let three = l2.embed(&qf, &q(3)).unwrap();
        assert_eq!(l2.restrict_to(&qf, &three), Some(q(3)));
        let s = l2.generator().unwrap();
        assert_eq!(l2.norm_to(&s, &qf).unwrap(), q(4));
    }
}
