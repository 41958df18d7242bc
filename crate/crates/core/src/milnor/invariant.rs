//! Complete invariants of `K^M_l(F_q)` (all `l`) and `K^M_l(Q)` (`l ≤ 2`).
//!
//! For `K_2(Q)` the invariant is the 2-adic Hilbert symbol together with the
//! tame symbols at all odd primes; this pair is a complete invariant because
//! `K_2(Q) ≅ Z/2 ⊕ ⊕_{p odd} F_p^×` and Hilbert reciprocity recovers the
//! real symbol from the others.

use std::collections::BTreeMap;
use std::fmt;

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};

use super::element::MilnorElement;
use crate::algebra::field::pow_mod_u64;
use crate::algebra::{Elem, Field};
use crate::error::{Error, Result};

const TRIAL_LIMIT: u64 = 1_000_000;
const FINITE_FIELD_LIMIT: u64 = 1 << 20;

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum MilnorInvariant {
    /// Weight 0: the integer itself.
    Integer(i64),
    /// `K_1(F_q)`: discrete logarithm to the canonical primitive element.
    FqLog { q: u64, log: u64 },
    /// `K_l(F_q) = 0` for `l ≥ 2`.
    FqZero { l: usize },
    /// `K_1(Q) = Q^×`: sign and prime exponents.
    Rational { negative: bool, exponents: BTreeMap<u64, i64> },
    /// `K_2(Q)`: 2-adic Hilbert symbol and nontrivial odd tame symbols
    /// (prime ↦ residue in `F_p^×`).
    K2Q { hilbert2: i8, tame: BTreeMap<u64, u64> },
}

impl MilnorInvariant {
    pub fn is_zero(&self) -> bool {
        match self {
            MilnorInvariant::Integer(n) => *n == 0,
            MilnorInvariant::FqLog { log, .. } => *log == 0,
            MilnorInvariant::FqZero { .. } => true,
            MilnorInvariant::Rational { negative, exponents } => !negative && exponents.is_empty(),
            MilnorInvariant::K2Q { hilbert2, tame } => *hilbert2 == 1 && tame.is_empty(),
        }
    }
}

impl fmt::Display for MilnorInvariant {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            MilnorInvariant::Integer(n) => write!(f, "{n}"),
            MilnorInvariant::FqLog { q, log } => write!(f, "log {log} mod {}", q - 1),
            MilnorInvariant::FqZero { l } => write!(f, "0 (K_{l} of a finite field)"),
            MilnorInvariant::Rational { negative, exponents } => {
                let mut parts = vec![if *negative { "-1".to_string() } else { "1".to_string() }];
                for (p, e) in exponents {
                    parts.push(format!("{p}^{e}"));
                }
                write!(f, "{}", parts.join("*"))
            }
            MilnorInvariant::K2Q { hilbert2, tame } => {
                let t: Vec<String> = tame.iter().map(|(p, r)| format!("{p}:{r}")).collect();
                write!(f, "hilbert2={hilbert2} tame={{{}}}", t.join(", "))
            }
        }
    }
}

/// The invariant of an element over `F_q` or `Q`.
pub fn invariant(e: &MilnorElement) -> Result<MilnorInvariant> {
    let k = e.field();
    if e.l() == 0 {
        return Ok(MilnorInvariant::Integer(e.weight_zero_value()));
    }
    if k.is_finite() {
        if e.l() >= 2 {
            return Ok(MilnorInvariant::FqZero { l: e.l() });
        }
        return fq_log(k, &e.weight_one_value()?);
    }
    if !k.is_rational() {
        return Err(Error::Unsupported(format!("no complete invariant over {k}")));
    }
    match e.l() {
        1 => rational_factorization(&rational(&e.weight_one_value()?)),
        2 => k2q(e),
        l => Err(Error::Unsupported(format!("no complete invariant for K_{l}(Q)"))),
    }
}

fn rational(e: &Elem) -> BigRational {
    match e {
        Elem::Q(q) => q.clone(),
        _ => unreachable!(),
    }
}

fn fq_log(k: &Field, a: &Elem) -> Result<MilnorInvariant> {
    let q = k
        .size()
        .and_then(|s| s.to_u64())
        .filter(|&q| q <= FINITE_FIELD_LIMIT)
        .ok_or_else(|| Error::Unsupported(format!("discrete logarithms in {k} are too large")))?;
    let g = primitive_element(k, q);
    let mut cur = k.one();
    for i in 0..q - 1 {
        if cur == *a {
            return Ok(MilnorInvariant::FqLog { q, log: i });
        }
        cur = k.mul(&cur, &g);
    }
    unreachable!("a nonzero element is a power of a primitive element")
}

/// The first element in canonical order generating `F_q^×`.
pub fn primitive_element(k: &Field, q: u64) -> Elem {
    let order = q - 1;
    let primes: Vec<u64> = factor_u64(order).into_iter().map(|(p, _)| p).collect();
    for g in k.elements() {
        if k.is_zero(&g) {
            continue;
        }
        if primes.iter().all(|p| !k.is_one(&k.pow(&g, (order / p) as i64).unwrap())) {
            return g;
        }
    }
    unreachable!("finite fields have cyclic unit groups")
}

fn factor_u64(mut n: u64) -> Vec<(u64, u32)> {
    let mut out = Vec::new();
    let mut d = 2;
    while d * d <= n {
        let mut e = 0;
        while n.is_multiple_of(d) {
            n /= d;
            e += 1;
        }
        if e > 0 {
            out.push((d, e));
        }
        d += 1;
    }
    if n > 1 {
        out.push((n, 1));
    }
    out
}

/// Prime factorization of a positive integer by trial division.
fn factor_int(n: &BigInt) -> Result<Vec<(u64, i64)>> {
    let mut n = n.abs();
    let mut out = Vec::new();
    let mut d = 2u64;
    while d <= TRIAL_LIMIT && BigInt::from(d) * BigInt::from(d) <= n {
        let bd = BigInt::from(d);
        let mut e = 0;
        while (&n % &bd).is_zero() {
            n /= &bd;
            e += 1;
        }
        if e > 0 {
            out.push((d, e));
        }
        d += 1;
    }
    if n > BigInt::one() {
        if BigInt::from(d) * BigInt::from(d) <= n {
            return Err(Error::Unsupported(format!("cannot factor {n}")));
        }
        let p = n.to_u64().ok_or_else(|| Error::Unsupported(format!("prime {n} too large")))?;
        out.push((p, 1));
    }
    Ok(out)
}

fn rational_factorization(q: &BigRational) -> Result<MilnorInvariant> {
    let mut exponents = BTreeMap::new();
    for (p, e) in factor_int(q.numer())? {
        *exponents.entry(p).or_insert(0) += e;
    }
    for (p, e) in factor_int(q.denom())? {
        *exponents.entry(p).or_insert(0) -= e;
    }
    exponents.retain(|_, e| *e != 0);
    Ok(MilnorInvariant::Rational { negative: q.is_negative(), exponents })
}

/// `v_p(q)` and the unit part of `q` as a rational.
fn split_prime(q: &BigRational, p: u64) -> (i64, BigRational) {
    let bp = BigInt::from(p);
    let mut num = q.numer().clone();
    let mut den = q.denom().clone();
    let mut v = 0;
    while (&num % &bp).is_zero() {
        num /= &bp;
        v += 1;
    }
    while (&den % &bp).is_zero() {
        den /= &bp;
        v -= 1;
    }
    (v, BigRational::new(num, den))
}

/// Residue of a `p`-adic unit modulo `p`.
fn unit_mod(u: &BigRational, p: u64) -> u64 {
    let bp = BigInt::from(p);
    let n = u.numer().mod_floor(&bp).to_u64().unwrap();
    let d = u.denom().mod_floor(&bp).to_u64().unwrap();
    ((n as u128 * pow_mod_u64(d, p - 2, p) as u128) % p as u128) as u64
}

/// `(a, b)_2` as `0` (for `+1`) or `1` (for `-1`).
pub fn hilbert2_bit(a: &BigRational, b: &BigRational) -> u64 {
    let (alpha, u) = split_prime(a, 2);
    let (beta, v) = split_prime(b, 2);
    let m8 = |x: &BigRational| -> u64 {
        // n/d ≡ n*d (mod 8) for odd d
        let e = BigInt::from(8);
        ((x.numer().mod_floor(&e) * x.denom().mod_floor(&e)).mod_floor(&e)).to_u64().unwrap()
    };
    let (u8_, v8) = (m8(&u), m8(&v));
    let eps = |x: u64| ((x - 1) / 2) % 2;
    let omega = |x: u64| ((x * x - 1) / 8) % 2;
    let alpha = alpha.rem_euclid(2) as u64;
    let beta = beta.rem_euclid(2) as u64;
    (eps(u8_) * eps(v8) + alpha * omega(v8) + beta * omega(u8_)) % 2
}

/// Tame symbol `(-1)^{v(a)v(b)} a^{v(b)} / b^{v(a)} mod p`.
pub fn tame_at(a: &BigRational, b: &BigRational, p: u64) -> u64 {
    let (va, ua) = split_prime(a, p);
    let (vb, ub) = split_prime(b, p);
    let ra = unit_mod(&ua, p);
    let rb = unit_mod(&ub, p);
    let powm = |x: u64, e: i64| {
        if e >= 0 {
            pow_mod_u64(x, e as u64, p)
        } else {
            pow_mod_u64(pow_mod_u64(x, p - 2, p), e.unsigned_abs(), p)
        }
    };
    let mut r = (powm(ra, vb) as u128 * powm(rb, -va) as u128 % p as u128) as u64;
    if (va * vb).rem_euclid(2) == 1 {
        r = (p - r) % p;
    }
    r
}

fn k2q(e: &MilnorElement) -> Result<MilnorInvariant> {
    let mut bit = 0u64;
    let mut primes = std::collections::BTreeSet::new();
    let terms: Vec<(i64, BigRational, BigRational)> = e
        .terms()
        .iter()
        .map(|(c, s)| (*c, rational(&s[0]), rational(&s[1])))
        .collect();
    for (c, a, b) in &terms {
        if c.rem_euclid(2) == 1 {
            bit ^= hilbert2_bit(a, b);
        }
        for x in [a, b] {
            for n in [x.numer(), x.denom()] {
                for (p, _) in factor_int(n)? {
                    if p != 2 {
                        primes.insert(p);
                    }
                }
            }
        }
    }
    let mut tame = BTreeMap::new();
    for p in primes {
        let mut acc = 1u64;
        for (c, a, b) in &terms {
            let r = tame_at(a, b, p);
            let e = c.rem_euclid((p - 1) as i64) as u64;
            acc = (acc as u128 * pow_mod_u64(r, e, p) as u128 % p as u128) as u64;
        }
        if acc != 1 {
            tame.insert(p, acc);
        }
    }
    Ok(MilnorInvariant::K2Q { hilbert2: if bit == 1 { -1 } else { 1 }, tame })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn sym(a: i64, b: i64) -> MilnorElement {
        let q = Field::rational();
        MilnorElement::symbol(&q, vec![q.from_int(a), q.from_int(b)]).unwrap()
    }

    #[test]
    fn two_three() {
        let inv = invariant(&sym(2, 3)).unwrap();
        let mut tame = BTreeMap::new();
        tame.insert(3, 2);
        assert_eq!(inv, MilnorInvariant::K2Q { hilbert2: -1, tame });
    }

    #[test]
    fn minus_one_squared_is_nonzero() {
        let inv = invariant(&sym(-1, -1)).unwrap();
        assert_eq!(inv, MilnorInvariant::K2Q { hilbert2: -1, tame: BTreeMap::new() });
        assert!(!inv.is_zero());
    }

    #[test]
    fn finite_field_weights() {
        let f5 = Field::prime(5).unwrap();
        let e = MilnorElement::symbol(&f5, vec![f5.from_int(2), f5.from_int(3)]).unwrap();
        assert!(invariant(&e).unwrap().is_zero());
        // 2 is the least primitive root mod 5 and 3 = 2^3
        let e = MilnorElement::symbol(&f5, vec![f5.from_int(3)]).unwrap();
        assert_eq!(invariant(&e).unwrap(), MilnorInvariant::FqLog { q: 5, log: 3 });
    }

    #[test]
    fn rational_weight_one() {
        let q = Field::rational();
        let e = MilnorElement::new(&q, 1, vec![(1, vec![q.from_int(4)]), (1, vec![q.from_int(5)])])
            .unwrap();
        let mut ex = BTreeMap::new();
        ex.insert(2, 2);
        ex.insert(5, 1);
        assert_eq!(invariant(&e).unwrap(), MilnorInvariant::Rational { negative: false, exponents: ex });
    }
}
