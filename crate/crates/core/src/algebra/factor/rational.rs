//! Factorization over `Q` by the Zassenhaus method.

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use crate::algebra::field::{Elem, Field};
use crate::algebra::poly::Poly;

type ZPoly = Vec<BigInt>;

pub(super) fn factor(p: &Poly) -> Vec<(Poly, usize)> {
    let q = Field::rational();
    let mut out = Vec::new();
    for (part, mult) in super::yun(&q, p) {
        for g in factor_squarefree(&q, &part) {
            out.push((g, mult));
        }
    }
    out
}

/// Primitive integer polynomial with positive leading coefficient.
fn to_primitive(p: &Poly) -> ZPoly {
    let mut den = BigInt::one();
    for c in p.coeffs() {
        if let Elem::Q(r) = c {
            den = den.lcm(r.denom());
        }
    }
    let mut v: ZPoly = p
        .coeffs()
        .iter()
        .map(|c| match c {
            Elem::Q(r) => (r * BigRational::from_integer(den.clone())).to_integer(),
            _ => unreachable!(),
        })
        .collect();
    let g = v.iter().fold(BigInt::zero(), |g, c| g.gcd(c));
    if !g.is_zero() {
        for c in v.iter_mut() {
            *c = &*c / &g;
        }
    }
    if v.last().is_some_and(|c| c.is_negative()) {
        for c in v.iter_mut() {
            *c = -&*c;
        }
    }
    v
}

fn from_z(q: &Field, v: &[BigInt]) -> Poly {
    Poly::new(q, v.iter().map(|c| q.from_bigint(c)).collect())
}

fn small_primes() -> impl Iterator<Item = u64> {
    (3u64..).filter(|&n| (2..n).take_while(|d| d * d <= n).all(|d| n % d != 0))
}

fn factor_squarefree(q: &Field, p: &Poly) -> Vec<Poly> {
    let n = p.degree().unwrap();
    if n == 1 {
        return vec![p.monic(q)];
    }
    let g = to_primitive(p);
    let lc = g.last().unwrap().clone();

    // good prime: keeps the degree and the square-free property
    let mut prime = 0u64;
    let mut fp = None;
    let mut modp_factors = Vec::new();
    for pr in small_primes() {
        if (&lc % BigInt::from(pr)).is_zero() {
            continue;
        }
        let field = Field::prime(pr).unwrap();
        let gp = from_z(&field, &g);
        if gp.gcd(&gp.derivative(&field), &field).degree() != Some(0) {
            continue;
        }
        let fac = super::finite::factor(&field, &gp.monic(&field));
        prime = pr;
        modp_factors = fac.into_iter().map(|(h, _)| h).collect::<Vec<_>>();
        fp = Some(field);
        break;
    }
    let fp = fp.unwrap();
    if modp_factors.len() == 1 {
        return vec![p.monic(q)];
    }

    // lifting target: p^k > 2 * |lc| * 2^n * ||g||_2
    let norm2: BigInt = g.iter().map(|c| c * c).sum();
    let norm = norm2.sqrt() + BigInt::one();
    let bound = BigInt::from(2) * lc.abs() * (BigInt::one() << n) * norm;
    let pb = BigInt::from(prime);
    let mut modulus = pb.clone();
    let mut k = 1u32;
    while modulus <= bound {
        modulus *= &pb;
        k += 1;
    }

    let lc_inv = mod_inverse(&lc, &modulus);
    let target: ZPoly = g.iter().map(|c| (c * &lc_inv).mod_floor(&modulus)).collect();
    let lifted = multi_lift(&fp, prime, k, &target, &modp_factors);

    recombine(q, &g, &lifted, &modulus)
}

fn mod_inverse(a: &BigInt, m: &BigInt) -> BigInt {
    let e = a.extended_gcd(m);
    e.x.mod_floor(m)
}

fn zmul(a: &[BigInt], b: &[BigInt]) -> ZPoly {
    if a.is_empty() || b.is_empty() {
        return vec![];
    }
    let mut v = vec![BigInt::zero(); a.len() + b.len() - 1];
    for (i, x) in a.iter().enumerate() {
        for (j, y) in b.iter().enumerate() {
            v[i + j] += x * y;
        }
    }
    v
}

fn zmod(a: &[BigInt], m: &BigInt) -> ZPoly {
    let mut v: ZPoly = a.iter().map(|c| c.mod_floor(m)).collect();
    while v.last().is_some_and(|c| c.is_zero()) {
        v.pop();
    }
    v
}

fn poly_to_z(p: &Poly) -> ZPoly {
    p.coeffs()
        .iter()
        .map(|c| match c {
            Elem::Fp(x) => BigInt::from(*x),
            _ => unreachable!(),
        })
        .collect()
}

/// Lift the monic factorization `target = prod factors (mod p)` to one modulo
/// `p^k` by recursive two-factor linear Hensel lifting.
fn multi_lift(fp: &Field, prime: u64, k: u32, target: &[BigInt], factors: &[Poly]) -> Vec<ZPoly> {
    if factors.len() == 1 {
        return vec![target.to_vec()];
    }
    let mid = factors.len() / 2;
    let a0 = factors[..mid].iter().fold(Poly::one(fp), |acc, h| acc.mul(h, fp));
    let b0 = factors[mid..].iter().fold(Poly::one(fp), |acc, h| acc.mul(h, fp));
    let (a, b) = lift_pair(fp, prime, k, target, &a0, &b0);
    let mut out = multi_lift(fp, prime, k, &a, &factors[..mid]);
    out.extend(multi_lift(fp, prime, k, &b, &factors[mid..]));
    out
}

fn lift_pair(
    fp: &Field,
    prime: u64,
    k: u32,
    target: &[BigInt],
    a0: &Poly,
    b0: &Poly,
) -> (ZPoly, ZPoly) {
    let (_, s, t) = a0.ext_gcd(b0, fp);
    let pb = BigInt::from(prime);
    let mut a = poly_to_z(a0);
    let mut b = poly_to_z(b0);
    let mut pj = pb.clone();
    let full = pb.pow(k);
    for _ in 1..k {
        let next = &pj * &pb;
        let diff: ZPoly = zmul(&a, &b)
            .iter()
            .enumerate()
            .map(|(i, c)| target.get(i).cloned().unwrap_or_default() - c)
            .collect();
        let e: ZPoly = diff.iter().map(|c| c.mod_floor(&next) / &pj).collect();
        let ep = from_zp(fp, &e);
        let (quo, arem) = ep.mul(&t, fp).div_rem(a0, fp);
        let bcorr = ep.mul(&s, fp).add(&quo.mul(b0, fp), fp);
        a = add_scaled(&a, &poly_to_z(&arem), &pj, &next);
        b = add_scaled(&b, &poly_to_z(&bcorr), &pj, &next);
        pj = next;
    }
    (zmod(&a, &full), zmod(&b, &full))
}

fn from_zp(fp: &Field, v: &[BigInt]) -> Poly {
    Poly::new(fp, v.iter().map(|c| fp.from_bigint(c)).collect())
}

fn add_scaled(a: &[BigInt], c: &[BigInt], s: &BigInt, m: &BigInt) -> ZPoly {
    let n = a.len().max(c.len());
    let v: ZPoly = (0..n)
        .map(|i| {
            a.get(i).cloned().unwrap_or_default() + s * c.get(i).cloned().unwrap_or_default()
        })
        .collect();
    zmod(&v, m)
}

fn symmetric(v: &[BigInt], m: &BigInt) -> ZPoly {
    let half = m / 2;
    v.iter()
        .map(|c| {
            let r = c.mod_floor(m);
            if r > half {
                r - m
            } else {
                r
            }
        })
        .collect()
}

fn recombine(q: &Field, g: &[BigInt], lifted: &[ZPoly], modulus: &BigInt) -> Vec<Poly> {
    let mut remaining: Vec<ZPoly> = lifted.to_vec();
    let mut cur = from_z(q, g);
    let mut cur_z = g.to_vec();
    let mut out = Vec::new();
    let mut size = 1;
    while 2 * size <= remaining.len() {
        let mut found = false;
        for subset in subsets(remaining.len(), size) {
            let lc = cur_z.last().unwrap().clone();
            let mut h = vec![lc.clone()];
            for &i in &subset {
                h = zmod(&zmul(&h, &remaining[i]), modulus);
            }
            let h = symmetric(&h, modulus);
            let hp = from_z(q, &h);
            if let Some(quo) = cur.div_exact(&hp, q) {
                out.push(hp.monic(q));
                cur = quo;
                cur_z = to_primitive(&cur);
                remaining = remaining
                    .into_iter()
                    .enumerate()
                    .filter(|(i, _)| !subset.contains(i))
                    .map(|(_, v)| v)
                    .collect();
                found = true;
                break;
            }
        }
        if !found {
            size += 1;
        }
    }
    out.push(cur.monic(q));
    out
}

/// All `k`-subsets of `0..n` in lexicographic order.
fn subsets(n: usize, k: usize) -> Vec<Vec<usize>> {
    let mut out = Vec::new();
    let mut cur = Vec::new();
    fn rec(start: usize, n: usize, k: usize, cur: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if cur.len() == k {
            out.push(cur.clone());
            return;
        }
        for i in start..n {
            cur.push(i);
            rec(i + 1, n, k, cur, out);
            cur.pop();
        }
    }
    rec(0, n, k, &mut cur, &mut out);
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use num_traits::ToPrimitive;

    #[test]
    fn primitive_part() {
        let q = Field::rational();
        let p = Poly::new(
            &q,
            vec![
                Elem::Q(BigRational::new(1.into(), 2.into())),
                Elem::Q(BigRational::new((-3).into(), 4.into())),
            ],
        );
        let z = to_primitive(&p);
        assert_eq!(z.iter().map(|c| c.to_i64().unwrap()).collect::<Vec<_>>(), vec![-2, 3]);
    }

    #[test]
    fn product_of_quadratics() {
        let q = Field::rational();
        let a = Poly::from_ints(&q, &[2, 0, 1]);
        let b = Poly::from_ints(&q, &[-3, 1, 1]);
        let c = Poly::from_ints(&q, &[5, 0, 0, 1]);
        let p = a.mul(&b, &q).mul(&c, &q).scale(&q.from_int(7), &q);
        let mut fac = factor(&p);
        fac.sort();
        assert_eq!(fac, vec![(a, 1), (b, 1), (c, 1)]);
    }
}
