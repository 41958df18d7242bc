//! Cantor-Zassenhaus factorization over finite fields.

use num_bigint::BigUint;
use num_traits::One;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use crate::algebra::field::Field;
use crate::algebra::poly::Poly;

const SEED: u64 = 0x5eed_f00d;

pub(super) fn factor(f: &Field, p: &Poly) -> Vec<(Poly, usize)> {
    let mut rng = ChaCha8Rng::seed_from_u64(SEED);
    let q = f.size().unwrap();
    let mut out: Vec<(Poly, usize)> = Vec::new();
    for (sqf, mult) in squarefree(f, &q, p) {
        for (g, d) in distinct_degree(f, &q, &sqf) {
            for h in equal_degree(f, &q, &g, d, &mut rng) {
                match out.iter_mut().find(|(x, _)| *x == h) {
                    Some(entry) => entry.1 += mult,
                    None => out.push((h, mult)),
                }
            }
        }
    }
    out
}

/// Square-free decomposition in characteristic `p`: `(a, i)` with each `a`
/// square-free and `p = prod a^i`.
fn squarefree(f: &Field, q: &BigUint, p: &Poly) -> Vec<(Poly, usize)> {
    let ch = f.characteristic() as usize;
    let mut out = Vec::new();
    let dp = p.derivative(f);
    let mut c = p.gcd(&dp, f);
    let mut w = p.quo(&c, f);
    let mut i = 1;
    while w.degree().unwrap_or(0) > 0 {
        let y = w.gcd(&c, f);
        let fac = w.quo(&y, f);
        if fac.degree().unwrap_or(0) > 0 {
            out.push((fac, i));
        }
        i += 1;
        w = y;
        c = c.quo(&w, f);
    }
    if c.degree().unwrap_or(0) > 0 {
        let root = pth_root(f, q, &c);
        for (g, m) in squarefree(f, q, &root) {
            out.push((g, m * ch));
        }
    }
    out
}

/// `c^(1/p)` for a polynomial whose exponents are all multiples of `p`.
fn pth_root(f: &Field, q: &BigUint, c: &Poly) -> Poly {
    let ch = f.characteristic() as usize;
    // a^(1/p) = a^(q/p) in F_q
    let e = q / BigUint::from(ch as u64);
    let v = c
        .coeffs()
        .iter()
        .step_by(ch)
        .map(|a| f.pow_big(a, &e))
        .collect();
    Poly::new(f, v)
}

/// Pairs `(g, d)` where `g` is the product of all degree-`d` irreducible
/// factors of the square-free monic `p`.
fn distinct_degree(f: &Field, q: &BigUint, p: &Poly) -> Vec<(Poly, usize)> {
    let mut out = Vec::new();
    let mut rest = p.clone();
    let x = Poly::x(f);
    let mut h = x.clone();
    let mut d = 0;
    while rest.degree().unwrap_or(0) > 0 {
        d += 1;
        if 2 * d > rest.degree().unwrap() {
            out.push((rest.clone(), rest.degree().unwrap()));
            break;
        }
        h = h.powmod(q, &rest, f);
        let g = h.sub(&x, f).gcd(&rest, f);
        if g.degree().unwrap_or(0) > 0 {
            rest = rest.quo(&g, f);
            h = h.rem(&rest, f);
            out.push((g, d));
        }
    }
    out
}

/// Split a product of distinct monic irreducibles of degree `d`.
fn equal_degree(f: &Field, q: &BigUint, g: &Poly, d: usize, rng: &mut ChaCha8Rng) -> Vec<Poly> {
    let n = g.degree().unwrap();
    if n == d {
        return vec![g.clone()];
    }
    let qd = q.pow(d as u32);
    let ch = f.characteristic();
    loop {
        let a = random_poly(f, n, rng);
        if a.degree().unwrap_or(0) == 0 {
            continue;
        }
        let b = if ch == 2 {
            // trace map a + a^2 + ... + a^(2^(m-1)), q^d = 2^m
            let m = qd.bits() - 1;
            let mut acc = a.rem(g, f);
            let mut cur = acc.clone();
            for _ in 1..m {
                cur = cur.mul(&cur, f).rem(g, f);
                acc = acc.add(&cur, f);
            }
            acc
        } else {
            let e = (&qd - BigUint::one()) / BigUint::from(2u32);
            a.powmod(&e, g, f).sub(&Poly::one(f), f)
        };
        let h = b.gcd(g, f);
        let hd = h.degree().unwrap_or(0);
        if hd > 0 && hd < n {
            let mut out = equal_degree(f, q, &h, d, rng);
            out.extend(equal_degree(f, q, &g.quo(&h, f), d, rng));
            return out;
        }
    }
}

fn random_poly(f: &Field, n: usize, rng: &mut ChaCha8Rng) -> Poly {
    Poly::new(f, (0..n).map(|_| f.random_elem(rng, 1)).collect())
}
