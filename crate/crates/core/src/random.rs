//! Seeded generators for test instances.
//!
//! Commuting tuples are polynomials in one seed matrix, conjugated by a
//! product of at most four elementary matrices with entries in `[-3, 3]`.

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::algebra::{Elem, Field, MPoly, Mat, Poly, PolyRing};
use crate::algebra::matrix::companion;
use crate::milnor::RatFunc;
use crate::symbols::SymbolTuple;

pub type Gen = ChaCha8Rng;

pub fn rng(seed: u64) -> Gen {
    ChaCha8Rng::seed_from_u64(seed)
}

/// A nonzero element from the integers in `[-r, r]`.
pub fn nonzero(g: &mut Gen, k: &Field, r: i64) -> Elem {
    loop {
        let e = k.from_int(g.gen_range(-r..=r));
        if !k.is_zero(&e) {
            return e;
        }
    }
}

/// A nonzero element; over `Q` a fraction with numerator and denominator
/// bounded by `r`.
pub fn unit(g: &mut Gen, k: &Field, r: i64) -> Elem {
    if k.is_finite() {
        return nonzero(g, k, r);
    }
    let n = nonzero(g, k, r);
    let d = k.from_int(g.gen_range(1..=r));
    k.div(&n, &d).unwrap()
}

/// `U` and `U⁻¹` for a product of up to `steps` elementary matrices.
pub fn elementary_product(g: &mut Gen, k: &Field, n: usize, steps: usize) -> (Mat<Elem>, Mat<Elem>) {
    let mut u = Mat::identity(k, n);
    let mut ui = Mat::identity(k, n);
    if n < 2 {
        return (u, ui);
    }
    for _ in 0..g.gen_range(0..=steps) {
        let i = g.gen_range(0..n);
        let j = (i + g.gen_range(1..n)) % n;
        let c = k.from_int(g.gen_range(-3..=3));
        let mut e = Mat::identity(k, n);
        e.set(i, j, c.clone());
        let mut ei = Mat::identity(k, n);
        ei.set(i, j, k.neg(&c));
        u = u.mulm(&e, k);
        ui = ei.mulm(&ui, k);
    }
    (u, ui)
}

/// A random monic polynomial of degree `n` with nonzero constant term and
/// coefficients in `[-3, 3]`.
pub fn monic(g: &mut Gen, k: &Field, n: usize) -> Poly {
    loop {
        let mut c: Vec<Elem> = (0..n).map(|_| k.from_int(g.gen_range(-3..=3))).collect();
        c.push(k.one());
        if !k.is_zero(&c[0]) {
            return Poly::new(k, c);
        }
    }
}

/// Diagonal with nonzero entries, or the companion matrix of [`monic`].
pub fn seed_matrix(g: &mut Gen, k: &Field, n: usize) -> Mat<Elem> {
    if g.gen_bool(0.5) {
        let mut m = Mat::zeros(k, n, n);
        for i in 0..n {
            m.set(i, i, nonzero(g, k, 5));
        }
        m
    } else {
        let p = monic(g, k, n);
        companion(k, &p.padded(k, n + 1)[..n])
    }
}

/// `count` invertible commuting matrices.
pub fn commuting_family(g: &mut Gen, k: &Field, n: usize, count: usize) -> Vec<Mat<Elem>> {
    let m = seed_matrix(g, k, n);
    let (u, ui) = elementary_product(g, k, n, 4);
    (0..count)
        .map(|_| {
            let mut x = m.clone();
            for _ in 0..50 {
                let coeffs: Vec<Elem> = (0..n).map(|_| k.from_int(g.gen_range(-3..=3))).collect();
                let cand = m.eval_poly(&coeffs, k);
                if !k.is_zero(&cand.det_field(k)) {
                    x = cand;
                    break;
                }
            }
            u.mulm(&x, k).mulm(&ui, k)
        })
        .collect()
}

/// A `d = 0` tuple of `l` commuting `n x n` matrices.
pub fn tuple(g: &mut Gen, k: &Field, n: usize, l: usize) -> SymbolTuple {
    let mats = commuting_family(g, k, n, l).iter().map(|m| m.to_poly_matrix(k)).collect();
    SymbolTuple::new(k, 0, mats).unwrap()
}

/// A pair `(A, B)` of distinct monic polynomials of degree `n ≥ 3` with
/// `A(0) = B(0) ≠ 0` and `A(1) = B(1) ≠ 0`.
pub fn homotopy_pair(g: &mut Gen, k: &Field, n: usize) -> (Poly, Poly) {
    assert!(n >= 3);
    loop {
        let a = monic(g, k, n);
        if k.is_zero(&a.eval(&k.one(), k)) {
            continue;
        }
        let r: Vec<Elem> = (0..=n - 3).map(|_| k.from_int(g.gen_range(-3..=3))).collect();
        let r = Poly::new(k, r);
        if r.is_zero() {
            continue;
        }
        // λ(λ - 1) vanishes at 0 and 1
        let bump = Poly::from_ints(k, &[0, -1, 1]).mul(&r, k);
        let b = a.add(&bump, k);
        if b.degree() == Some(n) {
            return (a, b);
        }
    }
}

/// Which constraint an invalid pair breaks.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum PairDefect {
    RootProduct,
    OneMinusRootProduct,
    Both,
}

/// A pair breaking exactly the constraints named by the returned defect
/// (and no others), `n ≥ 2`.
pub fn invalid_homotopy_pair(g: &mut Gen, k: &Field, n: usize) -> (Poly, Poly, PairDefect) {
    let defect = match g.gen_range(0..3) {
        0 => PairDefect::RootProduct,
        1 => PairDefect::OneMinusRootProduct,
        _ => PairDefect::Both,
    };
    loop {
        let a = monic(g, k, n);
        let c = nonzero(g, k, 3);
        let shift = match defect {
            PairDefect::RootProduct => vec![k.neg(&c), c],
            PairDefect::OneMinusRootProduct => vec![k.zero(), c],
            PairDefect::Both => vec![c],
        };
        let b = a.add(&Poly::new(k, shift), k);
        let ok = [&a, &b].iter().all(|p| !k.is_zero(&p.eval(&k.zero(), k)) && !k.is_zero(&p.eval(&k.one(), k)));
        if ok {
            return (a, b, defect);
        }
    }
}

fn t_elementary_product(g: &mut Gen, k: &Field, n: usize, steps: usize) -> (Mat<MPoly>, Mat<MPoly>) {
    let r = PolyRing::new(k);
    let mut u = Mat::identity(&r, n);
    let mut ui = Mat::identity(&r, n);
    for _ in 0..g.gen_range(0..=steps) {
        let i = g.gen_range(0..n);
        let j = (i + g.gen_range(1..n)) % n;
        let mut c = MPoly::constant(k, k.from_int(g.gen_range(-3..=3)));
        if g.gen_bool(0.5) {
            c = c.mul(&MPoly::var0(k), k);
        }
        let mut e = Mat::identity(&r, n);
        e.set(i, j, c.clone());
        let mut ei = Mat::identity(&r, n);
        ei.set(i, j, c.neg(k));
        u = u.mulm(&e, &r);
        ui = ei.mulm(&ui, &r);
    }
    (u, ui)
}

/// A `d = 1` tuple of `3 x 3` matrices built from a companion homotopy
/// `θ(t)`: coordinates `c θ^a (1 - θ)^b`, conjugated by an elementary
/// product over `k[t]`.
pub fn tuple_d1(g: &mut Gen, k: &Field, l: usize) -> SymbolTuple {
    let r = PolyRing::new(k);
    let (a, b) = homotopy_pair(g, k, 3);
    let theta = crate::maps::build_companion_homotopy(k, &a, &b).unwrap().mats()[0].clone();
    let one_minus = Mat::identity(&r, 3).sub(&theta, &r).unwrap();
    let pw = |m: &Mat<MPoly>, e: i32| -> Mat<MPoly> {
        if e >= 0 {
            m.pow(e as u32, &r)
        } else {
            m.inverse_poly(k).unwrap().pow((-e) as u32, &r)
        }
    };
    let (u, ui) = t_elementary_product(g, k, 3, 3);
    let mats = (0..l)
        .map(|_| {
            let c = MPoly::constant(k, nonzero(g, k, 3));
            let m = pw(&theta, g.gen_range(-1..=2)).mulm(&pw(&one_minus, g.gen_range(-1..=1)), &r).scale(&c, &r);
            u.mulm(&m, &r).mulm(&ui, &r)
        })
        .collect();
    SymbolTuple::new(k, 1, mats).unwrap()
}

/// Coordinates of a random Steinberg symbol of weight `l`.
pub fn symbol_coords(g: &mut Gen, k: &Field, l: usize) -> Vec<Elem> {
    (0..l).map(|_| unit(g, k, 12)).collect()
}

/// A nonzero rational function with numerator and denominator of degree
/// at most `deg`.
pub fn ratfunc(g: &mut Gen, k: &Field, deg: usize) -> RatFunc {
    let mut poly = |monic: bool| loop {
        let d = g.gen_range(0..=deg);
        let mut c: Vec<Elem> = (0..=d).map(|_| k.from_int(g.gen_range(-4..=4))).collect();
        if monic {
            c[d] = k.one();
        }
        let p = Poly::new(k, c);
        if !p.is_zero() {
            return p;
        }
    };
    let n = poly(false);
    let d = poly(true);
    RatFunc::new(k, n, d).unwrap()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn families_commute_and_are_invertible() {
        for k in [Field::rational(), Field::prime(7).unwrap()] {
            let mut g = rng(3);
            for n in 1..=3 {
                let f = commuting_family(&mut g, &k, n, 3);
                for a in &f {
                    assert!(!k.is_zero(&a.det_field(&k)));
                    for b in &f {
                        assert!(a.commutes_with(b, &k));
                    }
                }
            }
        }
    }

    #[test]
    fn same_seed_same_output() {
        let k = Field::rational();
        let a = tuple(&mut rng(9), &k, 3, 2);
        let b = tuple(&mut rng(9), &k, 3, 2);
        assert_eq!(a, b);
    }

    #[test]
    fn d1_tuples_are_valid() {
        let k = Field::prime(7).unwrap();
        let mut g = rng(1);
        for _ in 0..5 {
            let t = tuple_d1(&mut g, &k, 2);
            assert_eq!(t.d(), 1);
        }
    }
}
