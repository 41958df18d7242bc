//! Move generators for the standard relations. Each helper appends moves to
//! a [`ProofBuilder`] whose net effect on the chain is stated in its doc
//! comment, and leaves the chain collected.
//!
//! Notation: `S(M)` is a [`Shape`] filled with `M`; `N(p, q)` is the block
//! matrix `[[0, 1], [-p, q]]`.

use super::builder::{at_time, block2, eye, zeros, MatOps, ProofBuilder, Shape, Slot};
use super::script::Side;
use crate::algebra::matrix::companion;
use crate::algebra::{Elem, Field, MPoly, Mat, PolyRing};
use crate::error::{Error, Result};
use crate::symbols::{Chain, Context, SymbolTuple};

impl Shape {
    /// Copy with slot `i` replaced.
    pub fn with(&self, i: usize, s: Slot) -> Shape {
        let mut out = self.clone();
        out.slots[i] = s;
        out
    }
}

fn n_mat(k: &Field, p: &Mat<MPoly>, q: &Mat<MPoly>) -> Mat<MPoly> {
    let o = MatOps(k);
    let n = p.rows();
    block2(&zeros(n), &eye(k, n), &o.neg(p), q)
}

// ---------------------------------------------------------------- d = 0

/// Adds `coef [S(φψ) - S(φ) - S(ψ)]` using the boundary of
/// `S(Θ(t))`, `Θ(t) = N(φψ, t(1 + φψ) + (1 - t)(φ + ψ))`.
pub fn theta_relation(b: &mut ProofBuilder, s: &Shape, phi: &Mat<MPoly>, psi: &Mat<MPoly>, coef: i64) -> Result<()> {
    let k = b.field().clone();
    let o = MatOps(&k);
    let n = phi.rows();
    let (i, z) = (eye(&k, n), zeros(n));
    let pp = o.mul(phi, psi);
    let t = o.t();
    let one_minus_t = o.int(1).sub(&t, &k);
    let sum1 = o.add(&i, &pp);
    let sum0 = o.add(phi, psi);
    let mid = o.add(&o.scale(&sum1, &t), &o.scale(&sum0, &one_minus_t));
    let side = if s.has_fixed() {
        Side::Z1
    } else if s.var_count() >= 2 {
        Side::Z2
    } else {
        return Err(Error::Context("multiplicativity needs l >= 2".into()));
    };
    let w = s.tuple(1, &[n_mat(&k, &pp, &mid)])?;
    b.add_boundary(coef, side, Chain::single(w))?;
    let th1 = s.tuple(0, &[n_mat(&k, &pp, &sum1)])?;
    let u = b.conjugate(&th1, &block2(&i, &z, &o.neg(&i), &i))?;
    b.blocksplit(&u, &[n, n])?;
    let th0 = s.tuple(0, &[n_mat(&k, &pp, &sum0)])?;
    let u = b.conjugate(&th0, &block2(&i, &z, &o.neg(psi), &i))?;
    b.blocksplit(&u, &[n, n])?;
    b.collect()
}

/// Adds `coef [(.., θi@i, .., θj@j, ..) + (.., θj@i, .., θi@j, ..)]`.
/// `s` must have `Slot::Var` at `i` and `j` and fixed slots elsewhere.
pub fn skew(b: &mut ProofBuilder, s: &Shape, i: usize, j: usize, ti: &Mat<MPoly>, tj: &Mat<MPoly>, coef: i64) -> Result<()> {
    skew_with(b, s, i, j, ti, tj, coef, &mut |b, s, p, q, c| theta_relation(b, s, p, q, c))
}

/// [`skew`] at `d = 1` for entries equal at both ends.
pub fn skew_d1(b: &mut ProofBuilder, s: &Shape, i: usize, j: usize, ti: &Mat<MPoly>, tj: &Mat<MPoly>, coef: i64) -> Result<()> {
    skew_with(b, s, i, j, ti, tj, coef, &mut |b, s, p, q, c| mult_relation(b, s, p, q, None, c))
}

type Relation<'r> = dyn FnMut(&mut ProofBuilder, &Shape, &Mat<MPoly>, &Mat<MPoly>, i64) -> Result<()> + 'r;

#[allow(clippy::too_many_arguments)]
fn skew_with(
    b: &mut ProofBuilder,
    s: &Shape,
    i: usize,
    j: usize,
    ti: &Mat<MPoly>,
    tj: &Mat<MPoly>,
    coef: i64,
    rel: &mut Relation<'_>,
) -> Result<()> {
    let k = b.field().clone();
    let o = MatOps(&k);
    let both = s.with(i, Slot::Var(0)).with(j, Slot::Var(0));
    rel(b, &both, ti, tj, coef)?;
    let prod = o.mul(ti, tj);
    rel(b, &both.with(j, Slot::Fixed(prod)), ti, tj, -coef)?;
    rel(b, &both.with(i, Slot::Fixed(ti.clone())), ti, tj, -coef)?;
    rel(b, &both.with(i, Slot::Fixed(tj.clone())), ti, tj, -coef)
}

/// Adds `coef (.., -θ@i, .., θ@j, ..)`.
pub fn negation(b: &mut ProofBuilder, s: &Shape, i: usize, j: usize, theta: &Mat<MPoly>, coef: i64) -> Result<()> {
    let k = b.field().clone();
    let o = MatOps(&k);
    let n = theta.rows();
    let (id, z) = (eye(&k, n), zeros(n));
    let neg = o.neg(theta);
    let base = s.with(i, Slot::Fixed(neg.clone())).with(j, Slot::Var(0));
    let nt = n_mat(&k, theta, &o.scale(&o.add(theta, &id), &o.t()));
    b.add_boundary(coef, Side::Z1, Chain::single(base.tuple(1, &[nt])?))?;
    let n1 = base.tuple(0, &[n_mat(&k, theta, &o.add(theta, &id))])?;
    let u = b.conjugate(&n1, &block2(&id, &z, &neg, &id))?;
    b.blocksplit(&u, &[n, n])?;
    // what remains is -coef (-θ ⊕ -θ, N0) with N0² = -θ ⊕ -θ
    let n0 = n_mat(&k, theta, &zeros(n));
    let sq = s.with(i, Slot::Var(0)).with(j, Slot::Fixed(n0.clone()));
    theta_relation(b, &sq, &n0, &n0, coef)?;
    skew(b, &s.with(i, Slot::Var(0)).with(j, Slot::Var(0)), i, j, &n0, &n0, coef)
}

/// Rows `r, rM, ..., rM^(d-1)` for each factor `f` (with `r` in the left
/// kernel of `f(M)`), stacked: a conjugator taking `M` to a block diagonal
/// matrix of companion blocks.
pub fn splitting_conjugator(k: &Field, m: &Mat<Elem>, factors: &[Vec<Elem>]) -> Result<Mat<Elem>> {
    let mut rows: Vec<Vec<Elem>> = Vec::new();
    for f in factors {
        let d = f.len() - 1;
        let fm = m.eval_poly(f, k);
        let ker = fm.transpose().kernel(k);
        let mut candidates = ker.clone();
        if ker.len() > 1 {
            candidates.push(ker.iter().skip(1).fold(ker[0].clone(), |acc, v| acc.iter().zip(v).map(|(a, b)| k.add(a, b)).collect()));
        }
        let mut found = false;
        for r0 in candidates {
            let mut block = vec![r0.clone()];
            for _ in 1..d {
                let last = Mat::from_rows(vec![block.last().unwrap().clone()])?;
                block.push(last.mul(m, k)?.row(0).to_vec());
            }
            let mut trial = rows.clone();
            trial.extend(block.iter().cloned());
            if Mat::from_rows(trial.clone())?.rank(k) == trial.len() {
                rows = trial;
                found = true;
                break;
            }
        }
        if !found {
            return Err(Error::Context("no cyclic vector for a factor".into()));
        }
    }
    Mat::from_rows(rows)
}

fn scalar_mat(k: &Field, c: &Elem) -> Mat<MPoly> {
    Mat::from_rows(vec![vec![MPoly::constant(k, c.clone())]]).unwrap()
}

fn elem_mat(k: &Field, rows: Vec<Vec<Elem>>) -> Mat<MPoly> {
    Mat::from_rows(rows).unwrap().to_poly_matrix(k)
}

/// Adds `coef [(.., b@i, .., 1-b@j, ..) - (.., a@i, .., 1-a@j, ..)]` for
/// scalars `a, b ∉ {0, 1}` with `b ≠ a²` and `a ≠ b²`; the other slots of
/// `s` must be fixed `1 x 1` matrices.
pub fn steinberg(b: &mut ProofBuilder, s: &Shape, i: usize, j: usize, a: &Elem, bb: &Elem, coef: i64) -> Result<()> {
    let k = b.field().clone();
    let o = MatOps(&k);
    let r = PolyRing::new(&k);
    let one = k.one();
    let bad = |x: &Elem| k.is_zero(x) || k.is_one(x);
    if bad(a) || bad(bb) || *bb == k.mul(a, a) || *a == k.mul(bb, bb) {
        return Err(Error::Context("steinberg relation needs a, b outside {0,1}, b != a^2, a != b^2".into()));
    }
    let s2 = s.with(i, Slot::Var(0)).with(j, Slot::Var(1));
    // (λ - x)(λ² - y) = λ³ - xλ² - yλ + xy
    let lower = |x: &Elem, y: &Elem| [k.mul(x, y), k.neg(y), k.neg(x)];
    let (p0, p1) = (lower(a, bb), lower(bb, a));
    let t = o.t();
    let omt = o.int(1).sub(&t, &k);
    let coeffs: Vec<MPoly> = (0..3)
        .map(|c| MPoly::constant(&k, p0[c].clone()).mul(&omt, &k).add(&MPoly::constant(&k, p1[c].clone()).mul(&t, &k), &k))
        .collect();
    let theta = companion(&r, &coeffs);
    let id3 = eye(&k, 3);
    let w = s2.tuple(1, &[theta.clone(), o.sub(&id3, &theta)])?;
    b.add_boundary(2 * coef, Side::Z3, Chain::single(w))?;
    // faces: split off the linear factor and the quadratic companion block
    for (face, lin, quad) in [(1, bb, a), (0, a, bb)] {
        let m = at_time(&k, &theta, &o.int(face)).as_constant(&k).unwrap();
        let f_lin = vec![k.neg(lin), one.clone()];
        let f_quad = vec![k.neg(quad), k.zero(), one.clone()];
        let g = splitting_conjugator(&k, &m, &[f_lin, f_quad])?.to_poly_matrix(&k);
        let mp = m.to_poly_matrix(&k);
        let u = b.conjugate(&s2.tuple(0, &[mp.clone(), o.sub(&id3, &mp)])?, &g)?;
        b.blocksplit(&u, &[1, 2])?;
    }
    // now 2c (b, 1-b) + 2c (X_a, 1 - X_a) - 2c (a, 1-a) - 2c (X_b, 1 - X_b)
    for x in [bb, a] {
        let pair = s.with(i, Slot::Fixed(scalar_mat(&k, x))).with(j, Slot::Var(0));
        b.dsum(&pair.tuple(0, &[scalar_mat(&k, &k.sub(&one, x))])?, 2)?;
    }
    for (x, sign) in [(a, 1), (bb, -1)] {
        let xm = elem_mat(&k, vec![vec![k.zero(), one.clone()], vec![x.clone(), k.zero()]]);
        let ym = o.sub(&eye(&k, 2), &xm);
        theta_relation(b, &s.with(i, Slot::Var(0)).with(j, Slot::Fixed(ym)), &xm, &xm, sign * coef)?;
    }
    for (x, sign) in [(bb, 1), (a, -1)] {
        let c = sign * coef;
        let xs = scalar_mat(&k, x);
        let one_minus = k.sub(&one, x);
        let pair = s.with(i, Slot::Fixed(xs.clone())).with(j, Slot::Var(0));
        // (x, (1-x)·1) - (x, Y) = (x, F) with F = [[1,1],[x,1]], FY = (1-x)
        let f = elem_mat(&k, vec![vec![one.clone(), one.clone()], vec![x.clone(), one.clone()]]);
        let y = elem_mat(&k, vec![vec![one.clone(), k.neg(&one)], vec![k.neg(x), one.clone()]]);
        theta_relation(b, &pair, &f, &y, -c)?;
        let inv = k.inv(&one_minus).unwrap();
        let p = elem_mat(&k, vec![vec![k.neg(&k.mul(x, &inv)), inv.clone()], vec![k.zero(), one.clone()]]);
        let u = b.conjugate(&pair.tuple(0, &[f])?, &p)?;
        // u = (x, [[0,1],[x-1,2]]); move the 2 to 2 - x along t
        let xm1 = MPoly::constant(&k, k.sub(x, &one));
        let two = o.int(2);
        let corner = MPoly::constant(&k, k.sub(&k.from_int(2), x)).mul(&t, &k).add(&two.mul(&omt, &k), &k);
        let path = Mat::from_rows(vec![vec![MPoly::zero(), o.int(1)], vec![xm1.clone(), corner]])?;
        b.add_boundary(c, Side::Z1, Chain::single(pair.tuple(1, std::slice::from_ref(&path))?))?;
        if u != pair.tuple(0, &[at_time(&k, &path, &MPoly::zero())])? {
            return Err(Error::Context("steinberg: unexpected conjugate".into()));
        }
        let end = at_time(&k, &path, &o.int(1));
        let g = Mat::from_rows(vec![vec![o.int(1), MPoly::zero()], vec![xm1, o.int(1)]])?;
        let v = b.conjugate(&pair.tuple(0, &[end])?, &g)?;
        b.blocksplit(&v, &[1, 1])?;
    }
    b.collect()
}

// ---------------------------------------------------------------- d = 1

fn wctx(b: &ProofBuilder) -> Context {
    Context { d: 2, ..b.ctx().clone() }
}

/// `t ↦ y` on a matrix over `k[t]`.
fn to_y(k: &Field, m: &Mat<MPoly>) -> Mat<MPoly> {
    m.substitute(&MPoly::var1(k), &MPoly::zero(), k)
}

/// Witness with `∂₂ = S(N(p, 0)) - S(N(p, t(1-t)q))`.
pub fn w3(b: &ProofBuilder, s: &Shape, p: &Mat<MPoly>, q: &Mat<MPoly>) -> Result<Chain> {
    let k = b.field().clone();
    let o = MatOps(&k);
    let xy = MPoly::var0(&k).mul(&MPoly::var1(&k), &k);
    let sy = s.map_fixed(|m| to_y(&k, m));
    let w = sy.tuple(2, &[n_mat(&k, &to_y(&k, p), &o.scale(&to_y(&k, q), &xy))])?;
    let p0 = at_time(&k, p, &MPoly::zero());
    let c = s.at(&MPoly::zero()).tuple(2, &[n_mat(&k, &p0, &zeros(p.rows()))])?;
    Chain::new(&wctx(b), vec![(-1, w), (1, c)])
}

/// Witness with `∂₂ = S(N(p, tq)) - S_0(N(p(0), t q(0))) - S(N(p, q))`.
pub fn w4(b: &ProofBuilder, s: &Shape, p: &Mat<MPoly>, q: &Mat<MPoly>) -> Result<Chain> {
    let k = b.field().clone();
    let o = MatOps(&k);
    let x_plus_y = MPoly::var0(&k).add(&MPoly::var1(&k), &k);
    let sy = s.map_fixed(|m| to_y(&k, m));
    let w = sy.tuple(2, &[n_mat(&k, &to_y(&k, p), &o.scale(&to_y(&k, q), &x_plus_y))])?;
    Chain::new(&wctx(b), vec![(-1, w)])
}

/// Witness with `∂₂ = -T(1-t) - T(t)`.
pub fn w_reflect(b: &ProofBuilder, t: &SymbolTuple) -> Result<Chain> {
    Chain::new(&wctx(b), vec![(-1, t.with_degree(2)?), (-1, t.at(0).with_degree(2)?)])
}

/// The pair `(L1, L0)` of constant-coefficient end terms:
/// `L_e = S_e(N(p(e), t q(e)))`.
pub fn end_terms(b: &ProofBuilder, s: &Shape, p: &Mat<MPoly>, q: &Mat<MPoly>) -> Result<(SymbolTuple, SymbolTuple)> {
    let k = b.field().clone();
    let o = MatOps(&k);
    let end = |e: i64| -> Result<SymbolTuple> {
        let ev = o.int(e);
        let pe = at_time(&k, p, &ev);
        let qe = o.scale(&at_time(&k, q, &ev), &o.t());
        s.at(&ev).tuple(1, &[n_mat(&k, &pe, &qe)])
    };
    Ok((end(1)?, end(0)?))
}

/// Adds `coef [S(N(p, 0)) + L1 - L0 - S(N(p, q))]`, built from `w4`, a
/// reflection, minus the same pair on the data at `1 - t`, and `w3`.
pub fn sigma(b: &mut ProofBuilder, s: &Shape, p: &Mat<MPoly>, q: &Mat<MPoly>, coef: i64) -> Result<()> {
    let k = b.field().clone();
    let o = MatOps(&k);
    let t = o.t();
    let omt = o.int(1).sub(&t, &k);
    let w = w4(b, s, p, q)?;
    b.add_boundary(coef, Side::Any, w)?;
    let tq = s.tuple(1, &[n_mat(&k, p, &o.scale(q, &t))])?;
    let w = w_reflect(b, &tq)?;
    b.add_boundary(coef, Side::Any, w)?;
    // primed data: p(1-t), (1-t) q(1-t), θ(1-t)
    let sp = s.at(&omt);
    let pp = at_time(&k, p, &omt);
    let qp = o.scale(&at_time(&k, q, &omt), &omt);
    let w = w4(b, &sp, &pp, &qp)?;
    b.add_boundary(-coef, Side::Any, w)?;
    let t2 = sp.tuple(1, &[n_mat(&k, &pp, &o.scale(&qp, &t))])?;
    let w = w_reflect(b, &t2)?;
    b.add_boundary(-coef, Side::Any, w)?;
    let w = w3(b, s, p, q)?;
    b.add_boundary(coef, Side::Any, w)?;
    b.collect()
}

/// Adds `coef [S(N(p, qb)) - S(N(p, qa))]`, given `sc` with
/// `sc X(0) sc⁻¹ = X(1)` for `p`, `qa`, `qb` and every fixed slot (or
/// `None` when those are equal at both ends).
pub fn claim(
    b: &mut ProofBuilder,
    s: &Shape,
    p: &Mat<MPoly>,
    qa: &Mat<MPoly>,
    qb: &Mat<MPoly>,
    sc: Option<&Mat<MPoly>>,
    coef: i64,
) -> Result<()> {
    let k = b.field().clone();
    let o = MatOps(&k);
    for (q, c) in [(qa, coef), (qb, -coef)] {
        sigma(b, s, p, q, c)?;
        if let Some(sc) = sc {
            let (l1, _) = end_terms(b, s, p, q)?;
            let si = o.inv(sc);
            b.conjugate(&l1, &block2(&si, &zeros(si.rows()), &zeros(si.rows()), &si))?;
            b.collect()?;
        }
    }
    Ok(())
}

/// Adds `coef [S(φψ) - S(φ) - S(ψ)]` at `d = 1` (multilinearity); `sc`
/// as in [`claim`].
pub fn mult_relation(
    b: &mut ProofBuilder,
    s: &Shape,
    phi: &Mat<MPoly>,
    psi: &Mat<MPoly>,
    sc: Option<&Mat<MPoly>>,
    coef: i64,
) -> Result<()> {
    let k = b.field().clone();
    let o = MatOps(&k);
    let n = phi.rows();
    let (id, z) = (eye(&k, n), zeros(n));
    let upper = s.tuple(1, &[block2(psi, &id, &z, phi)])?;
    b.insert_pair(coef, &upper)?;
    b.blocksplit(&upper, &[n, n])?;
    let u = b.conjugate(&upper, &block2(&id, &z, psi, &id))?;
    let _ = u;
    let p = o.mul(phi, psi);
    let qa = o.add(phi, psi);
    let qb = o.add(&id, &p);
    claim(b, s, &p, &qa, &qb, sc, coef)?;
    let nb = s.tuple(1, &[n_mat(&k, &p, &qb)])?;
    let v = b.conjugate(&nb, &block2(&id, &z, &o.neg(&id), &id))?;
    b.blocksplit(&v, &[n, n])?;
    b.collect()
}
