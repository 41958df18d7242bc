//! The bundled certificate corpus, generated by replaying the relation
//! helpers on concrete instances.

use super::builder::{at_time, block2, eye, int_mat, zeros, MatOps, ProofBuilder, Shape, Slot};
use super::relations::{
    claim, end_terms, mult_relation, negation, sigma, skew, skew_d1, splitting_conjugator, steinberg, theta_relation, w3, w4,
    w_reflect,
};
use super::script::{CertificateScript, Side};
use crate::algebra::{Field, MPoly, Mat, PolyRing};
use crate::algebra::matrix::companion;
use crate::error::Result;
use crate::symbols::{Chain, Context, SymbolTuple};

fn scal(k: &Field, c: i64) -> Mat<MPoly> {
    int_mat(k, &[&[c]])
}

fn ctx(k: &Field, d: usize, l: usize) -> Context {
    Context { field: k.clone(), d, l }
}

fn chain(c: &Context, terms: Vec<(i64, Vec<Mat<MPoly>>)>) -> Result<Chain> {
    let terms = terms
        .into_iter()
        .map(|(n, m)| Ok((n, SymbolTuple::new(&c.field, c.d, m)?)))
        .collect::<Result<Vec<_>>>()?;
    Chain::new(c, terms)
}

/// Integer scalar chain at `d = 0`.
fn ints(k: &Field, l: usize, terms: &[(i64, &[i64])]) -> Result<Chain> {
    let c = ctx(k, 0, l);
    chain(&c, terms.iter().map(|(n, v)| (*n, v.iter().map(|&x| scal(k, x)).collect())).collect())
}

fn q() -> Field {
    Field::rational()
}

fn f7() -> Field {
    Field::prime(7).unwrap()
}

/// `[[ψ,1],[0,φ]]` from `N(φψ, φ+ψ)`, then the blocks.
fn upper_split(name: &str, k: &Field, phi: &Mat<MPoly>, psi: &Mat<MPoly>) -> Result<CertificateScript> {
    let o = MatOps(k);
    let n = phi.rows();
    let (i, z) = (eye(k, n), zeros(n));
    let nn = block2(&z, &i, &o.neg(&o.mul(phi, psi)), &o.add(phi, psi));
    let c = ctx(k, 0, 1);
    let start = chain(&c, vec![(1, vec![nn.clone()])])?;
    let mut b = ProofBuilder::new(name, start);
    b.note("N(pq, p+q) is conjugate to [[q,1],[0,p]]");
    let u = b.conjugate(&SymbolTuple::new(k, 0, vec![nn])?, &block2(&i, &z, &o.neg(psi), &i))?;
    b.blocksplit(&u, &[n, n])?;
    b.collect()?;
    let blocks = [psi, phi].into_iter().filter(|m| **m != i).map(|m| (1, vec![m.clone()])).collect();
    let goal = chain(&c, blocks)?;
    Ok(b.finish(goal))
}

fn identities() -> Result<Vec<CertificateScript>> {
    let k = q();
    let f = f7();
    let phi = int_mat(&f, &[&[0, 1], &[3, 1]]);
    let psi = int_mat(&f, &[&[1, 1], &[3, 2]]);
    let one = eye(&f, 2);
    Ok(vec![
        upper_split("identity-eq1", &k, &scal(&k, 2), &scal(&k, 3))?,
        upper_split("identity-eq2", &k, &scal(&k, 6), &scal(&k, 1))?,
        upper_split("identity-eq1-f7", &f, &phi, &psi)?,
        upper_split("identity-eq2-f7", &f, &MatOps(&f).mul(&phi, &psi), &one)?,
    ])
}

fn lemma_i() -> Result<Vec<CertificateScript>> {
    let k = q();
    let mut out = Vec::new();
    let mut b = ProofBuilder::new("lemma2.4.i", Chain::zero(&ctx(&k, 0, 2)));
    b.note("multiplicativity in the first coordinate");
    theta_relation(&mut b, &Shape::main_at(&k, 0, &[scal(&k, 5)]), &scal(&k, 2), &scal(&k, 3), 1)?;
    out.push(b.finish(ints(&k, 2, &[(1, &[6, 5]), (-1, &[2, 5]), (-1, &[3, 5])])?));

    let mut b = ProofBuilder::new("lemma2.4.i-pos2", Chain::zero(&ctx(&k, 0, 2)));
    theta_relation(&mut b, &Shape::main_at(&k, 1, &[scal(&k, 5)]), &scal(&k, 2), &scal(&k, 3), 1)?;
    out.push(b.finish(ints(&k, 2, &[(1, &[5, 6]), (-1, &[5, 2]), (-1, &[5, 3])])?));

    let f = f7();
    let o = MatOps(&f);
    let phi = int_mat(&f, &[&[0, 1], &[3, 1]]);
    let psi = int_mat(&f, &[&[1, 1], &[3, 2]]);
    let th = int_mat(&f, &[&[3, 1], &[3, 4]]);
    let c = ctx(&f, 0, 2);
    let mut b = ProofBuilder::new("lemma2.4.i-f7", Chain::zero(&c));
    theta_relation(&mut b, &Shape::main_at(&f, 0, std::slice::from_ref(&th)), &phi, &psi, 1)?;
    let goal = chain(&c, vec![(1, vec![o.mul(&phi, &psi), th.clone()]), (-1, vec![phi, th.clone()]), (-1, vec![psi, th])])?;
    out.push(b.finish(goal));
    Ok(out)
}

fn lemma_ii() -> Result<Vec<CertificateScript>> {
    let k = q();
    let (two, three) = (scal(&k, 2), scal(&k, 3));
    let mut b = ProofBuilder::new("lemma2.4.ii", Chain::zero(&ctx(&k, 0, 2)));
    b.note("skew-symmetry from four multiplicativity relations");
    skew(&mut b, &Shape::new(&k, vec![Slot::Var(0), Slot::Var(0)]), 0, 1, &two, &three, 1)?;
    let first = b.finish(ints(&k, 2, &[(1, &[2, 3]), (1, &[3, 2])])?);
    let mut b = ProofBuilder::new("lemma2.4.ii-l3", Chain::zero(&ctx(&k, 0, 3)));
    let s = Shape::new(&k, vec![Slot::Var(0), Slot::Fixed(scal(&k, 7)), Slot::Var(0)]);
    skew(&mut b, &s, 0, 2, &two, &three, 1)?;
    let second = b.finish(ints(&k, 3, &[(1, &[2, 7, 3]), (1, &[3, 7, 2])])?);
    Ok(vec![first, second])
}

fn lemma_iii() -> Result<Vec<CertificateScript>> {
    let k = q();
    let mut b = ProofBuilder::new("lemma2.4.iii", Chain::zero(&ctx(&k, 0, 2)));
    negation(&mut b, &Shape::new(&k, vec![Slot::Var(0), Slot::Var(0)]), 0, 1, &scal(&k, 3), 1)?;
    Ok(vec![b.finish(ints(&k, 2, &[(1, &[-3, 3])])?)])
}

fn lemma_iv() -> Result<Vec<CertificateScript>> {
    let mut out = Vec::new();
    let k = q();
    let vv = Shape::new(&k, vec![Slot::Var(0), Slot::Var(0)]);
    let mut b = ProofBuilder::new("lemma2.4.iv", Chain::zero(&ctx(&k, 0, 2)));
    b.note("Steinberg relations are homologous to each other");
    steinberg(&mut b, &vv, 0, 1, &k.from_int(2), &k.from_int(-1), 1)?;
    out.push(b.finish(ints(&k, 2, &[(1, &[-1, 2]), (-1, &[2, -1])])?));

    let s = Shape::new(&k, vec![Slot::Fixed(scal(&k, 7)), Slot::Var(0), Slot::Var(0)]);
    let mut b = ProofBuilder::new("lemma2.4.iv-l3", Chain::zero(&ctx(&k, 0, 3)));
    steinberg(&mut b, &s, 1, 2, &k.from_int(2), &k.from_int(-1), 1)?;
    out.push(b.finish(ints(&k, 3, &[(1, &[7, -1, 2]), (-1, &[7, 2, -1])])?));

    let f = f7();
    let vv = Shape::new(&f, vec![Slot::Var(0), Slot::Var(0)]);
    let mut b = ProofBuilder::new("lemma2.4.iv-f7", Chain::zero(&ctx(&f, 0, 2)));
    steinberg(&mut b, &vv, 0, 1, &f.from_int(3), &f.from_int(5), 1)?;
    out.push(b.finish(ints(&f, 2, &[(1, &[5, 3]), (-1, &[3, 5])])?));
    Ok(out)
}

fn direct_sums() -> Result<Vec<CertificateScript>> {
    let k = q();
    let start = ints(&k, 2, &[(1, &[2, 5]), (1, &[3, 7])])?;
    let mut b = ProofBuilder::new("cor2.5", start);
    b.note("sum of two symbols as one block diagonal symbol");
    let t = |x: i64, y: i64| SymbolTuple::new(&k, 0, vec![scal(&k, x), scal(&k, y)]).unwrap();
    b.merge(&t(2, 5), &t(3, 7))?;
    let c = ctx(&k, 0, 2);
    let goal = chain(&c, vec![(1, vec![int_mat(&k, &[&[2, 0], &[0, 3]]), int_mat(&k, &[&[5, 0], &[0, 7]])])])?;
    Ok(vec![b.finish(goal)])
}

/// `2 (θ(t), 1 - θ(t))` with `θ` the companion matrix of
/// `(1-t)(λ-e²)(λ²-α) + t(λ²-e²)(λ-α)`.
fn basic_boundary(b: &mut ProofBuilder, e: i64, alpha: i64) -> Result<()> {
    let k = b.field().clone();
    let o = MatOps(&k);
    let r = PolyRing::new(&k);
    let t = o.t();
    let c = |a: i64, bb: i64| o.int(a).add(&o.int(bb - a).mul(&t, &k), &k);
    let e2 = e * e;
    let lower = vec![c(e2 * alpha, e2 * alpha), c(-alpha, -e2), c(-e2, -alpha)];
    let theta = companion(&r, &lower);
    let s = Shape::new(&k, vec![Slot::Var(0), Slot::Var(1)]);
    let id = eye(&k, 3);
    b.add_boundary(2, Side::Z3, Chain::single(s.tuple(1, &[theta.clone(), o.sub(&id, &theta)])?))?;
    let f = |c: &[i64]| c.iter().map(|&x| k.from_int(x)).collect::<Vec<_>>();
    let faces: [(i64, Vec<Vec<_>>, Vec<usize>); 2] = [
        (1, vec![f(&[e, 1]), f(&[-e, 1]), f(&[-alpha, 1])], vec![1, 1, 1]),
        (0, vec![f(&[-e2, 1]), f(&[-alpha, 0, 1])], vec![1, 2]),
    ];
    for (face, factors, sizes) in faces {
        let m = at_time(&k, &theta, &o.int(face));
        let g = splitting_conjugator(&k, &m.as_constant(&k).unwrap(), &factors)?.to_poly_matrix(&k);
        let u = b.conjugate(&s.tuple(0, &[m.clone(), o.sub(&id, &m)])?, &g)?;
        b.blocksplit(&u, &sizes)?;
    }
    b.collect()
}

fn prop27() -> Result<Vec<CertificateScript>> {
    let k = q();
    let c = ctx(&k, 0, 2);
    let mut b = ProofBuilder::new("prop2.7-dz", Chain::zero(&c));
    b.note("the boundary of a basic element with e = 2, alpha = 3");
    basic_boundary(&mut b, 2, 3)?;
    let xa = int_mat(&k, &[&[0, 1], &[3, 0]]);
    let ya = int_mat(&k, &[&[1, -1], &[-3, 1]]);
    let mut goal = ints(&k, 2, &[(2, &[-2, 3]), (2, &[2, -1]), (2, &[3, -2]), (-2, &[4, -3])])?;
    goal.push(-2, SymbolTuple::new(&k, 0, vec![xa, ya])?)?;
    let first = b.finish(goal);

    let mut b = ProofBuilder::new("prop2.7", Chain::zero(&c));
    b.note("a Steinberg symbol lies in the boundary of Z");
    let vv = Shape::new(&k, vec![Slot::Var(0), Slot::Var(0)]);
    let s = |x: i64| scal(&k, x);
    steinberg(&mut b, &vv, 0, 1, &k.from_int(4), &k.from_int(3), 1)?;
    theta_relation(&mut b, &Shape::main_at(&k, 1, &[s(4)]), &s(-1), &s(3), 1)?;
    theta_relation(&mut b, &Shape::main_at(&k, 0, &[s(-1)]), &s(2), &s(2), 1)?;
    theta_relation(&mut b, &Shape::main_at(&k, 0, &[s(3)]), &s(-2), &s(-2), 1)?;
    skew(&mut b, &vv, 0, 1, &s(2), &s(-1), 1)?;
    steinberg(&mut b, &vv, 0, 1, &k.from_int(2), &k.from_int(-1), -1)?;
    skew(&mut b, &vv, 0, 1, &s(-2), &s(3), 1)?;
    steinberg(&mut b, &vv, 0, 1, &k.from_int(-2), &k.from_int(3), -1)?;
    let second = b.finish(ints(&k, 2, &[(1, &[3, -2])])?);
    Ok(vec![first, second])
}

// ---------------------------------------------------------------- d = 1

fn pmat(rows: Vec<Vec<MPoly>>) -> Mat<MPoly> {
    Mat::from_rows(rows).unwrap()
}

/// Companion matrix of `λ² - t λ - 1`.
fn swing(k: &Field) -> Mat<MPoly> {
    let o = MatOps(k);
    pmat(vec![vec![o.int(0), o.int(1)], vec![o.int(1), o.t()]])
}

fn lemma31() -> Result<Vec<CertificateScript>> {
    let k = q();
    let o = MatOps(&k);
    let c = ctx(&k, 1, 1);
    let th = swing(&k);
    let omt = o.int(1).sub(&o.t(), &k);
    let start = chain(&c, vec![(1, vec![at_time(&k, &th, &omt)])])?;
    let mut b = ProofBuilder::new("lemma3.1-negation", start);
    b.note("reversing the path negates the class");
    let w = w_reflect(&b, &SymbolTuple::new(&k, 1, vec![th.clone()])?)?;
    b.add_boundary(1, Side::Any, w)?;
    b.collect()?;
    let first = b.finish(chain(&c, vec![(-1, vec![th.clone()])])?);

    let psi = at_time(&k, &th, &omt);
    let start = chain(&c, vec![(1, vec![th.clone()]), (1, vec![psi.clone()])])?;
    let mut b = ProofBuilder::new("lemma3.1-sum", start);
    b.merge(&SymbolTuple::new(&k, 1, vec![th.clone()])?, &SymbolTuple::new(&k, 1, vec![psi.clone()])?)?;
    let goal = chain(&c, vec![(1, vec![block2(&th, &zeros(2), &zeros(2), &psi)])])?;
    Ok(vec![first, b.finish(goal)])
}

/// `θ = U C U⁻¹` with `C` the companion matrix of `λ² - (5 + t(1-t))λ + 6`
/// and `U = [[1, t], [0, 1]]`, so `θ(1) = U(1) θ(0) U(1)⁻¹`.
struct InstanceA {
    k: Field,
    shape: Shape,
    phi: Mat<MPoly>,
    psi: Mat<MPoly>,
    sc: Mat<MPoly>,
}

impl InstanceA {
    fn new() -> InstanceA {
        let k = q();
        let o = MatOps(&k);
        let t = o.t();
        let mid = o.int(5).add(&t, &k).sub(&t.mul(&t, &k), &k);
        let cm = pmat(vec![vec![o.int(0), o.int(1)], vec![o.int(-6), mid]]);
        let u = pmat(vec![vec![o.int(1), t.clone()], vec![o.int(0), o.int(1)]]);
        let theta = o.mul(&o.mul(&u, &cm), &o.inv(&u));
        let sc = at_time(&k, &u, &o.int(1));
        let phi = o.mul(&theta, &theta);
        let psi = o.neg(&theta);
        let shape = Shape::main_at(&k, 0, &[theta]);
        InstanceA { k, shape, phi, psi, sc }
    }

    fn o(&self) -> MatOps<'_> {
        MatOps(&self.k)
    }

    fn p(&self) -> Mat<MPoly> {
        self.o().mul(&self.phi, &self.psi)
    }

    fn qa(&self) -> Mat<MPoly> {
        self.o().add(&self.phi, &self.psi)
    }

    fn qb(&self) -> Mat<MPoly> {
        self.o().add(&eye(&self.k, 2), &self.p())
    }

    fn n(&self, q: &Mat<MPoly>) -> Result<SymbolTuple> {
        self.shape.tuple(1, &[block2(&zeros(2), &eye(&self.k, 2), &self.o().neg(&self.p()), q)])
    }

}

fn thm33() -> Result<Vec<CertificateScript>> {
    let a = InstanceA::new();
    let k = a.k.clone();
    let o = a.o();
    let t = o.t();
    let omt = o.int(1).sub(&t, &k);
    let p = a.p();
    let qa = a.qa();
    let mut out = Vec::new();

    let tq = o.scale(&qa, &t.mul(&omt, &k));
    let mut b = ProofBuilder::new("thm3.3-eq3", Chain::single(a.n(&tq)?));
    let w = w3(&b, &a.shape, &p, &qa)?;
    b.add_boundary(1, Side::Any, w)?;
    b.collect()?;
    out.push(b.finish(Chain::single(a.n(&zeros(2))?)));

    let (l1, l0) = end_terms(&ProofBuilder::new("", Chain::single(a.n(&qa)?)), &a.shape, &p, &qa)?;
    let mut b = ProofBuilder::new("thm3.3-eq4", Chain::single(a.n(&qa)?));
    let w = w4(&b, &a.shape, &p, &qa)?;
    b.add_boundary(1, Side::Any, w)?;
    b.collect()?;
    let mut goal = Chain::single(a.n(&o.scale(&qa, &t))?);
    goal.push(-1, l0.clone())?;
    out.push(b.finish(goal));

    // the same at 1 - t
    let sp = a.shape.at(&omt);
    let pp = at_time(&k, &p, &omt);
    let qp = o.scale(&at_time(&k, &qa, &omt), &omt);
    let np = |q: &Mat<MPoly>| sp.tuple(1, &[block2(&zeros(2), &eye(&k, 2), &o.neg(&pp), q)]);
    let mut b = ProofBuilder::new("thm3.3-eq5", Chain::single(np(&qp)?));
    let w = w4(&b, &sp, &pp, &qp)?;
    b.add_boundary(1, Side::Any, w)?;
    b.collect()?;
    let mut goal = Chain::single(np(&o.scale(&qp, &t))?);
    goal.push(-1, l1.clone())?;
    out.push(b.finish(goal));

    for (name, q) in [("thm3.3-eq6", qa.clone()), ("thm3.3-eq7", a.qb())] {
        let (l1, l0) = end_terms(&ProofBuilder::new("", Chain::single(a.n(&q)?)), &a.shape, &p, &q)?;
        let mut b = ProofBuilder::new(name, Chain::single(a.n(&q)?));
        sigma(&mut b, &a.shape, &p, &q, 1)?;
        let mut goal = Chain::single(a.n(&zeros(2))?);
        goal.push(1, l1)?;
        goal.push(-1, l0)?;
        out.push(b.finish(goal));
    }

    let mut b = ProofBuilder::new("thm3.3-eq8", Chain::single(a.n(&qa)?));
    b.note("the end terms cancel after conjugation by U(1)");
    claim(&mut b, &a.shape, &p, &qa, &a.qb(), Some(&a.sc), 1)?;
    out.push(b.finish(Chain::single(a.n(&a.qb())?)));

    let mut start = Chain::single(a.shape.tuple(1, std::slice::from_ref(&a.phi))?);
    start.push(1, a.shape.tuple(1, std::slice::from_ref(&a.psi))?)?;
    let mut b = ProofBuilder::new("thm3.3", start);
    b.note("multiplicativity in a varying coordinate");
    mult_relation(&mut b, &a.shape, &a.phi, &a.psi, Some(&a.sc), 1)?;
    out.push(b.finish(Chain::single(a.shape.tuple(1, &[p])?)));
    Ok(out)
}

/// Both end terms cancel once conjugated back: `θ = V diag(2, 3) V⁻¹` with
/// `V` a product of elementary matrices over `k[t]`.
fn claim_b() -> Result<Vec<CertificateScript>> {
    let k = q();
    let o = MatOps(&k);
    let t = o.t();
    let (one, zero) = (o.int(1), o.int(0));
    let up = pmat(vec![vec![one.clone(), t.clone()], vec![zero.clone(), one.clone()]]);
    let down = pmat(vec![vec![one.clone(), zero.clone()], vec![t.neg(&k), one.clone()]]);
    let v = o.mul(&o.mul(&up, &down), &up);
    let theta = o.mul(&o.mul(&v, &int_mat(&k, &[&[2, 0], &[0, 3]])), &o.inv(&v));
    let sc = at_time(&k, &v, &o.int(1));
    let phi = theta.clone();
    let psi = o.sub(&o.scale(&eye(&k, 2), &o.int(5)), &theta);
    let shape = Shape::main_at(&k, 0, &[theta]);
    let p = o.mul(&phi, &psi);
    let qa = o.add(&phi, &psi);
    let qb = o.add(&eye(&k, 2), &p);
    let probe = ProofBuilder::new("", Chain::zero(&ctx(&k, 1, 2)));
    let (l1a, l0a) = end_terms(&probe, &shape, &p, &qa)?;
    let (l1b, l0b) = end_terms(&probe, &shape, &p, &qb)?;
    let mut start = Chain::zero(&ctx(&k, 1, 2));
    for (c, x) in [(1, l1a.clone()), (-1, l0a), (-1, l1b.clone()), (1, l0b)] {
        start.push(c, x)?;
    }
    let mut b = ProofBuilder::new("thm3.3-claim", start);
    b.note("conjugation by V(1) identifies the two end terms");
    let si = o.inv(&sc);
    let g = block2(&si, &zeros(2), &zeros(2), &si);
    b.conjugate(&l1a, &g)?;
    b.conjugate(&l1b, &g)?;
    b.collect()?;
    Ok(vec![b.finish(Chain::zero(&ctx(&k, 1, 2)))])
}

/// Companion matrix of `λ² - t(1-t)λ - 2`, equal at both ends.
fn prop36() -> Result<Vec<CertificateScript>> {
    let k = q();
    let o = MatOps(&k);
    let t = o.t();
    let mid = t.sub(&t.mul(&t, &k), &k);
    let phi = pmat(vec![vec![o.int(0), o.int(1)], vec![o.int(2), mid]]);
    let vv = Shape::new(&k, vec![Slot::Var(0), Slot::Var(0)]);
    let c = ctx(&k, 1, 2);
    let tup = |m: &Mat<MPoly>| SymbolTuple::new(&k, 1, vec![m.clone(), m.clone()]);
    let mut start = Chain::single(tup(&phi)?);
    start.push(1, tup(&phi)?)?;
    let mut b = ProofBuilder::new("prop3.6-eq9", start);
    b.note("multiplicativity with both coordinates varying");
    mult_relation(&mut b, &vv, &phi, &phi, None, 1)?;
    let first = b.finish(Chain::single(tup(&o.mul(&phi, &phi))?));

    let mut start = Chain::zero(&c);
    start.push(2, tup(&phi)?)?;
    let mut b = ProofBuilder::new("prop3.6", start);
    b.note("skew-symmetry at d = 1");
    skew_d1(&mut b, &vv, 0, 1, &phi, &phi, -1)?;
    Ok(vec![first, b.finish(Chain::zero(&c))])
}

/// Every bundled certificate.
pub fn bundled_proofs() -> Result<Vec<CertificateScript>> {
    let mut out = identities()?;
    out.extend(lemma_i()?);
    out.extend(lemma_ii()?);
    out.extend(lemma_iii()?);
    out.extend(lemma_iv()?);
    out.extend(direct_sums()?);
    out.extend(prop27()?);
    out.extend(lemma31()?);
    out.extend(thm33()?);
    out.extend(claim_b()?);
    out.extend(prop36()?);
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::checker::run_certificate;

    #[test]
    fn all_bundled_proofs_accepted() {
        for s in bundled_proofs().unwrap() {
            let v = run_certificate(&s);
            assert!(v.accepted, "{}: {}", s.name, v.summary());
            assert_eq!(v.oracle, Some(true), "{}", s.name);
        }
    }
}
