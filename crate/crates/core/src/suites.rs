//! Seeded property suites shared by the acceptance tests and the CLI.

use rand::Rng;

use crate::algebra::{Elem, Field, MPoly, Mat, Poly, PolyRing};
use crate::error::{Error, Result};
use crate::maps::{build_companion_homotopy, check_companion_homotopy, norm_compat_test, phi, rho};
use crate::milnor::{invariant, weil_reciprocity_check, FunctionElement, MilnorElement};
use crate::random::{self, Gen, PairDefect};
use crate::symbols::{check_identity, k0_class_tuple, Chain};
use crate::error::HomotopyViolation;

/// Outcome of one suite.
#[derive(Clone, Debug)]
pub struct SuiteReport {
    pub name: String,
    pub total: usize,
    pub passed: usize,
    /// Instances skipped because a factorization limit was hit.
    pub skipped: usize,
    /// The first few failure messages.
    pub failures: Vec<String>,
}

impl SuiteReport {
    pub fn ok(&self) -> bool {
        self.passed == self.total
    }

    pub fn line(&self) -> String {
        let mut s = format!("{} {}/{}", self.name, self.passed, self.total);
        if self.skipped > 0 {
            s.push_str(&format!(" (skipped {})", self.skipped));
        }
        s
    }
}

type Case<'a> = dyn FnMut(&mut Gen, usize) -> Result<std::result::Result<(), String>> + 'a;

/// Runs `count` instances; limit errors are retried (up to `count` extra
/// attempts) and counted as skipped.
fn run(name: &str, seed: u64, count: usize, case: &mut Case<'_>) -> SuiteReport {
    let mut g = random::rng(seed);
    let mut rep = SuiteReport { name: name.into(), total: 0, passed: 0, skipped: 0, failures: Vec::new() };
    let mut i = 0;
    while rep.total < count && i < 2 * count {
        match case(&mut g, i) {
            Err(Error::DegreeLimit { .. }) => rep.skipped += 1,
            Err(e) => {
                rep.total += 1;
                if rep.failures.len() < 5 {
                    rep.failures.push(format!("instance {i}: error: {e}"));
                }
            }
            Ok(Err(m)) => {
                rep.total += 1;
                if rep.failures.len() < 5 {
                    rep.failures.push(format!("instance {i}: {m}"));
                }
            }
            Ok(Ok(())) => {
                rep.total += 1;
                rep.passed += 1;
            }
        }
        i += 1;
    }
    rep
}

fn check(ok: bool, msg: impl FnOnce() -> String) -> std::result::Result<(), String> {
    if ok {
        Ok(())
    } else {
        Err(msg())
    }
}

pub fn f7() -> Field {
    Field::prime(7).unwrap()
}

fn block(a: &Mat<MPoly>, b: &Mat<MPoly>, c: &Mat<MPoly>, d: &Mat<MPoly>) -> Mat<MPoly> {
    let n = a.rows();
    Mat::from_fn(2 * n, 2 * n, |i, j| {
        let m = match (i < n, j < n) {
            (true, true) => a,
            (true, false) => b,
            (false, true) => c,
            (false, false) => d,
        };
        m.get(i % n, j % n).clone()
    })
}

/// The two block identities `[[1,0],[ψ,1]] [[ψ,1],[0,φ]] [[1,0],[-ψ,1]] =
/// N(φψ, φ+ψ)` and `[[1,0],[1,1]] [[1,1],[0,φψ]] [[1,0],[-1,1]] =
/// N(φψ, 1+φψ)` for random commuting `φ, ψ`, `n ≤ 3`, over `Q` and `F_7`.
pub fn identities(seed: u64, count: usize) -> SuiteReport {
    run("identities", seed, count, &mut |g, i| {
        let k = if i % 2 == 0 { Field::rational() } else { f7() };
        let n = 1 + (i / 2) % 3;
        let f = random::commuting_family(g, &k, n, 2);
        let r = PolyRing::new(&k);
        let (phi, psi) = (f[0].to_poly_matrix(&k), f[1].to_poly_matrix(&k));
        let id = Mat::identity(&r, n);
        let z = Mat::zeros(&r, n, n);
        let pp = phi.mulm(&psi, &r);
        let n_mat = |q: &Mat<MPoly>| block(&z, &id, &pp.neg(&r), q);
        let lhs1 = block(&id, &z, &psi, &id)
            .mulm(&block(&psi, &id, &z, &phi), &r)
            .mulm(&block(&id, &z, &psi.neg(&r), &id), &r);
        let lhs2 = block(&id, &z, &id, &id)
            .mulm(&block(&id, &id, &z, &pp), &r)
            .mulm(&block(&id, &z, &id.neg(&r), &id), &r);
        let one = check_identity(&lhs1, &n_mat(&phi.add(&psi, &r)?))?;
        let two = check_identity(&lhs2, &n_mat(&id.add(&pp, &r)?))?;
        Ok(check(one && two, || format!("n={n} over {k}: identity (1) {one}, (2) {two}")))
    })
}

fn phi_rho_case(g: &mut Gen, k: &Field, l: usize) -> Result<std::result::Result<(), String>> {
    let m = MilnorElement::symbol(k, random::symbol_coords(g, k, l))?;
    let back = phi(&rho(&m)?)?.invariant?;
    let want = invariant(&m)?;
    Ok(check(back == want, || format!("{} : {back} vs {want}", m.format())))
}

/// `φ ∘ ρ` is the identity on invariants: `F_7` with `l = 1, 2, 3` and `Q`
/// with `l = 1, 2`.
pub fn phi_rho(seed: u64, count: usize) -> SuiteReport {
    run("phi-rho", seed, count, &mut |g, i| {
        let (k, l) = match i % 5 {
            0 => (f7(), 1),
            1 => (f7(), 2),
            2 => (f7(), 3),
            3 => (Field::rational(), 1),
            _ => (Field::rational(), 2),
        };
        phi_rho_case(g, &k, l)
    })
}

/// `φ(∂w)` has zero invariant for random `d = 1` tuples over `F_7` and `Q`.
pub fn phi_boundary(seed: u64, count: usize) -> SuiteReport {
    run("phi-boundary", seed, count, &mut |g, i| {
        let (k, l) = match i % 4 {
            0 => (f7(), 1),
            1 => (f7(), 2),
            2 => (Field::rational(), 1),
            _ => (Field::rational(), 2),
        };
        let w = random::tuple_d1(g, &k, l);
        let b = Chain::single(w.clone()).boundary()?;
        let inv = phi(&b)?.invariant?;
        Ok(check(inv.is_zero(), || format!("{}: invariant {inv}", w.short())))
    })
}

/// Weil reciprocity for random `{f, g}` over `k(t)`, degrees at most 3.
pub fn reciprocity(k: &Field, seed: u64, count: usize) -> SuiteReport {
    run(&format!("reciprocity-{}", k.descriptor()), seed, count, &mut |g, _| {
        let f = random::ratfunc(g, k, 3);
        let h = random::ratfunc(g, k, 3);
        let w = FunctionElement::symbol(k, vec![f, h])?;
        let rep = weil_reciprocity_check(&w)?;
        Ok(check(rep.holds, || format!("{}: product {}", w.format(), k.format_elem(&rep.product))))
    })
}

fn vanishes(k: &Field, terms: Vec<(i64, Vec<Elem>)>) -> Result<std::result::Result<(), String>> {
    let m = MilnorElement::new(k, 2, terms)?;
    let inv = invariant(&m)?;
    Ok(check(inv.is_zero(), || format!("{}: invariant {inv}", m.format())))
}

/// Relations in `K_2(Q)` checked on invariants: bilinearity, `{a, 1-a}`,
/// `{a, -a}` and antisymmetry, `count` instances each.
pub fn milnor_relations(seed: u64, count: usize) -> Vec<SuiteReport> {
    let q = Field::rational();
    let u = |g: &mut Gen| random::unit(g, &q, 12);
    let not_one = |g: &mut Gen| loop {
        let a = random::unit(g, &q, 12);
        if !q.is_one(&a) {
            return a;
        }
    };
    vec![
        run("k2-bilinear", seed, count, &mut |g, _| {
            let (a, b, c) = (u(g), u(g), u(g));
            let ab = q.mul(&a, &b);
            vanishes(&q, vec![(1, vec![ab, c.clone()]), (-1, vec![a, c.clone()]), (-1, vec![b, c])])
        }),
        run("k2-steinberg", seed + 1, count, &mut |g, _| {
            let a = not_one(g);
            vanishes(&q, vec![(1, vec![a.clone(), q.sub(&q.one(), &a)])])
        }),
        run("k2-minus", seed + 2, count, &mut |g, _| {
            let a = u(g);
            vanishes(&q, vec![(1, vec![a.clone(), q.neg(&a)])])
        }),
        run("k2-antisymmetry", seed + 3, count, &mut |g, _| {
            let (a, b) = (u(g), u(g));
            vanishes(&q, vec![(1, vec![a.clone(), b.clone()]), (1, vec![b, a])])
        }),
    ]
}

/// `{-1, -1}` is nonzero in `K_2(Q)`.
pub fn minus_one_squared_nonzero() -> Result<bool> {
    let q = Field::rational();
    let m = MilnorElement::symbol(&q, vec![q.from_int(-1), q.from_int(-1)])?;
    Ok(!invariant(&m)?.is_zero())
}

/// Valid pairs give a verified companion homotopy; invalid ones report
/// exactly the broken product constraint.
pub fn homotopy(seed: u64, count: usize) -> Vec<SuiteReport> {
    let valid = run("homotopy-valid", seed, count, &mut |g, i| {
        let k = if i % 2 == 0 { Field::rational() } else { f7() };
        let (a, b) = random::homotopy_pair(g, &k, 3 + (i / 2) % 2);
        let th = build_companion_homotopy(&k, &a, &b)?;
        let c = check_companion_homotopy(&th, &a, &b);
        Ok(check(c.ok(), || format!("A={} B={}: {c:?}", a.format(&k, "x"), b.format(&k, "x"))))
    });
    let invalid = run("homotopy-invalid", seed + 1, count, &mut |g, i| {
        let k = if i % 2 == 0 { Field::rational() } else { f7() };
        let (a, b, defect) = random::invalid_homotopy_pair(g, &k, 2 + i % 3);
        let want = match defect {
            PairDefect::RootProduct => vec![HomotopyViolation::RootProductMismatch],
            PairDefect::OneMinusRootProduct => vec![HomotopyViolation::OneMinusRootProductMismatch],
            PairDefect::Both => {
                vec![HomotopyViolation::RootProductMismatch, HomotopyViolation::OneMinusRootProductMismatch]
            }
        };
        Ok(match build_companion_homotopy(&k, &a, &b) {
            Err(Error::Homotopy(v)) => check(v == want, || format!("reported {v:?}, expected {want:?}")),
            other => Err(format!("expected a precondition error, got {other:?}")),
        })
    });
    vec![valid, invalid]
}

pub fn f49() -> Field {
    let k = f7();
    Field::extension(&k, &Poly::from_ints(&k, &[1, 0, 1]), "x").unwrap()
}

pub fn gaussian() -> Field {
    let q = Field::rational();
    Field::extension(&q, &Poly::from_ints(&q, &[1, 0, 1]), "i").unwrap()
}

/// Extending scalars to `L` and restricting back multiplies the class by
/// `[L:k]`, for `F_49/F_7` and `Q(i)/Q`.
pub fn norm_composite(seed: u64, count: usize) -> SuiteReport {
    run("norm-composite", seed, count, &mut |g, i| {
        let (k, l) = if i % 2 == 0 { (f7(), f49()) } else { (Field::rational(), gaussian()) };
        let n = 1 + g.gen_range(0..2);
        let w = 1 + g.gen_range(0..2);
        let t = random::tuple(g, &k, n, w);
        let back = t.extend_scalars(&l)?.restrict_scalars(&k)?;
        let lhs = k0_class_tuple(&back)?;
        let rhs = k0_class_tuple(&t)?.scale(2);
        Ok(check(lhs == rhs, || format!("{}: {lhs} vs {rhs}", t.short())))
    })
}

fn random_ext_elem(g: &mut Gen, l: &Field) -> Elem {
    let k = l.base().unwrap().clone();
    loop {
        let c: Vec<Elem> = (0..l.degree()).map(|_| k.from_int(g.gen_range(-4..=4))).collect();
        let e = l.from_coords(&c, &k).unwrap();
        if !l.is_zero(&e) {
            return e;
        }
    }
}

/// Norm compatibility on the computable family: `F_25/F_5` and `F_49/F_7`
/// in weights 1 and 2, and `Q(i)/Q` with `{α, c}`, `c ∈ Q`.
pub fn norm_compat(seed: u64, count: usize) -> SuiteReport {
    let f5 = Field::prime(5).unwrap();
    let f25 = Field::extension(&f5, &Poly::from_ints(&f5, &[2, 0, 1]), "x").unwrap();
    let q = Field::rational();
    let qi = gaussian();
    run("norm-compat", seed, count, &mut |g, i| {
        let (k, l, w) = match i % 5 {
            0 => (&f5, f25.clone(), 1),
            1 => (&f5, f25.clone(), 2),
            2 => (&f7(), f49(), 1),
            3 => (&f7(), f49(), 2),
            _ => (&q, qi.clone(), 2),
        };
        let k = k.clone();
        let coords = if i % 5 == 4 {
            let c = random::unit(g, &q, 12);
            vec![random_ext_elem(g, &l), l.embed(&q, &c)?]
        } else {
            (0..w).map(|_| random_ext_elem(g, &l)).collect()
        };
        let m = MilnorElement::symbol(&l, coords)?;
        let r = norm_compat_test(&k, &m)?;
        Ok(check(r.equal, || format!("{}: {} vs {}", m.format(), r.motivic, r.milnor)))
    })
}

/// Every suite with the default sizes.
pub fn all_suites(seed: u64) -> Vec<SuiteReport> {
    let mut out = vec![identities(seed, 100), phi_rho(seed, 200), phi_boundary(seed, 100)];
    out.push(reciprocity(&Field::rational(), seed, 200));
    out.push(reciprocity(&f7(), seed, 200));
    out.extend(milnor_relations(seed, 200));
    out.extend(homotopy(seed, 100));
    out.push(norm_composite(seed, 50));
    out.push(norm_compat(seed, 50));
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn small_runs_pass() {
        for r in [identities(1, 12), phi_rho(1, 10), phi_boundary(1, 8), norm_compat(1, 10), norm_composite(1, 6)] {
            assert!(r.ok(), "{} {:?}", r.line(), r.failures);
        }
        for r in homotopy(1, 10).into_iter().chain(milnor_relations(1, 10)) {
            assert!(r.ok(), "{} {:?}", r.line(), r.failures);
        }
        assert!(minus_one_squared_nonzero().unwrap());
    }
}
