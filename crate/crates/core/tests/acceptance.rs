//! One pass/fail line per acceptance criterion; exits nonzero if any fails.

use std::collections::HashMap;

use motsym::algebra::{Field, Mat, Poly};
use motsym::checker::{bundled_proofs, oracle_check, run_certificate, CertificateScript, Move};
use motsym::maps::{build_companion_homotopy, norm_compat_test, phi, rho};
use motsym::milnor::{invariant, MilnorElement, MilnorInvariant};
use motsym::suites::{self, SuiteReport};
use motsym::symbols::{check_identity, is_cycle, k0_class_tuple, Chain, K0Class, SymbolTuple};
use motsym::text::{parse_chain, parse_matrix, parse_tuple};

const SEED: u64 = 20240611;

type Outcome = Result<String, String>;

fn suites_ok(reports: &[SuiteReport]) -> Outcome {
    let lines: Vec<String> = reports.iter().map(|r| r.line()).collect();
    match reports.iter().find(|r| !r.ok() || r.skipped > 0) {
        None => Ok(lines.join(", ")),
        Some(r) => Err(format!("{} {:?}", r.line(), r.failures)),
    }
}

fn ensure(ok: bool, msg: impl Into<String>) -> Result<(), String> {
    if ok {
        Ok(())
    } else {
        Err(msg.into())
    }
}

fn e<E: std::fmt::Display>(x: E) -> String {
    x.to_string()
}

fn c1_identities() -> Outcome {
    let q = Field::rational();
    let lhs = parse_matrix(&q, 0, "[[1,0],[3,1]]").map_err(e)?;
    let mid = parse_matrix(&q, 0, "[[3,1],[0,2]]").map_err(e)?;
    let rhs = parse_matrix(&q, 0, "[[1,0],[-3,1]]").map_err(e)?;
    let r = motsym::algebra::PolyRing::new(&q);
    let prod = lhs.mulm(&mid, &r).mulm(&rhs, &r);
    let want1 = parse_matrix(&q, 0, "[[0,1],[-6,5]]").map_err(e)?;
    ensure(check_identity(&prod, &want1).map_err(e)?, "first conjugacy identity at 2, 3")?;
    let two = parse_matrix(&q, 0, "[[1,0],[1,1]]").map_err(e)?
        .mulm(&parse_matrix(&q, 0, "[[1,1],[0,6]]").map_err(e)?, &r)
        .mulm(&parse_matrix(&q, 0, "[[1,0],[-1,1]]").map_err(e)?, &r);
    ensure(check_identity(&two, &parse_matrix(&q, 0, "[[0,1],[-6,7]]").map_err(e)?).map_err(e)?, "second conjugacy identity")?;
    let bad = parse_matrix(&q, 0, "[[0,1],[-6,6]]").map_err(e)?;
    ensure(!check_identity(&prod, &bad).map_err(e)?, "perturbed entry accepted")?;
    suites_ok(&[suites::identities(SEED, 100)])
}

#[derive(Default)]
struct Memo(HashMap<SymbolTuple, K0Class>);

impl Memo {
    fn tuple(&mut self, t: &SymbolTuple) -> Result<K0Class, String> {
        if let Some(c) = self.0.get(t) {
            return Ok(c.clone());
        }
        let c = k0_class_tuple(t).map_err(e)?;
        self.0.insert(t.clone(), c.clone());
        Ok(c)
    }

    fn chain(&mut self, c: &Chain) -> Result<K0Class, String> {
        let mut out = K0Class::empty(&c.ctx().field, c.ctx().l);
        for (n, t) in c.terms() {
            out = out.add(&self.tuple(t)?.scale(*n));
        }
        Ok(out)
    }
}

/// `k0(chain) - k0(Σ c ∂W)` at `d = 0`, `k0(∂ chain)` at `d = 1`.
fn tracked(memo: &mut Memo, s: &CertificateScript, chain: &Chain, added: &Chain) -> Result<K0Class, String> {
    if s.context.d == 0 {
        Ok(memo.chain(chain)?.sub(&memo.chain(added)?))
    } else {
        memo.chain(&chain.boundary().map_err(e)?)
    }
}

fn c2_certificates() -> Outcome {
    let scripts = bundled_proofs().map_err(e)?;
    let mut steps = 0;
    let mut memo = Memo::default();
    for s in &scripts {
        let v = run_certificate(s);
        ensure(v.accepted, format!("{} rejected: {}", s.name, v.summary()))?;
        let mut added = Chain::zero(&s.context);
        let base = tracked(&mut memo, s, &s.start, &added)?;
        for (i, entry) in v.log.iter().enumerate().skip(1) {
            if let Move::AddBoundary { coef, witness, .. } = &s.moves[i - 1] {
                if s.context.d == 0 {
                    added = added.add(&witness.scale(*coef).boundary().map_err(e)?).map_err(e)?;
                }
            }
            let now = tracked(&mut memo, s, &entry.chain, &added)?;
            ensure(now == base, format!("{} step {}: class changed", s.name, entry.step))?;
            steps += 1;
        }
    }
    let names = ["lemma2.4.i", "lemma2.4.ii", "lemma2.4.iii", "lemma2.4.iv", "prop2.7-dz", "lemma3.1-negation",
        "lemma3.1-sum", "thm3.3-eq3", "thm3.3-eq4", "thm3.3-eq5", "thm3.3-eq6", "thm3.3-eq7", "thm3.3-eq8", "thm3.3",
        "thm3.3-claim", "prop3.6-eq9", "prop3.6"];
    for n in names {
        ensure(scripts.iter().any(|s| s.name == n), format!("missing script {n}"))?;
    }
    // a witness that is not of the declared form is rejected, stably
    let bad = "{name:\"bad-z3\", context:{field:\"Q\", d:0, l:2}, start:[], goal:[]}\n\
               addboundary coef=1 side=Z3 witness=[{coef:1, tuple:{mats:[[[2]],[[3]]]}}]\n";
    let s = CertificateScript::parse(bad).map_err(e)?;
    let (a, b) = (run_certificate(&s), run_certificate(&s));
    ensure(!a.accepted, "Z3 violation accepted")?;
    let cond = a.failure.as_ref().map(|f| f.to_string()).unwrap_or_default();
    ensure(cond.contains("Z3"), format!("condition does not name Z3: {cond}"))?;
    ensure(Some(cond.clone()) == b.failure.map(|f| f.to_string()), "rejection not stable")?;
    Ok(format!("{} scripts accepted, {steps} steps with unchanged class; Z3 violation rejected", scripts.len()))
}

fn c3_oracle() -> Outcome {
    let scripts = bundled_proofs().map_err(e)?;
    for s in &scripts {
        let v = run_certificate(s);
        ensure(v.oracle == Some(true), format!("{}: oracle {:?}", s.name, v.oracle))?;
        ensure(oracle_check(s).map_err(e)?, format!("{}: independent oracle", s.name))?;
    }
    Ok(format!("{} relations have empty boundary class", scripts.len()))
}

fn c4_phi_rho() -> Outcome {
    let q = Field::rational();
    let m = MilnorElement::symbol(&q, vec![q.from_int(2), q.from_int(3)]).map_err(e)?;
    let r = phi(&rho(&m).map_err(e)?).map_err(e)?;
    ensure(r.value.as_ref().ok() == Some(&m), "phi(rho({2,3})) != {2,3}")?;
    suites_ok(&[suites::phi_rho(SEED, 200)])
}

fn c5_phi_boundary() -> Outcome {
    suites_ok(&[suites::phi_boundary(SEED, 100)])
}

fn c6_reciprocity() -> Outcome {
    suites_ok(&[suites::reciprocity(&Field::rational(), SEED, 200), suites::reciprocity(&suites::f7(), SEED, 200)])
}

fn c7_milnor() -> Outcome {
    let q = Field::rational();
    ensure(suites::minus_one_squared_nonzero().map_err(e)?, "{-1,-1} has zero invariant")?;
    // {2,3}: 2-adic Hilbert symbol -1, tame symbol 2 at p = 3
    let m = MilnorElement::symbol(&q, vec![q.from_int(2), q.from_int(3)]).map_err(e)?;
    let want = MilnorInvariant::K2Q { hilbert2: -1, tame: [(3u64, 2u64)].into_iter().collect() };
    ensure(invariant(&m).map_err(e)? == want, "invariant of {2,3}")?;
    suites_ok(&suites::milnor_relations(SEED, 200))
}

fn c8_homotopy() -> Outcome {
    let q = Field::rational();
    let a = Poly::from_ints(&q, &[12, -3, -4, 1]);
    let b = Poly::from_ints(&q, &[12, -4, -3, 1]);
    let th = build_companion_homotopy(&q, &a, &b).map_err(e)?;
    let want = parse_tuple("{field:\"Q\", d:1, l:1, mats:[[[0,1,0],[0,0,1],[-12,t+3,-t+4]]]}").map_err(e)?;
    ensure(th == want, format!("companion homotopy gave {}", th.short()))?;
    suites_ok(&suites::homotopy(SEED, 100))
}

fn scalar_class(q: &Field, vals: &[i64]) -> Result<K0Class, String> {
    let mut c = K0Class::empty(q, 1);
    for v in vals {
        c = c.add(&k0_class_tuple(&SymbolTuple::scalars(q, &[q.from_int(*v)]).map_err(e)?).map_err(e)?);
    }
    Ok(c)
}

fn c9_counterexamples() -> Outcome {
    let q = Field::rational();
    let cyc = |s: &str| -> Result<bool, String> {
        is_cycle(&Chain::single(parse_tuple(s).map_err(e)?)).map_err(e)
    };
    let phi_t = "[[5*t, 25/6*t*(1-t)-1],[6, 5-5*t]]";
    let five = "[[5,0],[0,5]]";
    let phi_c = cyc(&format!("{{field:\"Q\", d:1, l:2, mats:[{phi_t}, {five}]}}"))?;
    let psi_c = cyc(&format!("{{field:\"Q\", d:1, l:2, mats:[[[2,0],[0,3]], {five}]}}"))?;
    let r = motsym::algebra::PolyRing::new(&q);
    let prod = parse_matrix(&q, 1, phi_t).map_err(e)?.mulm(&parse_matrix(&q, 1, "[[2,0],[0,3]]").map_err(e)?, &r);
    let pc = is_cycle(&Chain::single(
        SymbolTuple::new(&q, 1, vec![prod, parse_matrix(&q, 1, five).map_err(e)?]).map_err(e)?,
    ))
    .map_err(e)?;
    ensure(phi_c && psi_c && !pc, format!("non-commuting case: cycles {phi_c} {psi_c} {pc}"))?;

    let b = "[[0,-20,0,0],[1,21-12*t,0,0],[0,0,0,-20],[0,0,1,9+12*t]]";
    let a = "[[2,0,0,0],[0,2,0,0],[0,0,3,0],[0,0,0,3]]";
    let ab = parse_matrix(&q, 1, a).map_err(e)?.mulm(&parse_matrix(&q, 1, b).map_err(e)?, &r);
    let t = SymbolTuple::new(&q, 1, vec![ab]).map_err(e)?;
    let k0 = k0_class_tuple(&t.at(0)).map_err(e)?;
    let k1 = k0_class_tuple(&t.at(1)).map_err(e)?;
    ensure(k0 == scalar_class(&q, &[2, 40, 12, 15])?, format!("A(0)B(0) class {k0}"))?;
    ensure(k1 == scalar_class(&q, &[8, 10, 3, 60])?, format!("A(1)B(1) class {k1}"))?;
    ensure(k0 != k1 && !is_cycle(&Chain::single(t)).map_err(e)?, "reducible case is a cycle")?;
    let bt = parse_tuple(&format!("{{field:\"Q\", d:1, l:1, mats:[{b}]}}")).map_err(e)?;
    ensure(is_cycle(&Chain::single(bt)).map_err(e)?, "B alone is not a cycle")?;
    Ok("non-commuting: (phi,theta), (psi,theta) cycles, (phi psi, theta) not; reducible: {2,40,12,15} vs {8,10,3,60}".into())
}

fn c10_norms() -> Outcome {
    let f5 = Field::prime(5).map_err(e)?;
    let f25 = Field::extension(&f5, &Poly::from_ints(&f5, &[2, 0, 1]), "x").map_err(e)?;
    let x = f25.generator().unwrap();
    let m = MilnorElement::symbol(&f25, vec![x.clone()]).map_err(e)?;
    let rep = norm_compat_test(&f5, &m).map_err(e)?;
    let two = invariant(&MilnorElement::symbol(&f5, vec![f5.from_int(2)]).map_err(e)?).map_err(e)?;
    ensure(rep.equal && rep.motivic == two, "F25/F5 weight one")?;
    let x1 = f25.add(&x, &f25.one());
    let rep = norm_compat_test(&f5, &MilnorElement::symbol(&f25, vec![x, x1]).map_err(e)?).map_err(e)?;
    ensure(rep.equal && rep.motivic.is_zero(), "F25/F5 weight two")?;
    let q = Field::rational();
    let qi = suites::gaussian();
    let m = MilnorElement::symbol(&qi, vec![qi.from_int(2), qi.generator().unwrap()]).map_err(e)?;
    let rep = norm_compat_test(&q, &m).map_err(e)?;
    ensure(rep.equal && rep.milnor.is_zero(), "{2, i} over Q(i)")?;
    // regular representation of i
    let t = parse_tuple("{field:\"Ext(Q,i^2+1)\", d:0, l:2, mats:[[[i]],[[i]]]}").map_err(e)?;
    let down = t.restrict_scalars(&q).map_err(e)?;
    let want = Mat::from_rows(vec![vec![q.zero(), q.from_int(-1)], vec![q.one(), q.zero()]]).unwrap();
    ensure(down.constant_mats() == Some(vec![want.clone(), want]), format!("restriction of (i,i): {}", down.short()))?;
    let chain = parse_chain("[{coef:1, tuple:{field:\"Q\", d:0, l:1, mats:[[[0,1],[-20,9]]]}}]", None).map_err(e)?;
    let r = phi(&chain).map_err(e)?;
    let twenty = invariant(&MilnorElement::symbol(&q, vec![q.from_int(20)]).map_err(e)?).map_err(e)?;
    ensure(r.invariant.as_ref().ok() == Some(&twenty), "phi of companion of x^2-9x+20")?;
    suites_ok(&[suites::norm_composite(SEED, 50), suites::norm_compat(SEED, 50)])
}

type Criterion = (&'static str, fn() -> Outcome);

fn main() {
    let criteria: [Criterion; 10] = [
        ("conjugacy identities for N(pq, p+q)", c1_identities),
        ("bundled certificates accepted, class preserved per step", c2_certificates),
        ("oracle cross-check of accepted relations", c3_oracle),
        ("phi after rho is the identity on invariants", c4_phi_rho),
        ("phi of a boundary has zero invariant", c5_phi_boundary),
        ("Weil reciprocity over Q(t) and F7(t)", c6_reciprocity),
        ("relations in K2(Q)", c7_milnor),
        ("companion homotopy constructor", c8_homotopy),
        ("counterexamples without commutativity or irreducibility", c9_counterexamples),
        ("norm properties", c10_norms),
    ];
    let mut failed = 0;
    for (i, (name, f)) in criteria.iter().enumerate() {
        let start = std::time::Instant::now();
        match f() {
            Ok(detail) => println!("criterion {:>2} PASS {name} ({detail}) [{:.1?}]", i + 1, start.elapsed()),
            Err(why) => {
                failed += 1;
                println!("criterion {:>2} FAIL {name}: {why}", i + 1);
            }
        }
    }
    println!("acceptance: {}/{} criteria pass", criteria.len() - failed, criteria.len());
    if failed > 0 {
        std::process::exit(1);
    }
}
