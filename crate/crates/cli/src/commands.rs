//! Subcommand implementations. Each returns the report lines, a summary
//! for the `RESULT:` line and an exit code.

use std::path::Path;

use motsym::algebra::factor::factor;
use motsym::checker::{export_corpus, load_corpus, run_certificate, CertificateScript, LoadError};
use motsym::maps::{build_companion_homotopy, check_companion_homotopy, phi, rho};
use motsym::milnor::{invariant, norm, tame_symbol, MilnorElement, Place};
use motsym::suites::{self, SuiteReport};
use motsym::symbols::{is_irreducible, k0_class};
use motsym::text::{parse_field, parse_poly_free};
use motsym::Error;

use crate::input::{self, Failure, Res};
use crate::Command;

pub const DEFAULT_SEED: u64 = 7;

const SUITE_NAMES: &[&str] = &[
    "identities",
    "phi-rho",
    "phi-boundary",
    "reciprocity-Q",
    "reciprocity-Fp(7)",
    "k2-bilinear",
    "k2-steinberg",
    "k2-minus",
    "k2-antisymmetry",
    "k2-minus-one-squared",
    "homotopy-valid",
    "homotopy-invalid",
    "norm-composite",
    "norm-compat",
];

pub struct Report {
    pub lines: Vec<String>,
    pub summary: String,
    pub code: u8,
}

impl Report {
    fn ok(lines: Vec<String>, summary: impl Into<String>) -> Report {
        Report { lines, summary: summary.into(), code: 0 }
    }

    fn verdict(lines: Vec<String>, ok: bool, summary: impl Into<String>) -> Report {
        Report { lines, summary: summary.into(), code: if ok { 0 } else { 1 } }
    }
}

pub fn run(c: Command) -> Res<Report> {
    match c {
        Command::Validate { file, field } => validate(&file, field.as_deref()),
        Command::Boundary { file, field } => {
            let c = input::chain(&file, field.as_deref())?;
            let b = c.boundary_any()?;
            Ok(Report::ok(vec![b.format()], format!("boundary has {} terms", b.len())))
        }
        Command::K0class { file, field } => {
            let c = input::chain(&file, field.as_deref())?;
            if c.ctx().d != 0 {
                return Err(Failure::Input(format!("k0class needs a d=0 chain, got {}; see iscycle", c.ctx())));
            }
            let k = k0_class(&c)?;
            let n = k.factors().len();
            Ok(Report::ok(vec![k.to_string()], format!("{n} distinct simple factors")))
        }
        Command::Iscycle { file, field } => {
            let c = input::chain(&file, field.as_deref())?;
            if c.ctx().d != 1 {
                return Err(Failure::Input(format!("iscycle needs a d=1 chain, got {}", c.ctx())));
            }
            let b = c.boundary()?;
            let k = k0_class(&b)?;
            let lines = vec![format!("boundary: {}", b.format()), format!("class: {k}")];
            let cyc = k.is_empty();
            Ok(Report::verdict(lines, cyc, if cyc { "cycle" } else { "not a cycle" }))
        }
        Command::Irreducible { file, field } => {
            let t = input::tuple(&file, field.as_deref())?;
            let r = is_irreducible(&t)?;
            let word = r.to_string();
            let short = word.split_whitespace().next().unwrap_or("").to_string();
            Ok(Report::ok(vec![word], short))
        }
        Command::Phi { file, field } => {
            let c = input::chain(&file, field.as_deref())?;
            let r = phi(&c)?;
            let mut lines = vec![r.format()];
            match &r.value {
                Ok(v) => lines.push(format!("value: {}", v.format())),
                Err(e) => lines.push(format!("value: unavailable ({e})")),
            }
            match &r.invariant {
                Ok(i) => lines.push(format!("invariant: {i}")),
                Err(e) => lines.push(format!("invariant: unavailable ({e})")),
            }
            Ok(Report::ok(lines, format!("{} norm-tagged symbols", r.symbols.len())))
        }
        Command::Rho { file, field } => {
            let m = input::milnor(&file, field.as_deref())?;
            let c = rho(&m)?;
            Ok(Report::ok(vec![c.format()], format!("{} terms", c.len())))
        }
        Command::Norm { file, to } => {
            let m = input::milnor(&file, None)?;
            let k = parse_field(&to)?;
            let n = norm(&m, &k)?;
            Ok(Report::ok(with_invariant(&n), format!("norm to {}", k.descriptor())))
        }
        Command::Tame { file, place, field } => tame(&file, &place, field.as_deref()),
        Command::ReciprocityFuzz { field, count, seed } => {
            let k = parse_field(&field)?;
            let r = suites::reciprocity(&k, seed, count);
            Ok(suite_report(vec![r]))
        }
        Command::Invariant { file, field } => {
            let m = input::milnor(&file, field.as_deref())?;
            let i = invariant(&m)?;
            let s = i.to_string();
            Ok(Report::ok(vec![m.format(), format!("invariant: {s}")], s))
        }
        Command::Homotopy { field, a, b } => homotopy(&field, &a, &b),
        Command::CheckCert { file, verbose } => check_cert(&file, verbose),
        Command::RunCorpus { dir, filter, seed } => run_corpus(&dir, filter.as_deref(), seed),
        Command::ExportCorpus { dir } => {
            let written = export_corpus(&dir)?;
            let lines = written.iter().map(|p| format!("wrote {}", p.display())).collect();
            Ok(Report::ok(lines, format!("{} certificates exported", written.len())))
        }
    }
}

fn validate(file: &Path, field: Option<&str>) -> Res<Report> {
    let c = input::chain(file, field)?;
    let mut lines = vec![format!("context: {}", c.ctx())];
    for (n, t) in c.terms() {
        lines.push(format!("{n:+} {}", t.short()));
    }
    Ok(Report::ok(lines, format!("valid, {} terms", c.len())))
}

fn homotopy(field: &str, a: &str, b: &str) -> Res<Report> {
    let k = parse_field(field)?;
    let (pa, _) = parse_poly_free(&k, a)?;
    let (pb, _) = parse_poly_free(&k, b)?;
    let th = match build_companion_homotopy(&k, &pa, &pb) {
        Ok(th) => th,
        Err(Error::Homotopy(v)) => {
            let lines = v.iter().map(|x| format!("violation: {x}")).collect();
            return Ok(Report::verdict(lines, false, "preconditions fail"));
        }
        Err(e) => return Err(e.into()),
    };
    let c = check_companion_homotopy(&th, &pa, &pb);
    let det = |d: &Option<_>| d.as_ref().map_or("not a nonzero constant".to_string(), |x| k.format_elem(x));
    let lines = vec![
        th.format(),
        format!("det theta: {}", det(&c.det)),
        format!("det (1-theta): {}", det(&c.det_one_minus)),
        format!("inverses verified: {}", c.inverses_verified),
        format!("charpoly at 0 is A: {}", c.charpoly_at_0),
        format!("charpoly at 1 is B: {}", c.charpoly_at_1),
    ];
    Ok(Report::verdict(lines, c.ok(), "companion homotopy"))
}

fn with_invariant(m: &MilnorElement) -> Vec<String> {
    let mut lines = vec![m.format()];
    match invariant(m) {
        Ok(i) => lines.push(format!("invariant: {i}")),
        Err(e) => lines.push(format!("invariant: unavailable ({e})")),
    }
    lines
}

fn tame(file: &Path, place: &str, field: Option<&str>) -> Res<Report> {
    let w = input::function_element(file, field)?;
    let k = w.field().clone();
    let v = if place.trim() == "inf" {
        Place::Infinity
    } else {
        let (p, _) = parse_poly_free(&k, place)?;
        let f = factor(&k, &p)?;
        if !p.is_monic(&k) || f.len() != 1 || f[0].1 != 1 || p.degree() == Some(0) {
            return Err(Failure::Input(format!("place `{place}` is not a monic irreducible polynomial")));
        }
        Place::Finite(p)
    };
    let r = tame_symbol(&w, &v)?;
    let lines = vec![format!("residue field: {}", r.field().descriptor()), r.format()];
    Ok(Report::ok(lines, format!("tame symbol at {}", v.format(&k))))
}

fn check_cert(file: &Path, verbose: bool) -> Res<Report> {
    let s = CertificateScript::parse(&input::read(file)?)?;
    let v = run_certificate(&s);
    let mut lines = vec![format!("certificate {} in context {}", s.name, s.context)];
    for e in &v.log {
        lines.push(format!("step {} {}: {} terms", e.step, e.description, e.chain.len()));
        if verbose {
            lines.push(format!("  {}", e.chain.format()));
        }
    }
    if let Some(f) = &v.failure {
        lines.push(format!("rejected: {f}"));
    }
    if let Some(o) = v.oracle {
        lines.push(format!("oracle: {}", if o { "empty boundary class" } else { "nonempty boundary class" }));
    }
    let ok = v.accepted && v.oracle != Some(false);
    let summary = match &v.failure {
        None => format!("accepted {} ({} moves)", s.name, s.moves.len()),
        Some(f) => format!("rejected {}: {f}", s.name),
    };
    Ok(Report::verdict(lines, ok, summary))
}

fn suite_report(reports: Vec<SuiteReport>) -> Report {
    let mut lines = Vec::new();
    for r in &reports {
        lines.push(format!("{} {}", if r.ok() { "PASS" } else { "FAIL" }, r.line()));
        lines.extend(r.failures.iter().map(|f| format!("  {f}")));
    }
    let ok = reports.iter().all(|r| r.ok());
    let passed: usize = reports.iter().map(|r| r.passed).sum();
    let total: usize = reports.iter().map(|r| r.total).sum();
    Report::verdict(lines, ok, format!("{passed}/{total}"))
}

fn run_corpus(dir: &Path, filter: Option<&str>, seed: u64) -> Res<Report> {
    let wanted = |n: &str| filter.is_none_or(|f| n.contains(f));
    let mut lines = Vec::new();
    let (mut pass, mut fail, mut missing) = (0, 0, 0);
    for entry in load_corpus(dir)?.into_iter().filter(|e| wanted(&e.name)) {
        match entry.script {
            Err(LoadError::Missing(p)) => {
                missing += 1;
                lines.push(format!("MISSING {}: {}", entry.name, p.display()));
            }
            Err(e) => {
                missing += 1;
                lines.push(format!("INVALID {}: {e}", entry.name));
            }
            Ok(s) => {
                let v = run_certificate(&s);
                if v.accepted && v.oracle == Some(true) {
                    pass += 1;
                    lines.push(format!("PASS {} ({} moves)", s.name, s.moves.len()));
                } else {
                    fail += 1;
                    lines.push(format!("FAIL {}: {}", s.name, v.summary()));
                }
            }
        }
    }
    if SUITE_NAMES.iter().any(|n| wanted(n)) {
        let mut reports: Vec<SuiteReport> = suites::all_suites(seed).into_iter().filter(|r| wanted(&r.name)).collect();
        if wanted("k2-minus-one-squared") {
            let ok = suites::minus_one_squared_nonzero()?;
            let p = usize::from(ok);
            reports.push(SuiteReport { name: "k2-minus-one-squared".into(), total: 1, passed: p, skipped: 0, failures: vec![] });
        }
        for r in reports {
            if r.ok() {
                pass += 1;
                lines.push(format!("PASS suite {}", r.line()));
            } else {
                fail += 1;
                lines.push(format!("FAIL suite {} {:?}", r.line(), r.failures));
            }
        }
    }
    let summary = format!("{pass} passed, {fail} failed, {missing} missing");
    let code = if missing > 0 {
        2
    } else if fail > 0 {
        1
    } else {
        0
    };
    Ok(Report { lines, summary, code })
}
