use std::fs;
use std::path::{Path, PathBuf};
use std::process::{Command, Output};

fn bin() -> Command {
    Command::new(env!("CARGO_BIN_EXE_motsym"))
}

fn proofs() -> PathBuf {
    Path::new(env!("CARGO_MANIFEST_DIR")).join("../../proofs")
}

fn run(args: &[&str]) -> Output {
    bin().args(args).output().expect("spawn motsym")
}

fn stdout(o: &Output) -> String {
    String::from_utf8_lossy(&o.stdout).into_owned()
}

fn last_line(o: &Output) -> String {
    stdout(o).lines().last().unwrap_or_default().to_string()
}

fn write(dir: &Path, name: &str, body: &str) -> PathBuf {
    let p = dir.join(name);
    fs::write(&p, body).unwrap();
    p
}

#[test]
fn help_lists_every_subcommand() {
    let o = run(&["--help"]);
    assert_eq!(o.status.code(), Some(0));
    let text = stdout(&o);
    for sub in [
        "validate",
        "boundary",
        "k0class",
        "iscycle",
        "irreducible",
        "phi",
        "rho",
        "norm",
        "tame",
        "reciprocity-fuzz",
        "invariant",
        "check-cert",
        "run-corpus",
    ] {
        assert!(text.lines().any(|l| l.trim_start().starts_with(sub)), "missing {sub}");
    }
}

#[test]
fn unknown_subcommand_and_flag_are_rejected() {
    let o = run(&["frobnicate"]);
    assert_eq!(o.status.code(), Some(2));
    assert!(String::from_utf8_lossy(&o.stderr).contains("Usage"));
    let o = run(&["reciprocity-fuzz", "--bogus"]);
    assert_eq!(o.status.code(), Some(2));
}

#[test]
fn bundled_certificate_is_accepted() {
    let p = proofs().join("lemma2.4.iv.cert");
    let o = run(&["check-cert", p.to_str().unwrap()]);
    assert_eq!(o.status.code(), Some(0), "{}", stdout(&o));
    assert!(stdout(&o).contains("step 1 "));
    assert!(last_line(&o).starts_with("RESULT: ok"));
}

#[test]
fn tampered_certificate_is_rejected() {
    let dir = tempfile::tempdir().unwrap();
    let text = fs::read_to_string(proofs().join("lemma3.1-negation.cert")).unwrap();
    let bad = text.replacen("coef:1,", "coef:2,", 1);
    assert_ne!(bad, text);
    let p = write(dir.path(), "bad.cert", &bad);
    let o = run(&["check-cert", p.to_str().unwrap()]);
    assert_eq!(o.status.code(), Some(1), "{}", stdout(&o));
    assert!(last_line(&o).starts_with("RESULT: fail"));
}

#[test]
fn malformed_certificate_is_an_input_error() {
    let dir = tempfile::tempdir().unwrap();
    let p = write(dir.path(), "x.cert", "{name:\"x\", context:");
    let o = run(&["check-cert", p.to_str().unwrap()]);
    assert_eq!(o.status.code(), Some(2));
}

#[test]
fn reciprocity_fuzz_default_run() {
    let o = run(&["reciprocity-fuzz", "--field", "Q", "--count", "200", "--seed", "7"]);
    assert_eq!(o.status.code(), Some(0));
    assert_eq!(last_line(&o), "RESULT: ok 200/200");
}

#[test]
fn non_commuting_input_names_the_pair() {
    let dir = tempfile::tempdir().unwrap();
    let p = write(dir.path(), "bad.sym", "{field:\"Q\", d:0, l:2, mats:[[[0,1],[1,0]],[[1,0],[0,2]]]}");
    let o = run(&["k0class", p.to_str().unwrap()]);
    assert_eq!(o.status.code(), Some(2));
    assert!(stdout(&o).contains("matrices 0 and 1"), "{}", stdout(&o));
}

#[test]
fn missing_input_file_is_an_input_error() {
    let o = run(&["validate", "/nonexistent/x.sym"]);
    assert_eq!(o.status.code(), Some(2));
}

#[test]
fn k0class_and_invariant_of_two_three() {
    let dir = tempfile::tempdir().unwrap();
    let s = write(dir.path(), "a.sym", "{field:\"Q\", d:0, l:2, mats:[[[2]],[[3]]]}");
    let o = run(&["k0class", s.to_str().unwrap()]);
    assert_eq!(o.status.code(), Some(0));
    assert!(stdout(&o).contains("(Q; 2, 3)"));
    let m = write(dir.path(), "a.mk", "{field:\"Q\", l:2, terms:[{coef:1, symbol:[2,3]}]}");
    let o = run(&["invariant", m.to_str().unwrap()]);
    assert_eq!(last_line(&o), "RESULT: ok hilbert2=-1 tame={3:2}");
}

#[test]
fn field_override_changes_the_base() {
    let dir = tempfile::tempdir().unwrap();
    let s = write(dir.path(), "a.sym", "{field:\"Q\", d:0, l:2, mats:[[[2]],[[3]]]}");
    let o = run(&["k0class", s.to_str().unwrap(), "--field", "Fp(7)"]);
    assert_eq!(o.status.code(), Some(0));
    assert!(stdout(&o).contains("Fp(7)"), "{}", stdout(&o));
}

#[test]
fn iscycle_verdicts() {
    let dir = tempfile::tempdir().unwrap();
    let yes = write(dir.path(), "y.sym", "{field:\"Q\", d:1, l:1, mats:[[[2,t],[0,3]]]}");
    assert_eq!(run(&["iscycle", yes.to_str().unwrap()]).status.code(), Some(0));
    let no = write(dir.path(), "n.sym", "{field:\"Q\", d:1, l:1, mats:[[[0,1,0],[0,0,1],[-12,t+3,-t+4]]]}");
    assert_eq!(run(&["iscycle", no.to_str().unwrap()]).status.code(), Some(1));
}

#[test]
fn tame_rejects_reducible_place() {
    let dir = tempfile::tempdir().unwrap();
    let w = write(dir.path(), "w.mk", "{field:\"Q(t)\", l:2, terms:[{coef:1, symbol:[\"t^2-2\",\"t\"]}]}");
    let o = run(&["tame", w.to_str().unwrap(), "--place", "t^2-2"]);
    assert_eq!(o.status.code(), Some(0));
    assert!(stdout(&o).contains("Ext(Q,t^2-2)"));
    let o = run(&["tame", w.to_str().unwrap(), "--place", "t^2-1"]);
    assert_eq!(o.status.code(), Some(2));
}

#[test]
fn run_corpus_filter() {
    let o = run(&["run-corpus", "--dir", proofs().to_str().unwrap(), "--filter", "lemma3.1"]);
    assert_eq!(o.status.code(), Some(0), "{}", stdout(&o));
    let body = stdout(&o);
    let results: Vec<&str> = body.lines().filter(|l| l.starts_with("PASS") || l.starts_with("FAIL")).collect();
    assert_eq!(results.len(), 2, "{body}");
    assert!(results.iter().all(|l| l.contains("lemma3.1")));
}

#[test]
fn run_corpus_reports_missing_certificate() {
    let dir = tempfile::tempdir().unwrap();
    for e in fs::read_dir(proofs()).unwrap() {
        let e = e.unwrap();
        fs::copy(e.path(), dir.path().join(e.file_name())).unwrap();
    }
    fs::remove_file(dir.path().join("cor2.5.cert")).unwrap();
    let o = run(&["run-corpus", "--dir", dir.path().to_str().unwrap(), "--filter", "cor2.5"]);
    assert_eq!(o.status.code(), Some(2));
    assert!(stdout(&o).contains("MISSING cor2.5"));
}

#[test]
fn output_is_deterministic() {
    let args = ["reciprocity-fuzz", "--field", "Fp(7)", "--count", "40", "--seed", "11"];
    let a = run(&args);
    let b = run(&args);
    assert_eq!(a.status.code(), Some(0));
    assert_eq!(a.stdout, b.stdout);
    let p = proofs().join("thm3.3-eq5.cert");
    let a = run(&["check-cert", p.to_str().unwrap(), "--verbose"]);
    let b = run(&["check-cert", p.to_str().unwrap(), "--verbose"]);
    assert_eq!(a.stdout, b.stdout);
}

#[test]
fn export_matches_checked_in_corpus() {
    let dir = tempfile::tempdir().unwrap();
    let o = run(&["export-corpus", "--dir", dir.path().to_str().unwrap()]);
    assert_eq!(o.status.code(), Some(0));
    for e in fs::read_dir(dir.path()).unwrap() {
        let e = e.unwrap();
        let fresh = fs::read(e.path()).unwrap();
        let kept = fs::read(proofs().join(e.file_name())).unwrap();
        assert!(fresh == kept, "{:?} differs from the checked-in copy", e.file_name());
    }
}
