use std::path::Path;

use motsym::checker::{bundled_proofs, load_corpus, run_certificate, CertificateScript};

fn proofs() -> &'static Path {
    Path::new(concat!(env!("CARGO_MANIFEST_DIR"), "/../../proofs"))
}

#[test]
fn checked_in_corpus_matches_builder_output() {
    let built = bundled_proofs().unwrap();
    let loaded = load_corpus(proofs()).unwrap();
    assert_eq!(loaded.len(), built.len());
    for (b, e) in built.iter().zip(&loaded) {
        assert_eq!(b.name, e.name);
        let s = e.script.as_ref().unwrap();
        assert_eq!(s, b, "{} differs from the builder", b.name);
    }
}

#[test]
fn scripts_round_trip_through_text() {
    for s in bundled_proofs().unwrap() {
        let back = CertificateScript::parse(&s.format()).unwrap();
        assert_eq!(back, s);
        assert_eq!(back.format(), s.format());
    }
}

#[test]
fn dropping_a_move_is_rejected() {
    for s in bundled_proofs().unwrap().into_iter().filter(|s| s.name.starts_with("lemma2.4")) {
        let mut cut = s.clone();
        let i = cut.moves.iter().position(|m| m.kind() == "addboundary").unwrap();
        cut.moves.remove(i);
        let v = run_certificate(&cut);
        assert!(!v.accepted || v.oracle != Some(true), "{} accepted without a boundary move", s.name);
    }
}
