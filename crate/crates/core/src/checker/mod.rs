//! Certificate scripts for relations in the motivic groups, and their checker.

mod script;

pub use script::{compact_chain, CertificateScript, Move, Side};
mod run;

pub use run::{apply_move, oracle_check, run_certificate, side_holds, Effect, Failure, K0Cache, LogEntry, Verdict};
pub mod builder;
pub mod relations;
pub mod proofs;
pub mod corpus;
pub use corpus::{export_corpus, load_corpus, CorpusEntry, LoadError};
pub use proofs::bundled_proofs;
