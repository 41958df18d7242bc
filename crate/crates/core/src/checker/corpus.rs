//! The certificate corpus on disk: one `<name>.cert` per script and a
//! `MANIFEST` listing the names in order.

use std::fs;
use std::path::{Path, PathBuf};

use super::proofs::bundled_proofs;
use super::script::CertificateScript;
use crate::error::{Error, Result};

pub const MANIFEST: &str = "MANIFEST";

pub fn cert_path(dir: &Path, name: &str) -> PathBuf {
    dir.join(format!("{name}.cert"))
}

/// Writes the bundled scripts and the manifest into `dir`.
pub fn export_corpus(dir: &Path) -> Result<Vec<PathBuf>> {
    let io = |e: std::io::Error| Error::Context(format!("{}: {e}", dir.display()));
    fs::create_dir_all(dir).map_err(io)?;
    let mut written = Vec::new();
    let mut manifest = String::new();
    for s in bundled_proofs()? {
        let p = cert_path(dir, &s.name);
        fs::write(&p, s.format()).map_err(io)?;
        manifest.push_str(&s.name);
        manifest.push('\n');
        written.push(p);
    }
    fs::write(dir.join(MANIFEST), manifest).map_err(io)?;
    Ok(written)
}

/// One manifest entry: the script, or why it could not be loaded.
pub struct CorpusEntry {
    pub name: String,
    pub script: std::result::Result<CertificateScript, LoadError>,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum LoadError {
    Missing(PathBuf),
    Invalid(String),
}

impl std::fmt::Display for LoadError {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            LoadError::Missing(p) => write!(f, "missing file {}", p.display()),
            LoadError::Invalid(e) => write!(f, "unreadable script: {e}"),
        }
    }
}

/// Reads the manifest of `dir` and every script it names.
pub fn load_corpus(dir: &Path) -> Result<Vec<CorpusEntry>> {
    let m = dir.join(MANIFEST);
    let text = fs::read_to_string(&m).map_err(|e| Error::Context(format!("{}: {e}", m.display())))?;
    Ok(text
        .lines()
        .map(str::trim)
        .filter(|l| !l.is_empty() && !l.starts_with('#'))
        .map(|name| {
            let p = cert_path(dir, name);
            let script = match fs::read_to_string(&p) {
                Err(_) => Err(LoadError::Missing(p)),
                Ok(s) => CertificateScript::parse(&s).map_err(|e| LoadError::Invalid(e.to_string())),
            };
            CorpusEntry { name: name.to_string(), script }
        })
        .collect())
}
