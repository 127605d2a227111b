//! Tagged corpus directories: every `*.txt` file, one sentence per line.

use std::fmt;
use std::fs;
use std::path::{Path, PathBuf};

use anyhow::{Context, Result};
use guj2hin_core::{Diagnostic, TagLexicon};

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FileDiagnostic {
    pub file: PathBuf,
    pub diagnostic: Diagnostic,
}

impl fmt::Display for FileDiagnostic {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let d = &self.diagnostic;
        write!(
            f,
            "{}:{}:{}: skipped token `{}`: {}",
            self.file.display(),
            d.line,
            d.column,
            d.token,
            d.reason
        )
    }
}

#[derive(Debug, Default)]
pub struct Ingested {
    pub lexicon: TagLexicon,
    pub files: Vec<PathBuf>,
    pub diagnostics: Vec<FileDiagnostic>,
}

/// `*.txt` files directly inside `dir`, sorted by file name.
pub fn corpus_files(dir: &Path) -> Result<Vec<PathBuf>> {
    let entries = fs::read_dir(dir).with_context(|| format!("cannot read corpus directory {}", dir.display()))?;
    let mut files = Vec::new();
    for entry in entries {
        let path = entry.with_context(|| format!("cannot read corpus directory {}", dir.display()))?.path();
        if path.is_file() && path.extension().is_some_and(|e| e == "txt") {
            files.push(path);
        }
    }
    files.sort_by(|a, b| a.file_name().cmp(&b.file_name()));
    Ok(files)
}

pub fn ingest_dir(dir: &Path) -> Result<Ingested> {
    let mut out = Ingested::default();
    for file in corpus_files(dir)? {
        let text = fs::read_to_string(&file).with_context(|| format!("cannot read {}", file.display()))?;
        for diagnostic in out.lexicon.ingest(&text) {
            out.diagnostics.push(FileDiagnostic {
                file: file.clone(),
                diagnostic,
            });
        }
        out.files.push(file);
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn only_txt_in_name_order() {
        let dir = tempfile::tempdir().unwrap();
        fs::write(dir.path().join("b.txt"), "x_NN\n").unwrap();
        fs::write(dir.path().join("a.txt"), "y\n").unwrap();
        fs::write(dir.path().join("c.md"), "z_NN\n").unwrap();
        fs::create_dir(dir.path().join("d.txt")).unwrap();
        let got = ingest_dir(dir.path()).unwrap();
        let names: Vec<_> = got.files.iter().map(|f| f.file_name().unwrap().to_owned()).collect();
        assert_eq!(names, ["a.txt", "b.txt"]);
        assert_eq!(got.lexicon.total_tokens(), 1);
        assert_eq!(got.lexicon.total_sentences(), 2);
        assert_eq!(got.diagnostics.len(), 1);
        let shown = got.diagnostics[0].to_string();
        assert!(shown.ends_with("a.txt:1:1: skipped token `y`: no `_` separating word and tag"), "{shown}");
    }

    #[test]
    fn missing_dir_is_an_error() {
        assert!(ingest_dir(Path::new("/no/such/corpus")).is_err());
    }
}
