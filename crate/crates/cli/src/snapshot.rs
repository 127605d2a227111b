//! Versioned plain-text dump of a [`TagLexicon`].
//!
//! Tab-separated: a `guj2hin-lexicon 1` header, then `sentences n` and
//! `tokens n`, then one `surface tag count` row per pair.
//!
//! Rows are written in sorted order, so equal lexicons give identical bytes.

use std::fmt::Write as _;

use guj2hin_core::TagLexicon;
use thiserror::Error;

pub const MAGIC: &str = "guj2hin-lexicon";
pub const VERSION: u32 = 1;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
#[error("line {line}: {reason}")]
pub struct SnapshotError {
    pub line: usize,
    pub reason: String,
}

fn err(line: usize, reason: impl Into<String>) -> SnapshotError {
    SnapshotError {
        line,
        reason: reason.into(),
    }
}

pub fn write(lex: &TagLexicon) -> String {
    let mut out = String::new();
    let _ = writeln!(out, "{MAGIC}\t{VERSION}");
    let _ = writeln!(out, "sentences\t{}", lex.total_sentences());
    let _ = writeln!(out, "tokens\t{}", lex.total_tokens());
    for (surface, tag, count) in lex.iter() {
        let _ = writeln!(out, "{surface}\t{tag}\t{count}");
    }
    out
}

fn header_value(lines: &mut std::str::Lines<'_>, line: usize, key: &str) -> Result<u64, SnapshotError> {
    let text = lines.next().ok_or_else(|| err(line, format!("missing `{key}` line")))?;
    let value = text
        .strip_prefix(key)
        .and_then(|rest| rest.strip_prefix('\t'))
        .ok_or_else(|| err(line, format!("expected `{key}<TAB>n`")))?;
    value.parse().map_err(|_| err(line, format!("bad {key} count `{value}`")))
}

pub fn read(src: &str) -> Result<TagLexicon, SnapshotError> {
    let mut lines = src.lines();
    match lines.next().map(|l| l.split_once('\t')) {
        Some(Some((MAGIC, v))) if v == VERSION.to_string() => {}
        Some(Some((MAGIC, v))) => return Err(err(1, format!("unsupported snapshot version `{v}`"))),
        _ => return Err(err(1, format!("not a lexicon snapshot (expected `{MAGIC}<TAB>{VERSION}`)"))),
    }
    let sentences = header_value(&mut lines, 2, "sentences")?;
    let tokens = header_value(&mut lines, 3, "tokens")?;
    let mut lex = TagLexicon::new();
    let mut seen = std::collections::BTreeSet::new();
    for (i, row) in lines.enumerate() {
        let line = i + 4;
        let fields: Vec<&str> = row.split('\t').collect();
        let [surface, tag, count] = fields[..] else {
            return Err(err(line, format!("expected 3 tab-separated fields, found {}", fields.len())));
        };
        if surface.is_empty() || tag.is_empty() {
            return Err(err(line, "empty surface or tag"));
        }
        let count: u64 = count.parse().map_err(|_| err(line, format!("bad count `{count}`")))?;
        if count == 0 {
            return Err(err(line, "count must be positive"));
        }
        if !seen.insert((surface, tag)) {
            return Err(err(line, format!("duplicate entry {surface} {tag}")));
        }
        lex.add(surface, tag, count);
    }
    if lex.total_tokens() != tokens {
        return Err(err(3, format!("header says {tokens} tokens, rows sum to {}", lex.total_tokens())));
    }
    lex.add_sentences(sentences);
    Ok(lex)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn round_trip() {
        let mut lex = TagLexicon::new();
        lex.ingest("રામે_NNP મને_PRP\nઘરે_NLOC ઘરે_NN ઘરે_NLOC\n");
        let text = write(&lex);
        assert!(text.starts_with("guj2hin-lexicon\t1\nsentences\t2\ntokens\t5\n"));
        let back = read(&text).unwrap();
        assert_eq!(back, lex);
        assert_eq!(write(&back), text);
    }

    #[test]
    fn empty_round_trip() {
        let lex = TagLexicon::new();
        assert_eq!(read(&write(&lex)).unwrap(), lex);
    }

    #[test]
    fn errors_carry_lines() {
        assert_eq!(read("junk\n").unwrap_err().line, 1);
        assert_eq!(read("guj2hin-lexicon\t9\n").unwrap_err().line, 1);
        assert_eq!(read("guj2hin-lexicon\t1\nsentences\tx\n").unwrap_err().line, 2);
        let bad_row = "guj2hin-lexicon\t1\nsentences\t1\ntokens\t1\nw\tNN\n";
        assert_eq!(read(bad_row).unwrap_err().line, 4);
        let dup = "guj2hin-lexicon\t1\nsentences\t1\ntokens\t2\nw\tNN\t1\nw\tNN\t1\n";
        assert_eq!(read(dup).unwrap_err().line, 5);
        let sum = "guj2hin-lexicon\t1\nsentences\t1\ntokens\t7\nw\tNN\t1\n";
        assert_eq!(read(sum).unwrap_err().line, 3);
    }
}
