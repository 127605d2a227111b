//! Word → tag frequencies from `word_TAG` corpora.

use alloc::collections::BTreeMap;
use alloc::string::{String, ToString};
use alloc::vec::Vec;

use thiserror::Error;

use crate::normalize::nfc;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct TaggedToken<'a> {
    pub surface: &'a str,
    pub tag: &'a str,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Error)]
pub enum MalformedToken {
    #[error("no `_` separating word and tag")]
    MissingSeparator,
    #[error("empty word before `_`")]
    EmptySurface,
    #[error("empty tag after `_`")]
    EmptyTag,
    #[error("tag contains whitespace")]
    WhitespaceInTag,
}

/// Splits `word_TAG` on the last underscore.
pub fn parse_token(text: &str) -> Result<TaggedToken<'_>, MalformedToken> {
    let (surface, tag) = text.rsplit_once('_').ok_or(MalformedToken::MissingSeparator)?;
    if surface.is_empty() {
        return Err(MalformedToken::EmptySurface);
    }
    if tag.is_empty() {
        return Err(MalformedToken::EmptyTag);
    }
    if tag.chars().any(char::is_whitespace) {
        return Err(MalformedToken::WhitespaceInTag);
    }
    Ok(TaggedToken { surface, tag })
}

/// A token that was skipped during ingestion. `line` and `column` are
/// 1-based; the column counts codepoints.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Diagnostic {
    pub line: usize,
    pub column: usize,
    pub token: String,
    pub reason: MalformedToken,
}

#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct TagLexicon {
    entries: BTreeMap<String, BTreeMap<String, u64>>,
    total_tokens: u64,
    total_sentences: u64,
}

impl TagLexicon {
    pub fn new() -> Self {
        TagLexicon::default()
    }

    /// Counts every well-formed token of `corpus` (one sentence per line).
    /// Malformed tokens are returned as diagnostics and otherwise ignored.
    pub fn ingest(&mut self, corpus: &str) -> Vec<Diagnostic> {
        let mut diagnostics = Vec::new();
        for (i, line) in corpus.lines().enumerate() {
            self.ingest_line(i + 1, line, &mut diagnostics);
        }
        diagnostics
    }

    /// Ingests one sentence line. Blank lines are not counted as sentences.
    pub fn ingest_line(&mut self, line_no: usize, line: &str, diagnostics: &mut Vec<Diagnostic>) {
        let mut any = false;
        let mut token_start = None;
        // Walk by char so columns come out in codepoints.
        for (ci, (bi, c)) in line.char_indices().enumerate() {
            if c.is_whitespace() {
                if let Some((start_b, start_c)) = token_start.take() {
                    self.ingest_token(line_no, start_c, &line[start_b..bi], diagnostics);
                }
            } else if token_start.is_none() {
                token_start = Some((bi, ci + 1));
                any = true;
            }
        }
        if let Some((start_b, start_c)) = token_start {
            self.ingest_token(line_no, start_c, &line[start_b..], diagnostics);
        }
        if any {
            self.total_sentences += 1;
        }
    }

    fn ingest_token(&mut self, line: usize, column: usize, text: &str, diagnostics: &mut Vec<Diagnostic>) {
        match parse_token(text) {
            Ok(tok) => self.add(tok.surface, tok.tag, 1),
            Err(reason) => diagnostics.push(Diagnostic {
                line,
                column,
                token: text.to_string(),
                reason,
            }),
        }
    }

    /// Adds `count` occurrences of `surface` tagged `tag`. A zero count is a
    /// no-op so that per-tag counts stay positive.
    pub fn add(&mut self, surface: &str, tag: &str, count: u64) {
        if count == 0 {
            return;
        }
        let surface = nfc(surface).into_owned();
        *self
            .entries
            .entry(surface)
            .or_default()
            .entry(tag.to_string())
            .or_insert(0) += count;
        self.total_tokens += count;
    }

    pub fn add_sentences(&mut self, n: u64) {
        self.total_sentences += n;
    }

    /// Folds `other` into `self`.
    pub fn merge(&mut self, other: &TagLexicon) {
        for (surface, tags) in &other.entries {
            for (tag, &count) in tags {
                self.add(surface, tag, count);
            }
        }
        self.total_sentences += other.total_sentences;
    }

    /// Most frequent tag, ties going to the lexicographically smallest.
    pub fn lookup(&self, surface: &str) -> Option<&str> {
        let tags = self.entries.get(nfc(surface).as_ref())?;
        // BTreeMap iterates tags in ascending order; keep the first maximum.
        let mut best: Option<(&str, u64)> = None;
        for (tag, &count) in tags {
            if best.is_none_or(|(_, c)| count > c) {
                best = Some((tag, count));
            }
        }
        best.map(|(tag, _)| tag)
    }

    pub fn tag_counts(&self, surface: &str) -> Option<&BTreeMap<String, u64>> {
        self.entries.get(nfc(surface).as_ref())
    }

    /// `(surface, tag, count)` triples in sorted order.
    pub fn iter(&self) -> impl Iterator<Item = (&str, &str, u64)> {
        self.entries.iter().flat_map(|(surface, tags)| {
            tags.iter()
                .map(move |(tag, &count)| (surface.as_str(), tag.as_str(), count))
        })
    }

    /// Number of distinct surface forms.
    pub fn len(&self) -> usize {
        self.entries.len()
    }

    pub fn is_empty(&self) -> bool {
        self.entries.is_empty()
    }

    pub fn total_tokens(&self) -> u64 {
        self.total_tokens
    }

    pub fn total_sentences(&self) -> u64 {
        self.total_sentences
    }
}


#[cfg(test)]
mod props {
    use super::*;
    use proptest::prelude::*;

    fn token() -> impl Strategy<Value = String> {
        prop_oneof![
            ("[a-c]{1,3}", "NN|NNP|VM").prop_map(|(w, t)| alloc::format!("{w}_{t}")),
            "[a-c]{1,3}",
            Just("_NN".to_string()),
        ]
    }

    proptest! {
        #[test]
        fn counts_conserved(lines in proptest::collection::vec(proptest::collection::vec(token(), 0..6), 0..8)) {
            let corpus: String = lines.iter().map(|l| l.join(" ") + "\n").collect();
            let mut lex = TagLexicon::new();
            let diags = lex.ingest(&corpus);
            let well_formed = lines.iter().flatten().filter(|t| parse_token(t).is_ok()).count() as u64;
            prop_assert_eq!(lex.total_tokens(), well_formed);
            prop_assert_eq!(diags.len() as u64 + well_formed, lines.iter().flatten().count() as u64);
            prop_assert_eq!(lex.iter().map(|(_, _, c)| c).sum::<u64>(), lex.total_tokens());
            for (surface, _, count) in lex.iter() {
                prop_assert!(count >= 1);
                prop_assert!(lex.lookup(surface).is_some());
            }
        }
    }
}
