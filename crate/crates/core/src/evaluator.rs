//! Word-level scoring against a gold file.
//!
//! Each gold row pairs a source token with its reference translation and the
//! transliterations an annotator accepts. A system output counts as "same"
//! when it equals the reference translation and as "wrong" when it matches
//! none of the accepted transliterations. Efficiency is 100 minus the wrong
//! percentage.

use alloc::string::{String, ToString};
use alloc::vec::Vec;
use core::fmt::{self, Write as _};

use thiserror::Error;

use crate::normalize::nfc;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GoldRecord {
    pub source: String,
    pub reference_translation: String,
    pub acceptable_transliterations: Vec<String>,
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum GoldError {
    #[error("line {line}: {reason}")]
    Parse { line: usize, reason: String },
}

/// Gold records grouped into sentences.
#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct GoldSet {
    pub sentences: Vec<Vec<GoldRecord>>,
}

impl GoldSet {
    /// Parses `source<TAB>reference<TAB>translit1|translit2|...` rows. Blank
    /// lines end a sentence; `#` lines are comments.
    pub fn parse(src: &str) -> Result<Self, GoldError> {
        let mut sentences = Vec::new();
        let mut current = Vec::new();
        for (i, raw) in src.lines().enumerate() {
            let line = i + 1;
            let text = raw.strip_suffix('\r').unwrap_or(raw);
            if text.trim().is_empty() {
                if !current.is_empty() {
                    sentences.push(core::mem::take(&mut current));
                }
                continue;
            }
            if text.trim_start().starts_with('#') {
                continue;
            }
            current.push(parse_row(line, text)?);
        }
        if !current.is_empty() {
            sentences.push(current);
        }
        Ok(GoldSet { sentences })
    }

    pub fn records(&self) -> impl Iterator<Item = &GoldRecord> {
        self.sentences.iter().flatten()
    }

    pub fn words(&self) -> usize {
        self.sentences.iter().map(Vec::len).sum()
    }
}

fn parse_row(line: usize, text: &str) -> Result<GoldRecord, GoldError> {
    let err = |reason: String| GoldError::Parse { line, reason };
    let cols: Vec<&str> = text.split('\t').collect();
    let [source, reference, translits] = cols[..] else {
        return Err(err(alloc::format!(
            "expected 3 tab-separated columns, found {}",
            cols.len()
        )));
    };
    if source.is_empty() {
        return Err(err("empty source".to_string()));
    }
    if reference.is_empty() {
        return Err(err("empty reference translation".to_string()));
    }
    let mut acceptable: Vec<String> = Vec::new();
    for t in translits.split('|') {
        if t.is_empty() {
            return Err(err("empty acceptable transliteration".to_string()));
        }
        let t = nfc(t).into_owned();
        if acceptable.contains(&t) {
            return Err(err(alloc::format!("duplicate acceptable transliteration {t:?}")));
        }
        acceptable.push(t);
    }
    Ok(GoldRecord {
        source: source.to_string(),
        reference_translation: reference.to_string(),
        acceptable_transliterations: acceptable,
    })
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Error)]
pub enum EvalError {
    #[error("{gold} gold records but {outputs} system outputs")]
    LengthMismatch { gold: usize, outputs: usize },
    #[error("nothing to evaluate")]
    EmptyEvaluation,
    #[error("count {count} exceeds the {words} words evaluated")]
    CountOutOfRange { count: u64, words: u64 },
}

/// A percentage held exactly in hundredths.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Percent(u32);

impl Percent {
    pub const HUNDRED: Percent = Percent(10_000);

    /// `100 * part / whole` rounded half-up to two decimals.
    pub fn of(part: u64, whole: u64) -> Percent {
        assert!(whole > 0 && part <= whole);
        let part = u128::from(part);
        let whole = u128::from(whole);
        Percent(((part * 20_000 + whole) / (2 * whole)) as u32)
    }

    pub fn hundredths(self) -> u32 {
        self.0
    }

    pub fn as_f64(self) -> f64 {
        f64::from(self.0) / 100.0
    }

    /// `100 - self`.
    pub fn complement(self) -> Percent {
        Percent(10_000 - self.0)
    }
}

impl fmt::Display for Percent {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}.{:02}", self.0 / 100, self.0 % 100)
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct EvalReport {
    pub sentences: u64,
    pub words: u64,
    pub same_count: u64,
    pub wrong_count: u64,
}

impl EvalReport {
    pub fn from_counts(sentences: u64, words: u64, same_count: u64, wrong_count: u64) -> Result<Self, EvalError> {
        if words == 0 {
            return Err(EvalError::EmptyEvaluation);
        }
        for count in [same_count, wrong_count] {
            if count > words {
                return Err(EvalError::CountOutOfRange { count, words });
            }
        }
        Ok(EvalReport {
            sentences,
            words,
            same_count,
            wrong_count,
        })
    }

    pub fn same_pct(&self) -> Percent {
        Percent::of(self.same_count, self.words)
    }

    pub fn wrong_pct(&self) -> Percent {
        Percent::of(self.wrong_count, self.words)
    }

    /// Always exactly `100 - wrong_pct`.
    pub fn efficiency_pct(&self) -> Percent {
        self.wrong_pct().complement()
    }

    pub fn render(&self, mode: RenderMode) -> String {
        let mut out = String::new();
        match mode {
            RenderMode::Table => {
                let rows = self.rows();
                let width = rows.iter().map(|(label, _, _)| label.chars().count()).max().unwrap_or(0);
                for (label, _, value) in rows {
                    let pad = width - label.chars().count();
                    let _ = writeln!(out, "{label}{:pad$}  {value:>8}", "");
                }
            }
            RenderMode::KeyValue => {
                for (_, key, value) in self.rows() {
                    let _ = writeln!(out, "{key}={value}");
                }
            }
        }
        out
    }

    fn rows(&self) -> [(&'static str, &'static str, String); 7] {
        [
            ("Sentences tested", "sentences", self.sentences.to_string()),
            ("Words tested", "words", self.words.to_string()),
            ("Words whose transliteration equals the translation", "same_count", self.same_count.to_string()),
            ("Same as translation (%)", "same_pct", self.same_pct().to_string()),
            ("Words transliterated wrongly", "wrong_count", self.wrong_count.to_string()),
            ("Wrongly transliterated (%)", "wrong_pct", self.wrong_pct().to_string()),
            ("Transliteration efficiency (%)", "efficiency_pct", self.efficiency_pct().to_string()),
        ]
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum RenderMode {
    /// Aligned, human-readable table.
    #[default]
    Table,
    /// `key=value` per line.
    KeyValue,
}

/// Scores `outputs`, aligned one-to-one with the records of `gold` in order.
pub fn evaluate<S: AsRef<str>>(gold: &GoldSet, outputs: &[S]) -> Result<EvalReport, EvalError> {
    let words = gold.words();
    if words != outputs.len() {
        return Err(EvalError::LengthMismatch {
            gold: words,
            outputs: outputs.len(),
        });
    }
    if words == 0 {
        return Err(EvalError::EmptyEvaluation);
    }
    let mut same = 0;
    let mut wrong = 0;
    for (record, output) in gold.records().zip(outputs) {
        let output = nfc(output.as_ref());
        if *output == *nfc(&record.reference_translation) {
            same += 1;
        }
        if !record
            .acceptable_transliterations
            .iter()
            .any(|t| *nfc(t) == *output)
        {
            wrong += 1;
        }
    }
    let sentences = gold.sentences.iter().filter(|s| !s.is_empty()).count() as u64;
    EvalReport::from_counts(sentences, words as u64, same, wrong)
}


#[cfg(test)]
mod props {
    use super::*;
    use proptest::prelude::*;

    proptest! {
        #[test]
        fn percentages_consistent(words in 1u64..1_000_000, a in 0u64..=1_000_000, b in 0u64..=1_000_000) {
            let same = a % (words + 1);
            let wrong = b % (words + 1);
            let r = EvalReport::from_counts(1, words, same, wrong).unwrap();
            prop_assert_eq!(r.efficiency_pct().hundredths() + r.wrong_pct().hundredths(), 10_000);
            // Exact-rational recomputation of the rounded value.
            let exact_wrong = wrong as f64 * 100.0 / words as f64;
            prop_assert!((r.wrong_pct().as_f64() - exact_wrong).abs() <= 0.005 + 1e-9);
            let exact_same = same as f64 * 100.0 / words as f64;
            prop_assert!((r.same_pct().as_f64() - exact_same).abs() <= 0.005 + 1e-9);
        }
    }
}
