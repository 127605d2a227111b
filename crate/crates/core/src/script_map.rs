//! Codepoint-level Gujarati to Devanagari mapping.
//!
//! The two Unicode blocks are laid out in parallel: every Gujarati codepoint in
//! U+0A81..=U+0AEF sits exactly [`BLOCK_OFFSET`] above its Devanagari
//! counterpart. The default table is built from that offset; assigned
//! Gujarati codepoints outside the parallel range (rupee sign, Arabic-script
//! signs, ...) are pass-through exceptions. Exceptions can be patched from a
//! small data file without rebuilding.

use alloc::collections::BTreeMap;
use alloc::string::{String, ToString};
use core::iter::Peekable;

use thiserror::Error;

use crate::normalize::nfc;
use crate::rules::data_lines;

/// Distance between the Gujarati (U+0A80) and Devanagari (U+0900) blocks.
pub const BLOCK_OFFSET: u32 = 0x0180;

/// The Gujarati Unicode block.
pub const GUJARATI_BLOCK: core::ops::RangeInclusive<char> = '\u{0A80}'..='\u{0AFF}';

/// The Devanagari Unicode block.
pub const DEVANAGARI_BLOCK: core::ops::RangeInclusive<char> = '\u{0900}'..='\u{097F}';

const MAPPED_RANGE: core::ops::RangeInclusive<char> = '\u{0A81}'..='\u{0AEF}';

/// Assigned codepoints of the Gujarati block (Unicode 15).
const GUJARATI_ASSIGNED: &[(u32, u32)] = &[
    (0x0A81, 0x0A83),
    (0x0A85, 0x0A8D),
    (0x0A8F, 0x0A91),
    (0x0A93, 0x0AA8),
    (0x0AAA, 0x0AB0),
    (0x0AB2, 0x0AB3),
    (0x0AB5, 0x0AB9),
    (0x0ABC, 0x0AC5),
    (0x0AC7, 0x0AC9),
    (0x0ACB, 0x0ACD),
    (0x0AD0, 0x0AD0),
    (0x0AE0, 0x0AE3),
    (0x0AE6, 0x0AF1),
    (0x0AF9, 0x0AFF),
];

pub fn is_gujarati(c: char) -> bool {
    GUJARATI_BLOCK.contains(&c)
}

pub fn is_devanagari(c: char) -> bool {
    DEVANAGARI_BLOCK.contains(&c)
}

fn gujarati_assigned() -> impl Iterator<Item = char> {
    GUJARATI_ASSIGNED
        .iter()
        .flat_map(|&(lo, hi)| lo..=hi)
        .filter_map(char::from_u32)
}

/// How the table treats one source codepoint.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Entry<'a> {
    Mapped(char),
    /// Explicit target; empty means the codepoint passes through unchanged.
    Exception(&'a str),
    Unmapped,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct PunctuationRule {
    pub target: char,
    pub enabled: bool,
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ExceptionsError {
    #[error("line {line}: {reason}")]
    Parse { line: usize, reason: String },
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Error)]
#[error("{ch:?} (U+{:04X}) at byte {offset} has no Gujarati preimage", *ch as u32)]
pub struct NotInvertible {
    pub ch: char,
    pub offset: usize,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TransliterationTable {
    mappings: BTreeMap<char, char>,
    exceptions: BTreeMap<char, String>,
    punctuation: BTreeMap<char, PunctuationRule>,
    // Inverse of `mappings` restricted to non-exception sources.
    reverse: BTreeMap<char, char>,
}

/// The stock Gujarati to Devanagari table with "." → "।" enabled.
pub fn build_default_table() -> TransliterationTable {
    TransliterationTable::gujarati_to_devanagari()
}

impl TransliterationTable {
    /// An empty table: every codepoint passes through.
    pub fn empty() -> Self {
        TransliterationTable {
            mappings: BTreeMap::new(),
            exceptions: BTreeMap::new(),
            punctuation: BTreeMap::new(),
            reverse: BTreeMap::new(),
        }
    }

    pub fn gujarati_to_devanagari() -> Self {
        let mut table = Self::empty();
        for src in gujarati_assigned() {
            let image = char::from_u32(src as u32 - BLOCK_OFFSET);
            match image {
                Some(dst) if MAPPED_RANGE.contains(&src) => {
                    table.mappings.insert(src, dst);
                }
                _ => {
                    table.exceptions.insert(src, String::new());
                }
            }
        }
        table.punctuation.insert(
            '.',
            PunctuationRule {
                target: '\u{0964}',
                enabled: true,
            },
        );
        table.rebuild_reverse();
        table
    }

    fn rebuild_reverse(&mut self) {
        self.reverse = self
            .mappings
            .iter()
            .filter(|(src, _)| !self.exceptions.contains_key(src))
            .map(|(&src, &dst)| (dst, src))
            .collect();
    }

    pub fn insert_mapping(&mut self, src: char, dst: char) {
        self.mappings.insert(src, dst);
        self.rebuild_reverse();
    }

    pub fn insert_exception(&mut self, src: char, target: impl Into<String>) {
        self.exceptions.insert(src, target.into());
        self.rebuild_reverse();
    }

    /// Applies an exceptions file: `U+XXXX<TAB>target`, empty target meaning
    /// pass-through. Later lines override earlier ones and the defaults.
    pub fn apply_exceptions(&mut self, src: &str) -> Result<(), ExceptionsError> {
        let mut parsed = alloc::vec::Vec::new();
        for (line, text) in data_lines(src) {
            let (cp, target) = text.split_once('\t').ok_or_else(|| ExceptionsError::Parse {
                line,
                reason: "expected `U+XXXX<TAB>target`".to_string(),
            })?;
            if target.contains('\t') {
                return Err(ExceptionsError::Parse {
                    line,
                    reason: "target must not contain a tab".to_string(),
                });
            }
            let ch = parse_codepoint(cp).ok_or_else(|| ExceptionsError::Parse {
                line,
                reason: alloc::format!("invalid codepoint {cp:?}"),
            })?;
            parsed.push((ch, target.to_string()));
        }
        for (ch, target) in parsed {
            self.exceptions.insert(ch, target);
        }
        self.rebuild_reverse();
        Ok(())
    }

    pub fn set_punctuation(&mut self, src: char, target: char, enabled: bool) {
        self.punctuation.insert(src, PunctuationRule { target, enabled });
    }

    /// Turns an existing punctuation rule on or off. Returns false if there
    /// is no rule for `src`.
    pub fn set_punctuation_enabled(&mut self, src: char, enabled: bool) -> bool {
        match self.punctuation.get_mut(&src) {
            Some(rule) => {
                rule.enabled = enabled;
                true
            }
            None => false,
        }
    }

    pub fn entry(&self, c: char) -> Entry<'_> {
        if let Some(target) = self.exceptions.get(&c) {
            Entry::Exception(target)
        } else if let Some(&dst) = self.mappings.get(&c) {
            Entry::Mapped(dst)
        } else {
            Entry::Unmapped
        }
    }

    pub fn mappings(&self) -> impl Iterator<Item = (char, char)> + '_ {
        self.mappings.iter().map(|(&s, &d)| (s, d))
    }

    pub fn exceptions(&self) -> impl Iterator<Item = (char, &str)> + '_ {
        self.exceptions.iter().map(|(&s, d)| (s, d.as_str()))
    }

    pub fn punctuation_rules(&self) -> impl Iterator<Item = (char, PunctuationRule)> + '_ {
        self.punctuation.iter().map(|(&s, &r)| (s, r))
    }

    /// Punctuation rendering for `c`, if an enabled rule applies.
    /// Rules fire only in sentence-final position.
    pub fn map_punctuation(&self, c: char, sentence_final: bool) -> Option<char> {
        if !sentence_final {
            return None;
        }
        self.punctuation
            .get(&c)
            .filter(|rule| rule.enabled)
            .map(|rule| rule.target)
    }

    pub fn transliterate_char(&self, c: char) -> String {
        let mut out = String::new();
        self.push_char(c, &mut out);
        out
    }

    fn push_char(&self, c: char, out: &mut String) {
        match self.entry(c) {
            Entry::Exception("") | Entry::Unmapped => out.push(c),
            Entry::Exception(target) => out.push_str(target),
            Entry::Mapped(dst) => out.push(dst),
        }
    }

    /// Naive transliteration of a whole string. Input is NFC-normalized
    /// first; the end of `s` counts as a sentence boundary.
    pub fn transliterate(&self, s: &str) -> String {
        let mut out = String::with_capacity(s.len());
        self.transliterate_into(s, true, &mut out);
        out
    }

    /// As [`transliterate`](Self::transliterate), appending to `out`.
    /// `end_is_boundary` says whether whatever follows `s` in the enclosing
    /// text is whitespace or end of text.
    pub fn transliterate_into(&self, s: &str, end_is_boundary: bool, out: &mut String) {
        let normalized = nfc(s);
        let mut chars: Peekable<_> = normalized.chars().peekable();
        while let Some(c) = chars.next() {
            let sentence_final = match chars.peek() {
                Some(next) => next.is_whitespace(),
                None => end_is_boundary,
            };
            match self.map_punctuation(c, sentence_final) {
                Some(p) => out.push(p),
                None => self.push_char(c, out),
            }
        }
    }

    /// Maps Devanagari produced by this table back to Gujarati.
    ///
    /// Characters outside the Devanagari block pass through. Punctuation
    /// targets of enabled rules map back to their source. Input is not
    /// normalized, so precomposed nukta letters stay non-invertible.
    pub fn reverse_transliterate(&self, s: &str) -> Result<String, NotInvertible> {
        let mut out = String::with_capacity(s.len());
        for (offset, c) in s.char_indices() {
            if let Some(&src) = self.reverse.get(&c) {
                out.push(src);
            } else if let Some(src) = self.punctuation_source(c) {
                out.push(src);
            } else if is_devanagari(c) {
                return Err(NotInvertible { ch: c, offset });
            } else {
                out.push(c);
            }
        }
        Ok(out)
    }

    fn punctuation_source(&self, target: char) -> Option<char> {
        self.punctuation
            .iter()
            .find(|(_, rule)| rule.enabled && rule.target == target)
            .map(|(&src, _)| src)
    }
}

impl Default for TransliterationTable {
    fn default() -> Self {
        Self::gujarati_to_devanagari()
    }
}

fn parse_codepoint(field: &str) -> Option<char> {
    let hex = field
        .strip_prefix("U+")
        .or_else(|| field.strip_prefix("u+"))?;
    if hex.is_empty() || hex.len() > 6 {
        return None;
    }
    u32::from_str_radix(hex, 16).ok().and_then(char::from_u32)
}
