//! Gujarati to Devanagari transliteration assisted by suffix stemming and
//! part-of-speech tags.
//!
//! The crate is `no_std` and only needs `alloc`. Every resource (rule files,
//! exception lists, tagged corpora, gold files) is parsed from in-memory text;
//! reading files and directories is left to the caller.
//!
//! The processing chain for one token:
//!
//! 1. look up the whole surface form in a [`TagLexicon`];
//! 2. strip a suffix with the tag-aware [`StemRuleSet`];
//! 3. render the suffix through a [`TagRuleTable`] entry matching
//!    `(suffix, tag)`, transliterating only the stem;
//! 4. otherwise fall back to plain codepoint mapping through the
//!    [`TransliterationTable`].

#![no_std]
#![forbid(unsafe_code)]

extern crate alloc;

#[cfg(test)]
extern crate std;

pub mod evaluator;
pub mod pipeline;
pub mod pos_lexicon;
pub mod rules;
pub mod script_map;
pub mod seed;
pub mod stemmer;

mod normalize;

pub use evaluator::{evaluate, EvalError, EvalReport, GoldError, GoldRecord, GoldSet, Percent, RenderMode};
pub use pipeline::{
    Path, Pipeline, ProcessedText, SuffixAction, TagRuleTable, TagSuffixRule, TextPiece, TokenResult,
};
pub use pos_lexicon::{parse_token, Diagnostic, MalformedToken, TagLexicon, TaggedToken};
pub use rules::{RuleFileError, TagMatcher};
pub use script_map::{build_default_table, Entry, ExceptionsError, NotInvertible, TransliterationTable};
pub use stemmer::{StemResult, StemRule, StemRuleSet};
