//! Tag- and stem-assisted transliteration of tokens and running text.
//!
//! A Gujarati token is first looked up whole in the lexicon. With a tag in
//! hand it is stemmed, and if a tag-suffix rule covers the stripped
//! `(suffix, tag)` pair the stem is transliterated and the suffix is rendered
//! by the rule, either as a separate Hindi word (ergative ે → "ने") or bound
//! to the stem. Anything else goes through naive codepoint mapping.

use alloc::collections::BTreeSet;
use alloc::string::{String, ToString};
use alloc::vec::Vec;

use crate::normalize::nfc;
use crate::pos_lexicon::TagLexicon;
use crate::rules::{data_lines, fields, validate_rule_id, RuleFileError, TagMatcher};
use crate::script_map::{is_gujarati, TransliterationTable};
use crate::stemmer::StemRuleSet;

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum SuffixAction {
    /// `SEP`: stem, a space, then the target.
    EmitSeparateWord(String),
    /// `ATTACH`: target glued to the stem.
    AttachToStem(String),
}

impl SuffixAction {
    pub fn target(&self) -> &str {
        match self {
            SuffixAction::EmitSeparateWord(t) | SuffixAction::AttachToStem(t) => t,
        }
    }

    fn render(&self, stem: &str, out: &mut String) {
        out.push_str(stem);
        if let SuffixAction::EmitSeparateWord(_) = self {
            out.push(' ');
        }
        out.push_str(self.target());
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TagSuffixRule {
    suffix: String,
    tag: TagMatcher,
    action: SuffixAction,
    rule_id: String,
}

impl TagSuffixRule {
    pub fn new(suffix: &str, tag: TagMatcher, action: SuffixAction, rule_id: impl Into<String>) -> Result<Self, String> {
        let suffix = nfc(suffix).into_owned();
        if suffix.is_empty() {
            return Err("empty suffix".to_string());
        }
        let target = action.target();
        if target.trim().is_empty() || target.trim() != target || target.contains(['\t', '\n', '\r']) {
            return Err(alloc::format!("invalid target {target:?}"));
        }
        Ok(TagSuffixRule {
            suffix,
            tag,
            action,
            rule_id: rule_id.into(),
        })
    }

    pub fn suffix(&self) -> &str {
        &self.suffix
    }

    pub fn tag_pattern(&self) -> &TagMatcher {
        &self.tag
    }

    pub fn action(&self) -> &SuffixAction {
        &self.action
    }

    pub fn rule_id(&self) -> &str {
        &self.rule_id
    }
}

#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct TagRuleTable {
    rules: Vec<TagSuffixRule>,
}

impl TagRuleTable {
    pub fn empty() -> Self {
        TagRuleTable::default()
    }

    pub fn new(rules: Vec<TagSuffixRule>) -> Result<Self, RuleFileError> {
        Self::from_numbered(rules.into_iter().enumerate().map(|(i, r)| (i + 1, r)).collect())
    }

    /// Parses `suffix<TAB>tag_pattern<TAB>SEP|ATTACH<TAB>target<TAB>rule_id`.
    pub fn parse(src: &str) -> Result<Self, RuleFileError> {
        let mut rules = Vec::new();
        for (line, text) in data_lines(src) {
            let [suffix, tag, kind, target, rule_id] = fields::<5>(line, text)?;
            let parse_err = |reason: String| RuleFileError::Parse { line, reason };
            let tag = TagMatcher::parse(tag).map_err(parse_err)?;
            let action = match kind {
                "SEP" => SuffixAction::EmitSeparateWord(target.to_string()),
                "ATTACH" => SuffixAction::AttachToStem(target.to_string()),
                other => return Err(parse_err(alloc::format!("unknown action {other:?}, expected SEP or ATTACH"))),
            };
            validate_rule_id(line, rule_id)?;
            rules.push((line, TagSuffixRule::new(suffix, tag, action, rule_id).map_err(parse_err)?));
        }
        Self::from_numbered(rules)
    }

    fn from_numbered(rules: Vec<(usize, TagSuffixRule)>) -> Result<Self, RuleFileError> {
        let mut keys = BTreeSet::new();
        let mut ids = BTreeSet::new();
        for (line, rule) in &rules {
            if !keys.insert((rule.suffix.as_str(), &rule.tag)) {
                return Err(RuleFileError::DuplicateRule {
                    line: *line,
                    suffix: rule.suffix.clone(),
                    tag: rule.tag.clone(),
                });
            }
            if !ids.insert(rule.rule_id.as_str()) {
                return Err(RuleFileError::DuplicateRuleId {
                    line: *line,
                    rule_id: rule.rule_id.clone(),
                });
            }
        }
        Ok(TagRuleTable {
            rules: rules.into_iter().map(|(_, r)| r).collect(),
        })
    }

    pub fn iter(&self) -> impl Iterator<Item = &TagSuffixRule> {
        self.rules.iter()
    }

    pub fn len(&self) -> usize {
        self.rules.len()
    }

    pub fn is_empty(&self) -> bool {
        self.rules.is_empty()
    }

    pub fn get(&self, rule_id: &str) -> Option<&TagSuffixRule> {
        self.rules.iter().find(|r| r.rule_id == rule_id)
    }

    /// The rule for `suffix` whose pattern accepts `tag`, preferring an exact
    /// tag over `*` over `-`.
    pub fn find(&self, suffix: &str, tag: &str) -> Option<&TagSuffixRule> {
        self.rules
            .iter()
            .filter(|r| r.suffix == suffix && r.tag.matches(Some(tag)))
            .max_by_key(|r| r.tag.specificity())
    }
}

/// Which branch produced a token's output.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Path {
    TagConditioned,
    NaiveFallback,
    /// No Gujarati in the token; output equals source.
    Passthrough,
    /// Punctuation detached from a word, possibly mapped (e.g. "." → "।").
    Punctuation,
}

impl Path {
    pub fn as_str(self) -> &'static str {
        match self {
            Path::TagConditioned => "tag-conditioned",
            Path::NaiveFallback => "naive-fallback",
            Path::Passthrough => "passthrough",
            Path::Punctuation => "punctuation",
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TokenResult {
    pub source: String,
    pub output: String,
    pub tag_used: Option<String>,
    pub stem_rule_id: Option<String>,
    pub tag_suffix_rule_id: Option<String>,
    pub path: Path,
}

impl TokenResult {
    fn plain(source: &str, output: String, path: Path) -> Self {
        TokenResult {
            source: source.to_string(),
            output,
            tag_used: None,
            stem_rule_id: None,
            tag_suffix_rule_id: None,
            path,
        }
    }
}

/// One token of a processed text together with the whitespace that preceded
/// it in the input (empty when the token was split off its neighbour).
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TextPiece {
    pub separator: String,
    pub result: TokenResult,
}

#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct ProcessedText {
    pub pieces: Vec<TextPiece>,
    /// Whitespace after the last token.
    pub trailing: String,
    pub output: String,
}

impl ProcessedText {
    pub fn results(&self) -> impl Iterator<Item = &TokenResult> {
        self.pieces.iter().map(|p| &p.result)
    }

    /// Reassembles the original input from separators and sources.
    pub fn source_text(&self) -> String {
        let mut s = String::new();
        for piece in &self.pieces {
            s.push_str(&piece.separator);
            s.push_str(&piece.result.source);
        }
        s.push_str(&self.trailing);
        s
    }
}

/// Characters split off the edges of whitespace-delimited words.
pub fn is_detachable_punctuation(c: char) -> bool {
    c.is_ascii_punctuation()
        || matches!(c, '\u{2010}'..='\u{2027}' | '\u{0964}' | '\u{0965}' | '«' | '»' | '¡' | '¿')
}

/// Borrowed bundle of everything the pipeline reads. Cheap to copy and
/// shareable across threads.
#[derive(Debug, Clone, Copy)]
pub struct Pipeline<'r> {
    pub table: &'r TransliterationTable,
    pub lexicon: &'r TagLexicon,
    pub stem_rules: &'r StemRuleSet,
    pub tag_rules: &'r TagRuleTable,
}

impl<'r> Pipeline<'r> {
    pub fn new(
        table: &'r TransliterationTable,
        lexicon: &'r TagLexicon,
        stem_rules: &'r StemRuleSet,
        tag_rules: &'r TagRuleTable,
    ) -> Self {
        Pipeline {
            table,
            lexicon,
            stem_rules,
            tag_rules,
        }
    }

    /// Processes one whitespace-free token.
    pub fn process_token(&self, token: &str) -> TokenResult {
        if !token.chars().any(is_gujarati) {
            return TokenResult::plain(token, token.to_string(), Path::Passthrough);
        }
        let surface = nfc(token);
        let Some(tag) = self.lexicon.lookup(&surface) else {
            return TokenResult::plain(token, self.table.transliterate(&surface), Path::NaiveFallback);
        };
        let stemmed = self.stem_rules.stem(&surface, Some(tag));
        let rule = stemmed
            .rule
            .and_then(|_| self.tag_rules.find(stemmed.suffix, tag));
        match rule {
            Some(rule) => {
                let mut output = String::with_capacity(token.len() + rule.action.target().len() + 1);
                let mut stem_out = String::with_capacity(stemmed.stem.len());
                self.table.transliterate_into(stemmed.stem, false, &mut stem_out);
                rule.action.render(&stem_out, &mut output);
                TokenResult {
                    source: token.to_string(),
                    output,
                    tag_used: Some(tag.to_string()),
                    stem_rule_id: stemmed.rule_id().map(str::to_string),
                    tag_suffix_rule_id: Some(rule.rule_id.clone()),
                    path: Path::TagConditioned,
                }
            }
            None => TokenResult {
                source: token.to_string(),
                output: self.table.transliterate(&surface),
                tag_used: Some(tag.to_string()),
                stem_rule_id: stemmed.rule_id().map(str::to_string),
                tag_suffix_rule_id: None,
                path: Path::NaiveFallback,
            },
        }
    }

    /// Tokenizes on whitespace, splits leading and trailing punctuation off
    /// each word, processes every token and joins the outputs. Tokens that
    /// were separated by whitespace are joined with a single space; split-off
    /// punctuation is glued back without one.
    pub fn process_text(&self, text: &str) -> ProcessedText {
        let mut result = ProcessedText::default();
        let mut separator_start = 0;
        for (start, word) in words(text) {
            let separator = &text[separator_start..start];
            separator_start = start + word.len();
            let followed_by_boundary = text[separator_start..]
                .chars()
                .next()
                .is_none_or(char::is_whitespace);
            self.process_word(word, separator, followed_by_boundary, &mut result.pieces);
        }
        result.trailing = text[separator_start..].to_string();

        for (i, piece) in result.pieces.iter().enumerate() {
            if i > 0 && !piece.separator.is_empty() {
                result.output.push(' ');
            }
            result.output.push_str(&piece.result.output);
        }
        result
    }

    fn process_word(&self, word: &str, separator: &str, followed_by_boundary: bool, pieces: &mut Vec<TextPiece>) {
        let core_start = word
            .char_indices()
            .find(|&(_, c)| !is_detachable_punctuation(c))
            .map_or(word.len(), |(i, _)| i);
        let core_end = word[core_start..]
            .char_indices()
            .rev()
            .find(|&(_, c)| !is_detachable_punctuation(c))
            .map_or(core_start, |(i, c)| core_start + i + c.len_utf8());

        let mut separator = separator;
        let mut push = |result: TokenResult| {
            pieces.push(TextPiece {
                separator: separator.to_string(),
                result,
            });
            separator = "";
        };

        let punct = |offset: usize, c: char| {
            let is_last = offset + c.len_utf8() == word.len();
            let sentence_final = is_last && followed_by_boundary;
            let output = match self.table.map_punctuation(c, sentence_final) {
                Some(mapped) => mapped.to_string(),
                None => c.to_string(),
            };
            let mut buf = [0u8; 4];
            TokenResult::plain(c.encode_utf8(&mut buf), output, Path::Punctuation)
        };

        for (i, c) in word[..core_start].char_indices() {
            push(punct(i, c));
        }
        if core_start < core_end {
            push(self.process_token(&word[core_start..core_end]));
        }
        for (i, c) in word[core_end..].char_indices() {
            push(punct(core_end + i, c));
        }
    }
}

/// Maximal non-whitespace runs with their byte offsets.
fn words(text: &str) -> impl Iterator<Item = (usize, &str)> {
    let mut rest = 0;
    core::iter::from_fn(move || {
        let tail = &text[rest..];
        let start = rest + tail.find(|c: char| !c.is_whitespace())?;
        let len = text[start..]
            .find(char::is_whitespace)
            .unwrap_or(text.len() - start);
        rest = start + len;
        Some((start, &text[start..start + len]))
    })
}
