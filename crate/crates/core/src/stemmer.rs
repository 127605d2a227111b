//! Single-pass, ordered suffix stripping.
//!
//! Rules are tried longest suffix first, then by ascending priority, then in
//! file order. The first rule whose suffix ends the surface form, whose tag
//! pattern accepts the tag, and which leaves at least `min_stem_codepoints`
//! behind is the only one that fires. Composite suffixes such as ઓમાંથી are
//! written as a single rule rather than stripped recursively.

use alloc::collections::BTreeSet;
use alloc::string::{String, ToString};
use alloc::vec::Vec;

use crate::normalize::nfc;
use crate::rules::{data_lines, fields, validate_rule_id, RuleFileError, TagMatcher};

pub const DEFAULT_MIN_STEM: usize = 2;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct StemRule {
    suffix: String,
    suffix_len: usize,
    min_stem_codepoints: usize,
    tag: TagMatcher,
    priority: i32,
    rule_id: String,
}

impl StemRule {
    /// The suffix is NFC-normalized. Fails on an empty suffix or a zero
    /// minimum stem length.
    pub fn new(
        suffix: &str,
        min_stem_codepoints: usize,
        tag: TagMatcher,
        priority: i32,
        rule_id: impl Into<String>,
    ) -> Result<Self, String> {
        let suffix = nfc(suffix).into_owned();
        if suffix.is_empty() {
            return Err("empty suffix".to_string());
        }
        if min_stem_codepoints == 0 {
            return Err("min_stem must be at least 1".to_string());
        }
        Ok(StemRule {
            suffix_len: suffix.chars().count(),
            suffix,
            min_stem_codepoints,
            tag,
            priority,
            rule_id: rule_id.into(),
        })
    }

    pub fn suffix(&self) -> &str {
        &self.suffix
    }

    pub fn suffix_codepoints(&self) -> usize {
        self.suffix_len
    }

    pub fn min_stem_codepoints(&self) -> usize {
        self.min_stem_codepoints
    }

    pub fn tag_pattern(&self) -> &TagMatcher {
        &self.tag
    }

    pub fn priority(&self) -> i32 {
        self.priority
    }

    pub fn rule_id(&self) -> &str {
        &self.rule_id
    }

    fn strip<'s>(&self, surface: &'s str, surface_len: usize, tag: Option<&str>) -> Option<&'s str> {
        if !self.tag.matches(tag) || surface_len < self.suffix_len + self.min_stem_codepoints {
            return None;
        }
        surface.strip_suffix(self.suffix.as_str())
    }
}

/// Outcome of [`StemRuleSet::stem`]. `stem` followed by `suffix` is always
/// the original surface form.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct StemResult<'a> {
    pub stem: &'a str,
    pub suffix: &'a str,
    pub rule: Option<&'a StemRule>,
}

impl<'a> StemResult<'a> {
    pub fn rule_id(&self) -> Option<&'a str> {
        self.rule.map(StemRule::rule_id)
    }

    pub fn fired(&self) -> bool {
        self.rule.is_some()
    }
}

#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct StemRuleSet {
    rules: Vec<StemRule>,
}

impl StemRuleSet {
    pub fn empty() -> Self {
        StemRuleSet::default()
    }

    /// Builds a rule set from rules in "file order". Error line numbers are
    /// 1-based positions in `rules`.
    pub fn new(rules: Vec<StemRule>) -> Result<Self, RuleFileError> {
        let numbered = rules.into_iter().enumerate().map(|(i, r)| (i + 1, r)).collect();
        Self::from_numbered(numbered)
    }

    /// Parses the tab-separated rule file format:
    /// `suffix<TAB>min_stem<TAB>tag_pattern<TAB>priority<TAB>rule_id`.
    pub fn parse(src: &str) -> Result<Self, RuleFileError> {
        let mut rules = Vec::new();
        for (line, text) in data_lines(src) {
            let [suffix, min_stem, tag, priority, rule_id] = fields::<5>(line, text)?;
            let parse_err = |reason: String| RuleFileError::Parse { line, reason };
            let min_stem = match min_stem {
                "-" => DEFAULT_MIN_STEM,
                m => m
                    .parse::<usize>()
                    .map_err(|_| parse_err(alloc::format!("invalid min_stem {m:?}")))?,
            };
            let tag = TagMatcher::parse(tag).map_err(parse_err)?;
            let priority = priority
                .parse::<i32>()
                .map_err(|_| parse_err(alloc::format!("invalid priority {priority:?}")))?;
            validate_rule_id(line, rule_id)?;
            let rule = StemRule::new(suffix, min_stem, tag, priority, rule_id).map_err(parse_err)?;
            rules.push((line, rule));
        }
        Self::from_numbered(rules)
    }

    fn from_numbered(mut rules: Vec<(usize, StemRule)>) -> Result<Self, RuleFileError> {
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
        // Stable: equal keys keep file order.
        rules.sort_by_key(|(_, r)| (core::cmp::Reverse(r.suffix_len), r.priority));
        Ok(StemRuleSet {
            rules: rules.into_iter().map(|(_, r)| r).collect(),
        })
    }

    /// Rules in firing order.
    pub fn iter(&self) -> impl Iterator<Item = &StemRule> {
        self.rules.iter()
    }

    pub fn len(&self) -> usize {
        self.rules.len()
    }

    pub fn is_empty(&self) -> bool {
        self.rules.is_empty()
    }

    pub fn get(&self, rule_id: &str) -> Option<&StemRule> {
        self.rules.iter().find(|r| r.rule_id == rule_id)
    }

    /// Strips at most one suffix from `surface`, which should already be NFC.
    pub fn stem<'a>(&'a self, surface: &'a str, tag: Option<&str>) -> StemResult<'a> {
        let surface_len = surface.chars().count();
        for rule in &self.rules {
            if let Some(stem) = rule.strip(surface, surface_len, tag) {
                return StemResult {
                    stem,
                    suffix: &surface[stem.len()..],
                    rule: Some(rule),
                };
            }
        }
        StemResult {
            stem: surface,
            suffix: "",
            rule: None,
        }
    }
}

impl<'a> IntoIterator for &'a StemRuleSet {
    type Item = &'a StemRule;
    type IntoIter = core::slice::Iter<'a, StemRule>;

    fn into_iter(self) -> Self::IntoIter {
        self.rules.iter()
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use alloc::vec;

    fn seed() -> StemRuleSet {
        crate::seed::stem_rules().unwrap()
    }

    #[test]
    fn longest_suffix_iterates_first() {
        let set = StemRuleSet::parse("એ\t2\t-\t1\tE\nઓમાંથી\t2\t-\t9\tOMANTHI\n").unwrap();
        let ids: Vec<_> = set.iter().map(StemRule::rule_id).collect();
        assert_eq!(ids, ["OMANTHI", "E"]);
    }

    #[test]
    fn ties_by_priority_then_file_order() {
        let src = "ને\t2\tNN\t5\tA\nને\t2\tNNP\t1\tB\nને\t2\t*\t5\tC\n";
        let ids: Vec<_> = StemRuleSet::parse(src).unwrap().iter().map(|r| r.rule_id().to_string()).collect();
        assert_eq!(ids, ["B", "A", "C"]);
    }

    #[test]
    fn empty_file_strips_nothing() {
        let set = StemRuleSet::parse("# nothing\n\n").unwrap();
        assert!(set.is_empty());
        let r = set.stem("રામે", Some("NNP"));
        assert_eq!((r.stem, r.suffix, r.rule_id()), ("રામે", "", None));
    }

    #[test]
    fn duplicate_suffix_and_tag_rejected() {
        let err = StemRuleSet::parse("ે\t2\tNNP\t1\tA\nે\t2\tNNP\t2\tB\n").unwrap_err();
        assert_eq!(
            err,
            RuleFileError::DuplicateRule {
                line: 2,
                suffix: "ે".into(),
                tag: TagMatcher::Exact("NNP".into())
            }
        );
        // Same suffix, different tag is fine.
        assert!(StemRuleSet::parse("ે\t2\tNNP\t1\tA\nે\t2\tNLOC\t1\tB\n").is_ok());
    }

    #[test]
    fn duplicate_id_rejected() {
        let err = StemRuleSet::parse("ે\t2\tNNP\t1\tA\nએ\t2\tNNP\t1\tA\n").unwrap_err();
        assert!(matches!(err, RuleFileError::DuplicateRuleId { line: 2, .. }));
    }

    #[test]
    fn malformed_lines_report_line_numbers() {
        for (src, line) in [
            ("# c\nે\t2\tNNP\t1\n", 2),
            ("ે\tx\tNNP\t1\tA\n", 1),
            ("ે\t0\tNNP\t1\tA\n", 1),
            ("\t2\tNNP\t1\tA\n", 1),
            ("ે\t2\t\t1\tA\n", 1),
            ("ે\t2\tNNP\tlow\tA\n", 1),
            ("\nે\t2\tNNP\t1\t\n", 2),
        ] {
            let err = StemRuleSet::parse(src).unwrap_err();
            assert!(matches!(err, RuleFileError::Parse { .. }), "{src:?}");
            assert_eq!(err.line(), line, "{src:?}");
        }
    }

    #[test]
    fn default_min_stem() {
        let set = StemRuleSet::parse("ે\t-\t-\t1\tA\n").unwrap();
        assert_eq!(set.get("A").unwrap().min_stem_codepoints(), DEFAULT_MIN_STEM);
    }

    #[test]
    fn root_and_composite_suffix() {
        let set = seed();
        let r = set.stem("સ્ત્રીઓમાંથી", None);
        assert_eq!(r.stem, "સ્ત્રી");
        assert_eq!(r.suffix, "ઓમાંથી");
        assert_eq!(r.rule_id(), Some("S001"));
    }

    #[test]
    fn tagged_ergative() {
        let set = seed();
        let r = set.stem("રામે", Some("NNP"));
        assert_eq!((r.stem, r.suffix), ("રામ", "ે"));
    }

    #[test]
    fn ambiguous_ie_resolved_by_tag() {
        let set = seed();
        let verb = set.stem("ચાલીએ", Some("VM"));
        assert_eq!((verb.stem, verb.suffix), ("ચાલ", "ીએ"));
        let name = set.stem("રશ્મીએ", Some("NNP"));
        assert_eq!((name.stem, name.suffix), ("રશ્મી", "એ"));
    }

    #[test]
    fn no_match_is_identity() {
        let set = seed();
        let r = set.stem("પ્રતિબંધ", Some("NN"));
        assert_eq!((r.stem, r.suffix, r.rule), ("પ્રતિબંધ", "", None));
    }

    #[test]
    fn guard_blocks_empty_stem() {
        let set = StemRuleSet::new(vec![StemRule::new("એ", 1, TagMatcher::Absent, 0, "E").unwrap()]).unwrap();
        let r = set.stem("એ", None);
        assert_eq!((r.stem, r.suffix, r.rule), ("એ", "", None));
        assert_eq!(set.stem("કએ", None).stem, "ક");
    }

    #[test]
    fn untagged_input_skips_wildcard_rules() {
        let set = StemRuleSet::parse("ે\t2\t*\t1\tA\n").unwrap();
        assert!(!set.stem("રામે", None).fired());
        assert!(set.stem("રામે", Some("XX")).fired());
    }

    #[test]
    fn guard_falls_through_to_shorter_rule() {
        let src = "માંથી\t3\t-\t1\tLONG\nથી\t1\t-\t1\tSHORT\n";
        let set = StemRuleSet::parse(src).unwrap();
        // "ઘમાંથી": LONG would leave 1 codepoint (< 3), SHORT leaves 4.
        let r = set.stem("ઘમાંથી", None);
        assert_eq!(r.rule_id(), Some("SHORT"));
        assert_eq!(r.stem, "ઘમાં");
    }
}

#[cfg(test)]
mod props {
    use super::*;
    use proptest::prelude::*;

    fn gujarati_word() -> impl Strategy<Value = String> {
        proptest::collection::vec(
            prop_oneof![
                (0x0A95u32..=0x0AB9).prop_map(|c| char::from_u32(c).unwrap()),
                (0x0ABEu32..=0x0AC4).prop_map(|c| char::from_u32(c).unwrap()),
                Just('ે'),
                Just('એ'),
                Just('ઓ'),
                Just('ં'),
            ],
            1..10,
        )
        .prop_map(|cs| cs.into_iter().collect())
    }

    proptest! {
        #[test]
        fn concatenation_and_guard(word in gujarati_word(), tag in proptest::option::of("NN|NNP|NLOC|VM")) {
            let set = crate::seed::stem_rules().unwrap();
            let r = set.stem(&word, tag.as_deref());
            prop_assert_eq!(alloc::format!("{}{}", r.stem, r.suffix), word.clone());
            prop_assert!(!r.stem.is_empty());
            if let Some(rule) = r.rule {
                prop_assert!(r.stem.chars().count() >= rule.min_stem_codepoints());
                prop_assert_eq!(r.suffix, rule.suffix());
            } else {
                prop_assert_eq!(r.suffix, "");
            }
            prop_assert_eq!(set.stem(&word, tag.as_deref()), r);
        }
    }
}
