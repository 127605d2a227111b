//! Resource files shipped with the crate.
//!
//! The rule sets are a small reconstruction covering the common Gujarati case
//! and plural suffixes plus the ergative/locative and verb/proper-noun
//! ambiguities. They are meant as a starting point to extend, not a complete
//! grammar.

use crate::pipeline::TagRuleTable;
use crate::rules::RuleFileError;
use crate::stemmer::StemRuleSet;

/// Stem rule file (`suffix, min_stem, tag_pattern, priority, rule_id`).
pub const STEM_RULES: &str = include_str!("../data/stem_rules.tsv");

/// Tag-suffix rule file (`suffix, tag_pattern, SEP|ATTACH, target, rule_id`).
pub const TAG_RULES: &str = include_str!("../data/tag_rules.tsv");

/// Exceptions file equivalent to the defaults of
/// [`build_default_table`](crate::script_map::build_default_table).
pub const EXCEPTIONS: &str = include_str!("../data/exceptions.tsv");

/// Small tagged corpus with the worked ambiguity examples.
pub const FIXTURE_CORPUS: &str = include_str!("../data/fixture_lexicon.txt");

pub fn stem_rules() -> Result<StemRuleSet, RuleFileError> {
    StemRuleSet::parse(STEM_RULES)
}

pub fn tag_rules() -> Result<TagRuleTable, RuleFileError> {
    TagRuleTable::parse(TAG_RULES)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::pos_lexicon::TagLexicon;

    #[test]
    fn shipped_files_parse() {
        assert_eq!(stem_rules().unwrap().len(), 31);
        assert_eq!(tag_rules().unwrap().len(), 17);
        let mut lex = TagLexicon::new();
        assert!(lex.ingest(FIXTURE_CORPUS).is_empty());
    }

    #[test]
    fn every_tag_rule_suffix_has_a_stem_rule() {
        let stems = stem_rules().unwrap();
        for rule in tag_rules().unwrap().iter() {
            assert!(
                stems.iter().any(|s| s.suffix() == rule.suffix()),
                "{} has no stem rule",
                rule.rule_id()
            );
        }
    }
}
