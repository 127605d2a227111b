use guj2hin_core::pipeline::{Path, Pipeline, SuffixAction, TagRuleTable, TagSuffixRule, TokenResult};
use guj2hin_core::pos_lexicon::TagLexicon;
use guj2hin_core::rules::TagMatcher;
use guj2hin_core::script_map::{build_default_table, TransliterationTable};
use guj2hin_core::seed;
use guj2hin_core::stemmer::StemRuleSet;
use proptest::prelude::*;
use unicode_normalization::UnicodeNormalization;

struct Resources {
    table: TransliterationTable,
    lexicon: TagLexicon,
    stems: StemRuleSet,
    tags: TagRuleTable,
}

impl Resources {
    fn seeded() -> Self {
        let mut lexicon = TagLexicon::new();
        lexicon.ingest(seed::FIXTURE_CORPUS);
        Resources {
            table: build_default_table(),
            lexicon,
            stems: seed::stem_rules().unwrap(),
            tags: seed::tag_rules().unwrap(),
        }
    }

    fn pipeline(&self) -> Pipeline<'_> {
        Pipeline::new(&self.table, &self.lexicon, &self.stems, &self.tags)
    }
}

/// Re-derives a token's output from the rule ids it recorded.
fn replay(res: &Resources, r: &TokenResult) -> Option<String> {
    match r.path {
        Path::Passthrough => Some(r.source.clone()),
        Path::NaiveFallback => Some(res.table.transliterate(&r.source)),
        Path::TagConditioned => {
            let stem_rule = res.stems.get(r.stem_rule_id.as_deref()?)?;
            let tag_rule = res.tags.get(r.tag_suffix_rule_id.as_deref()?)?;
            let tag = r.tag_used.as_deref()?;
            if !tag_rule.tag_pattern().matches(Some(tag)) || tag_rule.suffix() != stem_rule.suffix() {
                return None;
            }
            let source: String = r.source.nfc().collect();
            let stem = source.strip_suffix(stem_rule.suffix())?;
            let stem = res.table.transliterate(stem);
            Some(match tag_rule.action() {
                SuffixAction::EmitSeparateWord(t) => format!("{stem} {t}"),
                SuffixAction::AttachToStem(t) => format!("{stem}{t}"),
            })
        }
        Path::Punctuation => None,
    }
}

fn lexicon_words() -> Vec<String> {
    let lex = {
        let mut l = TagLexicon::new();
        l.ingest(seed::FIXTURE_CORPUS);
        l
    };
    lex.iter()
        .map(|(w, _, _)| w.to_string())
        .filter(|w| w.chars().any(|c| ('\u{0A80}'..='\u{0AFF}').contains(&c)))
        .collect()
}

fn gujarati_word() -> impl Strategy<Value = String> {
    prop_oneof![
        proptest::sample::select(lexicon_words()),
        "[\u{0A95}-\u{0AA8}\u{0AAA}-\u{0AB0}][\u{0ABE}-\u{0AC4}\u{0AC7}\u{0AC8}]?[\u{0A95}-\u{0AA8}]{0,3}(ે|એ|ીએ|માં|ને|થી)?",
    ]
}

fn text() -> impl Strategy<Value = String> {
    let piece = prop_oneof![
        gujarati_word(),
        Just(".".to_string()),
        Just("(".to_string()),
        Just("abc".to_string()),
        Just("૧૨".to_string()),
    ];
    let sep = prop_oneof![Just(""), Just(" "), Just("  "), Just("\t"), Just("\n")];
    proptest::collection::vec((sep, piece), 0..12).prop_map(|parts| {
        parts
            .into_iter()
            .map(|(s, p)| format!("{s}{p}"))
            .collect()
    })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(512))]

    #[test]
    fn trace_replays_to_output(word in gujarati_word()) {
        let res = Resources::seeded();
        let r = res.pipeline().process_token(&word);
        prop_assert_eq!(replay(&res, &r), Some(r.output.clone()));
        if r.path == Path::TagConditioned {
            prop_assert!(r.tag_used.is_some() && r.tag_suffix_rule_id.is_some());
        }
    }

    #[test]
    fn text_sources_reconstruct_input(input in text()) {
        let res = Resources::seeded();
        let out = res.pipeline().process_text(&input);
        prop_assert_eq!(out.source_text(), input.clone());
        for piece in &out.pieces {
            if piece.result.path != Path::Punctuation {
                prop_assert_eq!(replay(&res, &piece.result), Some(piece.result.output.clone()));
            }
        }
        // Byte-identical across runs.
        prop_assert_eq!(res.pipeline().process_text(&input), out);
    }

    #[test]
    fn added_rule_only_touches_its_pair(word in gujarati_word(), tag in "NN|NNP|NLOC|VM|PRP", suffix in "ે|એ|ીએ|માં|ને") {
        let base = Resources::seeded();
        let mut extended = Resources::seeded();
        let mut rules: Vec<TagSuffixRule> = base.tags.iter().cloned().collect();
        let key_taken = rules.iter().any(|r| r.suffix() == suffix && *r.tag_pattern() == TagMatcher::Exact(tag.clone()));
        prop_assume!(!key_taken);
        rules.push(TagSuffixRule::new(&suffix, TagMatcher::Exact(tag.clone()), SuffixAction::AttachToStem("X".into()), "NEW").unwrap());
        extended.tags = TagRuleTable::new(rules).unwrap();

        let before = base.pipeline().process_token(&word);
        let after = extended.pipeline().process_token(&word);
        let stemmed = base.stems.stem(&word, before.tag_used.as_deref());
        let matches_pair = before.tag_used.as_deref() == Some(tag.as_str()) && stemmed.fired() && stemmed.suffix == suffix;
        if !matches_pair {
            prop_assert_eq!(before, after);
        }
    }

    #[test]
    fn empty_resources_equal_naive(word in gujarati_word()) {
        let table = build_default_table();
        let (lex, stems, tags) = (TagLexicon::new(), StemRuleSet::empty(), TagRuleTable::empty());
        let r = Pipeline::new(&table, &lex, &stems, &tags).process_token(&word);
        prop_assert_eq!(r.output, table.transliterate(&word));
        prop_assert_eq!(r.path, Path::NaiveFallback);
    }

    #[test]
    fn transliterate_char_is_total(c in any::<char>()) {
        let table = build_default_table();
        let out = table.transliterate_char(c);
        prop_assert!(!out.is_empty());
        prop_assert_eq!(table.transliterate_char(c), out);
    }

    #[test]
    fn devanagari_is_a_fixed_point(s in "[\u{0900}-\u{097F} ]{0,20}") {
        let table = build_default_table();
        let input: String = s.nfc().collect();
        // Danda is the image of ".", never the other way round.
        prop_assert_eq!(table.transliterate(&input), input);
    }
}

#[test]
fn stemmed_sentences_through_the_pipeline() {
    let res = Resources::seeded();
    let p = res.pipeline();
    let out = p.process_text("મારા ઘરે એક બિલાડી છે.");
    assert_eq!(out.output, "मारा घर पर एक बिलाडी छे।");
    let out = p.process_text("રશ્મીએ કિતાબ આપી.");
    assert_eq!(out.output, "रश्मी ने किताब आपी।");
    let paths: Vec<Path> = out.results().map(|r| r.path).collect();
    assert_eq!(
        paths,
        [Path::TagConditioned, Path::NaiveFallback, Path::NaiveFallback, Path::Punctuation]
    );
}

#[test]
fn pipeline_is_shareable_across_threads() {
    let res = Resources::seeded();
    let p = res.pipeline();
    let inputs = ["રામે", "ઘરે", "રશ્મીએ", "ચાલીએ"];
    let outputs: Vec<String> = std::thread::scope(|s| {
        let handles: Vec<_> = inputs
            .iter()
            .map(|w| s.spawn(move || p.process_token(w).output))
            .collect();
        handles.into_iter().map(|h| h.join().unwrap()).collect()
    });
    assert_eq!(outputs, ["राम ने", "घर पर", "रश्मी ने", "चालें"]);
}
