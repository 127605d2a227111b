use std::fs;
use std::io::Write;
use std::path::Path;

use anyhow::{Context, Result};
use guj2hin_core::{build_default_table, seed, Pipeline, StemRuleSet, TagLexicon, TagRuleTable, TransliterationTable};

use crate::config::Config;
use crate::{corpus, snapshot};

/// Everything a [`Pipeline`] borrows, loaded once per run.
#[derive(Debug)]
pub struct Resources {
    pub table: TransliterationTable,
    pub lexicon: TagLexicon,
    pub stem_rules: StemRuleSet,
    pub tag_rules: TagRuleTable,
}

fn read(path: &Path) -> Result<String> {
    fs::read_to_string(path).with_context(|| format!("cannot read {}", path.display()))
}

impl Resources {
    /// Loads what `cfg` names, falling back to the built-in table and seed
    /// rules. The lexicon comes from a snapshot, else a corpus directory
    /// (skipped tokens reported on `diagnostics`), else the small built-in
    /// tagged sample.
    pub fn load(cfg: &Config, diagnostics: &mut dyn Write) -> Result<Self> {
        cfg.check_inputs()?;
        let mut table = build_default_table();
        if let Some(p) = &cfg.exceptions {
            table.apply_exceptions(&read(p)?).map_err(|e| anyhow::anyhow!("{}: {e}", p.display()))?;
        }
        if !cfg.danda {
            table.set_punctuation_enabled('.', false);
        }
        let stem_rules = match &cfg.stem_rules {
            Some(p) => StemRuleSet::parse(&read(p)?).map_err(|e| anyhow::anyhow!("{}: {e}", p.display()))?,
            None => seed::stem_rules()?,
        };
        let tag_rules = match &cfg.tag_rules {
            Some(p) => TagRuleTable::parse(&read(p)?).map_err(|e| anyhow::anyhow!("{}: {e}", p.display()))?,
            None => seed::tag_rules()?,
        };
        let lexicon = match (&cfg.lexicon, &cfg.corpus_dir) {
            (Some(p), _) => snapshot::read(&read(p)?).map_err(|e| anyhow::anyhow!("{}: {e}", p.display()))?,
            (None, Some(dir)) => {
                let got = corpus::ingest_dir(dir)?;
                for d in &got.diagnostics {
                    writeln!(diagnostics, "{d}")?;
                }
                got.lexicon
            }
            (None, None) => {
                let mut lex = TagLexicon::new();
                lex.ingest(seed::FIXTURE_CORPUS);
                lex
            }
        };
        Ok(Resources {
            table,
            lexicon,
            stem_rules,
            tag_rules,
        })
    }

    pub fn pipeline(&self) -> Pipeline<'_> {
        Pipeline::new(&self.table, &self.lexicon, &self.stem_rules, &self.tag_rules)
    }
}
