//! Subcommand bodies. Each reads its input as a string and writes to the
//! given sinks, so they can be driven without a process.

use std::io::Write;
use std::path::Path;

use anyhow::{anyhow, bail, Result};
use guj2hin_core::{evaluate, GoldSet, RenderMode, TokenResult};
use serde::Serialize;
use unicode_normalization::UnicodeNormalization;

use crate::corpus;
use crate::resources::Resources;
use crate::snapshot;

#[derive(Serialize)]
struct TraceLine<'a> {
    line: usize,
    source: &'a str,
    output: &'a str,
    path: &'static str,
    tag: Option<&'a str>,
    stem_rule: Option<&'a str>,
    tag_rule: Option<&'a str>,
}

impl<'a> TraceLine<'a> {
    fn new(line: usize, r: &'a TokenResult) -> Self {
        TraceLine {
            line,
            source: &r.source,
            output: &r.output,
            path: r.path.as_str(),
            tag: r.tag_used.as_deref(),
            stem_rule: r.stem_rule_id.as_deref(),
            tag_rule: r.tag_suffix_rule_id.as_deref(),
        }
    }
}

/// Splits off a trailing `\n` or `\r\n`.
fn split_eol(line: &str) -> (&str, &str) {
    let body = line.strip_suffix('\n').map_or(line, |l| l.strip_suffix('\r').unwrap_or(l));
    (body, &line[body.len()..])
}

/// Line by line so that line breaks come through untouched.
pub fn translit(res: &Resources, input: &str, trace: bool, out: &mut dyn Write, err: &mut dyn Write) -> Result<()> {
    let p = res.pipeline();
    for (i, line) in input.split_inclusive('\n').enumerate() {
        let (body, eol) = split_eol(line);
        let done = p.process_text(body);
        write!(out, "{}{eol}", done.output)?;
        if trace {
            for r in done.results() {
                writeln!(err, "{}", serde_json::to_string(&TraceLine::new(i + 1, r))?)?;
            }
        }
    }
    Ok(())
}

/// One word per line in, `surface stem suffix rule_id` rows out.
pub fn stem(res: &Resources, input: &str, out: &mut dyn Write) -> Result<()> {
    writeln!(out, "surface\tstem\tsuffix\trule_id")?;
    for word in input.split_whitespace() {
        // Rules match codepoints, so compare in the lexicon's spelling.
        let word: String = word.nfc().collect();
        let tag = res.lexicon.lookup(&word);
        let r = res.stem_rules.stem(&word, tag);
        writeln!(out, "{word}\t{}\t{}\t{}", r.stem, r.suffix, r.rule_id().unwrap_or("-"))?;
    }
    Ok(())
}

pub fn ingest(dir: &Path, snapshot_out: Option<&Path>, out: &mut dyn Write, err: &mut dyn Write) -> Result<()> {
    let got = corpus::ingest_dir(dir)?;
    for d in &got.diagnostics {
        writeln!(err, "{d}")?;
    }
    let lex = &got.lexicon;
    writeln!(out, "files\t{}", got.files.len())?;
    writeln!(out, "sentences\t{}", lex.total_sentences())?;
    writeln!(out, "tokens\t{}", lex.total_tokens())?;
    writeln!(out, "entries\t{}", lex.len())?;
    writeln!(out, "skipped\t{}", got.diagnostics.len())?;
    if let Some(path) = snapshot_out {
        std::fs::write(path, snapshot::write(lex)).map_err(|e| anyhow!("cannot write {}: {e}", path.display()))?;
    }
    Ok(())
}

pub fn eval(res: &Resources, gold_src: &str, gold_name: &Path, mode: RenderMode, out: &mut dyn Write) -> Result<()> {
    let gold = GoldSet::parse(gold_src).map_err(|e| anyhow!("{}: {e}", gold_name.display()))?;
    if gold.words() == 0 {
        bail!("{}: no gold records", gold_name.display());
    }
    let p = res.pipeline();
    let outputs: Vec<String> = gold.records().map(|r| p.process_text(&r.source).output).collect();
    let report = evaluate(&gold, &outputs)?;
    write!(out, "{}", report.render(mode))?;
    Ok(())
}
