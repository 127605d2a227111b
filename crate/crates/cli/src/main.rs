use std::fs;
use std::io::{self, Read, Write};
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use anyhow::{bail, Context, Result};
use clap::{Args, Parser, Subcommand, ValueEnum};
use guj2hin::commands;
use guj2hin::config::{Config, Overrides};
use guj2hin::resources::Resources;
use guj2hin_core::RenderMode;

/// Gujarati to Hindi transliteration with tag-conditioned suffix handling.
#[derive(Parser)]
#[command(name = "guj2hin", version)]
struct Cli {
    #[command(flatten)]
    global: Global,
    #[command(subcommand)]
    command: Command,
}

#[derive(Args)]
struct Global {
    /// TOML file naming resource paths; its relative paths resolve against its directory.
    #[arg(long, global = true, value_name = "PATH")]
    config: Option<PathBuf>,
    /// Per-token JSON trace on stderr.
    #[arg(long, global = true)]
    trace: bool,
    /// Leave sentence-final "." as is.
    #[arg(long, global = true)]
    no_danda: bool,
    /// Extra `U+XXXX<TAB>target` entries for the script table.
    #[arg(long, global = true, value_name = "PATH")]
    exceptions: Option<PathBuf>,
    /// Stem rule file; the built-in seed rules otherwise.
    #[arg(long, global = true, value_name = "PATH")]
    stem_rules: Option<PathBuf>,
    /// Tag rule file; the built-in seed rules otherwise.
    #[arg(long, global = true, value_name = "PATH")]
    tag_rules: Option<PathBuf>,
    /// Lexicon snapshot written by `ingest`.
    #[arg(long, global = true, value_name = "PATH")]
    lexicon: Option<PathBuf>,
    /// Directory of tagged `*.txt` files, used when no snapshot is given.
    #[arg(long, global = true, value_name = "DIR")]
    corpus: Option<PathBuf>,
}

#[derive(Subcommand)]
enum Command {
    /// Transliterate a file or stdin, line by line.
    Translit { input: Option<PathBuf> },
    /// Print surface, stem, suffix and rule id for each word.
    Stem { input: Option<PathBuf> },
    /// Build a lexicon from a tagged corpus directory.
    Ingest {
        /// Defaults to the configured corpus directory.
        dir: Option<PathBuf>,
        /// Where to write the snapshot.
        #[arg(long, value_name = "PATH")]
        out: Option<PathBuf>,
    },
    /// Score the pipeline against a gold file.
    Eval {
        /// Defaults to the configured gold file.
        gold: Option<PathBuf>,
        #[arg(long, value_enum, default_value_t = Format::Table)]
        format: Format,
    },
}

#[derive(Clone, Copy, ValueEnum)]
enum Format {
    Table,
    Kv,
}

fn read_input(path: Option<&Path>) -> Result<String> {
    match path {
        Some(p) => fs::read_to_string(p).with_context(|| format!("cannot read {}", p.display())),
        None => {
            let mut s = String::new();
            io::stdin().read_to_string(&mut s).context("cannot read stdin")?;
            Ok(s)
        }
    }
}

fn run(cli: Cli) -> Result<()> {
    let g = cli.global;
    let flags = Overrides {
        exceptions: g.exceptions,
        stem_rules: g.stem_rules,
        tag_rules: g.tag_rules,
        corpus_dir: g.corpus,
        lexicon: g.lexicon,
        no_danda: g.no_danda,
        trace: g.trace,
    };
    let cfg = Config::resolve(g.config.as_deref(), flags)?;
    let mut out = io::stdout().lock();
    let mut err = io::stderr().lock();
    match cli.command {
        Command::Translit { input } => {
            let res = Resources::load(&cfg, &mut err)?;
            let text = read_input(input.as_deref())?;
            commands::translit(&res, &text, cfg.trace, &mut out, &mut err)?;
        }
        Command::Stem { input } => {
            let res = Resources::load(&cfg, &mut err)?;
            let text = read_input(input.as_deref())?;
            commands::stem(&res, &text, &mut out)?;
        }
        Command::Ingest { dir, out: snapshot } => {
            let Some(dir) = dir.or(cfg.corpus_dir.clone()) else {
                bail!("no corpus directory given (pass DIR, --corpus or set corpus_dir)");
            };
            let snapshot = snapshot.or(cfg.lexicon.clone());
            commands::ingest(&dir, snapshot.as_deref(), &mut out, &mut err)?;
        }
        Command::Eval { gold, format } => {
            let Some(gold) = gold.or(cfg.gold.clone()) else {
                bail!("no gold file given (pass GOLD or set gold)");
            };
            let res = Resources::load(&cfg, &mut err)?;
            let src = read_input(Some(&gold))?;
            let mode = match format {
                Format::Table => RenderMode::Table,
                Format::Kv => RenderMode::KeyValue,
            };
            commands::eval(&res, &src, &gold, mode, &mut out)?;
        }
    }
    out.flush()?;
    Ok(())
}

fn main() -> ExitCode {
    match run(Cli::parse()) {
        Ok(()) => ExitCode::SUCCESS,
        Err(e) => {
            eprintln!("guj2hin: {e:#}");
            ExitCode::FAILURE
        }
    }
}
