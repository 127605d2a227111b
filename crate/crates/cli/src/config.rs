use std::fs;
use std::path::{Path, PathBuf};

use anyhow::{bail, Context, Result};
use serde::Deserialize;

/// Contents of a `--config` TOML file. Relative paths are taken relative to
/// the file's directory.
#[derive(Debug, Clone, Default, Deserialize, PartialEq, Eq)]
#[serde(deny_unknown_fields)]
pub struct ConfigFile {
    pub exceptions: Option<PathBuf>,
    pub stem_rules: Option<PathBuf>,
    pub tag_rules: Option<PathBuf>,
    pub corpus_dir: Option<PathBuf>,
    pub lexicon: Option<PathBuf>,
    pub gold: Option<PathBuf>,
    pub danda: Option<bool>,
    pub trace: Option<bool>,
}

impl ConfigFile {
    pub fn load(path: &Path) -> Result<Self> {
        let text = fs::read_to_string(path).with_context(|| format!("cannot read config {}", path.display()))?;
        let mut cfg: ConfigFile =
            toml::from_str(&text).with_context(|| format!("invalid config {}", path.display()))?;
        let base = path.parent().unwrap_or(Path::new(""));
        for p in [
            &mut cfg.exceptions,
            &mut cfg.stem_rules,
            &mut cfg.tag_rules,
            &mut cfg.corpus_dir,
            &mut cfg.lexicon,
            &mut cfg.gold,
        ]
        .into_iter()
        .flatten()
        {
            if p.is_relative() {
                *p = base.join(&*p);
            }
        }
        Ok(cfg)
    }
}

/// Effective settings after command-line flags are laid over the config file.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Config {
    pub exceptions: Option<PathBuf>,
    pub stem_rules: Option<PathBuf>,
    pub tag_rules: Option<PathBuf>,
    pub corpus_dir: Option<PathBuf>,
    pub lexicon: Option<PathBuf>,
    pub gold: Option<PathBuf>,
    pub danda: bool,
    pub trace: bool,
}

impl Default for Config {
    fn default() -> Self {
        Config::from(ConfigFile::default())
    }
}

impl From<ConfigFile> for Config {
    fn from(f: ConfigFile) -> Self {
        Config {
            exceptions: f.exceptions,
            stem_rules: f.stem_rules,
            tag_rules: f.tag_rules,
            corpus_dir: f.corpus_dir,
            lexicon: f.lexicon,
            gold: f.gold,
            danda: f.danda.unwrap_or(true),
            trace: f.trace.unwrap_or(false),
        }
    }
}

/// Flag values; `None` leaves the config file's setting alone.
#[derive(Debug, Clone, Default)]
pub struct Overrides {
    pub exceptions: Option<PathBuf>,
    pub stem_rules: Option<PathBuf>,
    pub tag_rules: Option<PathBuf>,
    pub corpus_dir: Option<PathBuf>,
    pub lexicon: Option<PathBuf>,
    pub no_danda: bool,
    pub trace: bool,
}

impl Config {
    pub fn resolve(config_path: Option<&Path>, flags: Overrides) -> Result<Self> {
        let mut cfg: Config = match config_path {
            Some(p) => ConfigFile::load(p)?.into(),
            None => Config::default(),
        };
        macro_rules! take {
            ($($field:ident),*) => {$(
                if let Some(v) = flags.$field {
                    cfg.$field = Some(v);
                }
            )*};
        }
        take!(exceptions, stem_rules, tag_rules, corpus_dir, lexicon);
        if flags.no_danda {
            cfg.danda = false;
        }
        if flags.trace {
            cfg.trace = true;
        }
        Ok(cfg)
    }

    /// Fails naming the first configured input file that does not exist.
    pub fn check_inputs(&self) -> Result<()> {
        let inputs = [
            ("exceptions file", &self.exceptions),
            ("stem rule file", &self.stem_rules),
            ("tag rule file", &self.tag_rules),
            ("lexicon snapshot", &self.lexicon),
            ("corpus directory", &self.corpus_dir),
        ];
        for (what, path) in inputs {
            if let Some(p) = path {
                if !p.exists() {
                    bail!("{what} not found: {}", p.display());
                }
            }
        }
        Ok(())
    }
}
