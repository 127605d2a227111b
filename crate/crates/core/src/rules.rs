//! Pieces shared by the two tab-separated rule formats (stem rules and
//! tag-suffix rules).

use alloc::string::{String, ToString};
use core::fmt;

use thiserror::Error;

/// Which tags a rule applies to.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum TagMatcher {
    /// `-` in rule files: the rule applies whether or not a tag is known.
    Absent,
    /// `*`: any present tag.
    Any,
    /// One exact tag. No hierarchy, `NN` does not match `NNP`.
    Exact(String),
}

impl TagMatcher {
    pub fn parse(field: &str) -> Result<Self, String> {
        match field {
            "-" => Ok(TagMatcher::Absent),
            "*" => Ok(TagMatcher::Any),
            "" => Err("empty tag pattern (use `-` for none)".to_string()),
            t if t.chars().any(char::is_whitespace) => {
                Err(alloc::format!("tag pattern {t:?} contains whitespace"))
            }
            t => Ok(TagMatcher::Exact(t.to_string())),
        }
    }

    pub fn matches(&self, tag: Option<&str>) -> bool {
        match self {
            TagMatcher::Absent => true,
            TagMatcher::Any => tag.is_some(),
            TagMatcher::Exact(t) => tag == Some(t.as_str()),
        }
    }

    /// Higher is more specific.
    pub(crate) fn specificity(&self) -> u8 {
        match self {
            TagMatcher::Absent => 0,
            TagMatcher::Any => 1,
            TagMatcher::Exact(_) => 2,
        }
    }
}

impl fmt::Display for TagMatcher {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            TagMatcher::Absent => f.write_str("-"),
            TagMatcher::Any => f.write_str("*"),
            TagMatcher::Exact(t) => f.write_str(t),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum RuleFileError {
    #[error("line {line}: {reason}")]
    Parse { line: usize, reason: String },
    #[error("line {line}: duplicate rule for suffix {suffix:?} with tag pattern `{tag}`")]
    DuplicateRule { line: usize, suffix: String, tag: TagMatcher },
    #[error("line {line}: duplicate rule id {rule_id:?}")]
    DuplicateRuleId { line: usize, rule_id: String },
}

impl RuleFileError {
    pub fn line(&self) -> usize {
        match self {
            RuleFileError::Parse { line, .. }
            | RuleFileError::DuplicateRule { line, .. }
            | RuleFileError::DuplicateRuleId { line, .. } => *line,
        }
    }
}

/// Non-blank, non-comment lines of a data file with 1-based line numbers.
pub(crate) fn data_lines(src: &str) -> impl Iterator<Item = (usize, &str)> {
    src.lines().enumerate().filter_map(|(i, raw)| {
        let line = raw.strip_suffix('\r').unwrap_or(raw);
        let trimmed = line.trim_start();
        if trimmed.is_empty() || trimmed.starts_with('#') {
            None
        } else {
            Some((i + 1, line))
        }
    })
}

/// Splits a data line into exactly `n` tab-separated fields.
pub(crate) fn fields<const N: usize>(line_no: usize, line: &str) -> Result<[&str; N], RuleFileError> {
    let mut out = [""; N];
    let mut count = 0;
    for field in line.split('\t') {
        if count < N {
            out[count] = field;
        }
        count += 1;
    }
    if count != N {
        return Err(RuleFileError::Parse {
            line: line_no,
            reason: alloc::format!("expected {N} tab-separated fields, found {count}"),
        });
    }
    Ok(out)
}

pub(crate) fn validate_rule_id(line: usize, id: &str) -> Result<(), RuleFileError> {
    if id.is_empty() || id.chars().any(char::is_whitespace) {
        return Err(RuleFileError::Parse {
            line,
            reason: alloc::format!("invalid rule id {id:?}"),
        });
    }
    Ok(())
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn matcher_semantics() {
        assert!(TagMatcher::Absent.matches(None));
        assert!(TagMatcher::Absent.matches(Some("NN")));
        assert!(!TagMatcher::Any.matches(None));
        assert!(TagMatcher::Any.matches(Some("VM")));
        let nn = TagMatcher::Exact("NN".into());
        assert!(nn.matches(Some("NN")));
        assert!(!nn.matches(Some("NNP")));
        assert!(!nn.matches(None));
    }

    #[test]
    fn matcher_parse_round_trips_display() {
        for field in ["-", "*", "NLOC"] {
            assert_eq!(TagMatcher::parse(field).unwrap().to_string(), field);
        }
        assert!(TagMatcher::parse("").is_err());
        assert!(TagMatcher::parse("N N").is_err());
    }

    #[test]
    fn comments_and_blanks_skipped() {
        let src = "# header\n\nA\tB\r\n   # indented comment\nC\n";
        let lines: alloc::vec::Vec<_> = data_lines(src).collect();
        assert_eq!(lines, [(3, "A\tB"), (5, "C")]);
    }

    #[test]
    fn field_count_checked() {
        assert_eq!(fields::<2>(1, "a\tb").unwrap(), ["a", "b"]);
        let err = fields::<3>(7, "a\tb").unwrap_err();
        assert_eq!(err.line(), 7);
    }
}
