//! Connective lexicon: declarative inventory of discourse connectives and
//! their detection in tokenized sentences.
//!
//! File format, one declaration per line:
//!
//! ```text
//! connective "<form>" kind=<opposition|consequence|scalar> weight=<decimal> [splits=<true|false>]
//! ```
//!
//! Forms may span several words (`"a little"`). Blank lines and `#` comments
//! are ignored. `splits` defaults to true except for scalar connectives.

use std::collections::HashSet;
use std::fmt;

use thiserror::Error;

use crate::text::Sentence;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum ConnectiveKind {
    /// Relates an argument to a counter-argument (but, yet, however).
    Opposition,
    /// Relates an argument to its conclusion (therefore, so, thus).
    Consequence,
    /// Strengthens or attenuates a single clause (even, a little).
    Scalar,
}

impl ConnectiveKind {
    fn parse(text: &str) -> Option<Self> {
        match text {
            "opposition" => Some(Self::Opposition),
            "consequence" => Some(Self::Consequence),
            "scalar" => Some(Self::Scalar),
            _ => None,
        }
    }

    /// Scalar connectives modify one clause in place; the other kinds
    /// articulate two clauses and therefore split by default.
    pub fn default_splits(self) -> bool {
        !matches!(self, Self::Scalar)
    }
}

impl fmt::Display for ConnectiveKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Self::Opposition => "opposition",
            Self::Consequence => "consequence",
            Self::Scalar => "scalar",
        })
    }
}

/// Which clause the sentence inherits its orientation from.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum OrientationSource {
    ArgumentClause,
    ConclusionClause,
}

#[derive(Clone, Debug, PartialEq)]
pub struct ConnectiveEntry {
    /// Lowercased word sequences that realize this connective.
    pub surface_forms: Vec<Vec<String>>,
    pub kind: ConnectiveKind,
    /// Always the conclusion clause for the shipped inventory: a connective
    /// hands the sentence's stance to what follows it.
    pub orientation_source: OrientationSource,
    /// Multiplier applied to the sentence score; must be positive.
    pub weight: f64,
    /// Whether the connective divides the sentence into two clauses.
    pub splits: bool,
}

#[derive(Clone, Debug, Default)]
pub struct Lexicon {
    entries: Vec<ConnectiveEntry>,
}

#[derive(Debug, Error, PartialEq, Eq)]
pub enum LexiconError {
    #[error("line {line}: {message}")]
    Parse { line: usize, message: String },
    #[error("line {line}: duplicate connective form \"{form}\"")]
    DuplicateForm { line: usize, form: String },
}

fn parse_err(line: usize, message: impl Into<String>) -> LexiconError {
    LexiconError::Parse { line, message: message.into() }
}

impl Lexicon {
    pub fn parse(text: &str) -> Result<Self, LexiconError> {
        let mut entries = Vec::new();
        let mut seen: HashSet<Vec<String>> = HashSet::new();
        for (i, raw_line) in text.lines().enumerate() {
            let line_no = i + 1;
            let line = raw_line.trim();
            if line.is_empty() || line.starts_with('#') {
                continue;
            }
            let rest = line
                .strip_prefix("connective")
                .ok_or_else(|| parse_err(line_no, "expected `connective`"))?;
            let (form_text, rest) =
                take_quoted(rest.trim_start()).map_err(|m| parse_err(line_no, m))?;
            let form: Vec<String> = form_text.split_whitespace().map(str::to_lowercase).collect();
            if form.is_empty() {
                return Err(parse_err(line_no, "empty connective form"));
            }
            if !seen.insert(form.clone()) {
                return Err(LexiconError::DuplicateForm { line: line_no, form: form.join(" ") });
            }
            let mut kind = None;
            let mut weight = None;
            let mut splits = None;
            for field in rest.split_whitespace() {
                let (key, value) = field
                    .split_once('=')
                    .ok_or_else(|| parse_err(line_no, format!("expected key=value, got `{field}`")))?;
                match key {
                    "kind" => {
                        kind = Some(ConnectiveKind::parse(value).ok_or_else(|| {
                            parse_err(line_no, format!("unknown kind `{value}`"))
                        })?);
                    }
                    "weight" => {
                        let parsed: f64 = value
                            .parse()
                            .map_err(|_| parse_err(line_no, format!("bad weight `{value}`")))?;
                        if !parsed.is_finite() || parsed <= 0.0 {
                            return Err(parse_err(line_no, "weight must be positive and finite"));
                        }
                        weight = Some(parsed);
                    }
                    "splits" => {
                        splits = Some(value.parse().map_err(|_| {
                            parse_err(line_no, format!("bad splits value `{value}`"))
                        })?);
                    }
                    other => return Err(parse_err(line_no, format!("unknown field `{other}`"))),
                }
            }
            let kind = kind.ok_or_else(|| parse_err(line_no, "missing kind"))?;
            let weight = weight.ok_or_else(|| parse_err(line_no, "missing weight"))?;
            entries.push(ConnectiveEntry {
                surface_forms: vec![form],
                kind,
                orientation_source: OrientationSource::ConclusionClause,
                weight,
                splits: splits.unwrap_or_else(|| kind.default_splits()),
            });
        }
        Ok(Lexicon { entries })
    }

    pub fn entries(&self) -> &[ConnectiveEntry] {
        &self.entries
    }

    pub fn entry(&self, index: usize) -> &ConnectiveEntry {
        &self.entries[index]
    }

    pub fn len(&self) -> usize {
        self.entries.len()
    }

    pub fn is_empty(&self) -> bool {
        self.entries.is_empty()
    }

    /// Writes the lexicon back out in the declaration format; parsing the
    /// result reproduces the lexicon.
    pub fn to_text(&self) -> String {
        let mut out = String::new();
        for entry in &self.entries {
            for form in &entry.surface_forms {
                out.push_str(&format!(
                    "connective \"{}\" kind={} weight={} splits={}\n",
                    form.join(" "),
                    entry.kind,
                    entry.weight,
                    entry.splits,
                ));
            }
        }
        out
    }
}

fn take_quoted(text: &str) -> Result<(&str, &str), String> {
    let rest = text
        .strip_prefix('"')
        .ok_or_else(|| "expected quoted form".to_string())?;
    let close = rest.find('"').ok_or_else(|| "unterminated quote".to_string())?;
    Ok((&rest[..close], &rest[close + 1..]))
}

/// A connective occurrence: which lexicon entry matched and the inclusive
/// (first, last) token indices it covers.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ConnectiveMatch {
    pub entry: usize,
    pub token_span: (usize, usize),
}

impl ConnectiveMatch {
    pub fn token_len(&self) -> usize {
        self.token_span.1 - self.token_span.0 + 1
    }
}

/// Scans normalized tokens left to right, taking the longest form that
/// starts at each position; matches never overlap. Ties between entries go
/// to the earlier declaration.
pub fn detect_connectives(sentence: &Sentence, lexicon: &Lexicon) -> Vec<ConnectiveMatch> {
    let tokens: Vec<&str> = sentence.tokens.iter().map(|t| t.normalized.as_str()).collect();
    let mut matches = Vec::new();
    let mut i = 0;
    while i < tokens.len() {
        let mut best: Option<(usize, usize)> = None;
        for (entry_idx, entry) in lexicon.entries.iter().enumerate() {
            for form in &entry.surface_forms {
                let longer = best.is_none_or(|(len, _)| form.len() > len);
                if longer && tokens[i..].len() >= form.len() {
                    let window = &tokens[i..i + form.len()];
                    if window.iter().zip(form).all(|(t, w)| t == w) {
                        best = Some((form.len(), entry_idx));
                    }
                }
            }
        }
        match best {
            Some((len, entry_idx)) => {
                matches.push(ConnectiveMatch { entry: entry_idx, token_span: (i, i + len - 1) });
                i += len;
            }
            None => i += 1,
        }
    }
    matches
}
