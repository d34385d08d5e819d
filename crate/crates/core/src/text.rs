//! Sentence segmentation, tokenization, and clause splitting.
//!
//! Sentences are the unit of extraction: spans index back into the raw
//! document so selected sentences are reproduced byte-for-byte. Tokens keep
//! their original surface next to a lowercased form used everywhere else.

use std::collections::HashSet;
use std::ops::Range;

use thiserror::Error;

use crate::lexicon::ConnectiveMatch;

/// Byte range of a sentence within the raw document text.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Span {
    pub start: usize,
    pub end: usize,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Token {
    /// Original spelling, with surrounding punctuation stripped.
    pub surface: String,
    /// Lowercased surface with curly apostrophes mapped to `'`.
    pub normalized: String,
    pub is_stopword: bool,
}

#[derive(Clone, Debug)]
pub struct Sentence {
    pub index: usize,
    pub span: Span,
    pub tokens: Vec<Token>,
}

#[derive(Clone, Debug)]
pub struct Document {
    pub raw_text: String,
    pub sentences: Vec<Sentence>,
}

impl Document {
    pub fn sentence_text(&self, index: usize) -> &str {
        let span = self.sentences[index].span;
        &self.raw_text[span.start..span.end]
    }

    pub fn is_empty(&self) -> bool {
        self.sentences.is_empty()
    }
}

/// Lowercased words skipped by the matrix, scale matching, and bag-of-words
/// vectors. Parsed from one-token-per-line text; `#` starts a comment.
#[derive(Clone, Debug, Default)]
pub struct StopwordSet {
    words: HashSet<String>,
}

impl StopwordSet {
    pub fn empty() -> Self {
        Self::default()
    }

    pub fn parse(text: &str) -> Self {
        let words = text
            .lines()
            .map(str::trim)
            .filter(|line| !line.is_empty() && !line.starts_with('#'))
            .map(str::to_lowercase)
            .collect();
        StopwordSet { words }
    }

    pub fn contains(&self, normalized: &str) -> bool {
        self.words.contains(normalized)
    }

    pub fn len(&self) -> usize {
        self.words.len()
    }

    pub fn is_empty(&self) -> bool {
        self.words.is_empty()
    }
}

/// Splits raw text into sentences at `.`, `!`, or `?` followed by whitespace
/// or end of input. Abbreviations are not special-cased. Spans are trimmed of
/// surrounding whitespace and never empty.
pub fn segment_sentences(raw_text: &str, stopwords: &StopwordSet) -> Document {
    let mut sentences = Vec::new();
    let mut start: Option<usize> = None;
    let mut end = 0;
    let mut chars = raw_text.char_indices().peekable();
    while let Some((i, ch)) = chars.next() {
        if ch.is_whitespace() {
            continue;
        }
        if start.is_none() {
            start = Some(i);
        }
        end = i + ch.len_utf8();
        if matches!(ch, '.' | '!' | '?')
            && chars.peek().is_none_or(|&(_, next)| next.is_whitespace())
        {
            push_sentence(raw_text, start.take().unwrap(), end, stopwords, &mut sentences);
        }
    }
    if let Some(s) = start {
        push_sentence(raw_text, s, end, stopwords, &mut sentences);
    }
    Document {
        raw_text: raw_text.to_string(),
        sentences,
    }
}

fn push_sentence(
    raw: &str,
    start: usize,
    end: usize,
    stopwords: &StopwordSet,
    out: &mut Vec<Sentence>,
) {
    out.push(Sentence {
        index: out.len(),
        span: Span { start, end },
        tokens: tokenize(&raw[start..end], stopwords),
    });
}

/// Splits on whitespace and punctuation, keeping word-internal apostrophes
/// (`don't` stays one token). Tokens that end up without any alphanumeric
/// character are dropped.
pub fn tokenize(text: &str, stopwords: &StopwordSet) -> Vec<Token> {
    let mut tokens = Vec::new();
    let mut word = String::new();
    for ch in text.chars() {
        if ch.is_alphanumeric() || is_apostrophe(ch) {
            word.push(ch);
        } else {
            flush_word(&mut word, stopwords, &mut tokens);
        }
    }
    flush_word(&mut word, stopwords, &mut tokens);
    tokens
}

fn is_apostrophe(ch: char) -> bool {
    ch == '\'' || ch == '\u{2019}'
}

fn flush_word(word: &mut String, stopwords: &StopwordSet, out: &mut Vec<Token>) {
    if word.is_empty() {
        return;
    }
    let trimmed = word.trim_matches(is_apostrophe);
    if trimmed.chars().any(char::is_alphanumeric) {
        let normalized = trimmed.to_lowercase().replace('\u{2019}', "'");
        out.push(Token {
            surface: trimmed.to_string(),
            is_stopword: stopwords.contains(&normalized),
            normalized,
        });
    }
    word.clear();
}

/// Token ranges of the two clauses around a connective. The clause before
/// the connective argues, the clause after concludes.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ClauseSplit {
    pub argument: Range<usize>,
    pub connective: ConnectiveMatch,
    pub conclusion: Range<usize>,
    /// A sentence-initial connective points back at the previous sentence;
    /// its argument range is empty.
    pub inter_sentential: bool,
}

#[derive(Debug, Error, PartialEq, Eq)]
pub enum SplitError {
    #[error("connective ends the sentence, leaving no conclusion clause")]
    TrailingConnective,
}

pub fn split_on_connective(
    sentence: &Sentence,
    found: &ConnectiveMatch,
) -> Result<ClauseSplit, SplitError> {
    let (first, last) = found.token_span;
    debug_assert!(last < sentence.tokens.len());
    if last + 1 >= sentence.tokens.len() {
        return Err(SplitError::TrailingConnective);
    }
    Ok(ClauseSplit {
        argument: 0..first,
        connective: found.clone(),
        conclusion: last + 1..sentence.tokens.len(),
        inter_sentential: first == 0,
    })
}
