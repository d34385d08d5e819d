//! Word frequency and connective scoring.
//!
//! Each sentence earns a keyword weight (sum of its keyword weights, one
//! addend per occurrence) and a connective weight (the heaviest connective
//! detected in it, 1.0 when none). The sentence score is their product.
//! Counts are kept sparse: one map per sentence, not a dense table.

use std::collections::HashMap;

use crate::lexicon::Lexicon;
use crate::orientation::SentenceAnnotation;
use crate::text::{Document, Sentence};

/// Occurrence counts of every distinct non-stopword word per sentence,
/// with document-wide totals. Row order is first occurrence.
#[derive(Clone, Debug, Default)]
pub struct WordSentenceMatrix {
    words: Vec<String>,
    index: HashMap<String, usize>,
    counts: Vec<HashMap<usize, u32>>,
    doc_freq: Vec<u64>,
}

impl WordSentenceMatrix {
    pub fn words(&self) -> &[String] {
        &self.words
    }

    pub fn num_words(&self) -> usize {
        self.words.len()
    }

    pub fn num_sentences(&self) -> usize {
        self.counts.len()
    }

    pub fn count(&self, word: &str, sentence: usize) -> u32 {
        self.index
            .get(word)
            .and_then(|i| self.counts[sentence].get(i))
            .copied()
            .unwrap_or(0)
    }

    pub fn doc_freq(&self, word: &str) -> u64 {
        self.index.get(word).map_or(0, |&i| self.doc_freq[i])
    }

    pub fn max_doc_freq(&self) -> u64 {
        self.doc_freq.iter().copied().max().unwrap_or(0)
    }
}

pub fn build_matrix(doc: &Document) -> WordSentenceMatrix {
    let mut matrix = WordSentenceMatrix::default();
    for sentence in &doc.sentences {
        let mut row: HashMap<usize, u32> = HashMap::new();
        for token in sentence.tokens.iter().filter(|t| !t.is_stopword) {
            let word_idx = match matrix.index.get(&token.normalized) {
                Some(&i) => i,
                None => {
                    matrix.words.push(token.normalized.clone());
                    matrix.doc_freq.push(0);
                    matrix.index.insert(token.normalized.clone(), matrix.words.len() - 1);
                    matrix.words.len() - 1
                }
            };
            *row.entry(word_idx).or_insert(0) += 1;
            matrix.doc_freq[word_idx] += 1;
        }
        matrix.counts.push(row);
    }
    matrix
}

/// Keywords are the words whose document frequency reaches `alpha` times
/// the maximum; each maps to its frequency relative to that maximum, so
/// the most frequent words weigh 1.0. With `alpha` = 1.0 only words at the
/// maximum survive.
pub fn extract_keywords(matrix: &WordSentenceMatrix, alpha: f64) -> HashMap<String, f64> {
    let max = matrix.max_doc_freq();
    if max == 0 {
        return HashMap::new();
    }
    let max = max as f64;
    matrix
        .words
        .iter()
        .zip(&matrix.doc_freq)
        .filter(|&(_, &freq)| freq as f64 >= alpha * max)
        .map(|(word, &freq)| (word.clone(), freq as f64 / max))
        .collect()
}

#[derive(Clone, Copy, Debug, PartialEq)]
pub struct SentenceScore {
    pub sentence_index: usize,
    /// Sum of keyword weights over the sentence's non-stopword tokens.
    pub keyword_weight: f64,
    /// Heaviest detected connective, or 1.0 when the sentence has none.
    pub connective_weight: f64,
    pub score: f64,
}

pub fn score_sentence(
    sentence: &Sentence,
    keywords: &HashMap<String, f64>,
    annotation: &SentenceAnnotation,
    lexicon: &Lexicon,
) -> SentenceScore {
    // f64's Sum folds from -0.0; fold from +0.0 so zero-hit sentences render as "0"
    let keyword_weight: f64 = sentence
        .tokens
        .iter()
        .filter(|t| !t.is_stopword)
        .filter_map(|t| keywords.get(&t.normalized))
        .fold(0.0, |total, weight| total + weight);
    let connective_weight = annotation
        .connective
        .iter()
        .chain(&annotation.extra_connectives)
        .map(|m| lexicon.entry(m.entry).weight)
        .reduce(f64::max)
        .unwrap_or(1.0);
    SentenceScore {
        sentence_index: sentence.index,
        keyword_weight,
        connective_weight,
        score: connective_weight * keyword_weight,
    }
}

/// Sentence indices from best to worst; equal scores keep document order.
pub fn rank(scores: &[SentenceScore]) -> Vec<usize> {
    let mut order: Vec<usize> = (0..scores.len()).collect();
    order.sort_by(|&a, &b| {
        scores[b]
            .score
            .total_cmp(&scores[a].score)
            .then(scores[a].sentence_index.cmp(&scores[b].sentence_index))
    });
    order.into_iter().map(|i| scores[i].sentence_index).collect()
}
