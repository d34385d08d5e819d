//! Bag-of-words cosine similarity.
//!
//! The vectors ignore word order entirely, which is exactly the blind spot
//! the orientation engine exists to cover: two sentences with the same bag
//! and opposite stances still score 1.0 here.

use std::collections::BTreeMap;

use crate::text::{tokenize, StopwordSet};

/// Occurrence counts of the non-stopword normalized words of one text.
/// Sorted storage keeps every fold over the counts deterministic.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct BowVector {
    counts: BTreeMap<String, u32>,
}

impl BowVector {
    pub fn get(&self, word: &str) -> u32 {
        self.counts.get(word).copied().unwrap_or(0)
    }

    pub fn len(&self) -> usize {
        self.counts.len()
    }

    pub fn is_empty(&self) -> bool {
        self.counts.is_empty()
    }

    pub fn iter(&self) -> impl Iterator<Item = (&str, u32)> {
        self.counts.iter().map(|(w, &c)| (w.as_str(), c))
    }
}

pub fn bow_vector(text: &str, stopwords: &StopwordSet) -> BowVector {
    let mut counts = BTreeMap::new();
    for token in tokenize(text, stopwords) {
        if !token.is_stopword {
            *counts.entry(token.normalized).or_insert(0) += 1;
        }
    }
    BowVector { counts }
}

/// Cosine of the angle between two count vectors, clamped into [0, 1].
/// Returns 0.0 when either vector is empty; `cosine_checked` distinguishes
/// that degenerate case.
pub fn cosine(a: &BowVector, b: &BowVector) -> f64 {
    cosine_checked(a, b).unwrap_or(0.0)
}

pub fn cosine_checked(a: &BowVector, b: &BowVector) -> Option<f64> {
    if a.is_empty() || b.is_empty() {
        return None;
    }
    let (small, large) = if a.len() <= b.len() { (a, b) } else { (b, a) };
    let dot: f64 = small
        .counts
        .iter()
        .map(|(word, &count)| f64::from(count) * f64::from(large.get(word)))
        .sum();
    let norm_sq = |v: &BowVector| -> f64 {
        v.counts.values().map(|&c| f64::from(c) * f64::from(c)).sum()
    };
    let denom = (norm_sq(small) * norm_sq(large)).sqrt();
    Some((dot / denom).clamp(0.0, 1.0))
}
