//! Summary assembly: score, rank, select, and render.
//!
//! The summary keeps the top-scoring sentences in document order and
//! surfaces the orientation each selected sentence commits to, so the
//! output states not only what was said but which way it points.

use serde::Serialize;
use thiserror::Error;

use crate::lexicon::Lexicon;
use crate::orientation::{generate_constraints, ArgOrientation};
use crate::scoring::{build_matrix, extract_keywords, rank, score_sentence, SentenceScore};
use crate::text::Document;
use crate::topos::ToposBase;

#[derive(Clone, Copy, Debug)]
pub struct SummaryConfig {
    /// Fraction of sentences to keep, in (0, 1].
    pub ratio: f64,
    /// Keyword threshold relative to the maximum document frequency,
    /// in (0, 1].
    pub alpha: f64,
    /// Score with the original fixed setting: only maximum-frequency
    /// words count as keywords, as if `alpha` were 1.0.
    pub paper_fidelity: bool,
}

impl Default for SummaryConfig {
    fn default() -> Self {
        SummaryConfig { ratio: 0.3, alpha: 0.5, paper_fidelity: false }
    }
}

impl SummaryConfig {
    pub fn effective_alpha(&self) -> f64 {
        if self.paper_fidelity {
            1.0
        } else {
            self.alpha
        }
    }

    pub fn validate(&self) -> Result<(), ConfigError> {
        if !(self.ratio > 0.0 && self.ratio <= 1.0) {
            return Err(ConfigError::Ratio(self.ratio));
        }
        if !(self.alpha > 0.0 && self.alpha <= 1.0) {
            return Err(ConfigError::Alpha(self.alpha));
        }
        Ok(())
    }
}

#[derive(Debug, Error, PartialEq)]
pub enum ConfigError {
    #[error("ratio must be in (0, 1], got {0}")]
    Ratio(f64),
    #[error("alpha must be in (0, 1], got {0}")]
    Alpha(f64),
}

/// A selected sentence's orientation, rendered as `<sign> <scale> (via <topos>)`.
#[derive(Clone, Debug, PartialEq)]
pub struct ConclusionNote {
    pub sentence_index: usize,
    pub orientation: ArgOrientation,
    pub rendered: String,
}

#[derive(Clone, Debug)]
pub struct Summary {
    /// Selected sentences as (index, text), in document order.
    pub selected: Vec<(usize, String)>,
    /// Notes for selected sentences that commit to an orientation.
    pub conclusions: Vec<ConclusionNote>,
    /// Scores for every sentence of the document, in document order.
    pub scores: Vec<SentenceScore>,
}

#[derive(Debug, Error, PartialEq, Eq)]
pub enum SummarizeError {
    #[error("document contains no sentences")]
    EmptyDocument,
}

fn summary_size(ratio: f64, sentence_count: usize) -> usize {
    let k = (ratio * sentence_count as f64).floor() as usize;
    k.max(1).min(sentence_count)
}

pub fn summarize(
    doc: &Document,
    lexicon: &Lexicon,
    base: &ToposBase,
    config: &SummaryConfig,
) -> Result<Summary, SummarizeError> {
    if doc.is_empty() {
        return Err(SummarizeError::EmptyDocument);
    }
    let annotations = generate_constraints(doc, lexicon, base);
    let matrix = build_matrix(doc);
    let keywords = extract_keywords(&matrix, config.effective_alpha());
    let scores: Vec<SentenceScore> = doc
        .sentences
        .iter()
        .zip(&annotations)
        .map(|(sentence, ann)| score_sentence(sentence, &keywords, ann, lexicon))
        .collect();
    let order = rank(&scores);
    let mut chosen = order[..summary_size(config.ratio, doc.sentences.len())].to_vec();
    chosen.sort_unstable();
    let selected = chosen
        .iter()
        .map(|&i| (i, doc.sentence_text(i).to_string()))
        .collect();
    let conclusions = chosen
        .iter()
        .filter_map(|&i| {
            annotations[i].sentence_orientation.as_ref().map(|o| ConclusionNote {
                sentence_index: i,
                rendered: format!("{} {} (via {})", o.sign, o.scale, o.licensed_by),
                orientation: o.clone(),
            })
        })
        .collect();
    Ok(Summary { selected, conclusions, scores })
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum OutputFormat {
    Text,
    Json,
}

/// Text output: the selected sentences on one line, a conclusion block
/// when there is one, and a score table under `explain`. JSON output is a
/// single line; its `scores` array is filled only under `explain`.
pub fn render(summary: &Summary, format: OutputFormat, explain: bool) -> String {
    match format {
        OutputFormat::Text => render_text(summary, explain),
        OutputFormat::Json => render_json(summary, explain),
    }
}

fn render_text(summary: &Summary, explain: bool) -> String {
    let texts: Vec<&str> = summary.selected.iter().map(|(_, t)| t.as_str()).collect();
    let mut out = texts.join(" ");
    out.push('\n');
    if !summary.conclusions.is_empty() {
        out.push('\n');
        for note in &summary.conclusions {
            out.push_str(&format!("[{}] {}\n", note.sentence_index, note.rendered));
        }
    }
    if explain {
        out.push('\n');
        out.push_str("index\tCw\tWw\tscore\n");
        for s in &summary.scores {
            out.push_str(&format!(
                "{}\t{}\t{}\t{}\n",
                s.sentence_index, s.connective_weight, s.keyword_weight, s.score
            ));
        }
    }
    out
}

#[derive(Serialize)]
struct JsonSummary<'a> {
    summary: Vec<JsonSentence<'a>>,
    conclusions: Vec<JsonConclusion<'a>>,
    scores: Vec<JsonScore>,
}

#[derive(Serialize)]
struct JsonSentence<'a> {
    index: usize,
    text: &'a str,
}

#[derive(Serialize)]
struct JsonConclusion<'a> {
    index: usize,
    scale: &'a str,
    sign: char,
    topos: &'a str,
}

#[derive(Serialize)]
struct JsonScore {
    index: usize,
    #[serde(rename = "Ww")]
    ww: f64,
    #[serde(rename = "Cw")]
    cw: f64,
    score: f64,
}

fn render_json(summary: &Summary, explain: bool) -> String {
    let payload = JsonSummary {
        summary: summary
            .selected
            .iter()
            .map(|(index, text)| JsonSentence { index: *index, text })
            .collect(),
        conclusions: summary
            .conclusions
            .iter()
            .map(|note| JsonConclusion {
                index: note.sentence_index,
                scale: &note.orientation.scale,
                sign: note.orientation.sign.symbol(),
                topos: &note.orientation.licensed_by,
            })
            .collect(),
        scores: if explain {
            summary
                .scores
                .iter()
                .map(|s| JsonScore {
                    index: s.sentence_index,
                    ww: s.keyword_weight,
                    cw: s.connective_weight,
                    score: s.score,
                })
                .collect()
        } else {
            Vec::new()
        },
    };
    let mut text = serde_json::to_string(&payload).expect("plain data serializes");
    text.push('\n');
    text
}
