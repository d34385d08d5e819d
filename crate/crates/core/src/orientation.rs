//! Sentence orientation: which way a sentence argues, and on which scale.
//!
//! A splitting connective divides a sentence into an argument clause and a
//! conclusion clause; the clause after the connective carries the day, so
//! the sentence inherits its first orientation. Without a usable connective
//! the whole sentence is read as one clause.

use crate::lexicon::{detect_connectives, ConnectiveKind, ConnectiveMatch, Lexicon};
use crate::text::{split_on_connective, Document, Sentence, Token};
use crate::topos::{conclude, match_clause, Sign, ToposBase};

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum ClauseRole {
    Argument,
    Conclusion,
    WholeSentence,
}

/// An orientation a clause commits to: a sign on a scale, together with the
/// topos that licensed the inference and the clause it came from.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ArgOrientation {
    pub scale: String,
    pub sign: Sign,
    pub licensed_by: String,
    pub source: ClauseRole,
}

#[derive(Clone, Debug)]
pub struct SentenceAnnotation {
    pub sentence_index: usize,
    /// The connective that splits the sentence, when one does.
    pub connective: Option<ConnectiveMatch>,
    /// Remaining detected connectives; they weight the sentence but do not
    /// shape its clauses.
    pub extra_connectives: Vec<ConnectiveMatch>,
    pub argument_orientations: Vec<ArgOrientation>,
    /// Orientations of the conclusion clause, or of the whole sentence when
    /// nothing splits it; `source` records which reading applied.
    pub conclusion_orientations: Vec<ArgOrientation>,
    pub sentence_orientation: Option<ArgOrientation>,
    /// Set when an opposition connective joins clauses that argue in the
    /// same direction on a shared scale.
    pub conflict: bool,
}

/// Matches scales in the clause and runs every applicable topos, keeping
/// the first licensing topos per (scale, sign).
pub fn orient_clause(clause: &[Token], base: &ToposBase, role: ClauseRole) -> Vec<ArgOrientation> {
    let mut orientations: Vec<ArgOrientation> = Vec::new();
    for (scale, sign) in match_clause(clause, base) {
        for inference in conclude(base, (&scale, sign)) {
            let repeat = orientations
                .iter()
                .any(|o| o.scale == inference.scale && o.sign == inference.sign);
            if !repeat {
                orientations.push(ArgOrientation {
                    scale: inference.scale,
                    sign: inference.sign,
                    licensed_by: inference.topos,
                    source: role,
                });
            }
        }
    }
    orientations
}

/// The governing connective is the rightmost splitting match that leaves a
/// conclusion clause; a sentence-final connective falls back to the
/// whole-sentence reading.
pub fn orient_sentence(
    sentence: &Sentence,
    found: &[ConnectiveMatch],
    lexicon: &Lexicon,
    base: &ToposBase,
) -> SentenceAnnotation {
    let governing = found.iter().rev().find_map(|m| {
        if !lexicon.entry(m.entry).splits {
            return None;
        }
        split_on_connective(sentence, m).ok().map(|split| (m, split))
    });
    match governing {
        Some((m, split)) => {
            let argument_orientations =
                orient_clause(&sentence.tokens[split.argument], base, ClauseRole::Argument);
            let conclusion_orientations =
                orient_clause(&sentence.tokens[split.conclusion], base, ClauseRole::Conclusion);
            let conflict = lexicon.entry(m.entry).kind == ConnectiveKind::Opposition
                && argument_orientations.iter().any(|a| {
                    conclusion_orientations
                        .iter()
                        .any(|c| c.scale == a.scale && c.sign == a.sign)
                });
            SentenceAnnotation {
                sentence_index: sentence.index,
                connective: Some(m.clone()),
                extra_connectives: found.iter().filter(|&f| f != m).cloned().collect(),
                sentence_orientation: conclusion_orientations.first().cloned(),
                argument_orientations,
                conclusion_orientations,
                conflict,
            }
        }
        None => {
            let whole = orient_clause(&sentence.tokens, base, ClauseRole::WholeSentence);
            SentenceAnnotation {
                sentence_index: sentence.index,
                connective: None,
                extra_connectives: found.to_vec(),
                argument_orientations: Vec::new(),
                sentence_orientation: whole.first().cloned(),
                conclusion_orientations: whole,
                conflict: false,
            }
        }
    }
}

/// Annotates every sentence of the document, in order.
pub fn generate_constraints(
    doc: &Document,
    lexicon: &Lexicon,
    base: &ToposBase,
) -> Vec<SentenceAnnotation> {
    doc.sentences
        .iter()
        .map(|sentence| {
            let found = detect_connectives(sentence, lexicon);
            orient_sentence(sentence, &found, lexicon, base)
        })
        .collect()
}
