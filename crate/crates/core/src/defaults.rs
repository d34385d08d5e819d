//! Embedded default resources: stopwords, connective lexicon, and the demo
//! topos base. The CLI falls back to these when no files are given.

use std::sync::LazyLock;

use crate::lexicon::Lexicon;
use crate::text::StopwordSet;
use crate::topos::ToposBase;

pub const STOPWORDS_TEXT: &str = include_str!("../resources/stopwords.txt");
pub const LEXICON_TEXT: &str = include_str!("../resources/connectives.lex");
pub const TOPOS_TEXT: &str = include_str!("../resources/demo.topos");

static STOPWORDS: LazyLock<StopwordSet> = LazyLock::new(|| StopwordSet::parse(STOPWORDS_TEXT));
static LEXICON: LazyLock<Lexicon> =
    LazyLock::new(|| Lexicon::parse(LEXICON_TEXT).expect("embedded lexicon parses"));
static TOPOS_BASE: LazyLock<ToposBase> =
    LazyLock::new(|| ToposBase::parse(TOPOS_TEXT).expect("embedded topos base parses"));

pub fn stopwords() -> &'static StopwordSet {
    &STOPWORDS
}

pub fn lexicon() -> &'static Lexicon {
    &LEXICON
}

pub fn topos_base() -> &'static ToposBase {
    &TOPOS_BASE
}
