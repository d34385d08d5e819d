//! Argumentation-aware extractive summarization.
//!
//! A document is segmented into sentences, connectives are detected, and a
//! topos base turns clause contents into signed orientations on lexical
//! scales: "the weather is beautiful but I have to work" argues against an
//! outing, its mirror image argues for one. Sentence scores combine word
//! frequency with connective weight, the best sentences are extracted, and
//! each selected sentence surfaces the orientation it commits to. A
//! bag-of-words cosine lives alongside as the order-blind baseline the
//! orientation engine is meant to beat.
//!
//! ```
//! use argsum_core::{defaults, segment_sentences, summarize, SummaryConfig};
//!
//! let doc = segment_sentences(
//!     "The weather is beautiful but I have to work. The work can wait.",
//!     defaults::stopwords(),
//! );
//! let summary = summarize(
//!     &doc,
//!     defaults::lexicon(),
//!     defaults::topos_base(),
//!     &SummaryConfig::default(),
//! )
//! .unwrap();
//! assert_eq!(summary.selected.len(), 1);
//! ```

pub mod defaults;
pub mod lexicon;
pub mod orientation;
pub mod scoring;
pub mod similarity;
pub mod summary;
pub mod text;
pub mod topos;

pub use lexicon::{
    detect_connectives, ConnectiveEntry, ConnectiveKind, ConnectiveMatch, Lexicon, LexiconError,
    OrientationSource,
};
pub use orientation::{
    generate_constraints, orient_clause, orient_sentence, ArgOrientation, ClauseRole,
    SentenceAnnotation,
};
pub use scoring::{
    build_matrix, extract_keywords, rank, score_sentence, SentenceScore, WordSentenceMatrix,
};
pub use similarity::{bow_vector, cosine, cosine_checked, BowVector};
pub use summary::{
    render, summarize, ConclusionNote, ConfigError, OutputFormat, Summary, SummaryConfig,
    SummarizeError,
};
pub use text::{
    segment_sentences, split_on_connective, tokenize, ClauseSplit, Document, Sentence, Span,
    SplitError, StopwordSet, Token,
};
pub use topos::{
    conclude, derive_topical_forms, match_clause, Inference, Scale, Sign, TopicalForm, Topos,
    ToposBase, ToposError,
};
