//! `argsum`: summarize a document, compare two texts, or validate
//! resource files.
//!
//! Exit codes: 0 on success, 1 on empty or degenerate input, 2 on usage
//! errors, unreadable files, or malformed resources.

use std::fs;
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};

use argsum_core::{
    bow_vector, cosine_checked, defaults, generate_constraints, render, segment_sentences,
    summarize, Document, Lexicon, OutputFormat, StopwordSet, SummaryConfig, ToposBase,
};

#[derive(Parser)]
#[command(name = "argsum", version, about = "Argumentation-aware extractive summarizer")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Summarize a text file
    Summarize {
        /// Input text file
        #[arg(long)]
        input: PathBuf,
        /// Connective lexicon file (embedded default when omitted)
        #[arg(long)]
        lexicon: Option<PathBuf>,
        /// Topos base file (embedded default when omitted)
        #[arg(long)]
        topoi: Option<PathBuf>,
        /// Stopword file (embedded default when omitted)
        #[arg(long)]
        stopwords: Option<PathBuf>,
        /// Fraction of sentences to keep, in (0, 1]
        #[arg(long, default_value_t = 0.3)]
        ratio: f64,
        /// Keyword frequency threshold, in (0, 1]
        #[arg(long, default_value_t = 0.5)]
        alpha: f64,
        #[arg(long, value_enum, default_value = "text")]
        format: Format,
        /// Also print per-sentence scores and annotations
        #[arg(long)]
        explain: bool,
        /// Keep only maximum-frequency keywords (forces alpha to 1.0)
        #[arg(long)]
        paper_fidelity: bool,
    },
    /// Print the bag-of-words cosine of two texts as `COS <value>`
    Compare {
        #[arg(value_name = "TEXT1")]
        first: String,
        #[arg(value_name = "TEXT2")]
        second: String,
        /// Stopword file (embedded default when omitted)
        #[arg(long)]
        stopwords: Option<PathBuf>,
    },
    /// Validate resource files and print what they declare
    Check {
        /// Connective lexicon file (embedded default when omitted)
        #[arg(long)]
        lexicon: Option<PathBuf>,
        /// Topos base file (embedded default when omitted)
        #[arg(long)]
        topoi: Option<PathBuf>,
        /// Stopword file (embedded default when omitted)
        #[arg(long)]
        stopwords: Option<PathBuf>,
    },
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Text,
    Json,
}

impl From<Format> for OutputFormat {
    fn from(format: Format) -> Self {
        match format {
            Format::Text => OutputFormat::Text,
            Format::Json => OutputFormat::Json,
        }
    }
}

#[derive(Debug, thiserror::Error)]
enum CliError {
    #[error("{0}")]
    Degenerate(String),
    #[error("{0}")]
    Usage(String),
}

impl CliError {
    fn exit_code(&self) -> ExitCode {
        match self {
            CliError::Degenerate(_) => ExitCode::from(1),
            CliError::Usage(_) => ExitCode::from(2),
        }
    }
}

fn main() -> ExitCode {
    match run(Cli::parse()) {
        Ok(output) => {
            print!("{output}");
            ExitCode::SUCCESS
        }
        Err(error) => {
            eprintln!("error: {error}");
            error.exit_code()
        }
    }
}

fn run(cli: Cli) -> Result<String, CliError> {
    match cli.command {
        Command::Summarize {
            input,
            lexicon,
            topoi,
            stopwords,
            ratio,
            alpha,
            format,
            explain,
            paper_fidelity,
        } => {
            let config = SummaryConfig { ratio, alpha, paper_fidelity };
            config.validate().map_err(|e| CliError::Usage(e.to_string()))?;
            let stopwords = load_stopwords(stopwords.as_deref())?;
            let lexicon = load_lexicon(lexicon.as_deref())?;
            let base = load_topoi(topoi.as_deref())?;
            let text = read_file(&input, "input")?;
            let doc = segment_sentences(&text, &stopwords);
            let summary = summarize(&doc, &lexicon, &base, &config)
                .map_err(|e| CliError::Degenerate(e.to_string()))?;
            let mut output = render(&summary, format.into(), explain);
            if explain && format == Format::Text {
                output.push('\n');
                output.push_str(&annotation_block(&doc, &lexicon, &base));
            }
            Ok(output)
        }
        Command::Compare { first, second, stopwords } => {
            let stopwords = load_stopwords(stopwords.as_deref())?;
            let a = bow_vector(&first, &stopwords);
            let b = bow_vector(&second, &stopwords);
            let value = cosine_checked(&a, &b).ok_or_else(|| {
                CliError::Degenerate("no content words to compare".to_string())
            })?;
            Ok(format!("COS {value:.2}\n"))
        }
        Command::Check { lexicon, topoi, stopwords } => {
            let stopwords = load_stopwords(stopwords.as_deref())?;
            let lexicon = load_lexicon(lexicon.as_deref())?;
            let base = load_topoi(topoi.as_deref())?;
            Ok(format!(
                "{} connectives\n{} scales\n{} topoi\n{} stopwords\n",
                lexicon.len(),
                base.scales().len(),
                base.topoi().len(),
                stopwords.len(),
            ))
        }
    }
}

fn read_file(path: &Path, what: &str) -> Result<String, CliError> {
    fs::read_to_string(path)
        .map_err(|e| CliError::Usage(format!("cannot read {what} {}: {e}", path.display())))
}

fn load_stopwords(path: Option<&Path>) -> Result<StopwordSet, CliError> {
    match path {
        Some(p) => Ok(StopwordSet::parse(&read_file(p, "stopword file")?)),
        None => Ok(defaults::stopwords().clone()),
    }
}

fn load_lexicon(path: Option<&Path>) -> Result<Lexicon, CliError> {
    match path {
        Some(p) => Lexicon::parse(&read_file(p, "lexicon")?)
            .map_err(|e| CliError::Usage(format!("{}: {e}", p.display()))),
        None => Ok(defaults::lexicon().clone()),
    }
}

fn load_topoi(path: Option<&Path>) -> Result<ToposBase, CliError> {
    match path {
        Some(p) => ToposBase::parse(&read_file(p, "topos base")?)
            .map_err(|e| CliError::Usage(format!("{}: {e}", p.display()))),
        None => Ok(defaults::topos_base().clone()),
    }
}

fn annotation_block(doc: &Document, lexicon: &Lexicon, base: &ToposBase) -> String {
    let mut out = String::from("annotations\n");
    for (ann, sentence) in generate_constraints(doc, lexicon, base).iter().zip(&doc.sentences) {
        let connective = match &ann.connective {
            Some(m) => {
                let words: Vec<&str> = sentence.tokens[m.token_span.0..=m.token_span.1]
                    .iter()
                    .map(|t| t.normalized.as_str())
                    .collect();
                words.join(" ")
            }
            None => "-".to_string(),
        };
        let orientation = match &ann.sentence_orientation {
            Some(o) => format!("{} {} (via {})", o.sign, o.scale, o.licensed_by),
            None => "-".to_string(),
        };
        out.push_str(&format!(
            "[{}] connective={connective} orientation={orientation}{}\n",
            ann.sentence_index,
            if ann.conflict { " conflict" } else { "" },
        ));
    }
    out
}
