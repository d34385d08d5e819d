//! Gradual inference rules over lexical scales.
//!
//! A topos such as `+weather_beautiful -> +outing` licenses a conclusion on
//! one scale from a premise on another. Each declared rule commits the base
//! to its sign-flipped converse, so a single line yields the two usable
//! topical forms.
//!
//! File format:
//!
//! ```text
//! scale <id>: lexeme[, lexeme...]
//! topos <id>: <+|-><scale_id> -> <+|-><scale_id>
//! ```
//!
//! Multiword lexemes are quoted. Scales may be declared after the topoi
//! that use them; resolution happens in a second pass.

use std::collections::{BTreeSet, HashSet};
use std::fmt;
use std::ops::Neg;

use thiserror::Error;

use crate::text::Token;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Sign {
    Plus,
    Minus,
}

impl Sign {
    pub fn negated(self) -> Sign {
        match self {
            Sign::Plus => Sign::Minus,
            Sign::Minus => Sign::Plus,
        }
    }

    pub fn symbol(self) -> char {
        match self {
            Sign::Plus => '+',
            Sign::Minus => '-',
        }
    }

    fn parse(ch: char) -> Option<Sign> {
        match ch {
            '+' => Some(Sign::Plus),
            '-' => Some(Sign::Minus),
            _ => None,
        }
    }
}

impl Neg for Sign {
    type Output = Sign;

    fn neg(self) -> Sign {
        self.negated()
    }
}

impl fmt::Display for Sign {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.symbol())
    }
}

/// Sign pair (premise, conclusion) of an inference rule.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct TopicalForm {
    pub p_sign: Sign,
    pub q_sign: Sign,
}

impl TopicalForm {
    pub fn negated(self) -> TopicalForm {
        TopicalForm { p_sign: -self.p_sign, q_sign: -self.q_sign }
    }

    /// A speaker committed to a form is committed to its converse: flipping
    /// both signs preserves the inference, flipping one does not.
    pub fn belief_closure(self) -> BTreeSet<TopicalForm> {
        [self, self.negated()].into_iter().collect()
    }
}

/// A gradable property with the lexemes that evoke it. Multiword lexemes
/// are stored as word sequences.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Scale {
    pub id: String,
    pub lexemes: Vec<Vec<String>>,
}

/// One declared inference rule between two distinct scales.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Topos {
    pub id: String,
    pub antecedent: (String, Sign),
    pub consequent: (String, Sign),
}

impl Topos {
    pub fn declared_form(&self) -> TopicalForm {
        TopicalForm { p_sign: self.antecedent.1, q_sign: self.consequent.1 }
    }
}

pub fn derive_topical_forms(topos: &Topos) -> BTreeSet<TopicalForm> {
    topos.declared_form().belief_closure()
}

#[derive(Clone, Debug, Default)]
pub struct ToposBase {
    scales: Vec<Scale>,
    topoi: Vec<Topos>,
}

#[derive(Debug, Error, PartialEq, Eq)]
pub enum ToposError {
    #[error("line {line}: {message}")]
    Parse { line: usize, message: String },
    #[error("line {line}: unknown scale `{id}`")]
    UnknownScale { line: usize, id: String },
    #[error("line {line}: duplicate id `{id}`")]
    DuplicateId { line: usize, id: String },
    #[error("line {line}: topos `{id}` relates a scale to itself")]
    SelfReferential { line: usize, id: String },
}

fn parse_err(line: usize, message: impl Into<String>) -> ToposError {
    ToposError::Parse { line, message: message.into() }
}

impl ToposBase {
    pub fn empty() -> Self {
        Self::default()
    }

    pub fn parse(text: &str) -> Result<Self, ToposError> {
        let mut scales: Vec<Scale> = Vec::new();
        let mut pending: Vec<(usize, Topos)> = Vec::new();
        let mut topos_ids: HashSet<String> = HashSet::new();
        for (i, raw_line) in text.lines().enumerate() {
            let line_no = i + 1;
            let line = raw_line.trim();
            if line.is_empty() || line.starts_with('#') {
                continue;
            }
            if let Some(rest) = line.strip_prefix("scale") {
                let scale = parse_scale(line_no, rest)?;
                if scales.iter().any(|s| s.id == scale.id) {
                    return Err(ToposError::DuplicateId { line: line_no, id: scale.id });
                }
                scales.push(scale);
            } else if let Some(rest) = line.strip_prefix("topos") {
                let topos = parse_topos(line_no, rest)?;
                if !topos_ids.insert(topos.id.clone()) {
                    return Err(ToposError::DuplicateId { line: line_no, id: topos.id });
                }
                pending.push((line_no, topos));
            } else {
                return Err(parse_err(line_no, "expected `scale` or `topos`"));
            }
        }
        for (line_no, topos) in &pending {
            for (scale_id, _) in [&topos.antecedent, &topos.consequent] {
                if !scales.iter().any(|s| &s.id == scale_id) {
                    return Err(ToposError::UnknownScale {
                        line: *line_no,
                        id: scale_id.clone(),
                    });
                }
            }
        }
        Ok(ToposBase { scales, topoi: pending.into_iter().map(|(_, t)| t).collect() })
    }

    pub fn scales(&self) -> &[Scale] {
        &self.scales
    }

    pub fn topoi(&self) -> &[Topos] {
        &self.topoi
    }

    pub fn scale(&self, id: &str) -> Option<&Scale> {
        self.scales.iter().find(|s| s.id == id)
    }

    pub fn topos(&self, id: &str) -> Option<&Topos> {
        self.topoi.iter().find(|t| t.id == id)
    }

    /// Writes scales then topoi in declaration order; parsing the result
    /// reproduces the base.
    pub fn to_text(&self) -> String {
        let mut out = String::new();
        for scale in &self.scales {
            let lexemes: Vec<String> = scale
                .lexemes
                .iter()
                .map(|words| {
                    if words.len() == 1 {
                        words[0].clone()
                    } else {
                        format!("\"{}\"", words.join(" "))
                    }
                })
                .collect();
            out.push_str(&format!("scale {}: {}\n", scale.id, lexemes.join(", ")));
        }
        for topos in &self.topoi {
            out.push_str(&format!(
                "topos {}: {}{} -> {}{}\n",
                topos.id,
                topos.antecedent.1,
                topos.antecedent.0,
                topos.consequent.1,
                topos.consequent.0,
            ));
        }
        out
    }
}

fn is_identifier(text: &str) -> bool {
    let mut chars = text.chars();
    chars.next().is_some_and(|c| c.is_ascii_alphabetic() || c == '_')
        && chars.all(|c| c.is_ascii_alphanumeric() || c == '_')
}

fn parse_scale(line_no: usize, rest: &str) -> Result<Scale, ToposError> {
    let (id, body) = rest
        .split_once(':')
        .ok_or_else(|| parse_err(line_no, "expected `scale <id>: <lexemes>`"))?;
    let id = id.trim();
    if !is_identifier(id) {
        return Err(parse_err(line_no, format!("bad scale id `{id}`")));
    }
    let mut lexemes: Vec<Vec<String>> = Vec::new();
    for piece in body.split(',') {
        let piece = piece.trim();
        if piece.is_empty() {
            return Err(parse_err(line_no, "empty lexeme"));
        }
        let words: Vec<String> = if let Some(inner) = piece.strip_prefix('"') {
            let inner = inner
                .strip_suffix('"')
                .ok_or_else(|| parse_err(line_no, "unterminated quote"))?;
            inner.split_whitespace().map(str::to_lowercase).collect()
        } else {
            if piece.contains(char::is_whitespace) {
                return Err(parse_err(line_no, "multiword lexemes must be quoted"));
            }
            vec![piece.to_lowercase()]
        };
        if words.is_empty() {
            return Err(parse_err(line_no, "empty lexeme"));
        }
        if !lexemes.contains(&words) {
            lexemes.push(words);
        }
    }
    Ok(Scale { id: id.to_string(), lexemes })
}

fn parse_topos(line_no: usize, rest: &str) -> Result<Topos, ToposError> {
    let (id, body) = rest
        .split_once(':')
        .ok_or_else(|| parse_err(line_no, "expected `topos <id>: <rule>`"))?;
    let id = id.trim();
    if !is_identifier(id) {
        return Err(parse_err(line_no, format!("bad topos id `{id}`")));
    }
    let (antecedent, consequent) = body
        .split_once("->")
        .ok_or_else(|| parse_err(line_no, "expected `->` between premise and conclusion"))?;
    let antecedent = parse_signed_scale(line_no, antecedent)?;
    let consequent = parse_signed_scale(line_no, consequent)?;
    if antecedent.0 == consequent.0 {
        return Err(ToposError::SelfReferential { line: line_no, id: id.to_string() });
    }
    Ok(Topos { id: id.to_string(), antecedent, consequent })
}

fn parse_signed_scale(line_no: usize, text: &str) -> Result<(String, Sign), ToposError> {
    let text = text.trim();
    let mut chars = text.chars();
    let sign = chars
        .next()
        .and_then(Sign::parse)
        .ok_or_else(|| parse_err(line_no, format!("expected `+` or `-` before `{text}`")))?;
    let id = chars.as_str();
    if !is_identifier(id) {
        return Err(parse_err(line_no, format!("bad scale id `{id}`")));
    }
    Ok((id.to_string(), sign))
}

/// Finds each scale's leftmost lexeme occurrence among the clause's
/// non-stopword tokens; multiword lexemes must be contiguous in that
/// stopword-free view. The sign is `+`, flipped once if any of the three
/// original tokens before the match is a negator.
pub fn match_clause(clause: &[Token], base: &ToposBase) -> Vec<(String, Sign)> {
    let content: Vec<usize> = clause
        .iter()
        .enumerate()
        .filter(|(_, t)| !t.is_stopword)
        .map(|(i, _)| i)
        .collect();
    let mut found = Vec::new();
    for scale in base.scales() {
        let mut leftmost: Option<usize> = None;
        for lexeme in &scale.lexemes {
            if lexeme.is_empty() || lexeme.len() > content.len() {
                continue;
            }
            for window in content.windows(lexeme.len()) {
                let hit = window
                    .iter()
                    .zip(lexeme)
                    .all(|(&i, word)| clause[i].normalized == *word);
                if hit {
                    let start = window[0];
                    if leftmost.is_none_or(|prev| start < prev) {
                        leftmost = Some(start);
                    }
                    break;
                }
            }
        }
        if let Some(pos) = leftmost {
            let sign = if negated_at(clause, pos) { Sign::Minus } else { Sign::Plus };
            found.push((scale.id.clone(), sign));
        }
    }
    found
}

fn negated_at(clause: &[Token], pos: usize) -> bool {
    clause[pos.saturating_sub(3)..pos]
        .iter()
        .any(|t| is_negator(&t.normalized))
}

fn is_negator(word: &str) -> bool {
    matches!(word, "not" | "no" | "never") || word.ends_with("n't")
}

/// A conclusion licensed by a topos: the consequent scale, the sign it
/// takes, and the rule that produced it.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Inference {
    pub scale: String,
    pub sign: Sign,
    pub topos: String,
}

/// Applies every topos whose antecedent scale matches the premise, in
/// declaration order. A premise sign equal to the antecedent's uses the
/// declared form; the opposite sign uses the converse. Repeated
/// (scale, sign) conclusions keep the first licensing topos.
pub fn conclude(base: &ToposBase, premise: (&str, Sign)) -> Vec<Inference> {
    let (scale, sign) = premise;
    let mut conclusions: Vec<Inference> = Vec::new();
    for topos in base.topoi() {
        if topos.antecedent.0 != scale {
            continue;
        }
        let q_sign = if sign == topos.antecedent.1 {
            topos.consequent.1
        } else {
            -topos.consequent.1
        };
        let repeat = conclusions
            .iter()
            .any(|c| c.scale == topos.consequent.0 && c.sign == q_sign);
        if !repeat {
            conclusions.push(Inference {
                scale: topos.consequent.0.clone(),
                sign: q_sign,
                topos: topos.id.clone(),
            });
        }
    }
    conclusions
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::defaults;
    use crate::text::tokenize;
    use proptest::prelude::*;

    fn demo() -> &'static ToposBase {
        defaults::topos_base()
    }

    fn form(p: Sign, q: Sign) -> TopicalForm {
        TopicalForm { p_sign: p, q_sign: q }
    }

    fn tokens(text: &str) -> Vec<Token> {
        tokenize(text, defaults::stopwords())
    }

    #[test]
    fn parses_the_demo_base() {
        let base = demo();
        assert_eq!(base.scales().len(), 3);
        assert_eq!(base.topoi().len(), 2);
        let outing = base.scale("outing").unwrap();
        assert_eq!(outing.lexemes.len(), 4);
        assert_eq!(outing.lexemes[3], vec!["go".to_string(), "out".to_string()]);
        let t2 = base.topos("t2").unwrap();
        assert_eq!(t2.antecedent, ("work".to_string(), Sign::Plus));
        assert_eq!(t2.consequent, ("outing".to_string(), Sign::Minus));
    }

    #[test]
    fn scales_may_follow_their_topoi() {
        let base = ToposBase::parse(
            "topos t: +p -> -q\nscale p: fast\nscale q: slow",
        )
        .unwrap();
        assert_eq!(base.topoi().len(), 1);
        assert_eq!(base.scales().len(), 2);
    }

    #[test]
    fn empty_text_is_an_empty_base() {
        let base = ToposBase::parse("# nothing\n").unwrap();
        assert!(base.scales().is_empty());
        assert!(base.topoi().is_empty());
    }

    #[test]
    fn rejects_malformed_lines() {
        let cases: Vec<(&str, ToposError)> = vec![
            (
                "slope p: fast",
                ToposError::Parse { line: 1, message: "expected `scale` or `topos`".into() },
            ),
            (
                "scale p fast",
                ToposError::Parse { line: 1, message: "expected `scale <id>: <lexemes>`".into() },
            ),
            (
                "scale 9p: fast",
                ToposError::Parse { line: 1, message: "bad scale id `9p`".into() },
            ),
            (
                "scale p: fast slow",
                ToposError::Parse { line: 1, message: "multiword lexemes must be quoted".into() },
            ),
            (
                "scale p: \"fast slow",
                ToposError::Parse { line: 1, message: "unterminated quote".into() },
            ),
            (
                "scale p: fast,,slow",
                ToposError::Parse { line: 1, message: "empty lexeme".into() },
            ),
            (
                "scale p: \"\"",
                ToposError::Parse { line: 1, message: "empty lexeme".into() },
            ),
            (
                "scale p: fast\nscale q: slow\ntopos t: +p -> q",
                ToposError::Parse { line: 3, message: "expected `+` or `-` before `q`".into() },
            ),
            (
                "scale p: fast\nscale q: slow\ntopos t: +p +q",
                ToposError::Parse {
                    line: 3,
                    message: "expected `->` between premise and conclusion".into(),
                },
            ),
            (
                "scale p: fast\ntopos t: +p -> -q",
                ToposError::UnknownScale { line: 2, id: "q".into() },
            ),
            (
                "scale p: fast\nscale p: slow",
                ToposError::DuplicateId { line: 2, id: "p".into() },
            ),
            (
                "scale p: fast\nscale q: slow\ntopos t: +p -> +q\ntopos t: +q -> +p",
                ToposError::DuplicateId { line: 4, id: "t".into() },
            ),
            (
                "scale p: fast\ntopos t: +p -> -p",
                ToposError::SelfReferential { line: 2, id: "t".into() },
            ),
        ];
        for (text, expected) in cases {
            assert_eq!(ToposBase::parse(text).unwrap_err(), expected, "for {text:?}");
        }
    }

    #[test]
    fn duplicate_lexemes_collapse() {
        let base = ToposBase::parse("scale p: fast, Fast, fast").unwrap();
        assert_eq!(base.scale("p").unwrap().lexemes.len(), 1);
    }

    #[test]
    fn round_trips_through_text() {
        let base = demo();
        let serialized = base.to_text();
        let reloaded = ToposBase::parse(&serialized).unwrap();
        assert_eq!(reloaded.scales(), base.scales());
        assert_eq!(reloaded.topoi(), base.topoi());
        assert_eq!(reloaded.to_text(), serialized);
    }

    #[test]
    fn closure_of_each_declared_form() {
        use Sign::{Minus, Plus};
        let expect = [
            (form(Plus, Plus), [form(Plus, Plus), form(Minus, Minus)]),
            (form(Plus, Minus), [form(Plus, Minus), form(Minus, Plus)]),
            (form(Minus, Plus), [form(Minus, Plus), form(Plus, Minus)]),
            (form(Minus, Minus), [form(Minus, Minus), form(Plus, Plus)]),
        ];
        for (declared, members) in expect {
            let closure = declared.belief_closure();
            assert_eq!(closure, members.into_iter().collect::<BTreeSet<_>>());
        }
    }

    #[test]
    fn derived_forms_come_from_the_declared_rule() {
        use Sign::{Minus, Plus};
        let t2 = demo().topos("t2").unwrap();
        assert_eq!(t2.declared_form(), form(Plus, Minus));
        assert_eq!(
            derive_topical_forms(t2),
            [form(Plus, Minus), form(Minus, Plus)].into_iter().collect::<BTreeSet<_>>()
        );
    }

    #[test]
    fn concludes_in_declared_direction() {
        let got = conclude(demo(), ("weather_beautiful", Sign::Plus));
        assert_eq!(
            got,
            vec![Inference { scale: "outing".into(), sign: Sign::Plus, topos: "t1".into() }]
        );
    }

    #[test]
    fn concludes_in_converse_direction() {
        let got = conclude(demo(), ("work", Sign::Minus));
        assert_eq!(
            got,
            vec![Inference { scale: "outing".into(), sign: Sign::Plus, topos: "t2".into() }]
        );
    }

    #[test]
    fn premise_scale_without_topoi_concludes_nothing() {
        assert!(conclude(demo(), ("outing", Sign::Plus)).is_empty());
        assert!(conclude(demo(), ("missing", Sign::Plus)).is_empty());
    }

    #[test]
    fn repeated_conclusions_keep_the_first_topos() {
        let base = ToposBase::parse(
            "scale p: fast\nscale q: slow\ntopos a: +p -> +q\ntopos b: -p -> -q",
        )
        .unwrap();
        let got = conclude(&base, ("p", Sign::Plus));
        assert_eq!(got, vec![Inference { scale: "q".into(), sign: Sign::Plus, topos: "a".into() }]);
    }

    #[test]
    fn matches_leftmost_lexeme_per_scale() {
        let got = match_clause(&tokens("the weather is not nice today"), demo());
        assert_eq!(got, vec![("weather_beautiful".to_string(), Sign::Plus)]);
    }

    #[test]
    fn negator_within_three_tokens_flips() {
        let got = match_clause(&tokens("it is not nice outside"), demo());
        assert_eq!(got, vec![("weather_beautiful".to_string(), Sign::Minus)]);
    }

    #[test]
    fn negator_beyond_three_tokens_does_not_flip() {
        let got = match_clause(&tokens("no one would say it nice"), demo());
        assert_eq!(got, vec![("weather_beautiful".to_string(), Sign::Plus)]);
    }

    #[test]
    fn double_negation_still_flips_once() {
        let got = match_clause(&tokens("it is not not nice"), demo());
        assert_eq!(got, vec![("weather_beautiful".to_string(), Sign::Minus)]);
    }

    #[test]
    fn contracted_negation_counts() {
        let got = match_clause(&tokens("I can't go"), demo());
        assert_eq!(got, vec![("outing".to_string(), Sign::Minus)]);
    }

    #[test]
    fn stopwords_are_transparent_to_multiword_lexemes() {
        let base = ToposBase::parse("scale g: \"go out\"").unwrap();
        let hit = match_clause(&tokens("go very out"), &base);
        assert_eq!(hit, vec![("g".to_string(), Sign::Plus)]);
        let miss = match_clause(&tokens("go slowly out"), &base);
        assert!(miss.is_empty());
    }

    #[test]
    fn no_stemming_happens() {
        assert!(match_clause(&tokens("the outside is sunny"), demo()).is_empty());
    }

    #[test]
    fn several_scales_match_in_declaration_order() {
        let got = match_clause(&tokens("nice weather, hard work, no outing"), demo());
        assert_eq!(
            got,
            vec![
                ("weather_beautiful".to_string(), Sign::Plus),
                ("work".to_string(), Sign::Plus),
                ("outing".to_string(), Sign::Minus),
            ]
        );
    }

    fn arb_sign() -> impl Strategy<Value = Sign> {
        prop_oneof![Just(Sign::Plus), Just(Sign::Minus)]
    }

    fn arb_topos() -> impl Strategy<Value = Topos> {
        (0usize..6, 0usize..5, arb_sign(), arb_sign()).prop_map(|(p, q_off, ps, qs)| {
            let q = (p + 1 + q_off) % 7;
            Topos {
                id: format!("t_{p}_{q}"),
                antecedent: (format!("s{p}"), ps),
                consequent: (format!("s{q}"), qs),
            }
        })
    }

    proptest! {
        #[test]
        fn closure_has_two_forms_and_is_stable(p in arb_sign(), q in arb_sign()) {
            let declared = form(p, q);
            let closure = declared.belief_closure();
            prop_assert_eq!(closure.len(), 2);
            prop_assert!(closure.contains(&declared));
            prop_assert!(closure.contains(&declared.negated()));
            for member in &closure {
                prop_assert_eq!(member.belief_closure(), closure.clone());
            }
        }

        #[test]
        fn opposite_premises_yield_negated_conclusions(
            topoi in proptest::collection::vec(arb_topos(), 1..8),
            premise_scale in 0usize..7,
            premise_sign in arb_sign(),
        ) {
            let base = ToposBase {
                scales: (0..7)
                    .map(|i| Scale { id: format!("s{i}"), lexemes: vec![vec![format!("w{i}")]] })
                    .collect(),
                topoi: topoi
                    .into_iter()
                    .enumerate()
                    .map(|(i, mut t)| {
                        t.id = format!("t{i}");
                        t
                    })
                    .collect(),
            };
            let scale = format!("s{premise_scale}");
            let straight = conclude(&base, (&scale, premise_sign));
            let flipped = conclude(&base, (&scale, -premise_sign));
            prop_assert_eq!(straight.len(), flipped.len());
            for (a, b) in straight.iter().zip(&flipped) {
                prop_assert_eq!(&a.scale, &b.scale);
                prop_assert_eq!(&a.topos, &b.topos);
                prop_assert_eq!(a.sign, -b.sign);
            }
        }
    }
}
