use wfst::{
    accept, byte_class, closure, compose, concat, concat_all, cross, optimize, optional, union_all,
    Closure, Fst,
};

use super::{Cardinal, DataDir};
use crate::error::Result;
use crate::grammar_kit::{
    add_tokens, delete, delete_space, delete_tokens, insert, insert_field, not_space_plus,
    GrammarClass, GrammarKind,
};

/// Spoken ordinals, read by rewriting the last word to its cardinal form
/// ("first" → "one", "twentieth" → "twenty", "sixth" → "six") and running
/// the result through the cardinal graph.
#[derive(Clone, Debug)]
pub struct Ordinal {
    /// Spoken ordinal to bare digits.
    pub graph: Fst,
}

impl Ordinal {
    pub fn new(data: &DataDir, cardinal: &Cardinal) -> Result<Self> {
        let exceptions = data.map(DataDir::ORDINAL_EXCEPTIONS)?;
        let word = not_space_plus();
        let leading_words = closure(
            &concat(&word, &closure(&accept(" "), Closure::Plus)),
            Closure::Star,
        );
        let last_word = union_all([
            &exceptions,
            &concat(&word, &cross("ieth", "y", 0.0)),
            &concat(&word, &delete("th")),
        ]);
        let to_cardinal = concat(&leading_words, &last_word);
        let graph = optimize(&compose(&to_cardinal, &cardinal.graph));
        Ok(Ordinal { graph })
    }

    /// `ordinal { integer: "<digits>" }`
    pub fn classify(&self) -> Result<GrammarClass> {
        let fst = add_tokens(&insert_field("integer", &self.graph), "ordinal")?;
        GrammarClass::new("ordinal", GrammarKind::Classify, optimize(&fst))
    }
}

/// Digits followed by the English ordinal suffix chosen by the final digits:
/// 1 → st, 2 → nd, 3 → rd, anything else (including 11, 12, 13) → th.
fn suffixed_digits() -> Fst {
    let digit = || byte_class(|b| b.is_ascii_digit());
    let digits = closure(&digit(), Closure::Star);
    let not_teen_prefix = optional(&concat(
        &digits,
        &byte_class(|b| b.is_ascii_digit() && b != b'1'),
    ));
    let ending =
        |last: &str, suffix: &str| concat_all([&not_teen_prefix, &accept(last), &insert(suffix)]);
    union_all([
        &ending("1", "st"),
        &ending("2", "nd"),
        &ending("3", "rd"),
        &concat_all([
            &digits,
            &byte_class(|b| matches!(b, b'0' | b'4'..=b'9')),
            &insert("th"),
        ]),
        &concat_all([
            &digits,
            &accept("1"),
            &byte_class(|b| matches!(b, b'1'..=b'3')),
            &insert("th"),
        ]),
    ])
}

pub fn ordinal_verbalize() -> Result<GrammarClass> {
    let body = concat_all([
        &delete("integer:"),
        &delete_space(),
        &delete("\""),
        &suffixed_digits(),
        &delete("\""),
    ]);
    let fst = delete_tokens(&body, "ordinal")?;
    GrammarClass::new("ordinal", GrammarKind::Verbalize, optimize(&fst))
}
