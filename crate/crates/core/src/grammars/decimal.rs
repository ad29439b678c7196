use wfst::{closure, concat, concat_all, cross, optimize, union_all, Closure, Fst};

use super::{Cardinal, DataDir};
use crate::error::Result;
use crate::grammar_kit::{
    add_tokens, delete, delete_extra_space, delete_space, delete_tokens, insert, insert_field,
    insert_space, not_quote_plus, GrammarClass, GrammarKind,
};

#[derive(Clone, Debug)]
pub struct Decimal {
    /// Untagged field body: `integer_part: "2" fractional_part: "05"`.
    /// Reused by money and measure.
    pub body: Fst,
}

impl Decimal {
    pub fn new(data: &DataDir, cardinal: &Cardinal) -> Result<Self> {
        let fractional = union_all([
            &data.map(DataDir::DIGIT)?,
            &data.map(DataDir::ZERO)?,
            &cross("o", "0", 0.0),
            &cross("oh", "0", 0.0),
        ]);
        let fractional = concat(
            &closure(&concat(&fractional, &delete_space()), Closure::Star),
            &fractional,
        );
        let delete_point = concat(&delete_space(), &delete("point"));
        let tagged_fractional = concat(
            &insert_space(),
            &insert_field("fractional_part", &fractional),
        );
        let tagged_integer = insert_field("integer_part", &cardinal.graph);
        let body = concat_all([
            &tagged_integer,
            &delete_point,
            &delete_extra_space(),
            &tagged_fractional,
        ]);
        Ok(Decimal {
            body: optimize(&body),
        })
    }

    /// `decimal { integer_part: "..." fractional_part: "..." }`
    pub fn classify(&self) -> Result<GrammarClass> {
        let fst = add_tokens(&self.body, "decimal")?;
        GrammarClass::new("decimal", GrammarKind::Classify, optimize(&fst))
    }
}

pub(super) fn integer_part() -> Fst {
    concat_all([
        &delete("integer_part:"),
        &delete_space(),
        &delete("\""),
        &not_quote_plus(),
        &delete("\""),
    ])
}

pub(super) fn fractional_part() -> Fst {
    concat_all([
        &insert("."),
        &delete("fractional_part:"),
        &delete_space(),
        &delete("\""),
        &not_quote_plus(),
        &delete("\""),
    ])
}

/// `integer_part: "2" fractional_part: "05"` → `2.05`
pub(super) fn verbalize_body() -> Fst {
    concat_all([&integer_part(), &delete_space(), &fractional_part()])
}

pub fn decimal_verbalize() -> Result<GrammarClass> {
    let fst = delete_tokens(&verbalize_body(), "decimal")?;
    GrammarClass::new("decimal", GrammarKind::Verbalize, optimize(&fst))
}
