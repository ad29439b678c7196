use wfst::{concat_all, optimize, union};

use super::{DataDir, Ordinal};
use crate::error::Result;
use crate::grammar_kit::{
    add_tokens, delete, delete_extra_space, delete_field, delete_space, delete_tokens, insert,
    insert_field, insert_space, GrammarClass, GrammarKind,
};

/// Two spoken patterns, fields kept in spoken order and pinned with
/// `preserve_order: true`:
///
/// - "may third" → `date { month: "may" day: "3" preserve_order: true }`
/// - "the third of may" → `date { day: "3" month: "may" preserve_order: true }`
///
/// Day values are not range-checked.
pub fn date_classify(data: &DataDir, ordinal: &Ordinal) -> Result<GrammarClass> {
    let month = insert_field("month", &data.map(DataDir::MONTHS)?);
    let day = insert_field("day", &ordinal.graph);
    let ws = delete_extra_space();
    let month_day = concat_all([&month, &ws, &insert_space(), &day]);
    let day_of_month = concat_all([
        &delete("the"),
        &ws,
        &day,
        &ws,
        &delete("of"),
        &ws,
        &insert_space(),
        &month,
    ]);
    let body = concat_all([
        &union(&month_day, &day_of_month),
        &insert(" preserve_order: true"),
    ]);
    let fst = add_tokens(&body, "date")?;
    GrammarClass::new("date", GrammarKind::Classify, optimize(&fst))
}

pub fn date_verbalize() -> Result<GrammarClass> {
    let month = delete_field("month");
    let day = delete_field("day");
    let sep = concat_all([&delete_space(), &insert_space()]);
    let body = concat_all([
        &union(
            &concat_all([&month, &sep, &day]),
            &concat_all([&day, &sep, &month]),
        ),
        &delete_space(),
        &delete("preserve_order: true"),
    ]);
    let fst = delete_tokens(&body, "date")?;
    GrammarClass::new("date", GrammarKind::Verbalize, optimize(&fst))
}
