use wfst::{concat_all, optimize, optional, union, Fst};

use super::decimal::{fractional_part, integer_part};
use super::{Cardinal, DataDir, Decimal};
use crate::error::Result;
use crate::grammar_kit::{
    add_tokens, delete_extra_space, delete_field, delete_space, delete_tokens, insert_field,
    insert_space, GrammarClass, GrammarKind,
};

/// Amount then currency, in spoken order:
/// `money { integer_part: "3" currency: "$" }`. Decimal amounts add a
/// `fractional_part` field.
pub fn money_classify(
    data: &DataDir,
    cardinal: &Cardinal,
    decimal: &Decimal,
) -> Result<GrammarClass> {
    let currency = data.map(DataDir::CURRENCY)?;
    let amount = union(
        &insert_field("integer_part", &cardinal.graph),
        &decimal.body,
    );
    let body = concat_all([
        &amount,
        &delete_extra_space(),
        &insert_space(),
        &insert_field("currency", &currency),
    ]);
    let fst = add_tokens(&body, "money")?;
    GrammarClass::new("money", GrammarKind::Classify, optimize(&fst))
}

/// Accepts only the written order, currency first: the pipeline's field
/// reordering turns the spoken order into this one.
pub fn money_verbalize() -> Result<GrammarClass> {
    let amount = concat_all([
        &integer_part(),
        &optional(&concat_all([&delete_space(), &fractional_part()])),
    ]);
    let body: Fst = concat_all([&delete_field("currency"), &delete_space(), &amount]);
    let fst = delete_tokens(&body, "money")?;
    GrammarClass::new("money", GrammarKind::Verbalize, optimize(&fst))
}
