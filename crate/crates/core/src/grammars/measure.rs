use wfst::{concat_all, optimize, union};

use super::decimal::verbalize_body as decimal_body;
use super::{Cardinal, DataDir, Decimal};
use crate::error::Result;
use crate::grammar_kit::{
    add_tokens, delete, delete_extra_space, delete_field, delete_space, delete_tokens, insert,
    insert_field, insert_space, GrammarClass, GrammarKind,
};

/// A number followed by a unit from the units table:
/// `measure { cardinal { integer: "2" } units: "v" }`. Units missing from
/// the table do not parse.
pub fn measure_classify(
    data: &DataDir,
    cardinal: &Cardinal,
    decimal: &Decimal,
) -> Result<GrammarClass> {
    let units = data.map(DataDir::UNITS)?;
    let number = union(
        &concat_all([
            &insert("cardinal { "),
            &insert_field("integer", &cardinal.graph),
            &insert(" }"),
        ]),
        &concat_all([&insert("decimal { "), &decimal.body, &insert(" }")]),
    );
    let body = concat_all([
        &number,
        &delete_extra_space(),
        &insert_space(),
        &insert_field("units", &units),
    ]);
    let fst = add_tokens(&body, "measure")?;
    GrammarClass::new("measure", GrammarKind::Classify, optimize(&fst))
}

/// `<number> <unit>`, separated by one space.
pub fn measure_verbalize() -> Result<GrammarClass> {
    let number = union(
        &concat_all([
            &delete("cardinal { "),
            &delete_field("integer"),
            &delete(" }"),
        ]),
        &concat_all([&delete("decimal { "), &decimal_body(), &delete(" }")]),
    );
    let body = concat_all([
        &number,
        &delete_space(),
        &insert_space(),
        &delete_field("units"),
    ]);
    let fst = delete_tokens(&body, "measure")?;
    GrammarClass::new("measure", GrammarKind::Verbalize, optimize(&fst))
}
