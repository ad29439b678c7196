use wfst::{
    byte_class, closure, compose, concat, concat_all, optimize, optional, union, union_all,
    Closure, Fst,
};

use super::DataDir;
use crate::error::Result;
use crate::grammar_kit::{
    add_tokens, delete, delete_extra_space, delete_field, delete_space, delete_tokens, insert,
    insert_field, GrammarClass, GrammarKind,
};

/// Spoken cardinals from "zero" up to 999,999,999,999.
///
/// The graph is layered: a block that reads any number below one thousand as
/// exactly three digits, then one such block (or `000`) per magnitude word
/// (billion, million, thousand, units). The resulting twelve digits are
/// composed with a filter that strips leading zeros and rejects all-zero
/// strings; "zero" is handled on its own.
#[derive(Clone, Debug)]
pub struct Cardinal {
    /// Spoken words to a plain digit string, no grouping separators.
    pub graph: Fst,
}

impl Cardinal {
    pub fn new(data: &DataDir) -> Result<Self> {
        let digit = data.map(DataDir::DIGIT)?;
        let zero = data.map(DataDir::ZERO)?;
        let teen = data.map(DataDir::TEEN)?;
        let ties = data.map(DataDir::TIES)?;
        let ws = delete_extra_space();

        // 01..99 as exactly two digits.
        let two_digits = union_all([
            &teen,
            &concat_all([&ties, &ws, &digit]),
            &concat(&ties, &insert("0")),
            &concat(&insert("0"), &digit),
        ]);

        // 001..999 as exactly three digits. "and" may follow "hundred".
        let hundred = concat_all([&digit, &ws, &delete("hundred")]);
        let and = optional(&concat(&delete("and"), &ws));
        let three_digits = optimize(&union_all([
            &concat_all([&hundred, &ws, &and, &two_digits]),
            &concat(&hundred, &insert("00")),
            &concat(&insert("0"), &two_digits),
        ]));

        let magnitude = |word: &str| {
            union(
                &concat_all([&three_digits, &ws, &delete(word)]),
                &insert("000"),
            )
        };
        let ds = delete_space();
        let padded = optimize(&concat_all([
            &magnitude("billion"),
            &ds,
            &magnitude("million"),
            &ds,
            &magnitude("thousand"),
            &ds,
            &union(&three_digits, &insert("000")),
        ]));

        let strip_leading_zeros = concat_all([
            &closure(&delete("0"), Closure::Star),
            &byte_class(|b| (b'1'..=b'9').contains(&b)),
            &closure(&byte_class(|b| b.is_ascii_digit()), Closure::Star),
        ]);
        let graph = optimize(&union(&compose(&padded, &strip_leading_zeros), &zero));
        Ok(Cardinal { graph })
    }

    /// `cardinal { integer: "<digits>" }`
    pub fn classify(&self) -> Result<GrammarClass> {
        let fst = add_tokens(&insert_field("integer", &self.graph), "cardinal")?;
        GrammarClass::new("cardinal", GrammarKind::Classify, optimize(&fst))
    }
}

pub fn cardinal_verbalize() -> Result<GrammarClass> {
    let fst = delete_tokens(&delete_field("integer"), "cardinal")?;
    GrammarClass::new("cardinal", GrammarKind::Verbalize, optimize(&fst))
}

#[cfg(test)]
mod tests {
    use super::*;
    use wfst::rewrite;

    fn graph() -> Fst {
        Cardinal::new(&DataDir::bundled()).unwrap().graph
    }

    #[test]
    fn spoken_to_digits() {
        let g = graph();
        for (spoken, written) in [
            ("zero", "0"),
            ("seven", "7"),
            ("twenty three", "23"),
            ("one hundred", "100"),
            ("one hundred and twenty three", "123"),
            ("one hundred twenty three", "123"),
            ("nine hundred ninety nine", "999"),
            ("one thousand", "1000"),
            ("two thousand five", "2005"),
            ("thirty million one hundred ninety thousand", "30190000"),
            ("one billion", "1000000000"),
            (
                "nine hundred ninety nine billion nine hundred ninety nine million \
                 nine hundred ninety nine thousand nine hundred ninety nine",
                "999999999999",
            ),
        ] {
            assert_eq!(rewrite(spoken, &g).unwrap(), written, "{spoken}");
        }
    }

    #[test]
    fn rejects_non_cardinals() {
        let g = graph();
        for spoken in [
            "",
            "hello",
            "and",
            "twenty and three",
            "hundred",
            "zero zero",
            "one and",
        ] {
            assert!(rewrite(spoken, &g).is_err(), "{spoken:?} should not parse");
        }
    }

    #[test]
    fn tagged_classify_and_verbalize() {
        let c = Cardinal::new(&DataDir::bundled()).unwrap();
        let tagged = rewrite("twenty three", c.classify().unwrap().fst()).unwrap();
        assert_eq!(tagged, "cardinal { integer: \"23\" }");
        assert_eq!(
            rewrite(&tagged, cardinal_verbalize().unwrap().fst()).unwrap(),
            "23"
        );
    }
}
