use wfst::{optimize, union};

use super::DataDir;
use crate::error::Result;
use crate::grammar_kit::{
    add_tokens, delete_field, delete_tokens, insert_field, not_space_plus, GrammarClass,
    GrammarKind,
};

/// Exact phrases from the whitelist table: `whitelist { name: "Mrs." }`.
pub fn whitelist_classify(data: &DataDir) -> Result<GrammarClass> {
    let table = data.map(DataDir::WHITELIST)?;
    let fst = add_tokens(&insert_field("name", &table), "whitelist")?;
    GrammarClass::new("whitelist", GrammarKind::Classify, optimize(&fst))
}

/// Catch-all: any single word, copied as `word { name: "<word>" }`.
pub fn word_classify() -> Result<GrammarClass> {
    let fst = add_tokens(&insert_field("name", &not_space_plus()), "word")?;
    GrammarClass::new("word", GrammarKind::Classify, optimize(&fst))
}

/// Unwraps both `word` and `whitelist` tokens to their bare `name`.
pub fn plain_verbalize() -> Result<GrammarClass> {
    let name = delete_field("name");
    let fst = union(
        &delete_tokens(&name, "word")?,
        &delete_tokens(&name, "whitelist")?,
    );
    GrammarClass::new("plain", GrammarKind::Verbalize, optimize(&fst))
}

#[cfg(test)]
mod tests {
    use super::*;
    use wfst::rewrite;

    #[test]
    fn word_and_whitelist() {
        let word = word_classify().unwrap();
        let v = plain_verbalize().unwrap();
        let tagged = rewrite("hello", word.fst()).unwrap();
        assert_eq!(tagged, "word { name: \"hello\" }");
        assert_eq!(rewrite(&tagged, v.fst()).unwrap(), "hello");
        assert!(rewrite("two words", word.fst()).is_err());

        let wl = whitelist_classify(&DataDir::bundled()).unwrap();
        let tagged = rewrite("misses", wl.fst()).unwrap();
        assert_eq!(tagged, "whitelist { name: \"Mrs.\" }");
        assert_eq!(rewrite(&tagged, v.fst()).unwrap(), "Mrs.");
        assert_eq!(
            rewrite("et cetera", wl.fst()).unwrap(),
            "whitelist { name: \"etc.\" }"
        );
    }
}
