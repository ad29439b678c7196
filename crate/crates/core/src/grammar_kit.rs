//! Building blocks shared by every classify/verbalize grammar.
//!
//! A classify grammar emits its class's fields wrapped as
//! `name { key: "value" ... }`; the matching verbalize grammar consumes
//! exactly that wrapper and emits the written form. Serialization spacing is
//! fixed: one space after `{`, before `}`, and between fields.

use std::fmt;

use wfst::{byte_class, closure, concat_all, delete_str, insert_str, Closure, Fst, TropicalWeight};

use crate::error::{ItnError, Result};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum GrammarKind {
    Classify,
    Verbalize,
}

impl fmt::Display for GrammarKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            GrammarKind::Classify => "classify",
            GrammarKind::Verbalize => "verbalize",
        })
    }
}

/// A named classify- or verbalize-kind transducer for one semiotic class.
#[derive(Clone, Debug)]
pub struct GrammarClass {
    name: String,
    kind: GrammarKind,
    fst: Fst,
}

impl GrammarClass {
    pub fn new(name: &str, kind: GrammarKind, fst: Fst) -> Result<Self> {
        validate_name(name)?;
        Ok(GrammarClass {
            name: name.to_string(),
            kind,
            fst,
        })
    }

    pub fn name(&self) -> &str {
        &self.name
    }

    pub fn kind(&self) -> GrammarKind {
        self.kind
    }

    pub fn fst(&self) -> &Fst {
        &self.fst
    }

    pub fn into_fst(self) -> Fst {
        self.fst
    }
}

/// Class and field names: nonempty, lowercase ASCII letters, digits and `_`,
/// starting with a letter.
pub fn validate_name(name: &str) -> Result<()> {
    let mut bytes = name.bytes();
    let ok = matches!(bytes.next(), Some(b'a'..=b'z'))
        && bytes.all(|b| matches!(b, b'a'..=b'z' | b'0'..=b'9' | b'_'));
    if ok {
        Ok(())
    } else {
        Err(ItnError::InvalidClassName(name.to_string()))
    }
}

pub(crate) fn insert(s: &str) -> Fst {
    insert_str(s, TropicalWeight::ONE)
}

pub(crate) fn delete(s: &str) -> Fst {
    delete_str(s, TropicalWeight::ONE)
}

/// Zero or more spaces, deleted.
pub fn delete_space() -> Fst {
    closure(&delete(" "), Closure::Star)
}

/// One or more spaces, deleted. Grammars re-insert whatever output
/// separator they need.
pub fn delete_extra_space() -> Fst {
    closure(&delete(" "), Closure::Plus)
}

pub fn insert_space() -> Fst {
    insert(" ")
}

/// One or more bytes other than `"`, copied.
pub fn not_quote_plus() -> Fst {
    closure(&byte_class(|b| b != b'"'), Closure::Plus)
}

/// One or more bytes other than space and `"`, copied: a single spoken word.
pub fn not_space_plus() -> Fst {
    closure(&byte_class(|b| b != b' ' && b != b'"'), Closure::Plus)
}

/// `key: "` · value · `"`
pub fn insert_field(key: &str, value: &Fst) -> Fst {
    concat_all([&insert(&format!("{key}: \"")), value, &insert("\"")])
}

/// Consumes `key: "<value>"` and emits the bare value.
pub fn delete_field(key: &str) -> Fst {
    concat_all([
        &delete(&format!("{key}:")),
        &delete_space(),
        &delete("\""),
        &not_quote_plus(),
        &delete("\""),
    ])
}

/// Wraps a classify body as `name { body }`.
pub fn add_tokens(body: &Fst, name: &str) -> Result<Fst> {
    validate_name(name)?;
    Ok(concat_all([
        &insert(&format!("{name} {{ ")),
        body,
        &insert(" }"),
    ]))
}

/// Consumes the `name { ... }` wrapper around a verbalize body.
pub fn delete_tokens(body: &Fst, name: &str) -> Result<Fst> {
    validate_name(name)?;
    Ok(concat_all([
        &delete(&format!("{name} {{ ")),
        body,
        &delete(" }"),
    ]))
}
