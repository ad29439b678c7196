//! English inverse-normalization grammars.
//!
//! Each semiotic class has a classify grammar (spoken words to tagged
//! fields) and a verbalize grammar (tagged fields to written form). The
//! per-class machines are combined into one utterance-level classifier and
//! one utterance-level verbalizer.
//!
//! Ambiguity between classes is settled by weight: every non-`word` class
//! pays a final weight in `(1, 2]` per token, so covering a span with one
//! token is always cheaper than splitting it into two (`w1 + w2 > 2 >= w`),
//! and the catch-all `word` class costs far more than any semiotic reading.

mod cardinal;
mod date;
mod decimal;
mod measure;
mod money;
mod ordinal;
mod plain;

use std::collections::BTreeMap;
use std::path::{Path, PathBuf};

use wfst::{
    accept, closure, concat, concat_all, insert_str, optimize, optional, read_tsv, string_map,
    union_all, Closure, Fst, TropicalWeight,
};

pub use cardinal::{cardinal_verbalize, Cardinal};
pub use date::{date_classify, date_verbalize};
pub use decimal::{decimal_verbalize, Decimal};
pub use measure::{measure_classify, measure_verbalize};
pub use money::{money_classify, money_verbalize};
pub use ordinal::{ordinal_verbalize, Ordinal};
pub use plain::{plain_verbalize, whitelist_classify, word_classify};

use crate::error::{ItnError, Result};
use crate::grammar_kit::{
    delete, delete_extra_space, delete_space, insert, insert_space, GrammarClass,
};

/// Directory holding the TSV tables the grammars are compiled from.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DataDir {
    root: PathBuf,
}

impl DataDir {
    pub const DIGIT: &'static str = "numbers/digit.tsv";
    pub const ZERO: &'static str = "numbers/zero.tsv";
    pub const TEEN: &'static str = "numbers/teen.tsv";
    pub const TIES: &'static str = "numbers/ties.tsv";
    pub const ORDINAL_EXCEPTIONS: &'static str = "ordinals/suffix-exceptions.tsv";
    pub const UNITS: &'static str = "measure/units.tsv";
    pub const CURRENCY: &'static str = "money/currency.tsv";
    pub const MONTHS: &'static str = "date/months.tsv";
    pub const WHITELIST: &'static str = "whitelist.tsv";

    pub const FILES: [&'static str; 9] = [
        Self::DIGIT,
        Self::ZERO,
        Self::TEEN,
        Self::TIES,
        Self::ORDINAL_EXCEPTIONS,
        Self::UNITS,
        Self::CURRENCY,
        Self::MONTHS,
        Self::WHITELIST,
    ];

    pub fn new(root: impl Into<PathBuf>) -> Self {
        DataDir { root: root.into() }
    }

    /// The tables shipped with this crate.
    pub fn bundled() -> Self {
        DataDir::new(concat!(env!("CARGO_MANIFEST_DIR"), "/data"))
    }

    pub fn root(&self) -> &Path {
        &self.root
    }

    pub fn path(&self, file: &str) -> PathBuf {
        self.root.join(file)
    }

    /// Rows of one table. Written forms may not contain `"`, since they end
    /// up inside quoted field values.
    pub fn rows(&self, file: &str) -> Result<Vec<(String, String)>> {
        let path = self.path(file);
        let rows = read_tsv(&path)?;
        if let Some((spoken, _)) = rows
            .iter()
            .find(|(s, w)| s.contains('"') || w.contains('"'))
        {
            return Err(ItnError::Data {
                path,
                message: format!("entry {spoken:?} contains a double quote"),
            });
        }
        Ok(rows)
    }

    pub fn map(&self, file: &str) -> Result<Fst> {
        Ok(optimize(&string_map(self.rows(file)?)))
    }
}

/// Per-class final weights for the utterance classifier.
#[derive(Clone, Debug, PartialEq)]
pub struct WeightPolicy {
    pub class_weights: BTreeMap<String, f64>,
    pub word_weight: f64,
}

impl Default for WeightPolicy {
    fn default() -> Self {
        let class_weights = [
            ("whitelist", 1.01),
            ("money", 1.04),
            ("measure", 1.05),
            ("date", 1.06),
            ("decimal", 1.08),
            ("ordinal", 1.09),
            ("cardinal", 1.10),
        ]
        .into_iter()
        .map(|(k, v)| (k.to_string(), v))
        .collect();
        WeightPolicy {
            class_weights,
            word_weight: 100.0,
        }
    }
}

impl WeightPolicy {
    /// Checks that every class weight lies in `(1, 2]`, that `whitelist` is
    /// strictly the cheapest class, and that `word` costs more than 2.
    pub fn validate(&self) -> Result<()> {
        for (name, &w) in &self.class_weights {
            if !(w > 1.0 && w <= 2.0) {
                return Err(ItnError::Policy(format!(
                    "weight {w} for class {name:?} is outside (1, 2]"
                )));
            }
        }
        let whitelist = self
            .class_weights
            .get("whitelist")
            .ok_or_else(|| ItnError::Policy("no weight for class \"whitelist\"".into()))?;
        if let Some((name, _)) = self
            .class_weights
            .iter()
            .find(|(n, w)| n.as_str() != "whitelist" && **w <= *whitelist)
        {
            return Err(ItnError::Policy(format!(
                "class {name:?} is not strictly more expensive than whitelist"
            )));
        }
        if self.word_weight.partial_cmp(&2.0) != Some(std::cmp::Ordering::Greater) {
            return Err(ItnError::Policy(format!(
                "word weight {} must exceed 2",
                self.word_weight
            )));
        }
        Ok(())
    }

    pub fn weight(&self, class: &str) -> Result<f64> {
        if class == "word" {
            return Ok(self.word_weight);
        }
        self.class_weights
            .get(class)
            .copied()
            .ok_or_else(|| ItnError::Policy(format!("no weight for class {class:?}")))
    }
}

/// All English class grammars plus the two utterance-level machines.
#[derive(Clone, Debug)]
pub struct EnglishGrammars {
    pub classify: Vec<GrammarClass>,
    pub verbalize: Vec<GrammarClass>,
}

impl EnglishGrammars {
    pub fn build(data: &DataDir) -> Result<Self> {
        let cardinal = Cardinal::new(data)?;
        let ordinal = Ordinal::new(data, &cardinal)?;
        let decimal = Decimal::new(data, &cardinal)?;
        let classify = vec![
            whitelist_classify(data)?,
            money_classify(data, &cardinal, &decimal)?,
            measure_classify(data, &cardinal, &decimal)?,
            date_classify(data, &ordinal)?,
            decimal.classify()?,
            ordinal.classify()?,
            cardinal.classify()?,
            word_classify()?,
        ];
        let verbalize = vec![
            plain_verbalize()?,
            money_verbalize()?,
            measure_verbalize()?,
            date_verbalize()?,
            decimal_verbalize()?,
            ordinal_verbalize()?,
            cardinal_verbalize()?,
        ];
        Ok(EnglishGrammars {
            classify,
            verbalize,
        })
    }

    pub fn classify_class(&self, name: &str) -> Option<&GrammarClass> {
        self.classify.iter().find(|g| g.name() == name)
    }

    pub fn verbalize_class(&self, name: &str) -> Option<&GrammarClass> {
        self.verbalize.iter().find(|g| g.name() == name)
    }

    pub fn classify_final(&self, policy: &WeightPolicy) -> Result<Fst> {
        classify_final(&self.classify, policy)
    }

    pub fn verbalize_final(&self) -> Fst {
        verbalize_final(&self.verbalize)
    }
}

/// The utterance classifier: a space-separated sequence of tokens, each one
/// of the classify grammars wrapped as `tokens { ... }` and charged its
/// class weight. Input separators (one or more spaces) become exactly one
/// output space.
pub fn classify_final(classes: &[GrammarClass], policy: &WeightPolicy) -> Result<Fst> {
    policy.validate()?;
    let mut wrapped = Vec::with_capacity(classes.len());
    for class in classes {
        let weight = TropicalWeight::new(policy.weight(class.name())?);
        wrapped.push(concat_all([
            &insert("tokens { "),
            class.fst(),
            &insert_str(" }", weight),
        ]));
    }
    let token = optimize(&union_all(&wrapped));
    let more = closure(
        &concat_all([&delete_extra_space(), &insert_space(), &token]),
        Closure::Star,
    );
    let sentence = concat(&token, &more);
    Ok(optimize(&concat_all([
        &delete_space(),
        &optional(&sentence),
        &delete_space(),
    ])))
}

/// The utterance verbalizer: `tokens { ... }` blocks separated by single
/// spaces, each rendered by one of the verbalize grammars.
pub fn verbalize_final(classes: &[GrammarClass]) -> Fst {
    let body = union_all(classes.iter().map(GrammarClass::fst));
    let token = optimize(&concat_all([&delete("tokens { "), &body, &delete(" }")]));
    let more = closure(&concat(&accept(" "), &token), Closure::Star);
    optimize(&optional(&concat(&token, &more)))
}
