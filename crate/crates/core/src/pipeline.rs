//! The inverse-normalization pipeline: classify, parse, reorder, verbalize.

use std::path::Path;

use log::debug;
use wfst::{load_archive, save_archive, Archive, Fst, Rewriter};

use crate::error::{ItnError, Result};
use crate::grammars::{DataDir, EnglishGrammars, WeightPolicy};
use crate::reorder::generate_reorderings;
use crate::token::{parse, Token};

/// Archive entry names for the two utterance-level machines.
pub const CLASSIFY: &str = "classify";
pub const VERBALIZE: &str = "verbalize";

/// Compiled classifier and verbalizer. Immutable once built, so one value can
/// be shared across threads.
#[derive(Clone, Debug)]
pub struct Normalizer {
    classify: Rewriter,
    verbalize: Rewriter,
}

/// The result of [`Normalizer::inverse_normalize_verbose`].
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Normalized {
    /// Classifier output.
    pub tagged: String,
    /// The serialization that verbalized.
    pub serialization: String,
    pub written: String,
}

impl Normalizer {
    pub fn new(classify: Fst, verbalize: Fst) -> Self {
        Normalizer {
            classify: Rewriter::new(classify),
            verbalize: Rewriter::new(verbalize),
        }
    }

    /// Compiles the English grammars from the tables in `data`.
    pub fn from_data_dir(data: &DataDir, policy: &WeightPolicy) -> Result<Self> {
        let grammars = EnglishGrammars::build(data)?;
        Ok(Normalizer::new(
            grammars.classify_final(policy)?,
            grammars.verbalize_final(),
        ))
    }

    /// Compiles the bundled tables with the default weight policy.
    pub fn bundled() -> Result<Self> {
        Normalizer::from_data_dir(&DataDir::bundled(), &WeightPolicy::default())
    }

    pub fn from_archive(archive: &Archive) -> Result<Self> {
        let get = |name: &str| {
            archive
                .get(name)
                .cloned()
                .ok_or_else(|| ItnError::MissingGrammar(name.to_string()))
        };
        Ok(Normalizer::new(get(CLASSIFY)?, get(VERBALIZE)?))
    }

    pub fn load_archive(path: impl AsRef<Path>) -> Result<Self> {
        Normalizer::from_archive(&load_archive(path)?)
    }

    pub fn to_archive(&self) -> Archive {
        Archive::from([
            (CLASSIFY.to_string(), self.classify.grammar().clone()),
            (VERBALIZE.to_string(), self.verbalize.grammar().clone()),
        ])
    }

    pub fn save_archive(&self, path: impl AsRef<Path>) -> Result<()> {
        Ok(save_archive(&self.to_archive(), path)?)
    }

    pub fn classify_fst(&self) -> &Fst {
        self.classify.grammar()
    }

    pub fn verbalize_fst(&self) -> &Fst {
        self.verbalize.grammar()
    }

    /// Tags `text` as a sequence of `tokens { ... }` blocks.
    pub fn classify(&self, text: &str) -> Result<String> {
        if text.contains('\0') {
            return Err(ItnError::InvalidInput("input contains a NUL byte".into()));
        }
        if text.is_empty() {
            return Ok(String::new());
        }
        Ok(self.classify.rewrite(text)?)
    }

    pub fn parse(&self, tagged: &str) -> Result<Vec<Token>> {
        parse(tagged)
    }

    /// Renders one serialization. Fails with a no-path error when the
    /// verbalizer does not accept this field order.
    pub fn verbalize(&self, serialization: &str) -> Result<String> {
        if serialization.is_empty() {
            return Ok(String::new());
        }
        Ok(self.verbalize.rewrite(serialization)?)
    }

    pub fn inverse_normalize(&self, text: &str) -> Result<String> {
        self.inverse_normalize_verbose(text).map(|n| n.written)
    }

    /// Like [`Self::inverse_normalize`], also returning the intermediate
    /// tagged form.
    pub fn inverse_normalize_verbose(&self, text: &str) -> Result<Normalized> {
        let tagged = self.classify(text)?;
        let tokens = parse(&tagged)?;
        let mut tried = 0;
        for serialization in generate_reorderings(&tokens) {
            tried += 1;
            match self.verbalize(&serialization) {
                Ok(written) => {
                    return Ok(Normalized {
                        tagged,
                        serialization,
                        written,
                    })
                }
                Err(ItnError::Fst(wfst::FstError::NoPath)) => {
                    debug!("verbalizer rejected {serialization:?}");
                }
                Err(e) => return Err(e),
            }
        }
        Err(ItnError::NoVerbalization { tagged, tried })
    }

    /// Normalizes every line independently, preserving order.
    pub fn normalize_batch<S: AsRef<str> + Sync>(&self, lines: &[S]) -> Vec<Result<String>> {
        #[cfg(feature = "parallel")]
        {
            use rayon::prelude::*;
            lines
                .par_iter()
                .map(|l| self.inverse_normalize(l.as_ref()))
                .collect()
        }
        #[cfg(not(feature = "parallel"))]
        {
            self.normalize_batch_sequential(lines)
        }
    }

    pub fn normalize_batch_sequential<S: AsRef<str>>(&self, lines: &[S]) -> Vec<Result<String>> {
        lines
            .iter()
            .map(|l| self.inverse_normalize(l.as_ref()))
            .collect()
    }
}
