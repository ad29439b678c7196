//! English inverse text normalization: spoken-form text such as
//! "one hundred and twenty three dollars" to written form "$123".
//!
//! A [`Normalizer`] holds two compiled transducers. The classifier tags
//! spans of the input with a semiotic class and its fields; the verbalizer
//! renders tagged fields back to text. Between the two, fields are reordered
//! until the verbalizer accepts them.
//!
//! ```no_run
//! let itn = itn::Normalizer::bundled()?;
//! assert_eq!(itn.inverse_normalize("three dollars")?, "$3");
//! # Ok::<(), itn::ItnError>(())
//! ```

pub mod error;
pub mod eval;
pub mod grammar_kit;
pub mod grammars;
pub mod pipeline;
pub mod reorder;
pub mod token;

pub use error::{ItnError, Result};
pub use eval::{evaluate, load_corpus, wer, EvalRecord, EvalReport, WerRatio};
pub use grammar_kit::{GrammarClass, GrammarKind};
pub use grammars::{DataDir, EnglishGrammars, WeightPolicy};
pub use pipeline::{Normalized, Normalizer};
pub use reorder::{generate_reorderings, MAX_REORDERINGS};
pub use token::{parse, serialize, Field, FieldValue, Token};
