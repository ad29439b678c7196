//! Corpus evaluation: per-class exact-match accuracy and word error rate.
//!
//! Corpus files follow the Google text-normalization release layout, one
//! token per line:
//!
//! ```text
//! CLASS<TAB>written<TAB>spoken
//! <eos><TAB><eos>
//! ```
//!
//! `<eos>` ends a sentence, `<self>` in the spoken column means the spoken
//! form equals the written one, and rows whose spoken form is `sil`
//! (punctuation) are skipped. A row whose written and spoken forms agree is
//! relabeled `PLAIN`.

use std::collections::BTreeMap;
use std::fmt::Write as _;
use std::fs::File;
use std::io::{BufRead, BufReader};
use std::path::Path;

use log::warn;

use crate::error::{ItnError, Result};
use crate::pipeline::Normalizer;

/// Classes the English grammars cover. Others are reported but flagged.
pub const COVERED_CLASSES: [&str; 8] = [
    "PLAIN",
    "WHITELIST",
    "CARDINAL",
    "ORDINAL",
    "DECIMAL",
    "MONEY",
    "MEASURE",
    "DATE",
];

pub const SENTENCE: &str = "SENTENCE";

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct EvalRecord {
    pub semiotic_class: String,
    /// Pipeline input.
    pub spoken: String,
    /// Reference output.
    pub written: String,
}

/// Reads a corpus into sentence groups.
pub fn load_corpus(path: impl AsRef<Path>) -> Result<Vec<Vec<EvalRecord>>> {
    let path = path.as_ref();
    let io_err = |source| ItnError::Io {
        path: path.to_path_buf(),
        source,
    };
    let reader = BufReader::new(File::open(path).map_err(io_err)?);
    let mut sentences = Vec::new();
    let mut current = Vec::new();
    for (i, line) in reader.lines().enumerate() {
        let line = line.map_err(io_err)?;
        let line_no = i + 1;
        let malformed = |message: String| ItnError::Corpus {
            path: path.to_path_buf(),
            line: line_no,
            message,
        };
        if line.is_empty() {
            continue;
        }
        let cols: Vec<&str> = line.split('\t').collect();
        if cols == ["<eos>", "<eos>"] {
            if !current.is_empty() {
                sentences.push(std::mem::take(&mut current));
            }
            continue;
        }
        let [class, written, spoken] = cols[..] else {
            return Err(malformed(format!(
                "expected 3 tab-separated columns, found {}",
                cols.len()
            )));
        };
        if class.is_empty() || !class.bytes().all(|b| b.is_ascii_uppercase() || b == b'_') {
            return Err(malformed(format!(
                "class {class:?} is not an uppercase name"
            )));
        }
        if written.is_empty() || spoken.is_empty() {
            return Err(malformed("empty written or spoken column".into()));
        }
        if spoken == "sil" {
            continue;
        }
        let spoken = if spoken == "<self>" { written } else { spoken };
        let semiotic_class = if spoken == written { "PLAIN" } else { class };
        current.push(EvalRecord {
            semiotic_class: semiotic_class.to_string(),
            spoken: spoken.to_string(),
            written: written.to_string(),
        });
    }
    if !current.is_empty() {
        sentences.push(current);
    }
    Ok(sentences)
}

/// Word-level edit distance over the reference length, kept as integers so
/// ratios can be compared and summed exactly.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub struct WerRatio {
    pub edits: usize,
    pub reference_words: usize,
}

impl WerRatio {
    /// The ratio as a fraction (1.0 = 100%). Zero when both sides are empty.
    pub fn value(&self) -> f64 {
        if self.reference_words == 0 {
            0.0
        } else {
            self.edits as f64 / self.reference_words as f64
        }
    }
}

fn words(s: &str) -> Vec<&str> {
    if s.is_empty() {
        Vec::new()
    } else {
        s.split(' ').collect()
    }
}

/// Word error rate of `hypothesis` against `reference`, both split on
/// single spaces. Substitutions, insertions and deletions cost one each.
pub fn wer(hypothesis: &str, reference: &str) -> Result<WerRatio> {
    let hyp = words(hypothesis);
    let reference = words(reference);
    if reference.is_empty() && !hyp.is_empty() {
        return Err(ItnError::EmptyReference);
    }
    // Single-row Levenshtein over words.
    let mut row: Vec<usize> = (0..=hyp.len()).collect();
    for r in &reference {
        let mut diag = row[0];
        row[0] += 1;
        for (j, h) in hyp.iter().enumerate() {
            let sub = diag + usize::from(r != h);
            diag = row[j + 1];
            row[j + 1] = sub.min(row[j] + 1).min(row[j + 1] + 1);
        }
    }
    Ok(WerRatio {
        edits: row[hyp.len()],
        reference_words: reference.len(),
    })
}

/// Counts for one report row.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub struct ClassStats {
    pub count: usize,
    pub correct: usize,
    pub wer: WerRatio,
}

impl ClassStats {
    fn add(&mut self, hypothesis: &str, reference: &str) {
        self.count += 1;
        if hypothesis == reference {
            self.correct += 1;
        }
        // A reference is never empty here: corpus rows reject empty columns.
        if let Ok(r) = wer(hypothesis, reference) {
            self.wer.edits += r.edits;
            self.wer.reference_words += r.reference_words;
        }
    }

    fn merge(&mut self, other: &ClassStats) {
        self.count += other.count;
        self.correct += other.correct;
        self.wer.edits += other.wer.edits;
        self.wer.reference_words += other.wer.reference_words;
    }

    /// Exact-match accuracy in percent, or `None` for an empty row.
    pub fn accuracy(&self) -> Option<f64> {
        (self.count > 0).then(|| 100.0 * self.correct as f64 / self.count as f64)
    }

    /// Word error rate in percent. May exceed 100.
    pub fn wer_percent(&self) -> f64 {
        100.0 * self.wer.value()
    }
}

#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct EvalReport {
    pub classes: BTreeMap<String, ClassStats>,
    pub sentence: ClassStats,
}

impl EvalReport {
    pub fn is_empty(&self) -> bool {
        self.sentence.count == 0
    }

    pub fn is_covered(class: &str) -> bool {
        COVERED_CLASSES.contains(&class)
    }

    fn merge(mut self, other: EvalReport) -> EvalReport {
        for (class, stats) in &other.classes {
            self.classes.entry(class.clone()).or_default().merge(stats);
        }
        self.sentence.merge(&other.sentence);
        self
    }

    /// Rows in report order: classes alphabetically, then `SENTENCE`.
    pub fn rows(&self) -> Vec<(&str, &ClassStats)> {
        let mut rows: Vec<_> = self.classes.iter().map(|(c, s)| (c.as_str(), s)).collect();
        if !self.is_empty() {
            rows.push((SENTENCE, &self.sentence));
        }
        rows
    }

    /// Aligned plain-text table. Classes without grammar coverage carry a
    /// `*` and a footnote.
    pub fn to_table(&self) -> String {
        let mut out = String::new();
        let _ = writeln!(
            out,
            "{:<12} {:>8} {:>11} {:>8}",
            "class", "tokens", "accuracy %", "WER %"
        );
        let mut uncovered = false;
        for (class, stats) in self.rows() {
            let flagged = class != SENTENCE && !Self::is_covered(class);
            uncovered |= flagged;
            let name = if flagged {
                format!("{class}*")
            } else {
                class.to_string()
            };
            let accuracy = stats
                .accuracy()
                .map_or("-".to_string(), |a| format!("{a:.2}"));
            let _ = writeln!(
                out,
                "{:<12} {:>8} {:>11} {:>8.1}",
                name,
                stats.count,
                accuracy,
                stats.wer_percent()
            );
        }
        if uncovered {
            out.push_str("* no grammar for this class\n");
        }
        out
    }

    /// One `class<TAB>count<TAB>accuracy<TAB>wer` line per row.
    pub fn to_tsv(&self) -> String {
        let mut out = String::new();
        for (class, stats) in self.rows() {
            let _ = writeln!(
                out,
                "{class}\t{}\t{:.2}\t{:.2}",
                stats.count,
                stats.accuracy().unwrap_or(0.0),
                stats.wer_percent()
            );
        }
        out
    }
}

fn evaluate_sentence(sentence: &[EvalRecord], normalizer: &Normalizer) -> EvalReport {
    let mut report = EvalReport::default();
    let mut hypotheses = Vec::with_capacity(sentence.len());
    let mut references = Vec::with_capacity(sentence.len());
    for record in sentence {
        let hypothesis = match normalizer.inverse_normalize(&record.spoken) {
            Ok(h) => h,
            Err(e) => {
                warn!("{:?} ({}): {e}", record.spoken, record.semiotic_class);
                record.spoken.clone()
            }
        };
        report
            .classes
            .entry(record.semiotic_class.clone())
            .or_default()
            .add(&hypothesis, &record.written);
        hypotheses.push(hypothesis);
        references.push(record.written.as_str());
    }
    report
        .sentence
        .add(&hypotheses.join(" "), &references.join(" "));
    report
}

/// Runs the pipeline on every token and aggregates accuracy and WER per
/// class and per sentence. A token the pipeline cannot handle is logged and
/// its spoken form used as the hypothesis.
pub fn evaluate(corpus: &[Vec<EvalRecord>], normalizer: &Normalizer) -> EvalReport {
    #[cfg(feature = "parallel")]
    {
        use rayon::prelude::*;
        corpus
            .par_iter()
            .map(|s| evaluate_sentence(s, normalizer))
            .reduce(EvalReport::default, EvalReport::merge)
    }
    #[cfg(not(feature = "parallel"))]
    {
        evaluate_sequential(corpus, normalizer)
    }
}

pub fn evaluate_sequential(corpus: &[Vec<EvalRecord>], normalizer: &Normalizer) -> EvalReport {
    corpus
        .iter()
        .map(|s| evaluate_sentence(s, normalizer))
        .fold(EvalReport::default(), EvalReport::merge)
}
