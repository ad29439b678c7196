use std::io::Write;
use std::path::PathBuf;
use std::sync::OnceLock;

use itn::eval::{evaluate, evaluate_sequential, load_corpus, wer, EvalRecord, WerRatio, SENTENCE};
use itn::Normalizer;
use rand::rngs::StdRng;
use rand::{Rng, SeedableRng};

fn normalizer() -> &'static Normalizer {
    static N: OnceLock<Normalizer> = OnceLock::new();
    N.get_or_init(|| Normalizer::bundled().expect("bundled grammars compile"))
}

fn fixture(name: &str) -> PathBuf {
    PathBuf::from(env!("CARGO_MANIFEST_DIR"))
        .join("fixtures")
        .join(name)
}

/// Edit distance by exhaustive recursion over the three moves.
fn brute_edit_distance(h: &[&str], r: &[&str]) -> usize {
    match (h, r) {
        ([], _) => r.len(),
        (_, []) => h.len(),
        ([h0, hs @ ..], [r0, rs @ ..]) => {
            let sub = brute_edit_distance(hs, rs) + usize::from(h0 != r0);
            let del = brute_edit_distance(h, rs) + 1;
            let ins = brute_edit_distance(hs, r) + 1;
            sub.min(del).min(ins)
        }
    }
}

#[test]
fn wer_matches_brute_force() {
    let mut rng = StdRng::seed_from_u64(0x0e4_0001);
    let vocab = ["a", "b", "c", "d"];
    for _ in 0..1000 {
        let mut sentence = |min: usize| {
            (0..rng.gen_range(min..=6))
                .map(|_| vocab[rng.gen_range(0..vocab.len())])
                .collect::<Vec<_>>()
        };
        let r = sentence(1);
        let h = sentence(0);
        let got = wer(&h.join(" "), &r.join(" ")).unwrap();
        assert_eq!(
            got,
            WerRatio {
                edits: brute_edit_distance(&h, &r),
                reference_words: r.len()
            },
            "{h:?} vs {r:?}"
        );
    }
}

#[test]
fn wer_identity_and_overflow() {
    for s in ["", "a", "a b c", "x y z w"] {
        assert_eq!(wer(s, s).unwrap().edits, 0);
    }
    assert_eq!(100.0 * wer("a b c d e", "a b").unwrap().value(), 150.0);
}

#[test]
fn mini_corpus_is_fully_correct() {
    let corpus = load_corpus(fixture("mini-corpus.tsv")).unwrap();
    assert_eq!(corpus.len(), 200);
    let report = evaluate(&corpus, normalizer());
    for (class, stats) in report.rows() {
        assert_eq!(stats.correct, stats.count, "{class}\n{}", report.to_table());
        assert_eq!(stats.wer.edits, 0, "{class}");
    }
    assert_eq!(report.sentence.count, 200);
    assert_eq!(report.sentence.accuracy(), Some(100.0));
    assert_eq!(report, evaluate_sequential(&corpus, normalizer()));
}

#[test]
fn mixed_fixture_reports_every_class() {
    let corpus = load_corpus(fixture("mixed-classes.tsv")).unwrap();
    let report = evaluate(&corpus, normalizer());
    for class in [
        "PLAIN",
        "CARDINAL",
        "ORDINAL",
        "DECIMAL",
        "MONEY",
        "MEASURE",
        "DATE",
        "WHITELIST",
    ] {
        assert!(report.classes.contains_key(class), "{class} missing");
    }
    let table = report.to_table();
    assert!(table.lines().last().unwrap().starts_with(SENTENCE) || table.contains("* no grammar"));
    assert_eq!(report.to_tsv().lines().count(), report.rows().len());
}

#[test]
fn unknown_unit_counts_as_miss() {
    let mut f = tempfile::NamedTempFile::new().unwrap();
    writeln!(f, "MEASURE\t2 flb\ttwo flibbers\n<eos>\t<eos>").unwrap();
    let corpus = load_corpus(f.path()).unwrap();
    let report = evaluate(&corpus, normalizer());
    let measure = report.classes["MEASURE"];
    assert_eq!((measure.count, measure.correct), (1, 0));
    assert_eq!(report.sentence.accuracy(), Some(0.0));
}

#[test]
fn plain_only_corpus() {
    let sentence: Vec<_> = [
        "the", "cat", "sat", "on", "a", "mat", "with", "my", "red", "hat",
    ]
    .iter()
    .map(|w| EvalRecord {
        semiotic_class: "PLAIN".into(),
        spoken: w.to_string(),
        written: w.to_string(),
    })
    .collect();
    let report = evaluate(&[sentence], normalizer());
    let rows = report.rows();
    assert_eq!(rows.len(), 2);
    assert_eq!(rows[0].0, "PLAIN");
    assert_eq!(rows[0].1.accuracy(), Some(100.0));
    assert_eq!(rows[0].1.wer_percent(), 0.0);
    assert_eq!(rows[1].0, SENTENCE);
}
