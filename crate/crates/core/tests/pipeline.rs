use std::sync::OnceLock;
use std::time::Instant;

use itn::{parse, serialize, ItnError, Normalizer};

fn normalizer() -> &'static Normalizer {
    static N: OnceLock<Normalizer> = OnceLock::new();
    N.get_or_init(|| Normalizer::bundled().expect("bundled grammars compile"))
}

#[test]
fn examples() {
    let n = normalizer();
    let start = Instant::now();
    for (spoken, written) in [
        ("twenty three", "23"),
        ("two point o five", "2.05"),
        ("three dollars", "$3"),
        ("may third", "may 3"),
        ("the third of may", "3 may"),
        ("one hundred and twenty three dollars", "$123"),
        ("two volt", "2 v"),
        ("second", "2nd"),
        ("", ""),
    ] {
        assert_eq!(n.inverse_normalize(spoken).unwrap(), written, "{spoken:?}");
    }
    eprintln!("examples took {:?}", start.elapsed());
}

#[test]
fn tagged_forms() {
    let n = normalizer();
    for (spoken, tagged) in [
        ("twenty three", r#"tokens { cardinal { integer: "23" } }"#),
        ("hello", r#"tokens { word { name: "hello" } }"#),
        (
            "two point o five",
            r#"tokens { decimal { integer_part: "2" fractional_part: "05" } }"#,
        ),
        (
            "three dollars",
            r#"tokens { money { integer_part: "3" currency: "$" } }"#,
        ),
        (
            "the third of may",
            r#"tokens { date { day: "3" month: "may" preserve_order: true } }"#,
        ),
        (
            "two volt",
            r#"tokens { measure { cardinal { integer: "2" } units: "v" } }"#,
        ),
        ("second", r#"tokens { ordinal { integer: "2" } }"#),
        ("doctor", r#"tokens { whitelist { name: "Dr." } }"#),
    ] {
        assert_eq!(n.classify(spoken).unwrap(), tagged, "{spoken:?}");
    }
}

#[test]
fn sentences() {
    let n = normalizer();
    for (spoken, written) in [
        ("i paid three dollars on may third", "i paid $3 on may 3"),
        ("doctor smith is twenty three", "Dr. smith is 23"),
        ("it weighs two point five kilograms", "it weighs 2.5 kg"),
        ("  hello   world  ", "hello world"),
        ("the fifth of june and the sixth", "5 june and the 6th"),
    ] {
        assert_eq!(n.inverse_normalize(spoken).unwrap(), written, "{spoken:?}");
    }
}

#[test]
fn verbalize_needs_currency_first() {
    let n = normalizer();
    assert_eq!(
        n.verbalize(r#"tokens { money { currency: "$" integer_part: "3" } }"#)
            .unwrap(),
        "$3"
    );
    assert!(matches!(
        n.verbalize(r#"tokens { money { integer_part: "3" currency: "$" } }"#),
        Err(ItnError::Fst(wfst::FstError::NoPath))
    ));
    assert_eq!(
        n.verbalize(r#"tokens { word { name: "hi" } }"#).unwrap(),
        "hi"
    );
}

#[test]
fn first_reordering_is_classify_output() {
    let n = normalizer();
    for spoken in [
        "three dollars",
        "may third",
        "twenty three and fourth",
        "two volt",
    ] {
        let tagged = n.classify(spoken).unwrap();
        let first = itn::generate_reorderings(&parse(&tagged).unwrap())
            .next()
            .unwrap();
        assert_eq!(first, tagged);
        assert_eq!(serialize(&parse(&tagged).unwrap()), tagged);
    }
}

#[test]
fn plain_words_are_identity() {
    let n = normalizer();
    for spoken in [
        "hello",
        "the cat sat on the mat",
        "zebra",
        "and",
        "hundred",
        "point",
    ] {
        assert_eq!(n.inverse_normalize(spoken).unwrap(), spoken);
    }
}

#[test]
fn rejects_nul() {
    assert!(matches!(
        normalizer().classify("a\0b"),
        Err(ItnError::InvalidInput(_))
    ));
}

#[test]
fn batch_matches_single() {
    let n = normalizer();
    let lines = [
        "twenty three",
        "three dollars",
        "hello",
        "",
        "the third of may",
    ];
    let batch: Vec<_> = n
        .normalize_batch(&lines)
        .into_iter()
        .map(Result::unwrap)
        .collect();
    let seq: Vec<_> = n
        .normalize_batch_sequential(&lines)
        .into_iter()
        .map(Result::unwrap)
        .collect();
    assert_eq!(batch, seq);
    assert_eq!(batch, ["23", "$3", "hello", "", "3 may"]);
}

#[test]
fn whitelist_beats_word_for_every_entry() {
    let n = normalizer();
    let rows = itn::DataDir::bundled()
        .rows(itn::DataDir::WHITELIST)
        .unwrap();
    assert!(!rows.is_empty());
    for (spoken, written) in rows {
        let tokens = parse(&n.classify(&spoken).unwrap()).unwrap();
        assert_eq!(tokens.len(), 1, "{spoken}");
        assert_eq!(tokens[0].class_name, "whitelist", "{spoken}");
        assert_eq!(n.inverse_normalize(&spoken).unwrap(), written);
    }
}

#[test]
fn archive_round_trip() {
    let n = normalizer();
    let dir = tempfile::tempdir().unwrap();
    let (a, b) = (dir.path().join("a.far"), dir.path().join("b.far"));
    n.save_archive(&a).unwrap();
    n.save_archive(&b).unwrap();
    assert_eq!(std::fs::read(&a).unwrap(), std::fs::read(&b).unwrap());
    let loaded = Normalizer::load_archive(&a).unwrap();
    for spoken in [
        "twenty three",
        "three dollars",
        "the third of may",
        "doctor who",
        "second",
    ] {
        assert_eq!(
            loaded.inverse_normalize(spoken).unwrap(),
            n.inverse_normalize(spoken).unwrap()
        );
    }
    let missing = wfst::Archive::new();
    assert!(matches!(
        Normalizer::from_archive(&missing),
        Err(ItnError::MissingGrammar(_))
    ));
}

proptest::proptest! {
    #![proptest_config(proptest::prelude::ProptestConfig::with_cases(64))]
    #[test]
    fn never_fails_on_lowercase_words(words in proptest::collection::vec("[a-z]{1,8}", 0..6)) {
        let text = words.join(" ");
        let n = normalizer();
        let first = n.inverse_normalize(&text).unwrap();
        proptest::prop_assert_eq!(n.inverse_normalize(&text).unwrap(), first);
    }
}
