//! Independent reference implementations used as test oracles.

#![allow(dead_code)]

const ONES: [&str; 20] = [
    "zero",
    "one",
    "two",
    "three",
    "four",
    "five",
    "six",
    "seven",
    "eight",
    "nine",
    "ten",
    "eleven",
    "twelve",
    "thirteen",
    "fourteen",
    "fifteen",
    "sixteen",
    "seventeen",
    "eighteen",
    "nineteen",
];
const TENS: [&str; 10] = [
    "", "", "twenty", "thirty", "forty", "fifty", "sixty", "seventy", "eighty", "ninety",
];

fn below_hundred(n: u64) -> String {
    match n {
        0..=19 => ONES[n as usize].to_string(),
        _ if n.is_multiple_of(10) => TENS[(n / 10) as usize].to_string(),
        _ => format!("{} {}", TENS[(n / 10) as usize], ONES[(n % 10) as usize]),
    }
}

fn below_thousand(n: u64, with_and: bool) -> String {
    let (h, rest) = (n / 100, n % 100);
    match (h, rest) {
        (0, _) => below_hundred(rest),
        (_, 0) => format!("{} hundred", ONES[h as usize]),
        _ if with_and => format!("{} hundred and {}", ONES[h as usize], below_hundred(rest)),
        _ => format!("{} hundred {}", ONES[h as usize], below_hundred(rest)),
    }
}

/// English words for `n`, e.g. 1234 → "one thousand two hundred thirty four".
/// With `with_and`, hundreds are followed by "and" ("two hundred and thirty
/// four").
pub fn number_to_words(n: u64, with_and: bool) -> String {
    if n == 0 {
        return "zero".into();
    }
    let mut parts = Vec::new();
    let mut rest = n;
    for (scale, word) in [
        (1_000_000_000, "billion"),
        (1_000_000, "million"),
        (1_000, "thousand"),
    ] {
        let chunk = rest / scale;
        rest %= scale;
        if chunk > 0 {
            parts.push(format!("{} {word}", below_thousand(chunk, with_and)));
        }
    }
    if rest > 0 {
        parts.push(below_thousand(rest, with_and));
    }
    parts.join(" ")
}

/// English ordinal words for `n > 0`, e.g. 21 → "twenty first".
pub fn ordinal_words(n: u64) -> String {
    let words = number_to_words(n, false);
    let (head, last) = match words.rsplit_once(' ') {
        Some((h, l)) => (format!("{h} "), l.to_string()),
        None => (String::new(), words.clone()),
    };
    let last = match last.as_str() {
        "one" => "first".to_string(),
        "two" => "second".to_string(),
        "three" => "third".to_string(),
        "five" => "fifth".to_string(),
        "eight" => "eighth".to_string(),
        "nine" => "ninth".to_string(),
        "twelve" => "twelfth".to_string(),
        w if w.ends_with('y') => format!("{}ieth", &w[..w.len() - 1]),
        w => format!("{w}th"),
    };
    format!("{head}{last}")
}

/// English ordinal suffix for `n`: 1st, 2nd, 3rd, 11th, 21st, ...
pub fn ordinal_suffix(n: u64) -> &'static str {
    match (n % 10, n % 100) {
        (_, 11..=13) => "th",
        (1, _) => "st",
        (2, _) => "nd",
        (3, _) => "rd",
        _ => "th",
    }
}

#[test]
fn oracle_self_check() {
    assert_eq!(number_to_words(0, false), "zero");
    assert_eq!(number_to_words(115, true), "one hundred and fifteen");
    assert_eq!(number_to_words(2005, false), "two thousand five");
    assert_eq!(number_to_words(1_000_000, false), "one million");
    assert_eq!(ordinal_words(21), "twenty first");
    assert_eq!(ordinal_words(40), "fortieth");
    assert_eq!(ordinal_words(112), "one hundred twelfth");
    assert_eq!(ordinal_suffix(112), "th");
    assert_eq!(ordinal_suffix(101), "st");
}
