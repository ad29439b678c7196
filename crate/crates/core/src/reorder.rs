//! Field-order candidates for the verbalizer.
//!
//! The classifier emits fields in spoken order, but a verbalizer may expect
//! them in written order (money reads "three dollars" and writes "$3").
//! [`generate_reorderings`] enumerates serializations with each token's
//! fields permuted, original order first, until one verbalizes.

use crate::token::Token;

/// Upper bound on the number of serializations yielded.
pub const MAX_REORDERINGS: usize = 1000;

/// Lazily yields serializations of `tokens` under every combination of
/// per-token field orders.
///
/// A token with `preserve_order` contributes only its original order; any
/// other token contributes all permutations of its fields in lexicographic
/// order of their Lehmer codes, so the identity permutation comes first.
/// Combinations are enumerated like an odometer whose most significant digit
/// is the first token. The sequence stops after [`MAX_REORDERINGS`] items.
/// An empty token list yields a single empty string.
pub fn generate_reorderings(tokens: &[Token]) -> Reorderings<'_> {
    let counts = tokens
        .iter()
        .map(|t| {
            if t.preserve_order {
                1
            } else {
                saturating_factorial(t.fields.len())
            }
        })
        .collect::<Vec<_>>();
    Reorderings {
        tokens,
        indices: vec![0; tokens.len()],
        counts,
        emitted: 0,
        done: false,
    }
}

pub struct Reorderings<'a> {
    tokens: &'a [Token],
    /// Current permutation index per token.
    indices: Vec<u64>,
    counts: Vec<u64>,
    emitted: usize,
    done: bool,
}

impl Iterator for Reorderings<'_> {
    type Item = String;

    fn next(&mut self) -> Option<String> {
        if self.done || self.emitted >= MAX_REORDERINGS {
            return None;
        }
        let mut out = String::new();
        for (i, (token, &index)) in self.tokens.iter().zip(&self.indices).enumerate() {
            if i > 0 {
                out.push(' ');
            }
            token.write_ordered(&nth_permutation(token.fields.len(), index), &mut out);
        }
        self.emitted += 1;
        self.advance();
        Some(out)
    }
}

impl Reorderings<'_> {
    fn advance(&mut self) {
        for i in (0..self.indices.len()).rev() {
            self.indices[i] += 1;
            if self.indices[i] < self.counts[i] {
                return;
            }
            self.indices[i] = 0;
        }
        self.done = true;
    }
}

fn saturating_factorial(n: usize) -> u64 {
    (2..=n as u64).fold(1u64, |acc, k| acc.saturating_mul(k))
}

/// The `index`-th permutation of `0..n` in lexicographic order.
pub fn nth_permutation(n: usize, mut index: u64) -> Vec<usize> {
    let mut pool: Vec<usize> = (0..n).collect();
    let mut out = Vec::with_capacity(n);
    for remaining in (1..=n).rev() {
        let block = saturating_factorial(remaining - 1);
        let digit = (index / block) as usize;
        index %= block;
        out.push(pool.remove(digit));
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::token::{parse, serialize, Field};

    fn token(class: &str, n: usize, preserve: bool) -> Token {
        let fields = (0..n)
            .map(|i| Field::text(&format!("f{i}"), &i.to_string()))
            .collect();
        Token {
            class_name: class.into(),
            fields,
            preserve_order: preserve,
        }
    }

    #[test]
    fn permutations_in_lexicographic_order() {
        let all: Vec<_> = (0..6).map(|k| nth_permutation(3, k)).collect();
        assert_eq!(
            all,
            vec![
                vec![0, 1, 2],
                vec![0, 2, 1],
                vec![1, 0, 2],
                vec![1, 2, 0],
                vec![2, 0, 1],
                vec![2, 1, 0]
            ]
        );
        assert_eq!(nth_permutation(0, 0), Vec::<usize>::new());
    }

    #[test]
    fn money_yields_both_orders() {
        let tokens = parse(r#"tokens { money { integer_part: "3" currency: "$" } }"#).unwrap();
        let all: Vec<_> = generate_reorderings(&tokens).collect();
        assert_eq!(
            all,
            vec![
                r#"tokens { money { integer_part: "3" currency: "$" } }"#,
                r#"tokens { money { currency: "$" integer_part: "3" } }"#,
            ]
        );
    }

    #[test]
    fn preserve_order_yields_one() {
        let tokens =
            parse(r#"tokens { date { day: "3" month: "may" preserve_order: true } }"#).unwrap();
        let all: Vec<_> = generate_reorderings(&tokens).collect();
        assert_eq!(all, vec![serialize(&tokens)]);
    }

    #[test]
    fn empty_yields_single_empty_string() {
        assert_eq!(
            generate_reorderings(&[]).collect::<Vec<_>>(),
            vec![String::new()]
        );
    }

    #[test]
    fn cross_product_first_token_most_significant() {
        let tokens = vec![token("a", 2, false), token("b", 3, false)];
        let all: Vec<_> = generate_reorderings(&tokens).collect();
        assert_eq!(all.len(), 12);
        assert_eq!(all[0], serialize(&tokens));
        let mut expected = Vec::new();
        for i in 0..2 {
            for j in 0..6 {
                let mut s = String::new();
                tokens[0].write_ordered(&nth_permutation(2, i), &mut s);
                s.push(' ');
                tokens[1].write_ordered(&nth_permutation(3, j), &mut s);
                expected.push(s);
            }
        }
        assert_eq!(all, expected);
    }

    #[test]
    fn capped_at_limit() {
        let tokens = vec![token("a", 7, false)];
        assert_eq!(generate_reorderings(&tokens).count(), MAX_REORDERINGS);
        let tokens = vec![token("a", 25, false), token("b", 25, false)];
        let mut it = generate_reorderings(&tokens);
        assert_eq!(it.next().unwrap(), serialize(&tokens));
        assert_eq!(it.count(), MAX_REORDERINGS - 1);
    }
}
