use std::collections::VecDeque;

use rustc_hash::FxHashMap;

use crate::error::{FstError, Result};
use crate::fst::{Arc, Fst, FstBuilder, Label, StateId};
use crate::optimize::{arc_sort, connect};
use crate::shortest_path::{best_path, Graph};
use crate::weight::TropicalWeight;

/// Transduces `text` with `grammar`: builds the linear acceptor of the
/// input, composes it with the grammar and reads the output labels of the
/// shortest path.
///
/// Each call preprocesses the grammar; use a [`Rewriter`] to apply one
/// grammar to many inputs.
pub fn rewrite(text: &str, grammar: &Fst) -> Result<String> {
    Rewriter::new(grammar.clone()).rewrite(text)
}

/// 256-bit set of input bytes.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
struct ByteSet([u64; 4]);

impl ByteSet {
    fn insert(&mut self, b: u8) {
        self.0[(b >> 6) as usize] |= 1 << (b & 63);
    }

    fn contains(&self, b: u8) -> bool {
        self.0[(b >> 6) as usize] & (1 << (b & 63)) != 0
    }

    /// Adds `other` to `self`; true if anything changed.
    fn union_with(&mut self, other: &ByteSet) -> bool {
        let mut changed = false;
        for (x, y) in self.0.iter_mut().zip(other.0) {
            changed |= *x | y != *x;
            *x |= y;
        }
        changed
    }
}

/// What a grammar state can do next without consuming input: which bytes it
/// can read after some input-epsilon moves, and whether it can accept.
#[derive(Clone, Copy, Debug, Default)]
struct Lookahead {
    first: ByteSet,
    accepts: bool,
}

/// A grammar prepared for repeated string rewriting.
///
/// Composing a string with a grammar directly expands every input-epsilon
/// move of the grammar, including the many that lead to states unable to
/// read the next input byte. The rewriter precomputes, for each grammar
/// state, the bytes it can read next and skips such moves. The trimmed
/// lattice is identical to `connect(compose(accept(text), grammar))`.
#[derive(Clone, Debug)]
pub struct Rewriter {
    grammar: Fst,
    lookahead: Vec<Lookahead>,
}

impl Rewriter {
    pub fn new(grammar: Fst) -> Self {
        let grammar = if grammar.is_ilabel_sorted() {
            grammar
        } else {
            arc_sort(&grammar)
        };
        let lookahead = compute_lookahead(&grammar);
        Rewriter { grammar, lookahead }
    }

    pub fn grammar(&self) -> &Fst {
        &self.grammar
    }

    fn viable(&self, state: StateId, next: Option<&u8>) -> bool {
        let la = &self.lookahead[state];
        match next {
            Some(&b) => la.first.contains(b),
            None => la.accepts,
        }
    }

    /// Expands the product of the linear acceptor of `text` with the
    /// grammar, breadth first. State ids follow discovery order and each
    /// state's arcs are stored contiguously.
    fn expand(&self, text: &[u8]) -> Option<Expansion> {
        let start = self.grammar.start()?;
        if !self.viable(start, text.first()) {
            return None;
        }
        let mut ex = Expansion::default();
        let mut pairs: Vec<(usize, StateId)> = vec![(0, start)];
        let mut ids: FxHashMap<(usize, StateId), StateId> = FxHashMap::default();
        ids.insert((0, start), 0);
        let mut lookup = |pair: (usize, StateId), pairs: &mut Vec<_>| {
            *ids.entry(pair).or_insert_with(|| {
                pairs.push(pair);
                pairs.len() - 1
            })
        };

        // Same expansion order as `compose`: input-consuming arcs first,
        // then input-epsilon arcs.
        let mut id = 0;
        while id < pairs.len() {
            let (pos, q) = pairs[id];
            ex.offsets.push(ex.arcs.len());
            ex.finals.push(if pos == text.len() {
                self.grammar.final_weight(q)
            } else {
                TropicalWeight::ZERO
            });
            if pos < text.len() {
                let label = Label::from_byte(text[pos]);
                for a in self.grammar.arcs_with_ilabel(q, label) {
                    if self.viable(a.nextstate, text.get(pos + 1)) {
                        let next = lookup((pos + 1, a.nextstate), &mut pairs);
                        ex.arcs.push(Arc::new(label, a.olabel, a.weight, next));
                    }
                }
            }
            for a in self.grammar.arcs_with_ilabel(q, Label::EPS) {
                if self.viable(a.nextstate, text.get(pos)) {
                    let next = lookup((pos, a.nextstate), &mut pairs);
                    ex.arcs.push(Arc::new(Label::EPS, a.olabel, a.weight, next));
                }
            }
            id += 1;
        }
        ex.offsets.push(ex.arcs.len());
        Some(ex)
    }

    /// The trimmed composition of the linear acceptor of `text` with the
    /// grammar.
    pub fn lattice(&self, text: &str) -> Fst {
        let Some(ex) = self.expand(text.as_bytes()) else {
            return Fst::empty();
        };
        let mut b = FstBuilder::new();
        for s in 0..ex.num_states() {
            b.add_state();
            b.set_final(s, ex.finals[s]);
            b.arcs_mut(s).extend_from_slice(Graph::arcs(&ex, s));
        }
        b.set_start(0);
        connect(&b.build())
    }

    /// Same result as running [`shortest_path`](crate::shortest_path) on
    /// [`Self::lattice`] and reading its output, without building the
    /// lattice as an [`Fst`].
    pub fn rewrite(&self, text: &str) -> Result<String> {
        let ex = self.expand(text.as_bytes()).ok_or(FstError::NoPath)?;
        let (path, _) = best_path(&ex, 0)?;
        let output: Vec<u8> = path.iter().filter_map(|a| a.olabel.byte()).collect();
        String::from_utf8(output).map_err(|_| FstError::InvalidUtf8)
    }
}

#[derive(Debug, Default)]
struct Expansion {
    arcs: Vec<Arc>,
    offsets: Vec<usize>,
    finals: Vec<TropicalWeight>,
}

impl Graph for Expansion {
    fn num_states(&self) -> usize {
        self.finals.len()
    }

    fn arcs(&self, state: StateId) -> &[Arc] {
        &self.arcs[self.offsets[state]..self.offsets[state + 1]]
    }

    fn final_weight(&self, state: StateId) -> TropicalWeight {
        self.finals[state]
    }
}

/// Least fixed point of
/// `first(q) = {ilabels of q's non-epsilon arcs} ∪ first(t)` and
/// `accepts(q) = final(q) ∨ accepts(t)` over input-epsilon arcs `q → t`.
fn compute_lookahead(fst: &Fst) -> Vec<Lookahead> {
    let n = fst.num_states();
    let mut la: Vec<Lookahead> = vec![Lookahead::default(); n];
    let mut eps_preds: Vec<Vec<StateId>> = vec![Vec::new(); n];
    for s in fst.state_ids() {
        la[s].accepts = fst.is_final(s);
        for a in fst.arcs(s) {
            match a.ilabel.byte() {
                Some(b) => la[s].first.insert(b),
                None => eps_preds[a.nextstate].push(s),
            }
        }
    }
    let mut queue: VecDeque<StateId> = fst.state_ids().collect();
    let mut queued = vec![true; n];
    while let Some(t) = queue.pop_front() {
        queued[t] = false;
        let Lookahead { first, accepts } = la[t];
        for &p in &eps_preds[t] {
            let mut changed = la[p].first.union_with(&first);
            if accepts && !la[p].accepts {
                la[p].accepts = true;
                changed = true;
            }
            if changed && !queued[p] {
                queued[p] = true;
                queue.push_back(p);
            }
        }
    }
    la
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::compose::compose;
    use crate::construct::{accept, closure, cross, union, Closure};
    use proptest::prelude::*;

    #[test]
    fn identity_and_failure() {
        assert_eq!(rewrite("x", &accept("x")).unwrap(), "x");
        assert!(matches!(rewrite("q", &accept("x")), Err(FstError::NoPath)));
    }

    #[test]
    fn lookahead_follows_epsilon_chains() {
        // start -ε:a-> 1 -ε:b-> 2 -x:x-> 3(final)
        let g = crate::construct::concat(&cross("", "ab", 0.0), &accept("x"));
        let la = compute_lookahead(&g);
        let s = g.start().unwrap();
        assert!(la[s].first.contains(b'x'));
        assert!(!la[s].first.contains(b'y'));
        assert!(!la[s].accepts);
        assert_eq!(Rewriter::new(g).rewrite("x").unwrap(), "abx");
    }

    #[test]
    fn lattice_matches_composition() {
        let g = closure(
            &union(&cross("a", "xx", 1.0), &cross("", "y", 0.5)),
            Closure::Star,
        );
        let g = union(&g, &cross("ab", "", 2.0));
        let r = Rewriter::new(g.clone());
        for text in ["", "a", "aa", "ab", "b"] {
            let expected = compose(&accept(text), r.grammar());
            let got = r.lattice(text);
            assert_eq!(format!("{got:?}"), format!("{expected:?}"), "{text:?}");
        }
    }

    proptest! {
        #[test]
        fn acceptor_rewrites_to_itself(text in "[^\u{0}]{0,24}") {
            prop_assert_eq!(rewrite(&text, &accept(&text)).unwrap(), text);
        }
    }
}
